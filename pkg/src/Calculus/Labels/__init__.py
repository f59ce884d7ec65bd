"""
Labels package for actions, duality and label abstractions
"""
