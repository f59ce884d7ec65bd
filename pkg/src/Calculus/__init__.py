"""
Calculus package: actions, process terms and their transition systems.
"""
