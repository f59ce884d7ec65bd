"""
Synthesis package for building distinguishing tests
"""
