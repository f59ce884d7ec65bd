"""
Utility types for the Testing package.
"""
