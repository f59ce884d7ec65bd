"""
mustpreorder package: deciding the must-preorder for message-passing processes.
"""

__version__ = "0.1.0"
