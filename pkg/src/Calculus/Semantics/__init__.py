"""
Semantics package: transition systems and graph exploration.
"""
