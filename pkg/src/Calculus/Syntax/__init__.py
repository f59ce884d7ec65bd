"""
Syntax package: process terms, parser and structural congruence.
"""
