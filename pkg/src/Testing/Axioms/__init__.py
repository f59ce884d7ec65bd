"""
Axioms package for checking transition system axioms
"""
