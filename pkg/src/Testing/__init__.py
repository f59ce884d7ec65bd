"""
Testing package: axiom checks, preorders and test synthesis.
"""
