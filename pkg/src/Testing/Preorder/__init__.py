"""
Preorder package: must testing and the acceptance-set preorder.
"""
