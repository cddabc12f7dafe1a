"""
Exact homology and classification of quotients of odd spheres by linear
torus actions, computed from the column matroid of the weight matrix.
"""
