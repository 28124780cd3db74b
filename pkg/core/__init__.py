"""
Core combinatorial types and search kernels.
"""
