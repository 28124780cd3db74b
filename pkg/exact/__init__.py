"""
Exact combinatorial functions: closed forms, recursions and brute-force enumerations.
"""
