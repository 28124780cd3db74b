"""
Hypergraph Ramsey toolkit command-line package.
"""
