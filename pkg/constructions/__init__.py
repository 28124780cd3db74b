"""
Explicit colorings, oracles and hypergraph constructions.
"""
