"""
Vertex on-line Ramsey game: builders, painters, runner and exact minimax.
"""
