"""
Greedy extraction of monochromatic sets and bound calculators.
"""
