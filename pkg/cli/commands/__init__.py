"""
CLI subcommands package.
"""
