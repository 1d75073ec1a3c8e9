"""
--- Friedberg ---
Command line interface.
"""
