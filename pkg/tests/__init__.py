"""
--- Friedberg ---
Tests.
"""
