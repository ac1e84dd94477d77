"""
Test suite for zps-codes.
"""
