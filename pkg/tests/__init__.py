"""
Test suite for the integra package.
"""
