"""
Test suite for DSA Learning Platform.
"""

