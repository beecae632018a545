"""
tests package
"""
