"""
utils package
"""
