"""
controllers package: one controller per command family
"""
