"""
views package: CSV and JSON-lines report emitters
"""
