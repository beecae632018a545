"""
models package: report types, feed I/O, clustering, evaluation, synthetic corpora
"""
