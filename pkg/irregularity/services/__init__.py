"""
Services Package
Operations on graphs: invariants, incremental updates, transformations,
constructions, enumeration and verification campaigns
"""
