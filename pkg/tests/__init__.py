"""
Test framework initialization module
Provides test infrastructure and common utilities
"""