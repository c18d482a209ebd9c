"""
Test package for the Atom Decomposer application.

Run with: python -m unittest discover -s tests
"""
