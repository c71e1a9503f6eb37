"""Keeps the tests directory importable so suites can share the oracle
and fixture modules."""
