"""Nil clean graphs and their invariants."""
