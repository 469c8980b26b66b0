"""Executable checks for the nil clean graph theorems."""
