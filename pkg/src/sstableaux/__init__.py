"""Semistandard Young tableaux of given shape and weight."""
