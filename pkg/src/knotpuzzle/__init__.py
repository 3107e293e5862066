"""Decide or obstruct solvability of two-loop wire puzzles."""

__version__ = "0.1.0"
