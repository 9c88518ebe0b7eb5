"""FastICA Kit tests package."""
