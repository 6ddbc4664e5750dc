"""Exact Gysin pushforwards for flag bundles and Kempf-Laksov bundles."""

__version__ = "1.0.0"
