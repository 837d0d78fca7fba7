"""Certificates: tightness, angle structures, norms and the compatibility table."""
