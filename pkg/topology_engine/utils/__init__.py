"""Utilities package for the topology engine."""
