"""Normal surface coordinates, enumeration and analysis."""
