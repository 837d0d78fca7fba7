"""Report schemas."""
