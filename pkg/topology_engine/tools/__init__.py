"""Tools wrapping the engine, one per command family."""
