"""Named triangulation families and Dehn fillings."""
