"""Integer and mod-2 homology of triangulations."""
