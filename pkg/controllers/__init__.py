"""Controllers - Front ends built on the topology engine tools."""
