"""Topology Engine - triangulations, normal surfaces and tightness certificates for 3-manifolds."""

__version__ = "0.1.0"

from .utils.config_manager import ConfigManager
from .utils.tool_manager import ToolManager

__all__ = [
    '__version__',
    'ConfigManager',
    'ToolManager'
]
