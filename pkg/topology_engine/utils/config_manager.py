"""Configuration management utilities for the topology engine."""

import os
from typing import Any, Dict

from dotenv import load_dotenv

from topology_engine.tools.certify import CertifyTool, CertifyToolConfig
from topology_engine.tools.convert import ConvertTool, ConvertToolConfig
from topology_engine.tools.generate import GenerateTool, GenerateToolConfig
from topology_engine.tools.invariants import InvariantsTool, InvariantsToolConfig
from topology_engine.tools.normal import NormalTool, NormalToolConfig
from topology_engine.tools.scan import ScanTool, ScanToolConfig


class ConfigManager:
    """Manages configuration loading and tool initialization."""

    @staticmethod
    def load_configuration() -> Dict[str, Any]:
        """Load configuration settings from environment variables and a ``.env`` file.

        Returns:
            Dictionary containing all configuration settings
        """
        load_dotenv()
        defaults = ConfigManager.get_default_config()
        config = {
            "max_enum_tets": int(os.getenv("TOPOLOGY_MAX_ENUM_TETS", defaults["max_enum_tets"])),
            "hilbert_budget": int(os.getenv("TOPOLOGY_HILBERT_BUDGET", defaults["hilbert_budget"])),
            "simplify_effort": int(os.getenv("TOPOLOGY_SIMPLIFY_EFFORT", defaults["simplify_effort"])),
            "seed": int(os.getenv("TOPOLOGY_SEED", defaults["seed"])),
            "scan_workers": int(os.getenv("TOPOLOGY_SCAN_WORKERS", defaults["scan_workers"])),
            "scan_item_seconds": float(os.getenv("TOPOLOGY_SCAN_ITEM_SECONDS", defaults["scan_item_seconds"])),
            "log_level": os.getenv("TOPOLOGY_LOG_LEVEL", defaults["log_level"]).upper(),
        }
        return config

    @staticmethod
    def initialize_tools(config: Dict[str, Any]) -> Dict[str, Any]:
        """Initialize all tools with their configurations.

        Args:
            config: Configuration dictionary from load_configuration()

        Returns:
            Dictionary containing initialized tool instances
        """
        return {
            "generate": GenerateTool(GenerateToolConfig()),
            "invariants": InvariantsTool(InvariantsToolConfig()),
            "normal": NormalTool(
                NormalToolConfig(max_tets=config["max_enum_tets"], hilbert_budget=config["hilbert_budget"])
            ),
            "certify": CertifyTool(CertifyToolConfig()),
            "scan": ScanTool(
                ScanToolConfig(workers=config["scan_workers"], item_seconds=config["scan_item_seconds"])
            ),
            "convert": ConvertTool(ConvertToolConfig(simplify_effort=config["simplify_effort"], seed=config["seed"])),
        }

    @staticmethod
    def get_default_config() -> Dict[str, Any]:
        """Get default configuration values.

        Returns:
            Dictionary with default configuration values
        """
        return {
            "max_enum_tets": 8,
            "hilbert_budget": 200_000,
            "simplify_effort": 200,
            "seed": 0,
            "scan_workers": 4,
            "scan_item_seconds": 60.0,
            "log_level": "WARNING",
        }
