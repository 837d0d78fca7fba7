"""Tool management utilities for the topology engine."""

from typing import Any, Dict, Union

from atomic_agents.agents.base_agent import BaseIOSchema

from topology_engine.tools.certify import CertifyToolInputSchema, CertifyToolOutputSchema
from topology_engine.tools.convert import ConvertToolInputSchema, ConvertToolOutputSchema
from topology_engine.tools.generate import GenerateToolInputSchema, GenerateToolOutputSchema
from topology_engine.tools.invariants import InvariantsToolInputSchema, InvariantsToolOutputSchema
from topology_engine.tools.normal import NormalToolInputSchema, NormalToolOutputSchema
from topology_engine.tools.scan import ScanToolInputSchema, ScanToolOutputSchema

# Tool name -> input schema it accepts.
TOOL_INPUTS = {
    "generate": GenerateToolInputSchema,
    "invariants": InvariantsToolInputSchema,
    "normal": NormalToolInputSchema,
    "certify": CertifyToolInputSchema,
    "scan": ScanToolInputSchema,
    "convert": ConvertToolInputSchema,
}


class ToolManager:
    """Manages tool execution and provides tool-related utilities."""

    def __init__(self, tools_dict: Dict[str, Any]):
        """Initialize with a dictionary of tool instances.

        Args:
            tools_dict: Dictionary with keys like 'generate', 'certify', 'scan'
        """
        self.tools = tools_dict

    def execute_tool(self, tool: str, params: BaseIOSchema) -> Union[
        GenerateToolOutputSchema,
        InvariantsToolOutputSchema,
        NormalToolOutputSchema,
        CertifyToolOutputSchema,
        ScanToolOutputSchema,
        ConvertToolOutputSchema,
    ]:
        """Execute the named tool.

        Args:
            tool: Name of the tool
            params: Input schema instance for that tool

        Returns:
            The output from the executed tool

        Raises:
            ValueError: If tool name is unknown or parameters are invalid
        """
        if tool not in TOOL_INPUTS:
            raise ValueError(f"Unknown tool: {tool}")
        if not isinstance(params, TOOL_INPUTS[tool]):
            raise ValueError(f"Invalid parameters for {tool} tool: {params}")
        return self.get_tool_instance(tool).run(params)

    def get_available_tools(self) -> list[str]:
        """Get list of available tool names.

        Returns:
            List of tool names that can be used
        """
        return list(self.tools.keys())

    def get_tool_instance(self, tool_name: str) -> Any:
        """Get a specific tool instance by name.

        Args:
            tool_name: Name of the tool to retrieve

        Returns:
            The tool instance

        Raises:
            KeyError: If tool name is not found
        """
        if tool_name not in self.tools:
            raise KeyError(f"Tool '{tool_name}' not found. Available tools: {list(self.tools.keys())}")
        return self.tools[tool_name]
