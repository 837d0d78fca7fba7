from typing import Literal

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.moves import simplify
from topology_engine.triangulation.table_format import format_gluing_table, read_triangulation


################
# INPUT SCHEMA #
################
class ConvertToolInputSchema(BaseIOSchema):
    """
    Converts a triangulation between gluing-table text and its iso signature.
    The input format is detected from the text.
    """

    text: str = Field(..., description="Iso signature or gluing-table text.")
    to: Literal["isosig", "table"] = Field(..., description="Target format.")
    simplify: bool = Field(False, description="Reduce the tetrahedron count with random moves first.")


#################
# OUTPUT SCHEMA #
#################
class ConvertToolOutputSchema(BaseIOSchema):
    """
    Schema for the output of the ConvertTool.
    """

    text: str = Field(..., description="The triangulation in the target format.")
    tet_count: int = Field(..., description="Number of tetrahedra.")


#################
# CONFIGURATION #
#################
class ConvertToolConfig(BaseToolConfig):
    """
    Configuration for the ConvertTool.
    """

    simplify_effort: int = Field(200, description="Random moves tried by the simplifier.")
    seed: int = Field(0, description="Seed of the simplifier.")


#####################
# MAIN TOOL & LOGIC #
#####################
class ConvertTool(BaseTool):
    """
    Tool for converting between triangulation formats.

    Attributes:
        input_schema (ConvertToolInputSchema): The schema for the input data.
        output_schema (ConvertToolOutputSchema): The schema for the output data.
        simplify_effort (int): Random moves tried by the simplifier.
        seed (int): Seed of the simplifier.
    """

    input_schema = ConvertToolInputSchema
    output_schema = ConvertToolOutputSchema

    def __init__(self, config: ConvertToolConfig = ConvertToolConfig()):
        super().__init__(config)
        self.simplify_effort = config.simplify_effort
        self.seed = config.seed

    def run(self, params: ConvertToolInputSchema) -> ConvertToolOutputSchema:
        t = read_triangulation(params.text)
        if params.simplify:
            t = simplify(t, self.simplify_effort, self.seed)
        text = iso_signature(t) if params.to == "isosig" else format_gluing_table(t).rstrip("\n")
        return ConvertToolOutputSchema(text=text, tet_count=t.tet_count)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    convert = ConvertTool()
    result = convert.run(ConvertToolInputSchema(text="gLLMQbeefffehhqxhqq", to="table"))
    print(result.text)
