from typing import Literal

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.normal.enumeration import EnumerationLimits, fundamental_surfaces, vertex_surfaces
from topology_engine.schemas.reports import EnumerationReport, SurfaceReport
from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.table_format import read_triangulation

COORDINATE_SYSTEMS = {"std": "standard", "quad": "quad"}


################
# INPUT SCHEMA #
################
class NormalToolInputSchema(BaseIOSchema):
    """
    Enumerates admissible normal surfaces of a triangulation: the vertex
    surfaces (extreme rays) or the fundamental surfaces (Hilbert basis),
    in standard or quadrilateral coordinates, optionally restricted to
    closed surfaces or surfaces meeting the boundary.
    """

    triangulation: str = Field(..., description="Iso signature or gluing-table text.")
    which: Literal["vertex", "fundamental"] = Field("vertex", description="Vertex or fundamental surfaces.")
    coords: Literal["std", "quad"] = Field("std", description="Coordinate system.")
    surface_filter: Literal["closed", "with-boundary", "all"] = Field("all", description="Surface filter.")
    allow_long: bool = Field(False, description="Lift the tetrahedron limit.")


#################
# OUTPUT SCHEMA #
#################
class NormalToolOutputSchema(BaseIOSchema):
    """
    Schema for the output of the NormalTool.
    """

    report: EnumerationReport = Field(..., description="The enumerated surfaces.")


#################
# CONFIGURATION #
#################
class NormalToolConfig(BaseToolConfig):
    """
    Configuration for the NormalTool.
    """

    max_tets: int = Field(8, description="Largest triangulation enumerated without allow_long.")
    hilbert_budget: int = Field(200_000, description="Step budget for the Hilbert basis search.")


#####################
# MAIN TOOL & LOGIC #
#####################
class NormalTool(BaseTool):
    """
    Tool for normal surface enumeration.

    Attributes:
        input_schema (NormalToolInputSchema): The schema for the input data.
        output_schema (NormalToolOutputSchema): The schema for the output data.
        max_tets (int): Tetrahedron limit.
        hilbert_budget (int): Hilbert basis step budget.
    """

    input_schema = NormalToolInputSchema
    output_schema = NormalToolOutputSchema

    def __init__(self, config: NormalToolConfig = NormalToolConfig()):
        super().__init__(config)
        self.max_tets = config.max_tets
        self.hilbert_budget = config.hilbert_budget

    def run(self, params: NormalToolInputSchema) -> NormalToolOutputSchema:
        t = read_triangulation(params.triangulation)
        limits = EnumerationLimits(self.max_tets, self.hilbert_budget, params.allow_long)
        system = COORDINATE_SYSTEMS[params.coords]
        enumerate_ = vertex_surfaces if params.which == "vertex" else fundamental_surfaces
        surfaces = enumerate_(t, system, params.surface_filter, limits)
        report = EnumerationReport(
            iso_signature=iso_signature(t),
            which=params.which,
            system=system,
            surface_filter=params.surface_filter,
            count=len(surfaces),
            surfaces=[SurfaceReport.from_vector(v) for v in surfaces],
        )
        return NormalToolOutputSchema(report=report)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    normal = NormalTool()
    result = normal.run(NormalToolInputSchema(triangulation="gLLMQbeefffehhqxhqq", surface_filter="closed"))
    print(result.report.count)
