from typing import Literal

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.homology.chains import h2_z2_basis, homology_h1
from topology_engine.schemas.reports import InvariantsReport, LinkSummary
from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.orientation import is_orientable
from topology_engine.triangulation.skeleton import skeleton
from topology_engine.triangulation.table_format import read_triangulation


################
# INPUT SCHEMA #
################
class InvariantsToolInputSchema(BaseIOSchema):
    """
    Computes combinatorial and homological invariants of a triangulation
    given as an iso signature or gluing-table text: first homology with
    integer and mod-2 coefficients, the rank of mod-2 second homology, edge
    degrees, vertex links and boundary components.
    """

    triangulation: str = Field(..., description="Iso signature or gluing-table text.")
    ideal_policy: Literal["truncate", "keep"] = Field(
        "truncate", description="Truncate ideal vertices, or use the pseudo-manifold's own cells."
    )


#################
# OUTPUT SCHEMA #
#################
class InvariantsToolOutputSchema(BaseIOSchema):
    """
    Schema for the output of the InvariantsTool.
    """

    report: InvariantsReport = Field(..., description="Invariants of the triangulation.")


#################
# CONFIGURATION #
#################
class InvariantsToolConfig(BaseToolConfig):
    """
    Configuration for the InvariantsTool.
    """

    pass


#####################
# MAIN TOOL & LOGIC #
#####################
class InvariantsTool(BaseTool):
    """
    Tool for computing homology, links and degrees of a triangulation.

    Attributes:
        input_schema (InvariantsToolInputSchema): The schema for the input data.
        output_schema (InvariantsToolOutputSchema): The schema for the output data.
    """

    input_schema = InvariantsToolInputSchema
    output_schema = InvariantsToolOutputSchema

    def __init__(self, config: InvariantsToolConfig = InvariantsToolConfig()):
        super().__init__(config)

    def run(self, params: InvariantsToolInputSchema) -> InvariantsToolOutputSchema:
        t = read_triangulation(params.triangulation)
        sk = skeleton(t)
        _, basis = h2_z2_basis(t)
        report = InvariantsReport(
            iso_signature=iso_signature(t),
            tet_count=t.tet_count,
            orientable=is_orientable(t),
            h1=str(homology_h1(t, "Z", params.ideal_policy)),
            h1_z2=str(homology_h1(t, "Z2", params.ideal_policy)),
            h2_z2_rank=len(basis),
            edge_degrees=sk.degrees(),
            vertices=[
                LinkSummary(vertex=v.index, kind=v.link.kind, euler=v.link.euler, orientable=v.link.orientable)
                for v in sk.vertices
            ],
            boundary_components=len(sk.boundary),
        )
        return InvariantsToolOutputSchema(report=report)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    invariants = InvariantsTool()
    result = invariants.run(InvariantsToolInputSchema(triangulation="gLLMQbeefffehhqxhqq"))
    print(result.report.h1)  # Expected output: Z + Z_2 + Z_4
