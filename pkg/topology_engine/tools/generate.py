from typing import Callable, Dict, Literal, Optional, Tuple

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.errors import InvalidParameter
from topology_engine.families.assembly import link_complement_n, t_kn, t_prime, t_prime_kn, u_cusped, u_kn
from topology_engine.families.layered import lst
from topology_engine.families.solid_tori import solid_torus_tm
from topology_engine.schemas.reports import TriangulationReport
from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.table_format import format_gluing_table
from topology_engine.triangulation.triangulation import Triangulation

Family = Literal["tkn", "tm", "lst", "ukn", "link-complement", "tprime", "tprime-kn", "u-cusped"]
OutputFormat = Literal["isosig", "table", "json"]

# Family name -> (parameter names, constructor).
FAMILIES: Dict[str, Tuple[Tuple[str, ...], Callable[..., Triangulation]]] = {
    "tkn": (("k", "n"), t_kn),
    "tm": (("m",), lambda m: solid_torus_tm(m).triangulation),
    "lst": (("j", "k"), lambda j, k: lst(j, k).triangulation),
    "ukn": (("k", "n"), u_kn),
    "link-complement": ((), lambda: link_complement_n().triangulation),
    "tprime": ((), lambda: t_prime().triangulation),
    "tprime-kn": (("k", "n"), t_prime_kn),
    "u-cusped": ((), u_cusped),
}


################
# INPUT SCHEMA #
################
class GenerateToolInputSchema(BaseIOSchema):
    """
    Builds one of the named triangulation families: T_{k,n}, the solid tori
    T_m, layered solid tori LST(j,k), U_{k,n}, the link complement N, T' and
    its fillings, and the cusped U. Parameters not used by the family are
    ignored.
    """

    family: Family = Field(..., description="Family name, e.g. 'tkn'.")
    k: Optional[int] = Field(None, description="Parameter k (tkn, ukn, tprime-kn, lst).")
    n: Optional[int] = Field(None, description="Parameter n (tkn, ukn, tprime-kn).")
    m: Optional[int] = Field(None, description="Parameter m (tm).")
    j: Optional[int] = Field(None, description="Parameter j (lst).")
    out: OutputFormat = Field("isosig", description="Text rendering: iso signature, gluing table or JSON report.")


#################
# OUTPUT SCHEMA #
#################
class GenerateToolOutputSchema(BaseIOSchema):
    """
    The generated triangulation as a report plus its requested text rendering.
    """

    report: TriangulationReport = Field(..., description="Structured description of the triangulation.")
    text: str = Field(..., description="Rendering in the requested output format.")


#################
# CONFIGURATION #
#################
class GenerateToolConfig(BaseToolConfig):
    """
    Configuration for the GenerateTool.
    """

    pass


#####################
# MAIN TOOL & LOGIC #
#####################
def build_family(family: str, **params: Optional[int]) -> Tuple[Triangulation, Dict[str, int]]:
    """Runs the constructor of ``family`` with the parameters it needs.

    Raises:
        InvalidParameter: unknown family or a required parameter is missing.
    """
    if family not in FAMILIES:
        raise InvalidParameter(f"Unknown family {family!r}; choose from {sorted(FAMILIES)}")
    names, constructor = FAMILIES[family]
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise InvalidParameter(f"Family {family!r} needs {', '.join('--' + m for m in missing)}")
    used = {name: params[name] for name in names}
    return constructor(**used), used


class GenerateTool(BaseTool):
    """
    Tool for building the named triangulation families.

    Attributes:
        input_schema (GenerateToolInputSchema): The schema for the input data.
        output_schema (GenerateToolOutputSchema): The schema for the output data.
    """

    input_schema = GenerateToolInputSchema
    output_schema = GenerateToolOutputSchema

    def __init__(self, config: GenerateToolConfig = GenerateToolConfig()):
        super().__init__(config)

    def run(self, params: GenerateToolInputSchema) -> GenerateToolOutputSchema:
        t, used = build_family(params.family, k=params.k, n=params.n, m=params.m, j=params.j)
        report = TriangulationReport(
            family=params.family,
            parameters=used,
            tet_count=t.tet_count,
            iso_signature=iso_signature(t),
            gluing_table=format_gluing_table(t),
        )
        if params.out == "isosig":
            text = report.iso_signature
        elif params.out == "table":
            text = report.gluing_table.rstrip("\n")
        else:
            text = report.model_dump_json(indent=2)
        return GenerateToolOutputSchema(report=report, text=text)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    generator = GenerateTool()
    result = generator.run(GenerateToolInputSchema(family="tkn", k=3, n=3))
    print(result.text)  # Expected output: gLLMQbeefffehhqxhqq
