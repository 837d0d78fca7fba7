from typing import Literal, Optional, Union

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.certify.angles import find_angle_structure
from topology_engine.certify.norms import NORM_LIMITS, norm_report
from topology_engine.certify.table3 import compat_table_check
from topology_engine.certify.tightness import tightness_certificate
from topology_engine.errors import InvalidParameter
from topology_engine.normal.enumeration import EnumerationLimits
from topology_engine.schemas.reports import AngleReport, CertificateReport, NormReportModel, Table3Report
from topology_engine.tools.generate import build_family
from topology_engine.triangulation.isosig import iso_signature
from topology_engine.triangulation.table_format import read_triangulation
from topology_engine.triangulation.triangulation import Triangulation


################
# INPUT SCHEMA #
################
class CertifyToolInputSchema(BaseIOSchema):
    """
    Runs one certification check. 'tightness' certifies that the canonical
    mod-2 representatives of an ideal triangulation meet the sum-of-norms
    bound; 'angles' searches for a strict angle structure; 'norms' computes
    the norms of the three mod-2 classes of M_{k,n}; 'table3' re-derives the
    compatibility table rows from their summands.
    """

    check: Literal["tightness", "angles", "norms", "table3"] = Field(..., description="The check to run.")
    triangulation: Optional[str] = Field(None, description="Iso signature or gluing-table text.")
    family: Optional[str] = Field(None, description="Family to build instead of reading a triangulation.")
    k: Optional[int] = Field(None, description="Parameter k.")
    n: Optional[int] = Field(None, description="Parameter n.")


#################
# OUTPUT SCHEMA #
#################
class CertifyToolOutputSchema(BaseIOSchema):
    """
    The report of the check and whether it succeeded.
    """

    verdict: bool = Field(..., description="True when the check holds.")
    report: Union[CertificateReport, AngleReport, NormReportModel, Table3Report] = Field(
        ..., description="The structured result."
    )


#################
# CONFIGURATION #
#################
class CertifyToolConfig(BaseToolConfig):
    """
    Configuration for the CertifyTool.
    """

    norm_max_tets: int = Field(
        NORM_LIMITS.max_tets, description="Largest layered solid torus enumerated by the norm pipeline."
    )


#####################
# MAIN TOOL & LOGIC #
#####################
class CertifyTool(BaseTool):
    """
    Tool for tightness certificates, angle structures, norms and the compatibility table.

    Attributes:
        input_schema (CertifyToolInputSchema): The schema for the input data.
        output_schema (CertifyToolOutputSchema): The schema for the output data.
        norm_limits (EnumerationLimits): Limits used when extending surfaces into layered solid tori.
    """

    input_schema = CertifyToolInputSchema
    output_schema = CertifyToolOutputSchema

    def __init__(self, config: CertifyToolConfig = CertifyToolConfig()):
        super().__init__(config)
        self.norm_limits = EnumerationLimits(max_tets=config.norm_max_tets)

    def _triangulation(self, params: CertifyToolInputSchema) -> Triangulation:
        if params.triangulation is not None:
            return read_triangulation(params.triangulation)
        if params.family is not None:
            t, _ = build_family(params.family, k=params.k, n=params.n)
            return t
        raise InvalidParameter(f"'{params.check}' needs a triangulation or a family")

    def run(self, params: CertifyToolInputSchema) -> CertifyToolOutputSchema:
        if params.check == "tightness":
            report = CertificateReport.from_certificate(tightness_certificate(self._triangulation(params)))
            return CertifyToolOutputSchema(verdict=report.verdict, report=report)
        if params.check == "angles":
            t = self._triangulation(params)
            report = AngleReport.from_search(iso_signature(t), find_angle_structure(t))
            return CertifyToolOutputSchema(verdict=report.feasible, report=report)
        if params.check == "norms":
            if params.k is None or params.n is None:
                raise InvalidParameter("'norms' needs k and n")
            report = NormReportModel.from_report(norm_report(params.k, params.n, self.norm_limits))
            return CertifyToolOutputSchema(verdict=None not in report.norms, report=report)
        report = Table3Report.from_check(compat_table_check())
        return CertifyToolOutputSchema(verdict=report.passed, report=report)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    certify = CertifyTool()
    result = certify.run(CertifyToolInputSchema(check="tightness", family="tkn", k=5, n=7))
    print(result.verdict, result.report.negative_euler_sum)  # Expected output: True 12
