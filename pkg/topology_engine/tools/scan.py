import logging
import threading
import time
from concurrent.futures import Future, ThreadPoolExecutor, TimeoutError
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import Field

from atomic_agents.agents.base_agent import BaseIOSchema
from atomic_agents.lib.base.base_tool import BaseTool, BaseToolConfig

from topology_engine.certify.tightness import tightness_certificate
from topology_engine.errors import (
    FileUnreadable,
    MalformedSignature,
    RankTooSmall,
    TopologyEngineError,
    WrongVertexStructure,
)
from topology_engine.schemas.reports import ScanReport, ScanRow
from topology_engine.triangulation.isosig import decode_iso_signature

logger = logging.getLogger(__name__)


################
# INPUT SCHEMA #
################
class ScanToolInputSchema(BaseIOSchema):
    """
    Runs the tightness certificate over a newline-delimited list of iso
    signatures. Blank lines and lines starting with '#' are ignored;
    malformed signatures are recorded as decode failures.
    """

    path: str = Field(..., description="Path of the signature list.")


#################
# OUTPUT SCHEMA #
#################
class ScanToolOutputSchema(BaseIOSchema):
    """
    Schema for the output of the ScanTool.
    """

    report: ScanReport = Field(..., description="One row per signature, in input order, plus summary counts.")


#################
# CONFIGURATION #
#################
class ScanToolConfig(BaseToolConfig):
    """
    Configuration for the ScanTool.
    """

    workers: int = Field(4, description="Signatures certified concurrently.")
    item_seconds: float = Field(60.0, description="Time allowed for each signature.")


#####################
# MAIN TOOL & LOGIC #
#####################
def read_signature_lines(path: str) -> List[Tuple[int, str]]:
    """Numbered non-blank, non-comment lines of ``path``.

    Raises:
        FileUnreadable: the file cannot be read as text.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"Cannot read signature list {path}: {exc}") from exc
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _certify(lineno: int, text: str) -> ScanRow:
    try:
        t = decode_iso_signature(text)
    except MalformedSignature as exc:
        return ScanRow(line=lineno, text=text, status="decode-error", detail=str(exc))
    try:
        certificate = tightness_certificate(t)
    except (WrongVertexStructure, RankTooSmall) as exc:
        return ScanRow(line=lineno, text=text, status="skipped", tet_count=t.tet_count, detail=str(exc))
    except TopologyEngineError as exc:
        return ScanRow(line=lineno, text=text, status="error", tet_count=t.tet_count, detail=str(exc))
    return ScanRow(
        line=lineno,
        text=text,
        status="ok",
        tet_count=certificate.tet_count,
        h2_rank=certificate.h2_rank,
        verdict=certificate.verdict,
    )


def certify_line(lineno: int, text: str) -> ScanRow:
    """One scan row for one signature; never raises."""
    try:
        return _certify(lineno, text)
    except Exception as exc:
        logger.exception("line %d: unexpected failure", lineno)
        return ScanRow(line=lineno, text=text, status="error", detail=f"{type(exc).__name__}: {exc}")


@dataclass
class _ScanItem:
    lineno: int
    text: str
    started: threading.Event = field(default_factory=threading.Event)
    start_time: float = 0.0
    future: Optional[Future] = None

    def run(self) -> ScanRow:
        self.start_time = time.monotonic()
        self.started.set()
        return certify_line(self.lineno, self.text)


class ScanTool(BaseTool):
    """
    Tool for certifying a list of triangulations.

    Each signature gets ``item_seconds`` from the moment a worker picks it
    up. A signature still queued ``item_seconds`` after the previous row was
    settled is also recorded as a timeout.

    Attributes:
        input_schema (ScanToolInputSchema): The schema for the input data.
        output_schema (ScanToolOutputSchema): The schema for the output data.
        workers (int): Thread pool size.
        item_seconds (float): Per-signature time budget.
    """

    input_schema = ScanToolInputSchema
    output_schema = ScanToolOutputSchema

    def __init__(self, config: ScanToolConfig = ScanToolConfig()):
        super().__init__(config)
        self.workers = config.workers
        self.item_seconds = config.item_seconds

    def _collect(self, item: _ScanItem) -> ScanRow:
        try:
            if not item.started.wait(self.item_seconds):
                raise TimeoutError
            remaining = item.start_time + self.item_seconds - time.monotonic()
            return item.future.result(timeout=max(0.0, remaining))
        except TimeoutError:
            logger.warning("line %d exceeded %.0f s", item.lineno, self.item_seconds)
            item.future.cancel()
            return ScanRow(line=item.lineno, text=item.text, status="timeout")

    def run(self, params: ScanToolInputSchema) -> ScanToolOutputSchema:
        items = [_ScanItem(lineno, text) for lineno, text in read_signature_lines(params.path)]
        with ThreadPoolExecutor(max_workers=max(1, self.workers)) as pool:
            for item in items:
                item.future = pool.submit(item.run)
            rows = [self._collect(item) for item in items]
        report = ScanReport.from_rows(params.path, rows)
        logger.info("scanned %d signatures: %d hits", report.summary.rows, report.summary.hits)
        return ScanToolOutputSchema(report=report)


#################
# EXAMPLE USAGE #
#################
if __name__ == "__main__":
    import sys

    scan = ScanTool()
    result = scan.run(ScanToolInputSchema(path=sys.argv[1]))
    print(result.report.model_dump_json(indent=2))
