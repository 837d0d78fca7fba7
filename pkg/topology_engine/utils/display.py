"""Human-readable summaries of reports."""

from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from topology_engine.schemas.reports import (
    AngleReport,
    CertificateReport,
    EnumerationReport,
    InvariantsReport,
    NormReportModel,
    ScanReport,
    Table3Report,
    TriangulationReport,
)


def _verdict(value: bool) -> str:
    return "[bold green]true[/bold green]" if value else "[bold red]false[/bold red]"


def _table(title: str, *columns: str) -> Table:
    table = Table(show_header=True, header_style="bold cyan", box=box.ROUNDED, title=f"[bold]{title}[/bold]")
    for column in columns:
        table.add_column(column)
    return table


def show_triangulation(console: Console, report: TriangulationReport) -> None:
    params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    console.print(
        Panel(
            f"{report.tet_count} tetrahedra\n{report.iso_signature}\n\n{report.gluing_table}",
            title=f"[bold blue]{report.family}({params})[/bold blue]",
            border_style="blue",
        )
    )


def show_invariants(console: Console, report: InvariantsReport) -> None:
    console.print(
        Panel(
            f"H1 = {report.h1}\nH1(Z2) = {report.h1_z2}\nrank H2(Z2) = {report.h2_z2_rank}\n"
            f"orientable: {report.orientable}\nedge degrees: {report.edge_degrees}\n"
            f"boundary components: {report.boundary_components}",
            title=f"[bold blue]{report.iso_signature}[/bold blue]",
            border_style="blue",
        )
    )
    table = _table("Vertex links", "vertex", "link", "chi", "orientable")
    for v in report.vertices:
        table.add_row(str(v.vertex), v.kind, str(v.euler), str(v.orientable))
    console.print(table)


def show_enumeration(console: Console, report: EnumerationReport) -> None:
    table = _table(
        f"{report.count} {report.which} surfaces ({report.system}, {report.surface_filter})",
        "#", "chi", "orientable", "closed", "components", "coords",
    )
    for i, s in enumerate(report.surfaces):
        table.add_row(str(i), str(s.euler), str(s.orientable), str(s.closed), str(s.components), " ".join(map(str, s.coords)))
    console.print(table)


def show_certificate(console: Console, report: CertificateReport) -> None:
    table = _table("Canonical representatives", "labelling", "one quad per tet", "chi")
    for c in report.classes:
        table.add_row(c.labelling, str(c.one_quad_per_tet), str(c.euler))
    console.print(table)
    console.print(
        Panel(
            f"tetrahedra: {report.tet_count}\n-chi sum: {report.negative_euler_sum}\n"
            f"quad partition: {report.quad_partition}\nverdict: {_verdict(report.verdict)}\n\n[dim]{report.caveat}[/dim]",
            title=f"[bold blue]{report.iso_signature}[/bold blue]",
            border_style="blue",
        )
    )


def show_angles(console: Console, report: AngleReport) -> None:
    body = f"feasible: {_verdict(report.feasible)}\nsmallest angle: {report.slack}"
    if report.angles:
        body += "\n" + "\n".join(f"{i}: " + ", ".join(a) for i, a in enumerate(report.angles))
    if report.certificate:
        body += f"\n{report.certificate}"
    console.print(Panel(body, title=f"[bold blue]{report.iso_signature}[/bold blue]", border_style="blue"))


def show_norms(console: Console, report: NormReportModel) -> None:
    table = _table(f"Norms of M_({report.k},{report.n})", "class", "norm", "best candidate", "extensions")
    for c in report.classes:
        best = c.best
        table.add_row(
            c.name,
            str(c.norm),
            best.source if best else "-",
            ", ".join(f"{k}: {v}" for k, v in best.extensions.items()) if best else "-",
        )
    console.print(table)
    console.print(f"strict triangle inequality: {_verdict(report.strict_triangle)}")
    for assumption in report.assumptions:
        console.print(f"[dim]- {assumption}[/dim]")


def show_table3(console: Console, report: Table3Report) -> None:
    table = _table("Compatibility classes", "class", "cases", "passed", "mismatches")
    for c in report.classes:
        table.add_row(str(c.number), str(c.cases), _verdict(c.passed), str(len(c.mismatches)))
    console.print(table)


def show_scan(console: Console, report: ScanReport) -> None:
    table = _table(report.source, "line", "status", "tets", "H2 rank", "verdict")
    for r in report.rows:
        verdict = "-" if r.verdict is None else _verdict(r.verdict)
        table.add_row(str(r.line), r.status, str(r.tet_count or "-"), str(r.h2_rank or "-"), verdict)
    console.print(table)
    s = report.summary
    console.print(
        f"{s.rows} rows: {s.hits} tight, {s.misses} not tight, {s.decode_failures} undecodable, "
        f"{s.skipped} skipped, {s.timeouts} timed out, {s.errors} errors"
    )


RENDERERS = {
    TriangulationReport: show_triangulation,
    InvariantsReport: show_invariants,
    EnumerationReport: show_enumeration,
    CertificateReport: show_certificate,
    AngleReport: show_angles,
    NormReportModel: show_norms,
    Table3Report: show_table3,
    ScanReport: show_scan,
}


def show_report(console: Console, report: BaseModel) -> None:
    RENDERERS[type(report)](console, report)
