"""Tests for the tools, the tool manager and configuration loading."""

import time

import pytest
from rich.console import Console

from topology_engine.errors import FileUnreadable, InvalidParameter
from topology_engine.schemas.reports import CertificateReport, Table3Report
from topology_engine.tools import scan as scan_module
from topology_engine.tools.certify import CertifyToolInputSchema
from topology_engine.tools.convert import ConvertToolInputSchema
from topology_engine.tools.generate import FAMILIES, GenerateTool, GenerateToolInputSchema, build_family
from topology_engine.tools.invariants import InvariantsToolInputSchema
from topology_engine.tools.scan import ScanTool, ScanToolConfig, ScanToolInputSchema, read_signature_lines
from topology_engine.utils.config_manager import ConfigManager
from topology_engine.utils.display import show_report
from topology_engine.utils.tool_manager import ToolManager

console = Console()

T33 = "gLLMQbeefffehhqxhqq"
U33 = "iLLwQPcbeefgehhhhhqhhqhqx"


@pytest.fixture(scope="module")
def manager():
    return ToolManager(ConfigManager.initialize_tools(ConfigManager.get_default_config()))


def test_available_tools(manager):
    assert sorted(manager.get_available_tools()) == ["certify", "convert", "generate", "invariants", "normal", "scan"]
    with pytest.raises(KeyError):
        manager.get_tool_instance("homotopy")


def test_execute_rejects_mismatched_parameters(manager):
    with pytest.raises(ValueError):
        manager.execute_tool("certify", InvariantsToolInputSchema(triangulation=T33))
    with pytest.raises(ValueError):
        manager.execute_tool("search", InvariantsToolInputSchema(triangulation=T33))


def test_generate_every_family_needs_its_parameters():
    for family, (names, _) in FAMILIES.items():
        if names:
            with pytest.raises(InvalidParameter):
                build_family(family)


def test_generate_table_output():
    result = GenerateTool().run(GenerateToolInputSchema(family="tm", m=3, out="table"))
    assert result.report.tet_count == 3
    assert result.text.splitlines()[0].startswith("tet |")


def test_invariants_and_certificate(manager):
    inv = manager.execute_tool("invariants", InvariantsToolInputSchema(triangulation=T33)).report
    assert inv.h1 == "Z + Z_2 + Z_4"
    assert inv.h2_z2_rank == 2
    assert sum(inv.edge_degrees) == 6 * inv.tet_count
    result = manager.execute_tool("certify", CertifyToolInputSchema(check="tightness", triangulation=T33))
    assert isinstance(result.report, CertificateReport)
    assert result.verdict
    show_report(console, result.report)


def test_certify_table3(manager):
    result = manager.execute_tool("certify", CertifyToolInputSchema(check="table3"))
    assert isinstance(result.report, Table3Report)
    assert result.verdict


def test_certify_norms_need_parameters(manager):
    with pytest.raises(InvalidParameter):
        manager.execute_tool("certify", CertifyToolInputSchema(check="norms", k=3))


def test_convert_simplify_keeps_t33(manager):
    result = manager.execute_tool("convert", ConvertToolInputSchema(text=T33, to="isosig", simplify=True))
    assert result.tet_count <= 6


def test_read_signature_lines(tmp_path):
    path = tmp_path / "list.txt"
    path.write_text("# census sample\n\n  abc  \nxyz\n")
    assert read_signature_lines(str(path)) == [(3, "abc"), (4, "xyz")]
    with pytest.raises(FileUnreadable):
        read_signature_lines(str(tmp_path / "missing.txt"))


def test_scan_rows_keep_input_order(tmp_path):
    path = tmp_path / "list.txt"
    path.write_text("\n".join([T33, "@@@", T33]))
    report = ScanTool(ScanToolConfig(workers=2)).run(ScanToolInputSchema(path=str(path))).report
    assert [r.line for r in report.rows] == [1, 2, 3]
    assert report.summary.rows == 3
    assert report.summary.hits == 2
    assert report.summary.decode_failures == 1
    show_report(console, report)


def test_scan_survives_unexpected_errors(tmp_path, monkeypatch):
    real = scan_module.tightness_certificate

    def fragile(t):
        if t.tet_count == 8:
            raise RuntimeError("boom")
        return real(t)

    monkeypatch.setattr(scan_module, "tightness_certificate", fragile)
    path = tmp_path / "list.txt"
    path.write_text("\n".join([U33, T33]))
    report = ScanTool(ScanToolConfig(workers=1)).run(ScanToolInputSchema(path=str(path))).report
    assert [r.status for r in report.rows] == ["error", "ok"]
    assert "RuntimeError: boom" in report.rows[0].detail
    assert report.summary.errors == 1
    assert report.summary.hits == 1


def test_scan_timeout_counts_from_item_start(tmp_path, monkeypatch):
    real = scan_module.tightness_certificate

    def slow(t):
        time.sleep(0.6 if t.tet_count == 6 else 1.5)
        return real(t)

    monkeypatch.setattr(scan_module, "tightness_certificate", slow)
    path = tmp_path / "list.txt"
    path.write_text("\n".join([T33, U33]))
    config = ScanToolConfig(workers=2, item_seconds=1.0)
    report = ScanTool(config).run(ScanToolInputSchema(path=str(path))).report
    assert [r.status for r in report.rows] == ["ok", "timeout"]
    assert report.summary.timeouts == 1


def test_configuration_from_environment(monkeypatch):
    monkeypatch.setenv("TOPOLOGY_MAX_ENUM_TETS", "5")
    monkeypatch.setenv("TOPOLOGY_LOG_LEVEL", "debug")
    config = ConfigManager.load_configuration()
    assert config["max_enum_tets"] == 5
    assert config["log_level"] == "DEBUG"
    assert config["seed"] == ConfigManager.get_default_config()["seed"]
    tools = ConfigManager.initialize_tools(config)
    assert tools["normal"].max_tets == 5
