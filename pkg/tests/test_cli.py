"""Command line: JSON envelopes, alternative formats and exit statuses."""
import io
import json

import pytest

from cliquebounds import __version__
from cliquebounds.cli import main
from cliquebounds.core.bounds import ratio_stats
from cliquebounds.models.envelope import OutputEnvelope
from cliquebounds.models.graph import Graph
from cliquebounds.utils.serialization import parse_rational


def run_json(capsys, *argv):
    status = main(list(argv))
    envelope = json.loads(capsys.readouterr().out)
    return status, envelope


class TestEnvelope:

    def test_bound(self, capsys):
        status, envelope = run_json(capsys, "bound", "--m", "102", "--k", "3")
        assert status == 0
        assert envelope["ok"] is True
        assert envelope["command"] == ["bound", "--m", "102", "--k", "3"]
        assert envelope["version"] == __version__
        assert envelope["schema"] == "1"
        assert envelope["rational_policy"] == "fraction-string"
        bounds = envelope["payload"]["bounds"]
        assert (bounds["oldbd"], bounds["lgbd"], bounds["smbd"], bounds["main"]) == ("149", "147", "146", "147")
        assert bounds["winner"] == "LGBD"

    def test_envelope_round_trip(self, capsys):
        main(["bound", "--m", "70", "--k", "3"])
        envelope = OutputEnvelope.from_json(capsys.readouterr().out)
        assert envelope.schema_version == "1"
        assert envelope.payload["bounds"]["winner"] == "SMBD"

    def test_undefined_smbd_is_null(self, capsys):
        _, envelope = run_json(capsys, "bound", "--m", "1", "--k", "3")
        assert envelope["payload"]["bounds"]["smbd"] is None

    def test_two_step_bound(self, capsys):
        _, envelope = run_json(capsys, "bound", "--m", "70", "--k", "3", "--step", "2")
        assert envelope["payload"]["nonconsec"]["bound"] == "61"


class TestRepresentations:

    def test_explicit_colors(self, capsys):
        _, envelope = run_json(capsys, "repr", "--m", "20", "--k", "3", "--r", "5")
        payload = envelope["payload"]
        assert payload["cascade"]["terms"] == ["6"]
        assert payload["colored"]["terms"] == [["6", "5"], ["3", "4"], ["1", "3"]]

    def test_default_colors(self, capsys):
        _, envelope = run_json(capsys, "repr", "--m", "70", "--k", "3")
        payload = envelope["payload"]
        assert payload["lgbd_form"]["a_terms"] == ["3", "1"]
        assert payload["colored"]["r"] == "7"
        assert payload["colored"]["terms"] == [["9", "7"]]

    def test_domain_error_exit(self, capsys):
        status, envelope = run_json(capsys, "repr", "--m", "0", "--k", "3")
        assert status == 2
        assert envelope["ok"] is False
        assert envelope["payload"]["error"] == "DomainError"


class TestConstruct:

    def test_construction2(self, capsys):
        status, envelope = run_json(capsys, "construct", "--m", "102", "--k", "3", "--which", "2")
        assert status == 0
        vector = envelope["payload"]["clique_vector"]
        assert vector[3] == "102"
        assert vector[4] == "147"
        assert envelope["payload"]["plan"]["base"] == "CONST2"

    def test_inapplicable_exit(self, capsys):
        status, envelope = run_json(capsys, "construct", "--m", "102", "--k", "3", "--which", "3")
        assert status == 3
        assert envelope["payload"]["error"] == "InapplicableConstructionError"
        assert envelope["payload"]["construction"] == "construction3"

    def test_graph6_output(self, capsys):
        status = main(["--format", "graph6", "construct", "--m", "70", "--k", "3", "--which", "3"])
        assert status == 0
        graph = Graph.from_graph6(capsys.readouterr().out)
        assert graph.n == 9
        assert graph.edge_count == 34

    def test_edgelist_output(self, capsys):
        main(["--format", "edgelist", "construct", "--m", "10", "--k", "3"])
        graph = Graph.from_edge_list_text(capsys.readouterr().out)
        assert graph == Graph.complete(5)


class TestCliques:

    def test_graph6_file(self, capsys, tmp_path):
        path = tmp_path / "k5.g6"
        path.write_text("D~{\n")
        _, envelope = run_json(capsys, "cliques", str(path))
        assert envelope["payload"]["clique_vector"] == ["1", "5", "10", "10", "5", "1"]
        assert envelope["payload"]["truncated_at"] is None

    def test_edge_list_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("n 3\n1 2\n2 3\n1 3\n"))
        _, envelope = run_json(capsys, "cliques", "-", "--max-size", "2")
        assert envelope["payload"]["clique_vector"] == ["1", "3", "3"]
        assert envelope["payload"]["truncated_at"] == "2"

    def test_missing_file(self, capsys, tmp_path):
        status, _ = run_json(capsys, "cliques", str(tmp_path / "absent.g6"))
        assert status == 2


class TestRevlex:

    def test_face_vector(self, capsys):
        _, envelope = run_json(capsys, "revlex", "--k", "3", "--m", "20")
        assert envelope["payload"]["face_vector"] == ["1", "6", "15", "20"]
        assert envelope["payload"]["facets"][0] == ["1", "2", "3"]

    def test_text_format(self, capsys):
        main(["--format", "text", "revlex", "--k", "2", "--m", "3"])
        assert capsys.readouterr().out == "1 2\n1 3\n2 3\n"

    def test_colored(self, capsys):
        _, envelope = run_json(capsys, "revlex", "--k", "3", "--m", "70", "--r", "7")
        assert envelope["payload"]["face_vector"][3] == "70"


class TestBoard:

    def test_run(self, capsys):
        status, envelope = run_json(capsys, "board", "--k", "3", "--top", "4", "3", "--bottom", "4", "2")
        assert status == 0
        payload = envelope["payload"]
        assert payload["final"]["top"] == ["5"]
        assert payload["final"]["bottom"] == ["3", "2"]
        assert [record["move_type"] for record in payload["trace"]] == ["T4", "T5", "T3"]

    def test_text_rendering(self, capsys):
        main(["--format", "text", "board", "--k", "1", "--top", "3", "--bottom", "2"])
        out = capsys.readouterr().out
        assert "T7" in out
        assert out.rstrip().endswith("r_2: 4 -> 6")

    def test_unreachable_target(self, capsys):
        status, envelope = run_json(capsys, "board", "--k", "2", "--top", "3", "--bottom", "2")
        assert status == 2
        assert envelope["ok"] is False


class TestVerify:

    def test_table_csv(self, capsys):
        status = main(["--format", "csv", "verify", "table", "--k", "3", "--n-max", "5"])
        assert status == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "m,max_all,max_with_clique,max_without,lgbd,smbd,oldbd,witness6"
        assert len(lines) > 1

    def test_theorem(self, capsys):
        status, envelope = run_json(capsys, "verify", "theorem", "--k", "2", "--n-max", "4")
        assert status == 0
        assert envelope["payload"]["violations"] == []

    def test_nonexistence_by_bound(self, capsys):
        _, envelope = run_json(
            capsys, "verify", "nonexistence", "--k", "3", "--step", "2", "--m", "70", "--target", "62",
        )
        assert envelope["payload"]["status"] == "certified-by-bound"

    def test_nonexistence_needs_target(self, capsys):
        status, _ = run_json(capsys, "verify", "nonexistence", "--k", "3", "--m", "70")
        assert status == 2

    def test_long_run_guard(self, capsys):
        status, envelope = run_json(capsys, "verify", "table", "--k", "3", "--n-max", "8")
        assert status == 2
        assert envelope["payload"]["error"] == "ResourceLimitError"


class TestStats:

    def test_fj(self, capsys):
        _, envelope = run_json(capsys, "stats", "fj", "--k", "3", "--j", "10", "50")
        fj = envelope["payload"]["fj"]
        assert set(fj) == {"10", "50"}
        assert all("/" in value for value in fj.values())
        assert envelope["payload"]["decimal"]["10"].startswith("0.") or envelope["payload"]["decimal"]["10"] == "1.000000"

    def test_ratio(self, capsys):
        _, envelope = run_json(capsys, "stats", "ratio", "--k", "3", "--m", "70")
        assert envelope["payload"]["ratio_proxy"] == "0/1"
        assert envelope["payload"]["conbd_lower"] == "81"

    def test_ratio_with_integral_rhs(self, capsys):
        _, envelope = run_json(capsys, "stats", "ratio", "--k", "3", "--m", "285")
        payload = envelope["payload"]
        assert payload["ratio_proxy"] == "0/1"
        assert payload["ratbound_rhs"] == "9/1"
        assert parse_rational(payload["ratbound_rhs"]) == ratio_stats(285, 3).ratbound_rhs

    def test_ratio_scan(self, capsys):
        status, envelope = run_json(capsys, "stats", "ratio", "--k", "3", "--m", "1", "--m-max", "1500")
        assert status == 0
        assert envelope["payload"]["exceeded"] == "0"


def test_format_not_available(capsys):
    status, envelope = run_json(capsys, "--format", "csv", "bound", "--m", "10", "--k", "3")
    assert status == 2
    assert envelope["ok"] is False


def test_errors_are_json_under_text_format(capsys):
    status, envelope = run_json(capsys, "--format", "text", "repr", "--m", "0", "--k", "3")
    assert status == 2
    assert envelope["ok"] is False
    assert envelope["payload"]["error"] == "DomainError"


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out
