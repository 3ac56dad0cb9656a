import json
import subprocess
import sys

import pytest

from totalgraphs.cli import main
from totalgraphs.derived import total_graph
from totalgraphs.generators import complete, cycle, petersen
from totalgraphs.graph import Graph, parse_graph, write_graph


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    write.dir = tmp_path
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestDerive:
    def test_total_k2(self, files, capsys):
        code, out, _ = run(["derive", "--input", files("k2", write_graph(complete(2))), "--which", "total"], capsys)
        assert code == 0
        assert parse_graph(out) == complete(3)
        assert "c element 2 e 0 1" in out.splitlines()

    def test_square_of_subdivision(self, files, capsys):
        k3 = files("k3", write_graph(complete(3)))
        _, sub, _ = run(["derive", "-i", k3, "--which", "subdivision"], capsys)
        _, sq, _ = run(["derive", "-i", files("s", sub), "--which", "square"], capsys)
        _, tot, _ = run(["derive", "-i", k3, "--which", "total"], capsys)
        assert set(parse_graph(sq).edges) == set(parse_graph(tot).edges)

    def test_line_p3(self, files, capsys):
        _, out, _ = run(["derive", "-i", files("p3", "p 3 2\ne 0 1\ne 1 2\n"), "--which", "line"], capsys)
        assert parse_graph(out) == complete(2)

    def test_json_and_dot(self, files, capsys):
        path = files("k2", write_graph(complete(2)))
        _, out, _ = run(["derive", "-i", path, "--format", "json"], capsys)
        data = json.loads(out)
        assert data["n"] == 3 and len(data["element_map"]) == 3
        _, out, _ = run(["derive", "-i", path, "--format", "dot"], capsys)
        assert out.startswith("graph")

    def test_parse_error_has_line_number(self, files, capsys):
        code, _, err = run(["derive", "-i", files("bad", "p 3 1\ne 0 3\n")], capsys)
        assert code == 2 and "line 2" in err


class TestColorTotal:
    @pytest.mark.parametrize("g, bound", [(petersen(), 6), (cycle(5), 5), (complete(2), 3)])
    def test_examples(self, g, bound, files, capsys):
        out_path = str(files.dir / "c.json")
        code, _, err = run(["color-total", "-i", files("g", write_graph(g)), "-o", out_path], capsys)
        assert code == 0
        report = json.loads(err)
        assert report["valid"] and report["max_color"] <= bound
        code, _, _ = run(["verify", "-i", files("g", write_graph(g)), "--artifact", out_path,
                          "--kind", "coloring"], capsys)
        assert code == 0

    def test_k2_uses_three_colors(self, files, capsys):
        _, _, err = run(["color-total", "-i", files("g", write_graph(complete(2)))], capsys)
        assert json.loads(err)["colors_used"] == 3

    def test_not_five_colorable(self, files, capsys):
        code, _, err = run(["color-total", "-i", files("k6", write_graph(complete(6)))], capsys)
        assert code == 2 and "5-coloring" in err

    def test_external_coloring(self, files, capsys):
        g = files("c4", write_graph(cycle(4)))
        good = files("good.json", json.dumps({"vertex_colors": [1, 2, 1, 2]}))
        bad = files("bad.json", json.dumps([1, 1, 2, 2]))
        assert run(["color-total", "-i", g, "--external-coloring", good], capsys)[0] == 0
        code, _, err = run(["color-total", "-i", g, "--external-coloring", bad], capsys)
        assert code == 2 and "not proper" in err

    def test_budget_exit_code(self, files, capsys):
        _, out, _ = run(["gen", "random_5_partite", "200", "0.1", "--seed", "3"], capsys)
        code, _, err = run(["color-total", "-i", files("g", out), "--budget", "10"], capsys)
        assert code == 3 and "too large" in err

    def test_trails_file(self, files, capsys):
        g = Graph(5, [(0, 1), (0, 4), (1, 3), (1, 4), (3, 4)])
        planted = files("p.json", json.dumps([5, 3, 5, 5, 4]))
        trails = str(files.dir / "t.json")
        run(["color-total", "-i", files("g", write_graph(g)), "--external-coloring", planted,
             "--trails", trails, "--check-invariants"], capsys)
        records = json.loads(open(trails).read())
        assert [r["phase"] for r in records] == [5]


class TestMinor:
    def test_k6_connectivity(self, files, capsys):
        code, out, _ = run(["minor", "-i", files("k6", write_graph(complete(6))), "--mode", "connectivity",
                            "--k", "3"], capsys)
        assert code == 0 and json.loads(out)["order"] == 8

    def test_c5_critical2(self, files, capsys):
        code, out, _ = run(["minor", "-i", files("c5", write_graph(cycle(5))), "--mode", "critical2"], capsys)
        assert code == 0 and json.loads(out)["order"] == 4

    def test_c4_connectivity_fails(self, files, capsys):
        code, _, err = run(["minor", "-i", files("c4", write_graph(cycle(4))), "--mode", "connectivity",
                            "--k", "3"], capsys)
        assert code == 2 and "below" in err

    def test_critical3_relaxed(self, files, capsys):
        code, out, _ = run(["minor", "-i", files("k7", write_graph(complete(7))), "--mode", "critical3",
                            "--relaxed"], capsys)
        assert code == 0 and json.loads(out)["provenance"] == "critical_delta_plus_3_relaxed"

    def test_critical3_strict_refuses(self, files, capsys):
        code, _, err = run(["minor", "-i", files("k7", write_graph(complete(7))), "--mode", "critical3"], capsys)
        assert code == 3 and "too large" in err      # criticality check hits the size guard
        code, _, err = run(["minor", "-i", files("k4", write_graph(complete(4))), "--mode", "critical3"], capsys)
        assert code == 2 and "Delta >= 6" in err


class TestVerify:
    def _cert(self, files, capsys):
        g = files("k5", write_graph(complete(5)))
        _, out, _ = run(["minor", "-i", g, "--mode", "connectivity", "--k", "2"], capsys)
        return g, json.loads(out)

    def test_valid(self, files, capsys):
        g, cert = self._cert(files, capsys)
        code, out, _ = run(["verify", "-i", g, "--artifact", files("c.json", json.dumps(cert)),
                            "--kind", "certificate"], capsys)
        assert code == 0 and out.startswith("valid: true")

    def test_tampered(self, files, capsys):
        g, cert = self._cert(files, capsys)
        big = max(range(len(cert["branch_sets"])), key=lambda i: len(cert["branch_sets"][i]))
        cert["branch_sets"][big].pop()
        cert["branch_sets"][0].pop()
        code, out, _ = run(["verify", "-i", g, "--artifact", files("c.json", json.dumps(cert)),
                            "--kind", "certificate", "--format", "json"], capsys)
        report = json.loads(out)
        assert code == 1 and "branch set 0 is empty" in report["failures"]

    def test_coloring_one_conflict(self, files, capsys):
        g = files("k2", write_graph(complete(2)))
        bad = {"vertex_colors": [1, 2], "edge_colors": [{"u": 0, "v": 1, "color": 2}]}
        code, out, _ = run(["verify", "-i", g, "--artifact", files("c.json", json.dumps(bad)),
                            "--kind", "coloring", "--format", "json"], capsys)
        assert code == 1 and len(json.loads(out)["violations"]) == 1

    def test_schema_mismatch(self, files, capsys):
        g = files("k2", write_graph(complete(2)))
        code, _, _ = run(["verify", "-i", g, "--artifact", files("c.json", json.dumps({"order": 1})),
                          "--kind", "certificate"], capsys)
        assert code == 2
        code, _, _ = run(["verify", "-i", g, "--artifact", files("d.json", "[1, 2"),
                          "--kind", "coloring"], capsys)
        assert code == 2

    def test_out_of_range_element(self, files, capsys):
        g = files("k2", write_graph(complete(2)))
        cert = {"order": 1, "provenance": "x", "branch_sets": [[{"kind": "v", "id": 9}]]}
        code, _, err = run(["verify", "-i", g, "--artifact", files("c.json", json.dumps(cert)),
                            "--kind", "certificate"], capsys)
        assert code == 2 and "not an element" in err


class TestOracle:
    def test_chi_double_prime_c5(self, files, capsys):
        assert run(["oracle", "-i", files("c5", write_graph(cycle(5))), "--quantity", "chi_double_prime"],
                   capsys)[1] == "4\n"

    def test_chi_petersen(self, files, capsys):
        assert run(["oracle", "-i", files("p", write_graph(petersen())), "--quantity", "chi"], capsys)[1] == "3\n"

    def test_guard(self, files, capsys):
        code, _, err = run(["oracle", "-i", files("k30", write_graph(complete(30))),
                            "--quantity", "chi_double_prime"], capsys)
        assert code == 3 and "too large" in err

    def test_criticality(self, files, capsys):
        code, out, _ = run(["oracle", "-i", files("c5", write_graph(cycle(5))), "--quantity", "criticality",
                            "--t", "4", "--format", "json"], capsys)
        assert json.loads(out) == {"quantity": "criticality", "value": True, "t": 4}


class TestGen:
    def test_complete(self, capsys):
        assert parse_graph(run(["gen", "complete", "6"], capsys)[1]) == complete(6)

    def test_cycle(self, capsys):
        assert parse_graph(run(["gen", "cycle", "5"], capsys)[1]) == cycle(5)

    def test_random_is_deterministic(self, files, capsys):
        a = run(["gen", "random_5_partite", "100", "0.3", "--seed", "7"], capsys)[1]
        b = run(["gen", "random_5_partite", "100", "0.3", "--seed", "7"], capsys)[1]
        assert a == b
        planted = [int(x) for x in next(line for line in a.splitlines() if line.startswith("c planted")).split()[2:]]
        g = parse_graph(a)
        assert all(planted[u] != planted[v] for u, v in g.edges) and max(planted) <= 5

    def test_bad_params(self, capsys):
        assert run(["gen", "cycle", "x"], capsys)[0] == 2
        assert run(["gen", "cycle", "2"], capsys)[0] == 2
        assert run(["gen", "complete"], capsys)[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "totalgraphs", "gen", "petersen"], capture_output=True, text=True)
    assert proc.returncode == 0 and parse_graph(proc.stdout) == petersen()


def test_artifacts_never_rejected(files, capsys):
    # constructor output always passes verify
    for g, argv in [(complete(6), ["--mode", "connectivity", "--k", "3"]), (cycle(7), ["--mode", "critical2"])]:
        path = files("g", write_graph(g))
        _, out, _ = run(["minor", "-i", path, *argv], capsys)
        assert run(["verify", "-i", path, "--artifact", files("c.json", out), "--kind", "certificate"],
                   capsys)[0] == 0
    assert total_graph(cycle(7)).graph.n == 14
