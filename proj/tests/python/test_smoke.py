"""Smoke tests for the python bindings: the headline computations and a few
error paths, not a re-run of the C++ suites."""

import pytest

import lpakit


ROSE2 = "vertex v\nedge e1 v v\nedge e2 v v\n"


def rose2():
    return lpakit.Graph.from_text(ROSE2)


def test_graph_round_trip():
    g = rose2()
    assert g.vertices == ["v"]
    assert g.edges == [("e1", "v", "v"), ("e2", "v", "v")]
    assert lpakit.Graph.from_text(g.to_text()) == g
    assert lpakit.Graph.from_json(g.to_json()) == g


def test_bf_values():
    g = rose2()
    assert lpakit.bf(g)["description"] == "0"
    tw = lpakit.bf_twisted(g)
    assert tw["factors"] == [3]
    spliced = g.cuntz_splice("v")
    assert lpakit.bf_twisted(spliced)["factors"] == [7]
    assert lpakit.bf(spliced)["description"] == "0"


def test_det_sigma_and_vanishing():
    upsilon = lpakit.Graph(
        ["v1", "v2"],
        [("l", "v1", "v1"), ("a", "v1", "v2"), ("b", "v2", "v1")],
    )
    assert lpakit.det_sigma(upsilon) == (0, -1)
    assert lpakit.jh_vanishes(upsilon) == (True, True)
    assert upsilon.is_purely_infinite_simple()["value"]


def test_obstruction():
    g = rose2()
    spliced = g.cuntz_splice("v")
    assert not lpakit.graded_hom_obstruction(g, spliced)["possible"]
    assert lpakit.graded_hom_obstruction(g, g)["possible"]


def test_certificate():
    got = lpakit.kk_iso_exists(rose2(), rose2().cuntz_splice("v"))
    assert got["certificate"]["verified"] is True


def test_linear_algebra():
    d, u, v = lpakit.snf([[2, 4], [6, 8]])
    assert d == [[2, 0], [0, 4]]
    assert lpakit.cokernel([[0, -1], [-3, 0]])["factors"] == [3]
    assert lpakit.solve([[2]], [3]) is None
    assert lpakit.solve([[2]], [4]) == [2]
    # big integers survive the boundary
    d, _, _ = lpakit.snf([[10**30]])
    assert d == [[10**30]]


def test_terms():
    g = rose2()
    nf = lpakit.normal_form(g, "e1 e1* + e2 e2*")
    assert nf["normal_form"] == "v"
    assert lpakit.verify_minus_one_identity(g)
    with pytest.raises(lpakit.DomainError):
        lpakit.normal_form(g, "unknown")
    with pytest.raises(ValueError):
        lpakit.Graph.from_text("vertex v\nbroken line\n")


def test_kh_ends():
    four = lpakit.Graph.from_text(
        "vertex v\n" + "".join(f"edge e{i} v v\n" for i in range(4))
    )
    coeff = {
        "degrees": {
            "0": {"rank": 2, "sigma": {"rows": 2, "cols": 2, "entries": ["0", "1", "1", "0"]}},
            "-1": {"rank": 0},
        }
    }
    ends = lpakit.kh_ends(four, coeff, degree=0)
    assert ends["middle"]["factors"] == ["3", "3"]


def test_cli_passthrough():
    code, out, err = lpakit.run_cli(["selftest", "--seed", "5"])
    assert code == 0
    assert "seed 5" in out
