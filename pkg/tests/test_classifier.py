import pytest

from nodalcalc.classifier import (
    CASE_TAGS,
    TERMINAL_TAGS,
    CaseLabel,
    Existence,
    Kind,
    classify_max_nodal,
    classify_near_max,
    existence_status,
    mu_bound_after_blowdowns,
    nonminimal_decision_tree,
)
from nodalcalc.invariants import bmy_slack, bmy_solution_enumerator
from nodalcalc.report import Citation, canonical_json

NEF_TRIPLES = bmy_solution_enumerator(bmy_slack(2), 2)


def _check_trace(verdict):
    steps = verdict.trace
    assert [s.step for s in steps] == list(range(1, len(steps) + 1))
    assert all(isinstance(s.citation, Citation) for s in steps)
    for s in steps:
        if s.operation == "lookup":
            assert s.citation in (Citation.CLASSIFICATION, Citation.EXTERNAL_RATIONAL, Citation.EXISTENCE)


def test_max_nodal_nef_is_fake_plane():
    v = classify_max_nodal(True)
    assert v.tags == ["FPP"]
    assert v.cases[0].ksq == 9
    _check_trace(v)
    enum_step = v.trace[0]
    assert enum_step.operation == "bmy_solution_enumerator"
    assert enum_step.outputs["solutions"] == [[0, 0, 1]]


def test_max_nodal_anti_ample():
    v = classify_max_nodal(False)
    assert v.tags == ["P2", "F2"]
    squares = [s for s in v.trace if s.operation == "square_discriminant_test"]
    assert [s.inputs["k"] for s in squares] == list(range(7))
    assert [s.outputs["square"] for s in squares] == [True, True] + [False] * 5
    assert [int(s.outputs["abs_det"]) for s in squares] == [(9 - k) * 2**k for k in range(7)]
    _check_trace(v)


def test_nef_triples():
    assert len(NEF_TRIPLES) == 11


@pytest.mark.parametrize("q, pg, h11", NEF_TRIPLES)
def test_near_max_nef_every_triple(q, pg, h11):
    v = classify_near_max(q, pg, h11)
    _check_trace(v)
    ksq = 10 - 8 * q + 10 * pg - h11
    if (q, pg) == (1, 0):
        assert v.tags == ["1-a", "1-b"]
    elif (q, pg) == (0, 1):
        assert v.tags == ["1-e"] and v.cases[0].get("ball_quotient") is True
    elif h11 == 10:
        assert v.tags == ["1-c", "1-d"]
        assert v.cases[1].get("fibres") == (("I0*", "I0*"),)
    elif ksq in (3, 5):
        assert v.tags == [] and [c.tag for c in v.excluded] == ["1-f"]
        assert v.excluded[0].ksq == ksq
    else:
        assert v.tags == ["1-f"] and v.cases[0].ksq == ksq
    assert v.tags or v.excluded


@pytest.mark.parametrize("triple", [(0, 0, 11), (0, 2, 2), (2, 0, 2), (1, 1, 2)])
def test_near_max_nef_outside_bmy(triple):
    with pytest.raises(ValueError, match="violates orbifold BMY"):
        classify_near_max(*triple)


def test_near_max_needs_h11_two():
    with pytest.raises(ValueError):
        classify_near_max(0, 0, 1)


def test_near_max_deterministic():
    a = classify_near_max(0, 0, 6)
    b = classify_near_max(0, 0, 6)
    assert canonical_json(a) == canonical_json(b)


def test_mu_bound():
    assert [mu_bound_after_blowdowns(3, r) for r in range(5)] == [3, 3, 4, 4, 5]
    with pytest.raises(ValueError):
        mu_bound_after_blowdowns(-1, 0)


def test_tree_kappa_nonneg():
    v = nonminimal_decision_tree("kappa_nonneg")
    assert v.tags == ["2-a"] and v.cases[0].get("blowups") == (1, 2)
    steps = [s for s in v.trace if s.operation == "mu_bound_after_blowdowns"]
    assert [s.outputs["slack"] for s in steps] == [0, 0, -1]
    _check_trace(v)


def test_tree_irrational_ruled():
    v = nonminimal_decision_tree(Kind.IRRATIONAL_RULED)
    assert v.tags == ["2-b"]
    cert = next(s for s in v.trace if s.operation == "ruled_fibre_certificate")
    assert cert.outputs["balanced_fibres"] == {2: [[-2, -2, -1]]}


def test_tree_rational():
    assert nonminimal_decision_tree("rational").tags == ["2-c", "2-d", "2-e", "2-f"]
    with pytest.raises(ValueError):
        nonminimal_decision_tree("unknown")


@pytest.mark.parametrize(
    "q, pg, h11, expected",
    [
        (0, 0, 2, ["2-a", "2-c"]),
        (0, 0, 3, ["2-a", "2-f"]),
        (0, 0, 4, ["2-d", "2-e"]),
        (0, 0, 6, ["2-d"]),
        (1, 0, 4, ["2-b"]),
        (1, 0, 3, []),
    ],
)
def test_near_max_non_nef(q, pg, h11, expected):
    v = classify_near_max(q, pg, h11, nef_canonical=False)
    assert v.tags == expected
    assert v.tags or v.excluded
    _check_trace(v)


def test_non_nef_kind_must_apply():
    with pytest.raises(ValueError):
        classify_near_max(1, 0, 4, nef_canonical=False, kind="rational")
    v = classify_near_max(0, 0, 3, nef_canonical=False, kind="kappa_nonneg")
    assert v.tags == ["2-a"] and v.cases[0].get("blowups") == 2 and v.cases[0].get("mu") == 1


def test_existence_status():
    assert [existence_status("1-f", k).value for k in range(1, 9)] == [
        "open", "exists", "excluded", "exists", "excluded", "exists", "open", "exists",
    ]
    assert existence_status("2-b") is Existence.EXISTS
    with pytest.raises(ValueError):
        existence_status("1-f", 9)


def test_labels():
    with pytest.raises(ValueError):
        CaseLabel.make("3-a")
    assert set(TERMINAL_TAGS).isdisjoint(CASE_TAGS)
    assert CaseLabel.make("1-f", ksq=4).to_json() == {"tag": "1-f", "ksq": 4, "status": "exists"}
