"""Decision procedures for surfaces with ``mu = h11 - 1`` and ``mu = h11 - 2``.

Each verdict carries an ordered trace.  Computed steps (inequalities,
determinants, searches) are kept apart from classification facts, which
are looked up from :data:`FACTS` and always recorded with operation
``"lookup"`` so a reader can see exactly what was assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import count

from . import fibres
from .f2 import nodal_embedding_obstruction
from .invariants import SurfaceInvariants, bmy_slack, bmy_solution_enumerator, contract, noether
from .lattice import determinant, nodal_block, signature, square_discriminant_test
from .report import Citation, Trace, TraceStep, jsonable
from .singularities import BMYVerdict, Canonical, OrbifoldSurface, bmy_check, max_singular_points_filter

__all__ = [
    "TERMINAL_TAGS",
    "CASE_TAGS",
    "CaseLabel",
    "Existence",
    "ClassificationVerdict",
    "Kind",
    "FACTS",
    "classify_max_nodal",
    "classify_near_max",
    "mu_bound_after_blowdowns",
    "elliptic_fibre_search",
    "nonminimal_decision_tree",
    "existence_status",
    "record_bmy_enumeration",
]

TERMINAL_TAGS = ("P2", "F2", "FPP", "cone")
CASE_TAGS = (
    "1-a", "1-b", "1-c", "1-d", "1-e", "1-f",
    "2-a", "2-b", "2-c", "2-d", "2-e", "2-f",
)

FACTS = {
    "fake_plane": (
        "X minimal with K nef, q = pg = 0, K^2 = 9, hence not rational: "
        "X is a fake projective plane"
    ),
    "anti_ample": (
        "-K_S ample gives kappa(X) = -infinity; if X were irrational ruled all nodal "
        "curves would lie in fibres and rho(S) >= 2, so X is rational and S is a "
        "rational homology plane with nodes"
    ),
    "rho1_rational": "rational surface with rho = 1 is P2",
    "rho2_rational_k8": "rational surface with K^2 = 8, rho = 2 and a nodal curve is F2",
    "q1_pg0_k0": (
        "minimal, kappa >= 0, K^2 = 0, e = 0, q = 1, pg = 0: bi-elliptic (kappa = 0) "
        "or properly elliptic (kappa = 1)"
    ),
    "general_type": "minimal, kappa >= 0, K^2 > 0: general type",
    "ball_quotient": "general type with K^2 = 3e: ball quotient",
    "k0_e12": "minimal, kappa >= 0, K^2 = 0, e = 12, q = pg = 0: Enriques or properly elliptic",
    "elliptic_fibres": (
        "properly elliptic: a fibre is a rational multiple of K, so every nodal curve "
        "lies in a fibre of the elliptic fibration"
    ),
    "k8_no_nodes": "minimal general type, pg = 0, K^2 = 8 carries no nodal curve (mu = h11 - 1 impossible)",
    "minimal_kappa_nonneg_is_nef": "a minimal surface with kappa >= 0 has K nef",
    "ruled_fibres": (
        "X irrational ruled: nodal curves lie in fibres of the Albanese fibration, "
        "and mu(X) equals the number of blow-ups from a relatively minimal model"
    ),
    "rational_near_max": (
        "rational X with mu = h11 - 2: F_e (e != 2), F_e blown up twice on k >= 1 fibres, "
        "F_2 blown up at two infinitely near points, or F_2 blown up at one point"
    ),
    "cone": "contracting the (-2)-section of F2 gives the quadric cone over a conic",
    "rational_singularities": (
        "S has only nodes, which are rational singularities, so its minimal resolution X "
        "has q = pg = 0 and b2(X) = 1 + #nodes, i.e. mu(X) = h11(X) - 1"
    ),
}


class Existence(enum.Enum):
    EXISTS = "exists"
    OPEN = "open"
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class CaseLabel:
    tag: str
    attributes: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.tag not in TERMINAL_TAGS and self.tag not in CASE_TAGS:
            raise ValueError(f"unknown label {self.tag!r}")

    @classmethod
    def make(cls, tag: str, **attributes) -> "CaseLabel":
        return cls(tag, tuple(attributes.items()))

    def get(self, key: str, default=None):
        for k, v in self.attributes:
            if k == key:
                return v
        return default

    @property
    def ksq(self):
        return self.get("ksq")

    def __str__(self):
        return self.tag if self.ksq is None else f"{self.tag}(K^2={self.ksq})"

    def to_json(self) -> dict:
        out = {"tag": self.tag}
        out.update(jsonable(dict(self.attributes)))
        out["status"] = existence_status(self).value
        return out


def existence_status(label: CaseLabel | str, ksq: int | None = None) -> Existence:
    """Whether examples are known for a case label."""
    if isinstance(label, str):
        label = CaseLabel.make(label) if ksq is None else CaseLabel.make(label, ksq=ksq)
    if label.tag == "1-f":
        k = label.ksq
        if k in (2, 4, 6, 8):
            return Existence.EXISTS
        if k in (1, 7):
            return Existence.OPEN
        if k in (3, 5):
            return Existence.EXCLUDED
        raise ValueError("case 1-f needs K^2 in 1..8")
    return Existence.EXISTS


@dataclass(frozen=True)
class ClassificationVerdict:
    cases: tuple[CaseLabel, ...]
    trace: tuple[TraceStep, ...]
    excluded: tuple[CaseLabel, ...] = ()

    @property
    def tags(self) -> list[str]:
        return [c.tag for c in self.cases]

    def to_json(self) -> dict:
        return {
            "cases": [c.to_json() for c in self.cases],
            "excluded": [c.to_json() for c in self.excluded],
            "trace": [s.to_json() for s in self.trace],
        }


class Kind(enum.Enum):
    KAPPA_NONNEG = "kappa_nonneg"
    IRRATIONAL_RULED = "irrational_ruled"
    RATIONAL = "rational"


def _lookup(trace: Trace, fact: str, citation=Citation.CLASSIFICATION, **outputs):
    trace.add("lookup", {"fact": fact}, {"statement": FACTS[fact], **outputs}, citation)


def _bmy_nef_step(trace: Trace, x: SurfaceInvariants, mu: int) -> BMYVerdict:
    trace.add("noether", {"q": x.q, "pg": x.pg, "h11": x.h11}, {"ksq": x.ksq, "euler": x.euler}, Citation.NOETHER)
    c = contract(x, mu)
    trace.add(
        "contract",
        {"euler": x.euler, "mu": mu},
        {"euler_s": c.euler_s, "ksq_s": c.ksq_s, "e_orb": c.e_orb},
        Citation.CONTRACTION,
    )
    s = OrbifoldSurface.with_nodes(c.euler_s, mu, c.ksq_s)
    v = bmy_check(s, Canonical.NEF)
    trace.add(
        "bmy_check",
        {"ksq": c.ksq_s, "e_orb": c.e_orb, "canonical": "nef"},
        {"three_e_orb": 3 * c.e_orb, "verdict": v},
        Citation.BMY_NEF,
    )
    return v


def record_bmy_enumeration(trace: Trace, codim: int, h11_min: int):
    bound = bmy_slack(codim)
    sols = bmy_solution_enumerator(bound, h11_min)
    families: dict[str, list] = {}
    for q, pg, h in sols:
        families.setdefault(f"q={q},pg={pg}", []).append([q, pg, h])
    trace.add(
        "bmy_solution_enumerator",
        {"mu": f"h11-{codim}", "bound": bound, "h11_min": h11_min},
        {"solutions": [list(s) for s in sols], "families": families},
        Citation.BMY_NEF,
    )
    return sols


def classify_max_nodal(nef_canonical: bool) -> ClassificationVerdict:
    """Surfaces with ``mu = h11 - 1``, split by whether ``K_S`` is nef or anti-ample."""
    trace = Trace()
    cases = []
    if nef_canonical:
        for q, pg, h11 in record_bmy_enumeration(trace, 1, 1):
            x = noether(q, pg, h11)
            v = _bmy_nef_step(trace, x, h11 - 1)
            if v is BMYVerdict.VIOLATED:
                raise RuntimeError("enumerated solution violates BMY")
            if (q, pg, h11, x.ksq, x.euler) != (0, 0, 1, 9, 3):
                raise RuntimeError(f"unexpected solution {(q, pg, h11)}")
            _lookup(trace, "fake_plane")
            cases.append(CaseLabel.make("FPP", ksq=x.ksq))
        return ClassificationVerdict(tuple(cases), trace.freeze())

    _lookup(trace, "anti_ample")
    kmax = max_singular_points_filter(3, 2)
    trace.add(
        "max_singular_points_filter",
        {"euler_smooth": 3, "min_group_order": 2},
        {"k_max": kmax},
        Citation.SINGULAR_POINT_BOUND,
    )
    survivors = []
    for k in range(kmax + 1):
        ksq = noether(0, 0, 1 + k).ksq
        g = nodal_block(k, ksq)
        det = determinant(g)
        sq = square_discriminant_test(g)
        sig = signature(g)
        trace.add(
            "square_discriminant_test",
            {"k": k, "lattice": f"A1^{k} + <{ksq}>"},
            {"ksq": ksq, "abs_det": str(abs(det)), "signature": sig, "square": sq},
            Citation.SQUARE_DISCRIMINANT,
        )
        if sq:
            survivors.append(k)
    for k in survivors:
        if k == 0:
            _lookup(trace, "rho1_rational")
            cases.append(CaseLabel.make("P2", ksq=9))
        elif k == 1:
            _lookup(trace, "rho2_rational_k8")
            cases.append(CaseLabel.make("F2", ksq=8))
        else:
            raise RuntimeError(f"k={k} survived the square test")
    return ClassificationVerdict(tuple(cases), trace.freeze())


def mu_bound_after_blowdowns(mu_minimal: int, r: int) -> int:
    """Upper bound on disjoint nodal curves after ``r`` blow-ups of a minimal model.

    ``mu(X) <= mu(Y) + r/2``, sharpened to ``floor`` since ``mu`` is an integer.
    """
    if mu_minimal < 0 or r < 0:
        raise ValueError("mu_minimal and r must be nonnegative")
    return mu_minimal + r // 2


def elliptic_fibre_search(total_euler: int, nodal_demand: int):
    return fibres.elliptic_fibre_search(total_euler, nodal_demand)


def _fibre_names(multisets) -> list[list[str]]:
    return [[f.name for f in m] for m in multisets]


def _near_max_nef(x: SurfaceInvariants, trace: Trace):
    mu = x.h11 - 2
    v = _bmy_nef_step(trace, x, mu)
    if v is BMYVerdict.VIOLATED:
        raise ValueError("violates orbifold BMY")
    cases, excluded = [], []
    _lookup(trace, "minimal_kappa_nonneg_is_nef")
    if (x.q, x.pg) == (1, 0):
        _lookup(trace, "q1_pg0_k0")
        cases += [CaseLabel.make("1-a", kappa=0), CaseLabel.make("1-b", kappa=1)]
    elif (x.q, x.pg) == (0, 1):
        _lookup(trace, "general_type")
        if v is BMYVerdict.EQUALITY:
            _lookup(trace, "ball_quotient")
        cases.append(CaseLabel.make("1-e", ksq=x.ksq, ball_quotient=v is BMYVerdict.EQUALITY))
    elif x.h11 == 10:
        _lookup(trace, "k0_e12")
        cases.append(CaseLabel.make("1-c", mu=mu))
        _lookup(trace, "elliptic_fibres")
        found = elliptic_fibre_search(x.euler, mu)
        trace.add(
            "elliptic_fibre_search",
            {"total_euler": x.euler, "nodal_demand": mu},
            {"multisets": _fibre_names(found)},
            Citation.FIBRATION_EULER,
        )
        if found:
            cases.append(CaseLabel.make("1-d", mu=mu, fibres=tuple(map(tuple, _fibre_names(found)))))
        else:
            excluded.append(CaseLabel.make("1-d", mu=mu))
    else:
        _lookup(trace, "general_type")
        rep = nodal_embedding_obstruction(mu, x.b2)
        trace.add(
            "min_kernel_dimension",
            {"mu": mu, "ambient_rank": x.b2},
            {"min_kernel_dim": rep.min_kernel_dim},
            Citation.ISOTROPIC_IMAGE,
        )
        trace.add(
            "doubly_even_subspace_search",
            {"mu": mu, "target_dim": rep.min_kernel_dim},
            {"feasible": rep.feasible, "witness": rep.witness, "note": rep.note},
            Citation.DOUBLY_EVEN_KERNEL,
        )
        label = CaseLabel.make("1-f", ksq=x.ksq, mu=mu)
        if rep.feasible:
            if x.ksq == 8:
                _lookup(trace, "k8_no_nodes")
            cases.append(label)
        else:
            excluded.append(label)
    return cases, excluded


def _kappa_nonneg(trace: Trace, x: SurfaceInvariants | None):
    # mu(X) = h11(Y) + r - 2 and mu(Y) <= h11(Y) - 1; write mu(Y) = h11(Y) - 1 - d, d >= 0.
    # The blow-down bound then needs d <= 1 - r + floor(r/2).
    feasible_r = []
    for r in count(1):
        slack = 1 - r + mu_bound_after_blowdowns(0, r)
        trace.add(
            "mu_bound_after_blowdowns",
            {"r": r, "mu_minimal": "h11(Y)-1"},
            {"bound": f"h11(Y)-1+{r // 2}", "needed": f"h11(Y)+{r - 2}", "slack": slack},
            Citation.BLOWDOWN_BOUND,
        )
        if slack < 0:
            # slack is nonincreasing in r
            break
        feasible_r.append(r)
    # every feasible r has slack 0, forcing mu(Y) = h11(Y) - 1 on a minimal Y
    y = classify_max_nodal(nef_canonical=True)
    trace.extend(y.trace)
    if y.tags != ["FPP"]:
        raise RuntimeError("minimal model with mu = h11 - 1 should be a fake plane")
    options = [(r, 1 + r, r - 1) for r in feasible_r]  # (r, h11(X), mu(X))
    trace.add(
        "blowups_of_fake_plane",
        {"r": feasible_r},
        {"h11": [o[1] for o in options], "mu": [o[2] for o in options]},
        Citation.BLOWDOWN_BOUND,
    )
    if x is None:
        return [CaseLabel.make("2-a", blowups=tuple(feasible_r))], []
    hits = [o for o in options if (x.q, x.pg, x.h11) == (0, 0, o[1])]
    if hits:
        return [CaseLabel.make("2-a", blowups=hits[0][0], mu=hits[0][2])], []
    return [], [CaseLabel.make("2-a", h11=x.h11)]


def _irrational_ruled(trace: Trace, x: SurfaceInvariants | None):
    _lookup(trace, "ruled_fibres")
    cert = fibres.ruled_fibre_certificate(4)
    balanced = {m: [list(s) for s in v] for m, v in cert.items() if m and v}
    trace.add(
        "ruled_fibre_certificate",
        {"max_blowups_per_fibre": 4},
        {"balanced_fibres": balanced},
        Citation.RULED_FIBRES,
    )
    if list(balanced) != [2]:
        raise RuntimeError("unexpected balanced ruled fibres")
    string = "(-2)-(-1)-(-2)"
    if x is None:
        return [CaseLabel.make("2-b", fibre_string=string)], []
    mu = x.h11 - 2
    if x.q >= 1 and x.pg == 0 and mu % 2 == 0:
        return [CaseLabel.make("2-b", fibres=mu // 2, fibre_string=string)], []
    return [], [CaseLabel.make("2-b", h11=x.h11)]


def _rational(trace: Trace, x: SurfaceInvariants | None):
    _lookup(trace, "rational_near_max", Citation.EXTERNAL_RATIONAL)
    if x is None:
        return [CaseLabel.make(t) for t in ("2-c", "2-d", "2-e", "2-f")], []
    # Picard numbers: F_e has rho = 2 and each blow-up adds one
    h = x.h11
    cases = []
    if h == 2:
        cases.append(CaseLabel.make("2-c"))
    if h >= 4 and h % 2 == 0:
        cases.append(CaseLabel.make("2-d", fibres=(h - 2) // 2))
    if h == 4:
        cases.append(CaseLabel.make("2-e"))
    if h == 3:
        cases.append(CaseLabel.make("2-f"))
    trace.add(
        "rational_picard_match",
        {"h11": h},
        {"cases": [c.tag for c in cases]},
        Citation.EXTERNAL_RATIONAL,
    )
    if cases:
        return cases, []
    return [], [CaseLabel.make(t, h11=h) for t in ("2-c", "2-d", "2-e", "2-f")]


_BRANCHES = {
    Kind.KAPPA_NONNEG: _kappa_nonneg,
    Kind.IRRATIONAL_RULED: _irrational_ruled,
    Kind.RATIONAL: _rational,
}


def nonminimal_decision_tree(kind, invariants: SurfaceInvariants | None = None) -> ClassificationVerdict:
    """Non-nef ``K_X`` with ``mu = h11 - 2``.

    Without ``invariants`` every case reachable on the branch is emitted;
    with them, only the cases whose Picard bookkeeping matches.
    """
    kind = Kind(kind)
    trace = Trace()
    cases, excluded = _BRANCHES[kind](trace, invariants)
    return ClassificationVerdict(tuple(cases), trace.freeze(), tuple(excluded))


def _applicable_kinds(x: SurfaceInvariants) -> list[Kind]:
    kinds = [Kind.KAPPA_NONNEG]
    if x.pg == 0 and x.q >= 1:
        kinds.append(Kind.IRRATIONAL_RULED)
    if x.pg == 0 and x.q == 0:
        kinds.append(Kind.RATIONAL)
    return kinds


def classify_near_max(q: int, pg: int, h11: int, nef_canonical: bool = True, kind=None) -> ClassificationVerdict:
    """Surfaces with ``mu = h11 - 2``.

    With nef ``K`` the invariants must satisfy the orbifold BMY bound, else
    ``ValueError("violates orbifold BMY")``.  Otherwise ``kind`` picks one
    branch of the non-minimal tree; ``None`` runs every branch compatible
    with ``q`` and ``pg``.
    """
    x = noether(q, pg, h11)
    if h11 < 2:
        raise ValueError("mu = h11 - 2 needs h11 >= 2")
    trace = Trace()
    if nef_canonical:
        cases, excluded = _near_max_nef(x, trace)
        return ClassificationVerdict(tuple(cases), trace.freeze(), tuple(excluded))
    if kind is None:
        kinds = _applicable_kinds(x)
    else:
        kinds = [Kind(kind)]
        if kinds[0] not in _applicable_kinds(x):
            raise ValueError(f"invariants {(q, pg, h11)} incompatible with {kinds[0].value}")
    cases, excluded = [], []
    for k in kinds:
        v = nonminimal_decision_tree(k, x)
        trace.extend(v.trace)
        cases += v.cases
        excluded += v.excluded
    return ClassificationVerdict(tuple(cases), trace.freeze(), tuple(excluded))
