"""Trace steps, citations, and deterministic JSON serialization."""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["Citation", "TraceStep", "Trace", "jsonable", "canonical_json", "content_hash", "Report"]


class Citation(str, enum.Enum):
    """Closed vocabulary for the fact each trace step relies on."""

    HODGE_INDEX = "Hodge index bound on disjoint nodal curves"
    NOETHER = "Noether formula"
    CONTRACTION = "contraction of disjoint nodal curves"
    DISCREPANCY = "discrepancy system D.E_i = 2 + E_i^2"
    ORBIFOLD_EULER = "orbifold Euler number"
    BMY_NEF = "orbifold BMY inequality, K nef"
    BMY_ANTI_NEF = "orbifold BMY inequality, -K nef"
    SINGULAR_POINT_BOUND = "singular point count from e_orb >= 0"
    SQUARE_DISCRIMINANT = "finite-index sublattice of a unimodular lattice has square determinant"
    ISOTROPIC_IMAGE = "image of M/2M is totally isotropic in L/2L"
    DOUBLY_EVEN_KERNEL = "kernel of M/2M -> L/2L is doubly even"
    BLOWDOWN_BOUND = "disjoint nodal curves under blow-down to the minimal model"
    FIBRATION_EULER = "Euler number of an elliptic fibration"
    RULED_FIBRES = "nodal curves in fibres of a ruled surface"
    CLASSIFICATION = "Enriques-Kodaira classification (lookup)"
    EXTERNAL_RATIONAL = "classification of rational surfaces with many nodes (lookup)"
    EXISTENCE = "known examples and open cases (lookup)"


def jsonable(obj):
    """Convert to plain JSON types; rationals become ``"p/q"`` strings."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


@dataclass(frozen=True)
class TraceStep:
    step: int
    operation: str
    inputs: dict
    outputs: dict
    citation: Citation

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "operation": self.operation,
            "inputs": jsonable(self.inputs),
            "outputs": jsonable(self.outputs),
            "citation": self.citation.value,
        }


class Trace:
    def __init__(self):
        self.steps: list[TraceStep] = []

    def add(self, operation: str, inputs: dict, outputs: dict, citation: Citation) -> TraceStep:
        step = TraceStep(len(self.steps) + 1, operation, dict(inputs), dict(outputs), Citation(citation))
        self.steps.append(step)
        return step

    def extend(self, steps):
        for s in steps:
            self.add(s.operation, s.inputs, s.outputs, s.citation)

    def freeze(self) -> tuple[TraceStep, ...]:
        return tuple(self.steps)


_RESERVED = ("title", "inputs", "trace", "version", "hash")


@dataclass
class Report:
    """Envelope for one CLI invocation.

    The result fields sit at the top level next to the envelope keys, and
    ``hash`` is the SHA-256 of the canonical JSON of everything else.
    """

    title: str
    inputs: dict
    result: dict
    trace: list = field(default_factory=list)
    version: str = ""

    def to_json(self) -> dict:
        clash = set(self.result) & set(_RESERVED)
        if clash:
            raise ValueError(f"result keys clash with envelope: {sorted(clash)}")
        body = {
            "title": self.title,
            "inputs": jsonable(self.inputs),
            **jsonable(self.result),
            "trace": jsonable(list(self.trace)),
            "version": self.version,
        }
        body["hash"] = content_hash(body)
        return body

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        data = self.to_json()
        lines = [data["title"], "=" * len(data["title"])]
        for key in sorted(k for k in data if k not in _RESERVED):
            lines.append(f"{key}: {_short(data[key])}")
        if data["trace"]:
            lines.append("")
            rows = [("#", "operation", "inputs", "outputs", "citation")]
            for s in data["trace"]:
                rows.append(
                    (str(s["step"]), s["operation"], _short(s["inputs"]), _short(s["outputs"]), s["citation"])
                )
            widths = [max(len(r[i]) for r in rows) for i in range(4)]
            for r in rows:
                lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[4])
        lines.append("")
        lines.append(f"version {data['version']}  hash {data['hash']}")
        return "\n".join(lines) + "\n"


def _short(value) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={_short(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(_short(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value).lower() if isinstance(value, bool) else str(value)
