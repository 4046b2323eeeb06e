"""Report documents: lossless serialization and plain-text rendering.

A :class:`ReportDocument` echoes the inputs, carries typed result entries
and warnings, and round-trips through JSON without loss: exact rationals are
serialized as numerator/denominator pairs, never as decimals.  The text
renderer prints every rational exactly, followed by a decimal approximation
that is explicitly marked approximate (a ``~`` prefix, 4 significant digits).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .catalog import Family, FamilySurface
from .chern import SurfaceInvariants
from .criteria import CriterionReport, ThresholdResult, Verdict

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class ChiValue:
    """A single Euler-characteristic evaluation, for the chi command."""

    n: int
    surface: SurfaceInvariants
    chi: Fraction


@dataclass
class ReportDocument:
    input_echo: Dict[str, Any]
    results: List[Any] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION


def format_exact(x: Any) -> str:
    """Exact textual form of a number: integers plain, fractions as p/q."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def format_approx(x: Any) -> str:
    """Decimal approximation, 4 significant digits, marked with a ~ prefix."""
    return f"~{float(x):.4g}"


def format_rational(x: Any) -> str:
    """Exact value, with an approximation appended when it is not an integer."""
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{format_exact(x)} ({format_approx(x)})"
    return format_exact(x)


# ---------------------------------------------------------------------------
# JSON encoding: every value self-describing, every rational a num/den pair.

def _encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, (Verdict, Family)):
        return value.value
    if isinstance(value, SurfaceInvariants):
        return {
            "kind": "surface",
            "c1_sq": value.c1_sq,
            "c2": value.c2,
            "pg": value.pg,
            "q": value.q,
        }
    if isinstance(value, CriterionReport):
        return {
            "kind": "criterion_report",
            "n": value.n,
            "chi": _encode(value.chi),
            "h0_lower": _encode(value.h0_lower),
            "veronese_dim": value.veronese_dim,
            "theorem_b_holds": value.theorem_b_holds,
            "q_of_n": value.q_of_n,
            "deg_psi_upper": value.deg_psi_upper,
            "verdict": value.verdict.value,
        }
    if isinstance(value, ThresholdResult):
        return {
            "kind": "threshold",
            "surface": _encode(value.surface),
            "m": value.m,
            "alpha": value.alpha,
            "beta": value.beta,
            "gamma": value.gamma,
            "delta": value.delta,
            "root_lower": _encode(value.root_lower),
            "root_upper": _encode(value.root_upper),
            "min_n": value.min_n,
        }
    if isinstance(value, FamilySurface):
        return {
            "kind": "family_surface",
            "family": value.family.value,
            "invariants": _encode(value.invariants),
            "gg_period": value.gg_period,
            "parameters": list(value.parameters),
            "notes": list(value.notes),
        }
    if isinstance(value, ChiValue):
        return {
            "kind": "chi_value",
            "n": value.n,
            "surface": _encode(value.surface),
            "chi": _encode(value.chi),
        }
    if isinstance(value, (list, tuple)):
        return [_encode(item) for item in value]
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    raise TypeError(f"cannot serialize {value!r}")


def _decode(value: Any) -> Any:
    if isinstance(value, list):
        return [_decode(item) for item in value]
    if not isinstance(value, dict):
        return value
    if set(value) == {"num", "den"}:
        return Fraction(value["num"], value["den"])
    kind = value.get("kind")
    if kind == "surface":
        return SurfaceInvariants(
            c1_sq=value["c1_sq"], c2=value["c2"], pg=value["pg"], q=value["q"]
        )
    if kind == "criterion_report":
        return CriterionReport(
            n=value["n"],
            chi=_decode(value["chi"]),
            h0_lower=_decode(value["h0_lower"]),
            veronese_dim=value["veronese_dim"],
            theorem_b_holds=value["theorem_b_holds"],
            q_of_n=value["q_of_n"],
            deg_psi_upper=value["deg_psi_upper"],
            verdict=Verdict(value["verdict"]),
        )
    if kind == "threshold":
        return ThresholdResult(
            surface=_decode(value["surface"]),
            m=value["m"],
            alpha=value["alpha"],
            beta=value["beta"],
            gamma=value["gamma"],
            delta=value["delta"],
            root_lower=_decode(value["root_lower"]),
            root_upper=_decode(value["root_upper"]),
            min_n=value["min_n"],
        )
    if kind == "family_surface":
        return FamilySurface(
            family=Family(value["family"]),
            invariants=_decode(value["invariants"]),
            gg_period=value["gg_period"],
            parameters=tuple(value["parameters"]),
            notes=tuple(value["notes"]),
        )
    if kind == "chi_value":
        return ChiValue(
            n=value["n"], surface=_decode(value["surface"]), chi=Fraction(_decode(value["chi"]))
        )
    return {key: _decode(item) for key, item in value.items()}


def to_json(doc: ReportDocument) -> str:
    payload = {
        "schema_version": doc.schema_version,
        "input_echo": _encode(doc.input_echo),
        "results": [_encode(entry) for entry in doc.results],
        "warnings": list(doc.warnings),
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def from_json(text: str) -> ReportDocument:
    payload = json.loads(text)
    return ReportDocument(
        input_echo=_decode(payload["input_echo"]),
        results=[_decode(entry) for entry in payload["results"]],
        warnings=list(payload["warnings"]),
        schema_version=payload["schema_version"],
    )


# ---------------------------------------------------------------------------
# Text rendering.

def _surface_line(surface: SurfaceInvariants) -> str:
    parts = [f"c1_sq = {surface.c1_sq}", f"c2 = {surface.c2}"]
    if surface.pg is not None:
        parts.append(f"pg = {surface.pg}")
    if surface.q is not None:
        parts.append(f"q = {surface.q}")
    return ", ".join(parts)


def _render_entry(entry: Any, out: List[str]) -> None:
    if isinstance(entry, ChiValue):
        out.append(f"chi(S^{entry.n} Omega) on ({_surface_line(entry.surface)}):")
        out.append(f"  chi = {format_rational(entry.chi)}")
        return
    if isinstance(entry, CriterionReport):
        out.append(f"n = {entry.n}:")
        out.append(f"  chi(S^n Omega) = {format_rational(entry.chi)}")
        if entry.h0_lower is not None:
            out.append(f"  h0 lower bound = {format_rational(entry.h0_lower)}")
        out.append(f"  veronese bound = {entry.veronese_dim}")
        out.append(f"  Q(n) = {entry.q_of_n}")
        out.append(f"  chern inequality holds = {'yes' if entry.theorem_b_holds else 'no'}")
        if entry.deg_psi_upper is not None:
            out.append(f"  deg psi upper bound = {entry.deg_psi_upper}")
        out.append(f"  verdict = {entry.verdict.value}")
        return
    if isinstance(entry, ThresholdResult):
        out.append(f"threshold (multiples of m = {entry.m}):")
        out.append(
            f"  alpha = {entry.alpha}, beta = {entry.beta}, "
            f"gamma = {entry.gamma}, delta = {entry.delta}"
        )
        if entry.root_lower is not None and entry.root_upper is not None:
            out.append(
                f"  root in [{format_exact(entry.root_lower)}, {format_exact(entry.root_upper)}]"
                f" ({format_approx(entry.root_upper)})"
            )
        else:
            out.append("  no real root: criterion holds for every n >= 3")
        out.append(f"  minimal admissible n = {entry.min_n}")
        return
    if isinstance(entry, FamilySurface):
        out.append(f"family {entry.family.value}, parameters {entry.parameters}:")
        out.append(f"  invariants: {_surface_line(entry.invariants)}")
        out.append(f"  chi(O) = {format_rational(entry.invariants.chi_O)}")
        out.append(f"  second Segre number = {entry.invariants.segre}")
        out.append(f"  global generation period = {entry.gg_period}")
        for note in entry.notes:
            out.append(f"  note: {note}")
        return
    out.append(str(entry))


def render_text(doc: ReportDocument) -> str:
    out: List[str] = [f"schema_version: {doc.schema_version}"]
    if doc.input_echo:
        out.append("input:")
        for key, value in doc.input_echo.items():
            out.append(f"  {key}: {value}")
    if doc.results:
        out.append("results:")
        for entry in doc.results:
            body: List[str] = []
            _render_entry(entry, body)
            out.extend("  " + line for line in body)
    if doc.warnings:
        out.append("warnings:")
        for warning in doc.warnings:
            out.append(f"  - {warning}")
    return "\n".join(out) + "\n"
