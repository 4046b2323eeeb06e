"""Report serialization round-trips and rational formatting."""

from fractions import Fraction

from pluricot.catalog import product_quotient
from pluricot.chern import SurfaceInvariants, chi_sym_cotangent
from pluricot.criteria import classify, corollary_c_threshold
from pluricot.report import (
    ChiValue,
    ReportDocument,
    format_approx,
    format_exact,
    format_rational,
    from_json,
    render_text,
    to_json,
)

PQ2 = SurfaceInvariants(32, 16)


def _sample_document() -> ReportDocument:
    member = product_quotient(2)
    off_lattice = SurfaceInvariants(6, 7)  # fractional chi exercises the pair encoding
    return ReportDocument(
        input_echo={"family": "product-quotient", "k": 2, "n": "2..4"},
        results=[
            member,
            ChiValue(n=1, surface=off_lattice, chi=chi_sym_cotangent(1, off_lattice)),
            classify(4, PQ2, True),
            corollary_c_threshold(PQ2, m=2),
        ],
        warnings=["global generation asserted by user, not verified"],
    )


def test_round_trip_is_lossless():
    doc = _sample_document()
    assert from_json(to_json(doc)) == doc


def test_rationals_serialize_as_pairs():
    text = to_json(_sample_document())
    assert '"num"' in text and '"den"' in text
    # The threshold root must not leak as a decimal approximation.
    assert "3.89" not in text
    recovered = from_json(text)
    root = recovered.results[3].root_lower
    assert isinstance(root, Fraction)


def test_schema_version_present():
    doc = _sample_document()
    assert doc.schema_version == "1"
    assert from_json(to_json(doc)).schema_version == "1"


def test_format_helpers():
    assert format_exact(Fraction(1, 3)) == "1/3"
    assert format_exact(Fraction(4, 2)) == "2"
    assert format_exact(7) == "7"
    assert format_approx(Fraction(1, 3)) == "~0.3333"
    assert format_rational(Fraction(1, 3)) == "1/3 (~0.3333)"
    assert format_rational(Fraction(20)) == "20"


def test_render_text_prints_exact_and_approx():
    rendered = render_text(_sample_document())
    assert rendered.startswith("schema_version: 1\n")
    assert "-29/6" in rendered  # exact value, never only a decimal
    assert "~" in rendered
    assert "verdict = GenericallyFinite" in rendered
    assert "minimal admissible n = 4" in rendered
    assert "warnings:" in rendered
