"""Geography tests: point classification, scan ordering, CSV determinism."""

from fractions import Fraction

import pytest

from pluricot.errors import ResourceLimitError
from pluricot.geography import (
    CSV_HEADER,
    classify_point,
    scan,
    to_csv,
    write_csv,
)


def test_classify_product_quotient_point():
    cell = classify_point(32, 16)
    assert cell.noether_ok and cell.bmy_ok and cell.noether_line_ok
    assert cell.segre_positive
    assert cell.min_n == 4
    assert cell.u == Fraction(2)


def test_classify_diagonal_point():
    cell = classify_point(6, 6)
    assert cell.noether_ok and cell.bmy_ok
    assert not cell.segre_positive
    assert cell.min_n is None
    assert cell.u == 1


def test_classify_beyond_bmy():
    cell = classify_point(40, 8)
    assert cell.noether_ok  # 48 = 12 * 4
    assert not cell.bmy_ok  # 40 > 24
    assert cell.segre_positive
    assert cell.u == Fraction(5)


def test_classify_non_noether_point_still_gets_min_n():
    # Admissibility flags are advisory; the threshold is pure arithmetic.
    cell = classify_point(33, 16)
    assert not cell.noether_ok
    assert cell.min_n == 4


def test_classify_zero_c2_has_no_u():
    cell = classify_point(12, 0)
    assert cell.u is None
    assert cell.min_n == 3


def test_scan_single_point_matches_classify():
    assert scan((32, 32), (16, 16)) == [classify_point(32, 16)]


def test_scan_row_major_order():
    cells = scan((0, 1), (5, 7))
    coords = [(cell.c1_sq, cell.c2) for cell in cells]
    assert coords == [(0, 5), (0, 6), (0, 7), (1, 5), (1, 6), (1, 7)]


def test_scan_noether_flag_is_definitional():
    for cell in scan((0, 36), (0, 36)):
        assert cell.noether_ok == ((cell.c1_sq + cell.c2) % 12 == 0)


def test_scan_contains_known_cell():
    cells = scan((24, 48), (12, 24))
    target = [cell for cell in cells if (cell.c1_sq, cell.c2) == (32, 16)]
    assert len(target) == 1
    assert target[0].min_n == 4


def test_scan_rejects_empty_and_oversize():
    with pytest.raises(ValueError):
        scan((5, 4), (0, 0))
    with pytest.raises(ResourceLimitError):
        scan((0, 99), (0, 99), max_cells=100)


def test_min_n_nonincreasing_in_c1_at_fixed_c2():
    for c2 in (8, 12, 16):
        previous = None
        for cell in scan((c2 + 1, 120), (c2, c2)):
            assert cell.min_n is not None
            if previous is not None:
                assert cell.min_n <= previous
            previous = cell.min_n


def test_csv_format():
    text = to_csv(scan((32, 32), (16, 16)))
    assert text == CSV_HEADER + "\n" + "32,16,1,1,1,2,1,4\n"
    diag = to_csv(scan((6, 6), (6, 6)))
    assert diag.splitlines()[1] == "6,6,1,1,0,1,1,"
    no_u = to_csv(scan((12, 12), (0, 0)))
    assert no_u.splitlines()[1] == "12,0,1,0,1,,,3"


def test_csv_is_deterministic(tmp_path):
    path_a = tmp_path / "a.csv"
    path_b = tmp_path / "b.csv"
    assert write_csv(scan((0, 24), (0, 24)), str(path_a)) == 625
    assert write_csv(scan((0, 24), (0, 24)), str(path_b)) == 625
    raw_a = path_a.read_bytes()
    assert raw_a == path_b.read_bytes()
    assert b"\r" not in raw_a
    assert raw_a.endswith(b"\n")
