from fractions import Fraction

import pytest

import mvvolumes as mv


def test_worked_example():
    assert mv.volume("3,-1^3") == (Fraction(5, 9), 4)
    assert mv.completed("Q(3,-1^3)") == (Fraction(2, 3), 4)
    b = mv.breakdown("3,-1^3")
    assert len(b["graphs"]) == 3
    assert b["vol"] == "5/9 * pi^4"


def test_expansion():
    terms = dict((s, c) for c, s in mv.expand("7,-1^3"))
    assert terms == {
        "Q(7,-1^3)": 1,
        "Q(3,-1^3) x H(0)": Fraction(5, 2),
        "Q(-1^4) x H(2)": Fraction(3, 2),
        "Q(-1^4) x H(0)^2": Fraction(7, 8),
    }


@pytest.mark.parametrize("stratum,d,vol,comp", [r for r in mv.table_one() if r[1] <= 6])
def test_table_rows(stratum, d, vol, comp):
    assert mv.volume(stratum) == (vol, d)
    assert mv.completed(stratum) == (comp, d)


def test_counting_function():
    assert mv.count_metrics(0, "5,1", [5, 2, 1]) == 3
    assert mv.count_metrics(0, "5,1", [6, 2, 2]) == 2
    assert mv.count_metrics(0, "5,1", [4, 3, 1]) == 1
    assert mv.count_metrics(0, "5,1", [5, 2, 2]) == 0


def test_kontsevich():
    k = mv.kontsevich(0, 2, "5,1^3")
    coeffs = {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in k["labeled"]["terms"]}
    assert coeffs == {(2, 0): Fraction(3, 4), (0, 2): Fraction(3, 4)}
    with pytest.raises(mv.Unavailable):
        mv.kontsevich(0, 6, "7^2,1^2", source="table")


def test_square_tiled_and_cylinders():
    card, normalized = mv.st_count("3,-1^3", 20)
    assert card == 953430
    assert normalized == Fraction(95343, 2000)
    assert mv.cylinders("3,-1^3") == {1: Fraction(3, 5), 2: Fraction(2, 5)}


def test_pinning():
    consistent, values = mv.pin_minimal_strata(6)
    assert consistent
    assert values["H(2)"] == (Fraction(1, 120), 4)


def test_bad_input():
    with pytest.raises(ValueError):
        mv.volume("3,-1")
