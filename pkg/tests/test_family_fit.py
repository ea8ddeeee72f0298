import json
from fractions import Fraction

import pytest

from distpoly.errors import (
    DuplicateSampleParameterError,
    InconsistentSamplesError,
    InsufficientSamplesError,
    InvalidParameterError,
)
from distpoly.family_fit import (
    family,
    fit,
    format_rational_poly,
    sample_counts,
    verify_formula,
)

F = Fraction


def fit_j5(samples=(3, 4, 5), degree=2):
    return fit(sample_counts(family("jahangir", 5), samples), degree)


def test_family_registry():
    fam = family("jahangir", 5)
    assert fam.name == "jahangir"
    assert fam.fixed_dict() == {"n": 5}
    assert fam.label() == "jahangir(n=5)"
    assert fam.build(3).vertex_count == 16
    plain = family("cycle")
    assert plain.label() == "cycle"
    assert plain.build(5).edge_count == 5
    assert family("jahangir") == family("jahangir", 5)


def test_family_registry_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        family("moebius")
    with pytest.raises(InvalidParameterError):
        family("cycle", 3)
    with pytest.raises(InvalidParameterError):
        family("jahangir", 0)


def test_sample_table_layout():
    table = sample_counts(family("jahangir", 5), (3, 4))
    assert table.max_k == 6
    assert table.m_values() == (3, 4)
    assert table.row(3) == (0, 18, 24, 33, 24, 18, 3)
    assert table.per_distance(4) == (24, 34, 52, 48, 40, 12)
    assert table.count(3, 6) == 3
    assert table.count(3, 9) == 0
    with pytest.raises(KeyError):
        table.row(7)


def test_sample_table_pads_short_rows():
    # cycle(3) has diameter 1, cycle(6) diameter 3: rows are padded to align
    table = sample_counts(family("cycle"), (3, 6))
    assert table.max_k == 3
    assert table.row(3) == (0, 3, 0, 0)
    assert table.row(6) == (0, 6, 6, 3)


def test_fit_recovers_jahangir_5_closed_forms():
    formula = fit_j5()
    assert formula.fitted_degree == 2
    assert formula.sampled_m == (3, 4, 5)
    assert formula.valid_domain == (3, 5)
    assert formula.max_k == 6
    assert formula.per_k_polys == (
        (F(0), F(6)),
        (F(0), F(13, 2), F(1, 2)),
        (F(0), F(5), F(2)),
        (F(0), F(-4), F(4)),
        (F(0), F(-6), F(4)),
        (F(0), F(-5), F(2)),
    )
    assert formula.wiener_polynomial() == (F(0), F(-42), F(55))


def test_fit_accepts_unsorted_samples():
    assert fit_j5(samples=(5, 3, 4)).sampled_m == (3, 4, 5)
    assert fit_j5(samples=(5, 3, 4)).per_k_polys == fit_j5().per_k_polys


def test_fit_overdetermined_consistent_samples():
    """Extra samples beyond degree + 1 must be reproduced exactly."""
    assert fit_j5(samples=(3, 4, 5, 6, 7, 8)).per_k_polys == fit_j5().per_k_polys


def test_fit_star_family():
    formula = fit(sample_counts(family("star"), (2, 3, 4)), 2)
    assert formula.per_k_polys == ((F(0), F(1)), (F(0), F(-1, 2), F(1, 2)))


def test_fit_wheel_family():
    formula = fit(sample_counts(family("wheel"), (5, 6, 7)), 2)
    assert formula.per_k_polys == ((F(0), F(2)), (F(0), F(-3, 2), F(1, 2)))


def test_fit_inconsistent_samples_detected():
    # pair counts of cycles are parity-dependent, not one quadratic in m
    with pytest.raises(InconsistentSamplesError):
        fit(sample_counts(family("cycle"), (3, 4, 5, 6)), 2)
    # path counts hit a max(m - k, 0) kink, which no linear formula follows
    with pytest.raises(InconsistentSamplesError):
        fit(sample_counts(family("path"), (2, 3, 4)), 1)


def test_fit_duplicate_samples_rejected():
    table = sample_counts(family("jahangir", 5), (3, 4, 3))
    with pytest.raises(DuplicateSampleParameterError) as excinfo:
        fit(table, 1)
    assert excinfo.value.m == 3


def test_fit_too_few_samples():
    with pytest.raises(InsufficientSamplesError):
        fit(sample_counts(family("jahangir", 5), (3, 4)), 2)


def test_fit_negative_degree():
    with pytest.raises(InvalidParameterError):
        fit(sample_counts(family("jahangir", 5), (3,)), -1)


def test_predict():
    formula = fit_j5()
    assert formula.predict(10, 1) == 60
    assert formula.predict(10, 4) == 360
    assert formula.predict(10, 6) == 150
    assert formula.predict(10, 99) == 0
    with pytest.raises(InvalidParameterError):
        formula.poly_for_distance(0)
    with pytest.raises(InvalidParameterError):
        formula.poly_for_distance(7)


def test_verify_formula_holdout_passes():
    formula = fit_j5()
    report = verify_formula(formula, range(6, 13))
    assert report.passed
    assert report.holdout_m == (6, 7, 8, 9, 10, 11, 12)
    assert report.comparisons == 7 * 6
    assert report.mismatches == ()


def test_verify_formula_empty_holdout_is_vacuous():
    report = verify_formula(fit_j5(), ())
    assert report.passed
    assert report.comparisons == 0


def test_verify_formula_rejects_overlap():
    with pytest.raises(InvalidParameterError):
        verify_formula(fit_j5(), (5, 6))


def test_verify_formula_catches_wrong_formula():
    # fit even cycles only, then hold out odd ones: the parity split shows up
    formula = fit(sample_counts(family("cycle"), (4, 6, 8)), 2)
    report = verify_formula(formula, (5, 7))
    assert not report.passed
    assert report.comparisons > 0
    first = report.mismatches[0]
    assert first.m == 5
    assert first.k == 2
    assert first.predicted == F(17, 4)
    assert first.actual == 5


def test_formula_json_shape():
    payload = json.loads(fit_j5().to_json())
    assert list(payload.keys()) == [
        "family", "fixed", "fitted_degree", "sampled_m", "valid_domain",
        "max_k", "per_k", "wiener_coefficients",
    ]
    assert payload["family"] == "jahangir"
    assert payload["fixed"] == {"n": 5}
    assert payload["sampled_m"] == [3, 4, 5]
    assert payload["max_k"] == 6
    entry = payload["per_k"][3]
    assert entry["k"] == 4
    assert entry["coefficients"] == [
        {"num": 0, "den": 1}, {"num": -4, "den": 1}, {"num": 4, "den": 1},
    ]
    assert payload["wiener_coefficients"] == [
        {"num": 0, "den": 1}, {"num": -42, "den": 1}, {"num": 55, "den": 1},
    ]


def test_holdout_report_json_shape():
    report = verify_formula(fit(sample_counts(family("cycle"), (4, 6, 8)), 2), (5,))
    payload = json.loads(report.to_json())
    assert list(payload.keys()) == ["holdout", "comparisons", "pass", "mismatches"]
    assert payload["pass"] is False
    mismatch = payload["mismatches"][0]
    assert list(mismatch.keys()) == ["m", "k", "predicted", "actual"]
    assert mismatch["predicted"] == {"num": 17, "den": 4}


def test_format_rational_poly():
    assert format_rational_poly((F(0), F(6))) == "6m"
    assert format_rational_poly((F(0), F(13, 2), F(1, 2))) == "(1/2)m^2 + (13/2)m"
    assert format_rational_poly((F(0), F(-4), F(4))) == "4m^2 - 4m"
    assert format_rational_poly((F(0), F(-42), F(55))) == "55m^2 - 42m"
    assert format_rational_poly(()) == "0"
    assert format_rational_poly((F(3),)) == "3"
    assert format_rational_poly((F(3), F(0), F(-1))) == "-m^2 + 3"
    assert format_rational_poly((F(0), F(1))) == "m"
    assert format_rational_poly((F(-1, 2),)) == "-(1/2)"
    assert format_rational_poly((F(0), F(2)), variable="k") == "2k"
