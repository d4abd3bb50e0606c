"""Direct summation of the three second-order series and their agreement."""

import pytest

from qid import SELECTORS, mock_theta_coefficient, mock_theta_series


def test_pinned_coefficients():
    b = mock_theta_series("B1", 6)
    assert [b.coefficient(n) for n in range(7)] == [1, 2, 4, 6, 9, 14, 20]
    a = mock_theta_series("A2", 5)
    assert [a.coefficient(n) for n in range(6)] == [0, 1, 2, 3, 5, 8]
    mu = mock_theta_series("MU2", 5)
    assert [mu.coefficient(n) for n in range(6)] == [1, -1, 1, 2, -1, -4]


def test_coefficient_accessor():
    assert mock_theta_coefficient("B1", 0) == 1
    assert mock_theta_coefficient("A1", 0) == 0
    assert mock_theta_coefficient("B1", 3) == 6
    with pytest.raises(ValueError):
        mock_theta_coefficient("B1", -1)
    with pytest.raises(ValueError):
        mock_theta_series("C9", 5)


def test_multi_form_agreement_300():
    assert mock_theta_series("B1", 300) == mock_theta_series("B2", 300)
    assert mock_theta_series("B2", 300) == mock_theta_series("B3", 300)
    assert mock_theta_series("A1", 300) == mock_theta_series("A2", 300)


def test_integrality_and_sign_300():
    for sel in ("A1", "B1"):
        s = mock_theta_series(sel, 300)
        for n in range(301):
            c = s.coefficient(n)
            assert c.denominator == 1 and c >= 0, (sel, n, c)
    mu = mock_theta_series("MU2", 300)
    for n in range(301):
        assert mu.coefficient(n).denominator == 1, n


def test_parity_characterization_300():
    b = mock_theta_series("B1", 300)
    pronic_doubled = {2 * k * k + 2 * k for k in range(13)}
    for n in range(301):
        odd = b.coefficient(n).numerator % 2 == 1
        assert odd == (n in pronic_doubled), n


def test_selectors_cover_all_forms():
    assert set(SELECTORS) == {"A1", "A2", "B1", "B2", "B3", "MU2"}
