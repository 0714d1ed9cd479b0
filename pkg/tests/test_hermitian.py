from fractions import Fraction as F

import pytest

from interlacekit import (
    GaussianRational,
    HermitianMatrix,
    InputFormatError,
    InterlaceVerdict,
    Polynomial,
    SplitMix64,
    bordered_identity,
    cauchy_check,
    char_poly,
    det_exact,
    eigen_intervals,
    is_hermitian,
    principal_submatrix,
    random_hermitian,
    trial_rng,
)

GR = GaussianRational.of


def det_cofactor(grid):
    """Independent oracle: Laplace expansion along the first row."""
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = GR(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in grid[1:]]
        term = grid[0][j] * det_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def lagrange_char(matrix):
    """Independent oracle: interpolate det(tI - A) at t = 0 .. n."""
    n = matrix.n
    points = []
    for t in range(n + 1):
        shifted = [
            [
                GR(t) - matrix.entries[i][j] if i == j else -matrix.entries[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        d = det_cofactor(shifted) if n <= 4 else det_exact(shifted)
        assert d.im == 0
        points.append((F(t), d.re))
    result = Polynomial()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial([yi])
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * Polynomial([-xj / (xi - xj), 1 / (xi - xj)])
        result = result + term
    return result


def test_gaussian_rational_arithmetic():
    a = GR(1, 2)
    b = GR(3, -1)
    assert a + b == GR(4, 1)
    assert a - b == GR(-2, 3)
    assert a * b == GR(5, 5)
    assert a.conjugate() == GR(1, -2)
    assert (a * b) / b == a
    assert -a == GR(-1, -2)
    assert a + 1 == GR(2, 2)
    assert F(1, 2) * a == GR(F(1, 2), 1)
    assert str(GR(1, -2)) == "1 - 2i"
    assert str(GR(F(1, 3))) == "1/3"
    with pytest.raises(ZeroDivisionError):
        a / GR(0)


def test_is_hermitian():
    assert is_hermitian([[GR(1), GR(0, 1)], [GR(0, -1), GR(2)]])
    assert not is_hermitian([[GR(1), GR(0, 1)], [GR(0, 1), GR(2)]])
    assert not is_hermitian([[GR(0, 1)]])
    with pytest.raises(InputFormatError):
        is_hermitian([[GR(1), GR(2)]])


def test_constructor_names_the_defect():
    with pytest.raises(InputFormatError, match=r"\(0, 1\)"):
        HermitianMatrix([[GR(0), GR(1)], [GR(2), GR(0)]])
    with pytest.raises(InputFormatError, match=r"diagonal entry \(1, 1\)"):
        HermitianMatrix([[GR(0), GR(0)], [GR(0), GR(0, 3)]])


def test_det_examples():
    assert det_exact([[GR(3)]]) == GR(3)
    m = HermitianMatrix([[GR(1), GR(0, 1)], [GR(0, -1), GR(1)]])
    assert det_exact(m) == GR(0)
    assert det_exact(HermitianMatrix.diagonal([2, 3, 4])) == GR(24)
    singular = [[GR(1), GR(2), GR(3)], [GR(2), GR(4), GR(6)], [GR(3), GR(6), GR(9)]]
    assert det_exact(singular) == GR(0)


def test_det_handles_zero_pivots():
    m = [[GR(0), GR(1)], [GR(1), GR(0)]]
    assert det_exact(m) == GR(-1)
    m3 = [
        [GR(0), GR(0), GR(1)],
        [GR(0), GR(1), GR(0)],
        [GR(1), GR(0), GR(0)],
    ]
    assert det_exact(m3) == GR(-1)


def test_det_against_cofactor_oracle():
    for trial in range(100):
        rng = trial_rng(2024, trial)
        n = rng.int_between(1, 4)
        m = random_hermitian(rng, n, 9)
        assert det_exact(m) == det_cofactor([list(r) for r in m.entries])


def test_char_poly_examples():
    m = HermitianMatrix([[GR(1), GR(0, 1)], [GR(0, -1), GR(1)]])
    assert char_poly(m) == Polynomial([0, -2, 1])
    assert char_poly(HermitianMatrix.diagonal([1, 2])) == Polynomial([2, -3, 1])
    tri = HermitianMatrix(
        [[GR(2), GR(1), GR(0)], [GR(1), GR(2), GR(1)], [GR(0), GR(1), GR(2)]]
    )
    assert char_poly(tri) == Polynomial([-4, 10, -6, 1])


def test_char_poly_monic_and_degree():
    rng = SplitMix64(5)
    m = random_hermitian(rng, 6, 10)
    p = char_poly(m)
    assert p.degree == 6
    assert p.leading_coefficient() == 1


def test_char_poly_against_interpolation_oracle():
    for trial in range(30):
        rng = trial_rng(777, trial)
        n = rng.int_between(1, 4)
        m = random_hermitian(rng, n, 8)
        assert char_poly(m) == lagrange_char(m)


def test_char_poly_fraction_entries_take_generic_path():
    half = F(1, 2)
    m = HermitianMatrix(
        [
            [GR(half), GR(1, half)],
            [GR(1, -half), GR(2)]
        ]
    )
    assert not m.is_gaussian_integer()
    p = char_poly(m)
    # det(xI - A) = (x - 1/2)(x - 2) - (1 + i/2)(1 - i/2)
    assert p == Polynomial([1 - F(5, 4), -half - 2, 1])
    assert p == lagrange_char(m)


def test_principal_submatrix():
    tri = HermitianMatrix(
        [[GR(2), GR(1), GR(0)], [GR(1), GR(2), GR(1)], [GR(0), GR(1), GR(2)]]
    )
    middle = principal_submatrix(tri, 1)
    assert middle == HermitianMatrix.diagonal([2, 2])
    last = principal_submatrix(tri, 2)
    assert last == HermitianMatrix([[GR(2), GR(1)], [GR(1), GR(2)]])
    with pytest.raises(InputFormatError):
        principal_submatrix(tri, 3)
    with pytest.raises(InputFormatError):
        principal_submatrix(HermitianMatrix.diagonal([1]), 0)


def test_bordered_identity_examples():
    m = HermitianMatrix([[GR(0), GR(1)], [GR(1), GR(0)]])
    report = bordered_identity(m, 1)
    assert report.exact_match
    assert report.lhs == Polynomial([-1, -1, 1])
    assert report.rhs == report.lhs

    diag = HermitianMatrix.diagonal([1, 2])
    report2 = bordered_identity(diag, 3)
    assert report2.exact_match
    assert report2.lhs == Polynomial([5, -6, 1])


def test_bordered_identity_random_and_rational_alpha():
    for trial in range(25):
        rng = trial_rng(31337, trial)
        n = rng.int_between(2, 6)
        m = random_hermitian(rng, n, 10)
        alpha = rng.rational(100, 100)
        report = bordered_identity(m, alpha)
        assert report.exact_match
        assert report.lhs.degree == n


def test_bordered_identity_rejects_tiny_matrices():
    with pytest.raises(InputFormatError):
        bordered_identity(HermitianMatrix.diagonal([4]), 1)


def test_identity_report_serialization():
    report = bordered_identity(HermitianMatrix.diagonal([1, 2]), F(1, 3))
    d = report.as_dict()
    assert d["exact_match"] is True
    assert d["alpha"] == "1/3"
    assert d["lhs_coeffs"] == d["rhs_coeffs"]
    assert "convention" in d


def test_eigen_intervals_counts_with_multiplicity():
    spectrum = eigen_intervals(HermitianMatrix.diagonal([2, 2, 5]), F(1, 64))
    assert spectrum.total_multiplicity == 3
    assert spectrum.multiplicities == (2, 1)
    for (lo, hi), root in zip(spectrum.intervals, [2, 5]):
        assert lo <= root <= hi
        assert hi - lo <= F(1, 64)


def test_eigen_intervals_against_numpy():
    numpy = pytest.importorskip("numpy")
    for trial in range(20):
        rng = trial_rng(606, trial)
        n = rng.int_between(2, 6)
        m = random_hermitian(rng, n, 10)
        a = numpy.array(
            [
                [complex(c.re, c.im) for c in row]
                for row in m.entries
            ]
        )
        expected = sorted(numpy.linalg.eigvalsh(a))
        spectrum = eigen_intervals(m, F(1, 2 ** 24))
        got = [
            (lo + hi) / 2
            for (lo, hi), mult in zip(spectrum.intervals, spectrum.multiplicities)
            for _ in range(mult)
        ]
        assert len(got) == n
        for ours, theirs in zip(got, expected):
            assert abs(float(ours) - theirs) < 1e-6


def test_cauchy_check_known_matrix():
    tri = HermitianMatrix(
        [[GR(2), GR(1), GR(0)], [GR(1), GR(2), GR(1)], [GR(0), GR(1), GR(2)]]
    )
    for k in range(3):
        report = cauchy_check(tri, k)
        assert report.verdict == InterlaceVerdict.INTERLACES
        assert report.n == 3
        assert report.deleted == k
        assert report.matrix_spectrum.total_multiplicity == 3
        assert report.submatrix_spectrum.total_multiplicity == 2


def test_cauchy_check_repeated_eigenvalues():
    m = HermitianMatrix.diagonal([3, 3, 3])
    report = cauchy_check(m, 1)
    assert report.verdict == InterlaceVerdict.INTERLACES
    assert report.matrix_spectrum.multiplicities == (3,)
    assert report.submatrix_spectrum.multiplicities == (2,)


def test_cauchy_report_serialization():
    report = cauchy_check(HermitianMatrix.diagonal([1, 4]), 0)
    d = report.as_dict()
    assert d["n"] == 2
    assert d["deleted"] == 0
    assert d["interlace"]["verdict"] == "Interlaces"
    assert len(d["matrix_spectrum"]) == 2
    assert len(d["submatrix_spectrum"]) == 1


def test_random_hermitian_is_deterministic_and_bounded():
    a = random_hermitian(SplitMix64(12), 5, 7)
    b = random_hermitian(SplitMix64(12), 5, 7)
    assert a == b
    assert is_hermitian(a)
    for row in a.entries:
        for c in row:
            assert abs(c.re) <= 7 and abs(c.im) <= 7
            assert c.re.denominator == 1 and c.im.denominator == 1


def test_random_hermitian_draw_order_is_pinned():
    rng = SplitMix64(0)
    m = random_hermitian(rng, 2, 10)
    probe = SplitMix64(0)
    d0 = probe.int_between(-10, 10)
    re01 = probe.int_between(-10, 10)
    im01 = probe.int_between(-10, 10)
    d1 = probe.int_between(-10, 10)
    assert m.entries[0][0] == GR(d0)
    assert m.entries[0][1] == GR(re01, im01)
    assert m.entries[1][0] == GR(re01, -im01)
    assert m.entries[1][1] == GR(d1)


def test_matrix_json_round_trip():
    m = random_hermitian(SplitMix64(9), 4, 10)
    obj = m.to_json_obj()
    assert obj["n"] == 4
    assert HermitianMatrix.from_json_obj(obj) == m


def test_matrix_json_diagnostics():
    with pytest.raises(InputFormatError, match="'n' and 'entries'"):
        HermitianMatrix.from_json_obj({"n": 2})
    with pytest.raises(InputFormatError, match="positive integer"):
        HermitianMatrix.from_json_obj({"n": 0, "entries": []})
    with pytest.raises(InputFormatError, match="row 0"):
        HermitianMatrix.from_json_obj({"n": 2, "entries": [[], []]})
    bad_cell = {
        "n": 2,
        "entries": [
            [["1", "0"], ["1", "0"]],
            [["1", "0"], ["1/0", "0"]],
        ],
    }
    with pytest.raises(InputFormatError, match=r"entry \(1, 1\)"):
        HermitianMatrix.from_json_obj(bad_cell)
    lopsided = {
        "n": 2,
        "entries": [
            [["1", "0"], ["2", "1"]],
            [["2", "1"], ["1", "0"]],
        ],
    }
    with pytest.raises(InputFormatError, match=r"\(0, 1\)"):
        HermitianMatrix.from_json_obj(lopsided)
