import math
import random
from fractions import Fraction

import numpy as np
import pytest

from signedspectra import SignedGraph, complete_signed
from signedspectra.families import (
    extremal_graph,
    extremal_partition,
    near_extremal_graph,
    near_extremal_partition,
)
from signedspectra.polynomial import IntPolynomial
from signedspectra.spectra import (
    VertexPartition,
    c4free_bound_check,
    char_poly_exact,
    char_poly_of_int_matrix,
    check_quotient_containment,
    eigenvalues_sym,
    index,
    nonneg_eigenvector_form,
    quotient_matrix,
    rayleigh,
    root_multiplicity_exact,
    spectral_radius,
)
from signedspectra.switching import switching_equivalent

from conftest import random_signed_graph

# largest root of x^3 - x^2 - 7x + 1, frozen from 200-step rational bisection
INDEX_EXTREMAL_6 = 3.132637493579839


def test_complete_graph_spectra():
    rep = eigenvalues_sym(complete_signed(4, 1).adjacency_matrix())
    assert rep.eigenvalues == pytest.approx([3, -1, -1, -1], abs=1e-10)
    rep_neg = eigenvalues_sym(complete_signed(4, -1).adjacency_matrix())
    assert rep_neg.eigenvalues == pytest.approx([1, 1, 1, -3], abs=1e-10)
    assert rep_neg.lambda1 == pytest.approx(1.0, abs=1e-10)
    assert spectral_radius(complete_signed(4, -1)) == pytest.approx(3.0, abs=1e-10)


def test_extremal5_spectrum():
    # exact spectrum {sqrt5, 1, 0, -1, -sqrt5}: the cubic factor at n=5 is
    # x^3 - 5x and -1 enters with multiplicity n-4 = 1
    rep = eigenvalues_sym(extremal_graph(5).adjacency_matrix())
    s5 = math.sqrt(5)
    assert rep.eigenvalues == pytest.approx([s5, 1.0, 0.0, -1.0, -s5], abs=1e-10)


def test_jacobi_matches_independent_dense_solver():
    rng = random.Random(41)
    for _ in range(40):
        g = random_signed_graph(rng, rng.randint(1, 12))
        A = g.adjacency_matrix().astype(float)
        rep = eigenvalues_sym(A)
        ref = np.linalg.eigvalsh(A)[::-1]
        assert rep.eigenvalues == pytest.approx(ref, abs=1e-9)
        assert rep.residual <= 10 * rep.tol + 1e-12


def test_eigenvalues_sym_rejects_bad_input():
    with pytest.raises(ValueError):
        eigenvalues_sym(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ValueError):
        eigenvalues_sym(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eigenvalues_sym(np.zeros((2, 2)), tol=0.0)


def test_spectrum_report_invariants():
    rng = random.Random(42)
    for _ in range(40):
        g = random_signed_graph(rng, rng.randint(1, 10))
        rep = eigenvalues_sym(g.adjacency_matrix())
        n, m = g.n, g.m
        assert len(rep.eigenvalues) == n
        assert abs(rep.eigenvalues.sum()) <= 1e-9 * max(n, 1)
        assert abs((rep.eigenvalues**2).sum() - 2 * m) <= 1e-9 * max(n, 1)
        k = int(np.argmax(np.abs(rep.x)))
        assert rep.x[k] >= 0
        assert np.linalg.norm(rep.x) == pytest.approx(1.0, abs=1e-12)


def test_index_values():
    for n in (3, 5, 8):
        assert index(complete_signed(n, 1)) == pytest.approx(n - 1, abs=1e-10)
    assert index(extremal_graph(6)) == pytest.approx(INDEX_EXTREMAL_6, abs=1e-3)
    assert index(extremal_graph(6)) == pytest.approx(INDEX_EXTREMAL_6, abs=1e-10)
    for n in (5, 9, 17):
        lam = index(extremal_graph(n))
        assert n - 3 < lam < n - 2


def test_char_poly_exact_triangle():
    assert char_poly_exact(complete_signed(3, 1)) == IntPolynomial([-2, -3, 0, 1])


def test_char_poly_exact_matches_general_matrix_path():
    rng = random.Random(43)
    for _ in range(30):
        g = random_signed_graph(rng, rng.randint(0, 8))
        assert char_poly_exact(g) == char_poly_of_int_matrix(g.adjacency_matrix())


def test_char_poly_monic_zero_trace():
    rng = random.Random(44)
    for _ in range(30):
        g = random_signed_graph(rng, rng.randint(1, 9))
        p = char_poly_exact(g)
        assert p.degree == g.n and p.is_monic
        assert p.coeffs[g.n - 1] == 0  # zero trace


def test_char_poly_evaluated_at_numeric_eigenvalues():
    rng = random.Random(45)
    for _ in range(25):
        g = random_signed_graph(rng, rng.randint(1, 9))
        p = char_poly_exact(g)
        rep = eigenvalues_sym(g.adjacency_matrix())
        bound = 1e-6 * g.n * max(abs(c) for c in p.coeffs)
        for lam in rep.eigenvalues:
            assert abs(p(float(lam))) <= bound


def test_numeric_integer_eigenvalue_multiplicities_match_exact():
    rng = random.Random(46)
    for _ in range(25):
        g = random_signed_graph(rng, rng.randint(1, 9))
        p = char_poly_exact(g)
        rep = eigenvalues_sym(g.adjacency_matrix())
        rounded = [round(float(v)) for v in rep.eigenvalues if abs(v - round(float(v))) < 1e-7]
        for r in set(rounded):
            assert rounded.count(r) == root_multiplicity_exact(p, r)


def test_root_multiplicity_on_extremal8():
    p = char_poly_exact(extremal_graph(8))
    assert root_multiplicity_exact(p, -1) == 4  # n - 4


def test_rayleigh_quotient():
    g = extremal_graph(7)
    A = g.adjacency_matrix()
    rep = eigenvalues_sym(A)
    assert rayleigh(A, rep.x) == pytest.approx(rep.lambda1, abs=1e-10)
    rng = random.Random(47)
    for _ in range(100):
        y = np.array([rng.gauss(0, 1) for _ in range(7)])
        assert rayleigh(A, y) <= rep.lambda1 + 1e-9
    with pytest.raises(ValueError):
        rayleigh(A, np.zeros(7))


def test_rayleigh_added_edge_delta():
    # adding a positive edge uv moves the quadratic form by exactly 2 x_u x_v
    g = extremal_graph(6)
    rep = eigenvalues_sym(g.adjacency_matrix())
    x = rep.x
    u, v = 0, 4
    assert not g.has_edge(u, v)
    g2 = g.set_edge(u, v, 1)
    delta = rayleigh(g2.adjacency_matrix(), x) - rayleigh(g.adjacency_matrix(), x)
    assert delta == pytest.approx(2 * x[u] * x[v], abs=1e-12)


def test_nonneg_eigenvector_form_identity_when_already_nonneg():
    g = complete_signed(5, 1)
    out, rep = nonneg_eigenvector_form(g)
    assert out == g
    assert (rep.x >= -1e-12).all()


def test_nonneg_eigenvector_form_on_allneg_k4():
    out, rep = nonneg_eigenvector_form(complete_signed(4, -1))
    assert (rep.x >= -1e-9).all()
    assert rep.lambda1 == pytest.approx(1.0, abs=1e-10)


def test_nonneg_eigenvector_form_preserves_exact_spectrum():
    rng = random.Random(48)
    for _ in range(40):
        g = random_signed_graph(rng, rng.randint(1, 8))
        out, rep = nonneg_eigenvector_form(g)
        assert char_poly_exact(out) == char_poly_exact(g)
        assert (rep.x >= -1e-8).all()
        assert switching_equivalent(out, g)


def test_quotient_matrix_families():
    for n in (5, 6, 11):
        A = extremal_graph(n).adjacency_matrix()
        res = quotient_matrix(A, extremal_partition(n))
        assert res.is_equitable
        assert res.matrix.tolist() == [
            [0, -1, 1, 0],
            [-1, 0, 1, 0],
            [1, 1, 0, n - 3],
            [0, 0, 1, n - 4],
        ]
        B = near_extremal_graph(n).adjacency_matrix()
        res2 = quotient_matrix(B, near_extremal_partition(n))
        assert res2.is_equitable
        assert res2.matrix.tolist() == [
            [0, -1, 2, 0],
            [-1, 0, 2, 0],
            [1, 1, 0, n - 4],
            [0, 0, 2, n - 5],
        ]


def test_quotient_matrix_violation_witness():
    # a path is not equitable under {ends}{middle} at n=3... use P4
    p4 = SignedGraph(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1})
    part = VertexPartition.of((0, 1), (2, 3))
    res = quotient_matrix(p4.adjacency_matrix(), part)
    assert not res.is_equitable
    i, j, row = res.violation
    assert 0 <= i < 2 and 0 <= j < 2 and row in (0, 1, 2, 3)


def test_quotient_partition_validation():
    with pytest.raises(ValueError):
        VertexPartition.of((0, 1), (1, 2))
    with pytest.raises(ValueError):
        VertexPartition.of((0,), (2,))
    with pytest.raises(ValueError):
        VertexPartition.of((0,), ())
    with pytest.raises(ValueError):
        quotient_matrix(np.zeros((3, 3), dtype=int), VertexPartition.of((0, 1),))


def test_quotient_containment_families():
    for n in (5, 9, 15):
        A = extremal_graph(n).adjacency_matrix()
        Q = quotient_matrix(A, extremal_partition(n)).matrix
        assert check_quotient_containment(A, Q, tol=1e-8)
        B = near_extremal_graph(n).adjacency_matrix()
        Q2 = quotient_matrix(B, near_extremal_partition(n)).matrix
        assert check_quotient_containment(B, Q2, tol=1e-8)


def test_quotient_containment_trivial_partition():
    g = extremal_graph(6)
    A = g.adjacency_matrix()
    part = VertexPartition.of(*[(v,) for v in range(6)])
    res = quotient_matrix(A, part)
    assert res.is_equitable and (res.matrix == A).all()
    assert check_quotient_containment(A, res.matrix, tol=1e-8)


def test_c4free_bounds_examples():
    star = SignedGraph(5, {(0, v): 1 for v in range(1, 5)})
    lam = index(star)
    assert lam == pytest.approx(2.0, abs=1e-10)
    odd_ok, _, applicable = c4free_bound_check(star, lam)
    assert odd_ok and applicable  # 4 - 2 - 4 = -2 <= 0
    c6 = SignedGraph(6, {(v, (v + 1) % 6): 1 for v in range(6)})
    lam6 = index(c6)
    assert lam6 == pytest.approx(2.0, abs=1e-10)
    _, even_ok, applicable6 = c4free_bound_check(c6, lam6)
    assert even_ok and applicable6  # 8 - 4 - 10 + 1 = -5 <= 0


def test_c4free_bound_equality_case():
    # two triangles sharing one vertex attain the odd bound with equality
    bowtie = SignedGraph(
        5, {(0, 1): 1, (0, 2): 1, (1, 2): 1, (0, 3): 1, (0, 4): 1, (3, 4): 1}
    )
    lam = index(bowtie)
    assert lam * lam - lam - 4 == pytest.approx(0.0, abs=1e-9)
    odd_ok, _, applicable = c4free_bound_check(bowtie, lam)
    assert odd_ok and applicable


def test_exact_root_interval_brackets_float_index():
    # the float index of the order-6 extremal graph sits inside an exact bracket
    p = IntPolynomial([1, -7, -1, 1])
    from signedspectra.polynomial import largest_real_root_interval

    lo, hi = largest_real_root_interval(p, Fraction(1, 10**14))
    assert float(lo) <= INDEX_EXTREMAL_6 <= float(hi) + 1e-13
