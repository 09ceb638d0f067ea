from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etacalc.complexes import SimplicialComplex, face_dim
from etacalc.constructions import (
    SplitMix64,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    house_graph,
    octahedron_graph,
)
from etacalc.graphs import whitney_complex
from etacalc.linalg import (
    ConsistencyError,
    PoleError,
    betti,
    boundary_operator,
    bowen_lanford_zeta,
    connection_adjacency,
    connection_laplacian,
    determinant,
    float_spectrum,
    format_matrix,
    green_function,
    hodge_blocks,
    hodge_laplacian,
    identity_matrix,
    inertia,
    is_symmetric,
    mat_mul,
    omega_vector,
    rank,
    super_trace,
    total_sum,
    trace,
    transpose,
    wu_characteristic,
)


def perm_expansion_det(m):
    """Oracle: Leibniz permutation expansion, fine for n <= 6."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def random_int_matrix(rng, n, lo=-4, hi=4):
    return [[lo + rng.randrange(hi - lo + 1) for _ in range(n)] for _ in range(n)]


def test_determinant_matches_permutation_expansion():
    rng = SplitMix64(11)
    for n in (1, 2, 3, 4, 5):
        for _ in range(6):
            m = random_int_matrix(rng, n)
            assert determinant(m) == perm_expansion_det(m)


def test_connection_laplacian_entries_by_hand(house):
    L = connection_laplacian(house)
    faces = house.faces
    for i, a in enumerate(faces):
        for j, b in enumerate(faces):
            assert L[i][j] == (1 if set(a) & set(b) else 0)
    A = connection_adjacency(house)
    assert all(L[i][j] - A[i][j] == (i == j) for i in range(len(faces)) for j in range(len(faces)))


def test_green_function_is_exact_inverse(house, octahedron):
    for k in (house, octahedron):
        L = connection_laplacian(k)
        g = green_function(k)
        assert mat_mul(L, g) == identity_matrix(len(k))
        assert is_symmetric(g)


def test_green_function_unimodularity_on_random_complexes():
    for seed in range(12):
        k = whitney_complex(erdos_renyi(7, 0.5, seed=seed))
        if len(k) == 0:
            continue
        assert determinant(connection_laplacian(k)) in (-1, 1)
        green_function(k)  # raises ConsistencyError on any failure


def test_super_trace_and_energy(house):
    g = green_function(house)
    omega = omega_vector(house)
    assert super_trace(g, omega) == house.euler_characteristic()
    assert total_sum(g) == house.euler_characteristic()


def test_zeta_special_values(house):
    assert bowen_lanford_zeta(house, 0) == 1
    det_l = determinant(connection_laplacian(house))
    assert bowen_lanford_zeta(house, -1) == Fraction(1, det_l)
    # -2 is an adjacency eigenvalue of the 4-cycle connection graph
    with pytest.raises(PoleError):
        bowen_lanford_zeta(whitney_complex(cycle_graph(4)), Fraction(-1, 2))


def test_wu_characteristic_brute_force(house, octahedron):
    for k in (house, octahedron):
        want = sum(
            (-1) ** (face_dim(a) + face_dim(b))
            for a in k.faces
            for b in k.faces
            if set(a) & set(b)
        )
        assert wu_characteristic(k) == want


def test_boundary_operators_compose_to_zero(octahedron, double_pyramid):
    for k in (octahedron, double_pyramid):
        for kk in range(1, k.dim + 1):
            d_low = boundary_operator(k, kk - 1) if kk >= 2 else None
            d = boundary_operator(k, kk)
            if d_low is not None:
                prod = mat_mul(d_low, d)
                assert all(all(x == 0 for x in row) for row in prod)


def test_betti_numbers_of_standard_spaces(house, octahedron, double_pyramid):
    assert betti(octahedron) == (1, 0, 1)
    assert betti(house) == (1, 1, 0)
    assert betti(double_pyramid) == (1, 0, 2)
    assert betti(whitney_complex(cycle_graph(5))) == (1, 1)
    assert betti(whitney_complex(complete_graph(4))) == (1, 0, 0, 0)


def test_betti_alternating_sum_is_chi(house, octahedron, double_pyramid):
    for k in (house, octahedron, double_pyramid):
        b = betti(k)
        assert sum((-1) ** i * bi for i, bi in enumerate(b)) == k.euler_characteristic()


def test_hodge_super_trace_vanishes(house, octahedron):
    for k in (house, octahedron):
        h = hodge_laplacian(k)
        omega = omega_vector(k)
        assert super_trace(h, omega) == 0
        blocks = hodge_blocks(k)
        assert sum(len(b) for b in blocks) == len(k)


def test_rank_against_fraction_elimination():
    def oracle_rank(m):
        m = [[Fraction(x) for x in row] for row in m]
        r = 0
        for col in range(len(m[0]) if m else 0):
            piv = next((i for i in range(r, len(m)) if m[i][col]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            for i in range(len(m)):
                if i != r and m[i][col]:
                    f = m[i][col] / m[r][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            r += 1
        return r

    rng = SplitMix64(5)
    for _ in range(25):
        n = 1 + rng.randrange(5)
        m = random_int_matrix(rng, n, -2, 2)
        assert rank(m) == oracle_rank(m)


def test_inertia_matches_float_spectrum_signs():
    rng = SplitMix64(9)
    for _ in range(15):
        n = 2 + rng.randrange(5)
        m = random_int_matrix(rng, n, -3, 3)
        sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
        inert = inertia(sym)
        eigs = float_spectrum(sym)
        neg = sum(1 for e in eigs if e < -1e-8)
        zero = sum(1 for e in eigs if abs(e) <= 1e-8)
        pos = sum(1 for e in eigs if e > 1e-8)
        assert inert.as_tuple() == (neg, zero, pos)


def test_inertia_handles_zero_diagonal():
    # hollow matrix forces the 2x2 off-diagonal pivot path
    m = [[0, 1], [1, 0]]
    assert inertia(m).as_tuple() == (1, 0, 1)
    m = [[0, 2, 0], [2, 0, 0], [0, 0, 0]]
    assert inertia(m).as_tuple() == (1, 1, 1)


def test_float_spectrum_known_values():
    # adjacency eigenvalues of the 4-cycle are 2, 0, 0, -2
    a = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    eigs = float_spectrum(a)
    for got, want in zip(eigs, (-2.0, 0.0, 0.0, 2.0)):
        assert abs(got - want) < 1e-9


def test_float_spectrum_moment_checks(house):
    L = connection_laplacian(house)
    eigs = float_spectrum(L)
    assert abs(sum(eigs) - trace(L)) < 1e-8
    sq = sum(x * x for x in eigs)
    assert abs(sq - trace(mat_mul(L, L))) < 1e-7


def test_format_matrix_and_transpose():
    m = [[1, -2], [3, 4]]
    assert transpose(m) == [[1, 3], [-2, 4]]
    text = format_matrix(m)
    assert text.splitlines()[0].split() == ["1", "-2"]
