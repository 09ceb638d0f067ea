"""Exact dense linear algebra for connection Laplacians.

Matrices are plain lists of lists holding Python ints (arbitrary
precision) or Fractions.  Row/column order is the canonical face order
of the source complex.  Nothing here is sparse or floating except the
Jacobi eigensolver at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import SimplicialComplex, face_dim

IntMatrix = list[list[int]]


class PoleError(ZeroDivisionError):
    """Zeta evaluated at a pole (det(1 - zA) = 0)."""


class ConsistencyError(AssertionError):
    """An exact identity that must hold by theorem failed."""


# -- construction -----------------------------------------------------------

def connection_laplacian(complex_: SimplicialComplex) -> IntMatrix:
    """L(x, y) = 1 iff the faces x and y intersect (diagonal included)."""
    sets = [frozenset(f) for f in complex_.faces]
    n = len(sets)
    lap = [[0] * n for _ in range(n)]
    for i in range(n):
        lap[i][i] = 1
        for j in range(i + 1, n):
            if sets[i] & sets[j]:
                lap[i][j] = lap[j][i] = 1
    return lap


def connection_adjacency(complex_: SimplicialComplex) -> IntMatrix:
    adj = connection_laplacian(complex_)
    for i in range(len(adj)):
        adj[i][i] = 0
    return adj


def omega_vector(complex_: SimplicialComplex) -> list[int]:
    return [(-1) ** face_dim(f) for f in complex_.faces]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(row) for row in zip(*a)]


def is_symmetric(m: Sequence[Sequence]) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


# -- determinant and exact inverse ------------------------------------------

def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _inverse_fractions(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        pivot = a[k][k]
        a[k] = [x / pivot for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def green_function(complex_: SimplicialComplex) -> IntMatrix:
    """Exact integer inverse of the connection Laplacian.

    Raises ConsistencyError if the inverse fails to be integral or if
    L * g differs from the identity; by the unimodularity theorem this
    must never happen.
    """
    lap = connection_laplacian(complex_)
    n = len(lap)
    if n == 0:
        return []
    det = determinant(lap)
    if det not in (-1, 1):
        raise ConsistencyError(f"connection Laplacian has determinant {det}")
    inv = _inverse_fractions(lap)
    g: IntMatrix = []
    for row in inv:
        out = []
        for x in row:
            if x.denominator != 1:
                raise ConsistencyError(f"non-integer Green entry {x}")
            out.append(x.numerator)
        g.append(out)
    if mat_mul(lap, g) != identity_matrix(n):
        raise ConsistencyError("L * g is not the identity")
    return g


# -- traces and sums ---------------------------------------------------------

def trace(matrix: Sequence[Sequence]) -> int:
    return sum(matrix[i][i] for i in range(len(matrix)))


def super_trace(matrix: Sequence[Sequence], omega: Sequence[int]):
    if len(omega) != len(matrix):
        raise ValueError("sign vector length does not match matrix size")
    return sum(w * matrix[i][i] for i, w in enumerate(omega))


def total_sum(matrix: Sequence[Sequence]):
    return sum(sum(row) for row in matrix)


def energy(complex_: SimplicialComplex) -> int:
    """Sum of all Green-function entries; equals chi by the energy theorem."""
    if not complex_.faces:
        return 0
    return total_sum(green_function(complex_))


# -- zeta ---------------------------------------------------------------------

def bowen_lanford_zeta(complex_: SimplicialComplex, z) -> Fraction:
    """zeta(z) = 1 / det(1 - z*A) for the connection graph adjacency A."""
    z = Fraction(z)
    adj = connection_adjacency(complex_)
    n = len(adj)
    if n == 0:
        return Fraction(1)
    p, q = z.numerator, z.denominator
    scaled = [[q * int(i == j) - p * adj[i][j] for j in range(n)] for i in range(n)]
    det_scaled = determinant(scaled)  # = q^n * det(1 - zA)
    if det_scaled == 0:
        raise PoleError(f"zeta has a pole at z = {z}")
    return Fraction(q ** n, det_scaled)


# -- Wu characteristic ---------------------------------------------------------

def checkerboard(complex_: SimplicialComplex) -> IntMatrix:
    w = omega_vector(complex_)
    return [[wi * wj for wj in w] for wi in w]


def wu_characteristic(complex_: SimplicialComplex) -> int:
    """tr(L J); cross-checked against the direct double sum over
    intersecting face pairs."""
    lap = connection_laplacian(complex_)
    w = omega_vector(complex_)
    n = len(w)
    by_trace = sum(
        lap[i][j] * w[i] * w[j] for i in range(n) for j in range(n)
    )
    sets = [frozenset(f) for f in complex_.faces]
    direct = sum(
        w[i] * w[j]
        for i in range(n)
        for j in range(n)
        if sets[i] & sets[j]
    )
    if by_trace != direct:
        raise ConsistencyError("Wu characteristic: trace and double sum disagree")
    return by_trace


# -- boundary operators, Hodge Laplacian, Betti numbers -------------------------

def faces_by_dim(complex_: SimplicialComplex) -> list[list]:
    out: list[list] = [[] for _ in range(complex_.dim + 1)] if complex_.faces else []
    for f in complex_.faces:
        out[face_dim(f)].append(f)
    return out


def boundary_operator(complex_: SimplicialComplex, k: int) -> IntMatrix:
    """Signed incidence matrix d_k from k-faces to (k-1)-faces.

    Sign convention: (-1)^i for omitting the i-th smallest vertex.
    """
    grouped = faces_by_dim(complex_)
    cols = grouped[k] if k < len(grouped) else []
    rows = grouped[k - 1] if 1 <= k < len(grouped) else []
    row_index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in range(len(rows))]
    if k >= 1:
        for j, f in enumerate(cols):
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                mat[row_index[sub]][j] = (-1) ** i
    return mat


def hodge_blocks(complex_: SimplicialComplex) -> list[IntMatrix]:
    """H_k = d_k^T d_k + d_{k+1} d_{k+1}^T for each dimension k."""
    grouped = faces_by_dim(complex_)
    blocks = []
    for k in range(len(grouped)):
        vk = len(grouped[k])
        dk = boundary_operator(complex_, k)
        dk1 = boundary_operator(complex_, k + 1)
        block = [[0] * vk for _ in range(vk)]
        if dk:
            lower = mat_mul(transpose(dk), dk)
            for i in range(vk):
                for j in range(vk):
                    block[i][j] += lower[i][j]
        if dk1 and dk1[0]:
            upper = mat_mul(dk1, transpose(dk1))
            for i in range(vk):
                for j in range(vk):
                    block[i][j] += upper[i][j]
        blocks.append(block)
    return blocks


def hodge_laplacian(complex_: SimplicialComplex) -> IntMatrix:
    """Full Hodge Laplacian, block diagonal in canonical face order."""
    n = len(complex_.faces)
    full = [[0] * n for _ in range(n)]
    offset = 0
    for block in hodge_blocks(complex_):
        m = len(block)
        for i in range(m):
            for j in range(m):
                full[offset + i][offset + j] = block[i][j]
        offset += m
    return full


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank by fraction-free elimination with full pivoting."""
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    col = 0
    while r < nrows and col < ncols:
        pr = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pr is None:
            col += 1
            continue
        a[r], a[pr] = a[pr], a[r]
        pivot = a[r][col]
        for i in range(r + 1, nrows):
            aic = a[i][col]
            for j in range(col + 1, ncols):
                a[i][j] = (pivot * a[i][j] - aic * a[r][j]) // prev
            a[i][col] = 0
        prev = pivot
        r += 1
        col += 1
    return r


def betti(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers as kernel dimensions of the Hodge blocks."""
    if not complex_.faces:
        return ()
    return tuple(len(block) - rank(block) for block in hodge_blocks(complex_))


# -- exact inertia ---------------------------------------------------------------

@dataclass(frozen=True)
class Inertia:
    negative: int
    zero: int
    positive: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.negative, self.zero, self.positive)


def inertia(matrix: Sequence[Sequence[int]]) -> Inertia:
    """Eigenvalue sign counts of a symmetric matrix, by exact rational
    symmetric elimination (Sylvester's law of inertia).

    Uses 1x1 pivots from the diagonal; when the whole active diagonal
    vanishes, a 2x2 off-diagonal pivot contributes one eigenvalue of
    each sign.
    """
    if not is_symmetric(matrix):
        raise ValueError("inertia needs a symmetric matrix")
    n = len(matrix)
    a = {
        (i, j): Fraction(matrix[i][j])
        for i in range(n)
        for j in range(n)
        if matrix[i][j] != 0
    }
    active = list(range(n))
    neg = zero = pos = 0
    while active:
        pivot_i = max(
            (i for i in active if a.get((i, i), 0) != 0),
            key=lambda i: abs(a[(i, i)]),
            default=None,
        )
        if pivot_i is not None:
            d = a[(pivot_i, pivot_i)]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(pivot_i)
            col = {i: a[(i, pivot_i)] for i in active if (i, pivot_i) in a}
            for i, ci in col.items():
                for j, cj in col.items():
                    val = a.get((i, j), Fraction(0)) - ci * cj / d
                    if val:
                        a[(i, j)] = val
                    else:
                        a.pop((i, j), None)
            continue
        pair = next(
            ((i, j) for i in active for j in active if i < j and (i, j) in a),
            None,
        )
        if pair is None:
            zero += len(active)
            break
        p, q = pair
        b = a[(p, q)]  # block [[0, b], [b, 0]]: one positive, one negative
        pos += 1
        neg += 1
        active.remove(p)
        active.remove(q)
        colp = {i: a.get((i, p), Fraction(0)) for i in active}
        colq = {i: a.get((i, q), Fraction(0)) for i in active}
        for i in active:
            for j in active:
                val = a.get((i, j), Fraction(0)) - (
                    colp[i] * colq[j] + colq[i] * colp[j]
                ) / b
                if val:
                    a[(i, j)] = val
                else:
                    a.pop((i, j), None)
    return Inertia(neg, zero, pos)


# -- floating symmetric eigensolver ------------------------------------------------

def float_spectrum(
    matrix: Sequence[Sequence],
    tol: float = 1e-10,
    max_sweeps: int = 100,
) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    sorted ascending."""
    if not is_symmetric(matrix):
        raise ValueError("float_spectrum needs a symmetric matrix")
    n = len(matrix)
    a = [[float(x) for x in row] for row in matrix]
    for _ in range(max_sweeps):
        off = sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
        if off < tol * tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) < tol / max(n, 1) / 10:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + (1.0 + theta * theta) ** 0.5)
                if theta < 0:
                    t = -t
                c = 1.0 / (1.0 + t * t) ** 0.5
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    return sorted(a[i][i] for i in range(n))


# -- formatting ---------------------------------------------------------------------

def format_matrix(matrix: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in matrix) + (
        "\n" if matrix else ""
    )
