"""Finite abstract simplicial complexes, f-vectors and generating functions.

Faces are tuples of strictly increasing non-negative integer vertex
labels.  A complex stores its faces in canonical order (dimension
ascending, then lexicographic), which fixes the row/column indices of
every matrix derived from it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Face = tuple[int, ...]


class InputError(ValueError):
    """Raised on malformed user input (bad face, bad JSON, ...)."""


class ClosureError(ValueError):
    """Raised when a face list is not closed under non-empty subsets."""


def make_face(vertices: Iterable[int]) -> Face:
    vs = tuple(sorted(vertices))
    if not vs:
        raise InputError("a face must contain at least one vertex")
    if len(set(vs)) != len(vs):
        raise InputError(f"face {vs} has duplicate vertices")
    if any((not isinstance(v, int)) or v < 0 for v in vs):
        raise InputError(f"face {vs} has non-integer or negative labels")
    return vs


def face_dim(face: Face) -> int:
    return len(face) - 1


def _canonical_sort(faces: Iterable[Face]) -> tuple[Face, ...]:
    return tuple(sorted(set(faces), key=lambda f: (len(f), f)))


class SimplicialComplex:
    """Immutable simplicial complex with canonically ordered faces."""

    __slots__ = ("faces", "index")

    def __init__(self, faces: Sequence[Face], _validated: bool = False):
        ordered = _canonical_sort(faces)
        if not _validated:
            have = set(ordered)
            for f in ordered:
                if len(f) > 1:
                    for sub in combinations(f, len(f) - 1):
                        if sub not in have:
                            raise ClosureError(
                                f"face {f} present but subset {sub} missing"
                            )
        self.faces: tuple[Face, ...] = ordered
        self.index: dict[Face, int] = {f: i for i, f in enumerate(ordered)}

    # -- construction -------------------------------------------------

    @classmethod
    def closure(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Smallest complex containing all given facets."""
        faces: set[Face] = set()
        for facet in facets:
            f = make_face(facet)
            for k in range(1, len(f) + 1):
                faces.update(combinations(f, k))
        return cls(tuple(faces), _validated=True)

    @classmethod
    def validate(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Canonicalize a verbatim face list, enforcing the closure axiom."""
        return cls(tuple(make_face(f) for f in faces))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), _validated=True)

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.faces)} faces, dim {self.dim})"

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.faces for v in f}))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def facets(self) -> tuple[Face, ...]:
        """Faces not properly contained in any other face."""
        sets = [frozenset(f) for f in self.faces]
        out = []
        for i, f in enumerate(self.faces):
            fi = sets[i]
            if not any(fi < sj for sj in sets):
                out.append(f)
        return tuple(out)

    # -- invariants ----------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        if not self.faces:
            return ()
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** face_dim(f) for f in self.faces)

    def fermi_characteristic(self) -> int:
        odd = sum(1 for f in self.faces if face_dim(f) % 2 == 1)
        return -1 if odd % 2 else 1

    def generating_function(self, reduced: bool = False) -> "GenPoly":
        """f(x) = sum_k v_{k-1} x^k, with constant term 1 when reduced."""
        coeffs = [1 if reduced else 0] + list(self.f_vector())
        return GenPoly(coeffs)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"faces": [list(f) for f in self.faces]})

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise InputError("complex JSON must be an object")
        if "facets" in data:
            return cls.closure(data["facets"])
        if "faces" in data:
            return cls.validate(data["faces"])
        raise InputError('complex JSON needs a "facets" or "faces" key')


class GenPoly:
    """Univariate polynomial with exact (integer or rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    def __eq__(self, other) -> bool:
        return isinstance(other, GenPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __mul__(self, other: "GenPoly") -> "GenPoly":
        if not self.coeffs or not other.coeffs:
            return GenPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return GenPoly(out)

    def derivative(self) -> "GenPoly":
        return GenPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "GenPoly":
        """Antiderivative with zero constant term."""
        return GenPoly([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "GenPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c.numerator) if c.denominator == 1 else str(c)
            terms.append(cs if k == 0 else (f"{cs}*x" if k == 1 else f"{cs}*x^{k}"))
        return "GenPoly(" + " + ".join(terms) + ")"
