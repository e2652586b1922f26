"""Kunz polytopes and exact lattice-point counting.

Multiplicity-``m`` semigroups correspond to integer points of a polyhedron in
``m-1`` variables.  Cutting it with a genus equality or with Frobenius rows
yields a polytope whose points are counted by bounded depth-first search.

The search kernel is compiled from ``_kernel.pyx`` when available; otherwise
the pure-Python ``_kernel_py`` is used.  Set ``KUNZCOUNT_PURE=1`` to force the
fallback.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import _kernel_py
from .errors import (
    BadMultiplicity,
    DimensionMismatch,
    DuplicateCut,
    FrobeniusDivisible,
    Unbounded,
    checked,
)

try:
    from ._kernel import count_points as _compiled_count_points
except ImportError:  # extension not built
    _compiled_count_points = None

if _compiled_count_points is not None and not os.environ.get("KUNZCOUNT_PURE"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

AVAILABLE_BACKENDS = ("compiled", "python") if _compiled_count_points else ("python",)

RELATIONS = (">=", "=", "<=")

# Headroom below int64 so the compiled kernel can add a few terms safely.
_MAGNITUDE_LIMIT = 2**62


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple[int, ...]
    rhs: int
    relation: str = ">="

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.relation!r}")
        if not any(self.coeffs):
            raise ValueError("constraint has all-zero coefficients")

    def satisfied_by(self, x: Sequence[int]) -> bool:
        lhs = sum(a * v for a, v in zip(self.coeffs, x))
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "<=":
            return lhs <= self.rhs
        return lhs == self.rhs

    def as_rows(self) -> list[tuple[tuple[int, ...], int]]:
        """Rewrite as one or two ``a.x >= b`` rows."""
        neg = tuple(-a for a in self.coeffs)
        if self.relation == ">=":
            return [(self.coeffs, self.rhs)]
        if self.relation == "<=":
            return [(neg, -self.rhs)]
        return [(self.coeffs, self.rhs), (neg, -self.rhs)]

    def to_text(self) -> str:
        return " ".join(map(str, self.coeffs)) + f" {self.relation} {self.rhs}"


@dataclass(frozen=True)
class LinearSystem:
    n: int
    constraints: tuple[LinearConstraint, ...]
    label: str = ""
    cuts: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for con in self.constraints:
            if len(con.coeffs) != self.n:
                raise DimensionMismatch(
                    f"constraint {con.to_text()!r} has {len(con.coeffs)} coefficients, expected {self.n}")

    @property
    def multiplicity(self) -> int:
        return self.n + 1

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.n and all(con.satisfied_by(x) for con in self.constraints)

    def rows(self) -> tuple[list[tuple[int, ...]], list[int]]:
        A, b = [], []
        for con in self.constraints:
            for a, r in con.as_rows():
                A.append(a)
                b.append(r)
        return A, b

    def to_text(self) -> str:
        head = f"# {self.label}\n" if self.label else ""
        return head + "\n".join(con.to_text() for con in self.constraints) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearSystem":
        """Parse the ``c1 c2 ... cn REL rhs`` format written by :meth:`to_text`.

        Cut bookkeeping is not serialised; the parsed system carries no cuts.
        """
        label = ""
        constraints = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                label = line[1:].strip()
                continue
            *coeffs, rel, rhs = line.split()
            constraints.append(LinearConstraint(tuple(map(int, coeffs)), int(rhs), rel))
        if not constraints:
            raise ValueError("no constraints found")
        return cls(len(constraints[0].coeffs), tuple(constraints), label)


def _unit(n: int, *terms: tuple[int, int]) -> tuple[int, ...]:
    """Coefficient vector from 1-based ``(index, coeff)`` terms; repeats add up."""
    v = [0] * n
    for idx, val in terms:
        v[idx - 1] += val
    return tuple(v)


def _kunz_rows(m: int, shift: int) -> list[LinearConstraint]:
    """Lower bounds plus pair rows; ``shift`` is 0 for all semigroups, 1 for MED."""
    n = m - 1
    rows = [LinearConstraint(_unit(n, (i, 1)), 1) for i in range(1, m)]
    for i in range(1, m):
        for j in range(i, m):
            # pairs with i + j == m contribute no row
            if i + j <= m - 1:
                rows.append(LinearConstraint(_unit(n, (i, 1), (j, 1), (i + j, -1)), shift))
            elif i + j > m:
                rows.append(LinearConstraint(_unit(n, (i, 1), (j, 1), (i + j - m, -1)), shift - 1))
    return rows


def _check_m(m: int) -> None:
    if m < 2:
        raise BadMultiplicity(f"multiplicity must be at least 2, got {m}")


def kunz_system(m: int) -> LinearSystem:
    """The unbounded polyhedron of all multiplicity-``m`` semigroups."""
    _check_m(m)
    return LinearSystem(m - 1, tuple(_kunz_rows(m, 0)), f"kunz m={m}")


def med_system(m: int) -> LinearSystem:
    """The unbounded polyhedron of maximal-embedding-dimension semigroups."""
    _check_m(m)
    return LinearSystem(m - 1, tuple(_kunz_rows(m, 1)), f"med m={m}")


def add_genus_cut(sys: LinearSystem, g: int) -> LinearSystem:
    if "genus" in sys.cuts:
        raise DuplicateCut(f"{sys.label} already fixes the genus")
    row = LinearConstraint((1,) * sys.n, checked(g), "=")
    return LinearSystem(sys.n, sys.constraints + (row,), f"{sys.label} | genus={g}",
                        sys.cuts | {"genus"})


def add_frobenius_cut(sys: LinearSystem, F: int) -> LinearSystem:
    if "frobenius" in sys.cuts:
        raise DuplicateCut(f"{sys.label} already fixes the Frobenius number")
    m = sys.n + 1
    if F % m == 0:
        raise FrobeniusDivisible(f"F={F} is a multiple of m={m}, so F would lie in S")
    checked(F + m)
    kstar = F % m
    rows = [LinearConstraint(_unit(sys.n, (i, m)), F + m - i, "<=") for i in range(1, m)]
    rows.append(LinearConstraint(_unit(sys.n, (kstar, m)), F + m - kstar, "="))
    return LinearSystem(sys.n, sys.constraints + tuple(rows), f"{sys.label} | frobenius={F}",
                        sys.cuts | {"frobenius"})


def genus_system(m: int, g: int) -> LinearSystem:
    return add_genus_cut(kunz_system(m), g)


def frobenius_system(m: int, F: int) -> LinearSystem:
    return add_frobenius_cut(kunz_system(m), F)


def variable_bounds(sys: LinearSystem, max_rounds: int = 100) -> list[tuple[int, int]]:
    """Finite per-variable intervals derived by bound propagation.

    Returns possibly empty intervals (``lo > hi``) for infeasible systems.
    Raises :class:`Unbounded` if some variable keeps an infinite side.
    """
    A, b = sys.rows()
    n = sys.n
    lo: list[Optional[int]] = [None] * n
    hi: list[Optional[int]] = [None] * n

    for _ in range(max_rounds):
        changed = False
        for a, r in zip(A, b):
            # contribution bounds of each term a_j x_j
            top = []
            for j in range(n):
                if a[j] > 0:
                    top.append(None if hi[j] is None else a[j] * hi[j])
                elif a[j] < 0:
                    top.append(None if lo[j] is None else a[j] * lo[j])
                else:
                    top.append(0)
            unknown = [j for j in range(n) if top[j] is None]
            if len(unknown) > 1:
                continue
            known = sum(t for t in top if t is not None)
            for k in range(n):
                if a[k] == 0 or (unknown and unknown[0] != k):
                    continue
                rest = known - (top[k] or 0)
                need = r - rest  # a_k x_k >= need
                if a[k] > 0:
                    v = -((-need) // a[k])
                    if lo[k] is None or v > lo[k]:
                        lo[k] = v
                        changed = True
                else:
                    v = (-need) // (-a[k])
                    if hi[k] is None or v < hi[k]:
                        hi[k] = v
                        changed = True
        if any(l is not None and h is not None and l > h for l, h in zip(lo, hi)):
            break
        if not changed:
            break
    if any(v is None for v in lo) or any(v is None for v in hi):
        raise Unbounded(f"{sys.label or 'system'} is unbounded; add a genus or Frobenius cut")
    return list(zip(lo, hi))


def _check_magnitudes(A, b, bounds) -> None:
    for a, r in zip(A, b):
        worst = abs(r) + sum(abs(c) * max(abs(l), abs(h)) for c, (l, h) in zip(a, bounds))
        if worst >= _MAGNITUDE_LIMIT:
            raise OverflowError("lattice search would exceed the 64-bit range")


def _count_chunk(args) -> int:
    A, b, lo, hi, backend = args
    if backend == "compiled":
        return _compiled_count_points(A, b, lo, hi)
    return _kernel_py.count_points(A, b, lo, hi)


def count_lattice_points(sys: LinearSystem, workers: Optional[int] = None,
                         backend: Optional[str] = None) -> int:
    """Number of integer points of a bounded system.

    ``workers > 1`` splits the range of the first variable across processes.
    """
    backend = backend or BACKEND
    if backend not in AVAILABLE_BACKENDS:
        raise ValueError(f"backend {backend!r} unavailable; have {AVAILABLE_BACKENDS}")
    bounds = variable_bounds(sys)
    if any(l > h for l, h in bounds):
        return 0
    A, b = sys.rows()
    _check_magnitudes(A, b, bounds)
    lo = [l for l, _ in bounds]
    hi = [h for _, h in bounds]
    if not workers or workers <= 1 or hi[0] == lo[0]:
        return checked(_count_chunk((A, b, lo, hi, backend)))
    chunks = []
    for x in range(lo[0], hi[0] + 1):
        clo, chi = lo[:], hi[:]
        clo[0] = chi[0] = x
        chunks.append((A, b, clo, chi, backend))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return checked(sum(pool.map(_count_chunk, chunks)))


def enumerate_lattice_points(sys: LinearSystem) -> Iterator[tuple[int, ...]]:
    """Stream the integer points of a bounded system in lexicographic order."""
    bounds = variable_bounds(sys)
    A, b = sys.rows()
    if any(l > h for l, h in bounds):
        return iter(())
    _check_magnitudes(A, b, bounds)
    return _kernel_py.iter_points(A, b, [l for l, _ in bounds], [h for _, h in bounds])
