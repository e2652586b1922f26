"""Numerical semigroups, Apéry sets and Kunz coordinates.

A numerical semigroup ``S`` of multiplicity ``m`` is determined by its Apéry
set ``w(0)=0, w(1), ..., w(m-1)`` with respect to ``m``, where ``w(i)`` is the
least element of ``S`` congruent to ``i`` modulo ``m``.  Writing
``w(i) = k_i*m + i`` gives the Kunz coordinates ``(k_1, ..., k_{m-1})``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    EmptyInput,
    InvalidKunz,
    MultiplicityOne,
    NonCofinite,
    checked,
)


@dataclass(frozen=True)
class SemigroupDescriptor:
    generators: tuple[int, ...]
    multiplicity: int
    apery: tuple[int, ...]
    genus: int
    frobenius: int
    embedding_dimension: int

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.apery[x % self.multiplicity]

    @property
    def is_med(self) -> bool:
        """Maximal embedding dimension: as many minimal generators as the multiplicity."""
        return self.embedding_dimension == self.multiplicity

    def gaps(self) -> list[int]:
        return [x for x in range(1, self.frobenius + 1) if x not in self]

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"


@dataclass(frozen=True)
class KunzCoords:
    m: int
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        if self.m < 2:
            raise MultiplicityOne(f"Kunz coordinates need m >= 2, got {self.m}")
        if len(self.k) != self.m - 1:
            raise DimensionMismatch(f"expected {self.m - 1} coordinates, got {len(self.k)}")

    @property
    def genus(self) -> int:
        return sum(self.k)

    @property
    def frobenius(self) -> int:
        return max(ki * self.m + i for i, ki in enumerate(self.k, start=1)) - self.m


def _from_apery(m: int, apery: Sequence[int]) -> SemigroupDescriptor:
    # A nonzero Apéry element is a minimal generator unless it is the sum of
    # two nonzero Apéry elements.
    nonzero = sorted(w for w in apery[1:])
    apery_set = set(nonzero)
    gens = [m]
    for w in nonzero:
        if not any(w - u in apery_set for u in nonzero if u <= w - u):
            gens.append(w)
    gens.sort()
    total = sum(apery) - m * (m - 1) // 2
    genus, rem = divmod(total, m)
    assert rem == 0, "Selmer genus formula must be integral"
    frobenius = max(apery) - m
    return SemigroupDescriptor(
        generators=tuple(gens),
        multiplicity=m,
        apery=tuple(apery),
        genus=checked(genus),
        frobenius=checked(frobenius),
        embedding_dimension=len(gens),
    )


def from_generators(gens: Iterable[int]) -> SemigroupDescriptor:
    """Build the descriptor of the semigroup generated by ``gens``.

    Membership is sieved up to the Schur bound ``(m-1)(n_max-1) + m``, which
    always covers ``F + m`` and hence every Apéry element.
    """
    gens = sorted({int(n) for n in gens})
    if not gens:
        raise EmptyInput("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise NonCofinite(f"gcd{tuple(gens)} = {reduce(gcd, gens)} != 1")
    m = gens[0]
    if m == 1:
        return SemigroupDescriptor((1,), 1, (0,), 0, -1, 1)
    limit = checked((m - 1) * (gens[-1] - 1) + m)
    member = bytearray(limit + 1)
    member[0] = 1
    for x in range(1, limit + 1):
        for n in gens:
            if n > x:
                break
            if member[x - n]:
                member[x] = 1
                break
    apery = [0] * m
    found = 1
    for x in range(1, limit + 1):
        if member[x] and x % m and not apery[x % m]:
            apery[x % m] = x
            found += 1
            if found == m:
                break
    assert found == m, "sieve bound too small"
    return _from_apery(m, apery)


def kunz_from_semigroup(s: SemigroupDescriptor) -> KunzCoords:
    if s.multiplicity < 2:
        raise MultiplicityOne("the semigroup of all naturals has no Kunz coordinates")
    m = s.multiplicity
    return KunzCoords(m, tuple((s.apery[i] - i) // m for i in range(1, m)))


def first_kunz_violation(m: int, k: Sequence[int]) -> Optional[str]:
    """Describe the first violated Kunz inequality, or return None if ``k`` is valid."""
    if len(k) != m - 1:
        raise DimensionMismatch(f"expected {m - 1} coordinates, got {len(k)}")
    x = (0,) + tuple(k)
    for i in range(1, m):
        if x[i] < 1:
            return f"x_{i} >= 1 violated (x_{i} = {x[i]})"
    for i in range(1, m):
        for j in range(i, m):
            if i + j <= m - 1:
                lhs = x[i] + x[j] - x[i + j]
                if lhs < 0:
                    return f"x_{i} + x_{j} - x_{i + j} >= 0 violated (value {lhs})"
            elif i + j > m:
                lhs = x[i] + x[j] - x[i + j - m]
                if lhs < -1:
                    return f"x_{i} + x_{j} - x_{i + j - m} >= -1 violated (value {lhs})"
    return None


def is_valid_kunz(m: int, k: Sequence[int]) -> bool:
    return first_kunz_violation(m, k) is None


def semigroup_from_kunz(c: KunzCoords) -> SemigroupDescriptor:
    problem = first_kunz_violation(c.m, c.k)
    if problem is not None:
        raise InvalidKunz(f"{c.k} is not a Kunz point for m={c.m}: {problem}")
    m = c.m
    apery = [0] + [checked(ki * m + i) for i, ki in enumerate(c.k, start=1)]
    return _from_apery(m, apery)
