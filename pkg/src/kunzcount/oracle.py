"""Ground-truth enumeration of numerical semigroups by genus.

The semigroup tree: the children of ``S`` are ``S \\ {n}`` for every minimal
generator ``n > F(S)``.  Every numerical semigroup appears exactly once, at the
depth equal to its genus.  Nothing here touches Kunz coordinates or the
polytope code; semigroups are carried as membership bitmasks.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .errors import ResourceLimit
from .semigroup import SemigroupDescriptor

DEFAULT_MAX_GENUS = 18
DEFAULT_MAX_LEVEL_SIZE = 2_000_000


@dataclass(frozen=True)
class _Node:
    gens: tuple[int, ...]
    frobenius: int
    multiplicity: int
    # bit x set iff x is in S, for 0 <= x <= frobenius + multiplicity
    members: int

    def has(self, x: int) -> bool:
        return x > self.frobenius or bool((self.members >> x) & 1)


def _root() -> _Node:
    return _Node((1,), -1, 1, 0b11)


def _decomposable(node_members: int, frob: int, x: int, m: int) -> bool:
    def has(y):
        return y > frob or (node_members >> y) & 1

    for y in range(m, x // 2 + 1):
        if has(y) and has(x - y):
            return True
    return False


def _remove(node: _Node, n: int) -> _Node:
    members = node.members & ~(1 << n)
    frob = n
    m = node.multiplicity if n != node.multiplicity else n + 1
    limit = frob + m
    # everything above the old Frobenius number was already in S
    for x in range(node.frobenius + 1, limit + 1):
        if x != n:
            members |= 1 << x
    members &= (1 << (limit + 1)) - 1
    # Removing n keeps the other generators minimal; new generators are
    # elements n + s (s in S) that only decomposed through n.  Minimal
    # generators never exceed F + m, so s <= m.
    gens = [q for q in node.gens if q != n]
    for s in range(1, m + 1):
        x = n + s
        if node.has(s) and x not in gens and not _decomposable(members, frob, x, m):
            gens.append(x)
    gens.sort()
    return _Node(tuple(gens), frob, m, members)


def children(s: SemigroupDescriptor | _Node) -> list:
    """Children of ``s`` in the semigroup tree, in increasing order of the removed generator."""
    node = s if isinstance(s, _Node) else _node_from_descriptor(s)
    kids = [_remove(node, n) for n in node.gens if n > node.frobenius]
    if isinstance(s, _Node):
        return kids
    return [_describe(k) for k in kids]


def _node_from_descriptor(s: SemigroupDescriptor) -> _Node:
    limit = s.frobenius + s.multiplicity
    members = 0
    for x in range(limit + 1):
        if x in s:
            members |= 1 << x
    return _Node(s.generators, s.frobenius, s.multiplicity, members)


def _describe(node: _Node) -> SemigroupDescriptor:
    m = node.multiplicity
    apery = [0] * m
    for i in range(1, m):
        x = i
        while not node.has(x):
            x += m
        apery[i] = x
    genus = sum(1 for x in range(1, node.frobenius + 1) if not node.has(x))
    return SemigroupDescriptor(node.gens, m, tuple(apery), genus, node.frobenius, len(node.gens))


@dataclass
class GenusLevel:
    g: int
    semigroups: list[SemigroupDescriptor] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.semigroups)


def iter_levels(g_max: int, max_genus: int = DEFAULT_MAX_GENUS,
                max_level_size: int = DEFAULT_MAX_LEVEL_SIZE) -> Iterator[GenusLevel]:
    """Yield levels ``0..g_max`` breadth first, keeping only the frontier in memory."""
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    if g_max > max_genus:
        raise ResourceLimit(f"genus {g_max} exceeds the configured cap {max_genus}")
    frontier = [_root()]
    for g in range(g_max + 1):
        yield GenusLevel(g, [_describe(node) for node in frontier])
        if g == g_max:
            break
        nxt = []
        for node in frontier:
            nxt.extend(_remove(node, n) for n in node.gens if n > node.frobenius)
        if len(nxt) > max_level_size:
            raise ResourceLimit(f"level {g + 1} has {len(nxt)} semigroups (cap {max_level_size})")
        nxt.sort(key=lambda nd: nd.gens)
        frontier = nxt


def enumerate_by_genus(g_max: int, **limits) -> dict[int, GenusLevel]:
    return {level.g: level for level in iter_levels(g_max, **limits)}


def count_filtered(level: GenusLevel, multiplicity: Optional[int] = None,
                   frobenius: Optional[int] = None, med: Optional[bool] = None) -> int:
    total = 0
    for s in level.semigroups:
        if multiplicity is not None and s.multiplicity != multiplicity:
            continue
        if frobenius is not None and s.frobenius != frobenius:
            continue
        if med is not None and s.is_med != med:
            continue
        total += 1
    return total


def save_level(level: GenusLevel, path: os.PathLike) -> None:
    """One semigroup per line: genus, multiplicity, Frobenius number, generators."""
    lines = [f"{s.genus} {s.multiplicity} {s.frobenius} {','.join(map(str, s.generators))}"
             for s in level.semigroups]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_level(path: os.PathLike) -> GenusLevel:
    from .semigroup import from_generators

    semigroups = []
    g = None
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        genus, mult, frob, gens = line.split()
        s = from_generators(int(v) for v in gens.split(","))
        if (s.genus, s.multiplicity, s.frobenius) != (int(genus), int(mult), int(frob)):
            raise ValueError(f"{path}:{lineno}: cached invariants disagree with generators")
        if g is None:
            g = s.genus
        elif s.genus != g:
            raise ValueError(f"{path}:{lineno}: mixed genera in one level file")
        semigroups.append(s)
    if g is None:
        raise ValueError(f"{path}: empty level file")
    return GenusLevel(g, semigroups)


class Oracle:
    """Lazily expanded semigroup tree with optional on-disk level cache.

    ``cache_dir`` defaults to the ``KUNZCOUNT_CACHE`` environment variable.
    """

    def __init__(self, max_genus: int = DEFAULT_MAX_GENUS,
                 cache_dir: Optional[os.PathLike] = None):
        self.max_genus = max_genus
        if cache_dir is None and os.environ.get("KUNZCOUNT_CACHE"):
            cache_dir = os.environ["KUNZCOUNT_CACHE"]
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self._levels: dict[int, GenusLevel] = {}

    def _cache_path(self, g: int) -> Optional[Path]:
        return self.cache_dir / f"genus_{g:02d}.txt" if self.cache_dir else None

    def level(self, g: int) -> GenusLevel:
        if g in self._levels:
            return self._levels[g]
        path = self._cache_path(g)
        if path is not None and path.exists():
            self._levels[g] = load_level(path)
            return self._levels[g]
        for lvl in iter_levels(g, max_genus=self.max_genus):
            self._levels.setdefault(lvl.g, lvl)
        if self.cache_dir is not None:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            for h in range(g + 1):
                p = self._cache_path(h)
                if not p.exists():
                    save_level(self._levels[h], p)
        return self._levels[g]

    def count(self, g: int, multiplicity: Optional[int] = None,
              frobenius: Optional[int] = None, med: Optional[bool] = None) -> int:
        return count_filtered(self.level(g), multiplicity, frobenius, med)

    def semigroups(self, g: int, multiplicity: Optional[int] = None,
                   frobenius: Optional[int] = None, med: Optional[bool] = None) -> list[SemigroupDescriptor]:
        return [s for s in self.level(g).semigroups
                if (multiplicity is None or s.multiplicity == multiplicity)
                and (frobenius is None or s.frobenius == frobenius)
                and (med is None or s.is_med == med)]
