"""Finite permutation groups via explicit element enumeration.

Groups here are small (orders up to a few thousand), so full closure
under composition is both simplest and fully deterministic: elements
are kept sorted lexicographically by image list, and conjugacy class
representatives are the least members of their classes.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from math import factorial
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeMismatch, PartitionMismatch

DEFAULT_CAP = 10**6


class Permutation:
    """A permutation of {1, .., n}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images {images} are not a bijection of 1..{n}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                images[a - 1] = b
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(i) = p(q(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        mine = self.images
        return Permutation(tuple(mine[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, img in enumerate(self.images):
            out[img - 1] = i + 1
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points, ordered by least element."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Weakly increasing cycle lengths, a partition of the degree."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation(id, n={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
        return f"Permutation({text}, n={self.degree})"

    def to_json(self) -> list[int]:
        return list(self.images)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return p.cycle_type()


def cycle_type_count(n: int, parts: Sequence[int]) -> int:
    """Number of permutations of S_n with the given cycle type.

    n! / prod_i (i^{m_i} m_i!) where m_i is the multiplicity of part i.
    """
    parts = tuple(sorted(parts))
    if sum(parts) != n or any(p < 1 for p in parts):
        raise PartitionMismatch(f"{parts} is not a partition of {n}")
    denom = 1
    for length in set(parts):
        m = parts.count(length)
        denom *= length**m * factorial(m)
    return factorial(n) // denom


class PermGroup:
    """A finite permutation group with a fully enumerated element list."""

    __slots__ = ("degree", "generators", "elements", "_classes")

    def __init__(self, degree: int, generators: tuple[Permutation, ...], elements: tuple[Permutation, ...]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self._classes = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        idx = bisect_left(self.elements, p)
        return idx < len(self.elements) and self.elements[idx] == p

    @classmethod
    def from_generators(cls, generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> "PermGroup":
        return group_from_generators(generators, cap)

    @classmethod
    def from_elements(
        cls,
        degree: int,
        elements: Iterable[Permutation],
        generators: Sequence[Permutation] | None = None,
    ) -> "PermGroup":
        elems = tuple(sorted(set(elements)))
        if generators is None:
            generators = _greedy_generators(degree, elems)
        return cls(degree, tuple(generators), elems)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        e = Permutation.identity(degree)
        return cls(degree, (e,), (e,))

    @classmethod
    def symmetric(cls, degree: int, points: Sequence[int] | None = None) -> "PermGroup":
        """The symmetric group on the given points (default: all of 1..degree)."""
        pts = tuple(points) if points is not None else tuple(range(1, degree + 1))
        if len(pts) < 2:
            return cls.trivial(degree)
        gens = [Permutation.from_cycles(degree, [pts[:2]])]
        if len(pts) > 2:
            gens.append(Permutation.from_cycles(degree, [pts]))
        return group_from_generators(gens)

    def conjugacy_classes(self) -> list[tuple[Permutation, int]]:
        """(representative, class size) pairs; reps are lex-least, list sorted by rep."""
        if self._classes is None:
            elements = self.elements
            inverses = {g: g.inverse() for g in elements}
            remaining = set(elements)
            classes = []
            while remaining:
                x = min(remaining)
                orbit = {g * x * inverses[g] for g in elements}
                remaining -= orbit
                classes.append((min(orbit), len(orbit)))
            classes.sort(key=lambda pair: pair[0].images)
            self._classes = classes
        return list(self._classes)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def _greedy_generators(degree: int, elements: tuple[Permutation, ...]) -> tuple[Permutation, ...]:
    """A small generating set extracted from a sorted element list."""
    identity = Permutation.identity(degree)
    gens: list[Permutation] = []
    known = {identity}
    for p in elements:
        if p in known:
            continue
        gens.append(p)
        known = _close(gens, degree, cap=len(elements))
    return tuple(gens) if gens else (identity,)


def _close(generators: Sequence[Permutation], degree: int, cap: int) -> set[Permutation]:
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in generators:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
                    fresh.append(q)
        frontier = fresh
    return seen


def group_from_generators(generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of the generators under composition."""
    if not generators:
        raise ValueError("need at least one generator (use Permutation.identity for the trivial group)")
    degrees = {g.degree for g in generators}
    if len(degrees) != 1:
        raise DegreeMismatch(f"generators mix degrees {sorted(degrees)}")
    degree = degrees.pop()
    seen = _close(generators, degree, cap)
    return PermGroup(degree, tuple(generators), tuple(sorted(seen)))


def direct_product(a: PermGroup, b: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """A x B acting on degree(A) + degree(B) points, B's points shifted up."""
    if a.order * b.order > cap:
        raise CapExceeded(f"direct product order {a.order * b.order} exceeds cap {cap}")
    na, nb = a.degree, b.degree

    def combine(p: Permutation, q: Permutation) -> Permutation:
        return Permutation(tuple(p.images) + tuple(img + na for img in q.images))

    elements = tuple(sorted(combine(p, q) for p in a.elements for q in b.elements))
    id_a, id_b = Permutation.identity(na), Permutation.identity(nb)
    gens = tuple(combine(g, id_b) for g in a.generators) + tuple(combine(id_a, g) for g in b.generators)
    return PermGroup(na + nb, gens, elements)


def wreath_product(base: PermGroup, n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """base wr S_n in its imprimitive action on n blocks of size degree(base).

    The element ((g_1, .., g_n), pi) sends the point i of block j to the
    point g_j(i) of block pi(j); enumerating all |base|^n * n! parameter
    tuples gives the group directly, with its order exact by construction.
    """
    if n < 1:
        raise ValueError("wreath power must be at least 1")
    d = base.degree
    total = base.order**n * factorial(n)
    if total > cap:
        raise CapExceeded(f"wreath product order {total} exceeds cap {cap}")

    block_perms = [list(p) for p in itertools.permutations(range(n))]
    elements = []
    for pi in block_perms:
        for gs in itertools.product(base.elements, repeat=n):
            images = [0] * (d * n)
            for j in range(n):
                gj = gs[j].images
                base_new = pi[j] * d
                base_old = j * d
                for i in range(d):
                    images[base_old + i] = base_new + gj[i]
            elements.append(Permutation(images))
    elements = tuple(sorted(elements))

    gens: list[Permutation] = []
    for g in base.generators:
        images = list(g.images) + list(range(d + 1, d * n + 1))
        gens.append(Permutation(images))
    if n >= 2:
        for cycle in ([tuple(range(1, n + 1))] if n > 2 else []) + [(1, 2)]:
            block = Permutation.from_cycles(n, [cycle])
            images = [0] * (d * n)
            for j in range(n):
                tgt = (block(j + 1) - 1) * d
                for i in range(d):
                    images[j * d + i] = tgt + i + 1
            gens.append(Permutation(images))
    if not gens:
        gens = [Permutation.identity(d * n)]
    return PermGroup(d * n, tuple(gens), elements)
