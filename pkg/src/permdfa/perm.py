"""Permutations of {0, ..., n-1}, cycle notation, and generating pairs of S_n.

Composition is right-to-left throughout this module: compose(p, q) applies q
first, so compose(p, q)(i) == p(q(i)). Words over an automaton alphabet act
left to right instead; that convention lives in automaton.py and the two are
never mixed.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Iterator, Optional

from .errors import (
    CapExceededError,
    CycleFormatError,
    DegreeMismatchError,
    NotAPermutationError,
)

# Default element cap for group closures; enough for every subgroup of S_8.
DEFAULT_CLOSURE_CAP = math.factorial(8)

# Conjugator searches scan all of S_n, so keep the degree small.
MAX_CONJUGACY_DEGREE = 8


class Perm:
    """A permutation of {0, ..., n-1}, stored as its tuple of images."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        img = tuple(image)
        n = len(img)
        seen = [False] * n
        for v in img:
            if not isinstance(v, int) or v < 0 or v >= n or seen[v]:
                raise NotAPermutationError(f"not a permutation of 0..{n - 1}: {img!r}")
            seen[v] = True
        self.image = img

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        return self.image[point]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Perm({list(self.image)!r})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Perm(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest point, ascending."""
        out = []
        seen = [False] * len(self.image)
        for start in range(len(self.image)):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = []
            q = start
            while not seen[q]:
                seen[q] = True
                cyc.append(q)
                q = self.image[q]
            out.append(tuple(cyc))
        return tuple(out)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation applying q first, then p: compose(p, q)(i) == p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"cannot compose degree {p.degree} with degree {q.degree}")
    pi = p.image
    return Perm(tuple(map(pi.__getitem__, q.image)))


def inverse(p: Perm) -> Perm:
    return p.inverse()


def conjugate(r: Perm, g: Perm) -> Perm:
    """r * g * r^-1, which relabels every point i of g's cycles as r(i)."""
    if r.degree != g.degree:
        raise DegreeMismatchError(f"cannot conjugate degree {g.degree} by degree {r.degree}")
    ri, gi = r.image, g.image
    out = [0] * len(ri)
    for i in range(len(ri)):
        out[ri[i]] = ri[gi[i]]
    return Perm(out)


_CYCLE_TOKEN = re.compile(r"\d+|id|[(),]|\S")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as "(0,1,2)(3,4)" or "id" at the given degree.

    Whitespace is ignored. Cycles need at least two points, points are decimal
    integers below the degree, and no point may appear twice.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    tokens = _CYCLE_TOKEN.findall(text)
    if not tokens:
        raise CycleFormatError("empty permutation text")
    if tokens == ["id"]:
        return Perm.identity(degree)
    image = list(range(degree))
    used: set[int] = set()
    pos = 0
    while pos < len(tokens):
        if tokens[pos] != "(":
            raise CycleFormatError(f"expected '(' but found {tokens[pos]!r}")
        pos += 1
        entries: list[int] = []
        while True:
            if pos >= len(tokens):
                raise CycleFormatError("unterminated cycle")
            tok = tokens[pos]
            if not tok.isdigit():
                raise CycleFormatError(f"expected a point but found {tok!r}")
            point = int(tok)
            if point >= degree:
                raise CycleFormatError(f"point {point} is out of range for degree {degree}")
            if point in used:
                raise CycleFormatError(f"point {point} appears twice")
            used.add(point)
            entries.append(point)
            pos += 1
            if pos >= len(tokens):
                raise CycleFormatError("unterminated cycle")
            if tokens[pos] == ",":
                pos += 1
                continue
            if tokens[pos] == ")":
                pos += 1
                break
            raise CycleFormatError(f"expected ',' or ')' but found {tokens[pos]!r}")
        if len(entries) < 2:
            raise CycleFormatError("a cycle needs at least two points")
        for a, b in zip(entries, entries[1:]):
            image[a] = b
        image[entries[-1]] = entries[0]
    return Perm(image)


def format_cycles(p: Perm) -> str:
    """Disjoint-cycle text, fixed points omitted; the identity prints as "id"."""
    parts = ["(" + ",".join(map(str, cyc)) + ")" for cyc in p.cycles()]
    return "".join(parts) or "id"


def _closure_images(
    images: list[tuple[int, ...]],
    degree: int,
    cap: Optional[int] = None,
    stop_above: Optional[int] = None,
) -> set[tuple[int, ...]]:
    """BFS closure of image tuples under composition, seeded with the identity."""
    ident = tuple(range(degree))
    elements = {ident}
    frontier = [ident]
    while frontier:
        step = []
        for x in frontier:
            for g in images:
                y = tuple(map(x.__getitem__, g))
                if y not in elements:
                    elements.add(y)
                    if cap is not None and len(elements) > cap:
                        raise CapExceededError(f"group closure exceeded cap of {cap}")
                    if stop_above is not None and len(elements) > stop_above:
                        return elements
                    step.append(y)
        frontier = step
    return elements


class GroupClosure:
    """The subgroup generated by some permutations, with its generators kept."""

    __slots__ = ("degree", "generators", "elements")

    def __init__(self, degree: int, generators: tuple[Perm, ...], elements: frozenset[Perm]):
        self.degree = degree
        self.generators = generators
        self.elements = elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self.elements

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"<GroupClosure degree={self.degree} order={len(self.elements)} gens=[{gens}]>"


def generate_group(gens: Iterable[Perm], cap: Optional[int] = None) -> GroupClosure:
    """Close the generators under composition; error if the cap is exceeded."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError("generators must share a degree")
    if cap is None:
        cap = DEFAULT_CLOSURE_CAP
    images = _closure_images([g.image for g in gens], degree, cap=cap)
    return GroupClosure(degree, gens, frozenset(Perm(t) for t in images))


def _images_generate_symmetric(images: list[tuple[int, ...]], degree: int) -> bool:
    # A proper subgroup of S_n has at most n!/2 elements, so the closure can
    # stop as soon as it grows past that.
    full = math.factorial(degree)
    elements = _closure_images(images, degree, stop_above=full // 2)
    return len(elements) > full // 2 or len(elements) == full


def generates_symmetric(gens: Iterable[Perm]) -> bool:
    """Whether the generators' closure is the full symmetric group."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError("generators must share a degree")
    return _images_generate_symmetric([g.image for g in gens], degree)


def acts_transitively(gens: Iterable[Perm]) -> bool:
    """Whether the generated group has a single orbit on points."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    orbit = {0}
    frontier = [0]
    while frontier:
        step = []
        for q in frontier:
            for g in gens:
                v = g.image[q]
                if v not in orbit:
                    orbit.add(v)
                    step.append(v)
        frontier = step
    return len(orbit) == degree


def acts_doubly_transitively(gens: Iterable[Perm]) -> bool:
    """Single orbit on ordered pairs of distinct points; degree must be >= 2."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    if degree < 2:
        raise ValueError("double transitivity needs at least two points")
    start = (0, 1)
    orbit = {start}
    frontier = [start]
    while frontier:
        step = []
        for (a, b) in frontier:
            for g in gens:
                v = (g.image[a], g.image[b])
                if v not in orbit:
                    orbit.add(v)
                    step.append(v)
        frontier = step
    return len(orbit) == degree * (degree - 1)


class Basis:
    """An ordered pair of permutations of one degree that generates S_n.

    Generation is checked at construction. Distinctness of the two components
    is optional and off by default; at n = 2 the pair (s, s) with s the
    transposition still generates and is accepted.
    """

    __slots__ = ("s", "t")

    def __init__(self, s: Perm, t: Perm, *, require_distinct: bool = False):
        if s.degree != t.degree:
            raise DegreeMismatchError("basis components must share a degree")
        if require_distinct and s == t:
            raise ValueError("basis components must be distinct")
        if not _images_generate_symmetric([s.image, t.image], s.degree):
            raise ValueError(
                f"{format_cycles(s)};{format_cycles(t)} does not generate the "
                f"symmetric group on {s.degree} points"
            )
        self.s = s
        self.t = t

    @classmethod
    def parse(cls, text: str, degree: int, *, require_distinct: bool = False) -> "Basis":
        """Parse "S;T" where S and T are cycle expressions at the degree."""
        parts = text.split(";")
        if len(parts) != 2:
            raise CycleFormatError("a basis is two cycle expressions joined by ';'")
        return cls(
            parse_cycles(parts[0], degree),
            parse_cycles(parts[1], degree),
            require_distinct=require_distinct,
        )

    @property
    def degree(self) -> int:
        return self.s.degree

    def __iter__(self) -> Iterator[Perm]:
        yield self.s
        yield self.t

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Basis) and self.s == other.s and self.t == other.t

    def __hash__(self) -> int:
        return hash((self.s, self.t))

    def __str__(self) -> str:
        return f"{format_cycles(self.s)};{format_cycles(self.t)}"

    def __repr__(self) -> str:
        return f"Basis.parse({str(self)!r}, {self.degree})"


def bases_conjugate(b1: Basis, b2: Basis) -> Optional[Perm]:
    """A single r with r*s1*r^-1 == s2 and r*t1*r^-1 == t2, or None.

    Both components must be moved by the same r. Because a generating pair has
    trivial centralizer for degree >= 3, the conjugator is then unique; that
    uniqueness is verified rather than assumed. At degree 2 the
    lexicographically first conjugator is returned.
    """
    if b1.degree != b2.degree:
        raise DegreeMismatchError("bases of different degrees are never conjugate")
    n = b1.degree
    if n > MAX_CONJUGACY_DEGREE:
        raise CapExceededError(f"conjugacy search is limited to degree {MAX_CONJUGACY_DEGREE}")
    s1, t1 = b1.s.image, b1.t.image
    s2, t2 = b2.s.image, b2.t.image
    found: Optional[tuple[int, ...]] = None
    for r in itertools.permutations(range(n)):
        ok = True
        for i in range(n):
            if s2[r[i]] != r[s1[i]] or t2[r[i]] != r[t1[i]]:
                ok = False
                break
        if ok:
            if found is not None:
                if n >= 3:
                    raise AssertionError("conjugator of a basis must be unique at degree >= 3")
                break
            found = r
    return None if found is None else Perm(found)


def count_generating_pairs(n: int, allow_equal: bool = False) -> int:
    """Count ordered pairs (s, t) with <s, t> = S_n by plain enumeration."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > 5:
        raise CapExceededError("generating-pair enumeration is limited to degree 5")
    perms = list(itertools.permutations(range(n)))
    count = 0
    for s in perms:
        for t in perms:
            if not allow_equal and s == t:
                continue
            if _images_generate_symmetric([s, t], n):
                count += 1
    return count
