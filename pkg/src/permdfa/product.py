"""Direct products of automata, their pair graphs, and structural predictions.

Product state (i, j) sits at flat index i * n + j where n is the right state
count. Everything here that walks the pair graph requires permutation letter
actions and says so loudly when they are not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .automaton import DFA, Semiautomaton, is_connected
from .boolops import BoolFn
from .errors import CapExceededError
from .perm import Basis, bases_conjugate

# Enough for the full product group of two degree-6 factors.
DEFAULT_PRODUCT_GROUP_CAP = math.factorial(6) ** 2


class ProductAutomaton(Semiautomaton):
    """Componentwise product of two semiautomata over the same alphabet."""

    __slots__ = ("left", "right", "left_count", "right_count")

    def __init__(self, left: Semiautomaton, right: Semiautomaton):
        if left.alphabet != right.alphabet:
            raise ValueError(
                f"alphabets differ: {left.alphabet!r} vs {right.alphabet!r}"
            )
        m, n = left.state_count, right.state_count
        actions = {}
        for letter in left.alphabet:
            la, ra = left.actions[letter], right.actions[letter]
            act = [0] * (m * n)
            k = 0
            for i in range(m):
                base = la[i] * n
                for j in range(n):
                    act[k] = base + ra[j]
                    k += 1
            actions[letter] = act
        super().__init__(m * n, left.alphabet, actions, left.initial * n + right.initial)
        self.left = left
        self.right = right
        self.left_count = m
        self.right_count = n

    def flat(self, i: int, j: int) -> int:
        return i * self.right_count + j

    def unflat(self, k: int) -> tuple[int, int]:
        return divmod(k, self.right_count)


def direct_product(left: Semiautomaton, right: Semiautomaton) -> ProductAutomaton:
    return ProductAutomaton(left, right)


def flat_final_set(
    f: BoolFn,
    left_finals: Iterable[int],
    left_count: int,
    right_finals: Iterable[int],
    right_count: int,
) -> frozenset[int]:
    """Product final states as flat indices: f(i in F, j in F') selects i*n+j."""
    lf = frozenset(left_finals)
    rf = frozenset(right_finals)
    out = []
    for i in range(left_count):
        x = i in lf
        base = i * right_count
        for j in range(right_count):
            if f(x, j in rf):
                out.append(base + j)
    return frozenset(out)


def product_dfa(left: DFA, right: DFA, f: BoolFn) -> DFA:
    """The DFA accepting words w with f(w in L, w in L')."""
    p = direct_product(left, right)
    finals = flat_final_set(f, left.finals, p.left_count, right.finals, p.right_count)
    return DFA(p.state_count, p.alphabet, dict(p.actions), p.initial, finals)


@dataclass(frozen=True)
class ComponentLabel:
    """kind is C1 (coordinates both differ), C2 (left equal), C3 (right equal)
    or OTHER; exact marks a component that is the whole class of its kind."""

    kind: str
    exact: bool


@dataclass(frozen=True)
class PairGraph:
    """All unordered pairs of distinct product states, grouped into the
    components induced by the letter actions."""

    left_count: int
    right_count: int
    vertices: tuple[tuple[int, int], ...]
    components: tuple[tuple[tuple[int, int], ...], ...]


def pair_graph(p: ProductAutomaton) -> PairGraph:
    """Components of the pair graph under the per-letter induced maps.

    Letters must act bijectively; then every induced map permutes the vertex
    set and plain union-find closure gives exactly the components.
    """
    p.require_permutations()
    total = p.state_count
    # Triangular indexing of pairs (u, v) with u < v.
    row_base = [0] * total
    acc = 0
    for u in range(total):
        row_base[u] = acc - u - 1
        acc += total - u - 1
    nverts = total * (total - 1) // 2

    parent = list(range(nverts))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for act in p.actions.values():
        for u in range(total):
            au = act[u]
            for v in range(u + 1, total):
                av = act[v]
                if au < av:
                    img = row_base[au] + av
                else:
                    img = row_base[av] + au
                ra, rb = find(row_base[u] + v), find(img)
                if ra != rb:
                    parent[rb] = ra

    groups: dict[int, list[tuple[int, int]]] = {}
    vertices = []
    for u in range(total):
        for v in range(u + 1, total):
            vert = (u, v)
            vertices.append(vert)
            groups.setdefault(find(row_base[u] + v), []).append(vert)
    components = sorted(groups.values(), key=lambda comp: comp[0])
    return PairGraph(
        p.left_count,
        p.right_count,
        tuple(vertices),
        tuple(tuple(comp) for comp in components),
    )


def classify_component(
    component: Sequence[tuple[int, int]], left_count: int, right_count: int
) -> ComponentLabel:
    """Label a component by the coordinate pattern of its pairs."""
    n = right_count
    kinds = set()
    for (u, v) in component:
        i, j = divmod(u, n)
        k, l = divmod(v, n)
        if i == k:
            kinds.add("C2")
        elif j == l:
            kinds.add("C3")
        else:
            kinds.add("C1")
    if len(kinds) != 1:
        return ComponentLabel("OTHER", False)
    kind = kinds.pop()
    m = left_count
    full = {
        "C1": m * n * (m - 1) * (n - 1) // 2,
        "C2": m * n * (n - 1) // 2,
        "C3": n * m * (m - 1) // 2,
    }[kind]
    return ComponentLabel(kind, len(component) == full)


def _as_mask(finals: Iterable[int] | int) -> int:
    if isinstance(finals, int):
        return finals
    mask = 0
    for q in finals:
        mask |= 1 << q
    return mask


def has_distinguishing_pair(component: Sequence[tuple[int, int]], finals: Iterable[int] | int) -> bool:
    """Whether some pair of the component has exactly one final member."""
    mask = _as_mask(finals)
    for (u, v) in component:
        if ((mask >> u) ^ (mask >> v)) & 1:
            return True
    return False


def predict_minimal(p: ProductAutomaton, finals: Iterable[int] | int) -> bool:
    """Structural prediction: connected, and every pair-graph component has a
    distinguishing pair.

    This route never runs the minimizer; campaigns compare it against the
    minimization oracle on every instance.
    """
    if not is_connected(p):
        return False
    mask = _as_mask(finals)
    return all(has_distinguishing_pair(c, mask) for c in pair_graph(p).components)


def predict_connected(left_basis: Basis, right_basis: Basis) -> bool:
    """Structural prediction of product connectivity: degrees differ, or no
    single permutation conjugates one basis onto the other."""
    if left_basis.degree != right_basis.degree:
        return True
    return bases_conjugate(left_basis, right_basis) is None


@dataclass(frozen=True)
class StabilizerImage:
    """Classification of the right-coordinate action of the subgroup that
    fixes left state 0."""

    kind: str  # "symmetric" | "alternating" | "point_stabilizer" | "other"
    fixed_point: Optional[int]
    order: int


def _images_even(t: tuple[int, ...]) -> bool:
    seen = [False] * len(t)
    swaps = 0
    for start in range(len(t)):
        if seen[start]:
            continue
        q = start
        size = 0
        while not seen[q]:
            seen[q] = True
            size += 1
            q = t[q]
        swaps += size - 1
    return swaps % 2 == 0


def stabilizer_image(p: ProductAutomaton, cap: Optional[int] = None) -> StabilizerImage:
    """Build the product transition group, keep the elements whose left part
    fixes 0, and classify what their right parts form."""
    p.require_permutations()
    if cap is None:
        cap = DEFAULT_PRODUCT_GROUP_CAP
    m, n = p.left_count, p.right_count
    gens = [
        (tuple(p.left.actions[letter]), tuple(p.right.actions[letter]))
        for letter in p.alphabet
    ]
    ident = (tuple(range(m)), tuple(range(n)))
    elements = {ident}
    frontier = [ident]
    while frontier:
        step = []
        for (xl, xr) in frontier:
            for (gl, gr) in gens:
                y = (tuple(map(xl.__getitem__, gl)), tuple(map(xr.__getitem__, gr)))
                if y not in elements:
                    elements.add(y)
                    if len(elements) > cap:
                        raise CapExceededError(f"product group exceeded cap of {cap}")
                    step.append(y)
        frontier = step

    image = {r for (l, r) in elements if l[0] == 0}
    order = len(image)
    if order == math.factorial(n):
        return StabilizerImage("symmetric", None, order)
    common = [q for q in range(n) if all(r[q] == q for r in image)]
    if common and order == math.factorial(n - 1):
        return StabilizerImage("point_stabilizer", common[0], order)
    if order == math.factorial(n) // 2 and all(_images_even(r) for r in image):
        return StabilizerImage("alternating", None, order)
    return StabilizerImage("other", None, order)


def format_pair_graph(
    p: ProductAutomaton,
    graph: Optional[PairGraph] = None,
    finals: Optional[Iterable[int] | int] = None,
) -> str:
    """Deterministic listing: components by smallest vertex, vertices in
    lexicographic order, a '*' on distinguishing pairs when finals are given."""
    if graph is None:
        graph = pair_graph(p)
    n = p.right_count
    mask = None if finals is None else _as_mask(finals)
    connected = is_connected(p)
    lines = [
        f"pairgraph m={p.left_count} n={p.right_count} "
        f"vertices={len(graph.vertices)} components={len(graph.components)} "
        f"connected={'true' if connected else 'false'}"
    ]
    all_distinguished = True
    for idx, comp in enumerate(graph.components, start=1):
        label = classify_component(comp, p.left_count, p.right_count)
        lines.append(
            f"component {idx} kind={label.kind} "
            f"exact={'true' if label.exact else 'false'} size={len(comp)}"
        )
        found = False
        for (u, v) in comp:
            star = ""
            if mask is not None and ((mask >> u) ^ (mask >> v)) & 1:
                star = " *"
                found = True
            i, j = divmod(u, n)
            k, l = divmod(v, n)
            lines.append(f"  {{({i},{j}),({k},{l})}}{star}")
        if mask is not None and not found:
            all_distinguished = False
    if mask is not None:
        value = connected and all_distinguished
        lines.append(f"predicted minimal: {'true' if value else 'false'}")
    return "\n".join(lines) + "\n"
