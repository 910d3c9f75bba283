"""Complete deterministic automata whose letters act by total maps on states.

Words act left to right: run(a, "xy") applies x first, then y. Nothing at this
level requires letters to act bijectively; operations that do need that (the
pair-graph machinery in product.py) check it themselves.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import (
    AutomatonFormatError,
    CapExceededError,
    CycleFormatError,
    NotAPermutationError,
)
from .perm import DEFAULT_CLOSURE_CAP, Perm, format_cycles, parse_cycles


class Semiautomaton:
    """States 0..n-1, an ordered alphabet, one total letter action each, and
    an initial state."""

    __slots__ = ("state_count", "alphabet", "actions", "initial")

    def __init__(
        self,
        state_count: int,
        alphabet: Sequence[str],
        actions: dict[str, Sequence[int]],
        initial: int = 0,
    ):
        if state_count < 1:
            raise ValueError("need at least one state")
        letters = tuple(alphabet)
        if not letters:
            raise ValueError("alphabet must not be empty")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        for letter in letters:
            if not letter or any(c.isspace() for c in letter) or "#" in letter:
                raise ValueError(f"bad letter {letter!r}")
        if set(actions) != set(letters):
            raise ValueError("actions must cover exactly the alphabet")
        fixed: dict[str, tuple[int, ...]] = {}
        for letter in letters:
            act = tuple(actions[letter])
            if len(act) != state_count:
                raise ValueError(f"action for {letter!r} must list {state_count} images")
            for v in act:
                if not isinstance(v, int) or not 0 <= v < state_count:
                    raise ValueError(f"action for {letter!r} leaves the state set: {v!r}")
            fixed[letter] = act
        if not 0 <= initial < state_count:
            raise ValueError(f"initial state {initial} out of range")
        self.state_count = state_count
        self.alphabet = letters
        self.actions = fixed
        self.initial = initial

    def step(self, state: int, letter: str) -> int:
        try:
            act = self.actions[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None
        return act[state]

    def is_permutation_automaton(self) -> bool:
        n = self.state_count
        return all(len(set(act)) == n for act in self.actions.values())

    def require_permutations(self) -> None:
        for letter, act in self.actions.items():
            if len(set(act)) != self.state_count:
                raise NotAPermutationError(f"letter {letter!r} does not act bijectively")


class DFA(Semiautomaton):
    """A semiautomaton plus a set of final states.

    Empty and full final sets are allowed; they make the language trivial
    (complexity 1) and are reported as improper by proper_finals.
    """

    __slots__ = ("finals",)

    def __init__(self, state_count, alphabet, actions, initial, finals: Iterable[int]):
        super().__init__(state_count, alphabet, actions, initial)
        fset = frozenset(finals)
        for q in fset:
            if not isinstance(q, int) or not 0 <= q < state_count:
                raise ValueError(f"final state {q!r} out of range")
        self.finals = fset

    @property
    def proper_finals(self) -> bool:
        return 0 < len(self.finals) < self.state_count


def from_basis(basis, alphabet: Sequence[str] = ("a", "b"), initial: int = 0) -> Semiautomaton:
    """The semiautomaton whose first letter acts as s and second as t."""
    letters = tuple(alphabet)
    if len(letters) != 2:
        raise ValueError("a basis automaton has exactly two letters")
    return Semiautomaton(
        basis.degree,
        letters,
        {letters[0]: basis.s.image, letters[1]: basis.t.image},
        initial,
    )


def run(a: Semiautomaton, word: Iterable[str], start: Optional[int] = None) -> int:
    """Apply the word's letters left to right and return the ending state."""
    state = a.initial if start is None else start
    if not 0 <= state < a.state_count:
        raise ValueError(f"start state {state} out of range")
    for letter in word:
        state = a.step(state, letter)
    return state


def accepts(d: DFA, word: Iterable[str]) -> bool:
    return run(d, word) in d.finals


def reachable_states(a: Semiautomaton) -> tuple[int, ...]:
    """All states reachable from the initial state, ascending."""
    seen = bytearray(a.state_count)
    seen[a.initial] = 1
    frontier = [a.initial]
    acts = [a.actions[letter] for letter in a.alphabet]
    while frontier:
        step = []
        for q in frontier:
            for act in acts:
                v = act[q]
                if not seen[v]:
                    seen[v] = 1
                    step.append(v)
        frontier = step
    return tuple(q for q in range(a.state_count) if seen[q])


def is_connected(a: Semiautomaton) -> bool:
    return len(reachable_states(a)) == a.state_count


def is_strongly_connected(a: Semiautomaton) -> bool:
    """Whether every state can reach every other state."""
    n = a.state_count
    acts = [a.actions[letter] for letter in a.alphabet]
    for start in range(n):
        seen = bytearray(n)
        seen[start] = 1
        frontier = [start]
        count = 1
        while frontier:
            step = []
            for q in frontier:
                for act in acts:
                    v = act[q]
                    if not seen[v]:
                        seen[v] = 1
                        count += 1
                        step.append(v)
            frontier = step
        if count != n:
            return False
    return True


class TransitionSemigroup:
    """All transformations induced by nonempty words, with the letter map."""

    __slots__ = ("degree", "elements", "generators")

    def __init__(
        self,
        degree: int,
        elements: frozenset[tuple[int, ...]],
        generators: dict[str, tuple[int, ...]],
    ):
        self.degree = degree
        self.elements = elements
        self.generators = generators

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t: object) -> bool:
        return t in self.elements

    def is_group(self) -> bool:
        return all(len(set(t)) == self.degree for t in self.elements)

    def __repr__(self) -> str:
        return f"<TransitionSemigroup degree={self.degree} order={len(self.elements)}>"


def transition_semigroup(a: Semiautomaton, cap: Optional[int] = None) -> TransitionSemigroup:
    """Close the letter actions under word extension; error past the cap."""
    if cap is None:
        cap = DEFAULT_CLOSURE_CAP
    gens = {letter: a.actions[letter] for letter in a.alphabet}
    elements = set(gens.values())
    if len(elements) > cap:
        raise CapExceededError(f"transition semigroup exceeded cap of {cap}")
    frontier = list(elements)
    letter_acts = list(gens.values())
    while frontier:
        step = []
        for word_act in frontier:
            for act in letter_acts:
                # Extending the word by one letter applies that letter last.
                longer = tuple(map(act.__getitem__, word_act))
                if longer not in elements:
                    elements.add(longer)
                    if len(elements) > cap:
                        raise CapExceededError(f"transition semigroup exceeded cap of {cap}")
                    step.append(longer)
        frontier = step
    return TransitionSemigroup(a.state_count, frozenset(elements), gens)


def moore_classes(
    actions: Sequence[Sequence[int]],
    reachable: Sequence[int],
    finals_mask: int,
    state_count: int,
) -> list[int]:
    """Moore refinement over the reachable states.

    Returns a list mapping each state to its class id, -1 where unreachable.
    Class ids follow first occurrence along ascending states, so id order is
    smallest-member order.
    """
    cls = [-1] * state_count
    ids: dict = {}
    for q in reachable:
        key = (finals_mask >> q) & 1
        c = ids.get(key)
        if c is None:
            c = ids[key] = len(ids)
        cls[q] = c
    k = len(ids)
    nreach = len(reachable)
    if len(actions) == 2:
        a0, a1 = actions
        while k < nreach:
            ids = {}
            new = [-1] * state_count
            for q in reachable:
                key = (cls[q], cls[a0[q]], cls[a1[q]])
                c = ids.get(key)
                if c is None:
                    c = ids[key] = len(ids)
                new[q] = c
            if len(ids) == k:
                return new
            cls = new
            k = len(ids)
        return cls
    while k < nreach:
        ids = {}
        new = [-1] * state_count
        for q in reachable:
            key = (cls[q],) + tuple(cls[act[q]] for act in actions)
            c = ids.get(key)
            if c is None:
                c = ids[key] = len(ids)
            new[q] = c
        if len(ids) == k:
            return new
        cls = new
        k = len(ids)
    return cls


def moore_complexity(
    actions: Sequence[Sequence[int]],
    reachable: Sequence[int],
    finals_mask: int,
    state_count: int,
) -> int:
    """Class count of moore_classes, for callers that only need the number."""
    cls = moore_classes(actions, reachable, finals_mask, state_count)
    top = 0
    for q in reachable:
        if cls[q] > top:
            top = cls[q]
    return top + 1


def _finals_mask(finals: Iterable[int]) -> int:
    mask = 0
    for q in finals:
        mask |= 1 << q
    return mask


def minimize(d: DFA) -> tuple[DFA, int]:
    """The minimal DFA of d's language and its state complexity.

    Unreachable states are removed first, then Moore refinement merges
    equivalent ones. Classes are renumbered by smallest original state,
    ascending.
    """
    reach = reachable_states(d)
    acts = [d.actions[letter] for letter in d.alphabet]
    mask = _finals_mask(d.finals)
    cls = moore_classes(acts, reach, mask, d.state_count)
    k = max(cls[q] for q in reach) + 1
    reps = [-1] * k
    for q in reach:
        if reps[cls[q]] < 0:
            reps[cls[q]] = q
    new_actions = {
        letter: tuple(cls[act[reps[c]]] for c in range(k))
        for letter, act in zip(d.alphabet, acts)
    }
    new_finals = frozenset(c for c in range(k) if (mask >> reps[c]) & 1)
    quotient = DFA(k, d.alphabet, new_actions, cls[d.initial], new_finals)
    return quotient, k


def equivalence_classes(d: DFA) -> tuple[tuple[int, ...], ...]:
    """The partition of reachable states into language-equivalence classes,
    ordered by smallest member."""
    reach = reachable_states(d)
    acts = [d.actions[letter] for letter in d.alphabet]
    cls = moore_classes(acts, reach, _finals_mask(d.finals), d.state_count)
    k = max(cls[q] for q in reach) + 1
    groups: list[list[int]] = [[] for _ in range(k)]
    for q in reach:
        groups[cls[q]].append(q)
    return tuple(tuple(g) for g in groups)


def distinguishability_complexity(d: DFA) -> int:
    """State complexity computed again by the table-filling pair oracle.

    Deliberately a second, independent implementation: it never shares code
    with moore_classes and is used to cross-check it.
    """
    reach = list(reachable_states(d))
    finals = d.finals
    acts = [d.actions[letter] for letter in d.alphabet]
    marked: set[tuple[int, int]] = set()
    for i, p in enumerate(reach):
        for q in reach[i + 1 :]:
            if (p in finals) != (q in finals):
                marked.add((p, q))
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(reach):
            for q in reach[i + 1 :]:
                if (p, q) in marked:
                    continue
                for act in acts:
                    x, y = act[p], act[q]
                    if x == y:
                        continue
                    if x > y:
                        x, y = y, x
                    if (x, y) in marked:
                        marked.add((p, q))
                        changed = True
                        break
    parent = {q: q for q in reach}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, p in enumerate(reach):
        for q in reach[i + 1 :]:
            if (p, q) not in marked:
                rp, rq = find(p), find(q)
                if rp != rq:
                    parent[rq] = rp
    return len({find(q) for q in reach})


def is_uniformly_minimal(a: Semiautomaton) -> bool:
    """Whether every nonempty proper final set yields a minimal DFA."""
    n = a.state_count
    if n < 2:
        raise ValueError("uniform minimality needs at least two states")
    reach = reachable_states(a)
    if len(reach) != n:
        return False
    acts = [a.actions[letter] for letter in a.alphabet]
    for mask in range(1, (1 << n) - 1):
        cls = moore_classes(acts, reach, mask, n)
        if max(cls[q] for q in reach) + 1 != n:
            return False
    return True


# ---------------------------------------------------------------------------
# Text format. Line-oriented, '#' starts a comment, keys are
# states / alphabet / trans / initial / final; final is optional.

def parse_automaton_text(text: str) -> Semiautomaton | DFA:
    """Parse the line format into a Semiautomaton, or a DFA when a final line
    is present. Strict: unknown keys, duplicates, missing parts and bad
    indices all raise AutomatonFormatError with the line number."""
    states_line = alphabet_line = initial_line = final_line = None
    states: Optional[int] = None
    alphabet: Optional[tuple[str, ...]] = None
    initial: Optional[int] = None
    finals: Optional[list[int]] = None
    trans: dict[str, tuple[int, ...]] = {}
    pending_trans: list[tuple[int, str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        key = fields[0]
        if key == "states":
            if states_line is not None:
                raise AutomatonFormatError("duplicate states line", lineno)
            states_line = lineno
            if len(fields) != 2 or not fields[1].isdigit():
                raise AutomatonFormatError("states needs a single count", lineno)
            states = int(fields[1])
            if states < 1:
                raise AutomatonFormatError("need at least one state", lineno)
        elif key == "alphabet":
            if alphabet_line is not None:
                raise AutomatonFormatError("duplicate alphabet line", lineno)
            alphabet_line = lineno
            if len(fields) < 2:
                raise AutomatonFormatError("alphabet needs at least one letter", lineno)
            alphabet = tuple(fields[1:])
            if len(set(alphabet)) != len(alphabet):
                raise AutomatonFormatError("alphabet letters must be distinct", lineno)
        elif key == "trans":
            if len(fields) < 3:
                raise AutomatonFormatError("trans needs a letter and a permutation", lineno)
            pending_trans.append((lineno, fields[1], "".join(fields[2:])))
        elif key == "initial":
            if initial_line is not None:
                raise AutomatonFormatError("duplicate initial line", lineno)
            initial_line = lineno
            if len(fields) != 2 or not fields[1].isdigit():
                raise AutomatonFormatError("initial needs a single state", lineno)
            initial = int(fields[1])
        elif key == "final":
            if final_line is not None:
                raise AutomatonFormatError("duplicate final line", lineno)
            final_line = lineno
            for tok in fields[1:]:
                if not tok.isdigit():
                    raise AutomatonFormatError(f"bad final state {tok!r}", lineno)
            finals = [int(tok) for tok in fields[1:]]
        else:
            raise AutomatonFormatError(f"unknown key {key!r}", lineno)

    if states is None:
        raise AutomatonFormatError("missing states line")
    if alphabet is None:
        raise AutomatonFormatError("missing alphabet line")
    if initial is None:
        raise AutomatonFormatError("missing initial line")
    if not 0 <= initial < states:
        raise AutomatonFormatError(f"initial state {initial} out of range", initial_line)

    for lineno, letter, expr in pending_trans:
        if letter not in alphabet:
            raise AutomatonFormatError(f"trans names unknown letter {letter!r}", lineno)
        if letter in trans:
            raise AutomatonFormatError(f"duplicate trans line for {letter!r}", lineno)
        try:
            trans[letter] = parse_cycles(expr, states).image
        except CycleFormatError as e:
            raise AutomatonFormatError(str(e), lineno) from None
    for letter in alphabet:
        if letter not in trans:
            raise AutomatonFormatError(f"missing trans line for letter {letter!r}")

    if finals is not None:
        for q in finals:
            if q >= states:
                raise AutomatonFormatError(f"final state {q} out of range", final_line)
        return DFA(states, alphabet, trans, initial, finals)
    return Semiautomaton(states, alphabet, trans, initial)


def format_automaton_text(a: Semiautomaton) -> str:
    """Serialize back to the text format; letter actions must be permutations."""
    a.require_permutations()
    lines = [f"states {a.state_count}", "alphabet " + " ".join(a.alphabet)]
    for letter in a.alphabet:
        lines.append(f"trans {letter} {format_cycles(Perm(a.actions[letter]))}")
    lines.append(f"initial {a.initial}")
    if isinstance(a, DFA):
        lines.append("final" + "".join(f" {q}" for q in sorted(a.finals)))
    return "\n".join(lines) + "\n"
