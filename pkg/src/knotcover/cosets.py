"""Coset tables: right actions of a presentation's generators on numbered
cosets, plus three ways to build them.

Cosets are numbered from 1; coset 1 is the subgroup itself.  Tracing a word
applies its syllables left to right, matching the word-evaluation convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapacityError, InvalidHomomorphismError, TableIntegrityError
from .perm import compose
from .words import GenSym, Presentation, Word

DEFAULT_COSET_CAP = 100_000


@dataclass(frozen=True)
class CosetTable:
    """Right action of each generator on the cosets 1..index.

    ``action[gi][c - 1]`` is the image of coset ``c`` under generator number
    ``gi``; every row must be a permutation of 1..index.
    """

    gens: tuple[GenSym, ...]
    action: tuple[tuple[int, ...], ...]
    origin: str = ""
    index: int = 0

    def __post_init__(self):
        if len(self.action) != len(self.gens):
            raise TableIntegrityError("one action row per generator required")
        for g, row in zip(self.gens, self.action):
            if sorted(row) != list(range(1, self.index + 1)):
                raise TableIntegrityError(
                    f"action of {g.name} is not a permutation of 1..{self.index}"
                )

    @cached_property
    def _gen_index(self) -> dict[GenSym, int]:
        return {g: i for i, g in enumerate(self.gens)}

    @cached_property
    def _inverse_action(self) -> tuple[tuple[int, ...], ...]:
        rows = []
        for row in self.action:
            inv = [0] * self.index
            for c, img in enumerate(row, start=1):
                inv[img - 1] = c
            rows.append(tuple(inv))
        return tuple(rows)

    def step(self, coset: int, sym: GenSym, sign: int = 1) -> int:
        gi = self._gen_index[sym]
        row = self.action[gi] if sign > 0 else self._inverse_action[gi]
        return row[coset - 1]

    def trace(self, coset: int, w: Word) -> int:
        for sym, sign in w:
            coset = self.step(coset, sym, sign)
        return coset

    def word_action(self, w: Word) -> tuple[int, ...]:
        return tuple(self.trace(c, w) for c in range(1, self.index + 1))

    def is_transitive(self) -> bool:
        return orbit_transitive(self, [Word(((g, 1),)) for g in self.gens])

    def verify(self, p: Presentation) -> None:
        """Raise TableIntegrityError unless this table really is the coset
        action of a subgroup of the presented group: generators match, every
        relator acts trivially, and the action is transitive."""
        if tuple(p.generators) != self.gens:
            raise TableIntegrityError("table generators do not match presentation")
        for i, r in enumerate(p.relators):
            for c in range(1, self.index + 1):
                if self.trace(c, r) != c:
                    raise TableIntegrityError(
                        f"relator {p.relator_name(i)} moves coset {c}"
                    )
        if not self.is_transitive():
            raise TableIntegrityError("coset action is not transitive")

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "action": {g.name: list(row) for g, row in zip(self.gens, self.action)},
        }


def orbit_transitive(t: CosetTable, words: Sequence[Word]) -> bool:
    """True iff the subgroup generated by the traced actions of ``words``
    moves coset 1 onto every coset."""
    perms = [t.word_action(w) for w in words]
    inverses = []
    for row in perms:
        inv = [0] * t.index
        for c, img in enumerate(row, start=1):
            inv[img - 1] = c
        inverses.append(tuple(inv))
    seen = {1}
    frontier = [1]
    while frontier:
        c = frontier.pop()
        for row in perms + inverses:
            d = row[c - 1]
            if d not in seen:
                seen.add(d)
                frontier.append(d)
    return len(seen) == t.index


def kernel_coset_table(p: Presentation, assignment) -> CosetTable:
    """Coset table of the kernel of the homomorphism given by ``assignment``.

    The cosets are the image-group elements in closure() discovery order
    (identity first), and generator g sends the coset of x to the coset of
    x * image(g).  The assignment must satisfy every relator.
    """
    from .homcheck import check_relators  # deferred: homcheck imports words only

    report = check_relators(p, assignment)
    if not report.ok:
        names = ", ".join(v.name for v in report.violations)
        raise InvalidHomomorphismError(
            f"assignment violates relators: {names}"
        )
    images = assignment.values_in_order(p.generators)
    from .perm import closure

    group = closure(images)
    position = {elem: i + 1 for i, elem in enumerate(group.elements)}
    action = tuple(
        tuple(position[compose(elem, img)] for elem in group.elements)
        for img in images
    )
    return CosetTable(
        gens=tuple(p.generators),
        action=action,
        origin=f"kernel:{assignment.label or 'assignment'}",
        index=group.order,
    )


def cyclic_cover_table(p: Presentation, k: int) -> CosetTable:
    """Coset table of the k-fold cyclic cover subgroup: every generator
    steps each coset forward by one, mod k.

    Valid only when every relator has total exponent zero, i.e. when the
    generator-to-1 map really defines a homomorphism onto the integers.
    """
    if k < 1:
        raise ValueError(f"fold count must be positive, got {k}")
    for i, r in enumerate(p.relators):
        e = r.total_exponent()
        if e != 0:
            raise TableIntegrityError(
                f"relator {p.relator_name(i)} has total exponent {e}, "
                "so the cyclic cover is not defined"
            )
    row = tuple(c % k + 1 for c in range(1, k + 1))
    return CosetTable(
        gens=tuple(p.generators),
        action=tuple(row for _ in p.generators),
        origin=f"cyclic:{k}",
        index=k,
    )


def todd_coxeter(
    p: Presentation,
    subgroup_gens: Iterable[Word] = (),
    cap: int = DEFAULT_COSET_CAP,
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``.

    HLT strategy: scan and fill every relator at every live coset in input
    order, then define any still-missing neighbours; coincidences merge via
    union-find keeping the smaller coset number.  Deterministic for fixed
    input.  Raises CapacityError once more than ``cap`` cosets have been
    defined; a partial table is never returned.
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    gens = tuple(p.generators)
    gen_index = {g: i for i, g in enumerate(gens)}
    ngens = len(gens)
    relators = [
        [(gen_index[sym], sign) for sym, sign in r] for r in p.relators
    ]
    subgroup_words = [
        [(gen_index[sym], sign) for sym, sign in w] for w in subgroup_gens
    ]

    fwd: list[list[int | None]] = []
    bwd: list[list[int | None]] = []
    parent: list[int] = []

    def new_coset() -> int:
        if len(parent) >= cap:
            raise CapacityError(
                f"coset enumeration exceeded cap of {cap} cosets"
            )
        fwd.append([None] * ngens)
        bwd.append([None] * ngens)
        parent.append(len(parent))
        return len(parent) - 1

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def step(c: int, gi: int, sign: int) -> int | None:
        d = (fwd if sign > 0 else bwd)[c][gi]
        return None if d is None else find(d)

    # Invariant between operations: for every live representative c,
    # fwd[c][gi] and bwd[c][gi] are None or live representatives, and edges
    # always come in reciprocal pairs fwd[c][gi] = d <-> bwd[d][gi] = c.
    merge_queue: list[tuple[int, int]] = []

    def set_edge(c: int, gi: int, d: int) -> None:
        """Record c * g = d, queueing coincidences on conflict."""
        c, d = find(c), find(d)
        e = fwd[c][gi]
        if e is not None:
            if e != d:
                merge_queue.append((e, d))
            return
        e = bwd[d][gi]
        if e is not None:
            # the g-action is injective, so two preimages of d coincide
            if e != c:
                merge_queue.append((e, c))
            return
        fwd[c][gi] = d
        bwd[d][gi] = c

    def process_merges() -> None:
        while merge_queue:
            a, b = merge_queue.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            moved: list[tuple[int, int, int]] = []
            for gi in range(ngens):
                d = fwd[b][gi]
                if d is not None:
                    fwd[b][gi] = None
                    bwd[d][gi] = None
                    moved.append((gi, 1, d))
                d = bwd[b][gi]
                if d is not None:
                    bwd[b][gi] = None
                    fwd[d][gi] = None
                    moved.append((gi, -1, d))
            parent[b] = a
            for gi, sign, d in moved:
                if sign > 0:
                    set_edge(a, gi, find(d))
                else:
                    set_edge(find(d), gi, a)

    def scan_and_fill(start: int, w: list[tuple[int, int]]) -> None:
        if not w:
            return
        i, f = 0, start
        j, b = len(w) - 1, start
        while True:
            while i <= j:
                nxt = step(f, *w[i])
                if nxt is None:
                    break
                f, i = nxt, i + 1
            if i > j:
                if f != b:
                    merge_queue.append((f, b))
                    process_merges()
                return
            while j >= i:
                gi, sign = w[j]
                prev = step(b, gi, -sign)
                if prev is None:
                    break
                b, j = prev, j - 1
            if j < i:
                merge_queue.append((f, b))
                process_merges()
                return
            gi, sign = w[i]
            if i == j:
                # single gap: closing deduction, may reveal a coincidence
                if sign > 0:
                    set_edge(f, gi, b)
                else:
                    set_edge(b, gi, f)
                process_merges()
                return
            # gap of length > 1: fill with a fresh coset (cannot conflict)
            d = new_coset()
            if sign > 0:
                set_edge(f, gi, d)
            else:
                set_edge(d, gi, f)
            f, i = d, i + 1

    start = new_coset()
    for w in subgroup_words:
        scan_and_fill(find(start), w)
    c = 0
    while c < len(parent):
        if find(c) == c:
            for r in relators:
                if find(c) != c:
                    break
                scan_and_fill(c, r)
            if find(c) == c:
                for gi in range(ngens):
                    if find(c) != c:
                        break
                    if step(c, gi, 1) is None:
                        set_edge(c, gi, new_coset())
                        process_merges()
                    if find(c) == c and step(c, gi, -1) is None:
                        d = new_coset()
                        set_edge(d, gi, c)
                        process_merges()
        c += 1

    live = [c for c in range(len(parent)) if find(c) == c]
    number = {c: i + 1 for i, c in enumerate(live)}
    action = tuple(
        tuple(number[find(fwd[c][gi])] for c in live) for gi in range(ngens)
    )
    table = CosetTable(
        gens=gens,
        action=action,
        origin=f"todd-coxeter:{p.label or 'presentation'}",
        index=len(live),
    )
    table.verify(p)
    for w in subgroup_gens:
        if table.trace(1, w) != 1:
            raise TableIntegrityError("subgroup generator does not fix coset 1")
    return table
