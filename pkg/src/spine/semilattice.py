"""Finite join-semilattices, hereditary directed subsets and semicharacters.

Elements are opaque integer identifiers supplied by the caller; the join is
stored as a dense table indexed by position so that exhaustive checks and the
brute-force duality enumerations are cheap lookups.

The order is ``x <= y  iff  x v y = y``.  A hereditary set is a non-empty,
downward closed, join-closed subset; a semicharacter is a non-zero
{0,1}-valued function with ``w(x v y) = w(x) w(y)``.  For a finite semilattice
these two families are in bijection via indicator functions, and every
hereditary set is principal (generated by its join).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import InvalidHereditarySetError, SizeLimitError, UnknownElementError

#: Largest semilattice the brute-force enumerations will accept.
MAX_BRUTE_FORCE = 20


class Violation(NamedTuple):
    law: str
    elements: tuple[int, ...]


@dataclass(frozen=True)
class FiniteSemilattice:
    elements: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    unit: int | None = None
    labels: tuple[str, ...] | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if len(set(elements)) != len(elements):
            raise ValueError("element identifiers must be distinct")
        index = {e: i for i, e in enumerate(elements)}
        object.__setattr__(self, "_index", index)
        n = len(elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("join table must be a total n x n table")
        for row in self.table:
            for v in row:
                if v not in index:
                    raise ValueError(f"join table produces {v!r}, which is not an element")
        if self.unit is not None and self.unit not in index:
            raise UnknownElementError(f"unit {self.unit!r} is not an element")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per element required")

    @classmethod
    def from_join(
        cls,
        elements: Sequence[int],
        join: Callable[[int, int], int],
        unit: int | None = None,
        labels: Sequence[str] | None = None,
    ) -> "FiniteSemilattice":
        elements = tuple(elements)
        table = tuple(tuple(join(a, b) for b in elements) for a in elements)
        return cls(elements, table, unit, tuple(labels) if labels is not None else None)

    @classmethod
    def chain(cls, labels: Sequence[str]) -> "FiniteSemilattice":
        n = len(labels)
        return cls.from_join(range(n), max, unit=0 if n else None, labels=labels)

    @classmethod
    def free(cls, generators: Sequence[str]) -> "FiniteSemilattice":
        """Subsets of the generators under union; ids are bitmasks."""
        k = len(generators)
        labels = [
            "{" + ",".join(g for i, g in enumerate(generators) if mask >> i & 1) + "}"
            for mask in range(1 << k)
        ]
        return cls.from_join(range(1 << k), lambda a, b: a | b, unit=0, labels=labels)

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, x: int) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElementError(f"{x!r} is not an element of the semilattice") from None

    def join(self, x: int, y: int) -> int:
        return self.table[self.position(x)][self.position(y)]

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(x)
        return self.labels[self.position(x)]

    def id_for_label(self, label: str) -> int:
        if self.labels is not None and label in self.labels:
            return self.elements[self.labels.index(label)]
        raise UnknownElementError(f"no element labelled {label!r}")


def verify_axioms(s: FiniteSemilattice) -> list[Violation]:
    """Exhaustively check commutativity, associativity, idempotency and the unit law."""
    out: list[Violation] = []
    els = s.elements
    for x in els:
        if s.join(x, x) != x:
            out.append(Violation("idempotency", (x,)))
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            if s.join(x, y) != s.join(y, x):
                out.append(Violation("commutativity", (x, y)))
    for x, y, z in product(els, repeat=3):
        if s.join(s.join(x, y), z) != s.join(x, s.join(y, z)):
            out.append(Violation("associativity", (x, y, z)))
    if s.unit is not None:
        for x in els:
            if s.join(s.unit, x) != x or s.join(x, s.unit) != x:
                out.append(Violation("unit", (x,)))
    return out


def leq(s: FiniteSemilattice, x: int, y: int) -> bool:
    return s.join(x, y) == y


def principal_set(s: FiniteSemilattice, x: int) -> frozenset[int]:
    s.position(x)
    return frozenset(y for y in s.elements if leq(s, y, x))


def is_hereditary(s: FiniteSemilattice, members: Iterable[int]) -> bool:
    members = frozenset(members)
    if not members:
        return False
    for m in members:
        s.position(m)
    for m in members:
        if not principal_set(s, m) <= members:
            return False
    return all(s.join(a, b) in members for a in members for b in members)


def _check_size(s: FiniteSemilattice) -> None:
    if len(s) > MAX_BRUTE_FORCE:
        raise SizeLimitError(
            f"brute-force enumeration refused for {len(s)} elements (limit {MAX_BRUTE_FORCE})"
        )


def _masks(s: FiniteSemilattice) -> tuple[list[int], list[list[int]]]:
    n = len(s)
    down = [0] * n
    for i, x in enumerate(s.elements):
        for j, y in enumerate(s.elements):
            if s.table[j][i] == x:
                down[i] |= 1 << j
    join_pos = [[s.position(s.table[i][j]) for j in range(n)] for i in range(n)]
    return down, join_pos


def enumerate_hereditary_sets(s: FiniteSemilattice) -> list[frozenset[int]]:
    """All hereditary directed subsets, by brute force over non-empty subsets.

    Sets are listed in increasing order of their bitmask over positions.
    """
    _check_size(s)
    n = len(s)
    down, join_pos = _masks(s)
    out = []
    for mask in range(1, 1 << n):
        ok = True
        idx = [i for i in range(n) if mask >> i & 1]
        for i in idx:
            if down[i] & ~mask:
                ok = False
                break
        if ok:
            for a in idx:
                row = join_pos[a]
                if any(not mask >> row[b] & 1 for b in idx):
                    ok = False
                    break
        if ok:
            out.append(frozenset(s.elements[i] for i in idx))
    return out


def semicharacters(s: FiniteSemilattice) -> list[dict[int, int]]:
    """All non-zero multiplicative {0,1}-valued functions, by brute force."""
    _check_size(s)
    n = len(s)
    _, join_pos = _masks(s)
    out = []
    for mask in range(1, 1 << n):
        if all(
            (mask >> join_pos[a][b] & 1) == ((mask >> a & 1) & (mask >> b & 1))
            for a in range(n)
            for b in range(a, n)
        ):
            out.append({x: mask >> i & 1 for i, x in enumerate(s.elements)})
    return out


def indicator(s: FiniteSemilattice, members: Iterable[int]) -> dict[int, int]:
    members = frozenset(members)
    return {x: int(x in members) for x in s.elements}


def is_principal(s: FiniteSemilattice, h: Iterable[int]) -> tuple[bool, int | None]:
    """Whether h equals principal_set(s, x) for some x; returns (flag, witness)."""
    h = frozenset(h)
    if not is_hereditary(s, h):
        raise InvalidHereditarySetError(f"{sorted(h)} is not a hereditary directed set")
    for x in h:
        if principal_set(s, x) == h:
            return True, x
    return False, None


def meet(s: FiniteSemilattice, x: int, y: int) -> int | None:
    """Greatest lower bound of x and y, if one exists."""
    common = principal_set(s, x) & principal_set(s, y)
    for z in common:
        if principal_set(s, z) == common:
            return z
    return None


def covering_pairs(s: FiniteSemilattice) -> list[tuple[int, int]]:
    """Pairs (x, y) with x < y and nothing strictly between, in position order."""
    els = s.elements
    below = {y: [x for x in els if x != y and leq(s, x, y)] for y in els}
    out = []
    for x in els:
        for y in els:
            if x == y or not leq(s, x, y):
                continue
            if not any(z != x and leq(s, x, z) for z in below[y]):
                out.append((x, y))
    return out
