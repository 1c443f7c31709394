"""Finite topological spaces stored as explicit open-set families.

Every finite topology is Alexandrov: the intersection of all opens containing
a point is itself open, and the open sets are exactly the upsets of the
specialization preorder (x <= y iff x lies in the closure of {y}).  That
correspondence makes topologies and preorders interconvertible without loss,
but the open family is always stored explicitly so that set-level operations
(closure, kernel, lambda-closure) are computed from the family itself and
never silently route through the order side.

Points are opaque ids 0..n-1; subsets are bitmaps over those ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator


class TopologyError(ValueError):
    """An open-set family violates the topology axioms."""


class MissingEmptyOrFullError(TopologyError):
    pass


class NotClosedUnderUnionError(TopologyError):
    def __init__(self, witness: tuple[PointSet, PointSet]):
        self.witness = witness
        super().__init__(
            f"opens {witness[0]} and {witness[1]} have a union outside the family"
        )


class NotClosedUnderIntersectionError(TopologyError):
    def __init__(self, witness: tuple[PointSet, PointSet]):
        self.witness = witness
        super().__init__(
            f"opens {witness[0]} and {witness[1]} have an intersection outside the family"
        )


def _bits_of(points: Iterable[int], universe_size: int) -> int:
    bits = 0
    for p in points:
        if not 0 <= p < universe_size:
            raise ValueError(f"point {p} outside universe of size {universe_size}")
        bits |= 1 << p
    return bits


def bit_indices(bits: int) -> Iterator[int]:
    """Yield the set point ids of a bitmap in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class PointSet:
    """A subset of an n-point universe, stored as a bitmap."""

    bits: int
    universe_size: int

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError("universe size must be nonnegative")
        if not 0 <= self.bits < (1 << self.universe_size):
            raise ValueError(f"bitmap {self.bits:#x} outside universe of size {self.universe_size}")

    @classmethod
    def empty(cls, universe_size: int) -> PointSet:
        return cls(0, universe_size)

    @classmethod
    def full(cls, universe_size: int) -> PointSet:
        return cls((1 << universe_size) - 1, universe_size)

    @classmethod
    def single(cls, point: int, universe_size: int) -> PointSet:
        return cls(_bits_of((point,), universe_size), universe_size)

    @classmethod
    def from_points(cls, points: Iterable[int], universe_size: int) -> PointSet:
        return cls(_bits_of(points, universe_size), universe_size)

    def _check_universe(self, other: PointSet) -> None:
        if self.universe_size != other.universe_size:
            raise ValueError("point sets live in different universes")

    def union(self, other: PointSet) -> PointSet:
        self._check_universe(other)
        return PointSet(self.bits | other.bits, self.universe_size)

    def intersection(self, other: PointSet) -> PointSet:
        self._check_universe(other)
        return PointSet(self.bits & other.bits, self.universe_size)

    def difference(self, other: PointSet) -> PointSet:
        self._check_universe(other)
        return PointSet(self.bits & ~other.bits, self.universe_size)

    def complement(self) -> PointSet:
        return PointSet(self.bits ^ (1 << self.universe_size) - 1, self.universe_size)

    def issubset(self, other: PointSet) -> bool:
        self._check_universe(other)
        return self.bits & ~other.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.universe_size and self.bits >> point & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def points(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return "{" + ",".join(str(p) for p in self) + "}"


def validate_topology(n: int, opens: Iterable[PointSet | int]) -> FiniteTopology:
    """Check a family of subsets and return the canonical topology value.

    The family must contain the empty set and the full set and be closed
    under pairwise union and intersection (which on a finite carrier is
    closure under arbitrary unions and intersections).  Duplicates are
    dropped and the family is stored sorted ascending by bitmap value.
    """
    if n < 0:
        raise ValueError("point count must be nonnegative")
    full = (1 << n) - 1
    fam: set[int] = set()
    for u in opens:
        if isinstance(u, PointSet):
            if u.universe_size != n:
                raise ValueError(f"open {u} has universe size {u.universe_size}, expected {n}")
            fam.add(u.bits)
        else:
            if not 0 <= u <= full:
                raise TopologyError(f"bitmap {u:#x} outside universe of size {n}")
            fam.add(u)
    if 0 not in fam or full not in fam:
        raise MissingEmptyOrFullError("family must contain the empty set and the whole space")
    ordered = sorted(fam)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in fam:
                raise NotClosedUnderUnionError((PointSet(u, n), PointSet(v, n)))
            if u & v not in fam:
                raise NotClosedUnderIntersectionError((PointSet(u, n), PointSet(v, n)))
    return FiniteTopology(n, tuple(ordered))


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on points 0..n-1 as its sorted, deduplicated open family.

    Construct through validate_topology / alexandrov / disjoint_union unless
    the family is already known to be valid and canonically ordered.
    """

    n: int
    opens: tuple[int, ...]

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def opens_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed sets: complements of opens, sorted ascending."""
        full = self.full_bits
        return tuple(sorted(full ^ u for u in self.opens))

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed)

    def open_sets(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(u, self.n) for u in self.opens)

    def is_open(self, a: PointSet | int) -> bool:
        bits = a.bits if isinstance(a, PointSet) else a
        return bits in self.opens_set

    def is_closed(self, a: PointSet | int) -> bool:
        bits = a.bits if isinstance(a, PointSet) else a
        return bits in self.closed_set

    def _bits(self, a: PointSet | int) -> int:
        if isinstance(a, PointSet):
            if a.universe_size != self.n:
                raise ValueError("point set universe does not match the space")
            return a.bits
        return a

    def closure_bits(self, a: int) -> int:
        """Smallest closed superset: intersection of all closed sets containing a."""
        acc = self.full_bits
        for c in self.closed:
            if a & ~c == 0:
                acc &= c
        return acc

    def kernel_bits(self, a: int) -> int:
        """Intersection of all opens containing a (itself open on a finite carrier)."""
        acc = self.full_bits
        for u in self.opens:
            if a & ~u == 0:
                acc &= u
        return acc

    def interior_bits(self, a: int) -> int:
        """Largest open subset: union of all opens inside a."""
        acc = 0
        for u in self.opens:
            if u & ~a == 0:
                acc |= u
        return acc

    def closure(self, a: PointSet) -> PointSet:
        return PointSet(self.closure_bits(self._bits(a)), self.n)

    def kernel(self, a: PointSet) -> PointSet:
        return PointSet(self.kernel_bits(self._bits(a)), self.n)

    def interior(self, a: PointSet) -> PointSet:
        return PointSet(self.interior_bits(self._bits(a)), self.n)

    def lambda_closure_bits(self, a: int) -> int:
        return self.kernel_bits(a) & self.closure_bits(a)

    def lambda_closure(self, a: PointSet) -> PointSet:
        """kernel(A) intersected with closure(A); fixed points are the lambda-closed sets."""
        return PointSet(self.lambda_closure_bits(self._bits(a)), self.n)

    def is_lambda_closed(self, a: PointSet | int) -> bool:
        bits = self._bits(a)
        return self.lambda_closure_bits(bits) == bits

    def shell_bits(self, a: int) -> int:
        return self.closure_bits(a) & ~a

    def shell(self, a: PointSet) -> PointSet:
        """closure(A) minus A."""
        return PointSet(self.shell_bits(self._bits(a)), self.n)

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(self.closure_bits(1 << x) for x in range(self.n))

    @cached_property
    def point_kernels(self) -> tuple[int, ...]:
        return tuple(self.kernel_bits(1 << x) for x in range(self.n))

    def specialization(self) -> Preorder:
        """x <= y iff x lies in the closure of {y}; upsets of this preorder are the opens."""
        cl = self.point_closures
        up = [0] * self.n
        for y in range(self.n):
            cy = cl[y]
            for x in bit_indices(cy):
                up[x] |= 1 << y
        return Preorder(self.n, tuple(up))

    @cached_property
    def point_classes(self) -> tuple[int, ...]:
        """point_classes[x] is the bitmap of points sharing the closure of {x}."""
        cl = self.point_closures
        out = [0] * self.n
        for x in range(self.n):
            cx = cl[x]
            m = 0
            for y in range(self.n):
                if cl[y] == cx:
                    m |= 1 << y
            out[x] = m
        return tuple(out)

    def class_space(self) -> tuple[FiniteTopology, tuple[int, ...]]:
        """Identify points with equal singleton closures.

        Returns the quotient topology on the classes together with the
        point -> class id mapping.  Class ids are assigned in order of the
        least member, so the result is canonical.  The quotient of the
        quotient is discrete-classed: the construction is idempotent.
        """
        classes = self.point_classes
        blocks: list[int] = []
        seen: set[int] = set()
        for x in range(self.n):
            m = classes[x]
            if m not in seen:
                seen.add(m)
                blocks.append(m)
        mapping = tuple(blocks.index(classes[x]) for x in range(self.n))
        q_opens: set[int] = set()
        for u in self.opens:
            mask = 0
            for i, b in enumerate(blocks):
                if b & u:
                    mask |= 1 << i
            q_opens.add(mask)
        return FiniteTopology(len(blocks), tuple(sorted(q_opens))), mapping


@dataclass(frozen=True)
class Preorder:
    """A reflexive transitive relation; up[x] is the bitmap {y : x <= y}."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.up) != self.n:
            raise ValueError("row count does not match point count")
        full = (1 << self.n) - 1
        for x, row in enumerate(self.up):
            if not 0 <= row <= full:
                raise ValueError(f"row {x} outside universe")
            if row >> x & 1 == 0:
                raise ValueError(f"relation not reflexive at {x}")
        for x, row in enumerate(self.up):
            r = row
            while r:
                low = r & -r
                y = low.bit_length() - 1
                r ^= low
                if self.up[y] & ~row:
                    raise ValueError(f"relation not transitive through {x} <= {y}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Preorder:
        """Reflexive-transitive closure of the given x <= y pairs."""
        up = [1 << x for x in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x},{y}) outside universe of size {n}")
            up[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(n):
                row = up[x]
                acc = row
                r = row
                while r:
                    low = r & -r
                    acc |= up[low.bit_length() - 1]
                    r ^= low
                if acc != row:
                    up[x] = acc
                    changed = True
        return cls(n, tuple(up))

    def leq(self, x: int, y: int) -> bool:
        return self.up[x] >> y & 1 == 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[y] is the bitmap {x : x <= y}."""
        out = [0] * self.n
        for x, row in enumerate(self.up):
            r = row
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << x
                r ^= low
        return tuple(out)

    @cached_property
    def cls(self) -> tuple[int, ...]:
        """cls[x] is the bitmap of the equivalence class x^ = up(x) & down(x)."""
        down = self.down
        return tuple(self.up[x] & down[x] for x in range(self.n))


def alexandrov(pre: Preorder) -> FiniteTopology:
    """The topology whose opens are exactly the upsets of the preorder."""
    n = pre.n
    up = pre.up
    opens = []
    for s in range(1 << n):
        r = s
        ok = True
        while r:
            low = r & -r
            if up[low.bit_length() - 1] & ~s:
                ok = False
                break
            r ^= low
        if ok:
            opens.append(s)
    return FiniteTopology(n, tuple(opens))


@dataclass(frozen=True)
class ClassPoset:
    """The partial order induced on closure-equality classes.

    blocks are bitmaps over the source points, ordered by least member;
    leq rows are bitmaps over block ids.
    """

    n_source: int
    blocks: tuple[int, ...]
    leq: tuple[int, ...]

    @cached_property
    def n(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n_source
        for i, b in enumerate(self.blocks):
            for x in bit_indices(b):
                out[x] = i
        return tuple(out)

    def as_preorder(self) -> Preorder:
        return Preorder(self.n, self.leq)


def class_poset(pre: Preorder) -> ClassPoset:
    """Collapse a preorder to the partial order on its equivalence classes."""
    cls = pre.cls
    blocks: list[int] = []
    seen: set[int] = set()
    for x in range(pre.n):
        m = cls[x]
        if m not in seen:
            seen.add(m)
            blocks.append(m)
    reps = [b & -b for b in blocks]
    leq = []
    for b in reps:
        x = b.bit_length() - 1
        row = 0
        for j, c in enumerate(reps):
            if pre.up[x] >> (c.bit_length() - 1) & 1:
                row |= 1 << j
        leq.append(row)
    return ClassPoset(pre.n, tuple(blocks), tuple(leq))


def disjoint_union(tops: Iterable[FiniteTopology]) -> FiniteTopology:
    """Topological sum: points are renumbered by summand offset.

    Opens are all unions of one open per summand, so the family size is the
    product of the summand family sizes.
    """
    tops = list(tops)
    fam = [0]
    offset = 0
    for t in tops:
        fam = [u | (v << offset) for u in fam for v in t.opens]
        offset += t.n
    return FiniteTopology(offset, tuple(sorted(fam)))
