"""Exhaustive enumeration oracle and theorem-verification harness.

Two independent enumerators produce every labeled topology on a small
carrier: a preorder backtracker that grows a reflexive-transitive relation
matrix cell by cell with incremental closure, and an open-family backtracker
that decides subset membership with union/intersection propagation.  Their
agreement (as multisets of canonical encodings) is itself a test.

On top of the enumerators sits a registry of theorems: every order
characterization, implication chain, finite collapse, transfer law, and
decomposition criterion checked on all spaces (or pairs, or partitions) up
to a size cap.  A refuted theorem yields the minimal witness, fewest points
first and least preorder encoding second.  Probe theorems carry
asserted=False: their refutations are reportable findings, not failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Iterator

from .axioms import (
    AXIOMS,
    CHARACTERIZED,
    DEFINITIONAL,
    SpaceContext,
    check_point,
    check_space,
)
from .core import (
    FiniteTopology,
    Preorder,
    alexandrov,
    bit_indices,
    class_poset,
    disjoint_union,
)
from .decomp import Decomposition, iter_partitions, lemma001_check, quotient, tau_F
from .dynamics import (
    classify_space,
    is_anosov_type,
    recurrence_transfer_check,
    recurrent_mask,
    recurrent_vs_hyperbolic_check,
    saddle_equivalences_check,
)
from .order import _pre_chain_mask, comparability_components, heights

MAX_POINTS = 7


class SizeTooLargeError(ValueError):
    """Raised when an enumeration request exceeds the supported carrier size."""


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError("carrier size must be nonnegative")
    if n > MAX_POINTS:
        raise SizeTooLargeError(f"carrier size {n} exceeds the supported maximum {MAX_POINTS}")


# ---------------------------------------------------------------------------
# encodings

def preorder_encoding(pre: Preorder) -> int:
    """Row-major n*n relation matrix as an unsigned integer, MSB first."""
    n = pre.n
    code = 0
    for i in range(n):
        for j in range(n):
            code = code << 1 | (pre.up[i] >> j & 1)
    return code


def decode_preorder(n: int, code: int) -> Preorder:
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if code >> (n * n - 1 - (i * n + j)) & 1:
                up[i] |= 1 << j
    return Preorder(n, tuple(up))


def topology_encoding(top: FiniteTopology) -> int:
    """Bitmap over subset indices: bit s is set iff subset s is open."""
    code = 0
    for u in top.opens:
        code |= 1 << u
    return code


def canonical_preorder_key(pre: Preorder) -> int:
    """Least preorder encoding over all relabelings of the points."""
    n = pre.n
    best = None
    for perm in permutations(range(n)):
        code = 0
        for i in range(n):
            row = pre.up[perm[i]]
            for j in range(n):
                code = code << 1 | (row >> perm[j] & 1)
        if best is None or code < best:
            best = code
    return best if best is not None else 0


# ---------------------------------------------------------------------------
# preorder enumeration

def _preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the up-rows of every preorder on n labeled points.

    Cells are decided in row-major order, zero branch first, with the
    transitive closure maintained incrementally; the closure of a chosen
    edge may only force cells not yet scanned, so any forced earlier cell
    prunes the branch.  The zero-first discipline makes the row-major
    encodings come out in ascending order.
    """
    if n == 0:
        yield ()
        return
    up = [1 << i for i in range(n)]
    down = [1 << i for i in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(cells)

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == m:
            yield tuple(up)
            return
        i, j = cells[k]
        if up[i] >> j & 1:
            yield from rec(k + 1)
            return
        yield from rec(k + 1)

        p = i * n + j
        di, uj = down[i], up[j]
        additions = []
        a = di
        ok = True
        while a:
            low = a & -a
            ai = low.bit_length() - 1
            add = uj & ~up[ai]
            q = add
            while q:
                lb = q & -q
                bi = lb.bit_length() - 1
                if ai * n + bi < p:
                    ok = False
                    break
                q ^= lb
            if not ok:
                break
            if add:
                additions.append((ai, add))
            a ^= low
        if not ok:
            return
        undo_up = []
        undo_down = []
        for ai, add in additions:
            undo_up.append((ai, up[ai]))
            up[ai] |= add
        b = uj
        while b:
            lb = b & -b
            bi = lb.bit_length() - 1
            if di & ~down[bi]:
                undo_down.append((bi, down[bi]))
                down[bi] |= di
            b ^= lb
        yield from rec(k + 1)
        for ai, old in undo_up:
            up[ai] = old
        for bi, old in undo_down:
            down[bi] = old

    yield from rec(0)


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """Every preorder on n labeled points, ascending by encoding."""
    _check_size(n)
    for rows in _preorder_rows(n):
        yield Preorder(n, rows)


def count_preorders(n: int) -> int:
    """Number of preorders on n labeled points, by dedicated backtracking count."""
    _check_size(n)
    if n == 0:
        return 1
    up = [1 << i for i in range(n)]
    down = [1 << i for i in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(cells)

    def rec(k: int) -> int:
        if k == m:
            return 1
        i, j = cells[k]
        if up[i] >> j & 1:
            return rec(k + 1)
        total = rec(k + 1)

        p = i * n + j
        di, uj = down[i], up[j]
        additions = []
        a = di
        while a:
            low = a & -a
            ai = low.bit_length() - 1
            add = uj & ~up[ai]
            q = add
            while q:
                lb = q & -q
                bi = lb.bit_length() - 1
                if ai * n + bi < p:
                    return total
                q ^= lb
            if add:
                additions.append((ai, add))
            a ^= low
        undo_up = []
        undo_down = []
        for ai, add in additions:
            undo_up.append((ai, up[ai]))
            up[ai] |= add
        b = uj
        while b:
            lb = b & -b
            bi = lb.bit_length() - 1
            if di & ~down[bi]:
                undo_down.append((bi, down[bi]))
                down[bi] |= di
            b ^= lb
        total += rec(k + 1)
        for ai, old in undo_up:
            up[ai] = old
        for bi, old in undo_down:
            down[bi] = old
        return total

    return rec(0)


def enumerate_topologies(n: int, up_to_iso: bool = False) -> Iterator[FiniteTopology]:
    """Every labeled topology on n points via the preorder correspondence.

    With up_to_iso=True only canonical representatives (least encoding in
    each relabeling orbit) are yielded.
    """
    _check_size(n)
    for pre in enumerate_preorders(n):
        if up_to_iso and preorder_encoding(pre) != canonical_preorder_key(pre):
            continue
        yield alexandrov(pre)


def count_topologies(n: int) -> int:
    _check_size(n)
    return count_preorders(n)


# ---------------------------------------------------------------------------
# independent open-family enumeration

_UNDECIDED, _IN, _OUT = 0, 1, 2


def enumerate_open_families(n: int) -> Iterator[FiniteTopology]:
    """Every labeled topology by direct search over open-set families.

    Independent of the preorder route: subsets are decided in numeric order,
    out branch first, and every in decision propagates closure under pairwise
    union and intersection through a worklist.
    """
    _check_size(n)
    size = 1 << n
    full = size - 1
    if n == 0:
        yield FiniteTopology(0, (0,))
        return
    status = [_UNDECIDED] * size
    status[0] = _IN
    status[full] = _IN
    members = [0, full] if full else [0]

    def close_with(s: int) -> tuple[list[int], bool]:
        added = []
        queue = [s]
        while queue:
            t = queue.pop()
            for m2 in members:
                for u in (t | m2, t & m2):
                    st = status[u]
                    if st == _OUT:
                        return added, False
                    if st == _UNDECIDED:
                        status[u] = _IN
                        members.append(u)
                        added.append(u)
                        queue.append(u)
        return added, True

    def rec(s: int) -> Iterator[FiniteTopology]:
        while s < size and status[s] != _UNDECIDED:
            s += 1
        if s == size:
            yield FiniteTopology(n, tuple(sorted(members)))
            return
        status[s] = _OUT
        yield from rec(s + 1)
        status[s] = _UNDECIDED

        status[s] = _IN
        members.append(s)
        added, ok = close_with(s)
        if ok:
            yield from rec(s + 1)
        for u in added:
            status[u] = _UNDECIDED
            members.pop()
        status[s] = _UNDECIDED
        members.pop()

    yield from rec(1)


def count_open_families(n: int) -> int:
    _check_size(n)
    return sum(1 for _ in enumerate_open_families(n))


# ---------------------------------------------------------------------------
# theorem registry

@dataclass(frozen=True)
class Theorem:
    id: str
    description: str
    scope: str  # "space" | "pair" | "partition"
    asserted: bool
    check: Callable


@dataclass(frozen=True, eq=False)
class Finding:
    theorem: str
    description: str
    scope: str
    asserted: bool
    status: str  # "verified" | "refuted"
    spaces_checked: int
    n_max: int
    witness: dict | None
    elapsed: float

    def to_json_dict(self, timings: bool = False) -> dict:
        doc = {
            "theorem": self.theorem,
            "description": self.description,
            "scope": self.scope,
            "asserted": self.asserted,
            "status": self.status,
            "spaces_checked": self.spaces_checked,
            "n_max": self.n_max,
            "witness": self.witness,
        }
        if timings:
            doc["elapsed"] = round(self.elapsed, 6)
        return doc


_REGISTRY: dict[str, Theorem] = {}


def _register(tid: str, description: str, scope: str, asserted: bool, check: Callable) -> None:
    if tid in _REGISTRY:
        raise ValueError(f"duplicate theorem id {tid!r}")
    _REGISTRY[tid] = Theorem(tid, description, scope, asserted, check)


def _theorem(tid: str, description: str, scope: str = "space", asserted: bool = True):
    def deco(fn):
        _register(tid, description, scope, asserted, fn)
        return fn
    return deco


def theorems() -> tuple[Theorem, ...]:
    return tuple(_REGISTRY.values())


def _space_payload(ctx: SpaceContext) -> dict:
    return {
        "n": ctx.n,
        "encoding": preorder_encoding(ctx.pre),
        "opens": [sorted(bit_indices(u)) for u in ctx.top.opens],
    }


# every axiom's definitional checker must agree with its order characterization

def _mode_agreement(axiom: str) -> Callable:
    spec = AXIOMS[axiom]

    def run(ctx: SpaceContext) -> dict | None:
        if spec.point_level:
            for x in range(ctx.n):
                d = spec.def_point(ctx, x)
                c = spec.char_point(ctx, x)
                if d != c:
                    return {"axiom": axiom, "point": x,
                            "definitional": d, "characterized": c}
        rd = check_space(ctx.top, axiom, DEFINITIONAL, ctx)
        rc = check_space(ctx.top, axiom, CHARACTERIZED, ctx)
        if rd.verdict != rc.verdict:
            return {"axiom": axiom, "definitional": rd.verdict,
                    "characterized": rc.verdict,
                    "definitional_witness": rd.witness,
                    "characterized_witness": rc.witness}
        return None

    return run


_MODE_THEOREMS = (
    ("t0_char", "T0", "a point is T0 iff its class is a singleton"),
    ("tm1_char", "T-1", "point closed, or some neighbourhood misses part of the closure, iff not class-minimal or the downset is a singleton"),
    ("td_char", "TD", "the derived set of a point is closed iff it is a downset"),
    ("t14_char", "T1/4", "closed-or-kerneled points iff T0 with height at most one"),
    ("t13_char", "T1/3", "all subsets lambda-closed iff all subsets are closed-minus-downset"),
    ("t12_char", "T1/2", "closed-or-open points iff T0, height at most one, height-1 points open"),
    ("t1_char", "T1", "a point is closed iff its downset is a singleton"),
    ("t2_char", "T2", "disjoint neighbourhoods iff disjoint upsets"),
    ("tys_char", "TYS", "closure meets are endpoints iff T0, height at most one, downward forest"),
    ("c0_char", "C0", "derived set escapes unions of closed sets iff class-minimal or a nontrivial class"),
    ("cd_char", "CD", "derived set empty or non-closed iff class-minimal or the point sits under its strict downset"),
    ("cr_char", "CR", "derived set holds no nonempty closed set iff the point is class-minimal"),
    ("cn_char", "CN", "no disjoint closed pair in the derived set iff the downset is down-directed"),
    ("sd_char", "SD", "closure minus class closed iff the class-strict downset avoids the upset"),
    ("s0_char", "S0", "class-space T0 holds at every class"),
    ("s14_char", "S1/4", "classes closed-or-kerneled iff height at most one"),
    ("s13_char", "S1/3", "class-space subsets lambda-closed iff closed-minus-downset on the class poset"),
    ("s12_char", "S1/2", "classes closed-or-open iff height at most one with height-1 classes open"),
    ("s1_char", "S1", "class closed iff downset equals class"),
    ("s2_char", "S2", "distinct classes have disjoint neighbourhoods iff disjoint upsets"),
    ("sy_char", "SY", "closure meets hold at most one class iff height at most one and min-S1-free"),
    ("sys_char", "SYS", "class closure meets are shared classes iff height at most one downward forest"),
    ("syy_char", "SYY", "some class absorbs all closure meets iff height at most one bouquet of downward forests"),
    ("ssd_char", "SSD", "class closed or strict downset a closed class iff upward forest of height at most one"),
    ("sdelta_char", "Sdelta", "class closed or strict downset a point closure iff down-discrete upward forest"),
    ("qs2_char", "qS2", "common closure point or disjoint neighbourhoods always holds on finite spaces"),
    ("sq_char", "SQ", "two-sided open separation forces disjoint closures iff downward forest"),
    ("nested_char", "nested", "opens totally ordered iff the carrier is a pre-chain"),
    ("wr0_char", "wR0", "point closures meet emptily iff there is no bottom"),
    ("wc0_char", "wC0", "point kernels meet emptily iff there is no top"),
    ("lambda_char", "lambda", "unions of lambda-closed sets lambda-closed iff convex shells stay minimal"),
    ("recurrent_char", "recurrent", "class closed or derived set non-closed iff class-minimal or the strict downset is not a downset"),
    ("artinian_char", "artinian", "descending chain condition holds on every finite space"),
    ("anticompact_char", "anticompact", "every compact subset of a finite space is finite"),
)

for _tid, _axiom, _desc in _MODE_THEOREMS:
    _register(_tid, _desc, "space", True, _mode_agreement(_axiom))


@_theorem("tm1_minimal_closed", "a space is T-1 iff every class-minimal point is a closed singleton")
def _check_tm1_minimal(ctx: SpaceContext) -> dict | None:
    rd = check_space(ctx.top, "T-1", DEFINITIONAL, ctx).verdict
    order_form = all(
        ctx.down[x] == 1 << x
        for x in range(ctx.n)
        if ctx.down[x] == ctx.cls[x]
    )
    if rd != order_form:
        return {"definitional": rd, "minimal_singletons": order_form}
    return None


@_theorem("sd_always_finite", "every finite space satisfies SD: closure minus class is always closed")
def _check_sd_always(ctx: SpaceContext) -> dict | None:
    r = check_space(ctx.top, "SD", DEFINITIONAL, ctx)
    if not r.verdict:
        return {"witness": r.witness}
    return None


@_theorem("sd_class_reading", "closure minus class is closed iff class-minimal or the point escapes its closure")
def _check_sd_class_reading(ctx: SpaceContext) -> dict | None:
    for x in range(ctx.n):
        lhs = check_point(ctx.top, "SD", x, DEFINITIONAL, ctx)
        shell = ctx.top.closure_bits(ctx.closure1[x] & ~ctx.cls_def[x])
        rhs = ctx.down[x] == ctx.cls[x] or not shell >> x & 1
        if lhs != rhs:
            return {"point": x, "sd": lhs, "reading": rhs}
    return None


@_theorem("sd_point_shell_probe",
          "probe: point derived set closed iff class-minimal or the point escapes the derived set closure",
          asserted=False)
def _check_sd_point_shell(ctx: SpaceContext) -> dict | None:
    for x in range(ctx.n):
        d = ctx.closure1[x] & ~(1 << x)
        lhs = d in ctx.top.closed_set
        rhs = ctx.down[x] == ctx.cls[x] or not ctx.top.closure_bits(d) >> x & 1
        if lhs != rhs:
            return {"point": x, "derived_closed": lhs, "reading": rhs}
    return None


@_theorem("sd_mixed_probe",
          "probe: SD at a point iff class-minimal or the point escapes the point-shell closure",
          asserted=False)
def _check_sd_mixed(ctx: SpaceContext) -> dict | None:
    for x in range(ctx.n):
        lhs = check_point(ctx.top, "SD", x, DEFINITIONAL, ctx)
        d = ctx.closure1[x] & ~(1 << x)
        rhs = ctx.down[x] == ctx.cls[x] or not ctx.top.closure_bits(d) >> x & 1
        if lhs != rhs:
            return {"point": x, "sd": lhs, "reading": rhs}
    return None


def _pointwise_chain(ctx: SpaceContext, chain: tuple[str, ...]) -> dict | None:
    for x in range(ctx.n):
        prev = None
        for axiom in chain:
            cur = check_point(ctx.top, axiom, x, DEFINITIONAL, ctx)
            if prev is not None and prev and not cur:
                return {"point": x, "holds": chain[chain.index(axiom) - 1], "fails": axiom}
            prev = cur
    return None


@_theorem("t1_cr_c0_cd_chain", "pointwise T1 implies CR implies C0 implies CD")
def _check_t1_chain(ctx: SpaceContext) -> dict | None:
    return _pointwise_chain(ctx, ("T1", "CR", "C0", "CD"))


@_theorem("cr_cn_implication", "pointwise CR implies CN")
def _check_cr_cn(ctx: SpaceContext) -> dict | None:
    return _pointwise_chain(ctx, ("CR", "CN"))


@_theorem("s1_c0_recurrent_chain", "pointwise S1 implies C0 implies recurrent")
def _check_s1_chain(ctx: SpaceContext) -> dict | None:
    return _pointwise_chain(ctx, ("S1", "C0", "recurrent"))


def _space_chain(ctx: SpaceContext, chain: tuple[str, ...]) -> dict | None:
    prev_id = None
    prev = None
    for axiom in chain:
        cur = check_space(ctx.top, axiom, DEFINITIONAL, ctx).verdict
        if prev is not None and prev and not cur:
            return {"holds": prev_id, "fails": axiom}
        prev_id, prev = axiom, cur
    return None


@_theorem("s12_lambda_s14_chain", "S1/2 implies lambda-space implies S1/4")
def _check_lambda_chain(ctx: SpaceContext) -> dict | None:
    return _space_chain(ctx, ("S1/2", "lambda", "S1/4"))


@_theorem("s12_s13_s14_chain", "S1/2 implies S1/3 implies S1/4")
def _check_s_third_chain(ctx: SpaceContext) -> dict | None:
    return _space_chain(ctx, ("S1/2", "S1/3", "S1/4"))


@_theorem("tys_implies_t14", "TYS implies T1/4")
def _check_tys_t14(ctx: SpaceContext) -> dict | None:
    return _space_chain(ctx, ("TYS", "T1/4"))


@_theorem("sys_eq_s14_and_sq", "SYS equals S1/4 together with SQ")
def _check_sys_eq(ctx: SpaceContext) -> dict | None:
    sys_v = check_space(ctx.top, "SYS", DEFINITIONAL, ctx).verdict
    s14_v = check_space(ctx.top, "S1/4", DEFINITIONAL, ctx).verdict
    sq_v = check_space(ctx.top, "SQ", DEFINITIONAL, ctx).verdict
    if sys_v != (s14_v and sq_v):
        return {"SYS": sys_v, "S1/4": s14_v, "SQ": sq_v}
    return None


@_theorem("sq_sdelta_chain_union", "SQ and Sdelta force the class space to be a disjoint union of chains")
def _check_sq_sdelta(ctx: SpaceContext) -> dict | None:
    sq_v = check_space(ctx.top, "SQ", DEFINITIONAL, ctx).verdict
    sdelta_v = check_space(ctx.top, "Sdelta", DEFINITIONAL, ctx).verdict
    if not (sq_v and sdelta_v):
        return None
    for comp in comparability_components(ctx.pre):
        if not _pre_chain_mask(ctx.pre, comp):
            return {"component": sorted(bit_indices(comp))}
    return None


@_theorem("cr_or_nested_implies_sq", "CR or nested implies SQ")
def _check_cr_nested_sq(ctx: SpaceContext) -> dict | None:
    cr_v = check_space(ctx.top, "CR", DEFINITIONAL, ctx).verdict
    nested_v = check_space(ctx.top, "nested", DEFINITIONAL, ctx).verdict
    if not (cr_v or nested_v):
        return None
    sq_v = check_space(ctx.top, "SQ", DEFINITIONAL, ctx).verdict
    if not sq_v:
        return {"CR": cr_v, "nested": nested_v, "SQ": sq_v}
    return None


@_theorem("recurrent_eq_c0_finite", "recurrent and C0 coincide pointwise on finite spaces")
def _check_recurrent_c0(ctx: SpaceContext) -> dict | None:
    for x in range(ctx.n):
        r = check_point(ctx.top, "recurrent", x, DEFINITIONAL, ctx)
        c = check_point(ctx.top, "C0", x, DEFINITIONAL, ctx)
        if r != c:
            return {"point": x, "recurrent": r, "C0": c}
    return None


@_theorem("t13_eq_t12_finite", "T1/4, T1/3 and T1/2 coincide on finite spaces")
def _check_t_collapse(ctx: SpaceContext) -> dict | None:
    v14 = check_space(ctx.top, "T1/4", DEFINITIONAL, ctx).verdict
    v13 = check_space(ctx.top, "T1/3", DEFINITIONAL, ctx).verdict
    v12 = check_space(ctx.top, "T1/2", DEFINITIONAL, ctx).verdict
    if not v14 == v13 == v12:
        return {"T1/4": v14, "T1/3": v13, "T1/2": v12}
    return None


@_theorem("t1_eq_t2_discrete_finite", "T1, T2 and discreteness coincide on finite spaces")
def _check_t1_t2(ctx: SpaceContext) -> dict | None:
    v1 = check_space(ctx.top, "T1", DEFINITIONAL, ctx).verdict
    v2 = check_space(ctx.top, "T2", DEFINITIONAL, ctx).verdict
    discrete = len(ctx.top.opens) == 1 << ctx.n
    if not v1 == v2 == discrete:
        return {"T1": v1, "T2": v2, "discrete": discrete}
    return None


@_theorem("lambda_eq_s14_s12_finite", "lambda-space, S1/4 and S1/2 coincide on finite spaces")
def _check_lambda_collapse(ctx: SpaceContext) -> dict | None:
    vl = check_space(ctx.top, "lambda", DEFINITIONAL, ctx).verdict
    v14 = check_space(ctx.top, "S1/4", DEFINITIONAL, ctx).verdict
    v12 = check_space(ctx.top, "S1/2", DEFINITIONAL, ctx).verdict
    if not vl == v14 == v12:
        return {"lambda": vl, "S1/4": v14, "S1/2": v12}
    return None


@_theorem("class_space_t0_idempotent", "the class space is T0 and a fixed point of the construction")
def _check_class_space(ctx: SpaceContext) -> dict | None:
    qtop, _ = ctx.top.class_space()
    if not check_space(qtop, "T0", DEFINITIONAL).verdict:
        return {"reason": "class space not T0"}
    qq, _ = qtop.class_space()
    if qq.opens != qtop.opens:
        return {"reason": "class space not idempotent"}
    return None


@_theorem("class_space_height_preserved", "passing to the class space preserves heights")
def _check_heights(ctx: SpaceContext) -> dict | None:
    qtop, mapping = ctx.top.class_space()
    qctx = SpaceContext(qtop)
    if ctx.ht != qctx.ht:
        return {"space_height": ctx.ht, "class_height": qctx.ht}
    per_point, _ = heights(ctx.pre)
    qper, _ = heights(qctx.pre)
    for x in range(ctx.n):
        if per_point[x] != qper[mapping[x]]:
            return {"point": x, "height": per_point[x], "class_height": qper[mapping[x]]}
    return None


@_theorem("alexandrov_roundtrip", "opens of the upset topology of the specialization preorder reproduce the space")
def _check_roundtrip(ctx: SpaceContext) -> dict | None:
    rebuilt = alexandrov(ctx.top.specialization())
    if rebuilt.opens != ctx.top.opens:
        return {"rebuilt_opens": [sorted(bit_indices(u)) for u in rebuilt.opens]}
    return None


@_theorem("recurrence_transfer", "recurrence transfers to the class space: preimage law and space law")
def _check_transfer(ctx: SpaceContext) -> dict | None:
    r = recurrence_transfer_check(ctx.top, ctx)
    if not r.ok:
        return r.witness
    return None


@_theorem("nonwandering_density", "every point is non-wandering iff big classes and recurrent classes are dense in the class space")
def _check_nonwandering(ctx: SpaceContext) -> dict | None:
    qctx, mapping = ctx.class_ctx
    r = recurrent_mask(ctx)
    closure = 0
    for x in bit_indices(r):
        closure |= ctx.down[x]
    all_nonwandering = ctx.top.interior_bits(closure) == ctx.full

    class_sizes = [0] * qctx.n
    for x in range(ctx.n):
        class_sizes[mapping[x]] += 1
    dense_target = recurrent_mask(qctx)
    for b, size in enumerate(class_sizes):
        if size > 1:
            dense_target |= 1 << b
    dclosure = 0
    for b in bit_indices(dense_target):
        dclosure |= qctx.down[b]
    dense = dclosure == qctx.full
    if all_nonwandering != dense:
        return {"all_non_wandering": all_nonwandering, "class_union_dense": dense}
    return None


@_theorem("saddle_equivalences", "both saddle-condition triples are equivalent on every point and pair")
def _check_saddle(ctx: SpaceContext) -> dict | None:
    r = saddle_equivalences_check(ctx.top, ctx)
    if not r.ok:
        return r.witness
    return None


@_theorem("recurrent_excludes_hyperbolic", "a recurrent space has no hyperbolic-like points")
def _check_exclusion(ctx: SpaceContext) -> dict | None:
    r = recurrent_vs_hyperbolic_check(ctx.top, ctx)
    if not r.ok:
        return r.witness
    return None


@_theorem("hyperbolic_converse_probe",
          "probe: a space without weakly hyperbolic-like points is recurrent",
          asserted=False)
def _check_converse(ctx: SpaceContext) -> dict | None:
    flags = classify_space(ctx.top, ctx)
    if any(f.weakly_hyperbolic_like for f in flags):
        return None
    for x, f in enumerate(flags):
        if not f.recurrent:
            return {"point": x}
    return None


@_theorem("open_point_exclusion", "weakly hyperbolic-like spaces have no open points; TD spaces without open points are weakly hyperbolic-like and not Anosov-type")
def _check_open_point(ctx: SpaceContext) -> dict | None:
    flags = classify_space(ctx.top, ctx)
    all_whl = ctx.n > 0 and all(f.weakly_hyperbolic_like for f in flags)
    open_points = [x for x in range(ctx.n) if 1 << x in ctx.top.opens_set]
    if all_whl and open_points:
        return {"open_point": open_points[0]}
    td = check_space(ctx.top, "TD", DEFINITIONAL, ctx).verdict
    if td and not open_points:
        if ctx.n > 0 and not all(f.weakly_hyperbolic_like for f in flags):
            bad = next(x for x, f in enumerate(flags) if not f.weakly_hyperbolic_like)
            return {"non_whl_point": bad}
        if is_anosov_type(ctx.top, ctx):
            return {"reason": "Anosov-type despite TD without open points"}
    return None


@_theorem("no_finite_anosov", "no finite space is of Anosov type: minimal points form a closed set")
def _check_no_anosov(ctx: SpaceContext) -> dict | None:
    if is_anosov_type(ctx.top, ctx):
        return {"reason": "Anosov-type finite space"}
    return None


@_theorem("proper_vs_recurrent", "proper means trivial class; improper points are recurrent; a proper point is recurrent iff closed")
def _check_proper(ctx: SpaceContext) -> dict | None:
    flags = classify_space(ctx.top, ctx)
    for x, f in enumerate(flags):
        if f.proper != (ctx.cls[x] == 1 << x):
            return {"point": x, "proper": f.proper, "trivial_class": ctx.cls[x] == 1 << x}
        if not f.proper and not f.recurrent:
            return {"point": x, "reason": "improper but not recurrent"}
        if f.proper and f.recurrent != (ctx.down[x] == 1 << x):
            return {"point": x, "recurrent": f.recurrent, "closed": ctx.down[x] == 1 << x}
    return None


@_theorem("exceptional_absent_in_td", "TD spaces have no exceptional points")
def _check_exceptional(ctx: SpaceContext) -> dict | None:
    if not check_space(ctx.top, "TD", DEFINITIONAL, ctx).verdict:
        return None
    flags = classify_space(ctx.top, ctx)
    for x, f in enumerate(flags):
        if f.exceptional:
            return {"point": x}
    return None


def _du_invariance(axiom: str) -> Callable:
    def run(left: FiniteTopology, right: FiniteTopology) -> dict | None:
        union = disjoint_union([left, right])
        for mode in (DEFINITIONAL, CHARACTERIZED):
            vu = check_space(union, axiom, mode).verdict
            vl = check_space(left, axiom, mode).verdict
            vr = check_space(right, axiom, mode).verdict
            if vu != (vl and vr):
                return {"axiom": axiom, "mode": mode,
                        "union": vu, "left": vl, "right": vr}
        return None
    return run


for _tid, _axiom in (("du_tm1", "T-1"), ("du_t14", "T1/4"),
                     ("du_t13", "T1/3"), ("du_t12", "T1/2")):
    _register(_tid, f"a disjoint union is {_axiom} iff both summands are", "pair", True,
              _du_invariance(_axiom))


@_theorem("du_closure_restriction", "closures in a disjoint union restrict to summand closures", scope="pair")
def _check_du_closure(left: FiniteTopology, right: FiniteTopology) -> dict | None:
    union = disjoint_union([left, right])
    for a in range(1 << left.n):
        if union.closure_bits(a) != left.closure_bits(a):
            return {"side": "left", "subset": sorted(bit_indices(a))}
    shift = left.n
    for a in range(1 << right.n):
        got = union.closure_bits(a << shift)
        if got != right.closure_bits(a) << shift:
            return {"side": "right", "subset": sorted(bit_indices(a))}
    return None


@_theorem("tau_f_containment", "saturated opens sit inside the topology iff saturated closures; containment forces a topology", scope="partition")
def _check_tau_f(top: FiniteTopology, dec: Decomposition) -> dict | None:
    r = lemma001_check(top, dec)
    if not r.ok:
        return r.witness
    return None


@_theorem("tau_f_quotient_correspondence", "when contained, the saturated family equals the quotient topology on blocks", scope="partition")
def _check_tau_f_quotient(top: FiniteTopology, dec: Decomposition) -> dict | None:
    r = tau_F(top, dec)
    if not all(s in top.opens_set for s in r.family):
        return None
    combos = []
    for sat in r.family:
        combo = 0
        for i, b in enumerate(dec.blocks):
            if b & sat:
                combo |= 1 << i
        combos.append(combo)
    q = quotient(top, dec)
    if tuple(sorted(combos)) != q.opens:
        return {"family_blocks": sorted(combos), "quotient_opens": list(q.opens)}
    return None


# ---------------------------------------------------------------------------
# verification driver

def _space_theorem_ids(ids: Iterable[str] | None) -> list[str]:
    chosen = list(_REGISTRY) if ids is None else list(ids)
    for tid in chosen:
        if tid not in _REGISTRY:
            raise KeyError(f"unknown theorem {tid!r}")
    return chosen


def _run_space_chunk(ids: list[str], n: int, codes: list[int]) -> dict:
    out: dict[str, list] = {tid: [0, None] for tid in ids}
    for code in codes:
        pre = decode_preorder(n, code)
        top = alexandrov(pre)
        ctx = SpaceContext(top, pre)
        for tid in ids:
            theorem = _REGISTRY[tid]
            acc = out[tid]
            acc[0] += 1
            if acc[1] is None:
                detail = theorem.check(ctx)
                if detail is not None:
                    witness = dict(_space_payload(ctx))
                    witness.update(detail)
                    acc[1] = witness
    return out


def _merge_space_results(parts: list[dict], ids: list[str]) -> dict:
    merged = {tid: [0, None] for tid in ids}
    for part in parts:
        for tid in ids:
            cnt, wit = part[tid]
            merged[tid][0] += cnt
            if wit is not None:
                cur = merged[tid][1]
                if cur is None or (wit["n"], wit["encoding"]) < (cur["n"], cur["encoding"]):
                    merged[tid][1] = wit
    return merged


def verify_all(ids: Iterable[str] | None = None, n_max: int = 5, jobs: int = 1) -> list[Finding]:
    """Run theorems over all spaces (pairs, partitions) up to the size caps.

    Space-scope theorems sweep all labeled topologies on up to n_max points,
    pair scope sweeps all ordered pairs with combined size at most
    min(n_max, 5), partition scope sweeps all partitions of all spaces on up
    to min(n_max, 4) points.  The sweep always completes, so counts are
    cap-determined and witnesses are minimal; jobs > 1 splits the space sweep
    across processes with a deterministic merge.
    """
    import time

    _check_size(n_max)
    chosen = _space_theorem_ids(ids)
    space_ids = [t for t in chosen if _REGISTRY[t].scope == "space"]
    pair_ids = [t for t in chosen if _REGISTRY[t].scope == "pair"]
    partition_ids = [t for t in chosen if _REGISTRY[t].scope == "partition"]

    started = {tid: time.perf_counter() for tid in chosen}
    results: dict[str, list] = {}

    if space_ids:
        parts = []
        for n in range(n_max + 1):
            codes = [preorder_encoding(p) for p in enumerate_preorders(n)]
            if jobs > 1 and len(codes) > 256:
                from multiprocessing import Pool

                chunk = max(64, len(codes) // (jobs * 8))
                slices = [codes[i:i + chunk] for i in range(0, len(codes), chunk)]
                with Pool(jobs) as pool:
                    parts.extend(pool.starmap(
                        _run_space_chunk,
                        [(space_ids, n, s) for s in slices],
                    ))
            else:
                parts.append(_run_space_chunk(space_ids, n, codes))
        results.update(_merge_space_results(parts, space_ids))

    if pair_ids:
        pair_cap = min(n_max, 5)
        acc = {tid: [0, None] for tid in pair_ids}
        pools = {n: list(enumerate_topologies(n)) for n in range(pair_cap + 1)}
        for total in range(pair_cap + 1):
            for na in range(total + 1):
                nb = total - na
                for left in pools[na]:
                    for right in pools[nb]:
                        for tid in pair_ids:
                            slot = acc[tid]
                            slot[0] += 1
                            if slot[1] is None:
                                detail = _REGISTRY[tid].check(left, right)
                                if detail is not None:
                                    slot[1] = {
                                        "n_left": na,
                                        "left_opens": [sorted(bit_indices(u)) for u in left.opens],
                                        "n_right": nb,
                                        "right_opens": [sorted(bit_indices(u)) for u in right.opens],
                                        **detail,
                                    }
        results.update(acc)

    if partition_ids:
        part_cap = min(n_max, 4)
        acc = {tid: [0, None] for tid in partition_ids}
        for n in range(part_cap + 1):
            for top in enumerate_topologies(n):
                payload = None
                for dec in iter_partitions(n):
                    for tid in partition_ids:
                        slot = acc[tid]
                        slot[0] += 1
                        if slot[1] is None:
                            detail = _REGISTRY[tid].check(top, dec)
                            if detail is not None:
                                if payload is None:
                                    payload = {
                                        "n": n,
                                        "opens": [sorted(bit_indices(u)) for u in top.opens],
                                    }
                                slot[1] = {
                                    **payload,
                                    "blocks": [sorted(bit_indices(b)) for b in dec.blocks],
                                    **detail,
                                }
        results.update(acc)

    findings = []
    now = time.perf_counter()
    for tid in chosen:
        theorem = _REGISTRY[tid]
        cnt, witness = results[tid]
        cap = n_max if theorem.scope == "space" else (
            min(n_max, 5) if theorem.scope == "pair" else min(n_max, 4))
        findings.append(Finding(
            theorem=tid,
            description=theorem.description,
            scope=theorem.scope,
            asserted=theorem.asserted,
            status="verified" if witness is None else "refuted",
            spaces_checked=cnt,
            n_max=cap,
            witness=witness,
            elapsed=now - started[tid],
        ))
    return findings


def verify(theorem_id: str, n_max: int = 5, jobs: int = 1) -> Finding:
    return verify_all([theorem_id], n_max=n_max, jobs=jobs)[0]


# ---------------------------------------------------------------------------
# implication matrix

@dataclass(frozen=True, eq=False)
class ImplicationMatrix:
    axioms: tuple[str, ...]
    n_max: int
    spaces_checked: int
    counterexamples: dict

    def implies(self, a: str, b: str) -> bool:
        return (a, b) not in self.counterexamples

    def witness(self, a: str, b: str) -> dict | None:
        return self.counterexamples.get((a, b))

    def to_json_dict(self) -> dict:
        return {
            "axioms": list(self.axioms),
            "n_max": self.n_max,
            "spaces_checked": self.spaces_checked,
            "implications": {
                a: sorted(b for b in self.axioms if a != b and self.implies(a, b))
                for a in self.axioms
            },
            "counterexamples": {
                f"{a}=>{b}": w for (a, b), w in sorted(self.counterexamples.items())
            },
        }


def implication_matrix(n_max: int = 5, axioms: Iterable[str] | None = None) -> ImplicationMatrix:
    """Ordered implication survey: (a, b) holds when no space satisfies a but not b.

    Counterexamples are minimal, fewest points then least encoding, because
    the sweep is ascending.
    """
    _check_size(n_max)
    chosen = tuple(axioms) if axioms is not None else tuple(AXIOMS)
    for a in chosen:
        if a not in AXIOMS:
            raise KeyError(f"unknown axiom {a!r}")
    counterexamples: dict = {}
    checked = 0
    for n in range(n_max + 1):
        for pre in enumerate_preorders(n):
            top = alexandrov(pre)
            ctx = SpaceContext(top, pre)
            checked += 1
            verdicts = {a: check_space(top, a, DEFINITIONAL, ctx).verdict for a in chosen}
            payload = None
            for a in chosen:
                if not verdicts[a]:
                    continue
                for b in chosen:
                    if a == b or verdicts[b] or (a, b) in counterexamples:
                        continue
                    if payload is None:
                        payload = _space_payload(ctx)
                    counterexamples[(a, b)] = payload
    return ImplicationMatrix(chosen, n_max, checked, counterexamples)
