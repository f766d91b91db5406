"""Finite posets, ortholattices, strongness, and orthosemilattices.

Elements are dense indices 0..n-1 and every operation is a precomputed
lookup table, so all laws are decided by exhaustive scans.  Tables are
frozen after construction; everything here is a pure function of its
inputs.  Carriers are expected to stay small (n <= 16).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadIndex,
    NoBottom,
    NoJoin,
    NoMeet,
    NotAntisymmetric,
    NoTop,
    NotReflexive,
    NotStrong,
    NotTransitive,
    NotUpwardClosed,
    OutOfInterval,
    TooLarge,
    WitnessNotFound,
)
from .report import Check, CheckReport, Verdict

# Backtracking over candidate involutions is exponential in the interval
# size, so the witness search refuses carriers above this bound.
WITNESS_SEARCH_LIMIT = 16

Row = tuple[int, ...]
Table = tuple[Row, ...]
BoolRow = tuple[bool, ...]
BoolTable = tuple[BoolRow, ...]


@dataclass(frozen=True)
class PosetTable:
    """A validated partial order as an n x n boolean relation."""

    n: int
    leq: BoolTable

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]


@dataclass(frozen=True)
class OrtholatticeTable:
    """Bounded lattice with an orthocomplementation, all operations tabulated."""

    n: int
    join: Table
    meet: Table
    comp: tuple[int, ...]
    bot: int
    top: int
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def le(self, i: int, j: int) -> bool:
        return self.join[i][j] == j

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def poset(self) -> PosetTable:
        leq = tuple(tuple(self.join[i][j] == j for j in range(self.n)) for i in range(self.n))
        return PosetTable(self.n, leq)


@dataclass(frozen=True)
class IntervalWitness:
    """A chosen orthocomplementation of one interval [p, 1].

    cmap has full carrier length; entries outside the interval are None.
    """

    p: int
    cmap: tuple[int | None, ...]

    def domain(self) -> tuple[int, ...]:
        return tuple(a for a, c in enumerate(self.cmap) if c is not None)

    def comp_of(self, a: int) -> int:
        c = self.cmap[a]
        if c is None:
            raise OutOfInterval(self.p, a)
        return c


@dataclass(frozen=True)
class OrthosemilatticeTable:
    """Join semilattice with top plus one interval orthocomplementation per element."""

    n: int
    join: Table
    top: int
    witnesses: tuple[IntervalWitness, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def le(self, i: int, j: int) -> bool:
        return self.join[i][j] == j

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


@dataclass(frozen=True)
class StrongnessResult:
    strong: bool
    witnesses: tuple[IntervalWitness, ...] | None = None
    failing_p: int | None = None

    def __bool__(self) -> bool:
        return self.strong


def validate_poset(leq) -> PosetTable:
    """Check reflexivity, antisymmetry, and transitivity; raise on the first violation."""
    rows = tuple(tuple(bool(v) for v in row) for row in leq)
    n = len(rows)
    if n < 1 or any(len(row) != n for row in rows):
        raise BadIndex("relation", n)
    for i in range(n):
        if not rows[i][i]:
            raise NotReflexive(i)
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] and rows[j][i]:
                raise NotAntisymmetric(i, j)
    for i in range(n):
        for j in range(n):
            if not rows[i][j]:
                continue
            for k in range(n):
                if rows[j][k] and not rows[i][k]:
                    raise NotTransitive(i, j, k)
    return PosetTable(n, rows)


def lattice_from_order(poset: PosetTable) -> tuple[Table, Table, int, int]:
    """Compute (join, meet, bot, top) by scanning bound sets, or raise naming the bad pair.

    Top and bottom are checked first, so a missing extremum is reported as
    such rather than as some arbitrary unjoinable pair.
    """
    n, leq = poset.n, poset.leq
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if not tops:
        raise NoTop()
    bots = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    if not bots:
        raise NoBottom()
    join = []
    meet = []
    for i in range(n):
        jrow = []
        mrow = []
        for j in range(n):
            ubs = [k for k in range(n) if leq[i][k] and leq[j][k]]
            least = [u for u in ubs if all(leq[u][v] for v in ubs)]
            if not least:
                raise NoJoin(i, j)
            jrow.append(least[0])
            lbs = [k for k in range(n) if leq[k][i] and leq[k][j]]
            greatest = [g for g in lbs if all(leq[v][g] for v in lbs)]
            if not greatest:
                raise NoMeet(i, j)
            mrow.append(greatest[0])
        join.append(tuple(jrow))
        meet.append(tuple(mrow))
    return tuple(join), tuple(meet), bots[0], tops[0]


def _check_lattice_shape(L: OrtholatticeTable) -> None:
    n = L.n
    ok = (
        n >= 1
        and len(L.join) == n
        and len(L.meet) == n
        and len(L.comp) == n
        and all(len(row) == n for row in L.join)
        and all(len(row) == n for row in L.meet)
        and all(0 <= v < n for row in L.join for v in row)
        and all(0 <= v < n for row in L.meet for v in row)
        and all(0 <= v < n for v in L.comp)
        and 0 <= L.bot < n
        and 0 <= L.top < n
    )
    if not ok:
        raise BadIndex("table entry", n)


def validate_ortholattice(L: OrtholatticeTable) -> CheckReport:
    """Check every ortholattice axiom exhaustively; report one counterexample per failure.

    De Morgan is derivable from involution plus antitonicity but is checked
    anyway, as a guard against inconsistent tables.
    """
    _check_lattice_shape(L)
    n, jn, mt, cp = L.n, L.join, L.meet, L.comp
    lab = L.label
    rng = range(n)
    checks: list[Check] = []

    def add(name, fails):
        first = next(fails, None)
        checks.append(Check(name, first is None, first or ""))

    add("join-commutative", (f"x={lab(x)} y={lab(y)}" for x in rng for y in rng if jn[x][y] != jn[y][x]))
    add("meet-commutative", (f"x={lab(x)} y={lab(y)}" for x in rng for y in rng if mt[x][y] != mt[y][x]))
    add("join-associative", (
        f"x={lab(x)} y={lab(y)} z={lab(z)}"
        for x in rng for y in rng for z in rng if jn[jn[x][y]][z] != jn[x][jn[y][z]]
    ))
    add("meet-associative", (
        f"x={lab(x)} y={lab(y)} z={lab(z)}"
        for x in rng for y in rng for z in rng if mt[mt[x][y]][z] != mt[x][mt[y][z]]
    ))
    add("join-idempotent", (f"x={lab(x)}" for x in rng if jn[x][x] != x))
    add("meet-idempotent", (f"x={lab(x)}" for x in rng if mt[x][x] != x))
    add("absorption", (
        f"x={lab(x)} y={lab(y)}"
        for x in rng for y in rng if jn[x][mt[x][y]] != x or mt[x][jn[x][y]] != x
    ))
    add("bottom-least", (f"x={lab(x)}" for x in rng if jn[L.bot][x] != x))
    add("top-greatest", (f"x={lab(x)}" for x in rng if jn[x][L.top] != L.top))
    add("comp-involution", (f"x={lab(x)}: comp(comp(x))={lab(cp[cp[x]])}" for x in rng if cp[cp[x]] != x))
    add("comp-antitone", (
        f"x={lab(x)} y={lab(y)}: comp(y)={lab(cp[y])} not below comp(x)={lab(cp[x])}"
        for x in rng for y in rng if jn[x][y] == y and jn[cp[y]][cp[x]] != cp[x]
    ))
    add("complement-join", (f"x={lab(x)}: x v comp(x)={lab(jn[x][cp[x]])}" for x in rng if jn[x][cp[x]] != L.top))
    add("complement-meet", (f"x={lab(x)}: x ^ comp(x)={lab(mt[x][cp[x]])}" for x in rng if mt[x][cp[x]] != L.bot))
    add("de-morgan-join", (
        f"x={lab(x)} y={lab(y)}"
        for x in rng for y in rng if cp[jn[x][y]] != mt[cp[x]][cp[y]]
    ))
    add("de-morgan-meet", (
        f"x={lab(x)} y={lab(y)}"
        for x in rng for y in rng if cp[mt[x][y]] != jn[cp[x]][cp[y]]
    ))
    return CheckReport(subject="ortholattice", checks=tuple(checks))


def interval(alg, p: int) -> tuple[int, ...]:
    """Elements of [p, 1] in ascending index order; works on any table with a join."""
    if not 0 <= p < alg.n:
        raise BadIndex(p, alg.n)
    return tuple(a for a in range(alg.n) if alg.join[p][a] == a)


def find_interval_orthocomplementation(L: OrtholatticeTable, p: int) -> IntervalWitness:
    """Deterministic backtracking search for an orthocomplementation of [p, 1].

    Elements of the interval are paired in ascending index order, candidate
    images are tried in ascending index order, so the first solution found
    is the lexicographically least one.  Raises WitnessNotFound carrying the
    deepest element that could not be paired.
    """
    if not 0 <= p < L.n:
        raise BadIndex(p, L.n)
    if L.n > WITNESS_SEARCH_LIMIT:
        raise TooLarge(L.n, WITNESS_SEARCH_LIMIT)
    members = interval(L, p)
    jn, mt, top = L.join, L.meet, L.top
    le = L.le
    assign: dict[int, int] = {}
    deepest = 0

    def admissible(a: int, c: int) -> bool:
        if jn[a][c] != top or mt[a][c] != p:
            return False
        # antitonicity against every pair assigned so far, plus the new one
        trial = dict(assign)
        trial[a] = c
        trial[c] = a
        for x in (a, c):
            cx = trial[x]
            for y, cy in trial.items():
                if le(x, y) and not le(cy, cx):
                    return False
                if le(y, x) and not le(cx, cy):
                    return False
        return True

    def backtrack(i: int) -> bool:
        nonlocal deepest
        while i < len(members) and members[i] in assign:
            i += 1
        if i == len(members):
            return True
        deepest = max(deepest, i)
        a = members[i]
        for c in members:
            if c in assign and c != a:
                continue
            if not admissible(a, c):
                continue
            assign[a] = c
            assign[c] = a
            if backtrack(i + 1):
                return True
            del assign[a]
            if c != a:
                del assign[c]
        return False

    if not backtrack(0):
        raise WitnessNotFound(p, members[deepest])
    cmap = tuple(assign.get(a) for a in range(L.n))
    return IntervalWitness(p=p, cmap=cmap)


def is_strong(L: OrtholatticeTable) -> StrongnessResult:
    """Search every interval [p, 1] for an orthocomplementation.

    Returns the full witness family, or the least p whose interval has none.
    The stored family is what every derived structure uses afterwards; it is
    never re-searched.
    """
    witnesses = []
    for p in range(L.n):
        try:
            witnesses.append(find_interval_orthocomplementation(L, p))
        except WitnessNotFound:
            return StrongnessResult(False, None, p)
    return StrongnessResult(True, tuple(witnesses), None)


def is_modular(L: OrtholatticeTable) -> Verdict:
    """x <= z implies x v (y ^ z) = (x v y) ^ z; witness is (x, y, z)."""
    n, jn, mt = L.n, L.join, L.meet
    for x in range(n):
        for z in range(n):
            if jn[x][z] != z:
                continue
            for y in range(n):
                if jn[x][mt[y][z]] != mt[jn[x][y]][z]:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def is_orthomodular(L: OrtholatticeTable) -> Verdict:
    """x <= y implies x v (comp(x) ^ y) = y; witness is (x, y)."""
    n, jn, mt, cp = L.n, L.join, L.meet, L.comp
    for x in range(n):
        for y in range(n):
            if jn[x][y] == y and jn[x][mt[cp[x]][y]] != y:
                return Verdict(False, (x, y))
    return Verdict(True)


def validate_interval_witness(L: OrtholatticeTable, w: IntervalWitness) -> Verdict:
    """Check one witness against the ambient lattice; witness of failure is (kind, data)."""
    members = interval(L, w.p)
    if w.domain() != members:
        return Verdict(False, ("domain", w.domain()))
    jn, mt = L.join, L.meet
    for a in members:
        c = w.cmap[a]
        if c is None or w.cmap[c] != a:
            return Verdict(False, ("involution", a))
        if jn[a][c] != L.top:
            return Verdict(False, ("complement-join", a))
        if mt[a][c] != w.p:
            return Verdict(False, ("complement-meet", a))
    for a in members:
        for b in members:
            if L.le(a, b) and not L.le(w.cmap[b], w.cmap[a]):
                return Verdict(False, ("antitone", (a, b)))
    return Verdict(True)


def as_orthosemilattice(L: OrtholatticeTable, witnesses=None) -> OrthosemilatticeTable:
    """View a strong ortholattice as an orthosemilattice over its whole carrier."""
    if witnesses is None:
        result = is_strong(L)
        if not result:
            raise NotStrong(result.failing_p)
        witnesses = result.witnesses
    return OrthosemilatticeTable(n=L.n, join=L.join, top=L.top, witnesses=tuple(witnesses), names=L.names)


def restrict_to_filter(S: OrthosemilatticeTable, members) -> OrthosemilatticeTable:
    """Restrict an orthosemilattice to an upward-closed subset, reindexing densely."""
    keep = sorted(set(members))
    if not keep:
        raise BadIndex("empty filter", S.n)
    for i in keep:
        if not 0 <= i < S.n:
            raise BadIndex(i, S.n)
    inset = set(keep)
    for i in keep:
        for j in range(S.n):
            if S.le(i, j) and j not in inset:
                raise NotUpwardClosed(i, j)
    old2new = {old: new for new, old in enumerate(keep)}
    m = len(keep)
    join = tuple(tuple(old2new[S.join[a][b]] for b in keep) for a in keep)
    witnesses = []
    for p in keep:
        cmap_old = S.witnesses[p].cmap
        cmap = [None] * m
        for a in keep:
            if cmap_old[a] is not None:
                cmap[old2new[a]] = old2new[cmap_old[a]]
        witnesses.append(IntervalWitness(p=old2new[p], cmap=tuple(cmap)))
    names = tuple(S.label(i) for i in keep) if S.names else None
    return OrthosemilatticeTable(n=m, join=join, top=old2new[S.top], witnesses=tuple(witnesses), names=names)


def order_filter_to_orthosemilattice(L: OrtholatticeTable, members, witnesses=None) -> OrthosemilatticeTable:
    """Restrict a strong ortholattice to an order filter, keeping the stored witnesses."""
    return restrict_to_filter(as_orthosemilattice(L, witnesses), members)


def _interval_glb(S: OrthosemilatticeTable, members, a: int, b: int) -> int | None:
    """Greatest lower bound of a, b within the given interval, or None."""
    lows = [x for x in members if S.le(x, a) and S.le(x, b)]
    greatest = [g for g in lows if all(S.le(x, g) for x in lows)]
    return greatest[0] if greatest else None


def validate_orthosemilattice(S: OrthosemilatticeTable) -> CheckReport:
    """Check the semilattice laws, the top, and every interval witness.

    Each interval [p, 1] must be a lattice under the induced order, the
    witness must be an orthocomplementation of it, and its De Morgan meet
    (comp(a) v comp(b)) complemented must agree with the order-theoretic meet.
    """
    n = S.n
    if n < 1 or len(S.join) != n or any(len(r) != n for r in S.join) or len(S.witnesses) != n:
        raise BadIndex("table shape", n)
    if any(not 0 <= v < n for row in S.join for v in row) or not 0 <= S.top < n:
        raise BadIndex("table entry", n)
    jn = S.join
    lab = S.label
    rng = range(n)
    checks: list[Check] = []

    def add(name, fails):
        first = next(fails, None)
        checks.append(Check(name, first is None, first or ""))

    add("join-commutative", (f"x={lab(x)} y={lab(y)}" for x in rng for y in rng if jn[x][y] != jn[y][x]))
    add("join-associative", (
        f"x={lab(x)} y={lab(y)} z={lab(z)}"
        for x in rng for y in rng for z in rng if jn[jn[x][y]][z] != jn[x][jn[y][z]]
    ))
    add("join-idempotent", (f"x={lab(x)}" for x in rng if jn[x][x] != x))
    add("top-greatest", (f"x={lab(x)}" for x in rng if jn[x][S.top] != S.top))

    def domain_fails():
        for p in rng:
            w = S.witnesses[p]
            if w.p != p:
                yield f"witness stored at {lab(p)} claims p={lab(w.p)}"
                return
            if len(w.cmap) != n:
                yield f"p={lab(p)}: cmap length {len(w.cmap)}"
                return
            members = interval(S, p)
            if w.domain() != members:
                yield f"p={lab(p)}: domain {w.domain()} != interval {members}"
                return
            if any(w.cmap[a] not in members for a in members):
                yield f"p={lab(p)}: image leaves the interval"
                return

    add("witness-domains", domain_fails())
    if not checks[-1].passed:
        # the per-interval law checks below would just crash on a bad family
        return CheckReport(subject="orthosemilattice", checks=tuple(checks))

    add("witness-involution", (
        f"p={lab(p)} a={lab(a)}"
        for p in rng for a in interval(S, p) if S.witnesses[p].cmap[S.witnesses[p].cmap[a]] != a
    ))
    add("witness-antitone", (
        f"p={lab(p)} a={lab(a)} b={lab(b)}"
        for p in rng
        for a in interval(S, p)
        for b in interval(S, p)
        if S.le(a, b) and not S.le(S.witnesses[p].cmap[b], S.witnesses[p].cmap[a])
    ))
    add("complement-join", (
        f"p={lab(p)} a={lab(a)}"
        for p in rng for a in interval(S, p) if jn[a][S.witnesses[p].cmap[a]] != S.top
    ))

    def lattice_fails():
        for p in rng:
            members = interval(S, p)
            for a in members:
                for b in members:
                    if _interval_glb(S, members, a, b) is None:
                        yield f"p={lab(p)}: {lab(a)} and {lab(b)} have no meet in the interval"
                        return

    add("interval-lattice", lattice_fails())

    def demorgan_fails():
        for p in rng:
            w = S.witnesses[p].cmap
            members = interval(S, p)
            for a in members:
                for b in members:
                    got = w[jn[w[a]][w[b]]]
                    want = _interval_glb(S, members, a, b)
                    if got != want:
                        yield f"p={lab(p)} a={lab(a)} b={lab(b)}: De Morgan meet {lab(got)}, order meet {want}"
                        return

    add("interval-meet-de-morgan", demorgan_fails())
    add("complement-meet", (
        f"p={lab(p)} a={lab(a)}"
        for p in rng
        for a in interval(S, p)
        if _interval_glb(S, interval(S, p), a, S.witnesses[p].cmap[a]) != p
    ))
    return CheckReport(subject="orthosemilattice", checks=tuple(checks))


def check_overlap_consistency(S: OrthosemilatticeTable) -> CheckReport:
    """Interval meets computed in [p, 1] and [q, 1] must agree on [q, 1] when p <= q."""
    n, jn = S.n, S.join
    lab = S.label

    def fails():
        for p in range(n):
            wp = S.witnesses[p].cmap
            for q in range(n):
                if not S.le(p, q):
                    continue
                wq = S.witnesses[q].cmap
                members_q = interval(S, q)
                for a in members_q:
                    for b in members_q:
                        in_p = wp[jn[wp[a]][wp[b]]]
                        in_q = wq[jn[wq[a]][wq[b]]]
                        if in_p != in_q:
                            yield (
                                f"p={lab(p)} q={lab(q)} a={lab(a)} b={lab(b)}: "
                                f"meet {lab(in_p)} in [p,1] vs {lab(in_q)} in [q,1]"
                            )
                            return

    first = next(fails(), None)
    check = Check("overlap-meets", first is None, first or "")
    return CheckReport(subject="orthosemilattice-overlap", checks=(check,))
