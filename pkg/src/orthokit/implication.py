"""The implication reduct x*y = (x v y) complemented in [y, 1], and the way back.

`derive_bullet` turns an orthosemilattice into a binary-operation table;
`reconstruct_orthosemilattice` rebuilds the order, joins, and interval
complements from nothing but that table.  Both directions are exact inverses
on valid inputs, which the test suite checks table by table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import IntervalWitness, OrthosemilatticeTable, PosetTable, validate_orthosemilattice, validate_poset
from .errors import (
    AlgebraError,
    BadIndex,
    MissingWitness,
    NotAJoin,
    NotAnOrder,
    NotImplicationAlgebra,
    OutOfInterval,
)
from .report import Check, CheckReport

Row = tuple[int, ...]
Table = tuple[Row, ...]


@dataclass(frozen=True)
class ImplicationTable:
    """Carrier 0..n-1, the n x n table of the binary operation, and the constant 1."""

    n: int
    bullet: Table
    one: int
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def le(self, x: int, y: int) -> bool:
        return self.bullet[x][y] == self.one

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


def _check_shape(T: ImplicationTable) -> None:
    n = T.n
    ok = (
        n >= 1
        and len(T.bullet) == n
        and all(len(row) == n for row in T.bullet)
        and all(0 <= v < n for row in T.bullet for v in row)
        and 0 <= T.one < n
    )
    if not ok:
        raise BadIndex("table entry", n)


def derive_bullet(S: OrthosemilatticeTable) -> ImplicationTable:
    """Tabulate x*y := comp of (x v y) inside [y, 1], using the stored witnesses."""
    n, jn = S.n, S.join
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            c = S.witnesses[y].cmap[jn[x][y]]
            if c is None:
                raise MissingWitness(y)
            row.append(c)
        rows.append(tuple(row))
    return ImplicationTable(n=n, bullet=tuple(rows), one=S.top, names=S.names)


# The defining identities of an implication orthoalgebra, in check order.
# (d') is the conditional form of (d): p <= a implies ((a*p)*a)*a = 1, with
# p <= a read off the induced relation x <= y iff x*y = 1.
IDENTITIES = {
    "a": "x*1 = 1, x*x = 1, 1*x = x",
    "b": "(x*y)*y = (y*x)*x",
    "c": "(((x*y)*y)*p)*(x*p) = 1",
    "d": "(((x*p)*p)*p)*((x*p)*p) = (x*p)*p",
    "d'": "p*a = 1 implies ((a*p)*a)*a = 1",
}


def check_ioa_identities(T: ImplicationTable) -> CheckReport:
    """Exhaustively check the defining identities; the report also records
    whether (d) and (d') agreed, which they must on any genuine table."""
    _check_shape(T)
    n, B, one = T.n, T.bullet, T.one
    lab = T.label
    rng = range(n)
    checks: list[Check] = []

    def add(name, fails):
        first = next(fails, None)
        checks.append(Check(name, first is None, first or ""))

    add("ident-a", (
        f"x={lab(x)}"
        for x in rng
        if B[x][one] != one or B[x][x] != one or B[one][x] != x
    ))
    add("ident-b", (
        f"x={lab(x)} y={lab(y)}: {lab(B[B[x][y]][y])} != {lab(B[B[y][x]][x])}"
        for x in rng for y in rng if B[B[x][y]][y] != B[B[y][x]][x]
    ))
    add("ident-c", (
        f"x={lab(x)} y={lab(y)} p={lab(p)}"
        for x in rng for y in rng for p in rng
        if B[B[B[B[x][y]][y]][p]][B[x][p]] != one
    ))

    def d_fails():
        for x in rng:
            for p in rng:
                q = B[B[x][p]][p]
                if B[B[q][p]][q] != q:
                    yield f"x={lab(x)} p={lab(p)}"

    def d_prime_fails():
        for p in rng:
            for a in rng:
                if B[p][a] != one:
                    continue
                if B[B[B[a][p]][a]][a] != one:
                    yield f"p={lab(p)} a={lab(a)}"

    add("ident-d", d_fails())
    add("ident-d'", d_prime_fails())
    d_ok = checks[-2].passed
    dp_ok = checks[-1].passed
    checks.append(Check(
        "ident-d-agreement",
        d_ok == dp_ok,
        "" if d_ok == dp_ok else f"(d) {'passed' if d_ok else 'failed'} but (d') {'passed' if dp_ok else 'failed'}",
    ))
    return CheckReport(subject="implication-identities", checks=tuple(checks))


def require_implication_algebra(T: ImplicationTable) -> CheckReport:
    """Raise NotImplicationAlgebra unless every identity passes."""
    report = check_ioa_identities(T)
    if not report.ok:
        raise NotImplicationAlgebra(report)
    return report


def induced_order(T: ImplicationTable) -> PosetTable:
    """The relation x <= y iff x*y = 1, verified to be an order with greatest element."""
    _check_shape(T)
    n, B, one = T.n, T.bullet, T.one
    leq = tuple(tuple(B[x][y] == one for y in range(n)) for x in range(n))
    try:
        poset = validate_poset(leq)
    except AlgebraError as exc:
        raise NotAnOrder(str(exc)) from exc
    for x in range(n):
        if not leq[x][one]:
            raise NotAnOrder(f"{T.label(x)} is not below the constant 1")
    return poset


def induced_join(T: ImplicationTable) -> Table:
    """Tabulate x v y := (x*y)*y and verify it is the lub of the induced order."""
    n, B = T.n, T.bullet
    leq = induced_order(T).leq
    join = tuple(tuple(B[B[x][y]][y] for y in range(n)) for x in range(n))
    for x in range(n):
        for y in range(n):
            j = join[x][y]
            ubs = [k for k in range(n) if leq[x][k] and leq[y][k]]
            if not leq[x][j] or not leq[y][j] or any(not leq[j][k] for k in ubs):
                raise NotAJoin(x, y)
    return join


def interval_meet(T: ImplicationTable, p: int, a: int, b: int) -> int:
    """Meet of a and b within [p, 1]: (((a*p)*(b*p))*(b*p))*p."""
    for v in (p, a, b):
        if not 0 <= v < T.n:
            raise BadIndex(v, T.n)
    if not T.le(p, a):
        raise OutOfInterval(p, a)
    if not T.le(p, b):
        raise OutOfInterval(p, b)
    B = T.bullet
    ap, bp = B[a][p], B[b][p]
    return B[B[B[ap][bp]][bp]][p]


def reconstruct_orthosemilattice(T: ImplicationTable) -> OrthosemilatticeTable:
    """Rebuild the orthosemilattice whose reduct the table is.

    Joins come from (x*y)*y and the witness of [p, 1] maps a to a*p.  The
    result is revalidated; failure means the input was not a genuine
    implication orthoalgebra in the first place.
    """
    require_implication_algebra(T)
    n, B = T.n, T.bullet
    join = induced_join(T)
    witnesses = []
    for p in range(n):
        cmap = tuple(B[a][p] if B[p][a] == T.one else None for a in range(n))
        witnesses.append(IntervalWitness(p=p, cmap=cmap))
    S = OrthosemilatticeTable(n=n, join=join, top=T.one, witnesses=tuple(witnesses), names=T.names)
    report = validate_orthosemilattice(S)
    if not report.ok:
        raise NotImplicationAlgebra(report)
    return S
