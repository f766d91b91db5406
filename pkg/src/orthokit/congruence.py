"""Congruences of implication tables, their kernels, and kernels from subsets.

Partitions are canonicalized as least-representative arrays so that lists of
congruences can be compared as plain sets.  Two enumeration routes exist: a
brute-force filter over all set partitions (the oracle, guarded at n <= 10)
and closure of the principal congruences under pairwise join.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadIndex,
    KernelMismatch,
    MissingOne,
    NotD1,
    NotD2,
    RelationNotCompatible,
    RelationNotReflexive,
    RelationNotTransitive,
    TooLarge,
)
from .implication import ImplicationTable
from .report import Verdict

BRUTE_FORCE_LIMIT = 10  # Bell(10) = 115975 partitions


@dataclass(frozen=True)
class Partition:
    """Blocks over 0..n-1, stored as rep[x] = least element of x's block."""

    rep: tuple[int, ...]

    def __post_init__(self):
        rep = self.rep
        n = len(rep)
        for x in range(n):
            r = rep[x]
            if not 0 <= r <= x:
                raise BadIndex(r, n)
            if rep[r] != r:
                raise BadIndex(r, n)

    @property
    def n(self) -> int:
        return len(self.rep)

    def same(self, x: int, y: int) -> bool:
        return self.rep[x] == self.rep[y]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.rep):
            out.setdefault(r, []).append(x)
        return tuple(tuple(out[r]) for r in sorted(out))

    def block_of(self, x: int) -> tuple[int, ...]:
        r = self.rep[x]
        return tuple(y for y in range(self.n) if self.rep[y] == r)

    def block_count(self) -> int:
        return len(set(self.rep))

    def sort_key(self) -> tuple:
        return (self.block_count(), self.rep)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "Partition":
        rep = [-1] * n
        for block in blocks:
            least = min(block)
            for x in block:
                if rep[x] != -1:
                    raise BadIndex(x, n)
                rep[x] = least
        if any(r == -1 for r in rep):
            raise BadIndex("uncovered element", n)
        return cls(tuple(rep))


@dataclass(frozen=True)
class KernelSet:
    """The block of the constant 1 under some congruence."""

    members: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))


def congruence_violation(T: ImplicationTable, P: Partition) -> tuple | None:
    """First (a, b, c, d) with a~b, c~d but a*c not~ b*d, or None.

    Checked one argument at a time; by transitivity that is equivalent to
    the two-pair form, and the counterexample returned keeps that form.
    """
    n, B, rep = T.n, T.bullet, P.rep
    if P.n != n:
        raise BadIndex(P.n, n)
    for a in range(n):
        for b in range(a + 1, n):
            if rep[a] != rep[b]:
                continue
            for c in range(n):
                if rep[B[a][c]] != rep[B[b][c]]:
                    return (a, b, c, c)
                if rep[B[c][a]] != rep[B[c][b]]:
                    return (c, c, a, b)
    return None


def is_congruence(T: ImplicationTable, P: Partition) -> Verdict:
    v = congruence_violation(T, P)
    return Verdict(v is None, v)


def iter_partitions(n: int):
    """All set partitions of 0..n-1 as least-representative arrays."""
    rep = [0] * n

    def rec(i: int, firsts: tuple[int, ...]):
        if i == n:
            yield tuple(rep)
            return
        for f in firsts:
            rep[i] = f
            yield from rec(i + 1, firsts)
        rep[i] = i
        yield from rec(i + 1, firsts + (i,))

    if n == 0:
        return
    rep[0] = 0
    yield from rec(1, (0,))


def all_congruences_bruteforce(T: ImplicationTable) -> list[Partition]:
    """Filter every partition of the carrier; the oracle the closure method is held to."""
    if T.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(T.n, BRUTE_FORCE_LIMIT)
    found = [Partition(rep) for rep in iter_partitions(T.n) if congruence_violation(T, Partition(rep)) is None]
    found.sort(key=Partition.sort_key)
    return found


def congruence_closure(T: ImplicationTable, pairs) -> Partition:
    """Least congruence merging the given pairs.

    Union-find plus a worklist: each time x and y actually merge, the pairs
    (x*z, y*z) and (z*x, z*y) are queued for every z, until fixpoint.
    """
    n, B = T.n, T.bullet
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = [(a, b) for a, b in pairs]
    for a, b in pending:
        if not (0 <= a < n and 0 <= b < n):
            raise BadIndex((a, b), n)
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        for z in range(n):
            pending.append((B[x][z], B[y][z]))
            pending.append((B[z][x], B[z][y]))
    roots = [find(x) for x in range(n)]
    least: dict[int, int] = {}
    for x in range(n):
        least.setdefault(roots[x], x)
    return Partition(tuple(least[roots[x]] for x in range(n)))


def principal_congruence(T: ImplicationTable, a: int, b: int) -> Partition:
    """Smallest congruence merging a and b."""
    return congruence_closure(T, [(a, b)])


def congruence_join(T: ImplicationTable, P: Partition, Q: Partition) -> Partition:
    pairs = [(block[0], x) for part in (P, Q) for block in part.blocks() for x in block[1:]]
    return congruence_closure(T, pairs)


def congruence_lattice(T: ImplicationTable) -> list[Partition]:
    """All congruences via closure of the principal ones under pairwise join."""
    n = T.n
    known = {Partition.identity(n)}
    for a in range(n):
        for b in range(a + 1, n):
            known.add(principal_congruence(T, a, b))
    frontier = list(known)
    while frontier:
        fresh = []
        for P in frontier:
            for Q in list(known):
                j = congruence_join(T, P, Q)
                if j not in known:
                    known.add(j)
                    fresh.append(j)
        frontier = fresh
    out = sorted(known, key=Partition.sort_key)
    return out


def kernel(T: ImplicationTable, P: Partition) -> KernelSet:
    return KernelSet(frozenset(P.block_of(T.one)))


def verify_kernel_injectivity(T: ImplicationTable) -> Verdict:
    """Distinct congruences must have distinct kernels; witness is a colliding pair."""
    seen: dict[frozenset[int], Partition] = {}
    for P in all_congruences_bruteforce(T):
        k = kernel(T, P).members
        if k in seen:
            return Verdict(False, (seen[k], P))
        seen[k] = P
    return Verdict(True)


def check_d1(T: ImplicationTable, D) -> Verdict:
    """x in D and y*z in D imply (x*y)*z in D; witness is (x, y, z)."""
    members = frozenset(D)
    if T.one not in members:
        raise MissingOne()
    n, B = T.n, T.bullet
    for x in range(n):
        if x not in members:
            continue
        for y in range(n):
            xy = B[x][y]
            for z in range(n):
                if B[y][z] in members and B[xy][z] not in members:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def check_d2(T: ImplicationTable, D) -> Verdict:
    """x*y, y*x in D imply (x*z)*(y*z) in D and (z*x)*(z*y) in D; witness is (x, y, z)."""
    members = frozenset(D)
    if T.one not in members:
        raise MissingOne()
    n, B = T.n, T.bullet
    for x in range(n):
        for y in range(n):
            if B[x][y] not in members or B[y][x] not in members:
                continue
            for z in range(n):
                if B[B[x][z]][B[y][z]] not in members or B[B[z][x]][B[z][y]] not in members:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def theta_from_kernel(T: ImplicationTable, D) -> Partition:
    """The congruence whose kernel is D: relate x and y iff x*y and y*x lie in D.

    D must contain 1 and satisfy the two closure rules, otherwise NotD1 or
    NotD2 is raised.  Transitivity, compatibility, and the kernel itself are
    then verified rather than trusted; a violation cannot happen for genuine
    inputs and is reported as a loud internal failure.
    """
    members = frozenset(D)
    if T.one not in members:
        raise MissingOne()
    v = check_d1(T, members)
    if not v:
        raise NotD1(v.witness)
    v = check_d2(T, members)
    if not v:
        raise NotD2(v.witness)
    n, B = T.n, T.bullet
    rel = [[B[x][y] in members and B[y][x] in members for y in range(n)] for x in range(n)]
    for x in range(n):
        if not rel[x][x]:
            raise RelationNotReflexive(x)
    for x in range(n):
        for y in range(n):
            if not rel[x][y]:
                continue
            for z in range(n):
                if rel[y][z] and not rel[x][z]:
                    raise RelationNotTransitive((x, y, z))
    rep = tuple(min(y for y in range(n) if rel[x][y]) for x in range(n))
    P = Partition(rep)
    bad = congruence_violation(T, P)
    if bad is not None:
        raise RelationNotCompatible(bad)
    got = kernel(T, P).members
    if got != members:
        raise KernelMismatch(members, got)
    return P
