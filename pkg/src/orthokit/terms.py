"""Terms over the signature {*, 1} with x- and y-variables kept apart.

The two variable kinds play different roles: a term is an ideal term of an
algebra when plugging 1 into every y-variable makes it identically 1, and a
subset is closed under the term when x-variables range over the carrier
while y-variables range over the subset only.

Text syntax is a prefix S-expression: `1`, `x<i>`, `y<j>`, and `(b t u)`
for the binary operation, e.g. `(b (b y0 (b y1 x0)) x0)`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .congruence import KernelSet, congruence_closure, kernel
from .errors import ArityMismatch, ParseError
from .implication import ImplicationTable
from .report import Check, CheckReport, Verdict


@dataclass(frozen=True)
class Const1:
    pass


@dataclass(frozen=True)
class XVar:
    index: int


@dataclass(frozen=True)
class YVar:
    index: int


@dataclass(frozen=True)
class Bullet:
    left: "TermNode"
    right: "TermNode"


TermNode = Const1 | XVar | YVar | Bullet


@dataclass(frozen=True)
class Term:
    root: TermNode
    xarity: int
    yarity: int

    def __post_init__(self):
        for node in _walk(self.root):
            if isinstance(node, XVar) and not 0 <= node.index < self.xarity:
                raise ArityMismatch(f"x{node.index} with declared x-arity {self.xarity}")
            if isinstance(node, YVar) and not 0 <= node.index < self.yarity:
                raise ArityMismatch(f"y{node.index} with declared y-arity {self.yarity}")


def _walk(node: TermNode):
    stack = [node]
    while stack:
        cur = stack.pop()
        yield cur
        if isinstance(cur, Bullet):
            stack.append(cur.left)
            stack.append(cur.right)


def term_of(root: TermNode) -> Term:
    """Wrap a tree, inferring arities from the largest variable indices used."""
    xar = yar = 0
    for node in _walk(root):
        if isinstance(node, XVar):
            xar = max(xar, node.index + 1)
        elif isinstance(node, YVar):
            yar = max(yar, node.index + 1)
    return Term(root, xar, yar)


# Evaluation compiles the tree once into a postorder program; the opcode is
# 0 = push the constant, 1/2 = push x/y variable, 3 = pop two and apply.
@lru_cache(maxsize=None)
def _program(term: Term) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []

    def emit(node: TermNode) -> None:
        if isinstance(node, Bullet):
            emit(node.left)
            emit(node.right)
            out.append((3, 0))
        elif isinstance(node, Const1):
            out.append((0, 0))
        elif isinstance(node, XVar):
            out.append((1, node.index))
        else:
            out.append((2, node.index))

    emit(term.root)
    return tuple(out)


def _run(program, B, one: int, xs, ys) -> int:
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for op, arg in program:
        if op == 3:
            r = pop()
            l = pop()
            push(B[l][r])
        elif op == 1:
            push(xs[arg])
        elif op == 2:
            push(ys[arg])
        else:
            push(one)
    return stack[0]


def eval_term(T: ImplicationTable, term: Term, xs, ys) -> int:
    """Value of the term under the given assignment."""
    if len(xs) != term.xarity:
        raise ArityMismatch(f"expected {term.xarity} x-values, got {len(xs)}")
    if len(ys) != term.yarity:
        raise ArityMismatch(f"expected {term.yarity} y-values, got {len(ys)}")
    return _run(_program(term), T.bullet, T.one, tuple(xs), tuple(ys))


def is_ideal_term(T: ImplicationTable, term: Term) -> Verdict:
    """Does the term evaluate to 1 whenever every y-variable is set to 1?

    The notion is relative to the algebra: the scan runs over all
    x-assignments of this carrier.  Witness of failure is the x-assignment.
    """
    ones = (T.one,) * term.yarity
    prog = _program(term)
    B, one = T.bullet, T.one
    for xs in product(range(T.n), repeat=term.xarity):
        if _run(prog, B, one, xs, ones) != one:
            return Verdict(False, xs)
    return Verdict(True)


def builtin_terms() -> dict[str, Term]:
    """The six closure terms t1..t6 that characterize ideals."""
    x0, x1, x2 = XVar(0), XVar(1), XVar(2)
    y0, y1 = YVar(0), YVar(1)
    b = Bullet
    return {
        "t1": Term(b(x0, y0), 1, 1),
        "t2": Term(b(b(x0, x1), b(y1, b(b(y0, x0), x1))), 2, 2),
        "t3": Term(b(b(x0, x1), b(x0, b(y0, x1))), 2, 1),
        "t4": Term(b(b(b(x0, x1), b(x0, b(y0, x2))), b(b(x0, x1), b(x0, x2))), 3, 1),
        "t5": Term(b(b(b(x0, x1), b(b(y0, x2), x1)), b(b(x0, x1), b(x2, x1))), 3, 1),
        "t6": Term(b(b(y0, b(y1, x0)), x0), 1, 2),
    }


def closed_under_term(T: ImplicationTable, I, term: Term) -> Verdict:
    """Exhaustive closure check: x-values from the carrier, y-values from I.

    Witness of failure is (xs, ys, value).
    """
    members = frozenset(I)
    if not members:
        raise ValueError("closure checked against an empty subset")
    inside = sorted(members)
    prog = _program(term)
    B, one = T.bullet, T.one
    for xs in product(range(T.n), repeat=term.xarity):
        for ys in product(inside, repeat=term.yarity):
            val = _run(prog, B, one, xs, ys)
            if val not in members:
                return Verdict(False, (xs, ys, val))
    return Verdict(True)


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    failing_term: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_ideal_by_terms(T: ImplicationTable, I) -> IdealCheck:
    """A nonempty subset is an ideal iff it is closed under t1..t6, checked in order."""
    for name, term in builtin_terms().items():
        v = closed_under_term(T, I, term)
        if not v:
            return IdealCheck(False, name, v.witness)
    return IdealCheck(True)


def property_mp(T: ImplicationTable, I) -> Verdict:
    """The detachment rule: a in I and a*b in I imply b in I; witness is (a, b)."""
    members = frozenset(I)
    B = T.bullet
    for a in sorted(members):
        for b in range(T.n):
            if B[a][b] in members and b not in members:
                return Verdict(False, (a, b))
    return Verdict(True)


def check_lemma_chain(T: ImplicationTable, I) -> CheckReport:
    """The three closure implications behind the six-term characterization.

    Closure under {t1, t2, t6} forces the D1 rule; {t3, t4, t6} forces the
    (z*x)*(z*y) half of D2; {t2, t5, t6} forces the (x*z)*(y*z) half.  Each
    check passes when its hypothesis fails or its conclusion holds.
    """
    members = frozenset(I)
    terms = builtin_terms()
    closed = {name: bool(closed_under_term(T, members, terms[name])) for name in terms}
    n, B = T.n, T.bullet

    def d1_holds() -> bool:
        for x in sorted(members):
            for y in range(n):
                xy = B[x][y]
                for z in range(n):
                    if B[y][z] in members and B[xy][z] not in members:
                        return False
        return True

    def d2_left_holds() -> bool:
        for x in range(n):
            for y in range(n):
                if B[x][y] not in members or B[y][x] not in members:
                    continue
                for z in range(n):
                    if B[B[z][x]][B[z][y]] not in members:
                        return False
        return True

    def d2_right_holds() -> bool:
        for x in range(n):
            for y in range(n):
                if B[x][y] not in members or B[y][x] not in members:
                    continue
                for z in range(n):
                    if B[B[x][z]][B[y][z]] not in members:
                        return False
        return True

    rows = [
        ("t1-t2-t6-give-d1", closed["t1"] and closed["t2"] and closed["t6"], d1_holds),
        ("t3-t4-t6-give-d2-left", closed["t3"] and closed["t4"] and closed["t6"], d2_left_holds),
        ("t2-t5-t6-give-d2-right", closed["t2"] and closed["t5"] and closed["t6"], d2_right_holds),
    ]
    checks = []
    for name, hyp, concl in rows:
        if not hyp:
            checks.append(Check(name, True, "hypothesis closure does not hold"))
        elif concl():
            checks.append(Check(name, True))
        else:
            checks.append(Check(name, False, "closure holds but the conclusion fails"))
    return CheckReport(subject="lemma-chain", checks=tuple(checks))


def ideal_closure(T: ImplicationTable, G) -> KernelSet:
    """Least ideal containing G: kernel of the congruence merging each g with 1."""
    gens = sorted(frozenset(G))
    if not gens:
        raise ValueError("ideal closure of an empty set")
    P = congruence_closure(T, [(g, T.one) for g in gens])
    return kernel(T, P)


def random_term(rng: random.Random, xarity: int = 2, yarity: int = 2, max_depth: int = 5) -> Term:
    """One random term tree; leaves are drawn from 1, x-vars, and y-vars."""
    leaves: list[TermNode] = [Const1()]
    leaves += [XVar(i) for i in range(xarity)]
    leaves += [YVar(j) for j in range(yarity)]

    def node(depth: int) -> TermNode:
        if depth >= max_depth or rng.random() < 0.3:
            return leaves[rng.randrange(len(leaves))]
        return Bullet(node(depth + 1), node(depth + 1))

    return Term(Bullet(node(1), node(1)), xarity, yarity)


def random_ideal_terms(
    T: ImplicationTable,
    count: int,
    seed: int = 0,
    xarity: int = 2,
    yarity: int = 2,
    max_depth: int = 5,
    max_tries: int = 20000,
) -> list[Term]:
    """Deterministically sample distinct random terms that are ideal terms of T."""
    rng = random.Random(seed)
    found: list[Term] = []
    seen: set[Term] = set()
    for _ in range(max_tries):
        if len(found) == count:
            return found
        t = random_term(rng, xarity, yarity, max_depth)
        if t in seen:
            continue
        seen.add(t)
        if is_ideal_term(T, t):
            found.append(t)
    raise RuntimeError(f"could not find {count} ideal terms in {max_tries} tries")


def parse_term(text: str) -> Term:
    """Parse the prefix S-expression syntax; arities are inferred from the variables."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise ParseError("empty term")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of term")
        tok = tokens[pos]
        pos += 1
        return tok

    def atom(tok: str) -> TermNode:
        if tok == "1":
            return Const1()
        if len(tok) > 1 and tok[0] in "xy" and tok[1:].isdigit():
            return XVar(int(tok[1:])) if tok[0] == "x" else YVar(int(tok[1:]))
        raise ParseError(f"unknown token {tok!r}")

    def expr() -> TermNode:
        tok = take()
        if tok == "(":
            head = take()
            if head != "b":
                raise ParseError(f"expected 'b' after '(', got {head!r}")
            left = expr()
            right = expr()
            closing = take()
            if closing != ")":
                raise ParseError(f"expected ')', got {closing!r}")
            return Bullet(left, right)
        if tok == ")":
            raise ParseError("unexpected ')'")
        return atom(tok)

    root = expr()
    if peek() is not None:
        raise ParseError(f"trailing input {peek()!r}")
    return term_of(root)


def serialize_term(term: Term) -> str:
    def fmt(node: TermNode) -> str:
        if isinstance(node, Bullet):
            return f"(b {fmt(node.left)} {fmt(node.right)})"
        if isinstance(node, Const1):
            return "1"
        if isinstance(node, XVar):
            return f"x{node.index}"
        return f"y{node.index}"

    return fmt(term.root)
