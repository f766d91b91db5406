"""Built-in models and the two text formats.

The .olat format (UTF-8, line oriented, `#` starts a comment):

    olat 1
    n <count>
    name <i> <label>     # optional
    le <i> <j>           # order generators; reflexive-transitive closure applied
    comp <i> <j>         # symmetric, must cover each element exactly once

Bottom and top are inferred from the order and checked.  The .ioa format:

    ioa 1
    n <count>
    one <i>
    row <i> v0 v1 ... v(n-1)

Both serializers are stable: parse(serialize(x)) reproduces x exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    OrtholatticeTable,
    OrthosemilatticeTable,
    as_orthosemilattice,
    is_strong,
    lattice_from_order,
    restrict_to_filter,
    validate_poset,
)
from .errors import MissingComplement, NotStrong, ParseError, RangeError
from .implication import ImplicationTable, derive_bullet


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "ortholattice" | "orthosemilattice" | "implication"
    payload: object
    note: str


# ---------------------------------------------------------------------------
# parsing and serialization


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _index(tok: str, n: int, lineno: int) -> int:
    v = _int(tok, lineno)
    if not 0 <= v < n:
        raise RangeError(f"index {v} out of range 0..{n - 1}", lineno)
    return v


def _transitive_closure(leq: list[list[bool]]) -> None:
    n = len(leq)
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_i, row_k = leq[i], leq[k]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True


def parse_olat(text: str) -> OrtholatticeTable:
    lines = list(_directives(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    if header != ["olat", "1"]:
        raise ParseError("expected header 'olat 1'", lineno)
    n = None
    le_pairs: list[tuple[int, int]] = []
    comp: list[int | None] = []
    names: list[str] | None = None
    for lineno, toks in lines[1:]:
        key = toks[0]
        if key == "n":
            if n is not None:
                raise ParseError("duplicate n line", lineno)
            if len(toks) != 2:
                raise ParseError("usage: n <count>", lineno)
            n = _int(toks[1], lineno)
            if n < 1:
                raise RangeError("n must be at least 1", lineno)
            comp = [None] * n
            continue
        if n is None:
            raise ParseError(f"'{key}' line before the n line", lineno)
        if key == "name":
            if len(toks) != 3:
                raise ParseError("usage: name <i> <label>", lineno)
            if names is None:
                names = [str(i) for i in range(n)]
            names[_index(toks[1], n, lineno)] = toks[2]
        elif key == "le":
            if len(toks) != 3:
                raise ParseError("usage: le <i> <j>", lineno)
            le_pairs.append((_index(toks[1], n, lineno), _index(toks[2], n, lineno)))
        elif key == "comp":
            if len(toks) != 3:
                raise ParseError("usage: comp <i> <j>", lineno)
            i = _index(toks[1], n, lineno)
            j = _index(toks[2], n, lineno)
            for a, b in ((i, j), (j, i)):
                if comp[a] is not None and comp[a] != b:
                    raise ParseError(f"element {a} complemented twice", lineno)
                comp[a] = b
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if n is None:
        raise ParseError("missing n line", 1)
    for i, c in enumerate(comp):
        if c is None:
            raise MissingComplement(i)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in le_pairs:
        leq[i][j] = True
    _transitive_closure(leq)
    poset = validate_poset(leq)
    join, meet, bot, top = lattice_from_order(poset)
    return OrtholatticeTable(
        n=n, join=join, meet=meet, comp=tuple(comp), bot=bot, top=top,
        names=tuple(names) if names else None,
    )


def _cover_pairs(L: OrtholatticeTable) -> list[tuple[int, int]]:
    n = L.n
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or not L.le(i, j):
                continue
            if any(k != i and k != j and L.le(i, k) and L.le(k, j) for k in range(n)):
                continue
            out.append((i, j))
    return out


def serialize_olat(L: OrtholatticeTable) -> str:
    lines = ["olat 1", f"n {L.n}"]
    if L.names:
        lines += [f"name {i} {L.names[i]}" for i in range(L.n)]
    lines += [f"le {i} {j}" for i, j in sorted(_cover_pairs(L))]
    done = set()
    for i in range(L.n):
        j = L.comp[i]
        if (j, i) not in done:
            lines.append(f"comp {i} {j}")
            done.add((i, j))
    return "\n".join(lines) + "\n"


def parse_ioa(text: str) -> ImplicationTable:
    lines = list(_directives(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    if header != ["ioa", "1"]:
        raise ParseError("expected header 'ioa 1'", lineno)
    n = None
    one = None
    rows: list[tuple[int, ...] | None] = []
    for lineno, toks in lines[1:]:
        key = toks[0]
        if key == "n":
            if n is not None:
                raise ParseError("duplicate n line", lineno)
            if len(toks) != 2:
                raise ParseError("usage: n <count>", lineno)
            n = _int(toks[1], lineno)
            if n < 1:
                raise RangeError("n must be at least 1", lineno)
            rows = [None] * n
            continue
        if n is None:
            raise ParseError(f"'{key}' line before the n line", lineno)
        if key == "one":
            if len(toks) != 2:
                raise ParseError("usage: one <i>", lineno)
            one = _index(toks[1], n, lineno)
        elif key == "row":
            if len(toks) != n + 2:
                raise ParseError(f"row needs {n} values, got {len(toks) - 2}", lineno)
            i = _index(toks[1], n, lineno)
            if rows[i] is not None:
                raise ParseError(f"duplicate row {i}", lineno)
            rows[i] = tuple(_index(tok, n, lineno) for tok in toks[2:])
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if n is None:
        raise ParseError("missing n line", 1)
    if one is None:
        raise ParseError("missing one line", 1)
    for i, row in enumerate(rows):
        if row is None:
            raise ParseError(f"missing row {i}", 1)
    return ImplicationTable(n=n, bullet=tuple(rows), one=one)


def serialize_ioa(T: ImplicationTable) -> str:
    lines = ["ioa 1", f"n {T.n}", f"one {T.one}"]
    lines += [f"row {i} " + " ".join(str(v) for v in T.bullet[i]) for i in range(T.n)]
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """'olat' or 'ioa' according to the header line."""
    for _, toks in _directives(text):
        if toks[:1] == ["olat"]:
            return "olat"
        if toks[:1] == ["ioa"]:
            return "ioa"
        break
    raise ParseError("unrecognized header; expected 'olat 1' or 'ioa 1'", 1)


# ---------------------------------------------------------------------------
# built-in models


def ortholattice_from_covers(n, covers, comp_pairs, names=None) -> OrtholatticeTable:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in covers:
        leq[i][j] = True
    _transitive_closure(leq)
    join, meet, bot, top = lattice_from_order(validate_poset(leq))
    comp = [None] * n
    for i, j in comp_pairs:
        comp[i] = j
        comp[j] = i
    assert all(c is not None for c in comp)
    return OrtholatticeTable(
        n=n, join=join, meet=meet, comp=tuple(comp), bot=bot, top=top,
        names=tuple(names) if names else None,
    )


def boolean_lattice(k: int, names=None) -> OrtholatticeTable:
    """The Boolean lattice 2^k on bitmask indices; complement is bit flip."""
    n = 1 << k
    full = n - 1
    join = tuple(tuple(x | y for y in range(n)) for x in range(n))
    meet = tuple(tuple(x & y for y in range(n)) for x in range(n))
    comp = tuple(x ^ full for x in range(n))
    return OrtholatticeTable(
        n=n, join=join, meet=meet, comp=comp, bot=0, top=full,
        names=tuple(names) if names else None,
    )


def _chain2() -> OrtholatticeTable:
    return ortholattice_from_covers(2, [(0, 1)], [(0, 1)], names=("0", "1"))


def _mo2() -> OrtholatticeTable:
    # four pairwise incomparable elements, each both atom and coatom
    covers = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
    comp_pairs = [(0, 5), (1, 2), (3, 4)]
    return ortholattice_from_covers(6, covers, comp_pairs, names=("0", "a", "a'", "b", "b'", "1"))


def _fig1_o6() -> OrtholatticeTable:
    # hexagon: 0 < a < b < 1 and 0 < b' < a' < 1, complements 0-1, a-a', b-b'
    names = ("0", "a", "b", "b'", "a'", "1")
    covers = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
    comp_pairs = [(0, 5), (1, 4), (2, 3)]
    return ortholattice_from_covers(6, covers, comp_pairs, names=names)


def _fig2_strong12() -> OrtholatticeTable:
    # 12 elements: bottom, five atoms e a b d c, five coatoms, top
    names = ("0", "e", "a", "b", "d", "c", "c'", "d'", "b'", "a'", "e'", "1")
    covers = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 6), (1, 7),      # e < c', e < d'
        (2, 6), (2, 8),      # a < c', a < b'
        (3, 7), (3, 9),      # b < d', b < a'
        (4, 8), (4, 10),     # d < b', d < e'
        (5, 9), (5, 10),     # c < a', c < e'
        (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    ]
    comp_pairs = [(0, 11), (1, 10), (2, 9), (3, 8), (4, 7), (5, 6)]
    return ortholattice_from_covers(12, covers, comp_pairs, names=names)


def _strong_semilattice(L: OrtholatticeTable) -> OrthosemilatticeTable:
    result = is_strong(L)
    if not result:
        raise NotStrong(result.failing_p)
    return as_orthosemilattice(L, result.witnesses)


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """The built-in models, identical across runs.

    Ortholattices come first, then orthosemilattices, then the derived
    implication reducts of every strong entry and of the filter entry.
    """
    chain2 = _chain2()
    bool4 = boolean_lattice(2, ("0", "a", "a'", "1"))
    bool8 = boolean_lattice(3, ("0", "a", "b", "ab", "c", "ac", "bc", "1"))
    mo2 = _mo2()
    fig1 = _fig1_o6()
    fig2 = _fig2_strong12()

    entries = [
        CatalogEntry("chain2", "ortholattice", chain2, "two-element chain"),
        CatalogEntry("bool4", "ortholattice", bool4, "Boolean lattice with two atoms"),
        CatalogEntry("bool8", "ortholattice", bool8, "Boolean lattice with three atoms"),
        CatalogEntry("mo2", "ortholattice", mo2, "orthomodular; four incomparable atoms-coatoms"),
        CatalogEntry("fig1_o6", "ortholattice", fig1,
                     "hexagon on which comp(x) v y degenerates; not strong"),
        CatalogEntry("fig2_strong12", "ortholattice", fig2,
                     "12-element strong ortholattice, neither modular nor orthomodular"),
    ]

    semis = {name: _strong_semilattice(L)
             for name, L in [("chain2", chain2), ("bool4", bool4), ("bool8", bool8),
                             ("mo2", mo2), ("fig2_strong12", fig2)]}
    fig2_full = semis["fig2_strong12"]
    fig2_no0 = restrict_to_filter(fig2_full, range(1, 12))
    entries.append(CatalogEntry(
        "fig2_filter_no0", "orthosemilattice", fig2_no0,
        "the 12-element strong ortholattice minus its bottom; no global meets",
    ))

    reducts = [
        ("chain2_reduct", semis["chain2"], "implication reduct of the two-element chain"),
        ("bool4_reduct", semis["bool4"], "classical implication on the four-element Boolean lattice"),
        ("bool8_reduct", semis["bool8"], "classical implication on the eight-element Boolean lattice"),
        ("mo2_reduct", semis["mo2"], "implication reduct of mo2"),
        ("fig2_reduct", fig2_full, "implication reduct of the 12-element strong ortholattice"),
        ("fig2_filter_no0_reduct", fig2_no0, "implication reduct of the bottomless filter"),
    ]
    for name, S, note in reducts:
        entries.append(CatalogEntry(name, "implication", derive_bullet(S), note))
    return tuple(entries)


def catalog_names() -> tuple[str, ...]:
    return tuple(e.name for e in catalog())


def entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}; known: {', '.join(catalog_names())}")


@lru_cache(maxsize=None)
def semilattice(name: str) -> OrthosemilatticeTable:
    """The orthosemilattice view of a strong ortholattice or semilattice entry."""
    e = entry(name)
    if e.kind == "orthosemilattice":
        return e.payload
    if e.kind == "ortholattice":
        return _strong_semilattice(e.payload)
    raise KeyError(f"entry {name!r} is an implication table, not a semilattice")
