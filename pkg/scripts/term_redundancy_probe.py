#!/usr/bin/env python3
"""Empirical probe: is any of the six closure terms redundant on the built-in models?

For each small reduct, scan every subset containing 1 and compare two
classifications: closure under all six terms versus closure under five of
them with one dropped.  A dropped term is redundant *on that model* when the
two classifications coincide for every subset.  This is a finite experiment,
not a proof; a term redundant on every model here could still be needed on
some other algebra.

Usage: python3 scripts/term_redundancy_probe.py [max_n]
"""

import sys
from itertools import combinations

from orthokit import catalog
from orthokit.terms import builtin_terms, closed_under_term


def subsets_with_one(n, one):
    rest = [x for x in range(n) if x != one]
    for r in range(len(rest) + 1):
        for picked in combinations(rest, r):
            yield frozenset(picked) | {one}


def classify(T, terms, D):
    return all(closed_under_term(T, D, t).ok for t in terms)


def main(max_n=8):
    names = list(builtin_terms())
    terms = builtin_terms()
    reducts = [e for e in catalog() if e.kind == "implication" and e.payload.n <= max_n]
    print(f"models: {', '.join(e.name for e in reducts)}")
    redundant_everywhere = set(names)
    for dropped in names:
        kept = [terms[k] for k in names if k != dropped]
        disagreements = []
        for e in reducts:
            T = e.payload
            full = {D for D in subsets_with_one(T.n, T.one) if classify(T, terms.values(), D)}
            part = {D for D in subsets_with_one(T.n, T.one) if classify(T, kept, D)}
            if full != part:
                extra = min((sorted(D) for D in part - full), default=None)
                disagreements.append((e.name, len(part) - len(full), extra))
        if disagreements:
            redundant_everywhere.discard(dropped)
            for model, count, example in disagreements:
                print(f"dropping {dropped}: {model} accepts {count} extra subsets, e.g. {example}")
        else:
            print(f"dropping {dropped}: no difference on any model")
    if redundant_everywhere:
        print(f"candidates for redundancy on these models: {sorted(redundant_everywhere)}")
    else:
        print("every term is doing work on at least one model")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
