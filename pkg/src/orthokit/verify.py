"""Whole-catalog verification: every structural claim as a flat check list.

This backs the `verify-theorems` CLI command.  Known counterexample models
(the hexagon) have their failures encoded as expected outcomes, so a fully
healthy catalog yields an all-pass report.
"""

from __future__ import annotations

from itertools import combinations

from . import catalog_io as cat
from . import congruence as cong
from . import terms as tms
from .core import (
    check_overlap_consistency,
    is_modular,
    is_orthomodular,
    is_strong,
    IntervalWitness,
    validate_interval_witness,
    validate_ortholattice,
    validate_orthosemilattice,
)
from .errors import AlgebraError
from .implication import check_ioa_identities, derive_bullet, reconstruct_orthosemilattice
from .report import Check

SWEEP_LIMIT = 8  # all 2^(n-1) subsets are scanned below this carrier size
RANDOM_TERM_COUNT = 20


def _idx(L, label: str) -> int:
    return L.names.index(label)


def _comp_witness(L, p: int) -> IntervalWitness:
    cmap = tuple(L.join[L.comp[a]][p] if L.le(p, a) else None for a in range(L.n))
    return IntervalWitness(p=p, cmap=cmap)


def _ortholattice_checks(name: str, L) -> list[Check]:
    checks = [Check(f"{name}: ortholattice-axioms", validate_ortholattice(L).ok)]
    strong = is_strong(L)

    if name == "fig1_o6":
        a, b, one = _idx(L, "a"), _idx(L, "b"), L.top
        degenerate = L.join[L.comp[a]][b] == one and L.join[L.comp[b]][a] == one
        checks.append(Check(f"{name}: comp(a) v b = 1 = comp(b) v a", degenerate))
        checks.append(Check(
            f"{name}: not strong, first failing interval is [a, 1]",
            not strong and strong.failing_p == a,
            f"strong={strong.strong} failing_p={strong.failing_p}",
        ))
        return checks

    if name == "fig2_strong12":
        mod = is_modular(L)
        omod = is_orthomodular(L)
        pent = [_idx(L, x) for x in ("0", "e", "d", "b'", "1")]
        closed = all(
            L.join[x][y] in pent and L.meet[x][y] in pent
            for x in pent for y in pent
        )
        zero, e, d, bp, one = pent
        pentagon = (
            L.le(d, bp)
            and not L.le(e, d) and not L.le(d, e)
            and not L.le(e, bp) and not L.le(bp, e)
            and L.join[e][d] == one and L.meet[e][bp] == zero
        )
        checks.append(Check(f"{name}: not modular", not mod.ok, f"witness={mod.witness}"))
        checks.append(Check(f"{name}: 0,e,d,b',1 is a pentagon sublattice", closed and pentagon))
        a, cp_ = _idx(L, "a"), _idx(L, "c'")
        om_at = L.le(a, cp_) and L.join[a][L.meet[L.comp[a]][cp_]] == a and a != cp_
        checks.append(Check(f"{name}: not orthomodular at (a, c')", not omod.ok and om_at))
        checks.append(Check(f"{name}: strong", bool(strong)))
        return checks

    checks.append(Check(f"{name}: strong", bool(strong)))
    if name == "mo2":
        checks.append(Check(f"{name}: orthomodular", is_orthomodular(L).ok))
        checks.append(Check(f"{name}: modular", is_modular(L).ok))
    if name in ("mo2", "bool4", "bool8"):
        ok = all(validate_interval_witness(L, _comp_witness(L, p)).ok for p in range(L.n))
        checks.append(Check(f"{name}: comp(a) v p complements every interval", ok))
    return checks


def _boolean_reduct_check(name: str, L, T) -> Check:
    ok = all(
        T.bullet[x][y] == L.join[L.comp[x]][y]
        for x in range(L.n) for y in range(L.n)
    )
    return Check(f"{name}: reduct is comp(x) v y", ok)


def _semilattice_checks(name: str, S) -> list[Check]:
    checks = [
        Check(f"{name}: orthosemilattice-axioms", validate_orthosemilattice(S).ok),
        Check(f"{name}: overlapping interval meets agree", check_overlap_consistency(S).ok),
    ]
    T = derive_bullet(S)
    rep = check_ioa_identities(T)
    checks.append(Check(f"{name}: reduct satisfies the defining identities", rep.ok,
                        "" if rep.ok else ", ".join(c.name for c in rep.failures())))
    if rep.ok:
        checks.append(Check(f"{name}: reconstruct(derive(S)) = S", reconstruct_orthosemilattice(T) == S))
    return checks


def _reduct_checks(name: str, T, seed: int) -> list[Check]:
    checks = []
    rep = check_ioa_identities(T)
    checks.append(Check(f"{name}: defining identities", rep.ok))
    if not rep.ok:
        return checks

    n, B, one = T.n, T.bullet, T.one
    step_ok = all(
        B[B[B[B[x][y]][y]][z]][B[x][z]] == one
        for x in range(n) for y in range(n) for z in range(n)
    )
    checks.append(Check(f"{name}: ((x v y)*z)*(x*z) = 1", step_ok))

    checks.append(Check(f"{name}: derive(reconstruct(T)) = T",
                        derive_bullet(reconstruct_orthosemilattice(T)) == T))

    lattice = cong.congruence_lattice(T)
    kernels = {cong.kernel(T, P).members for P in lattice}
    if n <= cong.BRUTE_FORCE_LIMIT:
        brute = cong.all_congruences_bruteforce(T)
        checks.append(Check(f"{name}: closure and brute-force congruences agree",
                            set(brute) == set(lattice)))
        checks.append(Check(f"{name}: kernel map injective", cong.verify_kernel_injectivity(T).ok))
    else:
        ok = all(cong.is_congruence(T, P) for P in lattice)
        checks.append(Check(f"{name}: every closure congruence is compatible", ok))

    builtins = tms.builtin_terms()
    ok = all(tms.is_ideal_term(T, t) for t in builtins.values())
    checks.append(Check(f"{name}: t1..t6 are ideal terms", ok))

    ok = all(tms.is_ideal_by_terms(T, K) for K in kernels)
    checks.append(Check(f"{name}: every kernel closed under t1..t6", ok))

    rand = tms.random_ideal_terms(T, RANDOM_TERM_COUNT, seed=seed)
    ok = all(bool(tms.closed_under_term(T, K, t)) for K in kernels for t in rand)
    checks.append(Check(f"{name}: every kernel closed under {RANDOM_TERM_COUNT} random ideal terms", ok))

    if n <= SWEEP_LIMIT:
        checks.extend(_subset_sweep_checks(name, T, kernels))
    return checks


def _subset_sweep_checks(name: str, T, kernels: set[frozenset[int]]) -> list[Check]:
    """Scan every subset containing 1 and compare all three ideal criteria."""
    rest = [x for x in range(T.n) if x != T.one]
    rules_ok = closure_ok = chain_ok = True
    rules_fail = closure_fail = None
    for r in range(len(rest) + 1):
        for picked in combinations(rest, r):
            D = frozenset(picked) | {T.one}
            rules = bool(cong.check_d1(T, D)) and bool(cong.check_d2(T, D))
            is_kernel = D in kernels
            try:
                P = cong.theta_from_kernel(T, D)
                theta = cong.kernel(T, P).members == D and cong.is_congruence(T, P).ok
            except AlgebraError:
                theta = False
            if not (rules == is_kernel == theta):
                rules_ok = False
                rules_fail = rules_fail or sorted(D)
            if bool(tms.is_ideal_by_terms(T, D)) != is_kernel:
                closure_ok = False
                closure_fail = closure_fail or sorted(D)
            if not tms.check_lemma_chain(T, D).ok:
                chain_ok = False
    checks = [
        Check(f"{name}: D1+D2 = kernel = rebuilt congruence, all subsets", rules_ok,
              "" if rules_ok else f"first mismatch at D={rules_fail}"),
        Check(f"{name}: closed under t1..t6 = kernel, all subsets", closure_ok,
              "" if closure_ok else f"first mismatch at D={closure_fail}"),
        Check(f"{name}: closure implications for D1/D2 never violated", chain_ok),
    ]
    return checks


def entry_checks(entry: cat.CatalogEntry, seed: int = 0) -> list[Check]:
    if entry.kind == "ortholattice":
        checks = _ortholattice_checks(entry.name, entry.payload)
        if is_strong(entry.payload):
            S = cat.semilattice(entry.name)
            checks.extend(_semilattice_checks(entry.name, S))
            if entry.name in ("bool4", "bool8"):
                checks.append(_boolean_reduct_check(entry.name, entry.payload, derive_bullet(S)))
        return checks
    if entry.kind == "orthosemilattice":
        return _semilattice_checks(entry.name, entry.payload)
    return _reduct_checks(entry.name, entry.payload, seed)


def all_checks(seed: int = 0) -> list[Check]:
    out: list[Check] = []
    for entry in cat.catalog():
        out.extend(entry_checks(entry, seed=seed))
    return out
