#!/usr/bin/env python3
"""Print a property table for every built-in model.

Usage: python3 scripts/catalog_report.py
"""

from orthokit import (
    catalog,
    check_ioa_identities,
    is_modular,
    is_orthomodular,
    is_strong,
    validate_ortholattice,
    validate_orthosemilattice,
)
from orthokit.congruence import congruence_lattice


def yn(flag):
    return "yes" if flag else "no"


def main():
    header = f"{'name':<24}{'kind':<18}{'n':>3}  {'valid':<7}{'modular':<9}{'orthomod':<10}{'strong':<8}{'#cong':>6}"
    print(header)
    print("-" * len(header))
    for e in catalog():
        n = e.payload.n
        if e.kind == "ortholattice":
            L = e.payload
            valid = validate_ortholattice(L).ok
            row = (yn(valid), yn(is_modular(L).ok), yn(is_orthomodular(L).ok), yn(is_strong(L).strong), "")
        elif e.kind == "orthosemilattice":
            valid = validate_orthosemilattice(e.payload).ok
            row = (yn(valid), "-", "-", "-", "")
        else:
            valid = check_ioa_identities(e.payload).ok
            row = (yn(valid), "-", "-", "-", str(len(congruence_lattice(e.payload))))
        print(f"{e.name:<24}{e.kind:<18}{n:>3}  {row[0]:<7}{row[1]:<9}{row[2]:<10}{row[3]:<8}{row[4]:>6}")
        print(f"{'':<24}  {e.note}")


if __name__ == "__main__":
    main()
