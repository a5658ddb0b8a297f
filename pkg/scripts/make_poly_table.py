"""Regenerate the bundled table of default field moduli.

For every (p, n) with p in {2, 3, 5} and n <= 8 the entry is the
lexicographically smallest monic polynomial of degree n whose root is a
primitive element (so ``x`` itself generates the multiplicative group).
Degree-one fields use the modulus ``x``.

    python scripts/make_poly_table.py > src/bentcodes/data/irreducible_polys.txt
"""

from __future__ import annotations

import argparse

from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod


def is_primitive(mod_low_to_high: tuple[int, ...], p: int) -> bool:
    f = list(reversed(mod_low_to_high))
    if not gf_irreducible_p(f, p, ZZ):
        return False
    order = p ** (len(mod_low_to_high) - 1) - 1
    x = [1, 0]
    return all(gf_pow_mod(x, order // r, f, p, ZZ) != [1] for r in factorint(order))


def smallest_primitive(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)
    for k in range(p**n):
        low = [(k // p**i) % p for i in range(n)]
        mod = tuple(low) + (1,)
        if mod[0] and is_primitive(mod, p):
            return mod
    raise AssertionError("no primitive polynomial found")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()
    print("# p,n,c0,...,cn  (monic, lowest coefficient first)")
    for p in args.primes:
        for n in range(1, args.max_degree + 1):
            print(",".join(str(c) for c in (p, n) + smallest_primitive(p, n)))


if __name__ == "__main__":
    main()
