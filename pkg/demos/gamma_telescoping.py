"""Half-integer gamma arithmetic, telescoping ratios, and the duplication law.

Gamma values at half-integers are rationals times a half-power of pi, so the
whole calculation stays exact.  Two things are on display: consecutive values
of the product formula telescope down to single Catalan numbers, and the
classical duplication formula holds verbatim for every half-integer tried.
"""

from ctverify import (
    HalfInteger,
    MorrisParams,
    catalan,
    gamma_half,
    legendre_duplication_sides,
    morris_ratio,
)


def main():
    print("gamma at half-integers:")
    for twice in range(1, 10):
        z = HalfInteger(twice)
        print(f"  gamma({str(z):>3}) = {gamma_half(z)}")

    print()
    print("consecutive formula ratios at (a=2, b=0, m=1) vs catalan numbers:")
    params = MorrisParams(2, 0, 1)
    for n in range(1, 11):
        r = morris_ratio(n, params)
        assert r == catalan(n)
        print(f"  n={n:>2}: ratio = {r}")

    print()
    print("duplication formula, both sides computed separately:")
    for twice in range(1, 9):
        z = HalfInteger(twice)
        lhs, rhs = legendre_duplication_sides(z)
        state = "ok" if lhs == rhs else "MISMATCH"
        print(f"  z={str(z):>3}: {str(lhs):>14} = {str(rhs):<14} {state}")


if __name__ == "__main__":
    main()
