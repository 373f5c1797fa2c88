"""Sweep the three-parameter kernel and compare against the product formula.

Every cell of a small (a, b, m) box is evaluated two ways: the series kernel
extracts the constant term coefficient by coefficient, and the gamma-product
formula evaluates a closed form on half-integers.  The two computations share
no code path, so agreement across the box is strong evidence for both.
"""

from ctverify import MorrisParams, morris_rhs, verify_morris


def main():
    print(f"{'n':>2} {'a':>2} {'b':>2} {'m':>2}  {'series kernel':>13}  {'gamma product':>13}")
    worst = None
    for n in (1, 2, 3):
        for a in (1, 2, 3):
            for b in (0, 1, 2):
                for m in (1, 2):
                    params = MorrisParams(a, b, m)
                    report = verify_morris(n, params)
                    mark = "" if report.match else "  <-- MISMATCH"
                    if not report.match:
                        worst = (n, a, b, m)
                    print(
                        f"{n:>2} {a:>2} {b:>2} {m:>2}  {report.lhs:>13}  {str(report.rhs):>13}{mark}"
                    )

    print()
    if worst is None:
        print("all 54 cells agree exactly")
    else:
        print(f"disagreement at {worst}")

    # the closed form keeps working far past what the kernel can reach quickly
    big = morris_rhs(8, MorrisParams(2, 0, 1))
    print(f"product formula at n=8 (a=2, b=0, m=1): {big}")


if __name__ == "__main__":
    main()
