"""The headline identity, watched term by term.

The constant term of the n-variable kernel equals the product of the first n
Catalan numbers.  Both sides are computed independently here: the left by
iterated series extraction, the right by pure combinatorics.  The ratio
column makes the hidden structure visible: each new variable multiplies the
value by exactly the next Catalan number.
"""

from ctverify import catalan, catalan_product, verify_cry


def main():
    print(f"{'n':>2}  {'constant term':>13}  {'catalan product':>15}  {'ratio to n-1':>12}")
    previous = 1
    for n in range(1, 7):
        report = verify_cry(n, crosscheck=(n <= 3))
        flag = "ok" if report.match else "MISMATCH"
        ratio = report.lhs // previous
        print(f"{n:>2}  {report.lhs:>13}  {catalan_product(n):>15}  {ratio:>12}  {flag}")
        assert ratio == catalan(n)
        previous = report.lhs

    print()
    print("each ratio is the next catalan number: 1, 2, 5, 14, 42, 132, ...")


if __name__ == "__main__":
    main()
