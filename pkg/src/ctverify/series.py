"""Sparse truncated multivariate power series over the integers.

The only series that ever occur here are products of *geometric factors*

    (1 - mu)^(-e) = sum_{k>=0} C(k+e-1, e-1) mu^k,

where mu is a monic monomial and e >= 1, so all coefficients are nonnegative
integers and no floating point is involved anywhere.

Iterated constant terms of kernels such as

    prod_i (1-x_i)^(-a)  prod_i x_i^(-b)  prod_{i<j} (x_j - x_i)^(-m)

reduce to a single coefficient extraction in this setting.  Fixing the
expansion region |x_1| < ... < |x_n| < 1:

  1. each difference factor is a geometric factor up to a monomial,
         (x_j - x_i)^(-m) = x_j^(-m) (1 - x_i/x_j)^(-m),   i < j,
     expanded in nonnegative powers of x_i/x_j;
  2. the pure monomials x_j^(-m) and x_i^(-b) are pulled out of the product
     and absorbed into the exponent being extracted;
  3. the triangular substitution x_i = y_i y_(i+1) ... y_n sends both x_i and
     x_i/x_j (i < j) to monic monomials with nonnegative exponents, so the
     remaining product is an honest power series in y.  A monomial's exponent
     vector transforms by partial sums (see partial_sum_transform), and the
     sought x-coefficient becomes a single y-coefficient.

Because every exponent in y-space is nonnegative, truncating componentwise at
the target exponent never discards a term that could still contribute, which
is what makes the truncated multiplication below exact for this purpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import binomial

__all__ = [
    "ExponentVector",
    "GeometricFactor",
    "CTProblem",
    "TruncatedSeries",
    "partial_sum_transform",
    "geometric_expand",
    "series_mul_truncated",
    "coefficient_of",
    "diophantine_coefficient",
]

#: Exponent vectors are plain tuples of ints, one entry per variable.
ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class GeometricFactor:
    """A factor (1 - mu)^(-multiplicity) with mu the monic monomial y^base."""

    base: ExponentVector
    multiplicity: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        if any(b < 0 for b in self.base):
            raise ValueError(f"factor base must be componentwise >= 0: {self.base}")
        if not any(self.base):
            raise ValueError("factor base must not be the zero monomial")
        if self.multiplicity < 1:
            raise ValueError(f"factor multiplicity must be >= 1, got {self.multiplicity}")


@dataclass(frozen=True)
class CTProblem:
    """Extract the coefficient of y^target in a product of geometric factors.

    A negative target component is allowed and makes the coefficient 0, since
    the product is a power series with nonnegative exponents only.
    """

    num_vars: int
    target: ExponentVector
    factors: tuple[GeometricFactor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.num_vars < 1:
            raise ValueError(f"num_vars must be >= 1, got {self.num_vars}")
        if len(self.target) != self.num_vars:
            raise ValueError(
                f"target has length {len(self.target)}, expected {self.num_vars}"
            )
        for f in self.factors:
            if len(f.base) != self.num_vars:
                raise ValueError(
                    f"factor base {f.base} has length {len(f.base)}, expected {self.num_vars}"
                )


@dataclass
class TruncatedSeries:
    """Sparse series: exponent vector -> nonzero integer coefficient.

    Every stored exponent e satisfies 0 <= e <= cap componentwise.  Instances
    are treated as immutable once returned from the functions below.
    """

    cap: ExponentVector
    terms: dict[ExponentVector, int] = field(default_factory=dict)

    @classmethod
    def one(cls, cap: ExponentVector) -> "TruncatedSeries":
        """The multiplicative identity truncated at cap."""
        zero = (0,) * len(cap)
        return cls(tuple(cap), {zero: 1})


def partial_sum_transform(x_exps: ExponentVector) -> ExponentVector:
    """Exponent law of the substitution x_i = y_i y_(i+1) ... y_n.

    The monomial prod_i x_i^(e_i) becomes prod_t y_t^(e_1 + ... + e_t), so the
    y-exponents are the partial sums of the x-exponents.  The map is a
    bijection on integer vectors; its inverse is taking first differences.
    """
    out = []
    acc = 0
    for e in x_exps:
        acc += e
        out.append(acc)
    return tuple(out)


def geometric_expand(f: GeometricFactor, cap: ExponentVector) -> TruncatedSeries:
    """Expand (1 - y^base)^(-e) as sum_k C(k+e-1, e-1) y^(k*base), k*base <= cap."""
    if any(c < 0 for c in cap):
        raise ValueError(f"cap must be componentwise >= 0: {cap}")
    k_max = min(c // b for c, b in zip(cap, f.base) if b)
    e = f.multiplicity
    terms: dict[ExponentVector, int] = {}
    for k in range(k_max + 1):
        terms[tuple(k * b for b in f.base)] = binomial(k + e - 1, e - 1)
    return TruncatedSeries(tuple(cap), terms)


def series_mul_truncated(
    a: TruncatedSeries, b: TruncatedSeries, cap: ExponentVector
) -> TruncatedSeries:
    """Exact product of two series, dropping every term above cap.

    Dropping is sound here because all exponents are nonnegative: a term
    already above cap in some coordinate can never come back down to
    contribute to a coefficient at or below cap.
    """
    small, big = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    nv = len(cap)
    big_items = list(big.terms.items())
    out: dict[ExponentVector, int] = {}
    for u, cu in small.terms.items():
        # componentwise headroom above u; anything in big beyond it is dropped
        room = tuple(c - e for c, e in zip(cap, u))
        for v, cv in big_items:
            for t in range(nv):
                if v[t] > room[t]:
                    break
            else:
                w = tuple(ue + ve for ue, ve in zip(u, v))
                out[w] = out.get(w, 0) + cu * cv
    return TruncatedSeries(tuple(cap), {e: c for e, c in out.items() if c})


def _multiplication_order(
    factors: tuple[GeometricFactor, ...]
) -> list[GeometricFactor]:
    # Fewest-variable, lowest-degree factors first keeps intermediate supports
    # small; the result does not depend on the order (tested).
    return sorted(
        factors, key=lambda f: (sum(1 for b in f.base if b), sum(f.base))
    )


def coefficient_of(p: CTProblem) -> int:
    """Coefficient of y^target in the product of the problem's factors.

    Returns 0 immediately when some target component is negative.  Otherwise
    folds series_mul_truncated over the factor expansions, truncating at the
    target itself.
    """
    if any(t < 0 for t in p.target):
        return 0
    cap = p.target
    acc = TruncatedSeries.one(cap)
    for f in _multiplication_order(p.factors):
        acc = series_mul_truncated(acc, geometric_expand(f, cap), cap)
    return acc.terms.get(cap, 0)


def diophantine_coefficient(p: CTProblem) -> int:
    """Brute-force oracle for coefficient_of, independent of the series code.

    The coefficient of y^target in prod_f (1 - y^(base_f))^(-e_f) equals

        sum over (k_f >= 0) with sum_f k_f * base_f = target
            of prod_f C(k_f + e_f - 1, e_f - 1),

    which this enumerates directly, one factor at a time.
    """
    if any(t < 0 for t in p.target):
        return 0
    factors = p.factors

    def count(idx: int, remaining: ExponentVector) -> int:
        if idx == len(factors):
            return 1 if not any(remaining) else 0
        f = factors[idx]
        e = f.multiplicity
        k_max = min(r // b for r, b in zip(remaining, f.base) if b)
        total = 0
        for k in range(k_max + 1):
            rem = tuple(r - k * b for r, b in zip(remaining, f.base))
            total += binomial(k + e - 1, e - 1) * count(idx + 1, rem)
        return total

    return count(0, p.target)
