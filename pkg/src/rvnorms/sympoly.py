"""Symmetric-polynomial calculus: complete homogeneous sums, power sums,
monomial symmetric polynomials, and the positive-definite combinations
H_{d,alpha} of CHS products.

Everything here is plain evaluation at a point; exact inputs give exact
outputs.  ``chs`` uses the prefix dynamic program (n*d work); the raw
monomial sum is kept as a brute-force oracle for tests.
"""

from __future__ import annotations

import itertools
from math import factorial, prod

from .errors import PreconditionError
from .partitions import Partition, enumerate_partitions, hunter_coefficient, z_of
from .scalars import exact_div


def chs(d: int, x) -> object:
    """Complete homogeneous symmetric polynomial h_d(x), all degree-d monomials.

    Dynamic program over prefixes: after absorbing x_i,
    h_new[j] = h_old[j] + x_i * h_new[j-1].
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    x = list(x)
    h = [1] + [0] * d
    for xi in x:
        for j in range(1, d + 1):
            h[j] = h[j] + xi * h[j - 1]
    return h[d]


def chs_prefix(d: int, x) -> list:
    """h_0(x)..h_d(x) in one pass (same dynamic program as :func:`chs`)."""
    x = list(x)
    h = [1] + [0] * d
    for xi in x:
        for j in range(1, d + 1):
            h[j] = h[j] + xi * h[j - 1]
    return h


def chs_monomial_sum(d: int, x) -> object:
    """Brute-force h_d via combinations with repetition; test oracle only."""
    x = list(x)
    total = 0
    for combo in itertools.combinations_with_replacement(range(len(x)), d):
        total = total + prod((x[i] for i in combo), start=1)
    return total


def power_sum_product(p: Partition, x) -> object:
    """p_pi(x) = product over parts of sum_i x_i^part."""
    x = list(x)
    return prod((sum(xi**part for xi in x) for part in p.parts), start=1)


def monomial_sym(p: Partition, x) -> object:
    """Monomial symmetric polynomial m_pi(x): one term per distinct way of
    assigning the parts as exponents to distinct variables.

    Zero when the partition has more parts than there are variables.
    """
    x = list(x)
    n = len(x)
    if p.num_parts > n:
        return 0
    values = sorted(p.multiplicities.items())  # (part value, multiplicity)
    total = 0

    def assign(vi: int, free: tuple[int, ...], acc) -> None:
        nonlocal total
        if vi == len(values):
            total = total + acc
            return
        value, mult = values[vi]
        for chosen in itertools.combinations(free, mult):
            rest = tuple(i for i in free if i not in chosen)
            term = acc
            for i in chosen:
                term = term * x[i] ** value
            assign(vi + 1, rest, term)

    assign(0, tuple(range(n)), 1)
    return total


def chs_powersum_identity_check(d: int, x) -> tuple:
    """Return (h_d(x), sum over partitions of p_pi(x)/z_pi); they agree."""
    if d % 2:
        raise PreconditionError("identity check is stated for even d")
    x = list(x)
    total = 0
    for p in enumerate_partitions(d):
        total = total + exact_div(power_sum_product(p, x), z_of(p))
    return chs(d, x), total


def hunter_terms(d: int, alpha: int) -> list[tuple[Partition, int]]:
    """The (partition, coefficient) expansion of H_{d,alpha}, coefficients
    alpha!/((alpha-r)! prod m_i!), partitions with more than alpha parts dropped."""
    out = []
    for p in enumerate_partitions(d):
        c = hunter_coefficient(p, alpha)
        if c:
            out.append((p, c))
    return out


def hunter_poly(d: int, alpha: int, x) -> object:
    """H_{d,alpha}(x) = sum over partitions of d with at most alpha parts of
    the coefficient times the product of CHS factors h_{part}(x).

    Strictly positive for even d and x != 0; alpha = 1 reduces to h_d(x).
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    x = list(x)
    h = chs_prefix(d, x)
    total = 0
    for p, c in hunter_terms(d, alpha):
        total = total + c * prod((h[part] for part in p.parts), start=1)
    return total


def hunter_poly_recursive(d: int, alpha: int, x) -> object:
    """H_{d,alpha} by the recursion H_{d,a} = sum_i h_i * H_{d-i,a-1},
    base case H_{l,1} = h_l; agrees exactly with :func:`hunter_poly`."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    x = list(x)
    h = chs_prefix(d, x)
    level = h[:]  # alpha = 1
    for _ in range(alpha - 1):
        level = [
            sum(h[i] * level[ell - i] for i in range(ell + 1)) for ell in range(d + 1)
        ]
    return level[d]


def bernoulli_norm_hermitian(lambdas, q, d: int) -> object:
    """Degree-d norm power for Bernoulli(q) entries on a diagonal matrix,
    via monomial symmetric polynomials:

        sum over partitions pi of d of  q^{|pi|} / prod_j (pi_j!) * m_pi(lambda).

    The coefficient comes from grouping the multinomial expansion of
    E<X, lambda>^d by exponent pattern: each pattern pi carries
    d!/prod(pi_j!) monomial weight and a factor q per occupied slot, and
    the overall 1/d! cancels the d!.  (Collapsing the coefficient to
    |pi|!/d! instead would undercount patterns with repeated parts, e.g.
    (2,2) at d=4 gives 1/4, not 1/12.)
    """
    if d % 2 or d < 2:
        raise PreconditionError("even d >= 2 required")
    if not 0 < q < 1:
        raise PreconditionError(f"q must lie in (0, 1), got {q!r}")
    lambdas = list(lambdas)
    total = 0
    for p in enumerate_partitions(d):
        m = monomial_sym(p, lambdas)
        if m == 0:
            continue
        coeff = exact_div(q ** p.num_parts, prod(factorial(part) for part in p.parts))
        total = total + coeff * m
    return total
