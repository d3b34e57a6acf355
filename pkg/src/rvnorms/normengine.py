"""Evaluation routes for the random-vector matrix norms.

Three independent routes compute the d-th power of the norm:

* the partition/cumulant sum (Hermitian inputs): sum over partitions of d
  of kappa_pi * p_pi / y_pi, with the power-sum products taken from trace
  powers rather than eigenvalues;
* truncated-series extraction (Hermitian inputs, distributions with a
  moment generating function): exponentiate sum_j kappa_j tr(A^j) t^j / j!
  and read off the coefficient of t^d;
* the adjoint-placement trace-word sum (arbitrary square inputs): sum over
  partitions of kappa_pi * T_pi(Z) / y_pi, where T_pi averages the
  C(d, d/2) ways of distributing d/2 adjoints over the letter slots.

All routes run in exact rational arithmetic when the matrix entries and
cumulants are rational; the d-th root at the very end is the only
irrational step.  Floating-point inputs are normalized by their largest
entry before evaluation and rescaled by homogeneity, which keeps powers
up to degree ~10 in range.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import comb, factorial, prod

from .cumulants import CumulantVector, DistributionSpec, distribution_cumulants, kappa_product
from .errors import MomentExistenceError, NonHermitianError, PreconditionError
from .matrixcore import Matrix, is_hermitian, trace_powers
from .partitions import Partition, enumerate_partitions, y_of
from .scalars import exact_div, real_part_checked
from .series import TruncatedSeries
from .words import placement_terms, word_json, word_text


def _require_even_degree(d: int) -> None:
    if not isinstance(d, int) or d < 2 or d % 2:
        raise PreconditionError(
            f"analytic paths require an even degree d >= 2, got {d!r} "
            "(the Monte Carlo oracle covers odd d)"
        )


def _normalized(Z: Matrix):
    """Scale guard for the float path: (Z / max|entry|, max|entry|).

    Exact matrices pass through untouched; the caller multiplies the final
    degree-d form by scale**d.
    """
    if Z.is_exact():
        return Z, None
    m = Z.max_abs()
    if m == 0.0:
        return Z, None
    return Z * (1.0 / m), m


def bell_value(ell: int, x):
    """Complete Bell polynomial B_ell(x_1..x_ell) = ell! * sum_pi x_pi / y_pi."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell == 0:
        return 1
    x = list(x)
    if len(x) < ell:
        raise PreconditionError(f"B_{ell} needs {ell} arguments, got {len(x)}")
    total = 0
    for p in enumerate_partitions(ell):
        total = total + exact_div(prod((x[i - 1] for i in p.parts), start=1), y_of(p))
    return factorial(ell) * total


def hermitian_norm_pow(A: Matrix, spec: DistributionSpec, d: int):
    """Norm power via the partition/cumulant sum; Hermitian input only.

    Equals (1/d!) * B_d(kappa_1 tr A, ..., kappa_d tr A^d) and is strictly
    positive for A != 0.
    """
    _require_even_degree(d)
    if not is_hermitian(A):
        raise NonHermitianError("hermitian_norm_pow requires a Hermitian matrix")
    k = distribution_cumulants(spec, d)
    As, scale = _normalized(A)
    tp = [real_part_checked(t) for t in trace_powers(As, d)]
    total = 0
    for p in enumerate_partitions(d):
        kp = kappa_product(p, k)
        if kp == 0:
            continue
        term = kp * prod((tp[i - 1] for i in p.parts), start=1)
        total = total + exact_div(term, y_of(p))
    if scale is not None:
        total = total * scale**d
    return total


def series_norm_pow(A: Matrix, spec: DistributionSpec, d: int):
    """Norm power as [t^d] of exp(sum_j kappa_j tr(A^j) t^j / j!).

    Agrees with :func:`hermitian_norm_pow` exactly on the rational path.
    Rejects distributions without a moment generating function.
    """
    _require_even_degree(d)
    if not spec.has_mgf:
        raise PreconditionError(
            f"{spec.family} admits no moment generating function; "
            "use the partition path"
        )
    if not is_hermitian(A):
        raise NonHermitianError("series_norm_pow requires a Hermitian matrix")
    k = distribution_cumulants(spec, d)
    As, scale = _normalized(A)
    tp = [real_part_checked(t) for t in trace_powers(As, d)]
    coeffs = [0] + [
        exact_div(k.kappas[j - 1] * tp[j - 1], factorial(j)) for j in range(1, d + 1)
    ]
    total = TruncatedSeries(coeffs).exp().coefficient(d)
    if scale is not None:
        total = total * scale**d
    return total


def _word_trace(Z: Matrix, Zadj: Matrix, word: str, cache: dict):
    t = cache.get(word)
    if t is None:
        M = Z if word[0] == "z" else Zadj
        for ch in word[1:]:
            M = M @ (Z if ch == "z" else Zadj)
        t = M.trace()
        cache[word] = t
    return t


def _t_pi_raw(Z: Matrix, Zadj: Matrix, p: Partition, cache: dict):
    total = 0
    for factors, mult in placement_terms(p.parts):
        term = mult
        for w in factors:
            term = term * _word_trace(Z, Zadj, w, cache)
        total = total + term
    return exact_div(total, comb(p.d, p.d // 2))


def t_pi(Z: Matrix, p: Partition):
    """Average of the partitioned trace products over all adjoint placements.

    Enumerates the C(d, d/2) letter strings with d/2 adjoints, splits each
    into segments of the part lengths, multiplies the segment traces, and
    divides by C(d, d/2).  The result is real up to roundoff; the residue
    is checked and discarded.
    """
    if p.d % 2 or p.d < 2:
        raise PreconditionError(f"t_pi needs an even degree >= 2, got {p.d}")
    return real_part_checked(_t_pi_raw(Z, Z.adjoint(), p, {}))


def general_norm_pow(Z: Matrix, spec: DistributionSpec, d: int):
    """Norm power for arbitrary square Z: sum_pi kappa_pi * T_pi(Z) / y_pi.

    Restricts to :func:`hermitian_norm_pow` on Hermitian inputs and is
    strictly positive for Z != 0.
    """
    _require_even_degree(d)
    k = distribution_cumulants(spec, d)
    Zs, scale = _normalized(Z)
    Zadj = Zs.adjoint()
    cache: dict = {}
    total = 0
    for p in enumerate_partitions(d):
        kp = kappa_product(p, k)
        if kp == 0:
            continue
        total = total + exact_div(kp * _t_pi_raw(Zs, Zadj, p, cache), y_of(p))
    total = real_part_checked(total)
    if scale is not None:
        total = total * scale**d
    return total


def norm(Z: Matrix, spec: DistributionSpec, d: int) -> float:
    """The norm itself: general_norm_pow(Z, spec, d) ** (1/d)."""
    val = float(general_norm_pow(Z, spec, d))
    if val < 0.0:
        raise ArithmeticError(f"norm power came out negative ({val!r})")
    return val ** (1.0 / d)


# -- symbolic output ---------------------------------------------------------


class TracePolynomial:
    """A rational-coefficient combination of products of canonical trace words.

    ``terms`` maps a sorted tuple of canonical words (the factor multiset of
    one product of traces) to its coefficient.  In Hermitian mode a factor
    word of k letters stands for tr(A^k); in general mode the letters 'z'
    and 's' stand for Z and Z*.  Zero coefficients are never stored.
    """

    __slots__ = ("degree", "hermitian", "terms")

    def __init__(self, degree: int, hermitian: bool, terms: dict):
        self.degree = degree
        self.hermitian = hermitian
        self.terms = {k: v for k, v in terms.items() if not (v == 0)}

    def coefficient(self, factors):
        return self.terms.get(tuple(sorted(factors)), 0)

    def ordered_terms(self) -> list:
        """Terms grouped by partition in reverse-lexicographic order, then by
        factor tuple; the partition of a term is the multiset of factor lengths."""
        by_partition: dict[tuple[int, ...], list] = {}
        for key, coeff in self.terms.items():
            parts = tuple(sorted((len(w) for w in key), reverse=True))
            by_partition.setdefault(parts, []).append((key, coeff))
        out = []
        for p in enumerate_partitions(self.degree):
            for key, coeff in sorted(by_partition.get(p.parts, [])):
                out.append((key, coeff))
        return out

    def _factor_text(self, word: str) -> str:
        if self.hermitian:
            k = len(word)
            return "tr(A)" if k == 1 else f"tr(A^{k})"
        return f"tr({word_text(word)})"

    def term_text(self, key, coeff) -> str:
        factors = []
        run = None
        count = 0
        for w in list(key) + [None]:
            if w == run:
                count += 1
                continue
            if run is not None:
                factors.append(
                    self._factor_text(run) + (f"^{count}" if count > 1 else "")
                )
            run, count = w, 1
        return f"{coeff} {' '.join(factors)}"

    def text(self) -> str:
        lines = [self.term_text(k, c) for k, c in self.ordered_terms()]
        return "\n".join(lines) if lines else "0"

    def to_json(self) -> dict:
        terms = []
        for key, coeff in self.ordered_terms():
            frac = Fraction(coeff) if isinstance(coeff, int) else coeff
            if not isinstance(frac, Fraction):
                raise PreconditionError("JSON form requires exact rational coefficients")
            factors = [
                f"A^{len(w)}" if self.hermitian else word_json(w) for w in key
            ]
            terms.append(
                {"coeff": [frac.numerator, frac.denominator], "factors": factors}
            )
        return {
            "degree": self.degree,
            "mode": "hermitian" if self.hermitian else "general",
            "terms": terms,
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.hermitian == other.hermitian
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"TracePolynomial(degree={self.degree}, hermitian={self.hermitian}, terms={self.terms!r})"


def symbolic_formula(kappas, d: int, hermitian_mode: bool = False) -> TracePolynomial:
    """The norm power as a trace polynomial with explicit coefficients.

    In general mode each partition contributes its aggregated adjoint
    placements with coefficient kappa_pi * multiplicity / (y_pi * C(d, d/2));
    in Hermitian mode the term for a partition is kappa_pi / y_pi times the
    product of tr(A^part).  Cumulants may be Fractions (exact output) or any
    ring elements supporting * and /.
    """
    _require_even_degree(d)
    ks = kappas.kappas if isinstance(kappas, CumulantVector) else tuple(kappas)
    if len(ks) < d:
        raise PreconditionError(f"need cumulants up to degree {d}, got {len(ks)}")
    terms: dict = {}
    if hermitian_mode:
        for p in enumerate_partitions(d):
            kp = prod((ks[i - 1] for i in p.parts), start=1)
            if kp == 0:
                continue
            key = tuple(sorted("z" * part for part in p.parts))
            terms[key] = terms.get(key, 0) + exact_div(kp, y_of(p))
    else:
        denom = comb(d, d // 2)
        for p in enumerate_partitions(d):
            kp = prod((ks[i - 1] for i in p.parts), start=1)
            if kp == 0:
                continue
            base = exact_div(kp, y_of(p) * denom)
            for factors, mult in placement_terms(p.parts):
                terms[factors] = terms.get(factors, 0) + mult * base
    return TracePolynomial(d, hermitian_mode, terms)


# -- cross-checks ------------------------------------------------------------


def circle_extension_check(
    Z: Matrix, spec: DistributionSpec, d: int, quadrature_points: int | None = None
) -> tuple[float, float]:
    """Compare the circle-average extension against the trace-word value.

    The average of the Hermitian norm power of e^{it} Z + e^{-it} Z* over
    the circle, divided by C(d, d/2), must equal the trace-word norm power.
    The integrand is a trigonometric polynomial of degree at most d, so the
    trapezoid rule on more than d equally spaced points is exact up to
    roundoff.  Returns (quadrature value, algebraic value).
    """
    _require_even_degree(d)
    q = quadrature_points if quadrature_points is not None else 2 * d + 2
    if q < d + 1:
        raise PreconditionError(f"need at least d+1={d + 1} quadrature points, got {q}")
    Zadj = Z.adjoint()
    total = 0.0
    for j in range(q):
        e = cmath.exp(2j * math.pi * j / q)
        M = Z * e + Zadj * e.conjugate()
        total += float(hermitian_norm_pow(M, spec, d))
    quad = total / q / comb(d, d // 2)
    alg = float(general_norm_pow(Z, spec, d))
    return quad, alg


def normal_norm_pow_closed(A: Matrix, mu, sigma, d: int):
    """Closed form of the norm power for normal(mu, sigma) entries:

        sum_{k=0}^{d/2} mu^{2k} (tr A)^{2k} / (2k)!
                        * sigma^{d-2k} (tr A^2)^{d/2-k} / (2^{d/2-k} (d/2-k)!)

    using tr(A^2) = ||A||_F^2 on Hermitian input.  Independent cross-check
    for the normal family; not the default evaluation path.
    """
    _require_even_degree(d)
    if not is_hermitian(A):
        raise NonHermitianError("closed normal form requires a Hermitian matrix")
    tp = trace_powers(A, 2)
    tr1 = real_part_checked(tp[0])
    tr2 = real_part_checked(tp[1])
    half = d // 2
    total = 0
    for k in range(half + 1):
        num = mu ** (2 * k) * tr1 ** (2 * k) * sigma ** (d - 2 * k) * tr2 ** (half - k)
        total = total + exact_div(num, factorial(2 * k) * 2 ** (half - k) * factorial(half - k))
    return total


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def pareto_norm_pow_multinomial(lambdas, alpha, d: int):
    """Norm power for Pareto(alpha) entries on diag(lambdas) by the raw
    multinomial expansion of E<X, lambda>^d / d!, using mu_k = alpha/(alpha-k).

    Exists only for d < alpha.  This is the route used for the alpha limits;
    it avoids the cumulant recursion entirely.
    """
    _require_even_degree(d)
    if not d < alpha:
        raise MomentExistenceError(
            f"pareto(alpha={alpha}) has moments only below alpha; degree {d} requested"
        )
    lambdas = list(lambdas)
    exact = isinstance(alpha, (int, Fraction))
    mu = [1] + [
        (Fraction(alpha) / (alpha - k)) if exact else alpha / (alpha - k)
        for k in range(1, d + 1)
    ]
    total = 0
    for ks in _compositions(d, len(lambdas)):
        weight = factorial(d)
        for k in ks:
            weight //= factorial(k)
        term = weight
        for lam, k in zip(lambdas, ks):
            if k:
                term = term * lam**k * mu[k]
        total = total + term
    return exact_div(total, factorial(d))
