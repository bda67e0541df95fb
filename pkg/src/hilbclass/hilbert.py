"""Multiplicative classes of the tangent and tautological sheaves on the
Hilbert schemes of points on the affine plane, and the cup product of their
cohomology rings.

A multiplicative class is determined by a power series f with f(0) = 1 and a
target (tangent sheaf or tautological sheaf of the structure sheaf).  The
exponent series g of the class in the creation-operator basis comes from a
Lagrange inversion:

* tangent:       dg/dt ( x / (f(x) f(-x)) ) = f(x) f(-x)
* tautological:  dg/dt ( x / f(-x) )        = f(-x)

Both series are cross-checked against brute-force partition sums over torus
fixed points, where the tangent Chern roots specialize to the +-hook lengths
of a cell and the tautological Chern roots to the cell contents.

The cup product on the weight-n piece is computed by squaring a universal
class with nilpotent parameter coefficients and extracting multilinear
coefficients; an independent oracle multiplies conjugacy-class sums in the
center of the symmetric group algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from itertools import permutations
from math import factorial

from .exact import QQ, ParamContext, ParamRing
from .fock import FockElement, exp_linear
from .partitions import (
    check_partition,
    chi_mn,
    contents,
    enumerate_partitions,
    hook_product,
    hooks,
    multiplicities,
    weight,
    z_of,
)
from .series import TruncatedSeries, lagrange_g

TANGENT = "tangent"
TAUTOLOGICAL = "tautological"


@dataclass(frozen=True)
class ClassSpec:
    """A multiplicative class: defining series f (constant term 1) plus the
    sheaf it is evaluated on."""

    f: TruncatedSeries
    target: str

    def __post_init__(self):
        if self.target not in (TANGENT, TAUTOLOGICAL):
            raise ValueError(f"unknown target {self.target!r}")
        _require_unit_one(self.f)


def _require_unit_one(f: TruncatedSeries):
    if f.coeffs[0] != f.ring.one:
        raise ValueError("the defining series must have constant term 1")


# -- built-in defining series --------------------------------------------


def chern_f(order: int) -> TruncatedSeries:
    """f = 1 + x (total Chern class)."""
    return TruncatedSeries.from_coeffs([1, 1][: order + 1], order)


def segre_f(order: int) -> TruncatedSeries:
    """f = (1 + x)^-1 (total Segre class)."""
    return chern_f(order).inverse()


def sqrt_todd_f(order: int) -> TruncatedSeries:
    """f = sqrt(x / (1 - exp(-x))) (square root of the Todd class)."""
    minus_x = TruncatedSeries.from_coeffs([0, -1], order + 1)
    body = TruncatedSeries.one(order + 1) - minus_x.exp()  # x - x^2/2 + ...
    shifted = TruncatedSeries(QQ, order, body.coeffs[1:])  # (1-exp(-x))/x
    return shifted.inverse().sqrt_unit()


def cprime_pow_f(r, order: int) -> TruncatedSeries:
    """f = (1 + x)^r for rational r, via exp(r * log(1 + x))."""
    r = Fraction(r)
    return chern_f(order).log().scale(r).exp()


def builtin_f(name: str, order: int, r=None) -> TruncatedSeries:
    if name == "chern":
        return chern_f(order)
    if name == "segre":
        return segre_f(order)
    if name == "sqrt-todd":
        return sqrt_todd_f(order)
    if name == "cprime-pow":
        if r is None:
            raise ValueError("cprime-pow needs the exponent r")
        return cprime_pow_f(r, order)
    raise ValueError(f"unknown class name {name!r}")


# -- exponent series of the two theorems ---------------------------------


def tangent_g(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Exponent series for a multiplicative class of the tangent sheaf."""
    _require_unit_one(f)
    return lagrange_g(f * f.negate_arg(), order)


def taut_g(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Exponent series for a multiplicative class of the tautological sheaf."""
    _require_unit_one(f)
    return lagrange_g(f.negate_arg(), order)


def hilbert_class(spec: ClassSpec, bound: int) -> FockElement:
    """The total class, all weights up to `bound` at once:
    exp(sum_k g_k q_k) applied to the vacuum."""
    if spec.f.order < max(bound - 1, 0):
        raise ValueError("defining series truncated below the weight bound")
    g = tangent_g(spec.f, bound) if spec.target == TANGENT else taut_g(spec.f, bound)
    return exp_linear(g, bound)


# -- brute-force fixed-point oracles -------------------------------------


def _fixed_point_sum(f: TruncatedSeries, n: int, root_factors) -> Fraction:
    if n < 1:
        raise ValueError("the oracle needs n >= 1")
    _require_unit_one(f)
    if f.order < n - 1:
        raise ValueError("series truncated too low for this n")
    ft = f.truncate(n - 1)
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        chi = chi_mn(lam, (n,))
        prod = TruncatedSeries.one(n - 1)
        for factor in root_factors(ft, lam):
            prod = prod * factor
        total += Fraction(chi, hook_product(lam) * n) * prod.coeffs[n - 1]
    return total


def oracle_top_tangent(f: TruncatedSeries, n: int) -> Fraction:
    """The q_(n)-coefficient of the top-degree class on the weight-n piece,
    by literal summation over all partitions of n (tangent Chern roots:
    +-hook length per cell).  Must equal coefficient n of tangent_g(f)."""

    def factors(ft, lam):
        for h in hooks(lam):
            yield ft.scale_arg(h) * ft.scale_arg(-h)

    return _fixed_point_sum(f, n, factors)


def oracle_top_taut(f: TruncatedSeries, n: int) -> Fraction:
    """Same partition sum for the tautological sheaf, whose Chern roots
    specialize to the cell contents row - column.  Must equal coefficient n
    of taut_g(f)."""

    def factors(ft, lam):
        for c in contents(lam):
            yield ft.scale_arg(c)

    return _fixed_point_sum(f, n, factors)


# -- the two appendix identities -----------------------------------------


def lemma_b1(m: int, p: int) -> Fraction:
    """sum_{s=0}^m (-1)^s s^p / (s! (m-s)!); vanishes for p < m and equals
    (-1)^m at p = m."""
    if not 0 <= p <= m:
        raise ValueError("need 0 <= p <= m")
    total = Fraction(0)
    for s in range(m + 1):
        total += Fraction((-1) ** s * s**p, factorial(s) * factorial(m - s))
    return total


def p_n_series(f: TruncatedSeries, n: int, order: int) -> TruncatedSeries:
    """P_n = sum_{s=0}^n (-1)^s/(s!(n-s)!) prod_{k=-(n-s)}^{s} f(k x).

    Its coefficients below x^n vanish and the x^n coefficient equals
    (-1)^n [x^n] f^(n+1).
    """
    if order < n:
        raise ValueError("order must be at least n")
    _require_unit_one(f)
    if f.order < order:
        raise ValueError("series truncated below the requested order")
    ft = f.truncate(order)
    total = TruncatedSeries.zero(order)
    for s in range(n + 1):
        prod = TruncatedSeries.one(order)
        for k in range(-(n - s), s + 1):
            prod = prod * ft.scale_arg(k)
        total = total + prod.scale(Fraction((-1) ** s, factorial(s) * factorial(n - s)))
    return total


# -- cup product via nilpotent parameters --------------------------------


def _f_minus_from_g(g: TruncatedSeries) -> TruncatedSeries:
    """Given g, recover F = f(-x) from dg/dt (x/F) = F: the compositional
    inverse of t dg/dt is x/F.  Result has order one less than g."""
    phi = g.x_derivative().revert()
    shifted = TruncatedSeries(g.ring, g.order - 1, phi.coeffs[1:])
    return shifted.inverse()


def _parametric_g(ring: ParamRing, prefix: str, mults: dict[int, int], order: int):
    """g = t + sum over part sizes k of rho_k t^k, over the parameter ring."""
    coeffs = [ring.zero] * (order + 1)
    coeffs[1] = ring.one
    for k in mults:
        coeffs[k] = coeffs[k] + ring.parameter(f"{prefix}{k}")
    return TruncatedSeries(ring, order, coeffs)


@lru_cache(maxsize=None)
def _cup_basis_cached(nu: tuple[int, ...], nu2: tuple[int, ...]) -> FockElement:
    n = weight(nu)
    m1, m2 = multiplicities(nu), multiplicities(nu2)
    names = tuple(f"a{k}" for k in sorted(m1)) + tuple(f"b{k}" for k in sorted(m2))
    bounds = tuple(m1[k] for k in sorted(m1)) + tuple(m2[k] for k in sorted(m2))
    ring = ParamRing(ParamContext(names, bounds))

    F1 = _f_minus_from_g(_parametric_g(ring, "a", m1, n))
    F2 = _f_minus_from_g(_parametric_g(ring, "b", m2, n))
    h = lagrange_g(F1 * F2, n)
    expansion = exp_linear(h, n)

    target = tuple(m1[k] for k in sorted(m1)) + tuple(m2[k] for k in sorted(m2))
    scale = 1
    for m in m1.values():
        scale *= factorial(m)
    for m in m2.values():
        scale *= factorial(m)

    out = {}
    for parts, coeff in expansion.terms.items():
        c = coeff.coefficient(target) * scale
        if c == 0:
            continue
        if weight(parts) < n:
            raise AssertionError(
                f"cup extraction produced a weight-{weight(parts)} term "
                f"{parts} for rank {n}: {c}"
            )
        out[parts] = c
    return FockElement(QQ, n, out)


def cup_basis(nu, nu2) -> FockElement:
    """Cup product of the basis monomials q_nu and q_nu2 on the weight-n
    piece, n = weight(nu) = weight(nu2).

    Computed by building the universal class exp(sum (t-shifted parameter
    series) q_k), squaring it through the tautological Lagrange machinery,
    and extracting the coefficient multilinear in the parameters of both
    factors.  Unequal weights are rejected (the product across different
    weights is zero by definition; rejecting catches caller mistakes).
    """
    nu = check_partition(nu)
    nu2 = check_partition(nu2)
    if weight(nu) != weight(nu2) or weight(nu) < 1:
        raise ValueError("cup_basis needs two partitions of the same n >= 1")
    if nu2 < nu:  # cup is commutative; canonicalize for the cache
        nu, nu2 = nu2, nu
    return _cup_basis_cached(nu, nu2)


def cup(a: FockElement, b: FockElement, n: int) -> FockElement:
    """Bilinear extension of cup_basis to elements supported in weight n."""
    for elem in (a, b):
        if elem.ring != QQ:
            raise ValueError("cup needs rational coefficients")
        if any(weight(p) != n for p in elem.terms):
            raise ValueError(f"element has support outside weight {n}")
    out = FockElement(QQ, n, {})
    for p1, c1 in a.terms.items():
        for p2, c2 in b.terms.items():
            out = out + cup_basis(p1, p2).scale(c1 * c2)
    return out


# -- class-sum oracle in the symmetric group algebra ---------------------


@dataclass(frozen=True)
class ClassSum:
    """Nonnegative-integer combination of conjugacy-class sums of a fixed
    symmetric group rank."""

    n: int
    counts: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.counts)


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@cache
def _conjugacy_classes(n: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    classes: dict[tuple[int, ...], list] = {}
    for perm in permutations(range(n)):
        classes.setdefault(_cycle_type(perm), []).append(perm)
    return {t: tuple(ps) for t, ps in classes.items()}


def ls_oracle(lam, mu, degree_additive: bool = True) -> ClassSum:
    """Product of the conjugacy-class sums C_lam * C_mu in the center of the
    rational group ring of the symmetric group (rank <= 7).

    Computed by fixing one permutation of type lam, convolving with the full
    class of mu, and rescaling by class sizes.  With degree_additive=True
    (the default) only classes nu with n - len(nu) = (n - len(lam)) +
    (n - len(mu)) are kept.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    n = weight(lam)
    if n != weight(mu):
        raise ValueError("cycle types must have equal rank")
    if n > 7:
        raise ValueError("class-sum oracle is limited to rank <= 7")
    classes = _conjugacy_classes(n)
    rep = classes[lam][0]
    hits: dict[tuple[int, ...], int] = {}
    for perm in classes[mu]:
        t = _cycle_type(tuple(rep[perm[i]] for i in range(n)))
        hits[t] = hits.get(t, 0) + 1
    size_lam = factorial(n) // z_of(lam)
    counts = []
    for t in sorted(hits, key=lambda p: (sum(p), tuple(-x for x in p))):
        size_t = len(classes[t])
        num = size_lam * hits[t]
        if num % size_t:
            raise AssertionError("class-sum multiplicity is not integral")
        counts.append((t, num // size_t))
    if degree_additive:
        target = (n - len(lam)) + (n - len(mu))
        counts = [(t, c) for t, c in counts if n - len(t) == target]
    return ClassSum(n, tuple(counts))


def cup_from_class_sums(lam, mu) -> FockElement:
    """cup_basis rebuilt from the class-sum oracle under the calibrated
    identification q_lam <-> z(lam) * C_lam: the q_nu coefficient is
    z(lam) z(mu) / z(nu) times the multiplicity of C_nu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    n = weight(lam)
    product = ls_oracle(lam, mu)
    terms = {
        nu: Fraction(z_of(lam) * z_of(mu) * mult, z_of(nu))
        for nu, mult in product.counts
    }
    return FockElement(QQ, n, terms)
