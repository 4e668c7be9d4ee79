"""Certified real-root machinery: Sturm chains, isolation, interlacing.

All enclosures are closed intervals with exact rational endpoints.  A
returned interval either has zero width (the root is that rational) or
its endpoints are non-roots with the unique root strictly inside, so
interval comparisons decide root comparisons exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exact import (IntPolynomial, _pseudo_rem_positive, poly_divexact,
                    poly_gcd, squarefree_decomposition, squarefree_part)
from .graphs import MixedSignCoxeterGraph, adjacency_matrix
from .coxeter import coxeter_transformation, verify_proof_identities

_ZERO = Fraction(0)
DEFAULT_EPSILON = Fraction(1, 10 ** 9)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "RationalInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def abs(self) -> "RationalInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return RationalInterval(-self.hi, -self.lo)
        return RationalInterval(_ZERO, max(-self.lo, self.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class RootIsolation:
    """Isolated real roots of a polynomial, ascending, with multiplicities."""
    roots: tuple[tuple[RationalInterval, int], ...]
    squarefree: IntPolynomial

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """1 + max|a_i| / |a_deg|; every real root lies strictly inside
    (-bound, bound)."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root bound")
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.lead)
    biggest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(biggest, lead)


class _SturmChain:
    """Sturm chain of a squarefree polynomial, with memoized sign
    variation counts at rational points."""

    def __init__(self, sf: IntPolynomial):
        self.poly = sf
        chain = [sf, sf.derivative()]
        while not chain[-1].is_zero and chain[-1].degree > 0:
            rem = _pseudo_rem_positive(chain[-2], chain[-1])
            if rem.is_zero:
                break
            # content removal must not flip the sign of the chain entry
            g = rem.content()
            chain.append(IntPolynomial(-c // g for c in rem.coeffs))
        if chain[-1].is_zero:
            chain.pop()
        self.chain = chain
        self._memo: dict[Fraction, int] = {}

    def variations(self, x: Fraction) -> int:
        v = self._memo.get(x)
        if v is None:
            signs = [s for s in (p.eval_sign(x) for p in self.chain) if s != 0]
            v = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
            self._memo[x] = v
        return v

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in the half-open interval (lo, hi]."""
        if lo >= hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def sturm_count(p: IntPolynomial, interval: RationalInterval) -> int:
    """Number of distinct real roots of p in (interval.lo, interval.hi]."""
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    if p.degree == 0:
        return 0
    return _SturmChain(squarefree_part(p)).count(interval.lo, interval.hi)


def _isolate_squarefree(chain: _SturmChain) -> list[RationalInterval]:
    """Disjoint intervals, one distinct root each, ascending.  Non-point
    endpoints are never roots, so each bracket carries a sign change."""
    sf = chain.poly
    if sf.degree <= 0:
        return []
    bound = cauchy_bound(sf)
    out: list[RationalInterval] = []

    def explore(lo: Fraction, hi: Fraction, cnt: int) -> None:
        if cnt == 0:
            return
        if cnt == 1:
            out.append(RationalInterval(lo, hi))
            return
        mid = (lo + hi) / 2
        if sf.eval_sign(mid) == 0:
            w = (hi - lo) / 4
            while (chain.count(mid - w, mid + w) != 1
                   or sf.eval_sign(mid - w) == 0 or sf.eval_sign(mid + w) == 0):
                w /= 2
            explore(lo, mid - w, chain.count(lo, mid - w))
            out.append(RationalInterval(mid, mid))
            explore(mid + w, hi, chain.count(mid + w, hi))
        else:
            left = chain.count(lo, mid)
            explore(lo, mid, left)
            explore(mid, hi, cnt - left)

    explore(-bound, bound, chain.count(-bound, bound))
    return out


def _refine(sf: IntPolynomial, iv: RationalInterval, eps: Fraction) -> RationalInterval:
    """Shrink an isolating interval to width <= eps by sign bisection."""
    if iv.is_point:
        return iv
    lo, hi = iv.lo, iv.hi
    slo = sf.eval_sign(lo)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s = sf.eval_sign(mid)
        if s == 0:
            return RationalInterval(mid, mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def _halve(sf: IntPolynomial, iv: RationalInterval) -> RationalInterval:
    return _refine(sf, iv, iv.width / 2) if not iv.is_point else iv


def _separate(sf: IntPolynomial, intervals: list[RationalInterval]) -> list[RationalInterval]:
    # isolation can leave neighbors sharing an endpoint; bisect until
    # the closed intervals are pairwise disjoint
    for i in range(len(intervals) - 1):
        while intervals[i].hi >= intervals[i + 1].lo:
            intervals[i] = _halve(sf, intervals[i])
            intervals[i + 1] = _halve(sf, intervals[i + 1])
    return intervals


def _root_in(factor: IntPolynomial, iv: RationalInterval) -> bool:
    """Does the squarefree factor have (the) root inside this isolating
    interval?  Exact: point check or endpoint sign change."""
    if iv.is_point:
        return factor.eval_sign(iv.lo) == 0
    return factor.eval_sign(iv.lo) * factor.eval_sign(iv.hi) < 0


def isolate_real_roots(p: IntPolynomial, eps: Fraction = DEFAULT_EPSILON) -> RootIsolation:
    """Isolate every distinct real root of p with multiplicity, each in
    an interval of width <= eps."""
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if eps <= 0:
        raise ValueError("eps must be positive")
    decomp = squarefree_decomposition(p)
    sf = IntPolynomial([1])
    for f, _ in decomp:
        sf = sf * f
    chain = _SturmChain(sf)
    intervals = _separate(sf, [_refine(sf, iv, eps) for iv in _isolate_squarefree(chain)])
    roots = []
    for iv in intervals:
        mult = next(m for f, m in decomp if _root_in(f, iv))
        roots.append((iv, mult))
    return RootIsolation(tuple(roots), sf)


def is_real_rooted(p: IntPolynomial) -> bool:
    """True when every complex root of p is real (counted with
    multiplicity, so: the real roots exhaust the degree)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    for f, _ in squarefree_decomposition(p):
        chain = _SturmChain(f)
        b = cauchy_bound(f)
        if chain.count(-b, b) != f.degree:
            return False
    return True


def is_real_stable(p: IntPolynomial) -> bool:
    """True when every root of p is real and strictly positive."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    for f, _ in squarefree_decomposition(p):
        chain = _SturmChain(f)
        b = cauchy_bound(f)
        if chain.count(_ZERO, b) != f.degree:
            return False
    return True


def max_real_root(p: IntPolynomial, eps: Fraction = DEFAULT_EPSILON) -> RationalInterval:
    """Enclosure of the largest real root, width <= eps."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = squarefree_part(p)
    chain = _SturmChain(sf)
    intervals = _isolate_squarefree(chain)
    if not intervals:
        raise ValueError("polynomial has no real roots")
    return _refine(sf, intervals[-1], eps)


def spectral_radius_enclosure(p: IntPolynomial,
                              eps: Fraction = DEFAULT_EPSILON) -> RationalInterval:
    """Enclosure of max |root| for a real-rooted polynomial.

    Works on sf(t) * sf(-t), whose largest real root is the radius; this
    sidesteps any need to break ties between the extreme roots of p.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("spectral radius needs a nonconstant polynomial")
    if not is_real_rooted(p):
        raise ValueError("spectral radius enclosure needs a real-rooted polynomial")
    sf = squarefree_part(p)
    iv = max_real_root(sf * sf.mirror(), eps)
    return RationalInterval(max(_ZERO, iv.lo), max(_ZERO, iv.hi))


def _merged_root_indices(p: IntPolynomial, q: IntPolynomial):
    """Shared isolation of the roots of p and q.

    Returns (alpha, beta): the roots of p and of q as weakly increasing
    lists of indices into one ascending sequence of disjoint isolating
    intervals, repeated per multiplicity.  Equal indices mean equal
    roots, so chain conditions reduce to integer comparisons.
    """
    dec_p = squarefree_decomposition(p)
    dec_q = squarefree_decomposition(q)
    sfp = squarefree_part(p)
    sfq = squarefree_part(q)
    g = poly_gcd(sfp, sfq)
    q_only = poly_divexact(sfq, g) if g.degree > 0 else sfq
    union = sfp * q_only
    if union.degree <= 0:
        return [], []
    chain = _SturmChain(union)
    intervals = _separate(union, _isolate_squarefree(chain))
    alpha: list[int] = []
    beta: list[int] = []
    for idx, iv in enumerate(intervals):
        if _root_in(sfp, iv):
            alpha.extend([idx] * next(m for f, m in dec_p if _root_in(f, iv)))
        if _root_in(sfq, iv):
            beta.extend([idx] * next(m for f, m in dec_q if _root_in(f, iv)))
    return alpha, beta


def interlace_check(p: IntPolynomial, q: IntPolynomial) -> bool:
    """Non-strict interlacing of the root multisets: with deg q = deg p + 1,
    checks beta_1 <= alpha_1 <= beta_2 <= ... <= alpha_s <= beta_{s+1}.

    Shared roots are handled exactly through the gcd; distinct roots are
    separated by bisection, so the verdict is certified either way.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("interlacing needs nonzero polynomials")
    if q.degree != p.degree + 1:
        raise ValueError("degree mismatch: expected deg q = deg p + 1")
    if not is_real_rooted(p) or not is_real_rooted(q):
        raise ValueError("interlacing is defined for real-rooted polynomials")
    alpha, beta = _merged_root_indices(p, q)
    return all(beta[i] <= alpha[i] <= beta[i + 1] for i in range(len(alpha)))


def compare_isolated_roots(p_sf: IntPolynomial, ip: RationalInterval,
                           q_sf: IntPolynomial, iq: RationalInterval) -> int:
    """Exact comparison (-1, 0, +1) of the unique root of p_sf in ip
    against the unique root of q_sf in iq."""
    g = None
    while True:
        if ip.is_point and iq.is_point:
            r, s = ip.lo, iq.lo
            return (r > s) - (r < s)
        if ip.is_point ^ iq.is_point:
            if ip.is_point:
                point, other_sf, other = ip.lo, q_sf, iq
                flip = 1
            else:
                point, other_sf, other = iq.lo, p_sf, ip
                flip = -1
            if point <= other.lo:
                return -flip
            if point >= other.hi:
                return flip
            s = other_sf.eval_sign(point)
            if s == 0:
                return 0
            # root of other_sf lies right of point iff no crossing yet
            return -flip if s == other_sf.eval_sign(other.lo) else flip
        if ip.hi <= iq.lo:
            return -1
        if iq.hi <= ip.lo:
            return 1
        if g is None:
            g = poly_gcd(p_sf, q_sf)
            g_chain = _SturmChain(g) if g.degree > 0 else None
        if g_chain is not None:
            hull_lo = min(ip.lo, iq.lo)
            hull_hi = max(ip.hi, iq.hi)
            if (g_chain.count(ip.lo, ip.hi) == 1
                    and g_chain.count(iq.lo, iq.hi) == 1
                    and g_chain.count(hull_lo, hull_hi) == 1):
                return 0
        ip = _halve(p_sf, ip)
        iq = _halve(q_sf, iq)


def min_root_interval(p: IntPolynomial, eps: Fraction | None = None) -> tuple[IntPolynomial, RationalInterval]:
    """(squarefree part, enclosure of the smallest real root)."""
    sf = squarefree_part(p)
    chain = _SturmChain(sf)
    intervals = _isolate_squarefree(chain)
    if not intervals:
        raise ValueError("polynomial has no real roots")
    iv = intervals[0]
    if eps is not None:
        iv = _refine(sf, iv, eps)
    return sf, iv


def _sqrt_lower(x: Fraction, bits: int) -> Fraction:
    n = 1 << bits
    return Fraction(isqrt(x.numerator * n * n // x.denominator), n)


def _sqrt_upper(x: Fraction, bits: int) -> Fraction:
    n = 1 << bits
    m = -((-x.numerator * n * n) // x.denominator)  # ceil
    r = isqrt(m)
    if r * r < m:
        r += 1
    return Fraction(r, n)


def _deflate(p: IntPolynomial, r: Fraction) -> IntPolynomial:
    # divide by (den*t - num) and drop the content
    return poly_divexact(p, IntPolynomial([-r.numerator, r.denominator])).primitive()


def correspondence_check(g: MixedSignCoxeterGraph, max_rounds: int = 80) -> bool:
    """Certify the eigenvalue correspondence 2 + lam + 1/lam = -alpha^2
    between the adjacency spectrum and the bipartite Coxeter spectrum of
    an alternating-sign graph.

    Interval route: each adjacency enclosure [alpha] is pushed through
    the quadratic lam^2 + (2 + alpha^2) lam + 1 = 0 with outward-rounded
    rational arithmetic and matched to exactly one Coxeter enclosure of
    the same multiplicity.  The exact matrix identities are checked
    first as the algebraic backstop.
    """
    if verify_proof_identities(g) is not True:
        return False
    a = adjacency_matrix(g).charpoly()
    c = coxeter_transformation(g).charpoly()
    n = g.n
    # bipartite adjacency spectrum is symmetric
    if a.mirror() != (a if n % 2 == 0 else -a):
        return False
    if not is_real_rooted(a) or not is_real_rooted(c):
        return False
    iso_a = isolate_real_roots(a, Fraction(1, 1 << 8))
    iso_c = isolate_real_roots(c, Fraction(1, 1 << 8))
    if iso_a.total_multiplicity != n or iso_c.total_multiplicity != n:
        return False
    c_ivs = [iv for iv, _ in iso_c.roots]
    c_mults = [m for _, m in iso_c.roots]
    consumed = [0] * len(c_ivs)

    zero_mult = next(i for i, coef in enumerate(a.coeffs) if coef != 0)
    if zero_mult:
        if c.eval(-1) != 0 or _rational_root_multiplicity(c, Fraction(-1)) != zero_mult:
            return False
        idx = next((k for k, iv in enumerate(c_ivs) if iv.contains(Fraction(-1))), None)
        if idx is None or c_mults[idx] != zero_mult:
            return False
        consumed[idx] += zero_mult

    sf_a = iso_a.squarefree
    sf_c = iso_c.squarefree
    for iv, mult in iso_a.roots:
        if _root_is_zero(sf_a, iv):
            continue
        while iv.contains(_ZERO):
            iv = _halve(sf_a, iv)
        if iv.hi < 0:
            continue  # negative partner of a positive root; counted once below
        alpha = iv
        bits = 32
        for _ in range(max_rounds):
            lam_minus, lam_plus = _lambda_intervals(alpha, bits)
            hit_minus = [k for k, civ in enumerate(c_ivs) if civ.intersects(lam_minus)]
            hit_plus = [k for k, civ in enumerate(c_ivs) if civ.intersects(lam_plus)]
            if len(hit_minus) == 1 and len(hit_plus) == 1:
                km, kp = hit_minus[0], hit_plus[0]
                if km == kp or c_mults[km] != mult or c_mults[kp] != mult:
                    return False
                consumed[km] += mult
                consumed[kp] += mult
                break
            alpha = _halve(sf_a, alpha)
            c_ivs = [_halve(sf_c, civ) for civ in c_ivs]
            bits += 16
        else:
            raise RuntimeError("correspondence refinement did not converge")
    return consumed == c_mults


def _root_is_zero(sf: IntPolynomial, iv: RationalInterval) -> bool:
    return sf.eval_sign(_ZERO) == 0 and iv.contains(_ZERO)


def _rational_root_multiplicity(p: IntPolynomial, r: Fraction) -> int:
    m = 0
    while not p.is_zero and p.eval(r) == 0:
        p = _deflate(p, r)
        m += 1
    return m


def _lambda_intervals(alpha: RationalInterval, bits: int) -> tuple[RationalInterval, RationalInterval]:
    """Outward-rounded solutions of lam^2 + (2 + alpha^2) lam + 1 = 0
    over a positive interval for alpha."""
    lo2, hi2 = alpha.lo ** 2, alpha.hi ** 2
    b_lo, b_hi = 2 + lo2, 2 + hi2
    s_lo = _sqrt_lower(b_lo * b_lo - 4, bits)
    s_hi = _sqrt_upper(b_hi * b_hi - 4, bits)
    lam_minus = RationalInterval((-b_hi - s_hi) / 2, (-b_lo - s_lo) / 2)
    lam_plus = RationalInterval((-b_hi + s_lo) / 2, min((-b_lo + s_hi) / 2, _ZERO))
    return lam_minus, lam_plus
