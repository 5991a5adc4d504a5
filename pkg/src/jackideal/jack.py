"""Jack polynomials over Q(beta) by the triangular Hamiltonian recursion.

P_lam is the unique eigenfunction of the Sutherland-type Hamiltonian that is
unitriangular on monomial symmetric functions: P_lam = m_lam + lower terms in
dominance order.  The solver works with a single polynomial common
denominator (the product of eigenvalue gaps), so every division inside the
recursion is an exact polynomial division; coefficients are reduced to
canonical Q(beta) form only once at the end.
"""

import json
import os
import threading
from fractions import Fraction
from math import gcd

from .ratfunc import BETA, BetaPoly, BetaRatFunc, poly_lcm
from .partitions import (as_partition, beta_value, cs_eigenvalue,
                         dominated_by, padded, partitions_leq,
                         sekiguchi_eigenvalue, conjugate)
from .sympoly import MSymPoly
from . import operators


class SpecializationPole(ArithmeticError):
    """A Jack coefficient has a pole at the requested beta0."""

    def __init__(self, lam, mu, order, beta0):
        self.lam, self.mu, self.order, self.beta0 = lam, mu, order, beta0
        super().__init__("coefficient of m_%r in P_%r has a pole of order %d "
                         "at beta=%s" % (mu, lam, order, beta0))


class JackPoly:
    """Symbolic Jack polynomial: partition, ambient n, m-basis coefficients."""

    __slots__ = ("lam", "n", "coeffs")

    def __init__(self, lam, n, coeffs):
        self.lam = as_partition(lam)
        self.n = n
        self.coeffs = coeffs  # dict partition -> BetaRatFunc, includes lam -> 1

    def msym(self):
        return MSymPoly(self.n, dict(self.coeffs))

    def coefficient(self, mu):
        mu = as_partition(mu)
        return self.coeffs.get(mu, BetaRatFunc(0))

    def cleared(self):
        """(D, numerators): D = integer-rescaled lcm of the coefficient
        denominators, numerators integer-coefficient BetaPolys with
        coeff = numerators[mu] / D exactly."""
        D = BetaPoly((1,))
        for u in self.coeffs.values():
            D = poly_lcm(D, u.den)
        nums = {mu: u.num * D.exact_div(u.den) for mu, u in self.coeffs.items()}
        scale = 1
        for p in list(nums.values()) + [D]:
            for c in p.coeffs:
                d = c.denominator if isinstance(c, Fraction) else 1
                scale = scale * d // gcd(scale, d)
        if scale != 1:
            D = D * scale
            nums = {mu: p * scale for mu, p in nums.items()}
        D = D.int_normalized()
        nums = {mu: p.int_normalized() for mu, p in nums.items()}
        return D, nums

    def to_obj(self):
        return self.msym().to_obj()

    @classmethod
    def from_obj(cls, obj):
        P = MSymPoly.from_obj(obj)
        terms = {mu: c if isinstance(c, BetaRatFunc) else BetaRatFunc(c)
                 for mu, c in P.terms.items()}
        lam = max(terms, key=lambda p: (sum(p), p))
        return cls(lam, P.n, terms)

    def __repr__(self):
        return "JackPoly(lam=%r, n=%d, %d terms)" % (self.lam, self.n,
                                                     len(self.coeffs))


class SpecializedJack:
    """Jack polynomial evaluated at beta0 = beta(k, r), over Q."""

    __slots__ = ("lam", "n", "k", "r", "beta0", "poly")

    def __init__(self, lam, n, k, r, beta0, poly):
        self.lam, self.n, self.k, self.r = as_partition(lam), n, k, r
        self.beta0 = beta0
        self.poly = poly

    def to_obj(self):
        obj = self.poly.to_obj()
        obj["k"] = self.k
        obj["r"] = self.r
        obj["beta"] = {"num": -(self.r - 1), "den": self.k + 1}
        return obj

    @classmethod
    def from_obj(cls, obj):
        poly = MSymPoly.from_obj(obj)
        k, r = obj["k"], obj["r"]
        lam = max(poly.terms, key=lambda p: (sum(p), p))
        return cls(lam, poly.n, k, r, Fraction(obj["beta"]["num"],
                                               obj["beta"]["den"]), poly)

    def __repr__(self):
        return "SpecializedJack(lam=%r, n=%d, beta0=%s)" % (self.lam, self.n,
                                                            self.beta0)


class JackCache:
    """Content-addressed (lam, n) -> JackPoly cache, safe for concurrent
    readers; optionally backed by a directory of JSON files."""

    def __init__(self, directory=None):
        self._mem = {}
        self._lock = threading.Lock()
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, lam, n):
        name = "jack_n%d_%s.json" % (n, "-".join(map(str, lam)) or "0")
        return os.path.join(self.directory, name)

    def get(self, lam, n):
        with self._lock:
            hit = self._mem.get((lam, n))
        if hit is not None:
            return hit
        if self.directory:
            path = self._path(lam, n)
            if os.path.exists(path):
                with open(path) as fh:
                    jp = JackPoly.from_obj(json.load(fh))
                if jp.lam == lam and jp.n == n:
                    self.put(jp, persist=False)
                    return jp
        return None

    def put(self, jp, persist=True):
        with self._lock:
            self._mem[(jp.lam, jp.n)] = jp
        if persist and self.directory:
            path = self._path(jp.lam, jp.n)
            if not os.path.exists(path):
                tmp = path + ".tmp.%d" % os.getpid()
                with open(tmp, "w") as fh:
                    json.dump(jp.to_obj(), fh)
                os.replace(tmp, path)

    def __len__(self):
        with self._lock:
            return len(self._mem)

    def clear(self):
        with self._lock:
            self._mem.clear()
        if self.directory:
            for name in os.listdir(self.directory):
                if name.startswith("jack_n") and name.endswith(".json"):
                    os.remove(os.path.join(self.directory, name))


default_cache = JackCache()

_H_ROWS = {}
_H_LOCK = threading.Lock()


def hamiltonian_matrix_row(mu, n):
    """Coefficients of H m_mu in the m-basis: dict nu -> BetaPoly.

    The support is checked to be dominated by mu (upper triangularity) and
    the diagonal entry to be the closed-form eigenvalue.
    """
    mu = as_partition(mu)
    key = (mu, n)
    with _H_LOCK:
        row = _H_ROWS.get(key)
    if row is not None:
        return row
    hm = operators.apply_hamiltonian(MSymPoly.monomial_sym(n, mu), BETA)
    row = {}
    for nu, c in hm.terms.items():
        if not dominated_by(nu, mu):
            raise AssertionError("H m_%r hit %r outside the dominance cone"
                                 % (mu, nu))
        row[nu] = c if isinstance(c, BetaPoly) else BetaPoly((c,))
    diag = row.get(mu, BetaPoly())
    if diag != cs_eigenvalue(mu, n):
        raise AssertionError("diagonal of H at %r disagrees with the "
                             "closed-form eigenvalue" % (mu,))
    with _H_LOCK:
        _H_ROWS[key] = row
    return row


def jack_symbolic(lam, n, cache=None):
    """P_lam in n variables as an MSymPoly over Q(beta) (unitriangular).

    Solves (eps_lam - eps_nu) u_nu = sum_{nu < mu <= lam} u_mu h_{mu,nu}
    downward in dominance order.  Internally every u is represented as
    N_nu / D with the fixed common denominator D = prod (eps_lam - eps_mu),
    which turns each step into an exact polynomial division.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError("partition %r longer than n=%d" % (lam, n))
    cache = cache if cache is not None else default_cache
    hit = cache.get(lam, n)
    if hit is not None:
        return hit

    d = sum(lam)
    eps_lam = cs_eigenvalue(lam, n)
    below = [nu for nu in partitions_leq(d, n)
             if nu != lam and dominated_by(nu, lam)]
    gaps = {}
    D = BetaPoly((1,))
    for nu in below:
        g = eps_lam - cs_eigenvalue(nu, n)
        if g.is_zero():
            raise AssertionError("eigenvalue collision between %r and %r"
                                 % (lam, nu))
        gaps[nu] = g
        D = D * g

    nums = {lam: D}
    rows = {lam: hamiltonian_matrix_row(lam, n)}
    # decreasing lex refines dominance, so every mu > nu is already solved
    for nu in below:
        acc = BetaPoly()
        for mu, nmu in nums.items():
            h = rows[mu].get(nu)
            if h is not None:
                acc = acc + nmu * h
        nums[nu] = acc.exact_div(gaps[nu])
        rows[nu] = hamiltonian_matrix_row(nu, n)

    coeffs = {}
    for nu, num in nums.items():
        u = BetaRatFunc(num, D)
        if u:
            coeffs[nu] = u
    if coeffs.get(lam) != 1:
        raise AssertionError("leading coefficient of P_%r is not 1" % (lam,))
    jp = JackPoly(lam, n, coeffs)
    cache.put(jp)
    return jp


def verify_hamiltonian(lam, n, cache=None):
    """Exact check of H P_lam = eps_lam P_lam, identically in beta."""
    jp = jack_symbolic(lam, n, cache)
    D, nums = jp.cleared()
    Q = MSymPoly(n, nums)
    lhs = operators.apply_hamiltonian(Q, BETA)
    eps = cs_eigenvalue(lam, n)
    rhs = Q.map_coeffs(lambda c: c * eps)
    return lhs == rhs


def verify_sekiguchi(lam, n, cache=None):
    """Exact check of the full Sekiguchi eigen-equation
    S(u, beta) P_lam = prod_i (u + lam_i + (n-i) beta) P_lam in Q[beta][u]."""
    jp = jack_symbolic(lam, n, cache)
    D, nums = jp.cleared()
    Q = MSymPoly(n, nums).to_expanded()
    got = operators.apply_sekiguchi(Q, BETA)
    want = sekiguchi_eigenvalue(lam, n)
    if len(got) != len(want):
        return False
    for g, w in zip(got, want):
        if g != Q * w:
            return False
    return True


def verify_eigensystem(n, dmax, cache=None):
    """Both eigen-equations for every partition of weight <= dmax."""
    from .partitions import partitions_leq
    from .report import Report
    rep = Report("eigensystem", {"n": n, "dmax": dmax})
    for d in range(dmax + 1):
        for lam in partitions_leq(d, n):
            rep.add("hamiltonian:%s" % (list(lam),),
                    verify_hamiltonian(lam, n, cache))
            rep.add("sekiguchi:%s" % (list(lam),),
                    verify_sekiguchi(lam, n, cache))
    return rep


def pole_profile(lam, n, beta0, cache=None):
    """Worst pole order at beta0 over the coefficients of P_lam (0 = regular;
    the leading coefficient 1 keeps the maximum at >= 0)."""
    jp = jack_symbolic(lam, n, cache)
    worst = None
    for u in jp.coeffs.values():
        p = u.pole_order(beta0)
        if p is not None and (worst is None or p > worst):
            worst = p
    return worst if worst is not None else 0


def specialize(lam, n, k, r, cache=None):
    """Evaluate P_lam at beta0 = beta(k, r); raises SpecializationPole
    naming the first offending coefficient."""
    b0 = beta_value(k, r)
    jp = jack_symbolic(lam, n, cache)
    terms = {}
    for mu in sorted(jp.coeffs, reverse=True):
        u = jp.coeffs[mu]
        p = u.pole_order(b0)
        if p is not None and p > 0:
            raise SpecializationPole(lam, mu, p, b0)
        v = u(b0)
        if v:
            terms[mu] = v
    return SpecializedJack(lam, n, k, r, b0, MSymPoly(n, terms))


def principal_specialization(lam, n):
    """Closed product for P_lam(1, ..., 1): over nodes (i, j),
    ((n - i + 1) beta + j - 1) / ((conj_j - i + 1) beta + lam_i - j)."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError("partition %r longer than n=%d" % (lam, n))
    conj = conjugate(lam)
    num = BetaPoly((1,))
    den = BetaPoly((1,))
    for i, li in enumerate(lam, start=1):
        for j in range(1, li + 1):
            num = num * BetaPoly((j - 1, n - i + 1))
            den = den * BetaPoly((li - j, conj[j - 1] - i + 1))
    return BetaRatFunc(num, den)


def evaluate_all_ones(lam, n, cache=None):
    """P_lam at the all-ones point, exactly in Q(beta), from the m-expansion."""
    from .sympoly import orbit_size
    jp = jack_symbolic(lam, n, cache)
    total = BetaRatFunc(0)
    for mu, u in jp.coeffs.items():
        total = total + u * orbit_size(mu, n)
    return total
