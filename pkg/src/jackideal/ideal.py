"""The span of Jack polynomials at beta(k, r) over admissible partitions:
basis construction, exact membership reduction, Pieri/Lassalle transition
coefficients and the verification suites for the structural properties
(ideal closure, restriction, regularity, wheel identification).
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .ratfunc import BETA, BetaPoly, BetaRatFunc
from .partitions import (InvalidParameters, add_node, addable_rows,
                         as_partition, beta_value, conjugate, c_lambda,
                         cs_eigenvalue, dominated_by, enumerate_admissible,
                         is_admissible, node_moves, padded, partitions_leq,
                         removable_rows, remove_node)
from .sympoly import MSymPoly, NotSymmetric, power_sum
from .jack import (default_cache, jack_symbolic, pole_profile, specialize)
from .operators import OperatorTag, apply_hamiltonian, apply_l
from .report import Report


class DegreeOverflow(ValueError):
    """Input degree exceeds what the basis was built for."""


class MembershipCertificate:
    """Result of a membership reduction: either an exact combination over the
    admissible basis, or a dominance-maximal non-admissible obstruction."""

    __slots__ = ("member", "combination", "obstruction")

    def __init__(self, member, combination, obstruction):
        self.member = member
        self.combination = combination
        self.obstruction = obstruction

    def to_obj(self):
        from .ratfunc import rat_to_obj
        obj = {"member": self.member}
        if self.member:
            obj["combination"] = [
                {"partition": list(p), "coeff": rat_to_obj(c)}
                for p, c in sorted(self.combination.items(),
                                   key=lambda t: (sum(t[0]), t[0]))]
        else:
            obj["obstruction"] = list(self.obstruction)
        return obj

    def __repr__(self):
        if self.member:
            return "MembershipCertificate(member, %d terms)" % len(self.combination)
        return "MembershipCertificate(obstruction=%r)" % (self.obstruction,)


class IdealBasis:
    """Specialized Jack polynomials P_lam(beta0) over the admissible
    partitions of weight <= dmax, for fixed (k, r, n)."""

    def __init__(self, k, r, n, dmax, beta0, family, elements):
        self.k, self.r, self.n, self.dmax = k, r, n, dmax
        self.beta0 = beta0
        self.family = family
        self.elements = elements  # dict lam -> SpecializedJack

    def by_degree(self, d):
        return self.family.by_degree.get(d, ())

    def character(self):
        return self.family.character()

    def get(self, lam):
        return self.elements[as_partition(lam)]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        for lam in self.family.all_partitions():
            yield self.elements[lam]

    def to_dir(self, path):
        os.makedirs(path, exist_ok=True)
        for d in range(self.dmax + 1):
            obj = {"k": self.k, "r": self.r, "n": self.n, "degree": d,
                   "elements": [self.elements[lam].to_obj()
                                for lam in self.by_degree(d)]}
            with open(os.path.join(path, "degree_%02d.json" % d), "w") as fh:
                json.dump(obj, fh)

    @classmethod
    def from_dir(cls, path):
        from .jack import SpecializedJack
        files = sorted(f for f in os.listdir(path)
                       if f.startswith("degree_") and f.endswith(".json"))
        if not files:
            raise FileNotFoundError("no degree files under %r" % path)
        elements, by_degree = {}, {}
        k = r = n = None
        for fname in files:
            with open(os.path.join(path, fname)) as fh:
                obj = json.load(fh)
            k, r, n = obj["k"], obj["r"], obj["n"]
            lams = []
            for e in obj["elements"]:
                sp = SpecializedJack.from_obj(e)
                elements[sp.lam] = sp
                lams.append(sp.lam)
            by_degree[obj["degree"]] = tuple(lams)
        dmax = max(by_degree)
        from .partitions import AdmissibleFamily
        fam = AdmissibleFamily(k, r, n, dmax, by_degree)
        return cls(k, r, n, dmax, beta_value(k, r), fam, elements)


def _jack_worker(args):
    lam, n = args
    return jack_symbolic(lam, n)


def build_basis(k, r, n, dmax, cache=None, workers=None):
    """Construct the admissible basis; symbolic solves fan out over
    processes when workers > 1 and merge back into the cache."""
    b0 = beta_value(k, r)
    fam = enumerate_admissible(k, r, n, dmax)
    lams = list(fam.all_partitions())
    cache = cache if cache is not None else default_cache
    todo = [lam for lam in lams if cache.get(lam, n) is None]
    if workers and workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for jp in pool.map(_jack_worker, [(lam, n) for lam in todo]):
                cache.put(jp)
    elements = {lam: specialize(lam, n, k, r, cache) for lam in lams}
    return IdealBasis(k, r, n, dmax, b0, fam, elements)


def reduce_membership(P, basis):
    """Triangular reduction of P (over Q) against the basis.

    Works one homogeneous component at a time; in each pass every
    dominance-maximal support partition must be admissible (else that
    partition is returned as the obstruction) and all of them are cleared
    at once by subtracting the matching basis elements.
    """
    if P.n != basis.n:
        raise ValueError("polynomial has n=%d, basis has n=%d" % (P.n, basis.n))
    for c in P.terms.values():
        if not isinstance(c, (int, Fraction)):
            raise TypeError("membership reduction needs coefficients in Q")
    combination = {}
    for d, comp in P.homogeneous_components().items():
        if d > basis.dmax:
            raise DegreeOverflow("degree %d beyond basis dmax=%d" % (d, basis.dmax))
        work = comp
        while work.terms:
            support = sorted(work.terms, reverse=True)
            maxima = [p for p in support
                      if not any(q != p and dominated_by(p, q) for q in support)]
            for p in maxima:
                if p not in basis.elements:
                    return MembershipCertificate(False, {}, p)
            acc = work
            for p in maxima:
                c = work.terms[p]
                combination[p] = c
                acc = acc - basis.elements[p].poly.scale(c)
            work = acc
    return MembershipCertificate(True, combination, None)


def certificate_holds(P, basis, cert):
    """Recombine a membership certificate and compare with P exactly."""
    if not cert.member:
        return False
    acc = MSymPoly(basis.n)
    for lam, c in cert.combination.items():
        acc = acc + basis.elements[lam].poly.scale(c)
    return acc == P


# ---------------------------------------------------------------------------
# transition coefficients

def pieri_coefficient(mu, j):
    """Transition coefficient for adding one node in row j to mu (1-indexed):
    product over i < j of
      ((j-i-1)b + mu_i - mu_j) / ((j-i)b + mu_i - mu_j - 1)
      * ((j-i+1)b + mu_i - mu_j - 1) / ((j-i)b + mu_i - mu_j).
    """
    mu = as_partition(mu)
    add_node(mu, j)  # validates the row
    mj = mu[j - 1] if j <= len(mu) else 0
    num = BetaPoly((1,))
    den = BetaPoly((1,))
    for i in range(1, j):
        d = mu[i - 1] - mj
        num = num * BetaPoly((d, j - i - 1)) * BetaPoly((d - 1, j - i + 1))
        den = den * BetaPoly((d - 1, j - i)) * BetaPoly((d, j - i))
    return BetaRatFunc(num, den)


def lassalle_up(mu, j):
    """Coefficient of P_(mu + node in row j) in l_1 P_mu:
    psi' * (-(j-1) b + mu_j)."""
    mu = as_partition(mu)
    psi = pieri_coefficient(mu, j)
    mj = mu[j - 1] if j <= len(mu) else 0
    return psi * BetaPoly((mj, -(j - 1)))


def lassalle_down(mu, i, n):
    """Coefficient of P_(mu - node in row i) in l_-1 P_mu (ambient n):
    (1/b) ((n-i)b + mu_i)((n-i+1)b + mu_i - 1)
      * prod_{j=i+1..n} ((j-i-1)b + mu_i - mu_j)/((j-i)b + mu_i - mu_j)
      * prod_{j=1..mu_i-1} ((conj_j - i + 1)b + mu_i - j - 1)
                          /((conj_j - i + 1)b + mu_i - j).
    """
    mu = as_partition(mu)
    remove_node(mu, i)  # validates the row
    if len(mu) > n:
        raise ValueError("partition %r longer than n=%d" % (mu, n))
    mp = padded(mu, n)
    mi = mp[i - 1]
    conj = conjugate(mu)
    num = BetaPoly((mi, n - i)) * BetaPoly((mi - 1, n - i + 1))
    den = BETA
    for j in range(i + 1, n + 1):
        d = mi - mp[j - 1]
        num = num * BetaPoly((d, j - i - 1))
        den = den * BetaPoly((d, j - i))
    for j in range(1, mi):
        a = conj[j - 1] - i + 1
        num = num * BetaPoly((mi - j - 1, a))
        den = den * BetaPoly((mi - j, a))
    return BetaRatFunc(num, den)


# ---------------------------------------------------------------------------
# exact linear algebra for the wheel space

def bareiss_rank(mat):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(row) for row in mat]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        piv = None
        for i in range(rank, nr):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        for i in range(rank + 1, nr):
            ri = mat[i]
            a = ri[c]
            for j in range(c + 1, nc):
                # exact by Sylvester's determinant identity
                ri[j] = (pr[c] * ri[j] - a * pr[j]) // prev
            ri[c] = 0
        prev = pr[c]
        rank += 1
        if rank == nr:
            break
    return rank


def wheel_dimension(k, n, d):
    """Dimension of the degree-d symmetric polynomials in n variables that
    vanish when k+1 variables coincide (kernel of the coincidence map).

    With fewer than k+1 variables the condition is vacuous and the whole
    degree-d component survives.
    """
    lams = partitions_leq(d, n)
    if n < k + 1:
        return len(lams)
    cols = {}
    rows = []
    for lam in lams:
        img = MSymPoly.monomial_sym(n, lam).substitute_coincident(k + 1)
        row = {}
        for e, c in img.terms.items():
            row[cols.setdefault(e, len(cols))] = c
        rows.append(row)
    mat = [[row.get(j, 0) for j in range(len(cols))] for row in rows]
    return len(lams) - bareiss_rank(mat)


# ---------------------------------------------------------------------------
# verification suites

def clearing_zero_order(lam, k, r, n):
    """Expected order of the zero of c_lambda at beta(k, r) for a
    non-admissible one-node neighbour of an admissible partition: 1 when
    some violated window lies inside the diagram, 0 when the violations
    only push against padded zero rows (the hooks never see those)."""
    lp = padded(lam, n)
    orders = set()
    for i in range(n - k):
        if lp[i] - lp[i + k] < r:
            orders.add(0 if lp[i + k] == 0 else 1)
    if not orders:
        raise ValueError("%r is (%d,%d,%d)-admissible" % (lam, k, r, n))
    return max(orders)


def verify_regularity(k, r, n, dmax, cache=None):
    """Every admissible partition and every one-node neighbour of one has a
    pole-free Jack limit at beta(k, r); for non-admissible neighbours the
    clearing product c_lambda has a zero there of the expected order
    (simple for internal violations, none for zero-row violations)."""
    b0 = beta_value(k, r)
    rep = Report("regularity", {"k": k, "r": r, "n": n, "dmax": dmax})
    fam = enumerate_admissible(k, r, n, dmax)
    seen = set()
    for mu in fam.all_partitions():
        for lam in [mu] + node_moves(mu, n):
            if lam in seen:
                continue
            seen.add(lam)
            prof = pole_profile(lam, n, b0, cache)
            rep.add("regular:%s" % (list(lam),), prof == 0,
                    pole_profile=prof)
            if not is_admissible(lam, k, r, n):
                mult = c_lambda(lam).root_multiplicity(b0)
                want = clearing_zero_order(lam, k, r, n)
                rep.add("clearing-zero:%s" % (list(lam),), mult == want,
                        zero_order=mult, expected=want)
    return rep


def verify_pieri(n, dmax, k=None, r=None, symbolic=None, cache=None):
    """Pieri rule for p_1 on Jack polynomials.

    Symbolic part (over Q(beta)): p_1 P_mu = sum psi' P_lam for every mu of
    weight < dmax.  Specialized part (needs k, r): for admissible mu, psi'
    toward non-admissible lam vanishes at beta(k, r) and toward admissible
    lam stays regular, the specialized identity holds over Q, and the
    product reduces to exactly that combination under membership.
    """
    if symbolic is None:
        symbolic = k is None
    rep = Report("pieri", {"n": n, "dmax": dmax, "k": k, "r": r,
                           "symbolic": symbolic})
    p1 = power_sum(1, n)
    if symbolic:
        for d in range(dmax):
            for mu in partitions_leq(d, n):
                Pmu = jack_symbolic(mu, n, cache).msym()
                lhs = Pmu.multiply(p1)
                rhs = MSymPoly(n)
                for j in addable_rows(mu, n):
                    lam = add_node(mu, j)
                    term = jack_symbolic(lam, n, cache).msym()
                    rhs = rhs + term.map_coeffs(
                        lambda c, psi=pieri_coefficient(mu, j): c * psi)
                rep.add("symbolic:%s" % (list(mu),), lhs == rhs)
    if k is not None:
        b0 = beta_value(k, r)
        basis = build_basis(k, r, n, dmax, cache)
        for mu in basis.family.all_partitions():
            if sum(mu) + 1 > dmax:
                continue
            lhs = basis.get(mu).poly.multiply(p1)
            expected = {}
            ok_factors = True
            for j in addable_rows(mu, n):
                lam = add_node(mu, j)
                psi = pieri_coefficient(mu, j)
                pole = psi.pole_order(b0)
                if is_admissible(lam, k, r, n):
                    ok = pole is not None and pole <= 0
                    rep.add("regular:%s->%s" % (list(mu), list(lam)), ok,
                            pole_order=pole)
                    ok_factors = ok_factors and ok
                    if ok:
                        v = psi(b0)
                        if v:
                            expected[lam] = v
                else:
                    ok = pole is None or pole < 0
                    rep.add("vanish:%s->%s" % (list(mu), list(lam)), ok,
                            pole_order=pole)
                    ok_factors = ok_factors and ok
            if not ok_factors:
                continue
            rhs = MSymPoly(n)
            for lam, v in expected.items():
                rhs = rhs + basis.get(lam).poly.scale(v)
            rep.add("identity:%s" % (list(mu),), lhs == rhs)
            cert = reduce_membership(lhs, basis)
            rep.add("member:%s" % (list(mu),),
                    cert.member and cert.combination == expected,
                    certificate=cert.to_obj())
    return rep


def _lassalle_vanishing_cases(rep, mu, n, k, r, b0):
    """Per-neighbour mechanism checks at beta(k, r) for an admissible mu."""
    mup = padded(mu, n)
    for j in addable_rows(mu, n):
        lam = add_node(mu, j)
        psi2 = lassalle_up(mu, j)
        if is_admissible(lam, k, r, n):
            pole = psi2.pole_order(b0)
            rep.add("up-regular:%s->%s" % (list(mu), list(lam)),
                    pole is None or pole <= 0, pole_order=pole)
        else:
            # the specific factor: i = j - k in the second Pieri product
            i = j - k
            factor = BetaPoly((mup[i - 1] - mup[j - 1] - 1, k + 1))
            ok = i >= 1 and mup[i - 1] - mup[j - 1] == r and factor(b0) == 0
            pole = psi2.pole_order(b0)
            ok = ok and (pole is None or pole < 0)
            rep.add("up-vanish:%s->%s" % (list(mu), list(lam)), ok,
                    factor=str(factor), pole_order=pole)
    for i in removable_rows(mu):
        lam = remove_node(mu, i)
        psit = lassalle_down(mu, i, n)
        if is_admissible(lam, k, r, n):
            pole = psit.pole_order(b0)
            rep.add("down-regular:%s->%s" % (list(mu), list(lam)),
                    pole is None or pole <= 0, pole_order=pole)
        else:
            mi = mup[i - 1]
            if i + k <= n and mup[i + k - 1] >= 1:
                j = mup[i + k - 1]
                conj = conjugate(mu)
                a = conj[j - 1] - i + 1
                ok = (a == k + 1 and mi - j == r
                      and BetaPoly((mi - j - 1, a))(b0) == 0)
                which = "hook-factor[j=%d]" % j
            else:
                # removed row is the last admissibility window: the
                # prefactor (n-i+1) b + mu_i - 1 carries the zero
                ok = (i == n - k and mi == r
                      and BetaPoly((mi - 1, n - i + 1))(b0) == 0)
                which = "prefactor"
            pole = psit.pole_order(b0)
            ok = ok and (pole is None or pole < 0)
            rep.add("down-vanish:%s->%s" % (list(mu), list(lam)), ok,
                    mechanism=which, pole_order=pole)


def verify_lassalle(n, dmax, k=None, r=None, symbolic=None, cache=None):
    """Raising/lowering expansions l_1 P_mu and l_-1 P_mu in the Jack basis.

    Symbolic part checks both expansions identically in beta for all mu with
    |mu| < dmax; the specialized part (needs k, r) checks, for admissible mu,
    the per-neighbour vanishing mechanism at beta(k, r) (asserting the
    specific vanishing factor, not just the product) and the specialized
    identities over Q.
    """
    if symbolic is None:
        symbolic = k is None
    rep = Report("lassalle", {"n": n, "dmax": dmax, "k": k, "r": r,
                              "symbolic": symbolic})

    def expansions(msym_of, mu, beta_eval=None):
        ups = MSymPoly(n)
        for j in addable_rows(mu, n):
            c = lassalle_up(mu, j)
            c = c(beta_eval) if beta_eval is not None else c
            if c:
                ups = ups + msym_of(add_node(mu, j)).scale(c)
        downs = MSymPoly(n)
        for i in removable_rows(mu):
            c = lassalle_down(mu, i, n)
            c = c(beta_eval) if beta_eval is not None else c
            if c:
                downs = downs + msym_of(remove_node(mu, i)).scale(c)
        return ups, downs

    if symbolic:
        for d in range(dmax):
            for mu in partitions_leq(d, n):
                Pmu = jack_symbolic(mu, n, cache).msym()
                ups, downs = expansions(
                    lambda lam: jack_symbolic(lam, n, cache).msym(), mu)
                rep.add("symbolic-up:%s" % (list(mu),),
                        apply_l(Pmu, 1) == ups)
                rep.add("symbolic-down:%s" % (list(mu),),
                        apply_l(Pmu, -1) == downs)
    if k is not None:
        b0 = beta_value(k, r)
        basis = build_basis(k, r, n, dmax, cache)

        def admissible_sum(mu, rows, coeff_of, move):
            # only admissible neighbours contribute once the vanishing
            # cases hold; a pole here means those cases already failed
            acc = MSymPoly(n)
            for idx in rows:
                lam = move(mu, idx)
                if lam not in basis.elements:
                    continue
                c = coeff_of(mu, idx)
                po = c.pole_order(b0)
                if po is not None and po > 0:
                    continue
                v = c(b0)
                if v:
                    acc = acc + basis.get(lam).poly.scale(v)
            return acc

        for mu in basis.family.all_partitions():
            _lassalle_vanishing_cases(rep, mu, n, k, r, b0)
            if sum(mu) + 1 <= dmax:
                Pmu = basis.get(mu).poly
                ups = admissible_sum(mu, addable_rows(mu, n),
                                     lassalle_up, add_node)
                downs = admissible_sum(mu, removable_rows(mu),
                                       lambda m, i: lassalle_down(m, i, n),
                                       remove_node)
                rep.add("specialized-up:%s" % (list(mu),),
                        apply_l(Pmu, 1) == ups)
                rep.add("specialized-down:%s" % (list(mu),),
                        apply_l(Pmu, -1) == downs)
    return rep


def closure_tags(mmax, tmax):
    """The operator battery for the closure suite, in a fixed order."""
    tags = [OperatorTag("p", m) for m in range(1, mmax + 1)]
    tags += [OperatorTag("l", m) for m in range(-1, mmax + 1)]
    for t in range(2, tmax + 1):
        tags += [OperatorTag("w", m, t) for m in range(-t + 1, mmax + 1)]
    return tags


def verify_closure(k, r, n, dmax, mmax=4, tmax=4, cache=None, workers=None):
    """Ideal property: every operator image of every basis element reduces
    to a member of the span, in every degree the battery can reach."""
    b0 = beta_value(k, r)
    rep = Report("closure", {"k": k, "r": r, "n": n, "dmax": dmax,
                             "mmax": mmax, "tmax": tmax})
    basis = build_basis(k, r, n, dmax, cache, workers)
    tags = closure_tags(mmax, tmax)
    for lam in basis.family.all_partitions():
        P = basis.get(lam).poly
        d = sum(lam)
        for tag in tags:
            if not 0 <= d + tag.degree_shift() <= dmax:
                continue
            img = tag.apply(P, b0)
            cert = reduce_membership(img, basis)
            detail = {}
            if not cert.member:
                detail["obstruction"] = list(cert.obstruction)
            rep.add("%s@%s" % (tag, list(lam)), cert.member, **detail)
    return rep


def verify_restriction(k, r, n, dmax, jmax=2, cache=None):
    """Setting x_n = 0 after j-fold d/dx_n maps the span at n into the span
    at n-1, exactly."""
    if n < 2:
        raise InvalidParameters("restriction needs n >= 2")
    rep = Report("restriction", {"k": k, "r": r, "n": n, "dmax": dmax,
                                 "jmax": jmax})
    basis_n = build_basis(k, r, n, dmax, cache)
    basis_m = build_basis(k, r, n - 1, dmax, cache)
    for lam in basis_n.family.all_partitions():
        cur = basis_n.get(lam).poly.to_expanded()
        for j in range(jmax + 1):
            ok = True
            detail = {}
            try:
                low = cur.restrict_last().to_msym()
                cert = reduce_membership(low, basis_m)
                ok = cert.member
                if not ok:
                    detail["obstruction"] = list(cert.obstruction)
            except NotSymmetric:
                ok = False
                detail["error"] = "image not symmetric"
            rep.add("restrict[j=%d]@%s" % (j, list(lam)), ok, **detail)
            cur = cur.partial(n)
    return rep


def verify_wheel(k, n, dmax, cache=None, workers=None):
    """Identification with the wheel space at r = 2: the admissible count
    matches the wheel-kernel dimension in every degree, and every basis
    element vanishes when k+1 variables coincide."""
    rep = Report("wheel", {"k": k, "r": 2, "n": n, "dmax": dmax})
    basis = build_basis(k, 2, n, dmax, cache, workers)
    for d in range(dmax + 1):
        wd = wheel_dimension(k, n, d)
        ac = len(basis.by_degree(d))
        rep.add("character[d=%d]" % d, wd == ac,
                wheel_dim=wd, admissible_count=ac,
                empty_admissible=is_admissible((), k, 2, n))
    if n < k + 1:
        rep.add("vanish:vacuous", True, note="fewer than k+1 variables")
    else:
        for lam in basis.family.all_partitions():
            img = basis.get(lam).poly.substitute_coincident(k + 1)
            rep.add("vanish@%s" % (list(lam),), img.is_zero())
    return rep


def verify_phi3(r, cache=None):
    """The smallest nontrivial element at (k, n) = (2, 3): P_(r) at
    beta(2, r) is a lowest-weight vector of degree r."""
    b0 = beta_value(2, r)
    rep = Report("phi3", {"k": 2, "r": r, "n": 3})
    lam = (r,)
    rep.add("admissible", is_admissible(lam, 2, r, 3))
    P = specialize(lam, 3, 2, r, cache).poly
    rep.add("euler", apply_l(P, 0) == P.scale(r))
    eps = cs_eigenvalue(lam, 3)(b0)
    rep.add("hamiltonian", apply_hamiltonian(P, b0) == P.scale(eps))
    rep.add("lowering", apply_l(P, -1).is_zero())
    return rep
