"""Partitions, dominance order, admissibility and hook-type products.

A partition is a plain tuple of weakly decreasing positive ints (trailing
zeros are stripped on normalization).  Where an ambient number of variables
matters the functions take n explicitly and treat the partition as padded
with zeros to length n.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .ratfunc import BetaPoly


class InvalidParameters(ValueError):
    """Parameters (k, r, n, ...) outside the allowed range."""


class DegreeMismatch(ValueError):
    """Dominance comparison of partitions of different weights."""


def as_partition(parts):
    """Normalize to a partition tuple; validates weak decrease."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i in range(1, len(parts)):
        if parts[i] > parts[i - 1]:
            raise ValueError("not weakly decreasing: %r" % (parts,))
    if parts and parts[-1] < 0:
        raise ValueError("negative part in %r" % (parts,))
    return parts


def weight(lam):
    return sum(lam)


def padded(lam, n):
    if len(lam) > n:
        raise ValueError("partition %r longer than n=%d" % (lam, n))
    return tuple(lam) + (0,) * (n - len(lam))


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_compare(mu, lam):
    """Compare in dominance order; returns 'less', 'equal', 'greater'
    or 'incomparable' (mu relative to lam).  Weights must agree."""
    if sum(mu) != sum(lam):
        raise DegreeMismatch("weights differ: %r vs %r" % (mu, lam))
    le = ge = True
    sm = sl = 0
    for i in range(max(len(mu), len(lam))):
        sm += mu[i] if i < len(mu) else 0
        sl += lam[i] if i < len(lam) else 0
        if sm > sl:
            le = False
        if sm < sl:
            ge = False
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def dominated_by(mu, lam):
    """True iff mu <= lam in dominance (same weight assumed)."""
    sm = sl = 0
    for i in range(max(len(mu), len(lam))):
        sm += mu[i] if i < len(mu) else 0
        sl += lam[i] if i < len(lam) else 0
        if sm > sl:
            return False
    return True


def partitions_of(d, max_len=None, max_part=None):
    """All partitions of d with the given bounds, in decreasing lex order."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        top = min(cap, rest)
        # need rest <= top * slots to finish
        for p in range(top, 0, -1):
            if p * slots < rest:
                break
            for tail in rec(rest - p, p, slots - 1):
                yield (p,) + tail

    if d == 0:
        yield ()
        return
    yield from rec(d, max_part, max_len)


@lru_cache(maxsize=None)
def partitions_leq(d, n):
    """Partitions of d with at most n parts, decreasing lex, as a tuple."""
    return tuple(partitions_of(d, max_len=n))


def _check_kr(k, r):
    if k < 1 or r < 2:
        raise InvalidParameters("need k >= 1 and r >= 2, got k=%d r=%d" % (k, r))
    if gcd(k + 1, r - 1) != 1:
        raise InvalidParameters(
            "k+1=%d and r-1=%d are not coprime" % (k + 1, r - 1))


def beta_value(k, r):
    """The specialization point beta(k, r) = -(r-1)/(k+1)."""
    _check_kr(k, r)
    return Fraction(-(r - 1), k + 1)


def is_admissible(lam, k, r, n):
    """Admissibility: padded to length n, lam[i] - lam[i+k] >= r for all
    1 <= i <= n-k.  Zero parts count, so the empty partition is admissible
    only when n <= k."""
    _check_kr(k, r)
    if n < 1:
        raise InvalidParameters("need n >= 1, got n=%d" % n)
    if len(lam) > n:
        raise InvalidParameters("partition %r longer than n=%d" % (lam, n))
    lp = padded(lam, n)
    return all(lp[i] - lp[i + k] >= r for i in range(n - k))


class AdmissibleFamily:
    """Admissible partitions for fixed (k, r, n), grouped by degree."""

    def __init__(self, k, r, n, dmax, by_degree):
        self.k, self.r, self.n, self.dmax = k, r, n, dmax
        self.by_degree = by_degree

    def character(self):
        """Number of admissible partitions per degree 0..dmax."""
        return [len(self.by_degree.get(d, ())) for d in range(self.dmax + 1)]

    def __contains__(self, lam):
        lam = tuple(lam)
        return lam in self.by_degree.get(sum(lam), ())

    def all_partitions(self):
        for d in range(self.dmax + 1):
            yield from self.by_degree.get(d, ())

    def to_obj(self):
        return {
            "k": self.k, "r": self.r, "n": self.n,
            "character": self.character(),
            "partitions": {str(d): [list(p) for p in self.by_degree.get(d, ())]
                           for d in range(self.dmax + 1)},
        }

    @classmethod
    def from_obj(cls, obj):
        by_degree = {int(d): tuple(tuple(p) for p in ps)
                     for d, ps in obj["partitions"].items()}
        dmax = max(by_degree) if by_degree else 0
        return cls(obj["k"], obj["r"], obj["n"], dmax, by_degree)


def enumerate_admissible(k, r, n, dmax):
    """All admissible partitions of weight <= dmax by pruned descent.

    Parts are chosen left to right under the coupled bound
    lam[p] <= lam[p-k] - r; positions p <= n-k additionally need
    lam[p] >= r * floor((n-p)/k) to leave room below, which prunes the
    search long before the degree budget is spent.
    """
    _check_kr(k, r)
    if n < 1 or dmax < 0:
        raise InvalidParameters("need n >= 1 and dmax >= 0")
    by_degree = {d: [] for d in range(dmax + 1)}
    mins = [r * ((n - p) // k) for p in range(n + 1)]  # mins[p], 1-indexed pos

    def rec(pos, prefix, total):
        if pos > n:
            by_degree[total].append(as_partition(prefix))
            return
        lo = mins[pos]
        hi = prefix[pos - 2] if pos >= 2 else dmax
        if pos > k:
            hi = min(hi, prefix[pos - k - 1] - r)
        hi = min(hi, dmax - total - sum(mins[p] for p in range(pos + 1, n + 1)))
        if lo > hi:
            return
        for v in range(hi, lo - 1, -1):
            rec(pos + 1, prefix + (v,), total + v)

    rec(1, (), 0)
    return AdmissibleFamily(k, r, n, dmax,
                            {d: tuple(ps) for d, ps in by_degree.items()})


class InvalidNode(ValueError):
    """A node position outside the Young diagram or breaking partition shape."""


def add_node(lam, row):
    """Partition with one node added in the given 1-indexed row."""
    lam = tuple(lam)
    if row < 1 or row > len(lam) + 1:
        raise InvalidNode("cannot add a node in row %d of %r" % (row, lam))
    parts = list(lam) + [0] * (row - len(lam))
    parts[row - 1] += 1
    try:
        return as_partition(parts)
    except ValueError:
        raise InvalidNode("adding in row %d of %r breaks shape" % (row, lam))


def remove_node(lam, row):
    """Partition with one node removed from the given 1-indexed row."""
    lam = tuple(lam)
    if row < 1 or row > len(lam):
        raise InvalidNode("no row %d in %r" % (row, lam))
    parts = list(lam)
    parts[row - 1] -= 1
    try:
        return as_partition(parts)
    except ValueError:
        raise InvalidNode("removing from row %d of %r breaks shape" % (row, lam))


def addable_rows(lam, n):
    """Rows where a node can be added keeping a partition of length <= n."""
    out = []
    for row in range(1, min(len(lam) + 1, n) + 1):
        if row == len(lam) + 1 or lam[row - 1] < (lam[row - 2] if row >= 2 else lam[0] + 1):
            out.append(row)
    return out


def removable_rows(lam):
    out = []
    for row in range(1, len(lam) + 1):
        if row == len(lam) or lam[row - 1] > lam[row]:
            out.append(row)
    return out


def node_moves(lam, n):
    """All partitions one node away from lam (length capped at n)."""
    ups = [add_node(lam, row) for row in addable_rows(lam, n)]
    downs = [remove_node(lam, row) for row in removable_rows(lam)]
    return ups + downs


def c_lambda(lam):
    """Denominator-clearing hook product: over nodes (i, j) of lam,
    the product of (conj(lam)[j] - i + 1) * beta + lam[i] - j."""
    conj = conjugate(lam)
    out = BetaPoly((1,))
    for i, li in enumerate(lam, start=1):
        for j in range(1, li + 1):
            out = out * BetaPoly((li - j, conj[j - 1] - i + 1))
    return out


def cs_eigenvalue(lam, n):
    """Sutherland-type eigenvalue: sum over rows of (lam_i + beta(n+1-2i)) lam_i."""
    if len(lam) > n:
        raise ValueError("partition %r longer than n=%d" % (lam, n))
    c0 = sum(li * li for li in lam)
    c1 = sum((n + 1 - 2 * i) * li for i, li in enumerate(lam, start=1))
    return BetaPoly((c0, c1))


def sekiguchi_eigenvalue(lam, n):
    """Coefficients in u (low degree first) of prod_i (u + lam_i + (n-i)beta)."""
    if len(lam) > n:
        raise ValueError("partition %r longer than n=%d" % (lam, n))
    lp = padded(lam, n)
    out = [BetaPoly((1,))]
    for i in range(1, n + 1):
        lin = BetaPoly((lp[i - 1], n - i))
        nxt = [BetaPoly()] * (len(out) + 1)
        for m, c in enumerate(out):
            nxt[m + 1] = nxt[m + 1] + c
            nxt[m] = nxt[m] + c * lin
        out = nxt
    return out


def check_nonvanishing(lam, k, r, n):
    """Machine check that the denominator factors stay nonzero at
    beta0 = beta(k, r) for an admissible lam: pairwise row terms and hook
    terms, plus the shifted pairwise term avoiding 1 below every strict
    drop."""
    if not is_admissible(lam, k, r, n):
        raise InvalidParameters("%r is not (%d,%d,%d)-admissible" % (lam, k, r, n))
    b0 = beta_value(k, r)
    lp = padded(lam, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (j - i) * b0 + lp[i - 1] - lp[j - 1] == 0:
                return False
    conj = conjugate(lam)
    for i, li in enumerate(lam, start=1):
        for j in range(1, li + 1):
            if (conj[j - 1] - i + 1) * b0 + li - j == 0:
                return False
    for j in range(2, n + 1):
        if lp[j - 1] < lp[j - 2]:
            for i in range(1, j):
                if (j - i) * b0 + lp[i - 1] - lp[j - 1] == 1:
                    return False
    return True
