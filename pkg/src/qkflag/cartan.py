"""Root systems, Weyl groups, parabolic cosets and Bruhat order.

Weights are integer vectors in fundamental-weight coordinates: the weight
lambda = sum(lambda_i * omega_i) is the tuple (lambda_1, ..., lambda_r), so
the pairing with the i-th simple coroot is just the i-th coordinate, and the
simple root alpha_j is the j-th column of the Cartan matrix.  Weyl group
elements are canonicalized by their integer action matrix on this lattice;
reduced words are kept as construction certificates only.

Bourbaki numbering of simple roots throughout.
"""

from fractions import Fraction
from functools import lru_cache

# Rank cap for root-system construction and order cap for Weyl enumeration.
# E8's Weyl group (|W| ~ 7e8) is far beyond desk scale; fail fast instead.
MAX_RANK = 8
MAX_WEYL_ORDER = 2_000_000

_VALID_FAMILIES = "ABCDEFG"


class CartanError(ValueError):
    """Invalid (family, rank) pair or parabolic data."""


def _min_rank(family):
    return {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}[family]


def _max_rank(family):
    return {"A": MAX_RANK, "B": MAX_RANK, "C": MAX_RANK, "D": MAX_RANK,
            "E": 8, "F": 4, "G": 2}[family]


def _cartan_matrix(family, n):
    """Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>, 0-based."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B" and n >= 2:      # alpha_n short
            c[n - 1][n - 2] = -2
        if family == "C" and n >= 2:      # alpha_n long
            c[n - 2][n - 1] = -2
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, cij=-1, cji=-2)        # alpha_3, alpha_4 short
        link(2, 3)
    elif family == "G":
        link(0, 1, cij=-3, cji=-1)        # alpha_1 short
    return tuple(tuple(row) for row in c)


def _symmetrizer(cartan):
    """Minimal positive rationals d with d_i*C[i][j] = d_j*C[j][i].

    Works per connected component of the Dynkin graph; values normalized so
    the minimum in each component is 1.
    """
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    comp.append(j)
                    stack.append(j)
        lo = min(d[i] for i in comp)
        for i in comp:
            d[i] /= lo
    return tuple(d)


class RootSystem:
    """Finite root system of a given family and rank.

    positive_roots and simple_roots are in fundamental-weight coordinates;
    root_coords maps each positive root back to its simple-root coordinates.
    """

    def __init__(self, family, rank):
        self.family = family
        self.rank = rank
        self.cartan_matrix = _cartan_matrix(family, rank)
        self.simple_roots = tuple(
            tuple(self.cartan_matrix[i][j] for i in range(rank))
            for j in range(rank)
        )
        self._symmetrizer_d = _symmetrizer(self.cartan_matrix)
        self._build_positive_roots()
        self.dynkin_adjacency = frozenset(
            (i + 1, j + 1)
            for i in range(rank) for j in range(rank)
            if i != j and self.cartan_matrix[i][j] != 0
        )
        self._reflections = tuple(self._reflection_matrix(i) for i in range(rank))
        self._weyl = None

    def _reflection_matrix(self, i):
        # s_i(lambda) = lambda - lambda_i * alpha_i
        r = self.rank
        alpha = self.simple_roots[i]
        return tuple(
            tuple((1 if k == j else 0) - (alpha[k] if j == i else 0)
                  for j in range(r))
            for k in range(r)
        )

    def _build_positive_roots(self):
        n = self.rank
        c = self.cartan_matrix
        by_height = {1: [tuple(1 if j == i else 0 for j in range(n))
                         for i in range(n)]}
        seen = set(by_height[1])
        h = 1
        while by_height.get(h):
            nxt = []
            for b in by_height[h]:
                for i in range(n):
                    pairing = sum(c[i][j] * b[j] for j in range(n))
                    p = 0
                    cur = list(b)
                    while True:
                        cur[i] -= 1
                        if cur[i] < 0 or tuple(cur) not in seen:
                            break
                        p += 1
                    if p - pairing >= 1:
                        up = list(b)
                        up[i] += 1
                        t = tuple(up)
                        if t not in seen:
                            seen.add(t)
                            nxt.append(t)
            h += 1
            if nxt:
                by_height[h] = nxt
        roots_rc = [b for hh in sorted(by_height) for b in by_height[hh]]
        self._root_coords = {}
        pos = []
        for b in roots_rc:
            fw = tuple(sum(self.cartan_matrix[i][j] * b[j] for j in range(n))
                       for i in range(n))
            pos.append(fw)
            self._root_coords[fw] = b
        self.positive_roots = tuple(pos)
        self._positive_set = frozenset(pos)
        d = self._symmetrizer_d
        norms = {}
        for fw, b in self._root_coords.items():
            norms[fw] = sum(b[i] * d[i] * c[i][j] * b[j]
                            for i in range(n) for j in range(n))
        top = max(norms.values())
        self.lengths = {fw: ("long" if norms[fw] == top else "short")
                        for fw in pos}

    def is_positive_root(self, v):
        return v in self._positive_set

    def is_negative_root(self, v):
        return tuple(-x for x in v) in self._positive_set

    def num_positive_roots(self):
        return len(self.positive_roots)

    def weyl_order(self):
        import math
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family in ("B", "C"):
            return 2 ** n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == "G":
            return 12
        if self.family == "F":
            return 1152
        return {6: 51840, 7: 2903040, 8: 696729600}[n]

    def adjacent(self, i, j):
        return (i, j) in self.dynkin_adjacency

    def parabolic_positive_roots(self, indices):
        """Positive roots supported on the simple roots in `indices` (1-based)."""
        idx0 = {i - 1 for i in indices}
        return tuple(fw for fw, b in self._root_coords.items()
                     if all(b[j] == 0 or j in idx0 for j in range(self.rank)))

    def __repr__(self):
        return "RootSystem(%s%d)" % (self.family, self.rank)


@lru_cache(maxsize=None)
def build_root_system(family, rank):
    """Construct (and cache) the root system of the given finite type."""
    family = str(family).upper()
    rank = int(rank)
    if family not in _VALID_FAMILIES:
        raise CartanError("unknown family %r; expected one of A-G" % (family,))
    if rank > MAX_RANK:
        raise CartanError(
            "rank %d exceeds the configured cap %d" % (rank, MAX_RANK))
    if not (_min_rank(family) <= rank <= _max_rank(family)):
        raise CartanError("invalid type %s%d" % (family, rank))
    return RootSystem(family, rank)


def parse_root_system(spec):
    """Parse a spec string like "A3" or "C2"."""
    spec = spec.strip()
    if len(spec) < 2 or not spec[1:].isdigit():
        raise CartanError("malformed root-system spec %r" % (spec,))
    return build_root_system(spec[0].upper(), int(spec[1:]))


def parse_parabolic(text, rank):
    """Parse comma-separated 1-based simple-root indices ("" means empty)."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        indices = frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise CartanError("malformed parabolic spec %r" % (text,))
    bad = [i for i in indices if not 1 <= i <= rank]
    if bad:
        raise CartanError("parabolic indices %s out of range 1..%d" % (bad, rank))
    return indices


def _mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt)
                 for ra in a)


def _mat_apply(m, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


class WeylElement:
    """Weyl group element, canonicalized by its action matrix on weights."""

    __slots__ = ("group", "matrix", "word", "length")

    def __init__(self, group, matrix, word):
        self.group = group
        self.matrix = matrix
        self.word = word
        self.length = len(word)

    def apply(self, weight):
        return _mat_apply(self.matrix, weight)

    def __mul__(self, other):
        return self.group.element(_mat_mul(self.matrix, other.matrix))

    def inverse(self):
        m = self.group.rs._reflections
        inv = self.group.identity.matrix
        for i in reversed(self.word):
            inv = _mat_mul(inv, m[i - 1])
        return self.group.element(inv)

    def times_simple(self, i):
        """Right multiplication by s_i (1-based)."""
        return self.group.element(
            _mat_mul(self.matrix, self.group.rs._reflections[i - 1]))

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.matrix == other.matrix
                and self.group is other.group)

    def __hash__(self):
        return hash(self.matrix)

    def __lt__(self, other):
        return (self.length, self.word) < (other.length, other.word)

    def label(self):
        return "e" if not self.word else ".".join("s%d" % i for i in self.word)

    def __repr__(self):
        return "WeylElement(%s)" % self.label()


class WeylGroup:
    """Complete Weyl group, enumerated breadth-first by length."""

    def __init__(self, rs):
        order = rs.weyl_order()
        if order > MAX_WEYL_ORDER:
            raise CartanError(
                "Weyl group of %s%d has order %d, beyond the configured cap %d"
                % (rs.family, rs.rank, order, MAX_WEYL_ORDER))
        self.rs = rs
        n = rs.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n))
                      for i in range(n))
        self.identity = WeylElement(self, ident, ())
        self._by_matrix = {ident: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in sorted(frontier):
                for i in range(1, n + 1):
                    m = _mat_mul(w.matrix, rs._reflections[i - 1])
                    if m not in self._by_matrix:
                        el = WeylElement(self, m, w.word + (i,))
                        self._by_matrix[m] = el
                        nxt.append(el)
            frontier = nxt
        self.elements = tuple(sorted(self._by_matrix.values()))
        assert len(self.elements) == order
        self.simple = tuple(self.element(rs._reflections[i]) for i in range(n))
        self.longest = self.elements[-1]
        self._bruhat_memo = {}

    def element(self, matrix):
        return self._by_matrix[matrix]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def weyl_group(rs):
    if rs._weyl is None:
        rs._weyl = WeylGroup(rs)
    return rs._weyl


def weyl_enumerate(rs):
    """All Weyl group elements, sorted by (length, reduced word)."""
    return list(weyl_group(rs).elements)


def inversion_count(w):
    """Number of positive roots sent to negative roots by w."""
    rs = w.group.rs
    return sum(1 for beta in rs.positive_roots
               if rs.is_negative_root(w.apply(beta)))


def min_coset_rep(w, delta_p):
    """The unique shortest element of the coset w*W_P."""
    rs = w.group.rs
    indices = sorted(delta_p)
    while True:
        for i in indices:
            if rs.is_negative_root(w.apply(rs.simple_roots[i - 1])):
                w = w.times_simple(i)
                break
        else:
            return w


def bruhat_leq(u, v):
    """Bruhat order via the lifting property (subword characterization)."""
    if u.group is not v.group:
        raise CartanError("Bruhat comparison across different Weyl groups")
    memo = u.group._bruhat_memo
    def rec(a, b):
        if a.length > b.length:
            return False
        if a.length == 0:
            return True
        if a.length == b.length:
            return a == b
        key = (a.matrix, b.matrix)
        got = memo.get(key)
        if got is None:
            i = b.word[-1]
            bs = b.times_simple(i)
            as_ = a.times_simple(i)
            if as_.length < a.length:
                got = rec(as_, bs)
            else:
                got = rec(a, bs)
            memo[key] = got
        return got
    return rec(u, v)


class FlagVariety:
    """Generalized flag variety G/P with its minimal coset representatives."""

    def __init__(self, rs, delta_p):
        delta_p = frozenset(delta_p)
        bad = [i for i in delta_p if not 1 <= i <= rs.rank]
        if bad:
            raise CartanError("parabolic indices %s out of range" % (bad,))
        self.root_system = rs
        self.delta_p = delta_p
        self.group = weyl_group(rs)
        simples = [rs.simple_roots[i - 1] for i in sorted(delta_p)]
        self.coset_reps = tuple(
            w for w in self.group.elements
            if all(rs.is_positive_root(w.apply(a)) for a in simples))
        parab = rs.parabolic_positive_roots(delta_p)
        self.dimension = rs.num_positive_roots() - len(parab)
        self._parabolic_set = frozenset(parab)
        self.complement_roots = tuple(b for b in rs.positive_roots
                                      if b not in self._parabolic_set)
        self._rep_set = frozenset(w.matrix for w in self.coset_reps)
        self.key = (rs.family, rs.rank, tuple(sorted(delta_p)))

    def is_rep(self, w):
        return w.matrix in self._rep_set

    def to_rep(self, w):
        return min_coset_rep(w, self.delta_p)

    def tangent_characters(self, w):
        """Weights of the tangent space at the fixed point w, w in W^P."""
        return tuple(tuple(-x for x in w.apply(beta))
                     for beta in self.complement_roots)

    def degree_indices(self):
        """Simple-root indices of the curve-class basis (Delta minus Delta_P)."""
        return tuple(i for i in range(1, self.root_system.rank + 1)
                     if i not in self.delta_p)

    def __eq__(self, other):
        return isinstance(other, FlagVariety) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        dp = ",".join(str(i) for i in sorted(self.delta_p))
        return "FlagVariety(%s%d; {%s})" % (
            self.root_system.family, self.root_system.rank, dp)


@lru_cache(maxsize=None)
def _flag_cache(family, rank, dp):
    return FlagVariety(build_root_system(family, rank), frozenset(dp))


def flag_variety(rs, delta_p=()):
    """Construct (and cache) the flag variety G/P for Delta_P = delta_p."""
    return _flag_cache(rs.family, rs.rank, tuple(sorted(set(delta_p))))
