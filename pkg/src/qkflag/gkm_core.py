"""Shared fixed-point (GKM) machinery for the two equivariant theories.

A class on X = G/P is a tuple of restrictions indexed by the minimal coset
representatives W^P.  Schubert classes are generated on G/B by a
divided-difference recursion from the point class at the longest element,
then descended to G/P by restricting the table to W^P (the G/B classes of
minimal representatives are constant on W_P-cosets).  Push-forwards to a
point are Atiyah-Bott localization sums, brought to the common denominator
indexed by all positive roots and cleared by exact division.
"""

from fractions import Fraction

from .algebra import (LaurentPoly, LocalizationFraction, lp_exact_div,
                      ExactDivisionError)
from .cartan import weyl_group, min_coset_rep
from . import cache


class SpaceMismatchError(ValueError):
    """Classes from different flag varieties were combined."""


class NotMinimalError(ValueError):
    """A Weyl element outside W^P was used as a Schubert label."""


class KTheoryOps:
    """Structure-sheaf classes; restrictions are Laurent polynomials."""

    name = "K"

    @staticmethod
    def point_seed(rs):
        p = LaurentPoly.one(rs.rank)
        for beta in rs.positive_roots:
            p = p * LaurentPoly.one_minus_character(beta)
        return p

    @staticmethod
    def descent_step(value_w, value_ws, lam, rank):
        """Isobaric divided difference at a point: lam = w(alpha_i)."""
        char = LaurentPoly.character(lam)
        num = value_w - char * value_ws
        return lp_exact_div(num, LaurentPoly.one(rank) - char)

    @staticmethod
    def local_factor(mu, rs):
        """Normalize the tangent factor (1 - e^{-mu}) to a positive root.

        Returns (gamma, unit) with 1/(1 - e^{-mu}) = unit/(1 - e^{-gamma}).
        """
        if rs.is_positive_root(mu):
            return mu, LaurentPoly.one(rs.rank)
        gamma = tuple(-x for x in mu)
        return gamma, LaurentPoly.character(mu) * Fraction(-1)

    @staticmethod
    def denominator_factor(gamma, rank):
        return LaurentPoly.one_minus_character(gamma)

    @staticmethod
    def edge_divisor(lam, rank):
        """GKM compatibility divisor along the edge of character lam."""
        return LaurentPoly.one_minus_character(lam)

    @staticmethod
    def nonequivariant(poly):
        return poly.at_one()


class CohomologyOps:
    """Fundamental classes; restrictions are polynomials in the weight basis."""

    name = "H"

    @staticmethod
    def point_seed(rs):
        p = LaurentPoly.one(rs.rank)
        for beta in rs.positive_roots:
            p = p * LaurentPoly.linear_form(beta)
        return p

    @staticmethod
    def descent_step(value_w, value_ws, lam, rank):
        num = value_w - value_ws
        den = LaurentPoly.linear_form(tuple(-x for x in lam))
        return lp_exact_div(num, den)

    @staticmethod
    def local_factor(mu, rs):
        if rs.is_positive_root(mu):
            return mu, LaurentPoly.one(rs.rank)
        return tuple(-x for x in mu), LaurentPoly.constant(rs.rank, -1)

    @staticmethod
    def denominator_factor(gamma, rank):
        return LaurentPoly.linear_form(gamma)

    @staticmethod
    def edge_divisor(lam, rank):
        return LaurentPoly.linear_form(lam)

    @staticmethod
    def nonequivariant(poly):
        return poly.constant_term()


K_OPS = KTheoryOps()
H_OPS = CohomologyOps()


def _complete_table(rs, ops):
    """Schubert restriction table on G/B: {w: {v: restriction}}."""
    loaded = cache.load_table(rs, (), ops.name)
    if loaded is not None:
        return loaded
    W = weyl_group(rs)
    rank = rs.rank
    zero = LaurentPoly.zero(rank)
    table = {}
    w0 = W.longest
    table[w0] = {v: (ops.point_seed(rs) if v == w0 else zero) for v in W}
    for w in sorted(W.elements, key=lambda u: (-u.length, u.word)):
        if w == w0:
            continue
        i = next(i for i in range(1, rank + 1)
                 if w.times_simple(i).length > w.length)
        psi = table[w.times_simple(i)]
        alpha = rs.simple_roots[i - 1]
        new = {}
        for v in W:
            vs = v.times_simple(i)
            lam = v.apply(alpha)
            new[v] = ops.descent_step(psi[v], psi[vs], lam, rank)
        table[w] = new
    cache.store_table(rs, (), ops.name, table)
    return table


def complete_k_table(rs):
    if not hasattr(rs, "_gkm_tables"):
        rs._gkm_tables = {}
    if "K" not in rs._gkm_tables:
        rs._gkm_tables["K"] = _complete_table(rs, K_OPS)
    return rs._gkm_tables["K"]


def complete_h_table(rs):
    if not hasattr(rs, "_gkm_tables"):
        rs._gkm_tables = {}
    if "H" not in rs._gkm_tables:
        rs._gkm_tables["H"] = _complete_table(rs, H_OPS)
    return rs._gkm_tables["H"]


def space_table(X, ops):
    """Restriction of the G/B table to the fixed points W^P of X."""
    if not hasattr(X, "_space_tables"):
        X._space_tables = {}
    got = X._space_tables.get(ops.name)
    if got is not None:
        return got
    if X.delta_p:
        table = cache.load_table(X.root_system, tuple(sorted(X.delta_p)),
                                 ops.name)
        if table is None:
            full = (complete_k_table if ops.name == "K"
                    else complete_h_table)(X.root_system)
            table = {w: {v: full[w][v] for v in X.coset_reps}
                     for w in X.coset_reps}
            cache.store_table(X.root_system, tuple(sorted(X.delta_p)),
                              ops.name, table)
    else:
        table = (complete_k_table if ops.name == "K"
                 else complete_h_table)(X.root_system)
    X._space_tables[ops.name] = table
    return table


def _localization_data(X, ops):
    """Per-fixed-point multipliers and the common denominator factors.

    chi(f) = (sum_w f|_w * c_w) / prod_{gamma > 0} factor(gamma): each local
    tangent denominator is a unit times a subproduct of the common one.
    """
    if not hasattr(X, "_loc_data"):
        X._loc_data = {}
    got = X._loc_data.get(ops.name)
    if got is not None:
        return got
    rs = X.root_system
    rank = rs.rank
    cw = {}
    for w in X.coset_reps:
        unit = LaurentPoly.one(rank)
        present = set()
        for mu in X.tangent_characters(w):
            gamma, u = ops.local_factor(mu, rs)
            unit = unit * u
            present.add(gamma)
        comp = LaurentPoly.one(rank)
        for gamma in rs.positive_roots:
            if gamma not in present:
                comp = comp * ops.denominator_factor(gamma, rank)
        cw[w] = unit * comp
    factors = [ops.denominator_factor(g, rank) for g in rs.positive_roots]
    X._loc_data[ops.name] = (cw, factors)
    return cw, factors


def pushforward_to_point(X, restrictions, ops):
    """Localization sum over the fixed points, reduced by exact division."""
    cw, factors = _localization_data(X, ops)
    total = LaurentPoly.zero(X.root_system.rank)
    for w in X.coset_reps:
        r = restrictions.get(w)
        if r is not None and not r.is_zero():
            total = total + r * cw[w]
    for f in factors:
        total = lp_exact_div(total, f)
    return total


class GKMClass:
    """An equivariant class as its tuple of fixed-point restrictions."""

    __slots__ = ("space", "restrictions")
    ops = None

    def __init__(self, space, restrictions):
        self.space = space
        self.restrictions = restrictions

    def restriction(self, w):
        return self.restrictions[w]

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            rank = self.space.root_system.rank
            if isinstance(other, LaurentPoly):
                c = other
            else:
                c = LaurentPoly.constant(rank, other)
            return type(self)(self.space,
                              {w: c for w in self.space.coset_reps})
        if not isinstance(other, type(self)):
            raise SpaceMismatchError(
                "cannot combine %s with %r" % (type(self).__name__, other))
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatchError("classes live on different flag varieties")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return type(self)(self.space,
                          {w: self.restrictions[w] + other.restrictions[w]
                           for w in self.space.coset_reps})

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.space,
                          {w: -v for w, v in self.restrictions.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return type(self)(self.space,
                          {w: self.restrictions[w] * other.restrictions[w]
                           for w in self.space.coset_reps})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, type(self)) and self.space == other.space
                and all(self.restrictions[w] == other.restrictions[w]
                        for w in self.space.coset_reps))

    def is_zero(self):
        return all(v.is_zero() for v in self.restrictions.values())

    def __repr__(self):
        rows = ", ".join("%s: %s" % (w.label(), p.render())
                         for w, p in sorted(
                             self.restrictions.items(), key=lambda kv: kv[0])
                         if not p.is_zero())
        return "%s(%s | %s)" % (type(self).__name__, self.space, rows or "0")


def schubert_class(cls, X, w):
    table = space_table(X, cls.ops)
    if w not in table:
        raise NotMinimalError(
            "%s is not a minimal coset representative of %r" % (w.label(), X))
    return cls(X, dict(table[w]))


def expand_in_schubert_basis(f):
    """Triangular solve: coefficients c_w with f = sum c_w O^w (exact)."""
    X = f.space
    table = space_table(X, f.ops)
    residual = dict(f.restrictions)
    coeffs = {}
    for w in X.coset_reps:
        r = residual[w]
        if r.is_zero():
            continue
        c = lp_exact_div(r, table[w][w])
        coeffs[w] = c
        for v in X.coset_reps:
            tv = table[w][v]
            if not tv.is_zero():
                residual[v] = residual[v] - c * tv
    if any(not residual[v].is_zero() for v in X.coset_reps):
        raise ExactDivisionError("Schubert expansion left a nonzero residual")
    return coeffs


def assemble_from_basis(cls, X, coeffs):
    table = space_table(X, cls.ops)
    rank = X.root_system.rank
    out = {v: LaurentPoly.zero(rank) for v in X.coset_reps}
    for w, c in coeffs.items():
        if c.is_zero() if isinstance(c, LaurentPoly) else not c:
            continue
        for v in X.coset_reps:
            tv = table[w][v]
            if not tv.is_zero():
                out[v] = out[v] + c * tv
    return cls(X, out)


def _check_nested(source, target):
    if source.root_system is not target.root_system:
        raise SpaceMismatchError("projections need a common root system")
    if not source.delta_p <= target.delta_p:
        raise SpaceMismatchError(
            "no projection %r -> %r: parabolics are not nested"
            % (source, target))


def pullback_along_projection(f, target):
    """Pull back along G/Q -> G/P (Delta_Q inside Delta_P); target is G/Q."""
    _check_nested(target, f.space)
    out = {v: f.restrictions[min_coset_rep(v, f.space.delta_p)]
           for v in target.coset_reps}
    return type(f)(target, out)


def gkm_compatibility_violations(f):
    """GKM divisibility failures of f, testable on a complete flag variety."""
    X = f.space
    if X.delta_p:
        raise ValueError("GKM edge test is run on G/B")
    rs = X.root_system
    bad = []
    for w in X.coset_reps:
        for i in range(1, rs.rank + 1):
            ws = w.times_simple(i)
            lam = w.apply(rs.simple_roots[i - 1])
            diff = f.restrictions[w] - f.restrictions[ws]
            if diff.is_zero():
                continue
            try:
                lp_exact_div(diff, f.ops.edge_divisor(lam, rs.rank))
            except ExactDivisionError:
                bad.append((w, i))
    return bad
