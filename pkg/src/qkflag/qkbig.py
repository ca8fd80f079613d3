"""Big quantum K-theory modulo degrees beyond line degrees.

The three-point form <<F1,F2,F3>> is assembled from Gromov-Witten
invariants of degree zero (classical Euler characteristics) and of the
line degrees (classical reductions on the moduli M0), summed against
t^h/h! over all insertion multisets h of total size at most the truncation
order.  Everything is evaluated at t_0 = 0; the retained Novikov monomials
are 1 and the single line-degree variables Q_alpha.  The quantum product
is the solution of the Gram system of the quantum metric, obtained by a
fixed-point iteration whose constant term is inverted exactly.
"""

from fractions import Fraction
from math import factorial

from .algebra import (LaurentPoly, SeriesContext, TSeries, RationalCoeffs,
                      CharacterCoeffs, ts_solve_linear)
from .cartan import WeylElement
from .kgkm import (GKMClassK, schubert_class_k, schubert_classes_k, unit_k,
                   euler_char_k, expand_schubert_k)
from .lines import line_degrees


def _qk_cache(X):
    if not hasattr(X, "_qk_cache"):
        X._qk_cache = {}
    return X._qk_cache


def tvariable_elements(X):
    """Basis elements dual to the t variables: W^P without the identity."""
    return tuple(w for w in X.coset_reps if w.length > 0)


def series_context(X, order, equivariant=True):
    cache = _qk_cache(X)
    key = ("ctx", order, bool(equivariant))
    ctx = cache.get(key)
    if ctx is None:
        tvars = tuple(w.label() for w in tvariable_elements(X))
        novikovs = tuple(str(L.alpha) for L in line_degrees(X))
        ring = (CharacterCoeffs(X.root_system.rank) if equivariant
                else RationalCoeffs)
        ctx = SeriesContext(tvars, novikovs, order, ring)
        cache[key] = ctx
    return ctx


def _as_class(X, f):
    if isinstance(f, WeylElement):
        return schubert_class_k(X, f)
    if isinstance(f, GKMClassK):
        if f.space != X:
            raise ValueError("insertion does not live on %r" % (X,))
        return f
    raise TypeError("insertions must be Weyl elements of W^P or K classes")


def _space_pairing(target):
    """Classical pairing chi(O^a * O^x) over the Schubert basis of a space."""
    if not hasattr(target, "_qk_pairing"):
        cl = schubert_classes_k(target)
        reps = target.coset_reps
        kappa = {}
        for i, a in enumerate(reps):
            for x in reps[i:]:
                v = euler_char_k(target, cl[a] * cl[x])
                if not v.is_zero():
                    kappa[(a, x)] = v
                    kappa[(x, a)] = v
        target._qk_pairing = kappa
    return target._qk_pairing


def _mult_matrix(target, g):
    """Schubert-basis matrix of multiplication by the class g: column x is
    the expansion of g * O^x."""
    cl = schubert_classes_k(target)
    return {x: expand_schubert_k(g * cl[x]).coeffs for x in target.coset_reps}


def _degree_data(X, degree_key):
    if degree_key is None:
        return X, None
    L = next(l for l in line_degrees(X) if l.alpha == degree_key)
    return L.m0, L


def _insertion_vectors(X, degree_key, order):
    """Per h with |h| <= order: the vector z_h[a] = sum_x kappa[a,x] P_h[x],
    where P_h is the Schubert expansion of the product of transferred basis
    classes prescribed by h.  With these, any invariant with extra
    insertions O^h is <expansion of the fixed part, z_h>."""
    cache = _qk_cache(X)
    key = ("vectors", degree_key, order)
    got = cache.get(key)
    if got is not None:
        return got
    basis = tvariable_elements(X)
    target, L = _degree_data(X, degree_key)
    if L is None:
        classes = [schubert_classes_k(X)[w] for w in basis]
    else:
        classes = [L.schubert_transfer(w, "K") for w in basis]
    mult = [_mult_matrix(target, g) for g in classes]
    kappa = _space_pairing(target)
    reps = target.coset_reps
    out = []

    def pair_with_kappa(vec):
        z = {}
        for a in reps:
            acc = None
            for x, c in vec.items():
                k = kappa.get((a, x))
                if k is not None:
                    acc = c * k if acc is None else acc + c * k
            if acc is not None and not acc.is_zero():
                z[a] = acc
        return z

    def matvec(m, vec):
        nv = {}
        for x, c in vec.items():
            for y, g in m[x].items():
                s = nv.get(y)
                nv[y] = c * g if s is None else s + c * g
        return {y: c for y, c in nv.items() if not c.is_zero()}

    def rec(start, h, vec, deg):
        out.append((tuple(h), pair_with_kappa(vec)))
        if deg == order:
            return
        for j in range(start, len(basis)):
            h[j] += 1
            rec(j, h, matvec(mult[j], vec), deg + 1)
            h[j] -= 1

    unit_vec = {target.coset_reps[0]: LaurentPoly.one(X.root_system.rank)}
    rec(0, [0] * len(basis), unit_vec, 0)
    cache[key] = out
    return out


def _transfers_of(X, degree_key, f):
    """Transfer an insertion to the target space of the given degree."""
    if degree_key is None:
        return _as_class(X, f)
    target, L = _degree_data(X, degree_key)
    if isinstance(f, WeylElement):
        if f.length == 0:
            return unit_k(L.m0)
        return L.schubert_transfer(f, "K")
    from .lines import qp_transfer
    return qp_transfer(L, f)


def _basis_triple_series(X, triple, order):
    """<<O^u, O^v, O^w>> at t_0 = 0 over K_T(pt), cached per sorted triple."""
    cache = _qk_cache(X)
    key = ("triple", triple, order)
    got = cache.get(key)
    if got is not None:
        return got
    ctx = series_context(X, order, equivariant=True)
    terms = {}
    degree_keys = [None] + [L.alpha for L in line_degrees(X)]
    for qidx, dk in enumerate(degree_keys, start=-1):
        target, _ = _degree_data(X, dk)
        base = unit_k(target)
        for w in triple:
            base = base * _transfers_of(X, dk, w)
        exp_f = expand_schubert_k(base).coeffs
        for h, z in _insertion_vectors(X, dk, order):
            val = None
            for a, c in exp_f.items():
                za = z.get(a)
                if za is not None:
                    val = c * za if val is None else val + c * za
            if val is None or val.is_zero():
                continue
            hfact = 1
            for k in h:
                hfact *= factorial(k)
            terms[(qidx, h)] = val * Fraction(1, hfact)
    series = TSeries(ctx, terms)
    cache[key] = series
    return series


def _triple_key(X, elements):
    return tuple(sorted(elements))


def _specialize_series(series, ctx):
    """Move an equivariant series into the requested coefficient ring."""
    if ctx.ring is series.ctx.ring or ctx.same(series.ctx):
        return series
    out = {}
    for k, c in series.terms.items():
        v = c.at_one()
        if v:
            out[k] = v
    return TSeries(ctx, out)


def three_point_form(X, f1, f2, f3, order, equivariant=True):
    """<<F1, F2, F3>> summed over degree zero and the line degrees of X,
    over all insertion multisets of total t-degree up to the truncation
    order, evaluated at t_0 = 0."""
    ctx = series_context(X, order, equivariant)
    expansions = []
    for f in (f1, f2, f3):
        if isinstance(f, WeylElement):
            expansions.append({f: LaurentPoly.one(X.root_system.rank)})
        else:
            expansions.append(expand_schubert_k(_as_class(X, f)).coeffs)
    total = ctx.zero()
    for u, cu in expansions[0].items():
        for v, cv in expansions[1].items():
            for w, cw in expansions[2].items():
                base = _basis_triple_series(X, _triple_key(X, (u, v, w)),
                                            order)
                series = _specialize_series(base, ctx)
                coeff = cu * cv * cw
                if not equivariant:
                    coeff = coeff.at_one()
                total = total + series.scale(coeff)
    return total


def potential_g0(X, order, equivariant=True):
    """The quantum potential <<1,1,1>> at t_0 = 0."""
    e = X.group.identity
    return three_point_form(X, e, e, e, order, equivariant)


def quantum_metric(X, order, equivariant=True):
    """Gram matrix (<<O^u, O^v, 1>>) over the Schubert basis W^P."""
    cache = _qk_cache(X)
    key = ("metric", order, bool(equivariant))
    got = cache.get(key)
    if got is not None:
        return got
    reps = X.coset_reps
    n = len(reps)
    m = [[None] * n for _ in range(n)]
    e = X.group.identity
    for i in range(n):
        for j in range(i, n):
            s = three_point_form(X, reps[i], reps[j], e, order, equivariant)
            m[i][j] = s
            m[j][i] = s
    cache[key] = m
    return m


class QKElement:
    """Element of the big quantum K-theory module: sum c_w(Q, t) O^w."""

    __slots__ = ("space", "coeffs", "ctx")

    def __init__(self, space, coeffs, ctx):
        self.space = space
        self.coeffs = coeffs
        self.ctx = ctx

    def coefficient(self, w):
        return self.coeffs.get(w, self.ctx.zero())

    def at_t_zero(self):
        return QKElement(self.space,
                         {w: s.at_t_zero() for w, s in self.coeffs.items()},
                         self.ctx)

    def __eq__(self, other):
        return (isinstance(other, QKElement) and self.space == other.space
                and all(self.coefficient(w) == other.coefficient(w)
                        for w in self.space.coset_reps))

    def __repr__(self):
        body = "; ".join("O^{%s}: %s" % (w.label(), s.render())
                         for w, s in sorted(self.coeffs.items(),
                                            key=lambda kv: kv[0])
                         if not s.is_zero())
        return "QKElement(%s)" % (body or "0")


def quantum_product(X, f1, f2, order, equivariant=True):
    """F1 * F2, the unique class with <<F1*F2, O^v>> = <<F1,F2,O^v>> for all
    v, independent of t_0 by construction."""
    reps = X.coset_reps
    m = quantum_metric(X, order, equivariant)
    b = [three_point_form(X, f1, f2, v, order, equivariant) for v in reps]
    c = ts_solve_linear(m, b)
    ctx = series_context(X, order, equivariant)
    return QKElement(X, dict(zip(reps, c)), ctx)


def small_qk_product(X, f1, f2, order=2, equivariant=True):
    """The product in the small quantum K-theory ring: all t_w set to 0."""
    return quantum_product(X, f1, f2, order, equivariant).at_t_zero()


def star_extend(X, element, f, order, equivariant=True):
    """Extend * TSeries-bilinearly: (sum c_x O^x) * F = sum c_x (O^x * F)."""
    ctx = series_context(X, order, equivariant)
    out = {w: ctx.zero() for w in X.coset_reps}
    for x, cx in element.coeffs.items():
        if cx.is_zero():
            continue
        prod = quantum_product(X, x, f, order, equivariant)
        for w in X.coset_reps:
            out[w] = out[w] + cx * prod.coefficient(w)
    return QKElement(X, out, ctx)
