"""Equivariant cohomology of flag varieties in the fixed-point model.

Mirrors the K-theory module with fundamental classes [X^w] of cohomological
degree 2*length(w).  Restrictions are ordinary polynomials in the weight
generators z_i = omega_i; the non-equivariant value of an integral is its
degree-zero part.
"""

from .algebra import LaurentPoly
from .cartan import min_coset_rep
from . import gkm_core
from .gkm_core import (H_OPS, GKMClass, SpaceMismatchError,
                       schubert_class, expand_in_schubert_basis,
                       assemble_from_basis, pullback_along_projection,
                       pushforward_to_point, _check_nested)


class GKMClassH(GKMClass):
    ops = H_OPS


class SchubertExpansionH:
    __slots__ = ("space", "coeffs")

    def __init__(self, space, coeffs):
        self.space = space
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero()}

    def assemble(self):
        return assemble_from_basis(GKMClassH, self.space, self.coeffs)

    def __repr__(self):
        body = " + ".join("(%s)*[X^{%s}]" % (c.render("z"), w.label())
                          for w, c in sorted(self.coeffs.items(),
                                             key=lambda kv: kv[0]))
        return "SchubertExpansionH(%s)" % (body or "0")


def unit_h(X):
    one = LaurentPoly.one(X.root_system.rank)
    return GKMClassH(X, {w: one for w in X.coset_reps})


def schubert_class_h(X, w):
    """The fundamental class [X^w] of the opposite Schubert variety."""
    return schubert_class(GKMClassH, X, w)


def schubert_classes_h(X):
    if not hasattr(X, "_h_classes"):
        X._h_classes = {w: schubert_class_h(X, w) for w in X.coset_reps}
    return X._h_classes


def h_multiply(f, g):
    return f * g


def integrate_h(X, f):
    """Integral over X by localization; a polynomial in the equivariant
    parameters whose degree-zero part is the non-equivariant value."""
    if f.space != X:
        raise SpaceMismatchError("class does not live on %r" % (X,))
    return pushforward_to_point(X, f.restrictions, H_OPS)


def pullback_h(f, target):
    return pullback_along_projection(f, target)


def pushforward_h(f, target):
    """Gysin pushforward along f.space -> target.

    On the Schubert basis [X^w] maps to [X^{w'}], w' the minimal coset
    representative, when the length drops by exactly the fiber dimension;
    otherwise the image has smaller dimension and the class dies.
    """
    source = f.space
    _check_nested(source, target)
    reldim = source.dimension - target.dimension
    coeffs = expand_in_schubert_basis(f)
    out = {}
    for w, c in coeffs.items():
        w2 = min_coset_rep(w, target.delta_p)
        if w2.length == w.length - reldim:
            out[w2] = out.get(
                w2, LaurentPoly.zero(target.root_system.rank)) + c
    return assemble_from_basis(GKMClassH, target, out)


def expand_schubert_h(f):
    return SchubertExpansionH(f.space, expand_in_schubert_basis(f))


def assemble_h(X, coeffs):
    return assemble_from_basis(GKMClassH, X, dict(coeffs))


def specialize_nonequivariant_h(x):
    """Degree-zero part (set every equivariant parameter to zero)."""
    if isinstance(x, LaurentPoly):
        return x.constant_term()
    if isinstance(x, SchubertExpansionH):
        return {w: c.constant_term() for w, c in x.coeffs.items()}
    raise TypeError("cannot specialize %r" % (x,))


def gkm_compatible_h(f):
    return not gkm_core.gkm_compatibility_violations(f)
