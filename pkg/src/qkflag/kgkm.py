"""Equivariant K-theory of flag varieties in the fixed-point model.

Schubert classes O^w are structure sheaves of opposite Schubert varieties;
the identity class is O^{id} = 1 and the Euler characteristic of every O^w
is 1.  All arithmetic is exact over K_T(pt), realized as Laurent
polynomials in the characters y_i = e^{omega_i}; non-equivariant values are
obtained at the very end by specializing every character to 1.
"""

from fractions import Fraction

from .algebra import LaurentPoly
from .cartan import min_coset_rep
from . import gkm_core
from .gkm_core import (K_OPS, GKMClass, SpaceMismatchError, NotMinimalError,
                       schubert_class, expand_in_schubert_basis,
                       assemble_from_basis, pullback_along_projection,
                       pushforward_to_point, _check_nested)


class GKMClassK(GKMClass):
    ops = K_OPS


class SchubertExpansionK:
    """Coefficients of a class in the basis {O^w | w in W^P}."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space, coeffs):
        self.space = space
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero()}

    def assemble(self):
        return assemble_from_basis(GKMClassK, self.space, self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, SchubertExpansionK)
                and self.space == other.space and self.coeffs == other.coeffs)

    def __repr__(self):
        body = " + ".join("(%s)*O^{%s}" % (c.render(), w.label())
                          for w, c in sorted(self.coeffs.items(),
                                             key=lambda kv: kv[0]))
        return "SchubertExpansionK(%s)" % (body or "0")


def unit_k(X):
    one = LaurentPoly.one(X.root_system.rank)
    return GKMClassK(X, {w: one for w in X.coset_reps})


def schubert_class_k(X, w):
    """The Schubert structure sheaf class O^w, w in W^P."""
    return schubert_class(GKMClassK, X, w)


def schubert_classes_k(X):
    """All Schubert classes of X, keyed by minimal representatives."""
    if not hasattr(X, "_k_classes"):
        X._k_classes = {w: schubert_class_k(X, w) for w in X.coset_reps}
    return X._k_classes


def k_multiply(f, g):
    return f * g


def euler_char_k(X, f):
    """Pushforward to the point by Atiyah-Bott localization; lands in K_T(pt)."""
    if f.space != X:
        raise SpaceMismatchError("class does not live on %r" % (X,))
    return pushforward_to_point(X, f.restrictions, K_OPS)


def pullback_k(f, target):
    """Pullback along the projection target -> f.space (nested parabolics)."""
    return pullback_along_projection(f, target)


def pushforward_k(f, target):
    """Pushforward along f.space -> target: O^w maps to O^{min rep of w}."""
    source = f.space
    _check_nested(source, target)
    coeffs = expand_in_schubert_basis(f)
    out = {}
    for w, c in coeffs.items():
        w2 = min_coset_rep(w, target.delta_p)
        out[w2] = out.get(w2, LaurentPoly.zero(target.root_system.rank)) + c
    return assemble_from_basis(GKMClassK, target, out)


def expand_schubert_k(f):
    return SchubertExpansionK(f.space, expand_in_schubert_basis(f))


def assemble_k(X, coeffs):
    return assemble_from_basis(GKMClassK, X, dict(coeffs))


def specialize_nonequivariant(x):
    """Send every character e^{lambda} to 1.

    Accepts an element of K_T(pt) (LaurentPoly -> Fraction) or a
    SchubertExpansionK (-> dict of Fractions over W^P).
    """
    if isinstance(x, LaurentPoly):
        return x.at_one()
    if isinstance(x, SchubertExpansionK):
        return {w: c.at_one() for w, c in x.coeffs.items()}
    if isinstance(x, Fraction):
        return x
    raise TypeError("cannot specialize %r" % (x,))


def gkm_compatible_k(f):
    """True when f satisfies all GKM edge divisibilities (run on G/B)."""
    return not gkm_core.gkm_compatibility_violations(f)
