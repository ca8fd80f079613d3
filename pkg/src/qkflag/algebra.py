"""Exact coefficient arithmetic.

Three layers, all over exact rationals (no floating point anywhere):

* LaurentPoly -- sparse Laurent polynomials in r variables, the variable
  y_i standing for the character e^{omega_i} of the torus.  Exponent
  vectors are integer tuples in fundamental-weight coordinates.  The same
  container doubles as the ordinary polynomial ring of equivariant
  cohomology (nonnegative exponents, z_i = omega_i as a linear form).
* LocalizationFraction -- a Laurent polynomial divided by a product of
  binomial factors (1 - e^{-lambda}), kept in factored form until a final
  exact division.
* TSeries -- truncated multivariate power series in the deformation
  variables t_w, with a Novikov part restricted to {1} or a single line
  degree Q_alpha.
"""

import heapq
from fractions import Fraction
from math import factorial

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ExactDivisionError(ArithmeticError):
    """No exact quotient exists.  When raised from a localization sum or a
    Schubert expansion this signals an internal bug, never a user error."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % (x,))


class LaurentPoly:
    """Sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[e] = c

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def one(cls, rank):
        return cls.constant(rank, 1)

    @classmethod
    def constant(cls, rank, c):
        c = _as_fraction(c)
        p = cls(rank)
        if c:
            p.terms[(0,) * rank] = c
        return p

    @classmethod
    def character(cls, weight):
        """The character e^{lambda} as a monomial."""
        p = cls(len(weight))
        p.terms[tuple(weight)] = _ONE
        return p

    @classmethod
    def one_minus_character(cls, weight):
        """1 - e^{-lambda}, the K-theoretic tangent factor of weight lambda."""
        rank = len(weight)
        p = cls(rank)
        neg = tuple(-x for x in weight)
        p.terms[(0,) * rank] = _ONE
        p.terms[neg] = p.terms.get(neg, _ZERO) - _ONE
        if not p.terms[neg]:
            del p.terms[neg]
        return p

    @classmethod
    def linear_form(cls, weight):
        """The weight as a degree-one polynomial (cohomology side)."""
        rank = len(weight)
        p = cls(rank)
        for i, c in enumerate(weight):
            if c:
                e = tuple(1 if j == i else 0 for j in range(rank))
                p.terms[e] = Fraction(c)
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.rank, other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.rank, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly(self.rank)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly(self.rank)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.rank, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            r = LaurentPoly(self.rank)
            if c:
                r.terms = {e: v * c for e, v in self.terms.items()}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = LaurentPoly(self.rank)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one(self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def at_one(self):
        """Specialize every character e^{lambda} to 1 (non-equivariant limit)."""
        return sum(self.terms.values(), _ZERO)

    def constant_term(self):
        """Coefficient of the trivial monomial (cohomology non-equivariant limit)."""
        return self.terms.get((0,) * self.rank, _ZERO)

    def total_degrees(self):
        return sorted({sum(e) for e in self.terms})

    def render(self, var="y"):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e))
        parts = []
        for e in keys:
            c = self.terms[e]
            mono = "*".join(
                "%s%d%s" % (var, i + 1, "" if k == 1 else "^%d" % k)
                for i, k in enumerate(e) if k)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = "%s*%s" % (c, mono)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def lp_mul(a, b):
    if a.rank != b.rank:
        raise ValueError("rank mismatch in Laurent multiplication")
    return a * b


def _shift_to_poly(terms, rank):
    if not terms:
        return {}, (0,) * rank
    mins = [min(e[i] for e in terms) for i in range(rank)]
    shift = tuple(mins)
    shifted = {tuple(a - b for a, b in zip(e, shift)): c
               for e, c in terms.items()}
    return shifted, shift


def lp_exact_div(a, b):
    """Exact quotient q with q*b == a; raises ExactDivisionError otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.rank)
    rank = a.rank
    num, sa = _shift_to_poly(a.terms, rank)
    den, sb = _shift_to_poly(b.terms, rank)
    lead = max(den)
    lead_c = den[lead]
    quot = {}
    rem = dict(num)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    while heap:
        e = tuple(-x for x in heapq.heappop(heap))
        c = rem.get(e)
        if not c:
            continue
        qe = tuple(x - y for x, y in zip(e, lead))
        if any(x < 0 for x in qe):
            raise ExactDivisionError("not divisible")
        qc = c / lead_c
        quot[qe] = quot.get(qe, _ZERO) + qc
        for de, dc in den.items():
            ne = tuple(x + y for x, y in zip(qe, de))
            s = rem.get(ne, _ZERO) - qc * dc
            if s:
                rem[ne] = s
                heapq.heappush(heap, tuple(-x for x in ne))
            else:
                rem.pop(ne, None)
    shift = tuple(x - y for x, y in zip(sa, sb))
    q = LaurentPoly(rank)
    q.terms = {tuple(x + y for x, y in zip(e, shift)): c
               for e, c in quot.items() if c}
    return q


def lp_divisible(a, b):
    try:
        lp_exact_div(a, b)
        return True
    except ExactDivisionError:
        return False


class LocalizationFraction:
    """Laurent polynomial over a factored denominator prod (1 - e^{-lam}).

    Factors are stored as the weights lam themselves.  Fractions are only
    ever reduced by a final exact division; addition goes through the
    factor-multiset union.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator, factors=()):
        self.numerator = numerator
        self.factors = tuple(sorted(factors))

    def __mul__(self, poly):
        return LocalizationFraction(self.numerator * poly, self.factors)

    def __add__(self, other):
        if self.factors == other.factors:
            return LocalizationFraction(self.numerator + other.numerator,
                                        self.factors)
        from collections import Counter
        cs, co = Counter(self.factors), Counter(other.factors)
        union = cs | co
        a = self.numerator
        for lam, k in (union - cs).items():
            a = a * LaurentPoly.one_minus_character(lam) ** k
        b = other.numerator
        for lam, k in (union - co).items():
            b = b * LaurentPoly.one_minus_character(lam) ** k
        return LocalizationFraction(a + b, tuple(union.elements()))

    def reduce(self):
        """Clear the denominator by exact division; the result must be polynomial."""
        num = self.numerator
        for lam in self.factors:
            num = lp_exact_div(num, LaurentPoly.one_minus_character(lam))
        return num

    def __repr__(self):
        return "LocalizationFraction(%r / %d factors)" % (
            self.numerator, len(self.factors))


# ---------------------------------------------------------------------------
# Coefficient rings for TSeries


class RationalCoeffs:
    """Q, for non-equivariant series."""

    key = ("rational",)
    zero = _ZERO
    one = _ONE

    @staticmethod
    def coerce(x):
        if isinstance(x, LaurentPoly):
            raise TypeError("equivariant coefficient in a rational series")
        return _as_fraction(x)

    @staticmethod
    def is_zero(c):
        return not c

    @staticmethod
    def exact_div(a, b):
        if not b:
            raise ExactDivisionError("division by zero")
        return a / b


class CharacterCoeffs:
    """K_T(pt) x Q: Laurent polynomials in the torus characters."""

    def __init__(self, rank):
        self.rank = rank
        self.key = ("character", rank)
        self.zero = LaurentPoly.zero(rank)
        self.one = LaurentPoly.one(rank)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            if x.rank != self.rank:
                raise TypeError("coefficient rank mismatch")
            return x
        return LaurentPoly.constant(self.rank, _as_fraction(x))

    @staticmethod
    def is_zero(c):
        return c.is_zero()

    @staticmethod
    def exact_div(a, b):
        return lp_exact_div(a, b)


class SeriesContext:
    """Shared shape of a family of TSeries: variable labels, Novikov labels,
    truncation order, and the coefficient ring."""

    __slots__ = ("tvars", "novikovs", "order", "ring")

    def __init__(self, tvars, novikovs, order, ring):
        self.tvars = tuple(tvars)
        self.novikovs = tuple(novikovs)
        self.order = int(order)
        self.ring = ring

    def same(self, other):
        return (self.tvars == other.tvars and self.novikovs == other.novikovs
                and self.order == other.order and self.ring.key == other.ring.key)

    def with_order(self, order):
        return SeriesContext(self.tvars, self.novikovs, order, self.ring)

    def zero(self):
        return TSeries(self, {})

    def one(self):
        return TSeries(self, {self._unit_key(): self.ring.one})

    def _unit_key(self):
        return (-1, (0,) * len(self.tvars))

    def constant(self, c):
        return TSeries(self, {self._unit_key(): self.ring.coerce(c)})

    def tvar(self, i):
        e = tuple(1 if j == i else 0 for j in range(len(self.tvars)))
        return TSeries(self, {(-1, e): self.ring.one})

    def novikov(self, i):
        if not 0 <= i < len(self.novikovs):
            raise ValueError("no Novikov variable with index %d" % i)
        return TSeries(self, {(i, (0,) * len(self.tvars)): self.ring.one})

    def monomial(self, qidx, texp, coeff):
        if sum(texp) > self.order:
            return self.zero()
        return TSeries(self, {(qidx, tuple(texp)): self.ring.coerce(coeff)})


class TSeries:
    """Truncated formal power series in the t_w, over {1, Q_alpha} Novikov part.

    Keys are (qidx, texp): qidx = -1 for no Novikov factor or the index of a
    single line-degree variable; texp a full exponent tuple over the t
    variables.  Products silently drop anything above the truncation order
    or with a Novikov part outside the retained ideal.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if not ctx.ring.is_zero(v)}

    def _check(self, other):
        if not self.ctx.same(other.ctx):
            raise ValueError("TSeries context mismatch")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.ctx.same(other.ctx) and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.constant(other)
        self._check(other)
        out = dict(self.terms)
        ring = self.ctx.ring
        for k, v in other.terms.items():
            s = out.get(k, ring.zero) + v
            if ring.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return TSeries(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return TSeries(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply by a scalar from the coefficient ring."""
        c = self.ctx.ring.coerce(c)
        if self.ctx.ring.is_zero(c):
            return self.ctx.zero()
        return TSeries(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        self._check(other)
        ctx = self.ctx
        ring = ctx.ring
        order = ctx.order
        left = sorted(self.terms.items(), key=lambda kv: sum(kv[0][1]))
        right = sorted(other.terms.items(), key=lambda kv: sum(kv[0][1]))
        out = {}
        for (q1, t1), c1 in left:
            d1 = sum(t1)
            for (q2, t2), c2 in right:
                if d1 + sum(t2) > order:
                    break
                if q1 >= 0 and q2 >= 0:
                    continue
                q = q1 if q1 >= 0 else q2
                k = (q, tuple(a + b for a, b in zip(t1, t2)))
                s = out.get(k, ring.zero) + c1 * c2
                if ring.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return TSeries(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.ctx.one()
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, qidx, texp):
        return self.terms.get((qidx, tuple(texp)), self.ctx.ring.zero)

    def constant_coefficient(self):
        return self.coefficient(-1, (0,) * len(self.ctx.tvars))

    def derivative(self, i):
        """Formal derivative with respect to the i-th t variable."""
        out = {}
        for (q, t), c in self.terms.items():
            if t[i]:
                t2 = list(t)
                t2[i] -= 1
                out[(q, tuple(t2))] = c * t[i]
        return TSeries(self.ctx, out)

    def at_t_zero(self):
        """Set every t_w to zero, keeping the Novikov part."""
        zero = (0,) * len(self.ctx.tvars)
        return TSeries(self.ctx,
                       {k: v for k, v in self.terms.items() if k[1] == zero})

    def truncated(self, order):
        """The same series in a context with a lower truncation order."""
        ctx = self.ctx.with_order(order)
        return TSeries(ctx, {k: v for k, v in self.terms.items()
                             if sum(k[1]) <= order})

    def sorted_items(self):
        def sort_key(kv):
            q, t = kv[0]
            # within a degree, earlier variables first (t_1 before t_2)
            return (0 if q < 0 else 1, q, sum(t), tuple(-x for x in t))
        return sorted(self.terms.items(), key=sort_key)

    def render(self, coeff_render=str):
        if not self.terms:
            return "0"
        parts = []
        for (q, t), c in self.sorted_items():
            factors = []
            if q >= 0:
                factors.append("Q[%s]" % self.ctx.novikovs[q])
            for i, k in enumerate(t):
                if k:
                    factors.append("t[%s]%s" % (self.ctx.tvars[i],
                                                "" if k == 1 else "^%d" % k))
            cs = coeff_render(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors:
                parts.append("(%s)*%s" % (cs, "*".join(factors)))
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return "TSeries(%s)" % self.render()


def ts_exp(s):
    """exp of a series with zero constant term and only t-degree <= 1 terms."""
    ctx = s.ctx
    ring = ctx.ring
    for (q, t), c in s.terms.items():
        if sum(t) > 1:
            raise ValueError("ts_exp requires a linear series")
        if q < 0 and sum(t) == 0 and not ring.is_zero(c):
            raise ValueError("ts_exp requires a zero constant term")
    result = ctx.one()
    power = ctx.one()
    for k in range(1, ctx.order + 2):
        power = power * s
        if power.is_zero():
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def matrix_det_adjugate(m, ring):
    """Determinant and adjugate by Laplace expansion with minor memoization.

    Works over any coefficient ring with exact arithmetic; intended for the
    small Gram matrices of the quantum metric (desk scale, n <= ~7).
    """
    n = len(m)
    memo = {}

    def minor_det(rows, cols):
        if not rows:
            return ring.one
        key = (rows, cols)
        got = memo.get(key)
        if got is not None:
            return got
        r0 = rows[0]
        rest = rows[1:]
        total = ring.zero
        for pos, c in enumerate(cols):
            entry = m[r0][c]
            if ring.is_zero(entry):
                continue
            sub = minor_det(rest, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    allr = tuple(range(n))
    det = minor_det(allr, allr)
    adj = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        rows = allr[:i] + allr[i + 1:]
        for j in range(n):
            cols = allr[:j] + allr[j + 1:]
            c = minor_det(rows, cols)
            if (i + j) % 2:
                c = -c
            adj[j][i] = c
    return det, adj


def ts_solve_linear(m, b):
    """Solve M*c = b over TSeries, M a square matrix with invertible
    constant term over the coefficient ring.

    Uses the fixed-point iteration c <- M0^{-1}(b - (M - M0)c), which
    stabilizes within order+2 steps because M - M0 has no constant term;
    M0^{-1} is applied through the adjugate and one exact division by the
    determinant.
    """
    n = len(b)
    ctx = b[0].ctx
    ring = ctx.ring
    unit_key = ctx._unit_key()
    m0 = [[m[i][j].terms.get(unit_key, ring.zero) for j in range(n)]
          for i in range(n)]
    det, adj = matrix_det_adjugate(m0, ring)
    if ring.is_zero(det):
        raise ExactDivisionError("singular constant term in series solve")
    mhot = [[TSeries(ctx, {k: v for k, v in m[i][j].terms.items()
                           if k != unit_key})
             for j in range(n)] for i in range(n)]

    def apply_inverse(vec):
        keys = set()
        for s in vec:
            keys.update(s.terms)
        out_terms = [dict() for _ in range(n)]
        for k in keys:
            y = [s.terms.get(k, ring.zero) for s in vec]
            for i in range(n):
                acc = ring.zero
                for j in range(n):
                    if not ring.is_zero(y[j]) and not ring.is_zero(adj[i][j]):
                        acc = acc + adj[i][j] * y[j]
                if not ring.is_zero(acc):
                    out_terms[i][k] = ring.exact_div(acc, det)
        return [TSeries(ctx, t) for t in out_terms]

    c = [ctx.zero() for _ in range(n)]
    for _ in range(ctx.order + 3):
        r = []
        for i in range(n):
            acc = b[i]
            for j in range(n):
                if not mhot[i][j].is_zero() and not c[j].is_zero():
                    acc = acc - mhot[i][j] * c[j]
            r.append(acc)
        nxt = apply_inverse(r)
        if all(nxt[i] == c[i] for i in range(n)):
            return nxt
        c = nxt
    raise ExactDivisionError("series solve failed to stabilize")
