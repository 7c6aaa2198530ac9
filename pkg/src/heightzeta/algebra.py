"""Exact arithmetic for the nested coefficient rings.

Three layers, innermost first: sparse Laurent polynomials in the Lefschetz
class L with arbitrary-precision integer coefficients, polynomials in the
lattice-rank variable u over those, and power series in the discriminant
variable s truncated at a fixed order.  A fourth structure carries formal
marking variables on top of the series layer.

All values are immutable after construction; arithmetic returns fresh
objects and keeps a canonical sparse form (no stored zero coefficients,
iteration sorted by exponent).
"""
from __future__ import annotations

from fractions import Fraction


class LefschetzPoly:
    """Sparse Laurent polynomial in the Lefschetz class L.

    Exponents may be negative (the ring is localized at L).  Coefficients
    are integers in normal use; rational coefficients only appear after
    `specialize` with a rational value of L.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def _make(cls, terms):
        # internal: terms already canonical
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls({exp: coef})

    @classmethod
    def zero(cls):
        return cls._make({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @staticmethod
    def coerce(value):
        if isinstance(value, LefschetzPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return LefschetzPoly({0: value})
        raise TypeError(f"cannot coerce {type(value).__name__} to LefschetzPoly")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LefschetzPoly.coerce(other)
        if not isinstance(other, LefschetzPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = LefschetzPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return LefschetzPoly._make(out)

    __radd__ = __add__

    def __neg__(self):
        return LefschetzPoly._make({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-LefschetzPoly.coerce(other))

    def __rsub__(self, other):
        return LefschetzPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LefschetzPoly._make({})
            return LefschetzPoly._make({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LefschetzPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return LefschetzPoly._make(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LefschetzPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, value):
        """Substitute a rational number for L.  Raises on 0 with poles."""
        value = Fraction(value)
        if value == 0 and any(e < 0 for e in self.terms):
            raise ZeroDivisionError("cannot evaluate at L=0: negative exponents present")
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * value ** e
        return total

    def constant(self):
        """The value of a degree-zero polynomial; raises otherwise."""
        if not self.terms:
            return 0
        if set(self.terms) != {0}:
            raise ValueError(f"not a constant: {self}")
        return self.terms[0]

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return {"terms": [{"exp": e, "coef": str(c)} for e, c in self.sorted_terms()]}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            if e == 0:
                mono = str(c)
            else:
                var = "L" if e == 1 else f"L^{e}"
                if c == 1:
                    mono = var
                elif c == -1:
                    mono = f"-{var}"
                else:
                    mono = f"{c}*{var}"
            parts.append(mono)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"LefschetzPoly({self})"


#: The Lefschetz class itself, as a polynomial.
L = LefschetzPoly.monomial(1)


def motive_sym_p1(n):
    """Class of the N-th symmetric power of the projective line: 1+L+...+L^N."""
    if n < 0:
        raise ValueError("symmetric power index must be non-negative")
    return LefschetzPoly._make({e: 1 for e in range(n + 1)})


def motive_pgl2():
    """Class of PGL_2, i.e. L*(L^2-1) = L^3 - L."""
    return LefschetzPoly({3: 1, 1: -1})


class LatticePoly:
    """Polynomial in the lattice-rank variable u with LefschetzPoly coefficients.

    u-exponents are non-negative: the trivial-lattice grading never drops
    below the baseline.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if e < 0:
                    raise ValueError("u-exponents must be non-negative")
                c = LefschetzPoly.coerce(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def _make(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, u_exp, coef=1):
        return cls({u_exp: coef})

    @classmethod
    def zero(cls):
        return cls._make({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @staticmethod
    def coerce(value):
        if isinstance(value, LatticePoly):
            return value
        if isinstance(value, (int, Fraction, LefschetzPoly)):
            c = LefschetzPoly.coerce(value)
            return LatticePoly._make({0: c} if c else {})
        raise TypeError(f"cannot coerce {type(value).__name__} to LatticePoly")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LefschetzPoly)):
            other = LatticePoly.coerce(other)
        if not isinstance(other, LatticePoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = LatticePoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return LatticePoly._make(out)

    __radd__ = __add__

    def __neg__(self):
        return LatticePoly._make({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-LatticePoly.coerce(other))

    def __rsub__(self, other):
        return LatticePoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LefschetzPoly)):
            other = LatticePoly.coerce(other)
        if not isinstance(other, LatticePoly):
            return NotImplemented
        # accumulate flat (u-exp -> L-exp -> coef) buckets to avoid building
        # intermediate polynomials in the hot path
        buckets = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                bucket = buckets.setdefault(e1 + e2, {})
                for l1, v1 in c1.terms.items():
                    for l2, v2 in c2.terms.items():
                        l = l1 + l2
                        bucket[l] = bucket.get(l, 0) + v1 * v2
        return LatticePoly._collapse(buckets)

    __rmul__ = __mul__

    @classmethod
    def _collapse(cls, buckets):
        out = {}
        for e, bucket in buckets.items():
            lef = {l: v for l, v in bucket.items() if v}
            if lef:
                out[e] = LefschetzPoly._make(lef)
        return cls._make(out)

    def substitute(self, u_val=None, L_val=None):
        """Substitute rational values for u and/or L; stays a LatticePoly.

        A substituted variable collapses to exponent zero with rational
        coefficients.  L_val=0 raises if any negative L-exponent occurs.
        """
        result = self
        if L_val is not None:
            result = LatticePoly._make({
                e: lef for e, c in result.terms.items()
                if (lef := LefschetzPoly.coerce(c.evaluate(L_val)))
            })
        if u_val is not None:
            u_val = Fraction(u_val)
            acc = LefschetzPoly.zero()
            for e, c in result.terms.items():
                acc = acc + c * u_val ** e
            result = LatticePoly.coerce(acc)
        return result

    def constant(self):
        """The value of a fully specialized polynomial; raises otherwise."""
        if not self.terms:
            return 0
        if set(self.terms) != {0}:
            raise ValueError(f"not a constant: {self}")
        return self.terms[0].constant()

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        out = []
        for u_exp, c in self.sorted_terms():
            for l_exp, v in c.sorted_terms():
                out.append({"u": u_exp, "L": l_exp, "c": str(v)})
        return {"terms": out}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                var = "u" if e == 1 else f"u^{e}"
                parts.append(var if cs == "1" else f"{cs}*{var}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LatticePoly({self})"


class DiscSeries:
    """Power series in the discriminant variable s, truncated at a fixed order.

    Coefficients are LatticePoly values indexed by s-degree 0..order.
    Combining series of different orders truncates to the minimum order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        if coeffs is None:
            self.coeffs = (LatticePoly.zero(),) * (order + 1)
        else:
            coeffs = [LatticePoly.coerce(c) for c in coeffs[: order + 1]]
            coeffs += [LatticePoly.zero()] * (order + 1 - len(coeffs))
            self.coeffs = tuple(coeffs)

    @classmethod
    def _make(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls.monomial(order, 0, 1)

    @classmethod
    def monomial(cls, order, s_exp, coef=1):
        """The single term coef * s^s_exp (zero series if s_exp > order)."""
        if s_exp < 0:
            raise ValueError("s-exponents must be non-negative")
        coeffs = [LatticePoly.zero()] * (order + 1)
        if s_exp <= order:
            coeffs[s_exp] = LatticePoly.coerce(coef)
        return cls._make(order, tuple(coeffs))

    def coerce_like(self, value):
        if isinstance(value, DiscSeries):
            return value
        return DiscSeries.monomial(self.order, 0, value)

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LefschetzPoly, LatticePoly)):
            other = self.coerce_like(other)
        if not isinstance(other, DiscSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order):
        if order >= self.order:
            return self
        return DiscSeries._make(order, self.coeffs[: order + 1])

    def padded(self, order):
        """Zero-pad up to a higher order.

        Only sound when the caller knows the dropped degrees cannot influence
        the truncated result (e.g. before multiplying by a series of known
        positive valuation).
        """
        if order <= self.order:
            return self.truncate(order)
        pad = (LatticePoly.zero(),) * (order - self.order)
        return DiscSeries._make(order, self.coeffs + pad)

    def valuation(self):
        """Smallest s-degree with a nonzero coefficient; None for zero."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def __add__(self, other):
        other = self.coerce_like(other)
        order = min(self.order, other.order)
        coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: order + 1]
        return DiscSeries._make(order, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return DiscSeries._make(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self.coerce_like(other))

    def __rsub__(self, other):
        return self.coerce_like(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LefschetzPoly, LatticePoly)):
            scalar = LatticePoly.coerce(other)
            return DiscSeries._make(self.order, tuple(c * scalar for c in self.coeffs))
        if not isinstance(other, DiscSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        coeffs = []
        for n in range(order + 1):
            buckets = {}
            for i in range(n + 1):
                ai, bi = a[i], b[n - i]
                if not (ai and bi):
                    continue
                for e1, c1 in ai.terms.items():
                    for e2, c2 in bi.terms.items():
                        bucket = buckets.setdefault(e1 + e2, {})
                        for l1, v1 in c1.terms.items():
                            for l2, v2 in c2.terms.items():
                                l = l1 + l2
                                bucket[l] = bucket.get(l, 0) + v1 * v2
            coeffs.append(LatticePoly._collapse(buckets))
        return DiscSeries._make(order, tuple(coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = DiscSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def specialize(self, u_val=None, L_val=None):
        """Substitute rational values for u and/or L coefficient-wise."""
        return DiscSeries._make(
            self.order,
            tuple(c.substitute(u_val=u_val, L_val=L_val) for c in self.coeffs),
        )

    def constant_values(self):
        """Per-degree rational values of a fully specialized series."""
        return [c.constant() for c in self.coeffs]

    def to_json(self):
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if len(c.terms) > 1 or " " in cs:
                cs = f"({cs})"
            if n == 0:
                parts.append(cs)
            else:
                var = "s" if n == 1 else f"s^{n}"
                parts.append(var if cs == "1" else f"{cs}*{var}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(s^{self.order + 1})"

    def __repr__(self):
        return f"DiscSeries({self})"


def series_one_minus_inverse(y: DiscSeries) -> DiscSeries:
    """Geometric inverse 1/(1-Y) = sum_m Y^m, truncated at y.order.

    Requires Y to have positive s-valuation, so 1-Y is a unit in the
    truncated ring; satisfies (1-Y) * result == 1 mod s^(order+1).
    """
    if y.coeffs[0]:
        raise ValueError("1 - Y is not invertible: Y has a nonzero constant term")
    inv = [LatticePoly.one()]
    yk = y.coeffs
    for n in range(1, y.order + 1):
        acc = LatticePoly.zero()
        for k in range(1, n + 1):
            if yk[k] and inv[n - k]:
                acc = acc + yk[k] * inv[n - k]
        inv.append(acc)
    return DiscSeries._make(y.order, tuple(inv))


def specialize(p: DiscSeries, u_val=None, L_val=None) -> DiscSeries:
    """Module-level alias for DiscSeries.specialize."""
    return p.specialize(u_val=u_val, L_val=L_val)


class MarkVariablePoly:
    """Polynomial in formal marking variables with DiscSeries coefficients.

    Each label carries a weight: the minimal s-valuation of the series that
    will eventually be substituted for that variable.  Terms whose weighted
    variable degree exceeds the order are dropped, and each coefficient is
    truncated to the remaining s-budget; this keeps products finite without
    losing any degree <= order after substitution.
    """

    __slots__ = ("labels", "weights", "order", "terms")

    def __init__(self, labels, weights, order, terms=None):
        self.labels = tuple(labels)
        self.weights = tuple(weights)
        if len(self.labels) != len(self.weights):
            raise ValueError("labels and weights must have equal length")
        self.order = order
        clean = {}
        if terms:
            for exps, coef in terms.items():
                exps = tuple(exps)
                if len(exps) != len(self.labels) or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps}")
                budget = order - self._weighted_degree(exps)
                if budget < 0:
                    continue
                coef = coef.truncate(budget)
                if coef:
                    clean[exps] = coef
        self.terms = clean

    def _weighted_degree(self, exps):
        return sum(e * w for e, w in zip(exps, self.weights))

    @classmethod
    def _make(cls, labels, weights, order, terms):
        obj = object.__new__(cls)
        obj.labels = labels
        obj.weights = weights
        obj.order = order
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, labels, weights, order):
        return cls.monomial(labels, weights, order, (0,) * len(tuple(labels)),
                            DiscSeries.one(order))

    @classmethod
    def monomial(cls, labels, weights, order, exps, coef):
        return cls(labels, weights, order, {tuple(exps): coef})

    def _check_compatible(self, other):
        if (self.labels, self.weights, self.order) != (other.labels, other.weights, other.order):
            raise ValueError("incompatible marking polynomials")

    def __eq__(self, other):
        if not isinstance(other, MarkVariablePoly):
            return NotImplemented
        return (self.labels, self.weights, self.order) == \
            (other.labels, other.weights, other.order) and self.terms == other.terms

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            v = out.get(exps)
            v = coef if v is None else v + coef
            if v:
                out[exps] = v
            elif exps in out:
                del out[exps]
        return MarkVariablePoly._make(self.labels, self.weights, self.order, out)

    def __mul__(self, other):
        self._check_compatible(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                budget = self.order - self._weighted_degree(exps)
                if budget < 0:
                    continue
                p = (c1.truncate(budget) * c2.truncate(budget)).truncate(budget)
                v = out.get(exps)
                v = p if v is None else v + p
                if v:
                    out[exps] = v
                elif exps in out:
                    del out[exps]
        return MarkVariablePoly._make(self.labels, self.weights, self.order, out)

    def substitute(self, assignments) -> DiscSeries:
        """Replace each variable by a series and collapse to a DiscSeries.

        Each assigned series must have s-valuation at least the variable's
        declared weight; otherwise the internal truncation was unsound and
        this raises.
        """
        subs = []
        for label, weight in zip(self.labels, self.weights):
            series = assignments[label].padded(self.order)
            val = series.valuation()
            if val is not None and val < weight:
                raise ValueError(
                    f"substitution for {label} has valuation {val} < weight {weight}")
            subs.append(series)
        total = DiscSeries.zero(self.order)
        for exps, coef in sorted(self.terms.items()):
            term = coef.padded(self.order)
            for series, e in zip(subs, exps):
                if e:
                    term = term * series ** e
            total = total + term
        return total

    def coefficient(self, exps) -> DiscSeries:
        exps = tuple(exps)
        budget = self.order - self._weighted_degree(exps)
        return self.terms.get(exps, DiscSeries.zero(max(budget, 0)))

    def __repr__(self):
        return f"MarkVariablePoly({len(self.terms)} terms over {self.labels})"
