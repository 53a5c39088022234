"""Truncated graded polynomials in the odd times t_1, t_3, t_5, ...

Coefficients are exact rationals.  The grading assigns weight m to t_m and
every operation discards terms above the truncation weight, so identities
that hold weight-by-weight can be checked exactly on truncated
representatives.

A monomial is a tuple of (odd index, exponent) pairs sorted by index.
"""

from fractions import Fraction
from math import factorial


def mono_weight(mono):
    return sum(m * e for m, e in mono)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for m, e in b:
        d[m] = d.get(m, 0) + e
    return tuple(sorted(d.items()))


def mono_from_exps(exps):
    """Normalize a {index: exponent} mapping into a monomial key."""
    items = []
    for m, e in exps.items():
        m, e = int(m), int(e)
        if m <= 0 or m % 2 == 0:
            raise ValueError("time indices must be odd positive, got %d" % m)
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            items.append((m, e))
    return tuple(sorted(items))


class TruncationError(ValueError):
    """Raised when a query or operation exceeds the stored truncation."""


class OddSeries:
    """Truncated polynomial in t_1, t_3, ... over Fraction coefficients."""

    __slots__ = ("truncation_weight", "terms")

    def __init__(self, truncation_weight, terms=None):
        object.__setattr__(self, "truncation_weight", int(truncation_weight))
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c and mono_weight(mono) <= self.truncation_weight:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OddSeries is immutable")

    @classmethod
    def constant(cls, W, value=1):
        return cls(W, {(): Fraction(value)})

    @classmethod
    def variable(cls, W, m):
        if m % 2 == 0 or m <= 0:
            raise ValueError("odd positive index required")
        return cls(W, {((m, 1),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def coefficient(self, mono):
        if mono_weight(mono) > self.truncation_weight:
            raise TruncationError(
                "monomial of weight %d beyond truncation %d"
                % (mono_weight(mono), self.truncation_weight)
            )
        return self.terms.get(mono, Fraction(0))

    def _check_match(self, other):
        if self.truncation_weight != other.truncation_weight:
            raise TruncationError(
                "truncation mismatch: %d vs %d"
                % (self.truncation_weight, other.truncation_weight)
            )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = OddSeries.constant(self.truncation_weight, other)
        if not isinstance(other, OddSeries):
            return NotImplemented
        return (
            self.truncation_weight == other.truncation_weight
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.truncation_weight, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = OddSeries.constant(self.truncation_weight, other)
        self._check_match(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return OddSeries(self.truncation_weight, terms)

    __radd__ = __add__

    def __neg__(self):
        return OddSeries(self.truncation_weight, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = OddSeries.constant(self.truncation_weight, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return OddSeries(
                self.truncation_weight,
                {m: c * other for m, c in self.terms.items()},
            )
        self._check_match(other)
        W = self.truncation_weight
        terms = {}
        for ma, ca in self.terms.items():
            wa = mono_weight(ma)
            for mb, cb in other.terms.items():
                if wa + mono_weight(mb) > W:
                    continue
                key = mono_mul(ma, mb)
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return OddSeries(W, terms)

    __rmul__ = __mul__

    def scale(self, c):
        return self * Fraction(c)

    def exp(self):
        """exp of a series with zero constant term, truncated."""
        if self.constant_term():
            raise ValueError("exp requires zero constant term")
        W = self.truncation_weight
        result = OddSeries.constant(W)
        power = OddSeries.constant(W)
        for k in range(1, W + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power * Fraction(1, factorial(k))
        return result

    def partial(self, m):
        """Formal partial derivative with respect to t_m."""
        terms = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(m, 0)
            if not e:
                continue
            if e == 1:
                del d[m]
            else:
                d[m] = e - 1
            key = tuple(sorted(d.items()))
            terms[key] = terms.get(key, Fraction(0)) + c * e
        return OddSeries(self.truncation_weight, terms)

    def substitute_scaled(self, a0):
        """Apply t_m -> a0^m t_m."""
        a0 = Fraction(a0)
        return OddSeries(
            self.truncation_weight,
            {m: c * a0 ** mono_weight(m) for m, c in self.terms.items()},
        )

    def weight_component(self, w):
        return OddSeries(
            self.truncation_weight,
            {m: c for m, c in self.terms.items() if mono_weight(m) == w},
        )

    def retruncate(self, W):
        return OddSeries(W, self.terms)

    def to_json(self):
        return {
            "truncation_weight": self.truncation_weight,
            "terms": [
                {
                    "exps": {str(m): e for m, e in mono},
                    "coeff": str(self.terms[mono]),
                }
                for mono in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, obj):
        terms = {}
        for t in obj["terms"]:
            terms[mono_from_exps(t["exps"])] = Fraction(t["coeff"])
        return cls(obj["truncation_weight"], terms)

    def __repr__(self):
        if not self.terms:
            return "OddSeries(W=%d, 0)" % self.truncation_weight
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            var = "*".join(
                "t%d" % m if e == 1 else "t%d^%d" % (m, e) for m, e in mono
            )
            bits.append("%s%s" % (c, "*" + var if var else ""))
        return "OddSeries(W=%d, %s)" % (self.truncation_weight, " + ".join(bits))


class BiSeries:
    """Truncated bigraded series in two odd-time alphabets t and t*."""

    __slots__ = ("truncation_weight", "truncation_weight_star", "terms")

    def __init__(self, W, Wstar, terms=None):
        object.__setattr__(self, "truncation_weight", int(W))
        object.__setattr__(self, "truncation_weight_star", int(Wstar))
        clean = {}
        if terms:
            for (mt, ms), c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                if mono_weight(mt) <= W and mono_weight(ms) <= Wstar:
                    key = (mt, ms)
                    clean[key] = clean.get(key, Fraction(0)) + c
            clean = {k: c for k, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def constant(cls, W, Wstar, value=1):
        return cls(W, Wstar, {((), ()): Fraction(value)})

    def coefficient(self, mono_t, mono_tstar):
        if mono_weight(mono_t) > self.truncation_weight:
            raise TruncationError("t-monomial beyond truncation")
        if mono_weight(mono_tstar) > self.truncation_weight_star:
            raise TruncationError("t*-monomial beyond truncation")
        return self.terms.get((mono_t, mono_tstar), Fraction(0))

    def _check_match(self, other):
        if (
            self.truncation_weight != other.truncation_weight
            or self.truncation_weight_star != other.truncation_weight_star
        ):
            raise TruncationError("truncation mismatch")

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.truncation_weight == other.truncation_weight
            and self.truncation_weight_star == other.truncation_weight_star
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check_match(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return BiSeries(self.truncation_weight, self.truncation_weight_star, terms)

    def __neg__(self):
        return BiSeries(
            self.truncation_weight,
            self.truncation_weight_star,
            {k: -c for k, c in self.terms.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries(
                self.truncation_weight,
                self.truncation_weight_star,
                {k: c * other for k, c in self.terms.items()},
            )
        self._check_match(other)
        W, Ws = self.truncation_weight, self.truncation_weight_star
        terms = {}
        for (at, ast), ca in self.terms.items():
            wa, was = mono_weight(at), mono_weight(ast)
            for (bt, bst), cb in other.terms.items():
                if wa + mono_weight(bt) > W or was + mono_weight(bst) > Ws:
                    continue
                key = (mono_mul(at, bt), mono_mul(ast, bst))
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return BiSeries(W, Ws, terms)

    __rmul__ = __mul__

    def exp(self):
        if self.terms.get(((), ())):
            raise ValueError("exp requires zero constant term")
        result = BiSeries.constant(self.truncation_weight, self.truncation_weight_star)
        power = result
        bound = max(self.truncation_weight, self.truncation_weight_star)
        for k in range(1, bound + 1):
            power = power * self
            if not power.terms:
                break
            result = result + power * Fraction(1, factorial(k))
        return result

    def swap(self):
        """Exchange the t and t* alphabets."""
        return BiSeries(
            self.truncation_weight_star,
            self.truncation_weight,
            {(ms, mt): c for (mt, ms), c in self.terms.items()},
        )

    def substitute_scaled(self, a0):
        """t_m -> a0^m t_m and t*_m -> a0^(-m) t*_m."""
        a0 = Fraction(a0)
        if not a0:
            raise ValueError("scale must be nonzero")
        return BiSeries(
            self.truncation_weight,
            self.truncation_weight_star,
            {
                (mt, ms): c * a0 ** (mono_weight(mt) - mono_weight(ms))
                for (mt, ms), c in self.terms.items()
            },
        )

    def to_json(self):
        def key(k):
            return (sorted(k[0]), sorted(k[1]))

        return {
            "truncation_weight": self.truncation_weight,
            "truncation_weight_star": self.truncation_weight_star,
            "terms": [
                {
                    "exps": {str(m): e for m, e in kt},
                    "exps_star": {str(m): e for m, e in ks},
                    "coeff": str(self.terms[(kt, ks)]),
                }
                for kt, ks in sorted(self.terms, key=key)
            ],
        }

    def __repr__(self):
        return "BiSeries(W=%d, W*=%d, %d terms)" % (
            self.truncation_weight,
            self.truncation_weight_star,
            len(self.terms),
        )
