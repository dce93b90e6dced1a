"""Exact arithmetic in the parameter ring Q[q, q^-1, k, t], optionally truncated in t.

Scalars are sparse maps from exponent triples (e_q, e_k, e_t) to rational
coefficients.  q is invertible (negative exponents allowed); k and t are not.
A scalar may carry a truncation order N, in which case it lives in the
quotient by t^(N+1) and arithmetic silently discards higher t-terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class TruncationMismatchError(ValueError):
    """Two scalars carry different finite truncation orders."""


class ParameterError(ValueError):
    """Invalid parameter use: double substitution, k/t picture mixing, or q = 0."""


def _join_orders(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a != b:
        raise TruncationMismatchError(
            f"incompatible truncation orders {a} and {b}"
        )
    return a


def _power_str(name, e):
    return name if e == 1 else f"{name}^{e}"


def _join_signed(parts):
    """Join (sign, body) pairs into 'a + b - c' form."""
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class ParamScalar:
    """Element of Q[q, q^-1, k, t], exact and immutable.

    ``terms`` maps (e_q, e_k, e_t) to a nonzero Fraction; e_k and e_t are
    nonnegative.  ``order`` is None for an untruncated scalar or the largest
    retained t-exponent otherwise.  Equality compares terms only, so a
    truncated scalar equals its untruncated representative.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms=None, order=None):
        if order is not None and order < 0:
            raise ValueError("truncation order must be nonnegative")
        clean = {}
        if terms:
            for (e_q, e_k, e_t), coeff in terms.items():
                if e_k < 0 or e_t < 0:
                    raise ValueError("k and t exponents must be nonnegative")
                if order is not None and e_t > order:
                    continue
                coeff = Fraction(coeff)
                if coeff:
                    clean[(e_q, e_k, e_t)] = clean.get((e_q, e_k, e_t), 0) + coeff
                    if not clean[(e_q, e_k, e_t)]:
                        del clean[(e_q, e_k, e_t)]
        self.terms = clean
        self.order = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, value, order=None):
        if isinstance(value, ParamScalar):
            return value if order is None else cls(value.terms, order)
        return cls({(0, 0, 0): Fraction(value)}, order)

    @classmethod
    def zero(cls, order=None):
        return cls({}, order)

    @classmethod
    def one(cls, order=None):
        return cls.of(1, order)

    @classmethod
    def q(cls, e=1):
        return cls({(e, 0, 0): Fraction(1)})

    @classmethod
    def k(cls, e=1):
        return cls({(0, e, 0): Fraction(1)})

    @classmethod
    def t(cls, e=1):
        return cls({(0, 0, e): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_k_free(self):
        return all(e_k == 0 for (_, e_k, _) in self.terms)

    @property
    def is_t_free(self):
        return all(e_t == 0 for (_, _, e_t) in self.terms)

    def max_k_degree(self):
        return max((e_k for (_, e_k, _) in self.terms), default=0)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, ParamScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ParamScalar.of(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = _join_orders(self.order, other.order)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = terms.get(exp, 0) + coeff
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        return ParamScalar(terms, order)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar({exp: -c for exp, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = _join_orders(self.order, other.order)
        terms = {}
        for (q1, k1, t1), c1 in self.terms.items():
            for (q2, k2, t2), c2 in other.terms.items():
                e_t = t1 + t2
                if order is not None and e_t > order:
                    continue
                exp = (q1 + q2, k1 + k2, e_t)
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    del terms[exp]
        return ParamScalar(terms, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only single-term scalars are invertible")
            ((e_q, e_k, e_t), coeff), = self.terms.items()
            if e_k or e_t:
                raise ValueError("k and t are not invertible")
            return ParamScalar({(e_q * n, 0, 0): Fraction(1, 1) / coeff ** (-n)},
                               self.order)
        out = ParamScalar.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and evaluation ----------------------------------------

    def substitute_k(self, order):
        """Replace k by 1 + t, expanding binomially and truncating at t^order.

        The input must be t-free; substituting into a t-bearing scalar would
        silently conflate the k-picture with the t-picture.
        """
        if not self.is_t_free:
            raise ParameterError(
                "scalar already contains t; k has been substituted before"
            )
        terms = {}
        for (e_q, e_k, _), coeff in self.terms.items():
            for i in range(min(e_k, order) + 1):
                exp = (e_q, 0, i)
                terms[exp] = terms.get(exp, 0) + comb(e_k, i) * coeff
        return ParamScalar(terms, order)

    def specialize(self, q=None, k=None, t=None):
        """Substitute rational values for any subset of the parameters."""
        if q is not None and q == 0:
            raise ParameterError("q must be invertible; got q = 0")
        terms = {}
        for (e_q, e_k, e_t), coeff in self.terms.items():
            if q is not None:
                coeff *= Fraction(q) ** e_q
                e_q = 0
            if k is not None:
                coeff *= Fraction(k) ** e_k
                e_k = 0
            if t is not None:
                coeff *= Fraction(t) ** e_t
                e_t = 0
            exp = (e_q, e_k, e_t)
            terms[exp] = terms.get(exp, 0) + coeff
        return ParamScalar(terms, self.order)

    def evaluate(self, q_val, k_val, t_val=0):
        """Exact rational value at q = q_val, k = k_val, t = t_val."""
        full = self.specialize(q=q_val, k=k_val, t=t_val)
        return full.terms.get((0, 0, 0), Fraction(0))

    def split_by_t(self):
        """Decompose into {e_t: t-free part}, e.g. 1 + 2t -> {0: 1, 1: 2}."""
        grouped = {}
        for (e_q, e_k, e_t), coeff in self.terms.items():
            grouped.setdefault(e_t, {})[(e_q, e_k, 0)] = coeff
        return {i: ParamScalar(d) for i, d in grouped.items()}

    def truncate(self, order):
        if self.order is not None and order > self.order:
            raise ValueError("cannot extend a truncated scalar to a higher order")
        return ParamScalar(self.terms, order)

    # -- rendering -----------------------------------------------------------

    def _signed_parts(self):
        parts = []
        for exp in sorted(self.terms, key=lambda e: (e[2], e[1], e[0])):
            coeff = self.terms[exp]
            e_q, e_k, e_t = exp
            syms = [_power_str(n, e)
                    for n, e in (("q", e_q), ("k", e_k), ("t", e_t)) if e != 0]
            mag = abs(coeff)
            if not syms:
                body = str(mag)
            elif mag == 1:
                body = "*".join(syms)
            else:
                body = "*".join([str(mag)] + syms)
            parts.append(("-" if coeff < 0 else "+", body))
        return parts

    def __str__(self):
        if not self.terms:
            return "0"
        return _join_signed(self._signed_parts())

    def __repr__(self):
        return f"ParamScalar({self})"
