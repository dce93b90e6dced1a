"""The commutative polynomial ring K[y] and its structured maps.

A map on K[y] is described by what it does to y: multiplicative
endomorphisms send a*y^m to a*(image)^m, and twisted derivations extend the
value on y through d(y^m) = s(y)*d(y^(m-1)) + d(y)*y^(m-1), where s is the
endomorphism the derivation is twisted by.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import ParamScalar, _join_signed, _power_str

ENDOMORPHISM = "endomorphism"
SIGMA_DERIVATION = "sigma-derivation"


class BasePoly:
    """Polynomial in y with ParamScalar coefficients; immutable, sparse."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, coeff in terms.items():
                if m < 0:
                    raise ValueError("y-exponents must be nonnegative")
                coeff = ParamScalar.of(coeff)
                if not coeff.is_zero:
                    clean[m] = coeff
        self.terms = clean

    @classmethod
    def y(cls, m=1, coeff=1):
        return cls({m: ParamScalar.of(coeff)})

    @classmethod
    def from_scalar(cls, value):
        return cls({0: ParamScalar.of(value)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.from_scalar(1)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Largest stored y-exponent, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def coefficient(self, m):
        return self.terms.get(m, ParamScalar.zero())

    @staticmethod
    def _coerce(value):
        if isinstance(value, BasePoly):
            return value
        scalar = ParamScalar._coerce(value)
        return None if scalar is None else BasePoly.from_scalar(scalar)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, coeff in other.terms.items():
            new = terms.get(m, ParamScalar.zero()) + coeff
            if new.is_zero:
                terms.pop(m, None)
            else:
                terms[m] = new
        return BasePoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BasePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                new = terms.get(m, ParamScalar.zero()) + c1 * c2
                if new.is_zero:
                    terms.pop(m, None)
                else:
                    terms[m] = new
        return BasePoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponents must be nonnegative integers")
        out = BasePoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BasePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            coeff = self.terms[m]
            mono = _power_str("y", m) if m else ""
            cparts = coeff._signed_parts()
            if not mono:
                parts.extend(cparts)
            elif len(cparts) == 1:
                sign, body = cparts[0]
                parts.append((sign, mono if body == "1" else f"{body}*{mono}"))
            else:
                parts.append(("+", f"({coeff})*{mono}"))
        return _join_signed(parts)

    def __repr__(self):
        return f"BasePoly({self})"


@dataclass(frozen=True)
class MapSpec:
    """An endomorphism of K[y] or a twisted derivation, given by its value on y.

    Endomorphisms fix constants; derivations kill them.  A derivation must
    carry the endomorphism it is twisted by.
    """

    kind: str
    image_of_y: BasePoly
    twist: "MapSpec | None" = None

    def __post_init__(self):
        if self.kind not in (ENDOMORPHISM, SIGMA_DERIVATION):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == ENDOMORPHISM and self.twist is not None:
            raise ValueError("an endomorphism takes no twist")
        if self.kind == SIGMA_DERIVATION:
            if self.twist is None or self.twist.kind != ENDOMORPHISM:
                raise ValueError("a derivation needs an endomorphism twist")

    def __call__(self, p):
        if self.kind == ENDOMORPHISM:
            return apply_endo(self, p)
        return apply_deriv(self, p)


def endomorphism(image_of_y):
    return MapSpec(ENDOMORPHISM, image_of_y)


def sigma_derivation(image_of_y, twist):
    return MapSpec(SIGMA_DERIVATION, image_of_y, twist)


def identity_endo():
    return endomorphism(BasePoly.y())


def apply_endo(f, p):
    """Multiplicative extension: a*y^m maps to a*(image)^m; constants are fixed."""
    if f.kind != ENDOMORPHISM:
        raise ValueError("apply_endo requires an endomorphism")
    out = BasePoly.zero()
    powers = {0: BasePoly.one()}
    top = max(p.terms, default=0)
    for m in range(1, top + 1):
        powers[m] = powers[m - 1] * f.image_of_y
    for m, coeff in p.terms.items():
        out = out + coeff * powers[m]
    return out


def apply_deriv(d, p):
    """Twisted Leibniz extension: d(y^m) = s(y)*d(y^(m-1)) + d(y)*y^(m-1)."""
    if d.kind != SIGMA_DERIVATION:
        raise ValueError("apply_deriv requires a derivation")
    top = max(p.terms, default=0)
    sigma_y = d.twist.image_of_y
    dpow = [BasePoly.zero()]
    for m in range(1, top + 1):
        dpow.append(sigma_y * dpow[m - 1] + d.image_of_y * BasePoly.y(m - 1))
    out = BasePoly.zero()
    for m, coeff in p.terms.items():
        out = out + coeff * dpow[m]
    return out


def maps_commute(f, g, degree_bound=8):
    """Check f(g(y^m)) == g(f(y^m)) for all m up to degree_bound.

    Returns (True, None) or (False, (m, fg_value, gf_value)) for the smallest
    failing exponent.
    """
    for m in range(degree_bound + 1):
        basis = BasePoly.y(m) if m else BasePoly.one()
        fg = f(g(basis))
        gf = g(f(basis))
        if fg != gf:
            return False, (m, fg, gf)
    return True, None
