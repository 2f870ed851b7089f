"""Equivariant classes of coincident root strata of binary forms.

The stratum for a partition lambda collects degree-d forms with root
multiplicities lambda_1, lambda_2, ...  Its closure carries a class in
the Schur basis s_{k,l} of the symmetric functions of the two Chern
roots, with coefficients that are polynomials in d; crs_class computes
it by peeling one largest part per level.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .dpoly import D, DPoly
from .errors import DegreeTooSmall, InvalidPartition
from .multipoly import MultiPoly, as_multipoly
from .multipoly import substitute_homogeneous
from .partitions import Partition, validate_stratum
from .schur import (SchurExpansion, complete_h_expand, divided_difference,
                    schur_expand)

_A = MultiPoly.variable("a")
_B = MultiPoly.variable("b")


def as_partition(x):
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(x)


class CRSClass:
    """Schur expansion of one stratum class, coefficients polynomial in d."""

    __slots__ = ("partition", "expansion")

    def __init__(self, partition, expansion):
        codim = partition.codim
        weight = partition.weight
        for (k, l), c in expansion.coeffs.items():
            if k + l != codim:
                raise ValueError(
                    f"index ({k},{l}) off the codimension-{codim} diagonal")
            if _deg(c) > weight:
                raise ValueError(f"coefficient of s_{{{k},{l}}} exceeds degree {weight}")
        top = expansion.coefficient(codim, 0)
        if _deg(top) != weight:
            raise ValueError(
                f"top coefficient must have degree exactly {weight}, got {top}")
        self.partition = partition
        self.expansion = expansion

    def coefficient(self, k, l):
        return self.expansion.coefficient(k, l)

    def to_roots(self, x="a", y="b"):
        return self.expansion.to_roots(x, y)

    def evaluate(self, d0):
        return self.expansion.evaluate_d(d0)

    def leading_slice(self):
        """Coefficient of d^{|lambda|} in each Schur coordinate."""
        w = self.partition.weight

        def top(c):
            if isinstance(c, DPoly):
                return c.coeffs[w] if c.degree == w else Fraction(0)
            return c if w == 0 else Fraction(0)

        return self.expansion.map_coefficients(top)

    def __eq__(self, other):
        if not isinstance(other, CRSClass):
            return NotImplemented
        return self.partition == other.partition and self.expansion == other.expansion

    def __str__(self):
        return f"[{self.partition}] = {self.expansion}"

    def __repr__(self):
        return f"CRSClass({self})"


def _deg(c):
    return c.degree if isinstance(c, DPoly) else 0


def weighted_product(m):
    """Product of (i*a + (d - i)*b) for i = 0 .. m-1, with d a variable."""
    total = MultiPoly.scalar(1)
    for i in range(m):
        total = total * (_A * i + _B * (D - i))
    return total.lower_d()


def twist(p, q):
    """Substitute a -> (1 + q) a and b -> b + q a."""
    p = as_multipoly(p)
    return p.substitute({"a": _A * (1 + q), "b": _B + _A * q})


def crs_class(lam):
    """Class of the closed stratum, memoized on the sorted partition."""
    lam = validate_stratum(as_partition(lam))
    return _crs_cached(lam.parts)


@lru_cache(maxsize=None)
def _crs_cached(parts):
    lam = Partition(parts)
    if not lam:
        return CRSClass(lam, SchurExpansion({(0, 0): 1}))
    return crs_class_peeled(lam, lam.largest)


def crs_class_peeled(lam, m):
    """One recursion level that peels a chosen part value m off lam.

    The twisted smaller class keeps the single denominator (d - m)^codim;
    clearing it demands exact divisibility, which doubles as a proof that
    the answer is polynomial in d.
    """
    lam = validate_stratum(as_partition(lam))
    if m not in lam.parts:
        raise InvalidPartition(f"{m} is not a part of {lam}")
    em = lam.multiplicity(m)
    sub = lam.remove_one(m)
    prev = crs_class(sub)
    if sub:
        shifted = _map_dpoly(prev.to_roots(), lambda c: c.compose(D - m))
        twisted = substitute_homogeneous(
            shifted, {"a": _A * D, "b": _B * (D - m) + _A * m}, D - m)
    else:
        twisted = MultiPoly.scalar(1)
    prod = twisted * weighted_product(m).lift_d()
    expansion = schur_expand(divided_difference(prod)) * Fraction(1, em)
    return CRSClass(lam, expansion)


def _map_dpoly(p, f):
    return MultiPoly(p.variables, {
        e: f(c if isinstance(c, DPoly) else DPoly((c,)))
        for e, c in p.terms.items()})


def crs_class_at(lam, d0):
    """The same recursion with d frozen at the integer d0; pure, no cache."""
    lam = validate_stratum(as_partition(lam))
    d0 = int(d0)
    if d0 < lam.weight:
        raise DegreeTooSmall(
            f"degree {d0} cannot hold a stratum of weight {lam.weight}")
    if not lam:
        return SchurExpansion({(0, 0): 1})
    m = lam.largest
    sub = lam.remove_one(m)
    prev = crs_class_at(sub, d0 - m)
    tw = prev.to_roots()
    if sub:
        q = Fraction(m, d0 - m)
        tw = tw.substitute({"a": _A * (1 + q), "b": _B + _A * q})
    wp = weighted_product(m).evaluate_d(d0)
    expansion = schur_expand(divided_difference(tw * wp))
    return expansion * Fraction(1, lam.multiplicity(m))


def crs_m_closed(m):
    """Single-part stratum class straight from one divided difference."""
    lam = validate_stratum(Partition((m,)))
    expansion = schur_expand(divided_difference(weighted_product(m).lift_d()))
    return CRSClass(lam, expansion)


def euler_pol(d0):
    """Equivariant Euler class of the space of binary degree-d0 forms."""
    d0 = int(d0)
    total = MultiPoly.scalar(1)
    for i in range(d0 + 1):
        total = total * (_A * i + _B * (d0 - i))
    return total


def euler_identity_check(d0):
    """Does the Euler class equal d * a * b times the top stratum class?"""
    if d0 < 2:
        raise DegreeTooSmall("the full-coincidence stratum needs degree >= 2")
    rhs = _A * _B * crs_class_at(Partition((d0,)), d0).to_roots() * d0
    return euler_pol(d0) == rhs


def leading_term(lam):
    """Top d-coefficient of the class: h of the reduction over multiplicities."""
    lam = validate_stratum(as_partition(lam))
    exp = complete_h_expand(lam.reduction().parts)
    return exp * Fraction(1, lam.multiplicity_factorial())
