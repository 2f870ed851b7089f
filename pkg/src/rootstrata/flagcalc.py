"""Pushforward calculus on flags of a point on a line in projective space.

Classes live on the partial flag variety of pairs (point, line); zeta is
the hyperplane class pulled back along the point map q, and eta is the
other Chern root of the dual tautological rank-two bundle of the line
map p, so the line's Schur classes are symmetric in (zeta, eta).

Sign convention: the fibrewise integral along p acts on monomials as the
divided difference (f(zeta, eta) - f(eta, zeta)) / (zeta - eta), fixed so
that p_push(zeta) is the unit class.
"""

from __future__ import annotations

from fractions import Fraction

from .crs import as_partition, crs_class, _map_dpoly
from .dpoly import D, DPoly
from .errors import InvalidPartition
from .multipoly import MultiPoly, substitute_homogeneous
from .partitions import validate_stratum
from .schur import SchurExpansion, divided_difference, schur_expand

_ZETA = MultiPoly.variable("zeta")
_ETA = MultiPoly.variable("eta")
_XI = MultiPoly.variable("xi")


class FlagClass:
    """Polynomial in zeta, eta (optionally xi) with d-polynomial scalars."""

    __slots__ = ("poly", "ambient_n")

    def __init__(self, poly, ambient_n=None):
        extra = [v for v in poly.variables if v not in ("zeta", "eta", "xi")]
        if extra:
            raise ValueError(f"flag classes use zeta, eta, xi; got {extra}")
        if ambient_n is not None and ambient_n < 3:
            raise ValueError("ambient projective space needs n >= 3")
        self.poly = poly
        self.ambient_n = ambient_n

    def in_zeta_sigma(self):
        """Rewrite with the line's first Chern class sigma1 = zeta + eta."""
        sigma1 = MultiPoly.variable("sigma1")
        return self.poly.substitute({"eta": sigma1 - _ZETA})

    @classmethod
    def from_zeta_sigma(cls, poly, ambient_n=None):
        return cls(poly.substitute({"sigma1": _ZETA + _ETA}), ambient_n)

    def __eq__(self, other):
        if not isinstance(other, FlagClass):
            return NotImplemented
        return self.poly == other.poly and self.ambient_n == other.ambient_n

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"FlagClass({self.poly}, n={self.ambient_n})"


class GrassClass:
    """Schur class of the space of lines, truncated to the ambient dimension."""

    __slots__ = ("expansion", "ambient_n")

    def __init__(self, expansion, ambient_n=None):
        if ambient_n is not None:
            expansion = expansion.truncate(ambient_n - 2)
        self.expansion = expansion
        self.ambient_n = ambient_n

    def coefficient(self, k, l):
        return self.expansion.coefficient(k, l)

    def __eq__(self, other):
        if not isinstance(other, GrassClass):
            return NotImplemented
        return self.expansion == other.expansion and self.ambient_n == other.ambient_n

    def __str__(self):
        return str(self.expansion)

    def __repr__(self):
        return f"GrassClass({self.expansion}, n={self.ambient_n})"


class ProjClass:
    """Polynomial in the hyperplane class zeta modulo zeta^n."""

    __slots__ = ("poly", "ambient_n")

    def __init__(self, poly, ambient_n):
        if "eta" in poly.variables or "xi" in poly.variables:
            raise ValueError("a projective-space class depends on zeta alone")
        if "zeta" in poly.variables:
            i = poly.variables.index("zeta")
            cut = {e: c for e, c in poly.terms.items() if e[i] < ambient_n}
            poly = MultiPoly(poly.variables, cut)
        self.poly = poly
        self.ambient_n = ambient_n

    def coefficient(self, power):
        picked = self.poly.coefficient("zeta", power)
        for _, c in picked.terms.items():
            return c
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.poly == other.poly and self.ambient_n == other.ambient_n

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"ProjClass({self.poly}, n={self.ambient_n})"


def p_push(f):
    """Integrate along the line map: divided difference, then Schur expand."""
    dd = divided_difference(f.poly, "eta", "zeta")
    return GrassClass(schur_expand(dd, "zeta", "eta"), f.ambient_n)


def q_push(f):
    """Integrate along the point map.

    On monomials, eta^i zeta^j goes to the degree-(i - n + 2) piece of
    1/(1 - zeta) inverted: 1 for i = n - 2, -zeta for i = n - 1, else 0.
    """
    n = f.ambient_n
    if n is None:
        raise ValueError("q_push needs the ambient dimension")
    poly = f.poly
    if "xi" in poly.variables:
        raise ValueError("slice out xi before pushing forward")
    terms = poly.two_var_terms("eta", "zeta")
    out = {}
    for (i, j), c in terms.items():
        r = i - (n - 2)
        if r == 0:
            key = (j,)
        elif r == 1:
            key, c = (j + 1,), -c
        else:
            continue
        out[key] = out.get(key, Fraction(0)) + c
    return ProjClass(MultiPoly(("zeta",), out), n)


def incidence_class(lam, m):
    """Class of pairs (tangency point, curve) with pattern lam peeled at m.

    The smaller stratum rides on the quotient of the form space by the
    forms vanishing to order m at the point; its roots get twisted by
    m/(d-m) in the eta direction, and the Euler factor of the quotient
    multiplies in.
    """
    lam = validate_stratum(as_partition(lam))
    if m not in lam.parts:
        raise InvalidPartition(f"{m} is not a part of {lam}")
    sub = lam.remove_one(m)
    prev = crs_class(sub)
    if sub:
        shifted = _map_dpoly(prev.to_roots(), lambda c: c.compose(D - m))
        twisted = substitute_homogeneous(
            shifted, {"a": _ETA * D, "b": _ZETA * (D - m) + _ETA * m}, D - m)
    else:
        twisted = MultiPoly.scalar(1)
    e_factor = MultiPoly.scalar(1)
    for i in range(m):
        e_factor = e_factor * (_ZETA * (D - i) + _ETA * i)
    return FlagClass(twisted * e_factor)


def tangency_class_resolution(lam, n, peel=None):
    """Stratum class recovered by resolving through the incidence variety.

    Must agree with crs_class up to the ambient truncation; peel picks
    which part to split off (largest by default).
    """
    lam = validate_stratum(as_partition(lam))
    if not lam:
        return GrassClass(SchurExpansion({(0, 0): 1}), n)
    m = peel if peel is not None else lam.largest
    inc = incidence_class(lam, m)
    pushed = p_push(FlagClass(inc.poly, n))
    return GrassClass(pushed.expansion * Fraction(1, lam.multiplicity(m)), n)


def flex_point_locus_class(lam, m, n):
    """Locus in projective space swept by the m-fold tangency points."""
    inc = incidence_class(lam, m)
    return q_push(FlagClass(inc.poly, n))
