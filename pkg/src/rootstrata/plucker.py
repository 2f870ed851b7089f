"""Tangent-line counts: Pluecker polynomials, their limits, closed forms."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .combinat import kostka, stirling_first
from .crs import as_partition, crs_class, euler_pol
from .dpoly import D, DPoly
from .errors import DegreeMismatch, OutOfRange
from .partitions import Partition, validate_stratum
from .schur import schur_expand


class PluckerTable:
    """Counting polynomials Pl_{lam;i} for one tangency pattern.

    The entry at i counts tangent lines of the pattern meeting a generic
    codimension-(i+1) plane condition; i runs down from the codimension
    by steps of two.
    """

    __slots__ = ("partition", "entries")

    def __init__(self, partition, entries):
        self.partition = partition
        self.entries = tuple(entries)

    def polynomial(self, i):
        for j, poly in self.entries:
            if j == i:
                return poly
        raise KeyError(f"no entry at i = {i} for {self.partition}")

    def evaluate(self, d0):
        return [(i, poly(d0)) for i, poly in self.entries]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PluckerTable):
            return NotImplemented
        return self.partition == other.partition and self.entries == other.entries

    def __str__(self):
        rows = [f"Pl_{{{self.partition},{i}}} = {p}" for i, p in self.entries]
        return "\n".join(rows)


class AsymptoticTable:
    """Leading d-coefficients of a Pluecker table."""

    __slots__ = ("partition", "entries")

    def __init__(self, partition, entries):
        self.partition = partition
        self.entries = tuple(entries)

    def value(self, i):
        for j, c in self.entries:
            if j == i:
                return c
        raise KeyError(f"no entry at i = {i} for {self.partition}")

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "\n".join(f"apl_{{{self.partition},{i}}} = {c}" for i, c in self.entries)


def plucker_table(lam):
    """All counting polynomials of a pattern, read off the stratum class."""
    lam = validate_stratum(as_partition(lam))
    cls = crs_class(lam)
    codim = lam.codim
    entries = []
    for j in range(codim // 2 + 1):
        c = cls.coefficient(codim - j, j)
        entries.append((codim - 2 * j, c if isinstance(c, DPoly) else DPoly((c,))))
    return PluckerTable(lam, entries)


def plucker_point(lam):
    """Lines of the pattern through a generic point: a falling factorial."""
    lam = validate_stratum(as_partition(lam))
    poly = DPoly((1,))
    for i in range(lam.weight):
        poly = poly * (D - i)
    return poly * Fraction(1, lam.multiplicity_factorial())


def degree_table(lam):
    """d-degrees of the counting polynomials, checked against the drop rule.

    The first codim - lam_1 + 2 entries keep the full degree |lam|; after
    that each step of j loses one.  A mismatch with the computed table
    raises DegreeMismatch.
    """
    lam = validate_stratum(as_partition(lam))
    table = plucker_table(lam)
    codim, top = lam.codim, lam.largest
    out = []
    for j, (i, poly) in enumerate(table.entries):
        expected = lam.weight
        if j > codim - top + 1:
            expected = lam.weight - (j - codim + top - 1)
        if poly.degree != expected:
            raise DegreeMismatch(
                f"Pl_{{{lam},{i}}} has degree {poly.degree}, predicted {expected}")
        out.append((i, expected))
    return out


def asymptotic_plucker(lam):
    """Limits of Pl / d^{|lam|}: Kostka numbers over multiplicities."""
    lam = validate_stratum(as_partition(lam))
    codim = lam.codim
    nu = lam.reduction().parts
    scale = Fraction(1, lam.multiplicity_factorial())
    entries = []
    for j in range(codim // 2 + 1):
        k = kostka((codim - j, j), nu)
        entries.append((codim - 2 * j, k * scale))
    return AsymptoticTable(lam, entries)


def mflex_coefficient(m, i, k):
    """Coefficient of d^{m-k} in the single-part polynomial Pl_{(m); m-1-2i}.

    Closed form valid for m >= 2i + 1 and i <= k <= m - 1.
    """
    if m < 2 * i + 1 or i < 0:
        raise OutOfRange(f"need m >= 2i+1, got m={m}, i={i}")
    if not i <= k <= m - 1:
        raise OutOfRange(f"need i <= k <= m-1, got k={k}")
    base = (-1) ** (k + i) * comb(k, i) * stirling_first(m, m - k)
    if k >= m - i:
        base -= (-1) ** (k + m - i) * comb(k, m - i) * stirling_first(m, m - k)
    return base


def mflex_polynomial(m, i):
    """Assemble Pl_{(m); m-1-2i} from the closed-form coefficients."""
    if m < 2 * i + 1 or i < 0:
        raise OutOfRange(f"need m >= 2i+1, got m={m}, i={i}")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(i, m):
        coeffs[m - k] = Fraction(mflex_coefficient(m, i, k))
    return DPoly(coeffs)


def hyperflex_count(n):
    """Lines meeting a generic degree-(2n-3) hypersurface in a single point."""
    if n < 3:
        raise OutOfRange("hyperflexes need ambient dimension n >= 3")
    d = 2 * n - 3
    total = 0
    for u in range(1, n):
        total += (-1) ** (u + n + 1) * stirling_first(d, u) * comb(d - u + 1, n - 1) * d ** u
    return total


def lines_on_hypersurface(n):
    """Lines on a generic degree-(2n-3) hypersurface one dimension up.

    Computed independently of hyperflex_count, as the balanced Schur
    coefficient of the Euler class of the space of binary forms.
    """
    if n < 3:
        raise OutOfRange("the count needs ambient dimension n >= 3")
    d = 2 * n - 3
    c = schur_expand(euler_pol(d)).coefficient(n - 1, n - 1)
    assert c.denominator == 1
    return int(c)


def zagier_lines(n):
    """Closed form for the same line count, one extra factor of d per term."""
    if n < 3:
        raise OutOfRange("the count needs ambient dimension n >= 3")
    d = 2 * n - 3
    total = 0
    for u in range(1, n):
        total += (-1) ** (u + n + 1) * stirling_first(d, u) * comb(d - u + 1, n - 1) * d ** (u + 1)
    return total


def euler_schur_relation(d0):
    """Check that the Euler class coefficients are d times the top stratum's."""
    if d0 < 2:
        raise OutOfRange("need degree >= 2")
    from .crs import crs_class_at

    e = schur_expand(euler_pol(d0))
    v = crs_class_at(Partition((d0,)), d0)
    if e.coefficient(d0 + 1, 0) != 0:
        return False
    for j in range((d0 - 1) // 2 + 1):
        if e.coefficient(d0 - j, j + 1) != d0 * v.coefficient(d0 - 1 - j, j):
            return False
    return True
