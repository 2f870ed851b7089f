"""Classes twisted by the hyperplane class of a moving hypersurface."""

from fractions import Fraction

import pytest

from rootstrata.crs import crs_class
from rootstrata.dpoly import D, DPoly
from rootstrata.errors import InvalidPartition
from rootstrata.flagcalc import incidence_class
from rootstrata.multipoly import MultiPoly
from rootstrata.partitions import stratum_partitions
from rootstrata.schur import schur_expand
from rootstrata.universal import (hilbert_degree, pencil_locus_class,
                                  universal_class,
                                  universal_incidence_class)


def strata(max_weight):
    out = []
    for w in range(max_weight + 1):
        out.extend(stratum_partitions(w))
    return out


def test_universal_golden_small():
    u = universal_class((2,))
    assert str(u.poly) == "(d^2 - d)*a + (d^2 - d)*b + (2*d - 2)*xi"
    u3 = universal_class((3,))
    assert u3.xi_slice(2).coefficient(0, 0) == 3 * D - 6
    assert u3.xi_slice(1).coefficient(1, 0) == 3 * D * (D - 2)


def test_universal_restricts_to_stratum_class():
    """Setting xi to zero recovers the plain equivariant class."""
    for lam in strata(10):
        u = universal_class(lam)
        assert u.xi_slice(0) == crs_class(lam).expansion, lam


def test_universal_slices_have_expected_degrees():
    for lam in strata(8):
        u = universal_class(lam)
        codim = lam.codim
        for t in range(codim + 1):
            s = u.xi_slice(t)
            for (k, l), c in s.items():
                assert k + l == codim - t
                dp = c if isinstance(c, DPoly) else DPoly((c,))
                assert dp.degree <= lam.weight - t


def test_hilbert_degrees():
    assert hilbert_degree((2,)) == 2 * (D - 1)
    assert hilbert_degree((3,)) == 3 * (D - 2)
    assert hilbert_degree((4,)) == 4 * (D - 3)
    # the degree-3 specialization is the twisted cubic in P^3
    assert hilbert_degree((3,))(3) == 3
    # discriminant hypersurface degree for plane conics
    assert hilbert_degree((2,))(2) == 2


def test_universal_incidence_restricts_to_incidence():
    for lam in strata(8):
        for m in sorted(set(lam.parts)):
            u = universal_incidence_class(lam, m, lam.codim + 2)
            inc = incidence_class(lam, m)
            assert u.poly.coefficient("xi", 0) == inc.poly, (lam, m)


def test_pencil_golden():
    got = pencil_locus_class((2, 2), 2, 3)
    wanted = (D - 3) * (2 * D ** 2 + 5 * D - 6)
    assert next(iter(got.poly.coefficient("zeta", 1).terms.values())) == wanted
    assert wanted(4) == 46
    assert wanted(5) == 138


def test_pencil_single_tangency_is_the_whole_plane():
    got = pencil_locus_class((2,), 2, 3)
    assert got.poly == MultiPoly.scalar(Fraction(1))


def test_universal_rejects_bad_strata():
    with pytest.raises(InvalidPartition):
        universal_class((2, 1))
