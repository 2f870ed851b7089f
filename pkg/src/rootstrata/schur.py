"""Divided differences and Schur expansions for a rank-two root pair."""

from __future__ import annotations

from fractions import Fraction

from .errors import NotSymmetric
from .multipoly import MultiPoly, _canon_scalar, _VAR_INDEX, as_multipoly


def divided_difference(p, x="a", y="b"):
    """Apply (q - q with x,y exchanged) / (y - x) through the monomial rule.

    Extra variables ride along untouched, so the same operator serves the
    root pair (a, b) and the flag pair (eta, zeta).
    """
    p = as_multipoly(p)
    merged = tuple(sorted(set(p.variables) | {x, y}, key=_VAR_INDEX.__getitem__))
    pos = [merged.index(v) for v in p.variables]
    ix, iy = merged.index(x), merged.index(y)
    out = {}
    for e, c in p.terms.items():
        big = [0] * len(merged)
        for i, v in zip(pos, e):
            big[i] = v
        i, j = big[ix], big[iy]
        if i == j:
            continue
        neg = i > j
        if neg:
            i, j = j, i
            c = -c
        for t in range(j - i):
            big[ix], big[iy] = i + t, j - 1 - t
            key = tuple(big)
            out[key] = out.get(key, Fraction(0)) + c
    return MultiPoly(merged, out)


class SchurExpansion:
    """Finite combination of the basis classes s_{k,l} with k >= l >= 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (k, l), c in (coeffs or {}).items():
            if not (k >= l >= 0):
                raise ValueError(f"bad index ({k}, {l}): need k >= l >= 0")
            c = _canon_scalar(c)
            if c != 0:
                clean[(int(k), int(l))] = c
        self.coeffs = clean

    def coefficient(self, k, l):
        return self.coeffs.get((k, l), Fraction(0))

    def items(self):
        """Pairs ((k, l), coeff), highest degree first, then k descending."""
        return sorted(self.coeffs.items(),
                      key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]),
                      reverse=True)

    def indices(self):
        return [kl for kl, _ in self.items()]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for kl, c in other.coeffs.items():
            out[kl] = out.get(kl, Fraction(0)) + c
        return SchurExpansion(out)

    def __sub__(self, other):
        return self + other.map_coefficients(lambda c: -c)

    def __mul__(self, scalar):
        return self.map_coefficients(lambda c: c * scalar)

    __rmul__ = __mul__

    def map_coefficients(self, f):
        return SchurExpansion({kl: f(c) for kl, c in self.coeffs.items()})

    def evaluate_d(self, k):
        from .dpoly import DFrac, DPoly

        def ev(c):
            if isinstance(c, DPoly):
                return c(k)
            if isinstance(c, DFrac):
                return c.evaluate(k)
            return c

        return self.map_coefficients(ev)

    def truncate(self, kmax):
        """Drop every s_{k,l} with k above kmax."""
        return SchurExpansion({kl: c for kl, c in self.coeffs.items() if kl[0] <= kmax})

    def to_roots(self, x="a", y="b"):
        """Rewrite as a plain polynomial in the two roots."""
        total = MultiPoly.zero()
        for (k, l), c in self.coeffs.items():
            mono = {(l + t, k - t): 1 for t in range(k - l + 1)}
            total = total + MultiPoly((x, y), mono) * c
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for (k, l), c in self.items():
            base = f"s_{{{k},{l}}}" if (k, l) != (0, 0) else ""
            coef = str(c) if isinstance(c, Fraction) else f"({c})"
            if base:
                bits.append(base if coef == "1" else f"{coef}*{base}")
            else:
                bits.append(coef)
        return " + ".join(bits)

    def __repr__(self):
        return f"SchurExpansion({self})"


def schur_expand(p, x="a", y="b"):
    """Write a symmetric polynomial in x, y as a combination of s_{k,l}.

    Works by stripping the graded-lex leading monomial, which for a
    symmetric polynomial always has exponents k >= l.
    """
    p = as_multipoly(p)
    if not p.is_symmetric(x, y):
        raise NotSymmetric(f"not symmetric in {x}, {y}: {p}")
    work = p.two_var_terms(x, y)
    out = {}
    while work:
        i, j = max(work, key=lambda e: (e[0] + e[1], e[0]))
        c = work.pop((i, j))
        assert i >= j
        out[(i, j)] = c
        for t in range(i - j):
            key = (j + t, i - t)
            rest = work.get(key, Fraction(0)) - c
            if rest == 0:
                work.pop(key, None)
            else:
                work[key] = rest
    return SchurExpansion(out)


def schur_to_roots(e, x="a", y="b"):
    return e.to_roots(x, y)


def h_roots(r, x="a", y="b"):
    """Complete homogeneous piece of degree r in two roots."""
    if r < 0:
        return MultiPoly.zero()
    return MultiPoly((x, y), {(t, r - t): 1 for t in range(r + 1)})


def _h_chern(r):
    # h_r in (c1, c2) via h_r = c1 h_{r-1} - c2 h_{r-2}
    c1 = MultiPoly.variable("c1")
    c2 = MultiPoly.variable("c2")
    hs = [MultiPoly.scalar(1), c1]
    while len(hs) <= r:
        hs.append(c1 * hs[-1] - c2 * hs[-2])
    return hs[r]


def schur_to_chern(e):
    """Rewrite a Schur combination in the symmetric generators c1, c2."""
    c2 = MultiPoly.variable("c2")
    total = MultiPoly.zero()
    for (k, l), c in e.coeffs.items():
        total = total + (c2 ** l) * _h_chern(k - l) * c
    return total


def chern_to_schur(p):
    """Inverse of schur_to_chern: substitute the roots and expand."""
    a = MultiPoly.variable("a")
    b = MultiPoly.variable("b")
    return schur_expand(p.substitute({"c1": a + b, "c2": a * b}).lift_d())


def complete_h_expand(nu):
    """Schur expansion of the product of complete homogeneous pieces h_nu."""
    total = MultiPoly.scalar(1)
    for r in nu:
        total = total * h_roots(r)
    return schur_expand(total)
