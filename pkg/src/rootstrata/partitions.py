"""Integer partitions indexing root coincidence patterns."""

from __future__ import annotations

from math import factorial

from .errors import InvalidPartition


class Partition:
    """Weakly decreasing tuple of positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = sorted((int(p) for p in parts), reverse=True)
        if ps and ps[-1] < 1:
            raise InvalidPartition(f"parts must be positive, got {ps}")
        self.parts = tuple(ps)

    @classmethod
    def parse(cls, text):
        """Read '3,2,2' or '2^3' or '4,2^2'; '' and '-' mean the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        parts = []
        try:
            for token in text.split(","):
                token = token.strip()
                if "^" in token:
                    base, _, count = token.partition("^")
                    parts.extend([int(base)] * int(count))
                elif token:
                    parts.append(int(token))
        except ValueError:
            raise InvalidPartition(f"cannot read partition {text!r}") from None
        return cls(parts)

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def largest(self):
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return (self.weight, self.parts) < (other.weight, other.parts)

    def multiplicities(self):
        """Map part value -> how often it occurs."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def multiplicity(self, v):
        return self.parts.count(v)

    def multiplicity_factorial(self):
        """Product of e! over the multiplicities e of the part values."""
        out = 1
        for e in self.multiplicities().values():
            out *= factorial(e)
        return out

    def reduction(self):
        """Partition of the parts each lowered by one, zeros dropped."""
        return Partition(p - 1 for p in self.parts if p > 1)

    @property
    def codim(self):
        """Weight of the reduction; the codimension of the stratum."""
        return sum(p - 1 for p in self.parts)

    def remove_one(self, v):
        """Drop a single copy of the part v."""
        ps = list(self.parts)
        ps.remove(v)
        return Partition(ps)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self):
        return f"Partition({self.parts})"


def validate_stratum(lam):
    """Coincidence patterns need every part to be at least 2."""
    if any(p < 2 for p in lam):
        raise InvalidPartition(f"stratum partition needs parts >= 2, got {lam}")
    return lam


def stratum_partitions(weight):
    """All partitions of the given weight with parts >= 2."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 1, -1):
            if remaining - first == 1:
                continue
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(weight, weight):
        yield Partition(parts)
