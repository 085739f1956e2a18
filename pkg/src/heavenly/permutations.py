"""Permutations on a small fixed set of points.

Points are 1-indexed; a permutation of degree n stores the image tuple
(images[i-1] is where point i goes).  Composition is left-to-right:
(p * q)(i) = q(p(i)), so parsing "(1 2)" then "(2 3)" and multiplying gives
the 3-cycle (1 3 2).  Degree is capped at 17: everything in this toolkit
acts on at most 17 points (the affine degree-17 witness is the largest).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InputError

MAX_DEGREE = 17


@dataclass(frozen=True)
class Perm:
    """A permutation of {1, ..., n} as an image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n > MAX_DEGREE:
            raise InputError(f"degree {n} exceeds the cap of {MAX_DEGREE}")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Left-to-right composition: apply self first, then other."""
        if self.degree != other.degree:
            raise InputError("composition of permutations of unequal degree")
        return Perm(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Perm":
        out = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            out[img - 1] = i
        return Perm(tuple(out))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        """True when self^2 is the identity (includes the identity itself)."""
        return (self * self).is_identity()

    def order(self) -> int:
        k = 1
        acc = self
        while not acc.is_identity():
            acc = acc * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like "(1 2 3 4)(5 6)"; "()" is the identity.

    Points are whitespace-separated and 1-indexed; points not mentioned are
    fixed.  The degree must be given since fixed points are implicit.
    """
    s = text.strip()
    if not s:
        raise InputError("empty cycle string")
    stripped = _CYCLE_RE.sub("", s)
    if stripped.strip():
        raise InputError(f"unbalanced or stray text in cycle string {text!r}")
    images = list(range(1, degree + 1))
    for body in _CYCLE_RE.findall(s):
        points = [int(tok) for tok in body.split()]
        if not points:
            continue
        if len(set(points)) != len(points):
            raise InputError(f"repeated point in cycle ({body})")
        for pt in points:
            if not 1 <= pt <= degree:
                raise InputError(f"point {pt} outside 1..{degree}")
        for i, pt in enumerate(points):
            if images[pt - 1] != pt:
                raise InputError(f"point {pt} appears in two cycles")
            images[pt - 1] = points[(i + 1) % len(points)]
    return Perm(tuple(images))


def format_cycles(p: Perm) -> str:
    """Cycle notation; the identity renders as "()"."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(pt) for pt in cyc) + ")" for cyc in cycs)
