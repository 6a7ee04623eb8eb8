"""Arithmetic in the rank-one grading group L(p).

L(p) is generated by x_1..x_n and c with relations p_i*x_i = c. Every
element has a unique normal form sum(l_i*x_i) + l*c with 0 <= l_i < p_i;
the coefficient l of c is the height, the canonical finite-truncation
coordinate. Elements print as "(l_1,...,l_n;l)".
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass


class InsufficientWindowError(Exception):
    """A computation needs degree data outside the trusted height window."""


@dataclass(frozen=True)
class WeightSequence:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) < 2:
            raise ValueError("a weight sequence needs at least two weights")
        if any(p < 1 for p in w):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "_hash", hash(w))

    def __hash__(self):
        # elements hash constantly in window enumerations; cache it
        return self._hash

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def product(self) -> int:
        out = 1
        for p in self.weights:
            out *= p
        return out

    def __repr__(self):
        return "(" + ",".join(str(p) for p in self.weights) + ")"


@dataclass(frozen=True)
class GradingElement:
    p: WeightSequence
    torsion: tuple[int, ...]
    height: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(x) for x in self.torsion))
        object.__setattr__(self, "height", int(self.height))
        if len(self.torsion) != len(self.p):
            raise ValueError("torsion length does not match weight sequence")
        for t, w in zip(self.torsion, self.p):
            if not 0 <= t < max(w, 1):
                raise ValueError(f"{self.torsion} is not a normal form over {self.p}")
        object.__setattr__(self, "_hash", hash((self.p, self.torsion, self.height)))

    def __hash__(self):
        return self._hash

    def __add__(self, other: GradingElement) -> GradingElement:
        self._check_group(other)
        return normalize(
            self.p,
            [a + b for a, b in zip(self.torsion, other.torsion)],
            self.height + other.height,
        )

    def __neg__(self) -> GradingElement:
        return normalize(self.p, [-t for t in self.torsion], -self.height)

    def __sub__(self, other: GradingElement) -> GradingElement:
        return self + (-other)

    def times(self, k: int) -> GradingElement:
        return normalize(self.p, [k * t for t in self.torsion], k * self.height)

    def torsion_sum(self) -> int:
        return sum(self.torsion)

    def is_zero(self) -> bool:
        return self.height == 0 and all(t == 0 for t in self.torsion)

    def _check_group(self, other: GradingElement):
        if self.p != other.p:
            raise ValueError(f"mixed weight sequences {self.p} and {other.p}")

    def __repr__(self):
        return element_str(self)


def normalize(p: WeightSequence, torsion, height: int) -> GradingElement:
    """Fold arbitrary integer coefficients into the unique normal form.

    Group arithmetic funnels through here, so the element is assembled
    directly: the loop already guarantees the normal form the dataclass
    validator would re-check.
    """
    carry = int(height)
    norm = []
    for t, w in zip(torsion, p.weights):
        q, r = divmod(int(t), w)
        norm.append(r)
        carry += q
    tor = tuple(norm)
    out = object.__new__(GradingElement)
    object.__setattr__(out, "p", p)
    object.__setattr__(out, "torsion", tor)
    object.__setattr__(out, "height", carry)
    object.__setattr__(out, "_hash", hash((p, tor, carry)))
    return out


@functools.lru_cache(maxsize=1024)
def zero(p: WeightSequence) -> GradingElement:
    return GradingElement(p, (0,) * len(p), 0)


@functools.lru_cache(maxsize=4096)
def xgen(p: WeightSequence, i: int) -> GradingElement:
    """The generator x_(i+1) (0-based index)."""
    t = [0] * len(p)
    t[i] = 1
    return normalize(p, t, 0)


@functools.lru_cache(maxsize=1024)
def cvec(p: WeightSequence) -> GradingElement:
    return GradingElement(p, (0,) * len(p), 1)


def element_str(l: GradingElement) -> str:
    return "(" + ",".join(str(t) for t in l.torsion) + ";" + str(l.height) + ")"


def parse_element(p: WeightSequence, s: str) -> GradingElement:
    body = s.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed element {s!r}")
    torsion_part, _, height_part = body[1:-1].partition(";")
    if not height_part:
        raise ValueError(f"malformed element {s!r}: missing height")
    torsion = [int(x) for x in torsion_part.split(",")]
    return normalize(p, torsion, int(height_part))


@dataclass(frozen=True)
class EmbeddingSpec:
    """Set-theoretic embedding L(p') -> L(p) for weight sequences that agree
    except at one reduced index, where p'_n <= p_n. Normal-form coefficients
    are copied verbatim; this is injective but not a group homomorphism."""

    source: WeightSequence
    target: WeightSequence
    index: int

    def __post_init__(self):
        if len(self.source) != len(self.target):
            raise ValueError("weight sequences differ in length")
        if not 0 <= self.index < len(self.source):
            raise ValueError("reduced index out of range")
        for i, (a, b) in enumerate(zip(self.source, self.target)):
            if i == self.index:
                if a > b:
                    raise ValueError(f"reduced weight {a} exceeds {b}")
            elif a != b:
                raise ValueError("weight sequences differ away from the reduced index")

    @property
    def delta(self) -> int:
        """p_n - p'_n, the number of extra x_n layers."""
        return self.target[self.index] - self.source[self.index]


def embed(e: EmbeddingSpec, l: GradingElement) -> GradingElement:
    if l.p != e.source:
        raise ValueError("element does not live over the source weights")
    return GradingElement(e.target, l.torsion, l.height)


def preimage(e: EmbeddingSpec, l: GradingElement) -> GradingElement | None:
    if l.p != e.target:
        raise ValueError("element does not live over the target weights")
    if l.torsion[e.index] >= max(e.source[e.index], 1):
        return None
    return GradingElement(e.source, l.torsion, l.height)


@dataclass(frozen=True)
class HeightWindow:
    h_min: int
    h_max: int

    def __post_init__(self):
        if self.h_min > self.h_max:
            raise ValueError(f"empty window [{self.h_min}, {self.h_max}]")

    def contains(self, h: int) -> bool:
        return self.h_min <= h <= self.h_max

    def shrink(self, lo: int, hi: int) -> HeightWindow:
        if self.h_min + lo > self.h_max - hi:
            raise InsufficientWindowError(
                f"window [{self.h_min}, {self.h_max}] too small to shrink by ({lo}, {hi})"
            )
        return HeightWindow(self.h_min + lo, self.h_max - hi)

    def shift(self, d: int) -> HeightWindow:
        return HeightWindow(self.h_min + d, self.h_max + d)

    def intersect(self, other: HeightWindow) -> HeightWindow:
        lo = max(self.h_min, other.h_min)
        hi = min(self.h_max, other.h_max)
        if lo > hi:
            raise InsufficientWindowError(
                f"windows [{self.h_min},{self.h_max}] and [{other.h_min},{other.h_max}] do not overlap"
            )
        return HeightWindow(lo, hi)

    def heights(self) -> range:
        return range(self.h_min, self.h_max + 1)

    def __repr__(self):
        return f"[{self.h_min},{self.h_max}]"


@functools.lru_cache(maxsize=256)
def torsion_classes(p: WeightSequence) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.product(*(range(w) for w in p)))


@functools.lru_cache(maxsize=512)
def enumerate_window(p: WeightSequence, w: HeightWindow) -> tuple[GradingElement, ...]:
    """All (prod p_i) * (h_max - h_min + 1) normal forms with height in w.

    Cached (and therefore returned as a tuple): every module operation walks
    a window, usually the same few per session.
    """
    out = []
    for h in w.heights():
        for t in torsion_classes(p):
            out.append(GradingElement(p, t, h))
    return tuple(out)
