"""The homogeneous coordinate algebra S(p,lambda).

S(p,lambda) = k[u, v, x_1..x_n] / (x_i^{p_i} - lambda_{i0} v + lambda_{i1} u)
graded by L(p) with deg u = deg v = c and deg x_i = x_i. The component at a
normal-form degree (l_1..l_n; l) has the monomial basis
{prod x_i^{l_i} * u^a * v^b : a + b = l}, so its dimension is l+1 when
l >= 0 and 0 otherwise. Monomials are ordered by ascending u-exponent a,
which makes every generator-action matrix deterministic.

k[u,v] itself is the degenerate instance with all-ones weights: each x_i
then has degree c and equals lambda_{i0} v - lambda_{i1} u, so one code
path serves both the weighted algebras and their two-variable core.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .grading import GradingElement, WeightSequence, cvec, normalize, xgen
from .linalg import Matrix


def normalize_point(field, a, b) -> tuple:
    """Canonical projective normalization: first nonzero coordinate = 1."""
    if not field.is_zero(a):
        return (field.one, field.mul(field.inv(a), b))
    if field.is_zero(b):
        raise ValueError("[0:0] is not a projective point")
    return (field.zero, field.one)


def parse_point(field, s: str) -> tuple:
    body = s.strip()
    if not (body.startswith("[") and body.endswith("]")) or ":" not in body:
        raise ValueError(f"malformed projective point {s!r}, expected [a:b]")
    a, _, b = body[1:-1].partition(":")
    return normalize_point(field, field.parse(a.strip()), field.parse(b.strip()))


def point_str(field, pt) -> str:
    return f"[{field.to_str(pt[0])}:{field.to_str(pt[1])}]"


def default_lambda(field, n: int) -> tuple[tuple, ...]:
    """[1:0], [0:1], [1:1], [1:2], ... pairwise distinct points."""
    cap = field.projective_points()
    if cap is not None and cap < n:
        raise ValueError(
            f"field {field!r} has only {cap} projective points, need {n} distinct"
        )
    pts = [(field.one, field.zero), (field.zero, field.one)]
    t = 1
    while len(pts) < n:
        pts.append((field.one, field.of_int(t)))
        t += 1
    return tuple(pts[:n])


@dataclass(frozen=True)
class AlgebraSpec:
    weights: WeightSequence
    lam: tuple[tuple, ...]
    field: object

    def __post_init__(self):
        pts = tuple(normalize_point(self.field, a, b) for a, b in self.lam)
        object.__setattr__(self, "lam", pts)
        if len(pts) != len(self.weights):
            raise ValueError("need one parameter point per weight")
        f = self.field
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                det = f.sub(f.mul(pts[i][0], pts[j][1]), f.mul(pts[j][0], pts[i][1]))
                if f.is_zero(det):
                    raise ValueError(
                        f"parameter points {i + 1} and {j + 1} coincide: "
                        f"{point_str(f, pts[i])}"
                    )

    def n(self) -> int:
        return len(self.weights)

    def generator_names(self) -> list[str]:
        return ["u", "v"] + [f"x{i + 1}" for i in range(self.n())]

    def generator_degree(self, g: str) -> GradingElement:
        if g in ("u", "v"):
            return cvec(self.weights)
        if g.startswith("x"):
            i = int(g[1:]) - 1
            if 0 <= i < self.n():
                return xgen(self.weights, i)
        raise ValueError(f"unknown generator {g!r}")

    def __repr__(self):
        pts = ",".join(point_str(self.field, pt) for pt in self.lam)
        return f"S({self.weights}; {pts}; {self.field!r})"


def spec_with_weights(s: AlgebraSpec, weights: WeightSequence) -> AlgebraSpec:
    """Same parameter points and field over a different weight sequence."""
    return AlgebraSpec(weights, s.lam, s.field)


def core_algebra(field) -> AlgebraSpec:
    """k[u,v] as the all-ones-weights instance."""
    return AlgebraSpec(WeightSequence((1, 1)), default_lambda(field, 2), field)


@dataclass(frozen=True)
class MonomialBasis:
    degree: GradingElement
    monomials: tuple[tuple[tuple[int, ...], int, int], ...]  # (torsion, a, b)

    def dim(self) -> int:
        return len(self.monomials)


@lru_cache(maxsize=None)
def component_basis(s: AlgebraSpec, l: GradingElement) -> MonomialBasis:
    if l.p != s.weights:
        raise ValueError("degree does not live over the algebra's weights")
    h = l.height
    if h < 0:
        return MonomialBasis(l, ())
    return MonomialBasis(l, tuple((l.torsion, a, h - a) for a in range(h + 1)))


def component_dim(s: AlgebraSpec, l: GradingElement) -> int:
    return max(l.height + 1, 0)


@lru_cache(maxsize=None)
def generator_action(s: AlgebraSpec, g: str, l: GradingElement) -> Matrix:
    """Matrix of multiplication by g from the basis of S_l to S_{l + deg g}.

    Bases are u-exponent ordered, so u shifts the index up by one, v keeps
    it, x_i with room in its torsion coordinate is the identity, and x_i at
    the top coordinate wraps through x_i^{p_i} = lambda_{i0} v - lambda_{i1} u.
    """
    f = s.field
    tgt = l + s.generator_degree(g)
    rows = component_dim(s, tgt)
    cols = component_dim(s, l)
    flat = [f.zero] * (rows * cols)
    if cols == 0 or rows == 0:
        return Matrix(f, rows, cols, flat)
    if g == "u":
        for a in range(cols):
            flat[(a + 1) * cols + a] = f.one
    elif g == "v":
        for a in range(cols):
            flat[a * cols + a] = f.one
    else:
        i = int(g[1:]) - 1
        if l.torsion[i] + 1 < s.weights[i]:
            for a in range(cols):
                flat[a * cols + a] = f.one
        else:
            la0, la1 = s.lam[i]
            for a in range(cols):
                flat[a * cols + a] = la0
                flat[(a + 1) * cols + a] = f.neg(la1)
    return Matrix(f, rows, cols, flat)


def power_action(s: AlgebraSpec, g: str, e: int, l: GradingElement) -> Matrix:
    """Matrix of multiplication by g^e from S_l."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    cur = l
    out = Matrix.identity(s.field, component_dim(s, l))
    for _ in range(e):
        out = generator_action(s, g, cur).mul(out)
        cur = cur + s.generator_degree(g)
    return out


def core_basis(s: AlgebraSpec) -> list[tuple[int, ...]]:
    """The prod(p_i) torsion monomials prod x_i^{l_i}, 0 <= l_i < p_i,
    forming the free k[u,v]-basis of S."""
    from .grading import torsion_classes

    return torsion_classes(s.weights)
