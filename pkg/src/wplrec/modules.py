"""Windowed graded modules and exact degreewise linear algebra on them.

A module is stored as finitely many components: a dimension and a set of
generator-action matrices for every degree whose height lies in a trusted
window. All structural operations (hom spaces, kernels, cokernels, minimal
generators, syzygies, Koszul homology) reduce to exact row reduction on
those matrices, degree by degree.

Window soundness rules, applied throughout:
  * free, simple and monomial-quotient modules are globally computable, so
    their full window is trusted;
  * kernels and cokernels shrink the trusted window by one height on each
    side;
  * a shift by l moves the window down by height(l) and loses sigma(l) more
    heights at the top, where sigma(l) counts nonzero torsion coordinates
    (the extra carries a degree sum can pick up);
  * support_min records a height below which the module is provably zero
    everywhere, which is what lets a bottom window row be certified as
    having no incoming actions from outside the window; support_max is the
    dual bound above which the module is provably zero. Both are global
    facts, not window-relative ones, and shifts recompute them exactly
    whenever the whole support is certified to sit inside the window.

Operations that would otherwise silently return wrong answers raise
InsufficientWindowError instead.
"""

from __future__ import annotations

import functools
import itertools
import random

from .algebra import (
    AlgebraSpec,
    component_basis,
    component_dim,
    core_algebra,
    generator_action,
    power_action,
)
from .grading import (
    GradingElement,
    HeightWindow,
    InsufficientWindowError,
    enumerate_window,
    torsion_classes,
)
from .linalg import (
    Matrix,
    block_diag,
    hstack_all,
    invert,
    kernel_basis,
    rank,
    rref,
    solve,
    solve_matrix,
)

__all__ = [
    "InsufficientWindowError",
    "WindowedModule",
    "GradedMorphism",
    "make_module",
    "validate_module",
    "validate_morphism",
    "free_module",
    "simple_module",
    "zero_module",
    "direct_sum",
    "shift_module",
    "shift_morphism",
    "monomial_quotient",
    "module_power_action",
    "hom_space",
    "zero_morphism",
    "identity_morphism",
    "compose",
    "kernel",
    "cokernel",
    "is_isomorphic",
    "modules_equal",
    "morphisms_equal",
    "minimal_generators",
    "syzygy",
    "composition_factors",
    "ses_exact",
    "coset_restriction",
    "koszul_tor",
    "is_cohen_macaulay",
    "module_to_doc",
    "module_from_doc",
]


def degree_key(l: GradingElement):
    """Sort key compatible with generator actions: every action strictly
    increases it, so ascending order is a topological order."""
    return (l.height, l.torsion)


class WindowedModule:
    """Graded module known on a height window.

    dims holds the nonzero component dimensions; actions holds the matrix
    of each generator g from each degree l (keyed (g, l)) whenever both the
    source and target components are nonzero and inside the window.
    """

    __slots__ = ("algebra", "window", "support_min", "support_max",
                 "_dims", "_actions")

    def __init__(self, algebra, window, dims, actions, support_min,
                 support_max=None):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "support_min", support_min)
        object.__setattr__(self, "support_max", support_max)
        object.__setattr__(self, "_dims", dict(dims))
        object.__setattr__(self, "_actions", dict(actions))

    def __setattr__(self, *a):
        raise AttributeError("WindowedModule is immutable")

    def dim(self, l: GradingElement) -> int:
        if l.height > self.window.h_max:
            if self.support_max is not None and l.height > self.support_max:
                return 0
            raise InsufficientWindowError(f"degree {l} above window {self.window}")
        if l.height < self.window.h_min:
            if self.support_min is not None and l.height < self.support_min:
                return 0
            raise InsufficientWindowError(f"degree {l} below window {self.window}")
        return self._dims.get(l, 0)

    def action(self, g: str, l: GradingElement) -> Matrix:
        tgt = l + self.algebra.generator_degree(g)
        rows = self.dim(tgt)
        cols = self.dim(l)
        m = self._actions.get((g, l))
        if m is None:
            return Matrix.zero(self.algebra.field, rows, cols)
        return m

    def degrees(self) -> list[GradingElement]:
        return sorted(self._dims, key=degree_key)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def is_zero_module(self) -> bool:
        return not self._dims

    def __repr__(self):
        return (
            f"WindowedModule({self.algebra!r}, window {self.window}, "
            f"total dim {self.total_dim()})"
        )


def make_module(algebra, window, dims, actions, support_min=None,
                support_max=None) -> WindowedModule:
    """Normalize and shape-check raw component data."""
    clean_dims = {}
    for l, d in dims.items():
        if l.p != algebra.weights:
            raise ValueError(f"degree {l} does not live over {algebra.weights}")
        if not window.contains(l.height):
            raise ValueError(f"degree {l} outside window {window}")
        if d < 0:
            raise ValueError("negative dimension")
        if support_min is not None and d > 0 and l.height < support_min:
            raise ValueError(f"nonzero component {l} below support_min {support_min}")
        if support_max is not None and d > 0 and l.height > support_max:
            raise ValueError(f"nonzero component {l} above support_max {support_max}")
        if d:
            clean_dims[l] = d
    clean_actions = {}
    for (g, l), m in actions.items():
        tgt = l + algebra.generator_degree(g)
        rows = clean_dims.get(tgt, 0)
        cols = clean_dims.get(l, 0)
        if not window.contains(l.height) or not window.contains(tgt.height):
            raise ValueError(f"action ({g}, {l}) crosses window {window}")
        if m.rows != rows or m.cols != cols:
            raise ValueError(f"action ({g}, {l}) has shape {m.rows}x{m.cols}, "
                             f"expected {rows}x{cols}")
        if rows and cols and not m.is_zero():
            clean_actions[(g, l)] = m
    return WindowedModule(algebra, window, clean_dims, clean_actions,
                          support_min, support_max)


def validate_module(m: WindowedModule) -> None:
    """Check commutativity of the generator actions and the defining
    relations x_i^{p_i} = lambda_{i0} v - lambda_{i1} u wherever every
    component involved is inside the window. Raises ValueError on failure."""
    s = m.algebra
    f = s.field
    gens = s.generator_names()
    for l in m.degrees():
        for a in gens:
            da = s.generator_degree(a)
            if not m.window.contains((l + da).height):
                continue
            for b in gens:
                db = s.generator_degree(b)
                if not m.window.contains((l + da + db).height):
                    continue
                if not m.window.contains((l + db).height):
                    continue
                lhs = m.action(b, l + da).mul(m.action(a, l))
                rhs = m.action(a, l + db).mul(m.action(b, l))
                if lhs != rhs:
                    raise ValueError(f"actions of {a} and {b} do not commute at {l}")
        for i, p_i in enumerate(s.weights):
            g = f"x{i + 1}"
            top = l + s.generator_degree(g).times(p_i)
            if not m.window.contains(top.height):
                continue
            chain = module_power_action(m, g, p_i, l)
            la0, la1 = s.lam[i]
            lin = m.action("v", l).scale(la0).sub(m.action("u", l).scale(la1))
            if chain != lin:
                raise ValueError(f"relation x{i + 1}^{p_i} fails at {l}")


def module_power_action(m: WindowedModule, g: str, e: int, l: GradingElement) -> Matrix:
    cur = l
    out = Matrix.identity(m.algebra.field, m.dim(l))
    for _ in range(e):
        out = m.action(g, cur).mul(out)
        cur = cur + m.algebra.generator_degree(g)
    return out


# ---------------------------------------------------------------------------
# constructions


@functools.lru_cache(maxsize=512)
def free_module(s: AlgebraSpec, l: GradingElement, window: HeightWindow) -> WindowedModule:
    """The shifted free module S(l), with S(l)_d = S_{d+l}; its generator
    sits in degree -l.

    Cached: frees are rebuilt constantly as comparison targets and cover
    summands, and modules are never mutated after construction.
    """
    dims = {}
    actions = {}
    for d in enumerate_window(s.weights, window):
        n = component_dim(s, d + l)
        if not n:
            continue
        dims[d] = n
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if window.contains(tgt.height) and component_dim(s, tgt + l):
                actions[(g, d)] = generator_action(s, g, d + l)
    return make_module(s, window, dims, actions, support_min=(-l).height)


def simple_module(s: AlgebraSpec, l: GradingElement, window: HeightWindow) -> WindowedModule:
    """k(l): one-dimensional in degree -l, all generators acting by zero."""
    deg = -l
    dims = {deg: 1} if window.contains(deg.height) else {}
    return make_module(s, window, dims, {}, support_min=deg.height,
                       support_max=deg.height)


def zero_module(s: AlgebraSpec, window: HeightWindow) -> WindowedModule:
    return make_module(s, window, {}, {}, support_min=window.h_max + 1,
                       support_max=window.h_min - 1)


def direct_sum(mods: list[WindowedModule]) -> WindowedModule:
    if not mods:
        raise ValueError("direct_sum needs at least one summand")
    s = mods[0].algebra
    if any(m.algebra != s for m in mods):
        raise ValueError("summands live over different algebras")
    window = mods[0].window
    for m in mods[1:]:
        window = window.intersect(m.window)
    sup = None
    if all(m.support_min is not None for m in mods):
        sup = min(m.support_min for m in mods)
    top = None
    if all(m.support_max is not None for m in mods):
        top = max(m.support_max for m in mods)
    dims = {}
    actions = {}
    for d in enumerate_window(s.weights, window):
        n = sum(m.dim(d) for m in mods)
        if not n:
            continue
        dims[d] = n
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if window.contains(tgt.height) and sum(m.dim(tgt) for m in mods):
                actions[(g, d)] = block_diag(s.field, [m.action(g, d) for m in mods])
    return make_module(s, window, dims, actions, support_min=sup,
                       support_max=top)


def shift_module(m: WindowedModule, l: GradingElement) -> WindowedModule:
    """M(l) with M(l)_d = M_{d+l}. The trusted window drops by height(l)
    and loses sigma(l) heights at the top to absorb torsion carries."""
    s = m.algebra
    sigma = sum(1 for t in l.torsion if t)
    if m.window.h_min > m.window.h_max - sigma:
        raise InsufficientWindowError(
            f"window {m.window} too small to shift by {l} (sigma = {sigma})"
        )
    window = HeightWindow(
        m.window.h_min - l.height, m.window.h_max - l.height - sigma
    )
    dims = {}
    actions = {}
    for d in enumerate_window(s.weights, window):
        n = m.dim(d + l)
        if not n:
            continue
        dims[d] = n
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if window.contains(tgt.height) and m.dim(tgt + l):
                actions[(g, d)] = m.action(g, d + l)
    certified = (
        m.support_min is not None and m.support_min >= m.window.h_min
        and m.support_max is not None and m.support_max <= m.window.h_max
    )
    if certified:
        # the whole support is visible, so recompute the bounds exactly
        heights = [(d - l).height for d in m.degrees()]
        sup = min(heights) if heights else window.h_max + 1
        top = max(heights) if heights else window.h_min - 1
    else:
        sup = None if m.support_min is None else m.support_min - l.height - sigma
        top = None if m.support_max is None else m.support_max - l.height
    return make_module(s, window, dims, actions, support_min=sup,
                       support_max=top)


def _quotient_by_spans(n_mod, spans, window, support_min, support_max=None,
                       certify_top=False):
    """Quotient of n_mod by an action-stable degreewise family of subspaces.

    spans maps degree -> list of vectors inside that component. Returns the
    quotient module and the projection morphism. The caller vouches that the
    spans are the window part of a genuine submodule; the trusted window is
    whatever it passes in.
    """
    s = n_mod.algebra
    f = s.field
    proj_mats = {}
    sect_mats = {}
    dims = {}
    for d in enumerate_window(s.weights, window):
        nd = n_mod.dim(d)
        if not nd:
            continue
        vecs = spans.get(d, [])
        if vecs:
            r, piv = rref(Matrix.from_rows(f, [tuple(v) for v in vecs]))
            piv = list(piv)
        else:
            piv = []
            r = None
        pivset = set(piv)
        rest = [j for j in range(nd) if j not in pivset]
        q = len(rest)
        pos = {j: k for k, j in enumerate(rest)}
        pflat = [f.zero] * (q * nd)
        # e_j maps to e_j - (its pivot row) mod the span; on the surviving
        # coordinates that is a unit column or minus a row restriction
        for j in range(nd):
            if j in pivset:
                srow = piv.index(j)
                for t in rest:
                    pflat[pos[t] * nd + j] = f.neg(r.entry(srow, t))
            else:
                pflat[pos[j] * nd + j] = f.one
        proj_mats[d] = Matrix(f, q, nd, pflat)
        sflat = [f.zero] * (nd * q)
        for t in rest:
            sflat[t * q + pos[t]] = f.one
        sect_mats[d] = Matrix(f, nd, q, sflat)
        if q:
            dims[d] = q
    actions = {}
    for d, q in dims.items():
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if window.contains(tgt.height) and dims.get(tgt, 0):
                actions[(g, d)] = proj_mats[tgt].mul(n_mod.action(g, d)).mul(sect_mats[d])
    if certify_top and support_max is None:
        # caller vouches the quotient is generated at heights <= h_max; a
        # zero top row then forces everything above it to vanish, because
        # heights never decrease along generator actions
        if not any(d.height == window.h_max for d in dims):
            support_max = max((d.height for d in dims), default=window.h_min - 1)
    quot = make_module(s, window, dims, actions, support_min=support_min,
                       support_max=support_max)
    comps = {d: m for d, m in proj_mats.items() if m.rows and m.cols}
    proj = GradedMorphism(n_mod, quot, window, comps)
    return quot, proj


def monomial_quotient(s, l, powers, window):
    """S(l)/(g^e for g, e in powers), powers a dict like {"x1": 1, "x3": 4}.

    The ideal images are computed from the free module at every degree, so
    the full window is trusted.
    """
    free = free_module(s, l, window)
    spans = {}
    for d in enumerate_window(s.weights, window):
        if not component_dim(s, d + l):
            continue
        vecs = []
        for g, e in sorted(powers.items()):
            if e < 1:
                raise ValueError(f"exponent for {g} must be >= 1")
            src = d - s.generator_degree(g).times(e)
            mat = power_action(s, g, e, src + l)
            vecs.extend(mat.columns())
        if vecs:
            spans[d] = vecs
    return _quotient_by_spans(free, spans, window, support_min=free.support_min,
                              certify_top=(-l).height <= window.h_max)


# ---------------------------------------------------------------------------
# morphisms


class GradedMorphism:
    """Degreewise linear map commuting with the generator actions on its
    window. Components are stored sparsely; missing means zero."""

    __slots__ = ("source", "target", "window", "_comps")

    def __init__(self, source, target, window, comps):
        if source.algebra != target.algebra:
            raise ValueError("morphism between modules over different algebras")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "_comps", dict(comps))

    def __setattr__(self, *a):
        raise AttributeError("GradedMorphism is immutable")

    def component(self, d: GradingElement) -> Matrix:
        m = self._comps.get(d)
        if m is None:
            return Matrix.zero(self.source.algebra.field, self.target.dim(d), self.source.dim(d))
        return m

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._comps.values())

    def add(self, other: GradedMorphism) -> GradedMorphism:
        w = self.window.intersect(other.window)
        comps = {}
        for d in set(self._comps) | set(other._comps):
            if w.contains(d.height):
                comps[d] = self.component(d).add(other.component(d))
        return GradedMorphism(self.source, self.target, w, comps)

    def scale(self, c) -> GradedMorphism:
        return GradedMorphism(
            self.source, self.target, self.window,
            {d: m.scale(c) for d, m in self._comps.items()},
        )

    def __repr__(self):
        nz = sum(1 for m in self._comps.values() if not m.is_zero())
        return f"GradedMorphism(window {self.window}, {nz} nonzero components)"


def zero_morphism(m: WindowedModule, n: WindowedModule) -> GradedMorphism:
    return GradedMorphism(m, n, m.window.intersect(n.window), {})


def identity_morphism(m: WindowedModule) -> GradedMorphism:
    f = m.algebra.field
    comps = {d: Matrix.identity(f, m.dim(d)) for d in m.degrees()}
    return GradedMorphism(m, m, m.window, comps)


def compose(g: GradedMorphism, f: GradedMorphism) -> GradedMorphism:
    if g.source is not f.target and not modules_equal(g.source, f.target):
        raise ValueError("morphisms do not compose")
    w = f.window.intersect(g.window)
    comps = {}
    for d in f.source.degrees():
        if w.contains(d.height) and g.target.dim(d) and f.source.dim(d):
            c = g.component(d).mul(f.component(d))
            if not c.is_zero():
                comps[d] = c
    return GradedMorphism(f.source, g.target, w, comps)


def validate_morphism(f: GradedMorphism) -> None:
    s = f.source.algebra
    for d in enumerate_window(s.weights, f.window):
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if not f.window.contains(tgt.height):
                continue
            lhs = f.component(tgt).mul(f.source.action(g, d))
            rhs = f.target.action(g, d).mul(f.component(d))
            if lhs != rhs:
                raise ValueError(f"morphism does not commute with {g} at {d}")


def shift_morphism(f: GradedMorphism, l: GradingElement) -> GradedMorphism:
    src = shift_module(f.source, l)
    tgt = shift_module(f.target, l)
    w = src.window.intersect(tgt.window)
    comps = {}
    for d in enumerate_window(src.algebra.weights, w):
        if src.dim(d) and tgt.dim(d):
            c = f.component(d + l)
            if not c.is_zero():
                comps[d] = c
    return GradedMorphism(src, tgt, w, comps)


# ---------------------------------------------------------------------------
# hom spaces


def _in_edges(s: AlgebraSpec, d: GradingElement):
    return [(g, d - s.generator_degree(g)) for g in s.generator_names()]


def _require_bottom_certified(m: WindowedModule, w: HeightWindow, d: GradingElement):
    """Degree d has incoming actions from below the window; they are harmless
    only if m is provably zero down there."""
    for g, src in _in_edges(m.algebra, d):
        if src.height >= w.h_min:
            continue
        if m.support_min is None or src.height >= m.support_min:
            raise InsufficientWindowError(
                f"component at {d} may receive actions from below window {w}; "
                f"source module support is not certified"
            )


def hom_space(m: WindowedModule, n: WindowedModule) -> list[GradedMorphism]:
    """Basis of the space of graded module morphisms m -> n on the common
    window.

    Degrees are swept in action-compatible order. At each degree the source
    component is expressed through the incoming action images; coordinates
    not hit that way are new free parameters (these are exactly the degrees
    of minimal generators of m). Incoming-edge kernels impose linear
    constraints among the parameters; the final constraint kernel enumerates
    the morphisms.

    Raises InsufficientWindowError if a nonzero bottom-row component of m is
    not certified (support_min) or a generator of m sits fewer than 2
    heights below the window top, since then the window cannot see all the
    constraints that cut the space down.
    """
    if m.algebra != n.algebra:
        raise ValueError("hom between modules over different algebras")
    s = m.algebra
    f = s.field
    w = m.window.intersect(n.window)

    params = 0
    exprs = {}  # degree -> {param id -> coefficient Matrix (dim n_d x dim m_d)}
    rows = []  # global linear constraints, each {param id -> scalar}

    for d in enumerate_window(s.weights, w):
        md = m.dim(d)
        nd = n.dim(d)
        if md:
            _require_bottom_certified(m, w, d)
        edges = []
        for g, src in _in_edges(s, d):
            if src.height < w.h_min:
                continue  # certified zero or md == 0
            if m.dim(src):
                edges.append((g, src))
        blocks = [m.action(g, src) for g, src in edges]
        a = hstack_all(f, blocks, md)
        qids = sorted({q for _, src in edges for q in exprs.get(src, ())})
        bq = {}
        for q in qids:
            parts = []
            for g, src in edges:
                c = exprs.get(src, {}).get(q)
                if c is None:
                    parts.append(Matrix.zero(f, nd, m.dim(src)))
                else:
                    parts.append(n.action(g, src).mul(c))
            bq[q] = hstack_all(f, parts, nd)

        for z in kernel_basis(a):
            vals = {q: bq[q].apply(z) for q in qids}
            for i in range(nd):
                row = {q: vals[q][i] for q in qids if not f.is_zero(vals[q][i])}
                if row:
                    rows.append(row)

        if not md:
            continue
        rt, piv = rref(a.transpose())
        r = len(piv)
        col_rows = [rt.row(t) for t in range(r)]
        rest = [t for t in range(md) if t not in set(piv)]
        if rest and nd and d.height > w.h_max - 2:
            raise InsufficientWindowError(
                f"generator of the source module at {d} is above h_max - 2; "
                f"its hom parameters cannot be constrained inside {w}"
            )
        basis_cols = [tuple(v) for v in col_rows]
        basis_cols += [
            tuple(f.one if i == t else f.zero for i in range(md)) for t in rest
        ]
        minv = invert(Matrix.from_cols(f, basis_cols, md))
        fq = {}
        for sidx in range(r):
            xs = solve(a, col_rows[sidx])
            for q in qids:
                vec = bq[q].apply(xs)
                if all(f.is_zero(x) for x in vec):
                    continue
                fq.setdefault(q, [[f.zero] * md for _ in range(nd)])
                for i in range(nd):
                    fq[q][i][sidx] = vec[i]
        if nd:
            for k, _t in enumerate(rest):
                for i in range(nd):
                    q = params
                    params += 1
                    fq.setdefault(q, [[f.zero] * md for _ in range(nd)])
                    fq[q][i][r + k] = f.one
        local = {}
        for q, grid in fq.items():
            c = Matrix.from_rows(f, grid).mul(minv)
            if not c.is_zero():
                local[q] = c
        if local:
            exprs[d] = local

    if params == 0:
        return []
    cm = Matrix(
        f,
        len(rows),
        params,
        [row.get(q, f.zero) for row in rows for q in range(params)],
    )
    sols = kernel_basis(cm)
    out = []
    for alpha in sols:
        comps = {}
        for d, local in exprs.items():
            acc = None
            for q, c in local.items():
                if f.is_zero(alpha[q]):
                    continue
                part = c.scale(alpha[q])
                acc = part if acc is None else acc.add(part)
            if acc is not None and not acc.is_zero():
                comps[d] = acc
        out.append(GradedMorphism(m, n, w, comps))
    return out


# ---------------------------------------------------------------------------
# kernels, cokernels, isomorphism testing


def kernel(f: GradedMorphism) -> tuple[WindowedModule, GradedMorphism]:
    """Degreewise kernel with its inclusion; trusted window shrinks by one
    height on each side."""
    m = f.source
    s = m.algebra
    fd = s.field
    w = f.window.shrink(1, 1)
    incl_mats = {}
    dims = {}
    for d in enumerate_window(s.weights, w):
        md = m.dim(d)
        if not md:
            continue
        basis = kernel_basis(f.component(d))
        if not basis:
            continue
        dims[d] = len(basis)
        incl_mats[d] = Matrix.from_cols(fd, basis, md)
    actions = {}
    for d, kd in dims.items():
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if not w.contains(tgt.height) or not dims.get(tgt, 0):
                continue
            rhs = m.action(g, d).mul(incl_mats[d])
            x = solve_matrix(incl_mats[tgt], rhs)
            if x is None:
                raise ValueError("kernel is not action-stable; morphism invalid")
            if not x.is_zero():
                actions[(g, d)] = x
    ker = make_module(s, w, dims, actions, support_min=m.support_min,
                      support_max=m.support_max)
    incl = GradedMorphism(ker, m, w, {d: im for d, im in incl_mats.items() if dims.get(d)})
    return ker, incl


def cokernel(f: GradedMorphism) -> tuple[WindowedModule, GradedMorphism]:
    """Degreewise cokernel with its projection; trusted window shrinks by
    one height on each side."""
    n = f.target
    w = f.window.shrink(1, 1)
    spans = {}
    for d in enumerate_window(n.algebra.weights, w):
        if not n.dim(d):
            continue
        cols = f.component(d).columns()
        if cols:
            spans[d] = cols
    return _quotient_by_spans(n, spans, w, support_min=n.support_min,
                              support_max=n.support_max)


def morphisms_equal(f: GradedMorphism, g: GradedMorphism) -> bool:
    """Componentwise equality on the common window; the endpoints must
    agree degreewise for the comparison to make sense."""
    try:
        w = f.window.intersect(g.window)
    except InsufficientWindowError:
        return False
    s = f.source.algebra
    for d in enumerate_window(s.weights, w):
        if f.source.dim(d) != g.source.dim(d) or f.target.dim(d) != g.target.dim(d):
            return False
        if f.component(d) != g.component(d):
            return False
    return True


def modules_equal(m: WindowedModule, n: WindowedModule) -> bool:
    """Strict componentwise equality (same dims, same matrices) on the
    common window."""
    if m.algebra != n.algebra:
        return False
    try:
        w = m.window.intersect(n.window)
    except InsufficientWindowError:
        return False
    s = m.algebra
    for d in enumerate_window(s.weights, w):
        if m.dim(d) != n.dim(d):
            return False
        for g in s.generator_names():
            tgt = d + s.generator_degree(g)
            if w.contains(tgt.height) and m.dim(d):
                if m.action(g, d) != n.action(g, d):
                    return False
    return True


def _cyclic_iso(m: WindowedModule, n: WindowedModule, w):
    """(decided, morphism) fast path for cyclic modules.

    Minimal generator degrees are isomorphism invariants, so a mismatch
    decides no. When both sides have one generator in the same degree the
    free cover has a one-dimensional component there, so any isomorphism
    scales the generator; the two modules are isomorphic exactly when the
    kernels of their covers agree as subspaces of the common free module,
    and then cov_n factors through cov_m, giving the isomorphism.
    """
    try:
        gm = minimal_generators(m)
        gn = minimal_generators(n)
    except InsufficientWindowError:
        return False, None
    if sorted((d for d, _ in gm), key=degree_key) != sorted(
            (d for d, _ in gn), key=degree_key):
        return True, None
    if len(gm) != 1:
        return False, None
    cov_m, _ = _generator_cover(m, gm)
    cov_n, _ = _generator_cover(n, gn)
    comps = {}
    for d in enumerate_window(m.algebra.weights, w):
        md = m.dim(d)
        if not md:
            continue
        # phi_d . cov_m_d = cov_n_d; solvable with full rank at every degree
        # exactly when the cover kernels agree, which for cyclic modules is
        # equivalent to the isomorphism
        phi_t = solve_matrix(cov_m.component(d).transpose(),
                             cov_n.component(d).transpose())
        if phi_t is None or rank(phi_t) != md:
            return True, None
        comps[d] = phi_t.transpose()
    # phi . cov_m = cov_n forces commutation: both covers are module
    # morphisms and cov_m is surjective degreewise
    return True, GradedMorphism(m, n, w, comps)


def is_isomorphic(m: WindowedModule, n: WindowedModule, seed: int = 0):
    """A degreewise-invertible morphism m -> n, or None.

    Cyclic modules are decided directly through their free covers; the
    general case tries random linear combinations of a hom basis first,
    then a small deterministic coefficient sweep.
    """
    s = m.algebra
    f = s.field
    w = m.window.intersect(n.window)
    for d in enumerate_window(s.weights, w):
        if m.dim(d) != n.dim(d):
            return None
    if m.is_zero_module():
        return zero_morphism(m, n)
    decided, mor = _cyclic_iso(m, n, w)
    if decided:
        return mor
    basis = hom_space(m, n)
    if not basis:
        return None

    def invertible(mor):
        for d in enumerate_window(s.weights, w):
            md = m.dim(d)
            if md and rank(mor.component(d)) != md:
                return False
        return True

    rng = random.Random(seed)
    for _ in range(8):
        coeffs = [f.sample(rng) for _ in basis]
        cand = None
        for c, b in zip(coeffs, basis):
            if f.is_zero(c):
                continue
            part = b.scale(c)
            cand = part if cand is None else cand.add(part)
        if cand is not None and invertible(cand):
            return cand
    pool = [f.of_int(k) for k in (0, 1, -1, 2, 3)]
    tried = 0
    for coeffs in itertools.product(pool, repeat=len(basis)):
        tried += 1
        if tried > 4096:
            break
        cand = None
        for c, b in zip(coeffs, basis):
            if f.is_zero(c):
                continue
            part = b.scale(c)
            cand = part if cand is None else cand.add(part)
        if cand is not None and invertible(cand):
            return cand
    return None


# ---------------------------------------------------------------------------
# generators, syzygies, composition series


def minimal_generators(m: WindowedModule) -> list[tuple[GradingElement, tuple]]:
    """Degrees and coordinate vectors of a minimal generating set: at each
    degree, a complement basis of the span of all incoming action images."""
    s = m.algebra
    f = s.field
    out = []
    for d in m.degrees():
        md = m.dim(d)
        _require_bottom_certified(m, m.window, d)
        vecs = []
        for g, src in _in_edges(s, d):
            if src.height < m.window.h_min or not m.dim(src):
                continue
            vecs.extend(m.action(g, src).columns())
        if vecs:
            _, piv = rref(Matrix.from_cols(f, vecs, md).transpose())
            pivset = set(piv)
        else:
            pivset = set()
        for t in range(md):
            if t not in pivset:
                out.append((d, tuple(f.one if i == t else f.zero for i in range(md))))
    return out


def _generator_cover(m: WindowedModule, gens):
    """The cover F = (+) S(-d_i) -> m sending the basis monomial mu of the
    summand at degree e to mu . g_i.

    Columns are filled bottom up: the monomial x^t v^{h-a} u^a at e is one
    module action applied to a monomial at a lower degree (x_i for a torsion
    coordinate, else u raising a or v), and enumerate_window lists heights
    ascending and torsion lexicographically, so the parent column always
    exists. Products through a vanished component are zero, which the chain
    reproduces since monomial products are factorization independent.
    """
    s = m.algebra
    f = s.field
    p = s.weights
    free = direct_sum([free_module(s, -d, m.window) for d, _ in gens])
    blocks = [dict() for _ in gens]   # degree -> me x (h+1) block of images
    comps = {}

    for e in enumerate_window(p, m.window):
        me = m.dim(e)
        eblocks = []
        for gi, (d, vec) in enumerate(gens):
            rel = e - d
            h = rel.height
            if h < 0:
                continue
            xi = next((i for i, t in enumerate(rel.torsion) if t), None)
            if rel.is_zero():
                blk = Matrix.from_cols(f, [tuple(vec)], me)
            elif xi is not None:
                # x_xi keeps the u-exponent index
                src = e - s.generator_degree(f"x{xi + 1}")
                par = blocks[gi].get(src)
                if par is None or not par.rows or not me:
                    blk = Matrix.zero(f, me, h + 1)
                else:
                    blk = m.action(f"x{xi + 1}", src).mul(par)
            else:
                # a = 0 column through v, a = 1..h through u from a - 1
                src = e - s.generator_degree("u")
                par = blocks[gi].get(src)
                if par is None or not par.rows or not me:
                    blk = Matrix.zero(f, me, h + 1)
                else:
                    vcol = m.action("v", src).mul(
                        Matrix.from_cols(f, [par.col(0)], par.rows))
                    blk = vcol.hstack(m.action("u", src).mul(par))
            blocks[gi][e] = blk
            if me:
                eblocks.append(blk)
        if me and eblocks:
            comps[e] = hstack_all(f, eblocks, me)
    cov = GradedMorphism(free, m, m.window.intersect(free.window), comps)
    return cov, free


def syzygy(m: WindowedModule):
    """Minimal free cover F -> m and its kernel.

    Returns (omega, cover, free)."""
    s = m.algebra
    gens = minimal_generators(m)
    if not gens:
        free = zero_module(s, m.window)
        cov = zero_morphism(free, m)
        omega, _ = kernel(cov)
        return omega, cov, free
    cov, free = _generator_cover(m, gens)
    omega, _ = kernel(cov)
    return omega, cov, free


def composition_factors(m: WindowedModule) -> list[tuple[GradingElement, int]]:
    """Multiset of simple factors as (degree, multiplicity): for a finite
    length module every factor is a one-dimensional simple, so the
    multiplicity at d is just dim M_d.

    Finiteness must be certified: the top is covered either by support_max
    reaching the window or by a zero top row (heights never decrease along
    actions, so nothing escapes upward through a zero row), and the bottom
    either by a zero bottom row or by support_min reaching the window."""
    w = m.window
    top_certified = m.support_max is not None and m.support_max <= w.h_max
    for d in m.degrees():
        if d.height == w.h_max and not top_certified:
            raise InsufficientWindowError(
                f"nonzero component {d} on the top window row; "
                f"finite length is not certified"
            )
        if d.height == w.h_min and (m.support_min is None or m.support_min < w.h_min):
            raise InsufficientWindowError(
                f"nonzero component {d} on the bottom window row without "
                f"certified support; finite length is not certified"
            )
    return [(d, m.dim(d)) for d in m.degrees()]


def ses_exact(f: GradedMorphism, g: GradedMorphism) -> bool:
    """Whether 0 -> A -f-> B -g-> C -> 0 is exact on the common window:
    f injective, g surjective, g.f = 0 and rank f + rank g = dim B
    degreewise."""
    if f.target is not g.source and not modules_equal(f.target, g.source):
        raise ValueError("morphisms do not form a complex")
    w = f.window.intersect(g.window)
    s = f.source.algebra
    for d in enumerate_window(s.weights, w):
        da, db, dc = f.source.dim(d), f.target.dim(d), g.target.dim(d)
        rf = rank(f.component(d)) if da else 0
        rg = rank(g.component(d)) if db else 0
        if rf != da or rg != dc or rf + rg != db:
            return False
        if da and dc and not g.component(d).mul(f.component(d)).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# restriction to k[u,v] and Cohen-Macaulay testing


def coset_restriction(m: WindowedModule, torsion: tuple[int, ...]) -> WindowedModule:
    """The k[u,v]-module of components along one torsion coset, presented
    over the all-ones-weights algebra. Its x_1, x_2 actions are synthesized
    from u and v through that algebra's own parameter points, so the
    defining relations hold by construction."""
    s = m.algebra
    core = core_algebra(s.field)
    torsion = tuple(torsion)
    if len(torsion) != len(s.weights):
        raise ValueError("torsion class length mismatch")
    dims = {}
    actions = {}
    w = m.window
    for h in w.heights():
        d = GradingElement(s.weights, torsion, h)
        cd = GradingElement(core.weights, (0, 0), h)
        n = m.dim(d)
        if not n:
            continue
        dims[cd] = n
        if not w.contains(h + 1) or not m.dim(d + s.generator_degree("u")):
            continue
        au = m.action("u", d)
        av = m.action("v", d)
        actions[("u", cd)] = au
        actions[("v", cd)] = av
        for i, (la0, la1) in enumerate(core.lam):
            actions[(f"x{i + 1}", cd)] = av.scale(la0).sub(au.scale(la1))
    return make_module(core, w, dims, actions, support_min=m.support_min,
                       support_max=m.support_max)


def koszul_tor(m: WindowedModule, j: int) -> dict[int, int]:
    """dim Tor_j(k, m) over k[u,v] by height, from the Koszul complex
    M_{h-2} --(-v,u)--> M_{h-1}^2 --(u,v)--> M_h. Computable for heights
    with two rows of margin below, i.e. h in [h_min+2, h_max]."""
    if j not in (0, 1, 2):
        raise ValueError("Koszul homology over k[u,v] lives in degrees 0..2")
    s = m.algebra
    if tuple(s.weights) != (1, 1):
        raise ValueError("koszul_tor expects a module over the core algebra")
    t0 = (0, 0)
    out = {}
    w = m.window
    for h in range(w.h_min + 2, w.h_max + 1):
        d2src = GradingElement(s.weights, t0, h - 2)
        d1src = GradingElement(s.weights, t0, h - 1)
        n2, n1 = m.dim(d2src), m.dim(d1src)
        d1 = m.action("u", d1src).hstack(m.action("v", d1src))
        d2 = m.action("v", d2src).neg().vstack(m.action("u", d2src))
        if j == 0:
            out[h] = m.dim(GradingElement(s.weights, t0, h)) - rank(d1)
        elif j == 1:
            out[h] = (2 * n1 - rank(d1)) - rank(d2)
        else:
            out[h] = n2 - rank(d2)
    return out


def is_cohen_macaulay(m: WindowedModule):
    """Whether every coset restriction of m is free over k[u,v] on the
    checkable heights, i.e. all Tor_1 vanish. Returns (flag, witness)."""
    for t in torsion_classes(m.algebra.weights):
        restr = coset_restriction(m, t)
        for h, dim in sorted(koszul_tor(restr, 1).items()):
            if dim:
                return False, {"torsion": list(t), "height": h, "tor1_dim": dim}
    return True, None


# ---------------------------------------------------------------------------
# serialization


def module_to_doc(m: WindowedModule) -> dict:
    from .algebra import point_str
    from .grading import element_str
    from .linalg import field_name

    s = m.algebra
    f = s.field
    comps = [
        {"degree": element_str(d), "dim": m.dim(d)} for d in m.degrees()
    ]
    acts = []
    for (g, d) in sorted(m._actions, key=lambda k: (degree_key(k[1]), k[0])):
        mat = m._actions[(g, d)]
        acts.append(
            {
                "generator": g,
                "source": element_str(d),
                "matrix": [[f.to_str(mat.entry(i, j)) for j in range(mat.cols)]
                           for i in range(mat.rows)],
            }
        )
    return {
        "algebra": {
            "weights": list(s.weights),
            "lambda": [point_str(f, pt) for pt in s.lam],
            "field": field_name(f),
        },
        "window": [m.window.h_min, m.window.h_max],
        "support_min": m.support_min,
        "support_max": m.support_max,
        "components": comps,
        "actions": acts,
    }


def module_from_doc(doc: dict) -> WindowedModule:
    from .algebra import parse_point
    from .grading import WeightSequence, parse_element
    from .linalg import field_from_name

    f = field_from_name(doc["algebra"]["field"])
    weights = WeightSequence(tuple(doc["algebra"]["weights"]))
    lam = tuple(parse_point(f, p) for p in doc["algebra"]["lambda"])
    s = AlgebraSpec(weights, lam, f)
    w = HeightWindow(doc["window"][0], doc["window"][1])
    dims = {parse_element(weights, c["degree"]): c["dim"] for c in doc["components"]}
    actions = {}
    for a in doc["actions"]:
        d = parse_element(weights, a["source"])
        rows = [[f.parse(x) for x in row] for row in a["matrix"]]
        actions[(a["generator"], d)] = Matrix.from_rows(f, rows)
    return make_module(s, w, dims, actions, support_min=doc.get("support_min"),
                       support_max=doc.get("support_max"))
