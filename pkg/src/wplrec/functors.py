"""Restriction and induction functors along a weight-reducing embedding.

An EmbeddingSpec identifies L(p') inside L(p) when the weight sequences
agree except at one index n, where p'_n <= p_n; write Delta = p_n - p'_n.
Three functors move modules across:

  * Restrict (i'):      mod S(p') -> mod S(p), (i'M)_l = M at
    phi'^{-1}(l - min(l_n, Delta) x_n); x_n acts as the identity while
    l_n < Delta and as the transported x_n action above;
  * InduceLeft (i'_l):  mod S(p) -> mod S(p'), component at l' is N at
    phi'(l') + Delta x_n; the x_n wrap at l'_n = p'_n - 1 is the composite
    of Delta + 1 consecutive x_n steps;
  * InduceRight (i'_r): mod S(p) -> mod S(p'), component at l' is N at
    phi'(l') for l'_n = 0 and at phi'(l') + Delta x_n otherwise; the
    exceptional step at l'_n = 0 is the composite x_n^{Delta + 1}.

Every degree map preserves height exactly, so windows and support bounds
transfer verbatim. All three collapse to the identity when Delta = 0.

Twist is the shift functor M -> M(l). Composites apply right-to-left in
construction order. adjunction_phi realizes Hom(i'_l N, M) = Hom(N, i'M);
its unit and counit come from the identity morphisms in the usual way.
"""

from __future__ import annotations

import functools

from dataclasses import dataclass

from .algebra import spec_with_weights
from .grading import (
    EmbeddingSpec,
    GradingElement,
    WeightSequence,
    embed,
    enumerate_window,
    preimage,
    xgen,
)
from .linalg import Matrix
from .modules import (
    GradedMorphism,
    WindowedModule,
    identity_morphism,
    make_module,
    modules_equal,
    module_power_action,
    shift_module,
    shift_morphism,
)

__all__ = [
    "Restrict",
    "InduceLeft",
    "InduceRight",
    "Twist",
    "Composite",
    "second_embedding",
    "restriction",
    "left_induction",
    "right_induction",
    "j_restriction",
    "j_left_induction",
    "j_right_induction",
    "named_functor",
    "FUNCTOR_NAMES",
    "restrict_degree",
    "left_degree",
    "right_degree",
    "adjunction_phi",
    "adjunction_phi_inv",
    "adjunction_unit",
    "adjunction_counit",
    "twist_compat_check",
    "rho_lambda_twist_check",
]


# degree maps (all height-preserving)


@functools.lru_cache(maxsize=65536)
def restrict_degree(e: EmbeddingSpec, l: GradingElement) -> GradingElement:
    """psi(l) = phi'^{-1}(l - min(l_n, Delta) x_n), defined for every l."""
    ln = l.torsion[e.index]
    src = l - xgen(e.target, e.index).times(min(ln, e.delta))
    pre = preimage(e, src)
    assert pre is not None
    return pre


@functools.lru_cache(maxsize=65536)
def left_degree(e: EmbeddingSpec, lp: GradingElement) -> GradingElement:
    """phi'(l') + Delta x_n."""
    return embed(e, lp) + xgen(e.target, e.index).times(e.delta)


def right_degree(e: EmbeddingSpec, lp: GradingElement) -> GradingElement:
    """phi'(l') for l'_n = 0, else phi'(l') + Delta x_n."""
    if lp.torsion[e.index] == 0:
        return embed(e, lp)
    return left_degree(e, lp)


def _transport(m, out_spec, degmap, xn_name, xn_rule):
    """Common pushforward: out-component at l is m's component at degmap(l);
    all generators except x_n transport verbatim because degmap commutes
    with their degree steps."""
    w = m.window
    dims = {}
    srcs = {}
    for l in enumerate_window(out_spec.weights, w):
        src = degmap(l)
        d = m.dim(src)
        if d:
            dims[l] = d
            srcs[l] = src
    gen_steps = [(g, out_spec.generator_degree(g)) for g in out_spec.generator_names()]
    actions = {}
    for l, src in srcs.items():
        for g, step in gen_steps:
            tgt = l + step
            if not w.contains(tgt.height) or not dims.get(tgt):
                continue
            mat = xn_rule(l, src) if g == xn_name else m.action(g, src)
            actions[(g, l)] = mat
    return make_module(out_spec, w, dims, actions, support_min=m.support_min,
                       support_max=m.support_max)


def _transport_morphism(functor, f: GradedMorphism) -> GradedMorphism:
    src = functor.apply(f.source)
    tgt = functor.apply(f.target)
    w = src.window.intersect(tgt.window).intersect(f.window)
    comps = {}
    for l in enumerate_window(src.algebra.weights, w):
        if src.dim(l) and tgt.dim(l):
            c = f.component(functor.degree_map(l))
            if not c.is_zero():
                comps[l] = c
    return GradedMorphism(src, tgt, w, comps)


@dataclass(frozen=True)
class Restrict:
    """i': mod S(p') -> mod S(p)."""

    emb: EmbeddingSpec

    def degree_map(self, l):
        return restrict_degree(self.emb, l)

    def apply(self, m: WindowedModule) -> WindowedModule:
        e = self.emb
        if m.algebra.weights != e.source:
            raise ValueError(f"expected a module over {e.source}")
        out = spec_with_weights(m.algebra, e.target)
        xn = f"x{e.index + 1}"

        def rule(l, src):
            if l.torsion[e.index] < e.delta:
                return Matrix.identity(m.algebra.field, m.dim(src))
            return m.action(xn, src)

        return _transport(m, out, self.degree_map, xn, rule)

    def apply_morphism(self, f):
        return _transport_morphism(self, f)


@dataclass(frozen=True)
class InduceLeft:
    """i'_lambda: mod S(p) -> mod S(p')."""

    emb: EmbeddingSpec

    def degree_map(self, l):
        return left_degree(self.emb, l)

    def apply(self, m: WindowedModule) -> WindowedModule:
        e = self.emb
        if m.algebra.weights != e.target:
            raise ValueError(f"expected a module over {e.target}")
        out = spec_with_weights(m.algebra, e.source)
        xn = f"x{e.index + 1}"

        def rule(l, src):
            if l.torsion[e.index] < e.source[e.index] - 1:
                return m.action(xn, src)
            return module_power_action(m, xn, e.delta + 1, src)

        return _transport(m, out, self.degree_map, xn, rule)

    def apply_morphism(self, f):
        return _transport_morphism(self, f)


@dataclass(frozen=True)
class InduceRight:
    """i'_rho: mod S(p) -> mod S(p')."""

    emb: EmbeddingSpec

    def degree_map(self, l):
        return right_degree(self.emb, l)

    def apply(self, m: WindowedModule) -> WindowedModule:
        e = self.emb
        if m.algebra.weights != e.target:
            raise ValueError(f"expected a module over {e.target}")
        out = spec_with_weights(m.algebra, e.source)
        xn = f"x{e.index + 1}"

        def rule(l, src):
            if l.torsion[e.index] == 0:
                return module_power_action(m, xn, e.delta + 1, src)
            return m.action(xn, src)

        return _transport(m, out, self.degree_map, xn, rule)

    def apply_morphism(self, f):
        return _transport_morphism(self, f)


@dataclass(frozen=True)
class Twist:
    """M -> M(l) over a fixed weight sequence."""

    l: GradingElement

    def apply(self, m: WindowedModule) -> WindowedModule:
        if m.algebra.weights != self.l.p:
            raise ValueError(f"twist degree lives over {self.l.p}")
        return shift_module(m, self.l)

    def apply_morphism(self, f):
        return shift_morphism(f, self.l)


@dataclass(frozen=True)
class Composite:
    """parts applied left to right (parts[0] first)."""

    parts: tuple

    def apply(self, m):
        for part in self.parts:
            m = part.apply(m)
        return m

    def apply_morphism(self, f):
        for part in self.parts:
            f = part.apply_morphism(f)
        return f


def second_embedding(e: EmbeddingSpec) -> EmbeddingSpec:
    """L(p'') inside L(p) with p''_n = Delta + 1 = p_n - p'_n + 1."""
    weights = list(e.target)
    weights[e.index] = e.delta + 1
    return EmbeddingSpec(WeightSequence(tuple(weights)), e.target, e.index)


def restriction(e: EmbeddingSpec) -> Restrict:
    return Restrict(e)


def left_induction(e: EmbeddingSpec) -> InduceLeft:
    return InduceLeft(e)


def right_induction(e: EmbeddingSpec) -> InduceRight:
    return InduceRight(e)


def _require_length_three(e: EmbeddingSpec) -> None:
    # the twisted composites are only defined for three weights
    if len(e.target) != 3:
        raise ValueError(f"j functors need a length-3 weight sequence, got {tuple(e.target)}")


def j_restriction(e: EmbeddingSpec) -> Composite:
    """j'': mod S(p) -> mod S(p''), the left induction along the second
    embedding after a twist by (1 - p'_n) x_n."""
    _require_length_three(e)
    tw = xgen(e.target, e.index).times(1 - e.source[e.index])
    return Composite((Twist(tw), InduceLeft(second_embedding(e))))


def j_left_induction(e: EmbeddingSpec) -> Composite:
    """j''_lambda: mod S(p'') -> mod S(p): twist by -x''_n, restrict along
    the second embedding, twist by p'_n x_n."""
    _require_length_three(e)
    e2 = second_embedding(e)
    tw_in = xgen(e2.source, e.index).times(-1)
    tw_out = xgen(e.target, e.index).times(e.source[e.index])
    return Composite((Twist(tw_in), Restrict(e2), Twist(tw_out)))


def j_right_induction(e: EmbeddingSpec) -> Composite:
    """j''_rho: mod S(p'') -> mod S(p): restrict along the second embedding,
    then twist by (p'_n - 1) x_n."""
    _require_length_three(e)
    e2 = second_embedding(e)
    tw = xgen(e.target, e.index).times(e.source[e.index] - 1)
    return Composite((Restrict(e2), Twist(tw)))


FUNCTOR_NAMES = (
    "i",
    "i_lambda",
    "i_rho",
    "ii",
    "ii_lambda",
    "ii_rho",
    "j",
    "j_lambda",
    "j_rho",
)


def named_functor(name: str, e: EmbeddingSpec):
    if name == "i":
        return Restrict(e)
    if name == "i_lambda":
        return InduceLeft(e)
    if name == "i_rho":
        return InduceRight(e)
    if name == "ii":
        return Restrict(second_embedding(e))
    if name == "ii_lambda":
        return InduceLeft(second_embedding(e))
    if name == "ii_rho":
        return InduceRight(second_embedding(e))
    if name == "j":
        return j_restriction(e)
    if name == "j_lambda":
        return j_left_induction(e)
    if name == "j_rho":
        return j_right_induction(e)
    raise ValueError(f"unknown functor {name!r}; expected one of {FUNCTOR_NAMES}")


# ---------------------------------------------------------------------------
# the adjunction InduceLeft -| Restrict


def adjunction_phi(e: EmbeddingSpec, n_mod: WindowedModule, f: GradedMorphism) -> GradedMorphism:
    """Transpose f: i'_l N -> M to N -> i'M.

    At a degree l with l_n >= Delta the component is f at psi(l) verbatim;
    below Delta it is f at psi(l) precomposed with the x_n^{Delta - l_n}
    action climbing N from l to l + (Delta - l_n) x_n (same height, so the
    chain stays inside the window).
    """
    i_m = Restrict(e).apply(f.target)
    xn = f"x{e.index + 1}"
    w = n_mod.window.intersect(i_m.window).intersect(f.window)
    comps = {}
    for l in enumerate_window(e.target, w):
        if not n_mod.dim(l) or not i_m.dim(l):
            continue
        ln = l.torsion[e.index]
        lp = restrict_degree(e, l)
        if ln >= e.delta:
            c = f.component(lp)
        else:
            chain = module_power_action(n_mod, xn, e.delta - ln, l)
            c = f.component(lp).mul(chain)
        if not c.is_zero():
            comps[l] = c
    return GradedMorphism(n_mod, i_m, w, comps)


def adjunction_phi_inv(e: EmbeddingSpec, m_mod: WindowedModule, g: GradedMorphism) -> GradedMorphism:
    """Transpose g: N -> i'M back to i'_l N -> M: the component at l' is g
    at phi'(l') + Delta x_n."""
    il_n = InduceLeft(e).apply(g.source)
    w = il_n.window.intersect(m_mod.window).intersect(g.window)
    comps = {}
    for lp in enumerate_window(e.source, w):
        if not il_n.dim(lp) or not m_mod.dim(lp):
            continue
        c = g.component(left_degree(e, lp))
        if not c.is_zero():
            comps[lp] = c
    return GradedMorphism(il_n, m_mod, w, comps)


def adjunction_unit(e: EmbeddingSpec, n_mod: WindowedModule) -> GradedMorphism:
    """N -> i' i'_l N."""
    return adjunction_phi(e, n_mod, identity_morphism(InduceLeft(e).apply(n_mod)))


def adjunction_counit(e: EmbeddingSpec, m_mod: WindowedModule) -> GradedMorphism:
    """i'_l i' M -> M."""
    return adjunction_phi_inv(e, m_mod, identity_morphism(Restrict(e).apply(m_mod)))


def twist_compat_check(e: EmbeddingSpec, i: int, m_source: WindowedModule,
                       n_target: WindowedModule) -> bool:
    """Twisting by x_i for i < n commutes with all three functors on the
    nose. m_source lives over e.source and feeds the restriction; n_target
    lives over e.target and feeds both inductions. i is a 0-based
    coordinate index strictly below e.index."""
    if not 0 <= i < e.index:
        raise ValueError(f"index {i} is not below the embedded coordinate")
    xs = xgen(e.source, i)
    xt = xgen(e.target, i)
    lhs = shift_module(Restrict(e).apply(m_source), xt)
    rhs = Restrict(e).apply(shift_module(m_source, xs))
    if not modules_equal(lhs, rhs):
        return False
    for functor in (InduceLeft(e), InduceRight(e)):
        lhs = shift_module(functor.apply(n_target), xs)
        rhs = functor.apply(shift_module(n_target, xt))
        if not modules_equal(lhs, rhs):
            return False
    return True


def rho_lambda_twist_check(e: EmbeddingSpec, n_mod: WindowedModule) -> bool:
    """(i'_r N)(x'_n) = i'_l (N(x_n)) on the common window; this is the
    twist identity that pins down the exceptional x_n exponent of i'_r."""
    lhs = shift_module(InduceRight(e).apply(n_mod), xgen(e.source, e.index))
    rhs = InduceLeft(e).apply(shift_module(n_mod, xgen(e.target, e.index)))
    return modules_equal(lhs, rhs)
