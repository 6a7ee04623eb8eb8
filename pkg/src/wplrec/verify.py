"""Machine verification suites for the window calculus.

Every check produces a CheckReport whose anchor states the mathematical
claim being tested, whose params record the sampled inputs and whose
witness carries data to re-verify the verdict. A check that cannot run
because the window is too small reports "skip"; skipped is never pass.

Three suites:

  * lemmas: values of the restriction and the two inductions on shifted
    frees (up to isomorphism, with an explicit isomorphism as witness) and
    on simples (on the nose), twist compatibilities, preservation of
    Cohen-Macaulayness and of degreewise short exact sequences, and the
    degenerate identity when nothing is reduced;
  * adjunction: hom-space dimensions on both sides of both adjunctions,
    the explicit transpose bijection, both triangle identities, and the
    counit isomorphism;
  * theorem: the composed functor j'' and its adjoint bookkeeping, the
    vanishing and quotient values of j'' i', the finite projective
    dimension certificate, the generation sequence for simples, and a
    coverage table over all torsion classes, followed by a checklist of
    the category-level steps that are assumed rather than re-checked.

Sampling has two modes: "rich" walks every torsion class at heights
-1, 0, 1; "reduced" keeps a deterministic set that still exercises every
case split on the last torsion coordinate. Isomorphism searches always
use the targeted case-split degrees, because hom-space computations are
the expensive step. In rich mode witnesses carry full matrices; in
reduced mode (used by sweeps) they are compacted to counts.
"""

from __future__ import annotations

import itertools
import re
import zlib
from dataclasses import dataclass

from .algebra import AlgebraSpec, default_lambda, parse_point, point_str, spec_with_weights
from .grading import (
    EmbeddingSpec,
    GradingElement,
    HeightWindow,
    InsufficientWindowError,
    WeightSequence,
    cvec,
    element_str,
    embed,
    preimage,
    torsion_classes,
    xgen,
    zero,
)
from .linalg import Matrix, field_from_name, field_name, rank
from .modules import (
    GradedMorphism,
    compose,
    composition_factors,
    degree_key,
    free_module,
    hom_space,
    identity_morphism,
    is_cohen_macaulay,
    is_isomorphic,
    kernel,
    minimal_generators,
    modules_equal,
    monomial_quotient,
    morphisms_equal,
    ses_exact,
    simple_module,
    syzygy,
    validate_morphism,
    zero_module,
)
from .functors import (
    Composite,
    InduceLeft,
    InduceRight,
    Restrict,
    Twist,
    adjunction_counit,
    adjunction_phi,
    adjunction_phi_inv,
    adjunction_unit,
    j_left_induction,
    j_restriction,
    j_right_induction,
    left_degree,
    rho_lambda_twist_check,
    second_embedding,
    twist_compat_check,
)

__all__ = [
    "CheckReport",
    "ConfigError",
    "VerifyConfig",
    "make_config",
    "sample_degrees",
    "iso_sample_degrees",
    "lemma_suite",
    "adjunction_suite",
    "theorem_suite",
    "run_suite",
    "run_sweep",
    "SUITES",
]

SUITES = ("lemmas", "adjunction", "theorem", "all")


# ---------------------------------------------------------------------------
# configuration


class ConfigError(ValueError):
    """Invalid run configuration; carries a list of named diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d["message"] for d in self.diagnostics))


@dataclass(frozen=True)
class VerifyConfig:
    algebra: AlgebraSpec        # over the full weight sequence p
    source: AlgebraSpec         # same field and points, over p'
    embedding: EmbeddingSpec    # L(p') inside L(p) at the last index
    window: HeightWindow
    seed: int
    samples: str                # "rich" or "reduced"

    def to_doc(self) -> dict:
        s = self.algebra
        return {
            "weights": list(s.weights),
            "reduce": self.embedding.source[self.embedding.index],
            "lambda": [point_str(s.field, pt) for pt in s.lam],
            "field": field_name(s.field),
            "window": [self.window.h_min, self.window.h_max],
            "seed": self.seed,
            "samples": self.samples,
        }


def make_config(weights, reduce, field="rational", lam="auto", h_min=-3,
                h_max=6, seed=0, samples="rich") -> VerifyConfig:
    """Validate and assemble a run configuration.

    Collects every violation into a ConfigError so a bad invocation is
    reported in full, not one complaint at a time.
    """
    diags = []
    wts = None
    try:
        wts = WeightSequence(tuple(int(x) for x in weights))
    except (TypeError, ValueError) as exc:
        diags.append({"name": "bad-weights", "message": f"weights {weights!r}: {exc}"})
    try:
        reduce = int(reduce)
    except (TypeError, ValueError):
        diags.append({"name": "bad-reduce", "message": f"reduce {reduce!r} is not an integer"})
        reduce = 1
    if wts is not None and not 1 <= reduce <= wts[len(wts) - 1]:
        diags.append({
            "name": "reduce-out-of-range",
            "message": f"reduce {reduce} must be between 1 and the last weight "
                       f"{wts[len(wts) - 1]}",
        })
    try:
        h_min, h_max = int(h_min), int(h_max)
        if h_min > h_max:
            raise ValueError(f"empty window [{h_min}, {h_max}]")
        window = HeightWindow(h_min, h_max)
    except (TypeError, ValueError) as exc:
        diags.append({"name": "empty-window", "message": str(exc)})
        window = None
    fld = None
    try:
        fld = field_from_name(field) if isinstance(field, str) else field
    except ValueError as exc:
        diags.append({"name": "unknown-field", "message": str(exc)})
    if samples not in ("rich", "reduced"):
        diags.append({"name": "bad-samples",
                      "message": f"samples must be rich or reduced, got {samples!r}"})
    algebra = None
    if wts is not None and fld is not None:
        try:
            if lam == "auto" or lam is None:
                points = default_lambda(fld, len(wts))
            else:
                if isinstance(lam, str):
                    lam = re.findall(r"\[[^\]]*\]", lam)
                points = tuple(parse_point(fld, p) for p in lam)
            algebra = AlgebraSpec(wts, points, fld)
        except ValueError as exc:
            diags.append({"name": "bad-lambda", "message": str(exc)})
    if diags:
        raise ConfigError(diags)
    pw = list(wts)
    pw[-1] = reduce
    emb = EmbeddingSpec(WeightSequence(tuple(pw)), wts, len(wts) - 1)
    return VerifyConfig(
        algebra=algebra,
        source=spec_with_weights(algebra, emb.source),
        embedding=emb,
        window=window,
        seed=int(seed),
        samples=samples,
    )


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckReport:
    check_id: str
    anchor: str
    params: dict
    status: str     # "pass" | "fail" | "skip"
    witness: dict

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "anchor": self.anchor,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }


def _run_check(check_id, anchor, params, body) -> CheckReport:
    try:
        ok, witness = body()
    except InsufficientWindowError as exc:
        return CheckReport(check_id, anchor, params, "skip",
                           {"reason": "insufficient-window", "detail": str(exc)})
    return CheckReport(check_id, anchor, params, "pass" if ok else "fail", witness)


def _derive_seed(seed: int, tag: str) -> int:
    return (seed * 1000003 + zlib.crc32(tag.encode())) % (2 ** 31)


def _matrix_doc(f, mat):
    return [[f.to_str(mat.entry(i, j)) for j in range(mat.cols)]
            for i in range(mat.rows)]


def _morphism_doc(mor: GradedMorphism) -> dict:
    f = mor.source.algebra.field
    comps = []
    for d in sorted(mor._comps, key=degree_key):
        c = mor._comps[d]
        comps.append({"degree": element_str(d), "matrix": _matrix_doc(f, c)})
    return {
        "window": [mor.window.h_min, mor.window.h_max],
        "components": comps,
    }


def _iso_witness(cfg, mor: GradedMorphism) -> dict:
    if cfg.samples == "rich":
        return {"iso": _morphism_doc(mor)}
    return {"iso": "found", "nonzero_components": len(mor._comps)}


def _simple_at(s, d, window):
    """The simple supported at degree d (that is k(-d))."""
    return simple_module(s, -d, window)


# ---------------------------------------------------------------------------
# sampling


def _dedupe(items):
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def _case_values(p_last: int, reduced: int) -> list[int]:
    """Last-coordinate values hitting every case split l_n = 0,
    0 < l_n < p'_n, l_n = p'_n, l_n > p'_n that exists."""
    vals = [0, 1, reduced - 1, reduced, reduced + 1, p_last - 1]
    return sorted({v for v in vals if 0 <= v < p_last})


def sample_degrees(p: WeightSequence, reduced: int, mode: str) -> list[GradingElement]:
    """Degrees the cheap structural checks walk over."""
    if mode == "rich":
        return [GradingElement(p, t, h) for h in (-1, 0, 1) for t in torsion_classes(p)]
    idx = len(p) - 1
    pats = _dedupe([
        (0,) * idx,
        tuple(min(1, p[i] - 1) for i in range(idx)),
    ])
    vals = _case_values(p[idx], reduced)
    out = [GradingElement(p, pat + (v,), 0) for pat in pats for v in vals]
    out.append(GradingElement(p, (0,) * idx + (vals[0],), -1))
    out.append(GradingElement(p, (0,) * idx + (vals[-1],), 1))
    return _dedupe(out)


def iso_sample_degrees(p: WeightSequence, reduced: int, mode: str) -> list[GradingElement]:
    """Degrees for the isomorphism-backed checks; kept small because each
    one costs a hom-space computation."""
    idx = len(p) - 1
    vals = _case_values(p[idx], reduced)
    if mode != "rich":
        # both branches of the free-value formulas are still hit:
        # 0 below the cut, reduced and p - 1 at or above it
        keep = {0, reduced, p[idx] - 1}
        vals = [v for v in vals if v in keep]
    degs = [GradingElement(p, (0,) * idx + (v,), 0) for v in vals]
    if mode == "rich":
        pat = tuple(min(1, p[i] - 1) for i in range(idx))
        if pat != (0,) * idx:
            degs += [GradingElement(p, pat + (v,), -1) for v in vals]
    return _dedupe(degs)


# ---------------------------------------------------------------------------
# lemma suite


def _check_restrict_free(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = Restrict(e)
    samples = iso_sample_degrees(e.source, e.source[e.index], cfg.samples)
    ok = True
    entries = []

    def body():
        nonlocal ok
        for lp in samples:
            got = functor.apply(free_module(cfg.source, lp, w))
            target_deg = embed(e, lp)
            want = free_module(cfg.algebra, target_deg, w)
            entry = {"degree": element_str(lp), "image": element_str(target_deg)}
            # transported frees are often equal on the nose; check that first
            if modules_equal(got, want):
                entry["iso"] = "equal"
            else:
                iso = is_isomorphic(got, want,
                                    seed=_derive_seed(cfg.seed, f"i.free|{element_str(lp)}"))
                if iso is None:
                    ok = False
                    entry["iso"] = None
                else:
                    entry.update(_iso_witness(cfg, iso))
            entries.append(entry)
        return ok, {"samples": entries}

    return _run_check(
        "restrict.free_value",
        "i'(S'(l')) is isomorphic to S(phi'(l')) for every l'",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_restrict_simple(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = Restrict(e)
    samples = [l for l in sample_degrees(e.source, e.source[e.index], cfg.samples)
               if l.torsion[e.index] > 0]

    def body():
        ok = True
        entries = []
        for lp in samples:
            got = functor.apply(simple_module(cfg.source, lp, w))
            sup = left_degree(e, -lp)
            want = _simple_at(cfg.algebra, sup, w)
            good = modules_equal(got, want)
            ok = ok and good
            entries.append({"degree": element_str(lp),
                            "support": element_str(sup), "equal": good})
        return ok, {"samples": entries}

    return _run_check(
        "restrict.simple_value",
        "i'(k'(l')) is the simple at phi'(-l') + Delta x_n, on the nose, "
        "whenever l'_n > 0",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_restrict_interval(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    s = cfg.algebra
    n = s.n()
    functor = Restrict(e)
    samples = [l for l in sample_degrees(e.source, e.source[e.index], cfg.samples)
               if l.torsion[e.index] == 0]
    powers = {f"x{i + 1}": 1 for i in range(n - 1)}
    powers[f"x{n}"] = e.delta + 1

    def body():
        ok = True
        entries = []
        for lp in samples:
            got = functor.apply(simple_module(cfg.source, lp, w))
            want, _ = monomial_quotient(s, embed(e, lp), powers, w)
            good = modules_equal(got, want)
            ok = ok and good
            entries.append({"degree": element_str(lp), "equal": good,
                            "total_dim": got.total_dim()})
        return ok, {"samples": entries, "xn_exponent": e.delta + 1}

    return _run_check(
        "restrict.interval_value",
        "i'(k'(l')) = S(phi'(l'))/(x_1, ..., x_{n-1}, x_n^{Delta+1}) on the "
        "nose whenever l'_n = 0; the x_n exponent is Delta + 1, forced by "
        "degree bookkeeping",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_left_free(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = InduceLeft(e)
    idx = e.index
    pn_red = e.source[idx]
    samples = iso_sample_degrees(e.target, pn_red, cfg.samples)

    def body():
        ok = True
        entries = []
        for l in samples:
            ln = l.torsion[idx]
            if ln < pn_red:
                want_deg = preimage(e, l)
            else:
                want_deg = preimage(e, l - xgen(e.target, idx).times(ln)) + cvec(e.source)
            got = functor.apply(free_module(cfg.algebra, l, w))
            want = free_module(cfg.source, want_deg, w)
            entry = {"degree": element_str(l), "image": element_str(want_deg)}
            if modules_equal(got, want):
                entry["iso"] = "equal"
            else:
                iso = is_isomorphic(got, want,
                                    seed=_derive_seed(cfg.seed, f"il.free|{element_str(l)}"))
                if iso is None:
                    ok = False
                    entry["iso"] = None
                else:
                    entry.update(_iso_witness(cfg, iso))
            entries.append(entry)
        return ok, {"samples": entries}

    return _run_check(
        "left.free_value",
        "i'_lambda(S(l)) is isomorphic to S'(phi'^{-1}(l)) when l_n < p'_n "
        "and to S'(phi'^{-1}(l - l_n x_n) + c') otherwise",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_left_simple(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = InduceLeft(e)
    idx = e.index
    pn_red = e.source[idx]
    samples = sample_degrees(e.target, pn_red, cfg.samples)

    def body():
        ok = True
        entries = []
        for l in samples:
            got = functor.apply(simple_module(cfg.algebra, l, w))
            sup = preimage(e, (-l) - xgen(e.target, idx).times(e.delta))
            if sup is not None:
                want = _simple_at(cfg.source, sup, w)
                label = element_str(sup)
            else:
                want = zero_module(cfg.source, w)
                label = "zero"
            good = modules_equal(got, want)
            ok = ok and good
            entries.append({"degree": element_str(l), "value": label, "equal": good})
        return ok, {"samples": entries}

    return _run_check(
        "left.simple_value",
        "i'_lambda(k(l)) is the simple at phi'^{-1}(-l - Delta x_n) when "
        "that degree lifts, zero otherwise; for a proper reduction "
        "liftability is exactly 0 < l_n <= p'_n",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_right_free(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = InduceRight(e)
    idx = e.index
    pn_red = e.source[idx]
    samples = iso_sample_degrees(e.target, pn_red, cfg.samples)

    def body():
        ok = True
        entries = []
        for l in samples:
            ln = l.torsion[idx]
            if ln < pn_red:
                want_deg = preimage(e, l)
            else:
                want_deg = preimage(e, l - xgen(e.target, idx).times(ln - pn_red + 1))
            got = functor.apply(free_module(cfg.algebra, l, w))
            want = free_module(cfg.source, want_deg, w)
            entry = {"degree": element_str(l), "image": element_str(want_deg)}
            if modules_equal(got, want):
                entry["iso"] = "equal"
            else:
                iso = is_isomorphic(got, want,
                                    seed=_derive_seed(cfg.seed, f"ir.free|{element_str(l)}"))
                if iso is None:
                    ok = False
                    entry["iso"] = None
                else:
                    entry.update(_iso_witness(cfg, iso))
            entries.append(entry)
        return ok, {"samples": entries}

    return _run_check(
        "right.free_value",
        "i'_rho(S(l)) is isomorphic to S'(phi'^{-1}(l)) when l_n < p'_n and "
        "to S'(phi'^{-1}(l - (l_n - p'_n + 1) x_n)) otherwise",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _check_right_simple(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    functor = InduceRight(e)
    idx = e.index
    pn_red = e.source[idx]
    samples = sample_degrees(e.target, pn_red, cfg.samples)

    def body():
        ok = True
        entries = []
        for l in samples:
            got = functor.apply(simple_module(cfg.algebra, l, w))
            if l.torsion[idx] < pn_red:
                want = simple_module(cfg.source, preimage(e, l), w)
                label = element_str(preimage(e, l))
            else:
                want = zero_module(cfg.source, w)
                label = "zero"
            good = modules_equal(got, want)
            ok = ok and good
            entries.append({"degree": element_str(l), "value": label, "equal": good})
        return ok, {"samples": entries}

    return _run_check(
        "right.simple_value",
        "i'_rho(k(l)) = k'(phi'^{-1}(l)) when 0 <= l_n < p'_n and zero "
        "otherwise",
        {"degrees": [element_str(l) for l in samples]},
        body,
    )


def _twist_sample_modules(cfg):
    e, w = cfg.embedding, cfg.window
    over_src = [
        ("S'(0)", free_module(cfg.source, zero(e.source), w)),
        ("k'(x'_n)", simple_module(cfg.source, xgen(e.source, e.index), w)),
    ]
    over_tgt = [
        ("S(0)", free_module(cfg.algebra, zero(e.target), w)),
        ("k(x_n)", simple_module(cfg.algebra, xgen(e.target, e.index), w)),
    ]
    return over_src, over_tgt


def _check_twist_compat(cfg) -> CheckReport:
    e = cfg.embedding
    over_src, over_tgt = _twist_sample_modules(cfg)

    if cfg.samples == "rich":
        combos = list(itertools.product(over_src, over_tgt))
    else:
        combos = list(zip(over_src, over_tgt))

    def body():
        ok = True
        entries = []
        for i in range(e.index):
            for (sname, sm), (tname, tm) in combos:
                good = twist_compat_check(e, i, sm, tm)
                ok = ok and good
                entries.append({"index": i + 1, "source_module": sname,
                                "target_module": tname, "equal": good})
        return ok, {"samples": entries}

    return _run_check(
        "functors.twist_compat",
        "twisting by x_i for i < n commutes on the nose with i', i'_lambda "
        "and i'_rho",
        {"indices": list(range(1, e.index + 1))},
        body,
    )


def _check_twist_xn(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    mods = [
        ("S(0)", free_module(cfg.algebra, zero(e.target), w)),
        ("k(x_n)", simple_module(cfg.algebra, xgen(e.target, e.index), w)),
        ("S(0)/(x_1)", monomial_quotient(cfg.algebra, zero(e.target), {"x1": 1}, w)[0]),
    ]

    def body():
        ok = True
        entries = []
        for name, m in mods:
            good = rho_lambda_twist_check(e, m)
            ok = ok and good
            entries.append({"module": name, "equal": good})
        return ok, {"samples": entries}

    return _run_check(
        "functors.twist_xn_identity",
        "(i'_rho N)(x'_n) = i'_lambda(N(x_n)) on the nose; this identity "
        "pins the exceptional x_n exponent of i'_rho at Delta + 1",
        {"modules": [name for name, _ in mods]},
        body,
    )


def _cm_inputs(cfg, spec):
    """Cohen-Macaulay sample inputs over the given algebra: shifted frees,
    plus a second syzygy in rich mode (first syzygies need not be free over
    the core, second ones are)."""
    w = cfg.window
    p = spec.weights
    idx = len(p) - 1
    out = [("S(0)", free_module(spec, zero(p), w))]
    if cfg.samples == "rich":
        out.append(("S(x_n)", free_module(spec, xgen(p, idx), w)))
        omega1, _, _ = syzygy(simple_module(spec, zero(p), w))
        omega2, _, _ = syzygy(omega1)
        out.append(("syzygy^2 of k(0)", omega2))
    return out


def _check_cm_preserved(cfg, check_id, name, functor, spec) -> CheckReport:
    inputs = None

    def body():
        nonlocal inputs
        inputs = _cm_inputs(cfg, spec)
        ok = True
        entries = []
        for label, m in inputs:
            flag_in, wit_in = is_cohen_macaulay(m)
            if not flag_in:
                entries.append({"module": label, "input_cm": False, "witness": wit_in})
                continue
            flag_out, wit_out = is_cohen_macaulay(functor.apply(m))
            ok = ok and flag_out
            entry = {"module": label, "input_cm": True, "output_cm": flag_out}
            if not flag_out:
                entry["witness"] = wit_out
            entries.append(entry)
        return ok, {"samples": entries}

    return _run_check(
        check_id,
        f"{name} sends Cohen-Macaulay modules to Cohen-Macaulay modules",
        {},
        body,
    )


def _check_exactness(cfg, check_id, name, functor, spec) -> CheckReport:
    w = cfg.window
    p = spec.weights

    def body():
        quot, proj = monomial_quotient(spec, zero(p), {"x1": 1}, w)
        kmod, incl = kernel(proj)
        assert ses_exact(incl, proj)
        f_incl = functor.apply_morphism(incl)
        f_proj = functor.apply_morphism(proj)
        ok = ses_exact(f_incl, f_proj)
        return ok, {
            "sequence": "0 -> K -> S(0) -> S(0)/(x_1) -> 0",
            "image_exact": ok,
        }

    return _run_check(
        check_id,
        f"{name} sends degreewise short exact sequences to degreewise short "
        f"exact sequences",
        {},
        body,
    )


def _check_degenerate_identity(cfg) -> CheckReport:
    e, w = cfg.embedding, cfg.window
    s = cfg.algebra
    p = e.target
    mods = [
        ("S(0)", free_module(s, zero(p), w)),
        ("k(x_n)", simple_module(s, xgen(p, e.index), w)),
        ("S(0)/(x_1)", monomial_quotient(s, zero(p), {"x1": 1}, w)[0]),
    ]
    functors = [("i", Restrict(e)), ("i_lambda", InduceLeft(e)), ("i_rho", InduceRight(e))]

    def body():
        ok = True
        entries = []
        for fname, functor in functors:
            for label, m in mods:
                got = functor.apply(m)
                good = (got.window == m.window and modules_equal(got, m)
                        and got.degrees() == m.degrees())
                ok = ok and good
                entries.append({"functor": fname, "module": label, "identity": good})
        return ok, {"samples": entries}

    return _run_check(
        "functors.degenerate_identity",
        "for p'_n = p_n all three functors are the identity: same window, "
        "same components, same actions",
        {"modules": [label for label, _ in mods]},
        body,
    )


def lemma_suite(cfg: VerifyConfig, items_only: bool = False) -> list[CheckReport]:
    """All lemma checks; with items_only the suite is cut to the value and
    preservation statements (twists, free/simple/interval values, CM), the
    subset the weight sweep quantifies over."""
    e = cfg.embedding
    checks = [
        _check_restrict_free(cfg),
        _check_restrict_simple(cfg),
        _check_restrict_interval(cfg),
        _check_left_free(cfg),
        _check_left_simple(cfg),
        _check_right_free(cfg),
        _check_right_simple(cfg),
        _check_twist_compat(cfg),
        _check_cm_preserved(cfg, "restrict.cm_preserved", "i'", Restrict(e), cfg.source),
        _check_cm_preserved(cfg, "left.cm_preserved", "i'_lambda", InduceLeft(e), cfg.algebra),
        _check_cm_preserved(cfg, "right.cm_preserved", "i'_rho", InduceRight(e), cfg.algebra),
    ]
    if items_only:
        return checks
    checks += [
        _check_twist_xn(cfg),
        _check_exactness(cfg, "restrict.exactness", "i'", Restrict(e), cfg.source),
        _check_exactness(cfg, "left.exactness", "i'_lambda", InduceLeft(e), cfg.algebra),
        _check_exactness(cfg, "right.exactness", "i'_rho", InduceRight(e), cfg.algebra),
    ]
    if e.delta == 0:
        checks.append(_check_degenerate_identity(cfg))
    return checks


# ---------------------------------------------------------------------------
# adjunction suite


def _adjunction_pairs(cfg):
    e, w = cfg.embedding, cfg.window
    s, sp = cfg.algebra, cfg.source
    p, pp = e.target, e.source
    idx = e.index
    mixed = tuple(min(1, p[i] - 1) for i in range(idx)) + (0,)
    n_mods = [
        ("S(0)", free_module(s, zero(p), w)),
        ("S(x_n)", free_module(s, xgen(p, idx), w)),
        ("k(0)", simple_module(s, zero(p), w)),
        ("k(x_n)", simple_module(s, xgen(p, idx), w)),
        ("S(0)/(x_n)", monomial_quotient(s, zero(p), {f"x{idx + 1}": 1}, w)[0]),
        ("k(mixed)", simple_module(s, GradingElement(p, mixed, -1), w)),
    ]
    m_mods = [
        ("S'(0)", free_module(sp, zero(pp), w)),
        ("S'(x'_n)", free_module(sp, xgen(pp, idx), w)),
        ("k'(0)", simple_module(sp, zero(pp), w)),
        ("k'(x'_n)", simple_module(sp, xgen(pp, idx), w)),
        ("S'(0)/(x_1)", monomial_quotient(sp, zero(pp), {"x1": 1}, w)[0]),
    ]
    picks = [(0, 0), (0, 2), (1, 1), (1, 3), (2, 0), (2, 4),
             (3, 2), (3, 3), (4, 1), (4, 4), (5, 0), (5, 2)]
    pairs = [(n_mods[i], m_mods[j]) for i, j in picks]
    return n_mods, m_mods, pairs


def adjunction_suite(cfg: VerifyConfig) -> list[CheckReport]:
    e, w = cfg.embedding, cfg.window
    il, ir, re_ = InduceLeft(e), InduceRight(e), Restrict(e)
    n_mods, m_mods, pairs = _adjunction_pairs(cfg)
    checks = []

    def left_dims():
        ok = True
        entries = []
        for (nname, n), (mname, m) in pairs:
            dl = len(hom_space(il.apply(n), m))
            dr = len(hom_space(n, re_.apply(m)))
            good = dl == dr
            ok = ok and good
            entries.append({"N": nname, "M": mname, "dim_left": dl,
                            "dim_right": dr, "equal": good})
        return ok, {"pairs": entries}

    checks.append(_run_check(
        "adjoint.left_hom_dims",
        "dim Hom(i'_lambda N, M) = dim Hom(N, i' M) on every sampled pair",
        {"pair_count": len(pairs)},
        left_dims,
    ))

    def phi_bijection():
        ok = True
        entries = []
        for (nname, n), (mname, m) in pairs:
            basis_l = hom_space(il.apply(n), m)
            basis_r = hom_space(n, re_.apply(m))
            good = len(basis_l) == len(basis_r)
            round_l = round_r = True
            try:
                for f in basis_l:
                    g = adjunction_phi(e, n, f)
                    validate_morphism(g)
                    if not morphisms_equal(adjunction_phi_inv(e, m, g), f):
                        round_l = False
                for g in basis_r:
                    f = adjunction_phi_inv(e, m, g)
                    validate_morphism(f)
                    if not morphisms_equal(adjunction_phi(e, n, f), g):
                        round_r = False
            except ValueError:
                round_l = round_r = False
            good = good and round_l and round_r
            ok = ok and good
            entries.append({"N": nname, "M": mname, "dim": len(basis_l),
                            "phi_inv_phi_id": round_l, "phi_phi_inv_id": round_r})
        return ok, {"pairs": entries}

    checks.append(_run_check(
        "adjoint.phi_bijection",
        "the transpose Phi and its inverse are mutually inverse bijections "
        "between Hom(i'_lambda N, M) and Hom(N, i' M), each image a valid "
        "morphism",
        {"pair_count": len(pairs)},
        phi_bijection,
    ))

    def right_dims():
        ok = True
        entries = []
        for (nname, n), (mname, m) in pairs:
            dl = len(hom_space(re_.apply(m), n))
            dr = len(hom_space(m, ir.apply(n)))
            good = dl == dr
            ok = ok and good
            entries.append({"N": nname, "M": mname, "dim_left": dl,
                            "dim_right": dr, "equal": good})
        return ok, {"pairs": entries}

    checks.append(_run_check(
        "adjoint.right_hom_dims",
        "dim Hom(i' M, N) = dim Hom(M, i'_rho N) on every sampled pair",
        {"pair_count": len(pairs)},
        right_dims,
    ))

    def triangles():
        ok = True
        entries = []
        for nname, n in (n_mods[0], n_mods[3]):
            il_n = il.apply(n)
            eta = adjunction_unit(e, n)
            comp = compose(adjunction_counit(e, il_n), il.apply_morphism(eta))
            good = morphisms_equal(comp, identity_morphism(il_n))
            ok = ok and good
            entries.append({"triangle": "counit(i'_lambda N) . i'_lambda(unit_N) = id",
                            "N": nname, "holds": good})
        for mname, m in (m_mods[0], m_mods[3]):
            i_m = re_.apply(m)
            eps = adjunction_counit(e, m)
            comp = compose(re_.apply_morphism(eps), adjunction_unit(e, i_m))
            good = morphisms_equal(comp, identity_morphism(i_m))
            ok = ok and good
            entries.append({"triangle": "i'(counit_M) . unit(i' M) = id",
                            "M": mname, "holds": good})
        return ok, {"samples": entries}

    checks.append(_run_check(
        "adjoint.triangles",
        "both triangle identities of the adjunction (i'_lambda, i') hold "
        "exactly on samples",
        {},
        triangles,
    ))

    def counit_iso():
        ok = True
        entries = []
        f = cfg.algebra.field
        for mname, m in m_mods:
            eps = adjunction_counit(e, m)
            good = True
            for d in eps.source.degrees():
                if not eps.window.contains(d.height):
                    continue
                a, b = eps.source.dim(d), eps.target.dim(d)
                if a != b or rank(eps.component(d)) != a:
                    good = False
                    break
            for d in eps.target.degrees():
                if eps.window.contains(d.height) and not eps.source.dim(d):
                    good = False
                    break
            ok = ok and good
            entries.append({"M": mname, "iso": good})
        return ok, {"samples": entries}

    checks.append(_run_check(
        "adjoint.counit_iso",
        "the counit i'_lambda i' M -> M is an isomorphism for every sampled "
        "M",
        {"modules": [name for name, _ in m_mods]},
        counit_iso,
    ))

    return checks


# ---------------------------------------------------------------------------
# theorem suite


def _theorem_patterns(cfg):
    p = cfg.embedding.target
    idx = cfg.embedding.index
    pats = [(0,) * idx]
    if cfg.samples == "rich":
        mixed = tuple(min(1, p[i] - 1) for i in range(idx))
        if mixed != pats[0]:
            pats.append(mixed)
    return pats


def _generation_data(cfg, l):
    """The sequence 0 -> K -> i'(k'(phi'^{-1}(l))) -> k(l) -> 0 for l_n = 0;
    returns (ok, payload)."""
    e, w = cfg.embedding, cfg.window
    s = cfg.algebra
    f = s.field
    lp = preimage(e, l)
    mid = Restrict(e).apply(simple_module(cfg.source, lp, w))
    top = simple_module(s, l, w)
    sup = -l
    if not w.contains(sup.height):
        raise InsufficientWindowError(
            f"support degree {element_str(sup)} of k({element_str(l)}) is "
            f"outside the window")
    comps = {}
    if mid.dim(sup) and top.dim(sup):
        comps[sup] = Matrix.identity(f, 1)
    proj = GradedMorphism(mid, top, w, comps)
    validate_morphism(proj)
    kmod, incl = kernel(proj)
    exact = ses_exact(incl, proj)
    factors = composition_factors(kmod)
    expected = sorted(
        ((-l) + xgen(e.target, e.index).times(j) for j in range(1, e.delta + 1)),
        key=degree_key,
    )
    found = []
    for d, mult in factors:
        found.extend([d] * mult)
    form_ok = found == expected
    payload = {
        "degree": element_str(l),
        "exact": exact,
        "factors": [element_str(d) for d in found],
        "factor_count": len(found),
        "asserted_count": e.delta + 1,
        "count_note": "every factor is k(l - j x_n); the computed count is "
                      "p''_n - 1, one below the asserted p''_n",
    }
    return exact and form_ok, payload


def theorem_suite(cfg: VerifyConfig, prior: list[CheckReport] | None = None) -> list[CheckReport]:
    e, w = cfg.embedding, cfg.window
    p, pp = e.target, e.source
    idx = e.index
    checks: list[CheckReport] = []
    if len(p) != 3:
        checks.append(CheckReport(
            "recollement.scope",
            "the composed functors j'', j''_lambda, j''_rho are stated for "
            "length-3 weight sequences",
            {"weights": list(p)},
            "skip",
            {"reason": "out-of-scope", "detail": f"weight sequence has length {len(p)}"},
        ))
        checks.extend(_assumed_checklist(cfg, (prior or []) + checks))
        return checks

    s, sp = cfg.algebra, cfg.source
    e2 = second_embedding(e)
    s2 = spec_with_weights(s, e2.source)
    p2 = e2.source
    pn_red = pp[idx]
    jf = j_restriction(e)
    jl = j_left_induction(e)
    jr = j_right_induction(e)

    # j'' = (x''_n) i''_rho (-p'_n x_n)
    direct = Composite((
        Twist(xgen(p, idx).times(-pn_red)),
        InduceRight(e2),
        Twist(xgen(p2, idx)),
    ))
    twist_mods = [
        ("S(0)", free_module(s, zero(p), w)),
        ("k(x_n)", simple_module(s, xgen(p, idx), w)),
        ("S(0)/(x_1)", monomial_quotient(s, zero(p), {"x1": 1}, w)[0]),
    ]

    def j_twist():
        ok = True
        entries = []
        for name, m in twist_mods:
            good = modules_equal(jf.apply(m), direct.apply(m))
            ok = ok and good
            entries.append({"module": name, "equal": good})
        return ok, {"samples": entries}

    checks.append(_run_check(
        "recollement.j_twist_identity",
        "j'' = (x''_n) i''_rho (-p'_n x_n) as functors, checked on samples",
        {"modules": [name for name, _ in twist_mods]},
        j_twist,
    ))

    nd_mods = [
        ("k''(0)", simple_module(s2, zero(p2), w)),
        ("k''(x''_n)", simple_module(s2, xgen(p2, idx), w)),
    ]
    m_mods = [
        ("k(0)", simple_module(s, zero(p), w)),
        ("k(x_n)", simple_module(s, xgen(p, idx), w)),
    ]
    if cfg.samples == "rich":
        nd_mods.append(("S''(0)", free_module(s2, zero(p2), w)))
        m_mods.append(("S(0)", free_module(s, zero(p), w)))

    def left_adj():
        ok = True
        entries = []
        for (nname, n2), (mname, m) in itertools.product(nd_mods, m_mods):
            dl = len(hom_space(jl.apply(n2), m))
            dr = len(hom_space(n2, jf.apply(m)))
            good = dl == dr
            ok = ok and good
            entries.append({"N''": nname, "M": mname, "dim_left": dl,
                            "dim_right": dr, "equal": good})
        return ok, {"pairs": entries}

    checks.append(_run_check(
        "recollement.left_adjoint_dims",
        "dim Hom(j''_lambda N'', M) = dim Hom(N'', j'' M) on every sampled "
        "pair",
        {"pair_count": len(nd_mods) * len(m_mods)},
        left_adj,
    ))

    def right_adj():
        ok = True
        entries = []
        for (nname, n2), (mname, m) in itertools.product(nd_mods, m_mods):
            dl = len(hom_space(jf.apply(m), n2))
            dr = len(hom_space(m, jr.apply(n2)))
            good = dl == dr
            ok = ok and good
            entries.append({"N''": nname, "M": mname, "dim_left": dl,
                            "dim_right": dr, "equal": good})
        return ok, {"pairs": entries}

    checks.append(_run_check(
        "recollement.right_adjoint_dims",
        "dim Hom(j'' M, N'') = dim Hom(M, j''_rho N'') on every sampled pair",
        {"pair_count": len(nd_mods) * len(m_mods)},
        right_adj,
    ))

    pats = _theorem_patterns(cfg)
    vanish_samples = [GradingElement(pp, pat + (v,), -1)
                      for pat in pats for v in range(1, pn_red)]

    def vanishing():
        ok = True
        entries = []
        for lp in vanish_samples:
            x = jf.apply(Restrict(e).apply(simple_module(sp, lp, w)))
            if not x.is_zero_module():
                ok = False
                entries.append({"degree": element_str(lp), "zero": False})
                continue
            # zero in the window; global vanishing needs the support bounds
            # to fall inside it (or to be void)
            certified = (
                x.support_min is not None and x.support_max is not None
                and (x.support_max < x.support_min
                     or (x.support_min >= x.window.h_min
                         and x.support_max <= x.window.h_max))
            )
            if not certified:
                raise InsufficientWindowError(
                    f"value at {element_str(lp)} vanishes on the window but "
                    f"its support bounds are not contained in it"
                )
            entries.append({"degree": element_str(lp), "zero": True,
                            "support_certified": True})
        if not vanish_samples:
            entries.append({"note": "no torsion values with 0 < l'_n < p'_n; "
                                    "the claim is vacuous here"})
        return ok, {"samples": entries}

    checks.append(_run_check(
        "recollement.vanishing",
        "j'' i'(k'(l')) = 0 whenever l'_n > 0",
        {"degrees": [element_str(l) for l in vanish_samples]},
        vanishing,
    ))

    quot_samples = [GradingElement(pp, pat + (0,), -1) for pat in pats]
    quot_powers = {f"x{i + 1}": 1 for i in range(len(p) - 1)}

    def quotient_value():
        ok = True
        entries = []
        for lp in quot_samples:
            x = jf.apply(Restrict(e).apply(simple_module(sp, lp, w)))
            param = preimage(e2, embed(e, lp))
            want, _ = monomial_quotient(s2, param, quot_powers, w)
            iso = is_isomorphic(x, want,
                                seed=_derive_seed(cfg.seed, f"j.quot|{element_str(lp)}"))
            printed_param = param + cvec(p2)
            want_printed, _ = monomial_quotient(s2, printed_param, quot_powers, w)
            printed_match = is_isomorphic(
                x, want_printed,
                seed=_derive_seed(cfg.seed, f"j.quotp|{element_str(lp)}")) is not None
            good = iso is not None
            ok = ok and good
            entries.append({
                "degree": element_str(lp),
                "parameter": element_str(param),
                "total_dim": x.total_dim(),
                "matches": good,
                "printed_parameter": element_str(printed_param),
                "printed_parameter_matches": printed_match,
            })
        return ok, {
            "samples": entries,
            "parameter_note": "the computed parameter is phi''^{-1}(phi'(l')); "
                              "the variant with an extra c'' shift does not "
                              "match under the fixed support convention",
        }

    checks.append(_run_check(
        "recollement.quotient_value",
        "j'' i'(k'(l')) is isomorphic to S''(phi''^{-1}(phi'(l')))/"
        "(x_1, ..., x_{n-1}) when l'_n = 0, of total dimension p''_n",
        {"degrees": [element_str(l) for l in quot_samples]},
        quotient_value,
    ))

    def finite_projdim():
        ok = True
        entries = []
        for lp in quot_samples:
            param = preimage(e2, embed(e, lp))
            x, _ = monomial_quotient(s2, param, quot_powers, w)
            omega1, _, _ = syzygy(x)
            omega2, _, _ = syzygy(omega1)
            pred = free_module(
                s2, param - xgen(p2, 0) - xgen(p2, 1), omega2.window)
            iso = is_isomorphic(omega2, pred,
                                seed=_derive_seed(cfg.seed, f"j.pd|{element_str(lp)}"))
            omega3, _, _ = syzygy(omega2)
            good = iso is not None and omega3.is_zero_module()
            ok = ok and good
            entries.append({
                "degree": element_str(lp),
                "second_syzygy_free": iso is not None,
                "third_syzygy_zero": omega3.is_zero_module(),
                "predicted_free": element_str(param - xgen(p2, 0) - xgen(p2, 1)),
            })
        return ok, {"samples": entries}

    checks.append(_run_check(
        "recollement.finite_projdim",
        "the quotient value has projective dimension 2 over S'': its second "
        "syzygy is free and its third vanishes",
        {"degrees": [element_str(l) for l in quot_samples]},
        finite_projdim,
    ))

    gen_samples = [GradingElement(p, pat + (0,), -1) for pat in pats]

    def generation():
        ok = True
        entries = []
        for l in gen_samples:
            good, payload = _generation_data(cfg, l)
            ok = ok and good
            entries.append(payload)
        return ok, {"samples": entries}

    checks.append(_run_check(
        "recollement.generation_ses",
        "0 -> K -> i'(k'(phi'^{-1}(l))) -> k(l) -> 0 is degreewise exact for "
        "l_n = 0, and K has composition factors k(l - j x_n); the count is "
        "recorded in the witness",
        {"degrees": [element_str(l) for l in gen_samples]},
        generation,
    ))

    if cfg.samples == "rich":
        coverage_classes = torsion_classes(p)
    else:
        # the case split runs along the last coordinate only; walk it in
        # full over a fixed pattern of the other coordinates
        coverage_classes = [pats[0] + (v,) for v in range(p[idx])]

    def coverage():
        ok = True
        rows = []
        for t in coverage_classes:
            l = GradingElement(p, t, -1)
            t3 = t[idx]
            row = {"degree": element_str(l)}
            if t3 == 0:
                row["case"] = "generation_ses"
                good, payload = _generation_data(cfg, l)
                row["factor_count"] = payload["factor_count"]
            elif t3 < pn_red:
                row["case"] = "restriction_image"
                got = Restrict(e).apply(simple_module(sp, preimage(e, l), w))
                good = modules_equal(got, simple_module(s, l, w))
            else:
                m2 = preimage(e2, l - xgen(p, idx).times(pn_red)) + xgen(p2, idx)
                x = jl.apply(simple_module(s2, m2, w))
                row["witness_degree"] = element_str(m2)
                if t3 == pn_red:
                    row["case"] = "left_induction_filtration"
                    gens = minimal_generators(x)
                    factors = composition_factors(x)
                    good = (len(gens) == 1 and gens[0][0] == -l
                            and sum(m for _, m in factors) == pn_red)
                    for d, mult in factors:
                        md = -d
                        if d == -l:
                            good = good and mult == 1
                        elif not (mult == 1 and 0 < md.torsion[idx] < pn_red):
                            good = False
                    row["factor_count"] = sum(m for _, m in factors)
                else:
                    row["case"] = "left_induction_image"
                    good = modules_equal(x, simple_module(s, l, w))
            row["ok"] = good
            ok = ok and good
            rows.append(row)
        return ok, {"table": rows}

    checks.append(_run_check(
        "recollement.coverage",
        "every simple k(l) is certified by one of: the generation sequence "
        "(l_n = 0), a restriction image (0 < l_n < p'_n), or a left "
        "induction witness with its factors accounted for (l_n >= p'_n)",
        {"torsion_classes": [list(t) for t in coverage_classes]},
        coverage,
    ))

    checks.extend(_assumed_checklist(cfg, (prior or []) + checks))
    return checks


_ASSUMED = [
    (
        "assumed.stable_induction",
        "the degreewise functor identities verified on samples induce the "
        "stated functors of stable categories; the inductive extension from "
        "samples to all modules is category-level and not re-checked",
        [
            "restrict.free_value", "restrict.simple_value",
            "restrict.interval_value", "left.free_value", "left.simple_value",
            "right.free_value", "right.simple_value", "functors.twist_compat",
            "functors.twist_xn_identity", "restrict.exactness",
            "left.exactness", "right.exactness",
        ],
    ),
    (
        "assumed.adjoint_glue",
        "the verified hom-dimension equalities, transpose bijections and "
        "triangle identities assemble the adjoint triples on both levels",
        [
            "adjoint.left_hom_dims", "adjoint.phi_bijection",
            "adjoint.right_hom_dims", "adjoint.triangles",
            "adjoint.counit_iso", "recollement.j_twist_identity",
            "recollement.left_adjoint_dims", "recollement.right_adjoint_dims",
        ],
    ),
    (
        "assumed.kernel_image",
        "the vanishing, quotient value, finite projective dimension and "
        "generation witnesses give the kernel-image glueing over the full "
        "torsion coverage",
        [
            "recollement.vanishing", "recollement.quotient_value",
            "recollement.finite_projdim", "recollement.generation_ses",
            "recollement.coverage",
        ],
    ),
]


def _assumed_checklist(cfg, collected: list[CheckReport]) -> list[CheckReport]:
    """Category-level steps reported as assumed, discharged by the listed
    module-level checks when those ran and passed."""
    by_id: dict[str, str] = {}
    order = {"pass": 0, "skip": 1, "fail": 2}
    for c in collected:
        cur = by_id.get(c.check_id)
        if cur is None or order[c.status] > order[cur]:
            by_id[c.check_id] = c.status
    out = []
    for check_id, anchor, cited in _ASSUMED:
        statuses = {cid: by_id.get(cid, "not-run") for cid in cited}
        if any(v == "fail" for v in statuses.values()):
            status = "fail"
        elif any(v in ("skip", "not-run") for v in statuses.values()):
            status = "skip"
        else:
            status = "pass"
        out.append(CheckReport(
            check_id, anchor, {},
            status,
            {"induction": "assumed", "discharged_by": cited,
             "statuses": statuses},
        ))
    return out


# ---------------------------------------------------------------------------
# suite runners


def run_suite(cfg: VerifyConfig, suite: str = "all") -> dict:
    """Run one suite (or all of them) and return a deterministic report.

    Besides the public suite names, "lemma-items" selects the value and
    preservation subset of the lemma suite that weight sweeps quantify over.
    """
    if suite not in SUITES and suite != "lemma-items":
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    checks: list[CheckReport] = []
    if suite == "lemma-items":
        checks.extend(lemma_suite(cfg, items_only=True))
    if suite in ("lemmas", "all"):
        checks.extend(lemma_suite(cfg))
    if suite in ("adjunction", "all"):
        checks.extend(adjunction_suite(cfg))
    if suite in ("theorem", "all"):
        checks.extend(theorem_suite(cfg, prior=checks))
    summary = {"pass": 0, "fail": 0, "skip": 0}
    for c in checks:
        summary[c.status] += 1
    return {
        "config": cfg.to_doc(),
        "suite": suite,
        "checks": [c.to_dict() for c in checks],
        "summary": summary,
    }


def run_sweep(suite: str = "lemma-items", max_weight: int = 4, extra=((2, 3, 5),),
              field: str = "rational", h_min: int = -3, h_max: int = 6,
              seed: int = 0) -> dict:
    """Run a suite over every weight triple with entries up to max_weight
    (plus the extra triples) and every reduced last weight, in reduced
    sampling mode, aggregating one report."""
    triples = [tuple(t) for t in itertools.product(range(1, max_weight + 1), repeat=3)]
    for t in extra or ():
        t = tuple(t)
        if t not in triples:
            triples.append(t)
    triples.sort()
    reports = []
    totals = {"pass": 0, "fail": 0, "skip": 0}
    for weights in triples:
        for r in range(1, weights[-1] + 1):
            cfg = make_config(weights, r, field=field, h_min=h_min,
                              h_max=h_max, seed=seed, samples="reduced")
            rep = run_suite(cfg, suite)
            reports.append(rep)
            for k in totals:
                totals[k] += rep["summary"][k]
    return {
        "suite": suite,
        "max_weight": max_weight,
        "config_count": len(reports),
        "configs": reports,
        "summary": totals,
    }
