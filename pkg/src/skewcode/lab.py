"""Automated verification sweep over small, exhaustively enumerable instances.

Each suite checks one claim.  Suites of kind ``"theorem"`` count
counterexamples, and any nonzero count makes the report fail.  Suites of kind
``"observation"`` only record outcomes.  Results depend only on the
configuration and the seed; wall time is reported only on request.
"""

from __future__ import annotations

import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import product
from typing import Callable

import numpy as np

from . import kernels, linalg
from .code import (
    Code,
    build_code,
    check_gxy_criterion,
    column_shift_batch,
    is_2d_skew_constacyclic,
    left_span_matrix,
    leading_positions,
    membership_via_h_batch,
    minimal_degree_generator,
    row_shift_batch,
)
from .divisors import DEFAULT_BUDGET, DivisorSearch, right_divisors, univariate_right_divisors
from .duality import (
    a_matrix,
    a_matrix_via_psi,
    annihilator_orthogonality_batch,
    double_dual_equal,
    dual_candidate,
    dual_shift_closure,
    open_problem_probe,
)
from .errors import CapExceededError, UnsupportedDivisorError, UsageError
from .poly import SkewPoly, SkewRing, geq, is_central, lex_geq, lex_gt, mccoy_annihilator, psi, right_divide
from .quotient import (
    QuotientContext,
    four_sum_product,
    from_codes,
    mul_codes_batch,
    reduce,
    reduce_diamond,
    reduce_stepwise,
    star_mul_mod,
    twist_table,
)
from .ring import ENUMERATION_CAP, AutomorphismPair, Element, RingSpec, automorphism_order

SCHEMA = "skewcode-lab/1"
MAX_LISTED = 5


# -- configuration -------------------------------------------------------------


@dataclass(frozen=True)
class Caps:
    enumeration: int = ENUMERATION_CAP
    search_budget: int = DEFAULT_BUDGET
    samples: int = 1000
    pair_samples: int = 10_000
    exhaustive_pairs: int = 1 << 16

    @classmethod
    def from_json(cls, data: dict) -> "Caps":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise UsageError(f"caps: unknown keys {sorted(unknown)}")
        return cls(**{k: int(v) for k, v in data.items()})

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _fixed_involutions(ring: RingSpec, autos: AutomorphismPair) -> list[Element]:
    return [u for u in ring.units() if autos.is_fixed(u, "rho", "theta") and (u * u).code == 1]


def desk_contexts() -> tuple[QuotientContext, ...]:
    """GF(4) and GF(9) with ρ = θ = Frobenius, (l, s) ∈ {(2,2), (2,4), (4,2)},
    and every λ1, λ2 in the fixed subfield with λ² = 1."""
    out = []
    for name in ("gf4", "gf9"):
        ring = RingSpec.from_name(name)
        autos = AutomorphismPair(1, 1)
        lams = _fixed_involutions(ring, autos)
        for l, s in ((2, 2), (2, 4), (4, 2)):
            for lam1, lam2 in product(lams, lams):
                out.append(QuotientContext(SkewRing(ring, autos), l, s, lam1, lam2))
    return tuple(out)


@dataclass(frozen=True)
class LabConfig:
    contexts: tuple[QuotientContext, ...] = field(default_factory=desk_contexts)
    seed: int = 0
    caps: Caps = Caps()
    suites: tuple[str, ...] | None = None

    @classmethod
    def from_json(cls, data: dict) -> "LabConfig":
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        unknown = set(data) - {"configurations", "seed", "caps", "suites"}
        if unknown:
            raise UsageError(f"config: unknown keys {sorted(unknown)}")
        contexts = desk_contexts()
        if "configurations" in data:
            parsed = []
            for n, entry in enumerate(data["configurations"]):
                try:
                    parsed.append(QuotientContext.from_json(entry))
                except UsageError as exc:
                    raise UsageError(f"configurations[{n}]: {exc}") from None
            contexts = tuple(parsed)
        suites = data.get("suites")
        if suites is not None:
            suites = tuple(suites)
            bad = [s for s in suites if s not in SUITES]
            if bad:
                raise UsageError(f"suites: unknown {bad}; known: {list(SUITES)}")
        return cls(contexts, int(data.get("seed", 0)), Caps.from_json(data.get("caps", {})), suites)

    def to_json(self) -> dict:
        return {
            "configurations": [c.to_json() for c in self.contexts],
            "seed": self.seed,
            "caps": self.caps.to_json(),
            "suites": list(self.selected()),
        }

    def selected(self) -> tuple[str, ...]:
        return tuple(SUITES) if self.suites is None else self.suites


# -- results -------------------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    kind: str
    claim: str
    configuration: str | None
    instances: int = 0
    counterexample_count: int = 0
    counterexamples: list[str] = field(default_factory=list)
    skipped: int = 0
    notes: list[str] = field(default_factory=list)
    outcomes: object = None
    seconds: float | None = None

    def check(self, ok: bool, describe: Callable[[], str] | str, weight: int = 1) -> bool:
        self.instances += weight
        if not ok:
            self.counterexample_count += 1
            if len(self.counterexamples) < MAX_LISTED:
                self.counterexamples.append(describe() if callable(describe) else describe)
        return ok

    def check_many(self, ok: np.ndarray, describe: Callable[[int], str]) -> None:
        ok = np.asarray(ok, dtype=bool)
        self.instances += int(ok.size)
        bad = np.flatnonzero(~ok)
        self.counterexample_count += int(bad.size)
        for n in bad[: max(0, MAX_LISTED - len(self.counterexamples))]:
            self.counterexamples.append(describe(int(n)))

    @property
    def failed(self) -> bool:
        return self.kind == "theorem" and self.counterexample_count > 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "kind": self.kind,
            "claim": self.claim,
            "configuration": self.configuration,
            "instances": self.instances,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "notes": self.notes,
        }
        if self.outcomes is not None:
            out["outcomes"] = self.outcomes
        if timing:
            out["seconds"] = round(self.seconds or 0.0, 3)
        return out


@dataclass
class VerificationReport:
    seed: int
    config: dict
    results: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return not any(r.failed for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "seed": self.seed,
            "ok": self.ok,
            "config": self.config,
            "suites": [r.to_json(timing) for r in self.results],
        }


# -- shared helpers ------------------------------------------------------------


def _rng(seed: int, name: str, tag: str = "") -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode()), zlib.crc32(tag.encode())])


def _skew(name: str, rho: int, theta: int) -> SkewRing:
    return SkewRing(RingSpec.from_name(name), AutomorphismPair(rho, theta))


def _random_nonzero(skew: SkewRing, rng, max_box: int = 3) -> SkewPoly:
    shape = (int(rng.integers(1, max_box + 1)), int(rng.integers(1, max_box + 1)))
    return skew.random_poly(rng, shape, nonzero=True)


def _random_monic(skew: SkewRing, rng, max_box: int = 3) -> SkewPoly:
    f = _random_nonzero(skew, rng, max_box)
    return f.leading_coefficient().inverse() * f


@lru_cache(maxsize=64)
def _sweep(ctx: QuotientContext, budget: int) -> tuple[DivisorSearch, tuple[Code, ...]]:
    search = right_divisors(ctx, budget)
    return search, tuple(build_code(ctx, g) for g in search.divisors)


def _sweep_notes(res: SuiteResult, search: DivisorSearch) -> None:
    res.notes.append(f"{len(search.divisors)} monic right divisors")
    if not search.complete:
        res.notes.append(f"divisor search skipped degrees {list(search.skipped_degrees)} (budget)")
        res.skipped += len(search.skipped_degrees)


def _all_words(ctx: QuotientContext, cap: int) -> np.ndarray | None:
    q, n = ctx.ring.size, ctx.l * ctx.s
    if q**n > cap:
        return None
    return (np.arange(q**n)[:, None] // q ** np.arange(n)[None, :] % q).reshape((-1,) + ctx.shape)


def _words(ctx: QuotientContext, rng, cap: int, samples: int) -> tuple[np.ndarray, bool]:
    """All l×s arrays when enumerable, else a uniform sample."""
    allw = _all_words(ctx, cap)
    if allw is not None:
        return allw, True
    return rng.integers(0, ctx.ring.size, size=(samples,) + ctx.shape), False


def _arr(ctx: QuotientContext, w: np.ndarray) -> str:
    return ctx.skew.from_dense(np.asarray(w).reshape(ctx.shape)).to_text()


# -- global suites ---------------------------------------------------------------


def suite_ring_axioms(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("gf4", "gf8", "gf9", "z4", "z6"):
        ring = RingSpec.from_name(name)
        add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
        q = ring.size
        a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
        checks = {
            "add assoc": add[add[a, b], c] == add[a, add[b, c]],
            "mul assoc": mul[mul[a, b], c] == mul[a, mul[b, c]],
            "add comm": add[a, b] == add[b, a],
            "mul comm": mul[a, b] == mul[b, a],
            "distrib": mul[a, add[b, c]] == add[mul[a, b], mul[a, c]],
            "identities": (add[a, 0] == a) & (mul[a, 1] == a) & (add[a, neg[a]] == 0),
        }
        for law, ok in checks.items():
            flat = ok.reshape(-1)
            res.check_many(flat, lambda n, law=law, ring=ring: f"{ring}: {law} fails at triple {np.unravel_index(n, (q, q, q))}")
        frob = ring.frobenius_tables
        m = frob.shape[0]
        x, y = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
        for e in range(m):
            f = frob[e]
            hom = (f[add[x, y]] == add[f[x], f[y]]) & (f[mul[x, y]] == mul[f[x], f[y]])
            res.check(bool(hom.all()), f"{ring}: Frob^{e} is not a homomorphism")
            res.check(len(set(f.tolist())) == q, f"{ring}: Frob^{e} is not a bijection")
            res.check(bool((frob[(-e) % m][f] == np.arange(q)).all()), f"{ring}: Frob^{e} inverse round trip fails")
            for e2 in range(m):
                res.check(bool((frob[e2][f] == f[frob[e2]]).all()), f"{ring}: Frob^{e}, Frob^{e2} do not commute")
                autos = AutomorphismPair(e, e2) if ring.kind == "gf" else AutomorphismPair(0, 0)
                for el in ring.elements():
                    if autos.is_fixed(el, "rho", "theta"):
                        res.check(autos.is_fixed(el, "rhotheta"), f"{ring}: {el} fixed by rho,theta but not rho*theta")
            if ring.kind == "gf":
                count = int((f == np.arange(q)).sum())
                expect = ring.p ** np.gcd(ring.m, e if e else ring.m)
                res.check(count == expect, f"{ring}: Frob^{e} fixes {count} elements, expected {expect}")


def suite_degree_orders(res: SuiteResult, cfg: LabConfig, rng) -> None:
    grid = [(i, j) for i in range(-2, 4) for j in range(-2, 4)]
    for e in grid:
        res.check(geq(e, e), f"geq not reflexive at {e}")
        for f in grid:
            res.check(lex_geq(e, f) or lex_geq(f, e), f"lex not total at {e}, {f}")
            res.check(not geq(e, f) or lex_geq(e, f), f"geq without lex_geq at {e}, {f}")
            res.check(lex_gt(e, f) == (lex_geq(e, f) and e != f), f"lex_gt mismatch at {e}, {f}")
            if e != f:
                res.check(not (geq(e, f) and geq(f, e)), f"geq not antisymmetric at {e}, {f}")
            for g in grid[::5]:
                if geq(e, f) and geq(f, g):
                    res.check(geq(e, g), f"geq not transitive at {e}, {f}, {g}")


def suite_star_laws(res: SuiteResult, cfg: LabConfig, rng) -> None:
    n = cfg.caps.samples
    for name, k in (("gf4", 1), ("gf9", 1), ("z4", 0)):
        skew = _skew(name, k, k)
        one = skew.one
        for _ in range(n):
            f, g, h = (skew.random_poly(rng, (3, 3)) for _ in range(3))
            res.check((f * g) * h == f * (g * h), lambda: f"{skew.ring}: associativity fails for {f} | {g} | {h}")
            res.check(f * (g + h) == f * g + f * h, lambda: f"{skew.ring}: left distributivity fails for {f} | {g} | {h}")
            res.check((f + g) * h == f * h + g * h, lambda: f"{skew.ring}: right distributivity fails for {f} | {g} | {h}")
            res.check(one * f == f == f * one, lambda: f"{skew.ring}: 1 is not an identity for {f}")
    skew = _skew("gf4", 1, 1)
    a = skew.const(skew.ring.generator)
    res.check(skew.x * a != a * skew.x, "GF(4): x and a commute although rho(a) != a")
    res.outcomes = {"noncommuting_witness": [skew.x.to_text(), a.to_text()]}


def suite_degree_additivity(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("gf4", "gf8", "gf9"):
        skew = _skew(name, 1, 1)
        for _ in range(cfg.caps.samples):
            f, g = _random_nonzero(skew, rng, 4), _random_nonzero(skew, rng, 4)
            prod_ = f * g
            ok = not prod_.is_zero() and prod_.quasi_degree() == f.quasi_degree() + g.quasi_degree()
            res.check(ok, lambda: f"{skew.ring}: deg({f} * {g}) != deg f + deg g")


def suite_no_zero_divisors(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("gf4", "gf8", "gf9"):
        skew = _skew(name, 1, 1)
        for _ in range(cfg.caps.samples):
            f, g = _random_nonzero(skew, rng, 4), _random_nonzero(skew, rng, 4)
            res.check(not (f * g).is_zero(), lambda: f"{skew.ring}: {f} * {g} = 0")
    # every nonzero pair on the 2×2 box over GF(4)
    skew = _skew("gf4", 1, 1)
    ring = skew.ring
    W = np.arange(1, 256)[:, None] // 4 ** np.arange(4)[None, :] % 4
    W = W.reshape(-1, 2, 2)
    tw = twist_table(skew, 2, 2)
    for f in W:
        prod_ = kernels.fold_mul_batch(f[None], W, 3, 3, 1, 1, ring.add_table, ring.mul_table, tw)
        res.check_many(prod_.reshape(prod_.shape[0], -1).any(axis=1), lambda n, f=f: f"GF(4): zero product on the 2x2 box, f={f.tolist()}")


def suite_division(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name, k in (("gf4", 1), ("gf8", 1), ("gf9", 1), ("gf9", 0)):
        skew = _skew(name, k, k)
        for _ in range(cfg.caps.samples):
            f1 = skew.random_poly(rng, (int(rng.integers(1, 6)), int(rng.integers(1, 6))))
            f2 = _random_monic(skew, rng, 3)
            h, g = right_divide(f1, f2)
            d = f2.quasi_degree()
            ok = h * f2 + g == f1 and not any(geq(e, d) for e in g.codes)
            res.check(ok, lambda: f"{skew.ring}: dividing {f1} by {f2} gives h={h}, g={g}")
        try:
            right_divide(skew.x, skew.const(skew.ring.generator) * skew.y)
            res.check(False, f"{skew.ring}: non-monic divisor accepted")
        except UnsupportedDivisorError:
            res.check(True, "")


def suite_psi(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("gf4", "gf8", "gf9"):
        skew = _skew(name, 1, 1)
        res.check(psi(skew.one) == skew.one, f"{skew.ring}: psi(1) != 1")
        for _ in range(cfg.caps.samples):
            f, g = skew.random_poly(rng, (3, 3)), skew.random_poly(rng, (3, 3))
            res.check(psi(f + g) == psi(f) + psi(g), lambda: f"{skew.ring}: psi not additive on {f} | {g}")
            res.check(psi(f * g) == psi(g) * psi(f), lambda: f"{skew.ring}: psi(f*g) != psi(g)*psi(f) for {f} | {g}")
    skew = _skew("gf4", 1, 1)
    W = np.arange(256)[:, None] // 4 ** np.arange(4)[None, :] % 4
    images = {psi(skew.from_dense(w.reshape(2, 2))) for w in W}
    res.check(len(images) == 256, "GF(4): psi is not injective on the 2x2 box")


def suite_mccoy(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("z4", "z6"):
        skew = _skew(name, 0, 0)
        ring = skew.ring
        q = ring.size
        W = (np.arange(q**4)[:, None] // q ** np.arange(4)[None, :] % q).reshape(-1, 2, 2)
        tw = twist_table(skew, 2, 2)
        nonzero_g = W[1:]
        pairs = 0
        for f in W:
            prod_ = kernels.fold_mul_batch(f[None], nonzero_g, 3, 3, 1, 1, ring.add_table, ring.mul_table, tw)
            zero = np.flatnonzero(~prod_.reshape(prod_.shape[0], -1).any(axis=1))
            if zero.size == 0:
                continue
            pairs += zero.size
            fp = skew.from_dense(f)
            gp = skew.from_dense(nonzero_g[zero[0]])
            r = mccoy_annihilator(fp, gp)
            ok = r.code != 0 and (fp * skew.const(r)).is_zero()
            res.check(ok, lambda: f"{ring}: annihilator {r} invalid for f={fp}", weight=int(zero.size))
        res.notes.append(f"{ring}: {pairs} zero-product pairs on the 2x2 box")


def _central_expected(ring: RingSpec, autos: AutomorphismPair, power: int, n: int, lam: Element) -> bool:
    return n % automorphism_order(ring, power) == 0 and autos.is_fixed(lam, "rho", "theta")


def suite_central_binomials(res: SuiteResult, cfg: LabConfig, rng) -> None:
    for name in ("gf4", "gf9"):
        for theta in (1, 0):
            skew = _skew(name, 1, theta)
            ring, autos = skew.ring, skew.autos
            for n in range(1, 5):
                for lam in ring.units():
                    fx = skew.monomial(1, n, 0) - skew.const(lam)
                    fy = skew.monomial(1, 0, n) - skew.const(lam)
                    ex = _central_expected(ring, autos, autos.rho_power, n, lam)
                    ey = _central_expected(ring, autos, autos.theta_power, n, lam)
                    res.check(is_central(fx) == ex, lambda: f"{ring} rho=Frob theta=Frob^{theta}: central({fx}) != {ex}")
                    res.check(is_central(fy) == ey, lambda: f"{ring} rho=Frob theta=Frob^{theta}: central({fy}) != {ey}")


def _reduction_hom_witness(ctx: QuotientContext) -> tuple[SkewPoly, SkewPoly] | None:
    skew = ctx.skew
    consts = [1, ctx.ring.generator.code]
    monos = [
        skew.monomial(ctx.ring.element(c), i, j)
        for c in consts
        for i in range(2 * ctx.l)
        for j in range(2 * ctx.s)
    ]
    for f in monos:
        rf = reduce(ctx, f).lift()
        for g in monos:
            if reduce(ctx, f * g) != reduce(ctx, rf * reduce(ctx, g).lift()):
                return f, g
    return None


def suite_central_binomial_negative(res: SuiteResult, cfg: LabConfig, rng) -> None:
    skew = _skew("gf4", 1, 1)
    ring = skew.ring
    for n in (1, 3):
        for lam in ring.units():
            f = skew.monomial(1, n, 0) - skew.const(lam)
            res.check(not is_central(f), f"GF(4): {f} is central although |<rho>| = 2 does not divide {n}")
    a = ring.generator
    violating = [(3, 2, 1, 1), (1, 2, 1, 1), (2, 3, 1, 1), (2, 2, a, 1), (2, 2, 1, a)]
    witnesses = []
    for l, s, lam1, lam2 in violating:
        ctx = QuotientContext.unchecked(ring, 1, 1, l, s, lam1, lam2)
        w = _reduction_hom_witness(ctx)
        res.check(w is not None, f"{ctx}: reduction is multiplicative although the hypotheses fail")
        if w is not None:
            witnesses.append({"context": str(ctx), "f": w[0].to_text(), "g": w[1].to_text()})
    res.outcomes = {"non_multiplicative_reduction": witnesses}


def suite_fixed_subring_center(res: SuiteResult, cfg: LabConfig, rng) -> None:
    cases = [("gf4", 1, 1, 2, 2), ("gf4", 1, 1, 4, 2), ("gf9", 1, 1, 2, 4), ("gf16", 1, 2, 4, 2), ("gf8", 1, 0, 3, 1)]
    for name, rho, theta, l, s in cases:
        skew = _skew(name, rho, theta)
        fixed = [e.code for e in skew.ring.elements() if skew.autos.is_fixed(e, "rho", "theta")]
        n = max(1, cfg.caps.samples // 20)
        for _ in range(n):
            terms = {(i * l, j * s): int(rng.choice(fixed)) for i in range(3) for j in range(3)}
            f = SkewPoly._raw(skew, terms)
            res.check(is_central(f), lambda: f"{skew.ring} Frob^{rho},Frob^{theta}: {f} is not central")


# -- per-configuration suites --------------------------------------------------


def suite_quotient_arithmetic(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    skew = ctx.skew
    l, s = ctx.shape
    n = max(1, cfg.caps.samples // 4)
    for _ in range(n):
        f = skew.random_poly(rng, (l + 2, s + 2))
        g = skew.random_poly(rng, (l + 2, s + 2))
        rf, rg = reduce(ctx, f), reduce(ctx, g)
        res.check(reduce(ctx, f + g) == rf + rg, lambda: f"reduce not additive on {f} | {g}")
        prod_ = star_mul_mod(rf, rg)
        res.check(reduce(ctx, f * g) == prod_, lambda: f"reduce not multiplicative on {f} | {g}")
        res.check(four_sum_product(rf, rg) == prod_, lambda: f"closed-form product differs for {rf} | {rg}")
        batch = mul_codes_batch(ctx, rf.codes[None], rg.codes[None])[0]
        res.check(np.array_equal(batch, prod_.codes), lambda: f"batched product differs for {rf} | {rg}")
        res.check(
            reduce_stepwise(ctx, f, "x-first") == reduce_stepwise(ctx, f, "y-first") == rf,
            lambda: f"reduction depends on order for {f}",
        )
        r = reduce_diamond(ctx, f)
        quo, rem = right_divide(f, ctx.diamond_modulus)
        res.check(quo * ctx.diamond_modulus + r == f and rem == r, lambda: f"diamond reduction of {f} does not reconstruct")
    res.check(reduce_diamond(ctx, ctx.diamond_modulus).is_zero(), "modulus does not reduce to 0 in the diamond quotient")


def suite_two_sided_ideal(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    skew, ring = ctx.skew, ctx.ring
    ox, oy = ctx.autos.rho_order(ring), ctx.autos.theta_order(ring)
    fixed = [e.code for e in ring.elements() if ctx.autos.is_fixed(e, "rho", "theta")]
    gens = [np.zeros(ctx.shape, dtype=np.int64) for _ in range(3)]
    gens[0][0, 0] = 1
    gens[1][1 % ctx.l, 0] = 1
    gens[2][0, 1 % ctx.s] = 1
    const_words = []
    for c in ring.elements():
        w = np.zeros(ctx.shape, dtype=np.int64)
        w[0, 0] = c.code
        const_words.append(w)
    right = np.stack(gens[1:] + const_words)
    for _ in range(max(1, cfg.caps.samples // 50)):
        terms = {(i * ox, j * oy): int(rng.choice(fixed)) for i in range(3) for j in range(3)}
        g = SkewPoly._raw(skew, terms)
        if not is_central(g):
            res.check(False, f"sampled {g} is not central")
            continue
        L = left_span_matrix(ctx, reduce(ctx, g))
        rows = L.reshape((-1,) + ctx.shape)
        prods = np.concatenate([mul_codes_batch(ctx, rows, r[None]) for r in right])
        if not L.any():
            res.check(not prods.any(), lambda: f"zero ideal of {g} not closed")
            continue
        inside = linalg.in_span(ring, L, prods.reshape(prods.shape[0], -1))
        res.check(bool(inside.all()), lambda: f"left ideal of central {g} not closed under right multiplication")


def suite_monic_central_commute(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    M = ctx.diamond_modulus
    res.check(is_central(M), f"modulus {M} is not central")
    for code in codes:
        res.check(code.g * code.h == code.h * code.g, lambda: f"g*h != h*g for g={code.g}")
    for var, target in (("x", ctx.x_modulus), ("y", ctx.y_modulus)):
        res.check(is_central(target), f"{target} is not central")
        for deg, divs in univariate_right_divisors(ctx, var).items():
            for v in divs:
                d = ctx.skew.from_dense(v.reshape(-1, 1) if var == "x" else v.reshape(1, -1))
                quo, rem = right_divide(target, d)
                res.check(rem.is_zero() and d * quo == quo * d, lambda: f"{d} and its cofactor in {target} do not commute")
    _sweep_notes(res, search)


def suite_shift_submodule(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    W, exhaustive = _words(ctx, rng, cfg.caps.enumeration, cfg.caps.samples)
    if not exhaustive:
        res.notes.append(f"shift identities sampled on {W.shape[0]} arrays")
    xw = np.zeros(ctx.shape, dtype=np.int64)
    xw[1 % ctx.l, 0] = 1
    yw = np.zeros(ctx.shape, dtype=np.int64)
    yw[0, 1 % ctx.s] = 1
    for name, shift, mono in (("column", column_shift_batch, xw), ("row", row_shift_batch, yw)):
        got = shift(ctx, W)
        want = mul_codes_batch(ctx, mono[None], W)
        ok = (got == want).reshape(W.shape[0], -1).all(axis=1)
        res.check_many(ok, lambda n, name=name: f"{name} shift != left multiplication on {_arr(ctx, W[n])}")
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    for code in codes:
        res.check(
            is_2d_skew_constacyclic(ctx, code.gen_matrix.reshape((-1,) + ctx.shape)),
            lambda: f"code of g={code.g} is not shift-closed",
        )
    # random spans against a brute-force closure oracle
    q = ctx.ring.size
    for _ in range(20):
        k = int(rng.integers(1, 3))
        if q ** (k * 1) > cfg.caps.enumeration:
            break
        S = rng.integers(0, q, size=(k,) + ctx.shape)
        span = linalg.enumerate_span(ctx.ring, S.reshape(k, -1), cfg.caps.enumeration)
        members = {w.tobytes() for w in span}
        sw = span.reshape((-1,) + ctx.shape)
        images = np.concatenate([column_shift_batch(ctx, sw), row_shift_batch(ctx, sw)]).reshape(-1, span.shape[1])
        oracle = all(w.tobytes() in members for w in images)
        res.check(is_2d_skew_constacyclic(ctx, S) == oracle, lambda: f"closure test disagrees with enumeration on {S.tolist()}")
    _sweep_notes(res, search)


def suite_generator_basis(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    q = ctx.ring.size
    holds = 0
    for code in codes:
        if code.dimension and q**code.dimension <= cfg.caps.enumeration:
            size = code.codewords(cfg.caps.enumeration).shape[0]
        else:
            size = q**code.dimension
        ok = code.basis_rank == code.kt and code.dimension == code.kt and size == q**code.kt
        holds += ok
        res.check(
            ok,
            lambda: (
                f"g={code.g}: k*t={code.kt}, basis rank={code.basis_rank}, "
                f"|<g>|=q^{code.dimension}"
            ),
        )
    res.outcomes = {"divisors": len(codes), "basis_claim_holds": holds}
    _sweep_notes(res, search)


def suite_minimal_generator(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    q = ctx.ring.size
    none_returned = ties = not_minimal = 0
    for code in codes:
        if q**code.dimension > cfg.caps.enumeration:
            res.skipped += 1
            continue
        words = code.gen_matrix.reshape((-1,) + ctx.shape)
        found = minimal_degree_generator(ctx, words, cfg.caps.enumeration)
        if found.generator is None:
            none_returned += 1
            res.check(code.dimension == 0 or found.candidates > 0, lambda: f"no monic codeword found in code of g={code.g}")
            continue
        ties += found.ties
        if code.g.quasi_degree() not in found.minimal_degrees:
            not_minimal += 1
        L = left_span_matrix(ctx, reduce(ctx, found.generator))
        res.check(linalg.same_span(ctx.ring, L, code.gen_matrix), lambda: f"minimal generator {found.generator} of <{code.g}> spans a different code")
    if res.skipped:
        res.notes.append(f"{res.skipped} codes above the enumeration cap")
    res.outcomes = {
        "no_generator": none_returned,
        "tied_generators": ties,
        "divisor_not_minimal_in_own_code": not_minimal,
    }
    _sweep_notes(res, search)


def suite_gxy_criterion(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    applicable = 0
    for code in codes:
        rep = check_gxy_criterion(code)
        if not rep.applicable:
            continue
        applicable += 1
        res.check(rep.lhs == rep.rhs, lambda: f"g={code.g}: g*xy in C is {rep.lhs}, coefficients rho*theta-fixed is {rep.rhs}")
    res.outcomes = {"applicable": applicable}
    _sweep_notes(res, search)


def suite_dual_constacyclic(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    for code in codes:
        res.check(dual_shift_closure(code), lambda: f"dual of <{code.g}> is not (lambda^-1)-constacyclic")
        res.check(double_dual_equal(code), lambda: f"double dual of <{code.g}> differs")
    _sweep_notes(res, search)


def suite_annihilator_orthogonality(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    if (ctx.lambda1 * ctx.lambda1).code != 1 or (ctx.lambda2 * ctx.lambda2).code != 1:
        res.notes.append("not applicable: needs lambda1^2 = lambda2^2 = 1")
        return
    q, n = ctx.ring.size, ctx.l * ctx.s
    caps = cfg.caps
    A = _all_words(ctx, caps.enumeration)
    if A is not None and q ** (2 * n) <= caps.exhaustive_pairs:
        B = A
        res.notes.append("exhaustive over all pairs")
    else:
        if A is None:
            A = rng.integers(0, q, size=(4096,) + ctx.shape)
        nb = max(16, -(-caps.pair_samples // A.shape[0]))
        B = rng.integers(0, q, size=(nb,) + ctx.shape)
        B[0] = 0
        res.notes.append(f"sampled {A.shape[0] * B.shape[0]} pairs")
    for b in B:
        zero, orth = annihilator_orthogonality_batch(ctx, A, b)
        res.check_many(zero == orth, lambda k, b=b: f"a={_arr(ctx, A[k])}, b={_arr(ctx, b)}: product zero != orthogonal")
    for _ in range(caps.samples):
        b = rng.integers(0, q, size=ctx.shape)
        res.check(
            np.array_equal(a_matrix(ctx, b), a_matrix_via_psi(ctx, b)),
            lambda: f"A-matrix differs from x^(l-1)y^(s-1)*psi(b) for b={_arr(ctx, b)}",
        )


def suite_dual_candidate(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    for code in codes:
        dc = dual_candidate(code)
        if not dc.applicable:
            res.skipped += 1
            continue
        res.check(bool(dc.in_dual), lambda: f"g={code.g}: candidate {dc.candidate} not in the dual")
        res.check(bool(dc.divides), lambda: f"g={code.g}: candidate {dc.candidate} does not right-divide the modulus")
    if res.skipped:
        res.notes.append(f"{res.skipped} codes outside the hypotheses")
    _sweep_notes(res, search)


def suite_membership(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    q = ctx.ring.size
    split = {"in_code_not_annihilated": 0, "annihilated_not_in_code": 0}
    for code in codes:
        F = rng.integers(0, q, size=(cfg.caps.samples,) + ctx.shape)
        # half the samples are codewords, so both outcomes are exercised
        if code.dimension:
            coeffs = rng.integers(0, q, size=(cfg.caps.samples // 2, code.dimension))
            ring = ctx.ring
            words = np.zeros((coeffs.shape[0], code.length), dtype=np.int64)
            for r in range(code.dimension):
                words = ring.add_table[words, ring.mul_table[coeffs[:, r : r + 1], code.gen_matrix[r][None, :]]]
            F[: coeffs.shape[0]] = words.reshape((-1,) + ctx.shape)
        inside, killed = code.contains_batch(F), membership_via_h_batch(code, F)
        ok = inside == killed
        split["in_code_not_annihilated"] += int((inside & ~killed).sum())
        split["annihilated_not_in_code"] += int((killed & ~inside).sum())
        res.check_many(ok, lambda k, code=code, F=F: f"g={code.g}: f={_arr(ctx, F[k])} in C is {code.contains(F[k])}, f*h = 0 in the diamond quotient is {not code.contains(F[k])}")
    res.outcomes = split
    _sweep_notes(res, search)


def suite_open_problem(res: SuiteResult, cfg: LabConfig, rng, ctx: QuotientContext) -> None:
    search, codes = _sweep(ctx, cfg.caps.search_budget)
    rows = []
    for code in codes:
        probe = open_problem_probe(code)
        res.instances += 1
        rows.append(
            {
                "q": ctx.ring.size,
                "rho": ctx.autos.rho_power,
                "theta": ctx.autos.theta_power,
                "l": ctx.l,
                "s": ctx.s,
                "lambda1": str(ctx.lambda1),
                "lambda2": str(ctx.lambda2),
                "g": code.g.to_text(),
                "applicable": probe["applicable"],
                "generates": probe.get("generates"),
                "dual_dim": probe["dual_dim"],
                "candidate_span_dim": probe.get("candidate_span_dim"),
            }
        )
    res.outcomes = rows
    _sweep_notes(res, search)


# -- registry ------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    kind: str
    claim: str
    fn: Callable
    per_config: bool = False
    extra_contexts: tuple = ()


def _gxy_extra() -> tuple:
    ring = RingSpec.from_name("gf16")
    return tuple(QuotientContext.create(ring, 1, 0, 4, s, 1, 1) for s in (1, 2))


_SPECS = [
    SuiteSpec("ring-axioms", "theorem", "coefficient rings are commutative rings; Frobenius powers are commuting automorphisms with the expected fixed fields", suite_ring_axioms),
    SuiteSpec("degree-orders", "theorem", ">= is a partial order, => a total order, and >= implies =>", suite_degree_orders),
    SuiteSpec("star-laws", "theorem", "star product is associative, distributive and unital", suite_star_laws),
    SuiteSpec("degree-additivity", "theorem", "over a field deg(f*g) = deg f + deg g", suite_degree_additivity),
    SuiteSpec("no-zero-divisors", "theorem", "over a field f*g = 0 forces f = 0 or g = 0", suite_no_zero_divisors),
    SuiteSpec("division", "theorem", "right division by a monic divisor reconstructs f1 with a fully reduced remainder", suite_division),
    SuiteSpec("psi-anti-isomorphism", "theorem", "psi is additive, reverses products and is injective", suite_psi),
    SuiteSpec("mccoy", "theorem", "a zero divisor with rho,theta-fixed coefficients is killed by a nonzero constant", suite_mccoy),
    SuiteSpec("central-binomials", "theorem", "x^l - lam is central iff |<rho>| divides l and lam is rho,theta-fixed (same for y)", suite_central_binomials),
    SuiteSpec("central-binomial-negative", "theorem", "without the hypotheses the binomials are not central and reduction is not multiplicative", suite_central_binomial_negative),
    SuiteSpec("fixed-subring-center", "theorem", "fixed coefficients on x^l, y^s powers give central elements", suite_fixed_subring_center),
    SuiteSpec("quotient-arithmetic", "theorem", "reduction is an order-independent ring map; closed-form and batched products agree", suite_quotient_arithmetic, True),
    SuiteSpec("two-sided-ideal", "theorem", "the left ideal of a central element is closed under right multiplication", suite_two_sided_ideal, True),
    SuiteSpec("monic-central-commute", "theorem", "factors of a monic central product commute", suite_monic_central_commute, True),
    SuiteSpec("shift-submodule", "theorem", "skew shifts are left multiplication by x, y; codes are shift-closed", suite_shift_submodule, True),
    SuiteSpec("generator-basis", "theorem", "for a monic right divisor g of degree (l-k, s-t), the k*t words x^i y^j * g form a basis of <g>", suite_generator_basis, True),
    SuiteSpec("minimal-generator", "theorem", "a minimal-degree monic codeword generates the code", suite_minimal_generator, True),
    SuiteSpec("gxy-criterion", "theorem", "for staircase generators, g*xy in C iff all coefficients are rho*theta-fixed", suite_gxy_criterion, True, _gxy_extra()),
    SuiteSpec("dual-constacyclic", "theorem", "the dual is (lam1^-1, lam2^-1)-constacyclic and the double dual is the code", suite_dual_constacyclic, True),
    SuiteSpec("annihilator-orthogonality", "theorem", "a*b = 0 in the quotient iff a is orthogonal to every shift of A(b)", suite_annihilator_orthogonality, True),
    SuiteSpec("dual-candidate", "theorem", "x^k y^t * psi(h) lies in the dual and right-divides the modulus", suite_dual_candidate, True),
    SuiteSpec("membership-via-cofactor", "theorem", "f in C iff f*h = 0 in the diamond quotient", suite_membership, True),
    SuiteSpec("open-problem", "observation", "does x^k y^t * psi(h) generate the dual?", suite_open_problem, True),
]
SUITES: dict[str, SuiteSpec] = {s.name: s for s in _SPECS}


def _tasks(config: LabConfig, names) -> list[tuple[str, QuotientContext | None]]:
    tasks = []
    for name in names:
        spec = SUITES[name]
        if spec.per_config:
            for ctx in config.contexts + spec.extra_contexts:
                tasks.append((name, ctx))
        else:
            tasks.append((name, None))
    return tasks


def _run_task(config: LabConfig, name: str, ctx: QuotientContext | None) -> SuiteResult:
    spec = SUITES[name]
    res = SuiteResult(name, spec.kind, spec.claim, str(ctx) if ctx is not None else None)
    rng = _rng(config.seed, name, str(ctx) if ctx is not None else "")
    start = time.perf_counter()
    try:
        if ctx is None:
            spec.fn(res, config, rng)
        else:
            spec.fn(res, config, rng, ctx)
    except CapExceededError as exc:
        res.skipped += 1
        res.notes.append(f"stopped: {exc}")
    res.seconds = time.perf_counter() - start
    return res


def _run_packed(args) -> SuiteResult:
    return _run_task(*args)


def run_suite(name: str, config: LabConfig | None = None) -> VerificationReport:
    """Run one suite on every configuration it applies to."""
    config = config or LabConfig()
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; known: {list(SUITES)}")
    results = [_run_task(config, n, ctx) for n, ctx in _tasks(config, [name])]
    return VerificationReport(config.seed, replace(config, suites=(name,)).to_json(), results)


def run_lab(config: LabConfig | None = None, jobs: int = 1) -> VerificationReport:
    """Run every selected suite; with ``jobs > 1`` tasks run in worker
    processes and results are merged in registry order."""
    config = config or LabConfig()
    tasks = _tasks(config, config.selected())
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_packed, [(config, n, c) for n, c in tasks]))
    else:
        results = [_run_task(config, n, c) for n, c in tasks]
    return VerificationReport(config.seed, config.to_json(), results)


def open_problem_rows(report: VerificationReport) -> list[dict]:
    rows = []
    for r in report.results:
        if r.suite == "open-problem" and r.outcomes:
            rows.extend(r.outcomes)
    return rows
