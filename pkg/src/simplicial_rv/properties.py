"""Executable identities and Lipschitz bounds, grouped into suites.

A property is a function ``rng -> None | str``: ``None`` when the sampled
instance satisfies it, otherwise a description of the counterexample.
Operations are looked up through their modules at call time so that a
monkeypatched (mutated) operation is what gets exercised.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import geodesic as geo
from . import homotopy as hom
from . import intervals as iv
from . import fibration as lw
from . import montecarlo as mc
from . import stepfn as sf
from .counterexample import counterexample
from .generators import (rand_complex, rand_interval_set, rand_keyframed_path, rand_nonnull_set,
                         rand_phi_instance, rand_pmf, rand_pmfpath, rand_rat, rand_scalar_path,
                         rand_stepfn)
from .intervals import IntervalSet
from .rational import ONE, ZERO
from .simplicial import in_L, pmf_in_realization

Check = Optional[str]

VERTS12 = list(range(12))
U_GRID_21 = [Fraction(k, 20) for k in range(21)]
U_GRID_101 = [Fraction(k, 100) for k in range(101)]
MC_SAMPLES = 100_000


@dataclass(frozen=True)
class Property:
    name: str
    suite: str
    check: Callable[[random.Random], Check]
    weight: int = 1  # instances = max(1, trials // weight)

    def instances(self, trials: int) -> int:
        return max(1, trials // self.weight)


REGISTRY: list[Property] = []


def prop(suite: str, weight: int = 1):
    def deco(fn):
        REGISTRY.append(Property(fn.__name__, suite, fn, weight))
        return fn
    return deco


# -- interval core and step functions ---------------------------------------

@prop("interval")
def measure_additive(rng):
    A, B = rand_interval_set(rng), rand_interval_set(rng)
    B = B - A
    if (A | B).measure != A.measure + B.measure:
        return f"A={A!r} B={B!r}"


@prop("interval")
def interval_cut_bound(rng):
    a, b = sorted((rand_rat(rng), rand_rat(rng)))
    c, d = sorted((rand_rat(rng), rand_rat(rng)))
    lhs = (IntervalSet([(a, b)]) - IntervalSet([(c, d)])).measure
    if lhs > abs(a - c) + abs(b - d):
        return f"a={a} b={b} c={c} d={d}"


@prop("interval")
def union_lipschitz(rng):
    X1, X2, Y1, Y2 = (rand_interval_set(rng) for _ in range(4))
    if iv.set_distance(X1 | Y1, X2 | Y2) > iv.set_distance(X1, X2) + iv.set_distance(Y1, Y2):
        return f"X1={X1!r} X2={X2!r} Y1={Y1!r} Y2={Y2!r}"


@prop("interval")
def set_metric_axioms(rng):
    A, B, C = (rand_interval_set(rng) for _ in range(3))
    dAB, dBA = iv.set_distance(A, B), iv.set_distance(B, A)
    if dAB != dBA:
        return f"asymmetric on A={A!r} B={B!r}"
    if iv.set_distance(A, C) > dAB + iv.set_distance(B, C):
        return f"triangle fails on A={A!r} B={B!r} C={C!r}"
    if (dAB == 0) != (A == B):
        return f"identity fails on A={A!r} B={B!r}"


@prop("interval")
def complement_isometry(rng):
    A, B = rand_interval_set(rng), rand_interval_set(rng)
    if iv.set_distance(~A, ~B) != iv.set_distance(A, B) or ~~A != A:
        return f"A={A!r} B={B!r}"


@prop("interval")
def stepfn_metric_axioms(rng):
    V = VERTS12[:rng.randint(1, 5)]
    f, g, h = (rand_stepfn(rng, V) for _ in range(3))
    d = sf.distance
    if d(f, g) != d(g, f) or d(f, h) > d(f, g) + d(g, h) or (d(f, g) == 0) != (f == g) or d(f, g) > 1:
        return f"f={f!r} g={g!r} h={h!r}"


@prop("interval")
def outside_support_lipschitz(rng):
    V = VERTS12[:rng.randint(1, 6)]
    f, g = rand_stepfn(rng, V), rand_stepfn(rng, V)
    F = {v for v in V if rng.random() < 0.5}
    if iv.set_distance(sf.outside_support(f, F), sf.outside_support(g, F)) > sf.distance(f, g):
        return f"f={f!r} g={g!r} F={F!r}"


@prop("interval")
def pushforward_lipschitz(rng):
    V = VERTS12[:rng.randint(1, 6)]
    f, g = rand_stepfn(rng, V), rand_stepfn(rng, V)
    phi = {v: rng.randint(0, 3) for v in V}
    if sf.distance(sf.pushforward(phi, f), sf.pushforward(phi, g)) > sf.distance(f, g):
        return f"f={f!r} g={g!r} phi={phi!r}"
    if sf.pushforward(phi, f).essential_image() != {phi[v] for v in f.essential_image()}:
        return f"image of pushforward wrong for f={f!r} phi={phi!r}"


@prop("interval")
def mix_time_bound(rng):
    V = VERTS12[:rng.randint(1, 5)]
    f, g = rand_stepfn(rng, V), rand_stepfn(rng, V)
    u, v = rand_rat(rng), rand_rat(rng)
    hu, hv = sf.mix(f, g, u), sf.mix(f, g, v)
    if sf.distance(hu, hv) > abs(u - v):
        return f"f={f!r} g={g!r} u={u} v={v}"
    if not hu.essential_image() <= f.essential_image() | g.essential_image():
        return f"support escapes for f={f!r} g={g!r} u={u}"


@prop("interval")
def truncate_cauchy(rng):
    V = VERTS12[:rng.randint(1, 8)]
    f = rand_stepfn(rng, V, max_cuts=10)
    enum = list(f.essential_image())
    rng.shuffle(enum)
    prev = None
    for n in range(len(enum)):
        t = sf.truncate(f, enum, n)
        d = sf.distance(t, f)
        tail = sum((f.level_set(x).measure for x in enum[n + 1:]), ZERO)
        if d > tail or (prev is not None and d > prev):
            return f"f={f!r} enumeration={enum!r} n={n}"
        prev = d
    if prev != 0:
        return f"truncation never reaches f={f!r}"


# -- geodesic ---------------------------------------------------------------

@prop("geodesic")
def shrink_measure_law(rng):
    E, u = rand_interval_set(rng), rand_rat(rng)
    if geo.shrink(E, u).measure != (1 - u) * E.measure:
        return f"E={E!r} u={u}"


@prop("geodesic")
def shrink_nesting(rng):
    E = rand_interval_set(rng)
    u, v = sorted((rand_rat(rng), rand_rat(rng)))
    if not geo.shrink(E, v) <= geo.shrink(E, u) or not geo.shrink(E, u) <= E:
        return f"E={E!r} u={u} v={v}"


@prop("geodesic")
def shrink_stability(rng):
    E, F = rand_interval_set(rng), rand_interval_set(rng)
    if rng.random() < 0.5:
        F = E ^ rand_interval_set(rng, 1, 48)  # nearby pairs exercise the bound harder
    u, v = rand_rat(rng), rand_rat(rng)
    if iv.set_distance(geo.shrink(E, u), geo.shrink(F, v)) > 4 * iv.set_distance(E, F) + abs(v - u):
        return f"E={E!r} F={F!r} u={u} v={v}"


@prop("geodesic")
def resize_measure_law(rng):
    A, a = rand_interval_set(rng), rand_rat(rng)
    R = geo.resize(A, a)
    m = A.measure
    if R.measure != a:
        return f"measure A={A!r} a={a}"
    if (a >= m and not A <= R) or (a <= m and not R <= A):
        return f"nesting A={A!r} a={a}"
    if 0 < a < m and R != geo.shrink(A, 1 - a / m):
        return f"consistency A={A!r} a={a}"


# -- path operator ----------------------------------------------------------

@prop("phi", weight=10)
def phi_contract(rng):
    a, E, A = rand_phi_instance(rng)
    if hom.phi(a, E, A, ZERO) != A:
        return f"start a={a!r} E={E!r} A={A!r}"
    for u in U_GRID_21:
        Eu = E(u)
        lo, hi = hom.phi_minus(a, E, A, u), hom.phi_plus(a, E, A, u)
        P = hom.phi(a, E, A, u)
        if P != lo | hi or not lo.isdisjoint(hi):
            return f"decomposition u={u} a={a!r} E={E!r} A={A!r}"
        if not P <= Eu or not lo <= A or not hi.isdisjoint(A):
            return f"containment u={u} a={a!r} E={E!r} A={A!r}"
        if P.measure != a(u) * Eu.measure:
            return f"mass u={u} a={a!r} E={E!r} A={A!r}"
        alpha = hom.overlap(E, A, u)
        if lo.measure != min(a(u) * Eu.measure, alpha) or hi.measure != max(ZERO, a(u) * Eu.measure - alpha):
            return f"split masses u={u} a={a!r} E={E!r} A={A!r}"


@prop("phi")
def overlap_lipschitz(rng):
    E, F = rand_keyframed_path(rng), rand_keyframed_path(rng)
    A, B = rand_interval_set(rng), rand_interval_set(rng)
    u = rand_rat(rng)
    gap = abs(hom.overlap(E, A, u) - hom.overlap(F, B, u))
    if gap > iv.set_distance(E(u), F(u)) + iv.set_distance(A, B):
        return f"E={E!r} F={F!r} A={A!r} B={B!r} u={u}"


# -- law map, section, projection -------------------------------------------

@prop("law")
def law_two_lipschitz(rng):
    V = VERTS12[:rng.randint(1, 12)]
    f, g = rand_stepfn(rng, V, max_cuts=8), rand_stepfn(rng, V, max_cuts=8)
    if lw.d1(lw.law(f), lw.law(g)) > 2 * sf.distance(f, g):
        return f"f={f!r} g={g!r}"


@prop("law", weight=10)
def section_is_section(rng):
    alpha = rand_pmf(rng, list(range(40)), 20)
    order = list(range(40))
    rng.shuffle(order)
    s = lw.section(alpha, order)
    if lw.law(s) != alpha or s.essential_image() != alpha.support():
        return f"alpha={alpha!r} order={order!r}"


@prop("law")
def section_lipschitz(rng):
    r = rng.randint(1, 8)
    V = list(range(r))
    alpha, beta = rand_pmf(rng, V, r), rand_pmf(rng, V, r)
    if sf.distance(lw.section(alpha, V), lw.section(beta, V)) > 2 * r * lw.d1(alpha, beta):
        return f"alpha={alpha!r} beta={beta!r} r={r}"


@prop("law")
def membership_routes_agree(rng):
    V = VERTS12[:6]
    K = rand_complex(rng, V)
    f = rand_stepfn(rng, V, max_cuts=3)
    if in_L(K, f) != pmf_in_realization(K, lw.law(f)):
        return f"K={K!r} f={f!r}"
    phi = {v: rng.randint(0, 3) for v in V}
    K2 = type(K)([[phi[v] for v in face] for face in K.maximal_faces])
    if in_L(K, f) and not in_L(K2, sf.pushforward(phi, f)):
        return f"functoriality K={K!r} f={f!r} phi={phi!r}"


@prop("law", weight=100)
def projection_contract(rng):
    V = VERTS12[:rng.randint(1, 12)]
    C = [rand_stepfn(rng, V, max_cuts=8) for _ in range(rng.randint(1, 50))]
    C0 = [c for c in C if rng.random() < 0.2]
    p = lw.project_finite(C, C0)
    images = set()
    for c in C:
        pc = p(c)
        if sum((s.measure for _, s in pc.items()), ZERO) != 1:
            return f"not a partition: c={c!r}"
        if not pc.essential_image() <= c.essential_image():
            return f"image grows: c={c!r} p(c)={pc!r}"
        images |= pc.essential_image()
    for c in C0:
        if p(c) != c:
            return f"moved a fixed member c={c!r}"
    if not images <= p.F:
        return f"images {images!r} escape F={p.F!r}"


@prop("law", weight=200)
def counterexample_identities(rng):
    n = rng.randint(2, 50)
    rep = counterexample(n)
    # for n = 2 the block where f = 0 is empty, so 0 drops out of the support
    expected_support = n * n + 2 if n > 2 else n * n + 1
    ok = (rep.distance_to_f0 == Fraction(2, n) and rep.support_size == expected_support
          and rep.mass_at_top == Fraction(1, n) and Fraction(1, n) > Fraction(1, n * n + 2)
          and rep.violates_U)
    if not ok:
        return f"n={n} report={rep!r}"


# -- lifting ----------------------------------------------------------------

@prop("lift", weight=50)
def lift_is_lift(rng):
    V = list(range(rng.randint(1, 6)))
    h0 = rand_stepfn(rng, V)
    H = rand_pmfpath(rng, h0, V)
    L = lw.LiftedPath(H, h0)
    if L(ZERO) != h0:
        return f"start H={H.to_json()} h0={h0!r}"
    for u in U_GRID_101:
        sets = L.level_sets(u)
        if iv.union_all(sets) != IntervalSet.full() or sum((s.measure for s in sets), ZERO) != 1:
            return f"partition u={u} H={H.to_json()} h0={h0!r}"
        if lw.law(L(u)) != H(u):
            return f"law u={u} H={H.to_json()} h0={h0!r}"
    return None


@prop("lift", weight=50)
def lift_respects_complex(rng):
    V = list(range(8))
    K = rand_complex(rng, V, faces=3, max_dim=4)
    face = sorted(rng.choice(sorted(K.maximal_faces, key=sorted)))
    h0 = rand_stepfn(rng, face)
    H = rand_pmfpath(rng, h0, face)
    L = lw.LiftedPath(H, h0)
    for u in U_GRID_21:
        if not in_L(K, L(u)):
            return f"left L(Ω,K) at u={u}"
    return None


@prop("lift", weight=50)
def binary_lift(rng):
    A0 = rand_interval_set(rng)
    target = rand_scalar_path(rng, start=A0.measure, inner=3)
    if lw.lift_binary(target, A0, ZERO) != A0:
        return f"start A0={A0!r}"
    for u in U_GRID_101:
        R = lw.lift_binary(target, A0, u)
        if R.measure != target(u):
            return f"u={u} A0={A0!r} target={target!r}"
    return None


@prop("lift", weight=100)
def monte_carlo_cross_check(rng):
    """Re-estimate every exact measure of a composite scenario by sampling."""
    seed = rng.getrandbits(32)
    pts = mc.sample_points(MC_SAMPLES, seed=seed)
    tol = mc.tolerance(MC_SAMPLES)
    checks: list[tuple[str, Fraction, float]] = []

    E, F = rand_nonnull_set(rng), rand_interval_set(rng)
    u = rand_rat(rng)
    for name, S in (("E", E), ("shrink", geo.shrink(E, u)), ("resize", geo.resize(F, u)),
                    ("E^F", E ^ F), ("~E", ~E)):
        checks.append((name, S.measure, mc.mc_measure(S, pts)))

    a, Ep, A = rand_phi_instance(rng)
    w = rand_rat(rng)
    checks.append(("phi", hom.phi(a, Ep, A, w).measure, mc.mc_measure(hom.phi(a, Ep, A, w), pts)))

    V = list(range(rng.randint(2, 6)))
    h0 = rand_stepfn(rng, V)
    H = rand_pmfpath(rng, h0, V)
    lifted = lw.lift(H, h0, w)
    est = mc.mc_masses(lifted, pts)
    for v, m in lw.law(lifted).items():
        checks.append((f"lift[{v}]", m, est.get(v, 0.0)))
    g = rand_stepfn(rng, V)
    checks.append(("distance", sf.distance(lifted, g), mc.mc_distance(lifted, g, pts)))

    for name, exact, estimate in checks:
        if abs(float(exact) - estimate) > tol:
            return f"{name}: exact {exact} vs estimate {estimate:.5f} (seed {seed})"
    return None


SUITES = ("interval", "geodesic", "phi", "law", "lift")


def suite_properties(suite: str) -> list[Property]:
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise KeyError(suite)
    return [p for p in REGISTRY if p.suite == suite]
