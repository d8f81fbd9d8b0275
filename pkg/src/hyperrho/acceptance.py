"""Acceptance criteria as runnable checks.

Each ``criterion_*`` function returns a :class:`CriterionResult`. The CLI
``verify`` command and ``tests/test_acceptance.py`` both drive them.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .alpha_normal import ALPHA_NORMAL, certificate_from_eigenvector, classify
from .constructions import (C1, C2, C3, CyclePendantJoint, CycleStar, LooseCycle,
                            LoosePath, build, delete_edges)
from .core import Hypergraph, cyclomatic_number, is_connected
from .extremal import (balanced_parameters, family_sweep, is_balanced,
                       min_rho_bicyclic)
from .mobius import (MobiusParams, alpha_star, closed_form, f0, f0_star, iterate_direct,
                     symmetric_y0)
from .spectral import spectral_radius
from .transforms import (ReleaseSpec, degree_two_split, internal_path_joints,
                         is_loose_cycle, release_vertices, split_vertex)

MARGIN = 1e-7


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(number, name):
    def deco(fn):
        def run(*args, **kwargs):
            t = time.perf_counter()
            ok, detail = fn(*args, **kwargs)
            return CriterionResult(number, name, bool(ok), detail, time.perf_counter() - t)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


@_timed(1, "worked example m=14, k=3")
def criterion_worked_example():
    s = min_rho_bicyclic(14, 3)
    ok = (abs(s.theta0 - 0.35581) <= 5e-5 and abs(s.alpha - 0.22084) <= 5e-5
          and abs(s.rho - 1.654396) <= 5e-6)
    return ok, f"theta0={s.theta0:.12g} alpha={s.alpha:.12g} rho={s.rho:.12g}"


@_timed(2, "loose cycle rho = 4^(1/k)")
def criterion_loose_cycles(ns=range(2, 11), ks=(3, 4, 5)):
    worst = 0.0
    for k in ks:
        for n in ns:
            r = spectral_radius(build(LooseCycle(n), k)).rho
            worst = max(worst, abs(r - 4 ** (1 / k)))
    return worst <= 1e-6, f"max error {worst:.2e}"


@_timed(3, "closed form vs power iteration")
def criterion_closed_form(ms=range(6, 15), ks=(3, 4)):
    worst = 0.0
    for k in ks:
        for m in ms:
            p, q = balanced_parameters(m)
            r = spectral_radius(build(C1(p, p, q), k)).rho
            worst = max(worst, abs(min_rho_bicyclic(m, k).rho - r))
    return worst <= 2e-6, f"max |closed - iterated| = {worst:.2e}"


@_timed(4, "rho(C1(p,p,q)) = rho(C2(p,p,q))")
def criterion_c1_equals_c2(pairs=((1, 1), (2, 1), (2, 2), (3, 2), (4, 4)), ks=(3, 4)):
    worst = 0.0
    for k in ks:
        for p, q in pairs:
            a = spectral_radius(build(C1(p, p, q), k)).rho
            b = spectral_radius(build(C2(p, p, q), k)).rho
            worst = max(worst, abs(a - b))
    return worst <= 2e-6, f"max difference {worst:.2e}"


@_timed(5, "sweep minimality")
def criterion_sweeps(ms=range(6, 12), ks=(3, 4)):
    bad = []
    for k in ks:
        for m in ms:
            fams = ("C1", "C2", "C3") if k >= 4 else ("C1", "C2")
            for fam in fams:
                best = family_sweep(m, k, fam)[0]
                if not (best.converged and is_balanced(best.spec)):
                    bad.append(f"m={m} k={k} argmin {best.spec}")
            if k >= 4:
                p = m // 2
                q = m - 1 - p
                if q >= 2:
                    h = spectral_radius(build(C2(p - 1, q - 1, 1), k)).rho
                    g = spectral_radius(build(C3(p, q), k)).rho
                    if not h < g:
                        bad.append(f"m={m} k={k} rho(C2({p-1},{q-1},1))={h:.10g} >= rho(C3({p},{q}))={g:.10g}")
    return not bad, "; ".join(bad) or "all argmins balanced, C2 < C3 pairs hold"


def certificate_corpus() -> list[Hypergraph]:
    """Connected test hypergraphs spanning every family."""
    specs = [(LoosePath(1), 3), (LoosePath(3), 3), (LoosePath(4), 5),
             (LooseCycle(2), 3), (LooseCycle(3), 3), (LooseCycle(5), 4), (LooseCycle(7), 5),
             (CycleStar(2), 3), (CycleStar(4), 4), (CycleStar(6), 3),
             (CyclePendantJoint(3), 3), (CyclePendantJoint(5), 4),
             (C1(1, 1, 1), 3), (C1(2, 3, 1), 3), (C1(4, 4, 4), 3), (C1(2, 2, 3), 4),
             (C2(1, 1, 1), 3), (C2(3, 1, 2), 3), (C2(2, 2, 2), 4), (C2(1, 1, 4), 5),
             (C3(1, 1), 4), (C3(2, 2), 4), (C3(3, 1), 5), (C3(4, 4), 4)]
    return [build(s, k) for s, k in specs]


@_timed(6, "certificate round trip")
def criterion_certificates(tol=1e-8):
    bad = []
    corpus = certificate_corpus()
    for H in corpus:
        r = spectral_radius(H)
        rep = classify(H, certificate_from_eigenvector(H, r), r.rho ** (-H.k), tol)
        if rep.classification != ALPHA_NORMAL or not rep.consistent:
            bad.append(f"{H}: {rep.classification}, consistent={rep.consistent}")
    return not bad, "; ".join(bad) or f"{len(corpus)} hypergraphs alpha-normal and consistent"


@_timed(7, "Mobius analytic suite")
def criterion_mobius(seed=20240501):
    rng = random.Random(seed)
    violations = []
    # closed form vs direct iteration, 200 cases with phi(x0) < 0
    for _ in range(200):
        alpha = rng.uniform(0.01, 0.2499)
        P = MobiusParams.from_alpha(alpha)
        x0 = rng.uniform(P.r2, P.r1)
        n = rng.randint(0, 50)
        a, b = closed_form(alpha, x0, n), iterate_direct(alpha, x0, n)[-1]
        if abs(a - b) > 1e-10 * max(1.0, abs(b)):
            violations.append(f"closed form alpha={alpha} x0={x0} n={n}")
    # symmetry y_{l+s} + y_{-s} = 1
    for alpha in (0.05, 0.15, 0.22, 0.245):
        for l in range(0, 8):
            y0 = symmetric_y0(alpha, l)
            fwd = iterate_direct(alpha, y0, l + 20)
            back = iterate_direct(alpha, y0, -20)
            for s in range(-20, 21):
                ys = fwd[l + s] if l + s >= 0 else back[-(l + s)]
                y_s = back[s] if s >= 0 else fwd[-s]
                if abs(ys + y_s - 1) > 1e-10:
                    violations.append(f"symmetry alpha={alpha} l={l} s={s}")
    # convexity of F0 on (0, inf) and log-concavity of F0* on [-1, inf)
    h = 1e-2
    for alpha in (0.05, 0.15, 0.22, 0.245):
        for i in range(1, 2000):
            x = i * 0.01
            if f0(alpha, x + h) - 2 * f0(alpha, x) + f0(alpha, x - h) < -1e-15:
                violations.append(f"convexity alpha={alpha} x={x}")
            if f0(alpha, x + h) >= f0(alpha, x):
                violations.append(f"F0 not decreasing alpha={alpha} x={x}")
        for i in range(0, 2000):
            x = -1 + i * 0.01
            if x - h < -1:
                continue
            d2 = (math.log(f0_star(alpha, x + h)) - 2 * math.log(f0_star(alpha, x))
                  + math.log(f0_star(alpha, x - h)))
            if d2 > 1e-12:
                violations.append(f"log-concavity alpha={alpha} x={x}")
    # the two product inequalities on 500 sampled quadruples each
    for _ in range(500):
        alpha = rng.uniform(0.01, 0.2499)
        a = rng.uniform(0, 10)
        b = a + rng.uniform(0.05, 5)
        c = b + rng.uniform(0, 5)
        d = b + c - a
        F = lambda x: f0_star(alpha, x)
        if not F(a) * F(d) < F(b) * F(c):
            violations.append(f"spread product alpha={alpha} {a},{b},{c},{d}")
        a2 = rng.uniform(0.01, 10)
        b2 = a2 + rng.uniform(0.05, 10)
        if not F(b2) * F(-a2) < F(0) * F(b2 - a2):
            violations.append(f"shift product alpha={alpha} a={a2} b={b2}")
    # alpha/(1-alpha)^2 > r2 exactly when alpha < alpha*
    s = alpha_star()
    for alpha in [s + d for d in (-0.2, -0.05, -1e-3, -1e-5, 1e-5, 1e-3, 4e-3)]:
        P = MobiusParams.from_alpha(alpha)
        if (alpha / (1 - alpha) ** 2 > P.r2) != (alpha < s):
            violations.append(f"threshold alpha={alpha}")
    return not violations, "; ".join(violations[:5]) or "zero violations"


def _release_instances():
    """(host, released) pairs: first edge with s >= 2 whose release stays connected."""
    hosts = [build(C3(1, 1), 4), build(C3(2, 3), 4), build(C1(1, 1, 1), 3),
             build(C2(2, 1, 1), 3), build(CycleStar(3), 3), build(CyclePendantJoint(4), 4),
             build(C1(2, 2, 2), 4), build(C2(1, 1, 1), 5), build(LooseCycle(4), 3),
             build(C3(1, 2), 5)]
    out = []
    for H in hosts:
        for j, e in enumerate(H.edges):
            shared = [v for v in e if H.degrees[v] >= 2]
            if len(shared) < 2:
                continue
            H2 = release_vertices(H, ReleaseSpec(j, (shared[0],))).hypergraph
            if is_connected(H2):
                out.append((H, H2))
                break
    return out


@_timed(8, "operation monotonicity")
def criterion_operations():
    bad = []
    rel = _release_instances()
    for H, H2 in rel:
        a, b = spectral_radius(H).rho, spectral_radius(H2).rho
        if not b < a - MARGIN:
            bad.append(f"release {H}: {b} !< {a}")
    splits = []
    for spec, k in [(C1(1, 1, 1), 3), (C1(2, 1, 3), 3), (C2(1, 1, 1), 3), (C2(2, 3, 1), 4),
                    (C3(1, 1), 4), (C3(2, 1), 5), (C1(2, 2, 2), 4), (C2(1, 2, 2), 5),
                    (C1(3, 1, 2), 3), (C3(3, 2), 4)]:
        H = build(spec, k)
        w = internal_path_joints(H)[0]
        splits.append((spec, k, H, w))
    for spec, k, H, w in splits:
        H2 = split_vertex(H, degree_two_split(H, w)).hypergraph
        a, b = spectral_radius(H).rho, spectral_radius(H2).rho
        if not b < a - MARGIN:
            bad.append(f"split {spec} k={k} at {w}: {b} !< {a}")
    s = alpha_star()
    cyclic = [build(sp, k) for sp, k in [
        (CycleStar(2), 3), (CycleStar(5), 4), (CyclePendantJoint(3), 3), (C1(1, 1, 1), 3),
        (C1(3, 3, 3), 4), (C2(2, 2, 2), 3), (C2(1, 5, 2), 5), (C3(1, 1), 4), (C3(5, 5), 4),
        (CycleStar(8), 5)]]
    for H in cyclic:
        if cyclomatic_number(H) == 0 or is_loose_cycle(H):
            bad.append(f"{H} is not a cyclic non-loose-cycle instance")
        a = spectral_radius(H).rho ** (-H.k)
        if not a < s - MARGIN:
            bad.append(f"alpha({H})={a} !< alpha*")
    for k in (3, 4):
        for n in range(2, 9):
            ap = spectral_radius(build(CyclePendantJoint(n), k)).rho ** (-k)
            ast = spectral_radius(build(CycleStar(n), k)).rho ** (-k)
            if not (ap < ast - MARGIN and ast < s - MARGIN):
                bad.append(f"chain n={n} k={k}: {ap} {ast} {s}")
    return not bad, "; ".join(bad[:5]) or (
        f"{len(rel)} releases, {len(splits)} splits, {len(cyclic)} alpha* checks, 14 chains")


def subgraph_pairs() -> list[tuple[Hypergraph, Hypergraph]]:
    """(proper connected subgraph, connected host) pairs; ids of the
    subgraph are those of the host restricted and compacted."""
    hosts = [build(s, k) for s, k in [
        (C1(1, 1, 1), 3), (C1(2, 3, 2), 3), (C2(2, 2, 2), 4), (C3(2, 1), 4), (CycleStar(4), 3),
        (CyclePendantJoint(5), 4), (LoosePath(5), 3), (C2(1, 3, 4), 3), (LooseCycle(6), 5),
        (C3(3, 3), 5)]]
    pairs = []
    for H in hosts:
        for j in range(H.m):
            sub = delete_edges(H, [j])
            if is_connected(sub):
                pairs.append((sub, H))
                break
    return pairs


@_timed(9, "proper subgraph monotonicity")
def criterion_subgraphs():
    bad = []
    pairs = subgraph_pairs()
    for sub, H in pairs:
        a, b = spectral_radius(sub).rho, spectral_radius(H).rho
        if not a < b - MARGIN:
            bad.append(f"{sub} in {H}: {a} !< {b}")
    return not bad and len(pairs) >= 10, "; ".join(bad) or f"{len(pairs)} pairs strictly increase"


ALL = (criterion_worked_example, criterion_loose_cycles, criterion_closed_form,
       criterion_c1_equals_c2, criterion_sweeps, criterion_certificates, criterion_mobius,
       criterion_operations, criterion_subgraphs)

QUICK = (criterion_worked_example, criterion_loose_cycles, criterion_c1_equals_c2,
         criterion_certificates, criterion_mobius)


def run_suite(name: str = "paper") -> list[CriterionResult]:
    suite = {"paper": ALL, "quick": QUICK}[name]
    return [c() for c in suite]
