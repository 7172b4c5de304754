"""One-dimensional-type mappings: detection, the n-th root transform, and
sampled injectivity checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from . import polyops
from .jets import MappingJet
from .reporting import Report
from .sampling import sample_ball
from .tensors import HomPoly, ScalarHomPoly


@dataclass(frozen=True)
class OneDimJet:
    """Jet of f(x) = s(x) x with s(x) = 1 + sum_{k=1}^{K-1} p_k(x).

    ``scalar_polys[k]`` is the degree-k part of s, so the induced mapping
    jet has P_{k+1}(x) = p_k(x) x.
    """

    dim: int
    order: int
    scalar_polys: Mapping[int, ScalarHomPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, p in self.scalar_polys.items():
            if not 1 <= k <= self.order - 1:
                raise ValueError(f"scalar degree {k} outside 1..{self.order - 1}")
            if p.degree != k or p.domain_dim != self.dim or p.codomain_dim != 1:
                raise ValueError(f"scalar poly at degree {k} has wrong shape")
            if p.coeffs:
                clean[k] = p
        object.__setattr__(self, "scalar_polys", clean)

    def scalar_part(self, k: int) -> ScalarHomPoly:
        if k in self.scalar_polys:
            return self.scalar_polys[k]
        return ScalarHomPoly(k, self.dim, {})

    def s_eval(self, x) -> complex:
        """The truncated scalar factor 1 + sum p_k(x)."""
        val = 1.0 + 0.0j
        for p in self.scalar_polys.values():
            val += p.eval_scalar(x)
        return val

    def eval(self, x) -> np.ndarray:
        return self.s_eval(x) * np.asarray(x, dtype=complex)

    def to_mapping_jet(self) -> MappingJet:
        polys = {}
        for k, p in self.scalar_polys.items():
            monos: dict[tuple, np.ndarray] = {}
            for exps, c in p.scalar_poly().items():
                for i in range(self.dim):
                    e = list(exps)
                    e[i] += 1
                    key = tuple(e)
                    vec = monos.setdefault(key, np.zeros(self.dim, dtype=complex))
                    vec[i] += c
            polys[k + 1] = HomPoly.from_monomials(k + 1, self.dim, self.dim, monos)
        return MappingJet(self.dim, self.order, polys)


def _probe_directions(dim: int, extra: int = 16, seed: int = 2024) -> np.ndarray:
    """2n canonical directions plus seeded random unit vectors."""
    rng = np.random.default_rng(seed)
    probes = []
    for i in range(dim):
        v = np.zeros(dim, dtype=complex)
        v[i] = 1.0
        probes.append(v.copy())
        v[i] = 1.0j
        probes.append(v.copy())
    for _ in range(extra):
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        probes.append(v / np.linalg.norm(v))
    return np.array(probes)


def detect_onedim(f: MappingJet, tol: float = 1e-9) -> OneDimJet | None:
    """Factor each P_k as p_{k-1}(x) x if possible; None if not.

    For every stored degree the scalar coefficient vector is solved by
    least squares on a probe set, then the factorization residual is
    verified on the same probes.
    """
    probes = _probe_directions(f.dim)
    scalar_polys: dict[int, ScalarHomPoly] = {}
    for k, P in sorted(f.polys.items()):
        exps_list = list(polyops.exponents_of_degree(f.dim, k - 1))
        # unknowns: monomial coefficients of p_{k-1}
        rows = []
        rhs = []
        for x in probes:
            monom_vals = np.array(
                [np.prod(x**np.array(e)) for e in exps_list], dtype=complex
            )
            Pk = P.eval(x)
            for i in range(f.dim):
                rows.append(monom_vals * x[i])
                rhs.append(Pk[i])
        A = np.array(rows)
        b = np.array(rhs)
        coef, *_ = np.linalg.lstsq(A, b, rcond=None)
        residual = np.max(np.abs(A @ coef - b))
        if residual > tol * (1.0 + P.max_coeff()):
            return None
        monos = {e: c for e, c in zip(exps_list, coef) if c != 0}
        scalar_polys[k - 1] = ScalarHomPoly.from_scalar_monomials(k - 1, f.dim, monos)
    return OneDimJet(f.dim, f.order, scalar_polys)


def _series_root(coeffs: list[complex], n: int, terms: int) -> list[complex]:
    """(1 + sum_{k>=1} a_k u^k)^(1/n) as a truncated series, principal branch."""
    w = [0.0 + 0.0j] + [complex(c) for c in coeffs[1:]]
    w += [0.0j] * (terms - len(w))
    out = [0.0j] * terms
    out[0] = 1.0 + 0.0j
    wpow = [0.0j] * terms
    wpow[0] = 1.0 + 0.0j  # w^0
    binom = 1.0
    for m in range(1, terms):
        binom *= (1.0 / n - (m - 1)) / m
        new = [0.0j] * terms
        for a in range(terms):
            if wpow[a] == 0:
                continue
            for b in range(1, terms - a):
                new[a + b] += wpow[a] * w[b]
        wpow = new
        for j in range(terms):
            out[j] += binom * wpow[j]
    return out


def root_transform(
    f: OneDimJet, n: int, e, order: int | None = None
) -> MappingJet:
    """n-th root transform g(x) = s(<x,e>^n e)^(1/n) x as a mapping jet.

    Output order defaults to 2n+1.  Only degrees congruent to 1 mod n are
    nonzero, by construction.
    """
    if n < 2:
        raise ValueError(f"root order must be >= 2, got {n}")
    from .fekete import normalize_direction

    e = normalize_direction(e)
    if e.shape != (f.dim,):
        raise ValueError("direction dimension does not match the jet")
    if order is None:
        order = 2 * n + 1
    if order < 2 * n + 1:
        raise ValueError(f"output order must be >= {2 * n + 1}")
    # s(<x,e>^n e) = 1 + sum_k p_k(e) u^k with u = <x,e>^n
    max_m = (order - 1) // n
    a = [1.0 + 0.0j] + [
        f.scalar_part(k).eval_scalar(e) if k <= f.order - 1 else 0.0j
        for k in range(1, max_m + 1)
    ]
    b = _series_root(a, n, max_m + 1)
    # linear form L(x) = <x, e>
    L: polyops.ScalarPoly = {}
    for i in range(f.dim):
        c = np.conj(e[i])
        if c != 0:
            L[tuple(int(j == i) for j in range(f.dim))] = complex(c)
    polys: dict[int, HomPoly] = {}
    for m in range(1, max_m + 1):
        if b[m] == 0:
            continue
        Lnm = polyops.ppow(L, n * m, order, f.dim)
        monos: dict[tuple, np.ndarray] = {}
        for exps, c in Lnm.items():
            for i in range(f.dim):
                key = tuple(p + int(j == i) for j, p in enumerate(exps))
                vec = monos.setdefault(key, np.zeros(f.dim, dtype=complex))
                vec[i] += b[m] * c
        polys[n * m + 1] = HomPoly.from_monomials(n * m + 1, f.dim, f.dim, monos)
    return MappingJet(f.dim, order, polys)


def check_injectivity_sampled(
    f: Callable[[np.ndarray], np.ndarray],
    dim: int,
    samples: int = 10_000,
    seed: int = 0,
    radius: float = 0.95,
    collision_tol: float = 1e-9,
    separation: float = 1e-3,
) -> Report:
    """Falsification test for injectivity on the ball of the given radius.

    Draws sample pairs and reports any pair mapped (numerically) to the
    same point while being well separated.  PASS means no collision was
    found, not a proof of univalence.
    """
    rng = np.random.default_rng(seed)
    x1 = sample_ball(rng, samples, dim, radius)
    x2 = sample_ball(rng, samples, dim, radius)
    witnesses = []
    worst = np.inf
    for a, b in zip(x1, x2):
        if np.linalg.norm(a - b) <= separation:
            continue
        gap = float(np.linalg.norm(f(a) - f(b)))
        worst = min(worst, gap)
        if gap < collision_tol:
            witnesses.append({"x1": a.tolist(), "x2": b.tolist(), "gap": gap})
    return Report(
        suite="injectivity-sampled",
        trials=samples,
        seed=seed,
        tolerance=collision_tol,
        max_residual=0.0 if not witnesses else collision_tol,
        passed=not witnesses,
        witnesses=witnesses,
    )


def koebe_onedim(dim: int = 1, order: int = 3) -> OneDimJet:
    """Jet of the Koebe-type map s(x) = 1/(1 - <x, e1>)^2 truncated: the
    scalar series has p_k(x) = (k+1) x_1^k."""
    polys = {}
    for k in range(1, order):
        exps = tuple([k] + [0] * (dim - 1))
        polys[k] = ScalarHomPoly.from_scalar_monomials(k, dim, {exps: float(k + 1)})
    return OneDimJet(dim, order, polys)
