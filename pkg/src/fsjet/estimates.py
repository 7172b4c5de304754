"""Sphere-supremum estimation for the Fekete-Szego mapping and the
inequality checkers for bounded one-dimensional-type mappings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .fekete import fs_mapping_many
from .jets import MappingJet
from .sampling import sample_sphere
from .transforms import OneDimJet


@dataclass
class SupNormConfig:
    starts: int = 32
    steps: int = 200
    seed: int = 0
    fd_step: float = 1e-6
    init_rate: float = 0.1


@dataclass
class BoundReport:
    """Comparison of an estimated quantity against a theoretical bound."""

    bound_name: str
    params: dict
    estimate: float
    bound: float
    witness: list
    trials: int
    seed: int
    tol: float = 1e-9
    margin: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        self.margin = self.bound - self.estimate
        self.passed = self.margin >= -self.tol

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "params": self.params,
            "estimate": self.estimate,
            "bound": self.bound,
            "margin": self.margin,
            "witness": self.witness,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.passed,
        }


def _realify(e: np.ndarray) -> np.ndarray:
    return np.concatenate([e.real, e.imag])


def _complexify(v: np.ndarray) -> np.ndarray:
    n = v.size // 2
    return v[:n] + 1j * v[n:]


def fs_norm_at(f: MappingJet, es: np.ndarray, lam: complex, mu: complex) -> np.ndarray:
    """||Psi_e|| for a batch of unit directions."""
    return np.linalg.norm(fs_mapping_many(f, es, lam, mu), axis=1)


def sup_norm_fs(
    f: MappingJet,
    lam: complex,
    mu: complex,
    config: SupNormConfig | None = None,
) -> tuple[float, np.ndarray]:
    """sup over the unit sphere of ||Psi_e(f, lam, mu)||, with a witness.

    Multistart projected gradient ascent on the realified sphere; the
    ascent direction is the central finite-difference gradient of
    ||Psi_e||^2 projected to the tangent space.  Deterministic per seed.
    """
    if config is None:
        config = SupNormConfig()
    n = f.dim
    rng = np.random.default_rng(config.seed)

    def value(v: np.ndarray) -> float:
        e = _complexify(v)
        return float(fs_norm_at(f, e[None, :], lam, mu)[0]) ** 2

    def gradient(v: np.ndarray) -> np.ndarray:
        h = config.fd_step
        g = np.zeros_like(v)
        for i in range(v.size):
            dv = np.zeros_like(v)
            dv[i] = h
            g[i] = (value(v + dv) - value(v - dv)) / (2 * h)
        return g

    starts = [np.eye(n, dtype=complex)[i] for i in range(n)]
    starts += list(sample_sphere(rng, max(0, config.starts - n), n))
    best_val, best_e = -1.0, starts[0]
    for e0 in starts[: config.starts]:
        v = _realify(np.asarray(e0, dtype=complex))
        v /= np.linalg.norm(v)
        rate = config.init_rate
        fv = value(v)
        for _ in range(config.steps):
            g = gradient(v)
            g_tan = g - np.dot(g, v) * v
            if np.linalg.norm(g_tan) < 1e-14:
                break
            cand = v + rate * g_tan
            cand /= np.linalg.norm(cand)
            fc = value(cand)
            if fc > fv:
                v, fv = cand, fc
                rate = min(rate * 1.5, 1.0)
            else:
                rate *= 0.5
                if rate < 1e-12:
                    break
        if fv > best_val:
            best_val, best_e = fv, _complexify(v)
    return float(np.sqrt(max(best_val, 0.0))), best_e


def bounded_onedim_bound(M: float, lam: complex) -> float:
    """The right-hand side of the bounded one-dimensional-type estimate."""
    return (M * M - 1.0) / M * max(1.0, abs(((M * M - 1.0) * lam + 1.0) / M))


def estimate_sup_modulus(
    s: Callable[[np.ndarray], complex],
    dim: int,
    samples: int = 10_000,
    seed: int = 0,
    radius: float = 0.999,
) -> float:
    """max |s(x)| over boundary-adjacent samples; a falsifiable estimate."""
    rng = np.random.default_rng(seed)
    xs = radius * sample_sphere(rng, samples, dim)
    return max(abs(s(x)) for x in xs)


def check_bounded_onedim_bound(
    f: OneDimJet,
    s: Callable[[np.ndarray], complex],
    lam: complex,
    directions: int = 64,
    samples: int = 10_000,
    seed: int = 0,
) -> BoundReport:
    """Check ||Psi_e(f)|| <= (M^2-1)/M max{1, |((M^2-1) lam + 1)/M|}.

    M is the sampled supremum of ||f(x)|| = |s(x)| ||x|| near the boundary.
    The mapping must genuinely be bounded with M > 1 for the hypothesis to
    apply; M <= 1 is rejected.
    """
    M = estimate_sup_modulus(s, f.dim, samples=samples, seed=seed)
    if M <= 1.0:
        raise ValueError(f"sampled bound M={M:.6g} <= 1; the estimate needs M > 1")
    rng = np.random.default_rng(seed + 1)
    es = sample_sphere(rng, directions, f.dim)
    # one-dimensional type: ||Psi_e|| = |p_2(e) - lam p_1(e)^2|
    p1 = np.array([f.scalar_part(1).eval_scalar(e) for e in es])
    p2 = np.array([f.scalar_part(2).eval_scalar(e) for e in es])
    vals = np.abs(p2 - lam * p1**2)
    i = int(np.argmax(vals))
    bound = bounded_onedim_bound(M, lam)
    return BoundReport(
        bound_name="bounded-onedim",
        params={"lambda": complex(lam), "M": M},
        estimate=float(vals[i]),
        bound=bound,
        witness=es[i].tolist(),
        trials=directions,
        seed=seed,
        tol=1e-6,
    )
