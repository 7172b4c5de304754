"""Symmetric multilinear tensors over C^n, stored sparsely.

A degree-k vector-valued homogeneous polynomial P(x) is kept as the
symmetric tensor T with T[e_{i1},...,e_{ik}] indexed by the sorted
multi-index (i1,...,ik), entries being m-vectors.  P(x) = T[x,...,x].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import polyops
from .polyops import Exponent, ScalarPoly

MultiIndex = tuple[int, ...]

DEFAULT_ATOL = 1e-10
DEFAULT_RTOL = 1e-10


def multi_index_to_exponents(idx: MultiIndex, nvars: int) -> Exponent:
    exps = [0] * nvars
    for i in idx:
        exps[i - 1] += 1
    return tuple(exps)


def exponents_to_multi_index(exps: Exponent) -> MultiIndex:
    idx: list[int] = []
    for i, p in enumerate(exps):
        idx.extend([i + 1] * p)
    return tuple(idx)


def multinomial(idx: MultiIndex) -> int:
    """Number of ordered arrangements of the multi-index."""
    counts: dict[int, int] = {}
    for i in idx:
        counts[i] = counts.get(i, 0) + 1
    out = math.factorial(len(idx))
    for c in counts.values():
        out //= math.factorial(c)
    return out


@dataclass(frozen=True)
class HomPoly:
    """Degree-k homogeneous polynomial C^n -> C^m as a symmetric tensor."""

    degree: int
    domain_dim: int
    codomain_dim: int
    coeffs: Mapping[MultiIndex, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        clean: dict[MultiIndex, np.ndarray] = {}
        for idx, vec in self.coeffs.items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.degree:
                raise ValueError(f"multi-index {idx} has length != degree {self.degree}")
            if idx != tuple(sorted(idx)):
                raise ValueError(f"multi-index {idx} is not sorted")
            if any(i < 1 or i > self.domain_dim for i in idx):
                raise ValueError(f"multi-index {idx} out of range 1..{self.domain_dim}")
            arr = np.asarray(vec, dtype=complex)
            if arr.shape != (self.codomain_dim,):
                raise ValueError(
                    f"coefficient at {idx} has shape {arr.shape}, "
                    f"expected ({self.codomain_dim},)"
                )
            if np.any(arr != 0):
                arr = arr.copy()
                arr.flags.writeable = False
                clean[idx] = arr
        object.__setattr__(self, "coeffs", clean)

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int, domain_dim: int, codomain_dim: int) -> "HomPoly":
        return cls(degree, domain_dim, codomain_dim, {})

    @classmethod
    def from_monomials(
        cls,
        degree: int,
        domain_dim: int,
        codomain_dim: int,
        monomials: Mapping[Exponent, Iterable[complex]],
    ) -> "HomPoly":
        """Build from monomial coefficients: P(x) = sum_a c_a x^a."""
        coeffs = {}
        for exps, vec in monomials.items():
            if sum(exps) != degree:
                raise ValueError(f"monomial {exps} is not of degree {degree}")
            idx = exponents_to_multi_index(exps)
            coeffs[idx] = np.asarray(list(vec), dtype=complex) / multinomial(idx)
        return cls(degree, domain_dim, codomain_dim, coeffs)

    def to_monomials(self) -> dict[Exponent, np.ndarray]:
        return {
            multi_index_to_exponents(idx, self.domain_dim): multinomial(idx) * vec
            for idx, vec in self.coeffs.items()
        }

    def components(self) -> list[ScalarPoly]:
        """Monomial form, one scalar polynomial per output component."""
        out: list[ScalarPoly] = [{} for _ in range(self.codomain_dim)]
        for exps, vec in self.to_monomials().items():
            for c, comp in zip(vec, out):
                if c != 0:
                    comp[exps] = complex(c)
        return out

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if (self.degree, self.domain_dim, self.codomain_dim) != (
            other.degree,
            other.domain_dim,
            other.codomain_dim,
        ):
            raise ValueError("cannot add tensors of different shape")
        coeffs = {idx: np.array(v) for idx, v in self.coeffs.items()}
        for idx, v in other.coeffs.items():
            coeffs[idx] = coeffs.get(idx, 0) + v
        return HomPoly(self.degree, self.domain_dim, self.codomain_dim, coeffs)

    def scale(self, c: complex) -> "HomPoly":
        return HomPoly(
            self.degree,
            self.domain_dim,
            self.codomain_dim,
            {idx: c * v for idx, v in self.coeffs.items()},
        )

    def is_zero(self, atol: float = DEFAULT_ATOL) -> bool:
        return all(np.max(np.abs(v)) <= atol for v in self.coeffs.values())

    def max_coeff(self) -> float:
        if not self.coeffs:
            return 0.0
        return max(float(np.max(np.abs(v))) for v in self.coeffs.values())

    def allclose(
        self, other: "HomPoly", atol: float = DEFAULT_ATOL, rtol: float = DEFAULT_RTOL
    ) -> bool:
        diff = self + other.scale(-1)
        scale = max(self.max_coeff(), other.max_coeff())
        return diff.max_coeff() <= atol + rtol * scale

    # -- evaluation -------------------------------------------------------

    def eval(self, x) -> np.ndarray:
        """T[x,...,x]; homogeneous of degree k."""
        x = _check_vector(x, self.domain_dim)
        out = np.zeros(self.codomain_dim, dtype=complex)
        for idx, vec in self.coeffs.items():
            term = multinomial(idx)
            for i in idx:
                term *= x[i - 1]
            out += term * vec
        return out

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized eval over rows of an (N, n) array."""
        xs = np.asarray(xs, dtype=complex)
        out = np.zeros((xs.shape[0], self.codomain_dim), dtype=complex)
        for idx, vec in self.coeffs.items():
            term = np.full(xs.shape[0], multinomial(idx), dtype=complex)
            for i in idx:
                term = term * xs[:, i - 1]
            out += term[:, None] * vec[None, :]
        return out

    def multilinear_eval(self, args) -> np.ndarray:
        """T[x_1,...,x_k], linear in each slot, symmetric in the slots.

        Arguments are sorted into a canonical order first (legitimate by
        symmetry), which makes permutation invariance bit-exact.
        """
        if len(args) != self.degree:
            raise ValueError(f"expected {self.degree} arguments, got {len(args)}")
        vecs = [_check_vector(a, self.domain_dim) for a in args]
        vecs.sort(key=lambda v: v.tobytes())
        out = np.zeros(self.codomain_dim, dtype=complex)
        for idx, coeff in self.coeffs.items():
            acc = 0.0 + 0.0j
            for perm in polyops.multiset_permutations(idx):
                term = 1.0 + 0.0j
                for slot, i in enumerate(perm):
                    term *= vecs[slot][i - 1]
                acc += term
            out += acc * coeff
        return out

    def dense(self) -> np.ndarray:
        """Full symmetric tensor, shape (n,)*k + (m,)."""
        n, k = self.domain_dim, self.degree
        out = np.zeros((n,) * k + (self.codomain_dim,), dtype=complex)
        for idx, vec in self.coeffs.items():
            for perm in polyops.multiset_permutations(idx):
                out[tuple(i - 1 for i in perm)] = vec
        return out


class ScalarHomPoly(HomPoly):
    """A HomPoly with one-dimensional codomain, evaluated as a scalar."""

    def __init__(self, degree: int, domain_dim: int, coeffs: Mapping[MultiIndex, Iterable[complex]]):
        super().__init__(degree, domain_dim, 1, dict(coeffs))

    @classmethod
    def from_scalar_monomials(
        cls, degree: int, domain_dim: int, monomials: Mapping[Exponent, complex]
    ) -> "ScalarHomPoly":
        base = HomPoly.from_monomials(
            degree, domain_dim, 1, {e: [c] for e, c in monomials.items()}
        )
        return cls(degree, domain_dim, base.coeffs)

    def eval_scalar(self, x) -> complex:
        return complex(self.eval(x)[0])

    def scalar_poly(self) -> ScalarPoly:
        return self.components()[0]


def polarization_check(P: HomPoly, x1, x2) -> float:
    """Residual of the bilinear polarization identity for a degree-2 tensor.

    Returns ||T[x1,x2] - (T[(x1+x2)^2] - T[(x1-x2)^2]) / 4||.
    """
    if P.degree != 2:
        raise ValueError(f"polarization identity needs degree 2, got {P.degree}")
    x1 = _check_vector(x1, P.domain_dim)
    x2 = _check_vector(x2, P.domain_dim)
    lhs = P.multilinear_eval([x1, x2])
    rhs = 0.25 * (P.eval(x1 + x2) - P.eval(x1 - x2))
    return float(np.linalg.norm(lhs - rhs))


def _check_vector(x, dim: int) -> np.ndarray:
    arr = np.asarray(x, dtype=complex)
    if arr.shape != (dim,):
        raise ValueError(f"expected a vector of dimension {dim}, got shape {arr.shape}")
    return arr
