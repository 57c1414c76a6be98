"""Singular values: a numeric Jacobi oracle and exact closed forms.

The numeric path never calls LAPACK. It runs a cyclic one-sided Jacobi
iteration, which implicitly diagonalizes ``M.T @ M`` through plane rotations
of column pairs. Working on ``M`` rather than on the explicit Gram matrix
keeps exact-zero singular values near ``eps * sigma_1`` instead of
``sqrt(eps) * sigma_1``, which is what lets a 1e-9 rank tolerance work.
"""
from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .construction import M3, FriersonSpec
from .errors import InvalidLevelError, VerificationError
from .matrix import IntSquareMatrix

DEFAULT_RANK_TOL = 1e-9


def rank_tolerance() -> float:
    """Relative rank cut-off; ``CMS_TOL`` in the environment overrides it."""
    raw = os.environ.get("CMS_TOL")
    return float(raw) if raw else DEFAULT_RANK_TOL


@dataclass(frozen=True)
class SpectralProfile:
    sigmas: tuple[float, ...]
    sigma_sq_exact: tuple[int, ...] | None
    rank: int
    L: int
    R: int | float

    @property
    def exact(self) -> bool:
        return self.sigma_sq_exact is not None

    @property
    def sigma_total(self) -> float:
        return math.fsum(self.sigmas)

    def nonzero(self) -> tuple[float, ...]:
        return self.sigmas[: self.rank]


def _rank(sigmas: Sequence[float], tol: float | None = None) -> int:
    tol = rank_tolerance() if tol is None else tol
    if len(sigmas) == 0 or sigmas[0] <= 0:
        return 0
    return sum(1 for s in sigmas if s > tol * sigmas[0])


@lru_cache(maxsize=None)
def _round_robin(m: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Circle-method schedule: m-1 rounds of m/2 disjoint column pairs."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        half = m // 2
        left = np.array(players[:half])
        right = np.array(players[::-1][:half])
        rounds.append((left, right))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def jacobi_singular_values(a: np.ndarray, tol: float | None = None, max_sweeps: int = 100) -> np.ndarray:
    """Singular values of a real square matrix, descending."""
    u = np.array(a, dtype=np.float64, copy=True)
    n = u.shape[1]
    if n % 2:
        u = np.hstack([u, np.zeros((u.shape[0], 1))])
    m = u.shape[1]
    eps = np.finfo(np.float64).eps
    tol = m * eps if tol is None else tol
    scale = np.linalg.norm(u)
    if scale == 0.0:
        return np.zeros(n)
    tiny = (eps * scale) ** 2
    rounds = _round_robin(m) if m > 1 else ()

    for _ in range(max_sweeps):
        rotated = False
        for i, j in rounds:
            ui = u[:, i]
            uj = u[:, j]
            alpha = np.einsum("ij,ij->j", ui, ui)
            beta = np.einsum("ij,ij->j", uj, uj)
            gamma = np.einsum("ij,ij->j", ui, uj)
            active = (np.abs(gamma) > tol * np.sqrt(alpha * beta)) & (alpha > tiny) & (beta > tiny)
            if not active.any():
                continue
            rotated = True
            g = np.where(active, gamma, 1.0)
            zeta = (beta - alpha) / (2.0 * g)
            t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = 1.0 / np.hypot(1.0, t)
            s = c * t
            c = np.where(active, c, 1.0)
            s = np.where(active, s, 0.0)
            u[:, i] = c * ui - s * uj
            u[:, j] = s * ui + c * uj
        if not rotated:
            break
    else:
        warnings.warn(f"Jacobi iteration did not converge in {max_sweeps} sweeps", RuntimeWarning)

    sig = np.sort(np.linalg.norm(u, axis=0))[::-1]
    return sig[:n]


def fourth_power_indices(sigma_sq: Sequence[int]) -> tuple[int, int]:
    """Return ``(L, R)``: the sum of fourth powers and that sum minus the top one."""
    sq = [int(x) for x in sigma_sq]
    L = sum(x * x for x in sq)
    return L, L - max(sq) ** 2


def _reconstruct_sigma_sq(sig: np.ndarray, trace: int, L: int) -> tuple[int, ...] | None:
    """Round numeric sigma^2 to integers, accepted only if exact invariants agree."""
    sq = sig.astype(np.float64) ** 2
    tol = max(1e-6, 1e-10 * float(sq[0]))
    cand = [int(round(x)) for x in sq]
    if any(abs(x - c) > tol for x, c in zip(sq, cand)):
        return None
    if sum(cand) != trace or sum(c * c for c in cand) != L:
        return None
    return tuple(cand)


def singular_values_numeric(mat: IntSquareMatrix) -> SpectralProfile:
    sig = jacobi_singular_values(mat.to_float())
    gram = mat.gram()
    L = sum(int(x) * int(x) for x in gram.flat)
    trace = sum(int(gram[i, i]) for i in range(mat.n))
    sq = _reconstruct_sigma_sq(sig, trace, L)
    if sq is not None:
        R: int | float = L - sq[0] ** 2
    else:
        R = math.fsum(float(s) ** 4 for s in sig[1:])
    return SpectralProfile(
        sigmas=tuple(float(s) for s in sig),
        sigma_sq_exact=sq,
        rank=_rank(sig),
        L=L,
        R=R,
    )


def _exact_profile(sigma_sq: list[int]) -> SpectralProfile:
    sigma_sq = sorted(sigma_sq, reverse=True)
    sigmas = tuple(math.sqrt(x) for x in sigma_sq)
    L, R = fourth_power_indices(sigma_sq)
    return SpectralProfile(sigmas, tuple(sigma_sq), _rank(sigmas), L, R)


def closed_form_sigma_sq(spec: FriersonSpec) -> list[int]:
    l, n = spec.level, spec.order
    lead = n * (spec.k + sum(spec.members()))
    factor = 3 ** (2 * l - 1)
    sq = [lead * lead]
    for a, b in spec.couples:
        sq += [factor * (a + b) ** 2, factor * (a - b) ** 2]
    sq += [0] * (n - len(sq))
    return sorted(sq, reverse=True)


def closed_form_svs(spec: FriersonSpec) -> SpectralProfile:
    """Exact spectrum of ``construct_frierson(spec)``.

    The linesum singular value is ``n * (k + sum of couple members)``; each
    couple (a, b) adds the pair ``3^(2l-1) * (a +- b)^2`` to the squared
    spectrum and everything else is zero.
    """
    return _exact_profile(closed_form_sigma_sq(spec))


def closed_form_sigma_sq_mppd(level: int) -> list[int]:
    if level < 1:
        raise InvalidLevelError(f"level must be positive, got {level}")
    n = 4**level
    lead = n * (n * n + 1) // 2
    tail = [5 * 4 ** (6 * level - 3 - 2 * i) for i in range(2 * level)]
    return [lead * lead, *tail] + [0] * (n - 2 * level - 1)


def closed_form_svs_mppd(level: int) -> SpectralProfile:
    """Spectrum of MPPD4-alpha compounded to order 4**level."""
    return _exact_profile(closed_form_sigma_sq_mppd(level))


# --- order-3 characteristic polynomial checks ---------------------------------

def _polymul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return tuple(out)


def _polyval(p: Sequence[int], x: int) -> int:
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def charpoly_3x3(a) -> tuple[int, int, int, int]:
    """Coefficients of ``det(xI - A)``, highest power first, exact."""
    a = [[int(a[i][j]) for j in range(3)] for i in range(3)]
    trace = a[0][0] + a[1][1] + a[2][2]
    minors = (
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
        + a[0][0] * a[2][2] - a[0][2] * a[2][0]
        + a[1][1] * a[2][2] - a[1][2] * a[2][1]
    )
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return (1, -trace, minors, -det)


@dataclass(frozen=True)
class CharacteristicCheck:
    eigen_poly: tuple[int, ...]
    eigenvalues: tuple[float, ...]
    gram: tuple[tuple[int, ...], ...]
    gram_poly: tuple[int, ...]
    gram_roots: tuple[int, ...]


def m3_characteristic_checks(mat: IntSquareMatrix = M3) -> CharacteristicCheck:
    """Confirm x^3-15x^2-24x+360 = (x-15)(x^2-24) and the Gram cubic's roots 225, 48, 12.

    The Gram matrix is formed exactly from ``mat``; its cubic is
    X^3 - 285X^2 + 14076X - 129600. Any other 3x3 input raises.
    """
    rows = mat.tolist()
    ev = charpoly_3x3(rows)
    expected_ev = _polymul((1, -15), (1, 0, -24))
    if ev != expected_ev:
        raise VerificationError(f"eigen polynomial {ev} != (x-15)(x^2-24) = {expected_ev}")

    gram = mat.gram()
    gp = charpoly_3x3(gram.tolist())
    roots = (225, 48, 12)
    expected_gp = _polymul(_polymul((1, -roots[0]), (1, -roots[1])), (1, -roots[2]))
    if gp != expected_gp:
        raise VerificationError(f"Gram polynomial {gp} does not factor as (X-225)(X-48)(X-12)")
    if any(_polyval(gp, r) for r in roots):
        raise VerificationError("Gram polynomial roots failed exact evaluation")

    r = 2 * math.sqrt(6)
    return CharacteristicCheck(
        eigen_poly=ev,
        eigenvalues=(15.0, r, -r),
        gram=tuple(tuple(int(x) for x in row) for row in gram),
        gram_poly=gp,
        gram_roots=roots,
    )
