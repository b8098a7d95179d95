# -*- coding: utf-8 -*-
# @Time    : 2024/5/13 09:40
# @Author  : YQ Tsui
# @File    : distribution.py
# @Purpose : Work incentive of a wealth distribution and its evolutionary optimization

"""
Persons are ranked poorest first. Person k's incentive is the relative gain from overtaking the
next richer person, i_k = (w_{k+1} - w_k) / w_k, and the richest person has none. In the continuum
limit the total incentive is ln(w(1) / w(0)), see :func:`continuous_incentive_total`.
"""

import enum
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.optimize import brentq

from ..core.errors import DomainError, InvalidDistribution, UnsortedDistribution

logger = logging.getLogger(__name__)

NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class WealthDistribution:
    """
    :ivar np.ndarray weights: Share of total wealth per person, summing to 1.
    :ivar float w0: Minimum share anyone may hold.
    :ivar bool sorted: Weights are non-decreasing (richest last).
    """

    weights: np.ndarray
    w0: float
    sorted: bool = True

    @classmethod
    def from_weights(cls, weights: Iterable[float], w0: float, sort: bool = True) -> "WealthDistribution":
        w = np.asarray(list(weights), dtype=float)
        if sort:
            w = np.sort(w)
        dist = cls(weights=w, w0=float(w0), sorted=bool(sort or (np.diff(w) >= 0).all()))
        dist.validate()
        return dist

    @property
    def n(self) -> int:
        return int(self.weights.size)

    def validate(self):
        if self.n == 0:
            raise InvalidDistribution("a distribution needs at least one person")
        if abs(self.weights.sum() - 1.0) > NORM_TOL:
            raise InvalidDistribution(f"weights sum to {self.weights.sum()!r}, not 1")
        if (self.weights < self.w0 - NORM_TOL).any():
            raise InvalidDistribution(f"weights below the floor {self.w0}")
        if self.sorted and (np.diff(self.weights) < 0).any():
            raise InvalidDistribution("distribution flagged sorted but weights decrease")


@dataclass(frozen=True)
class ExponentialFamilyParams:
    """
    w(x) = w0 + (wmax - w0) (e^{bx} - 1) / (e^b - 1) on x in [0, 1]; wmax follows from normalization.
    """

    w0: float
    b: float
    wmax: float

    def curve(self, x) -> np.ndarray:
        return self.w0 + (self.wmax - self.w0) * _shape(np.asarray(x, dtype=float), self.b)


@dataclass
class IncentiveResult:
    per_person: np.ndarray
    total: float


@dataclass
class GAResult:
    """
    :ivar WealthDistribution final: Best distribution found.
    :ivar np.ndarray history: Objective after each step, starting with the initial value.
    :ivar int accepted: Number of accepted mutations.
    :ivar int seed: Seed the run used.
    """

    final: WealthDistribution
    history: np.ndarray
    accepted: int
    seed: int = 0


class Equilibrium(enum.Enum):
    UNIFORM = "Uniform"
    DELTA = "Delta"
    SLAVE_OFFICIAL = "SlaveOfficial"
    BANKER_WHEEDLER = "BankerWheedler"
    OTHER = "Other"


def _shape(x: np.ndarray, b: float) -> np.ndarray:
    # (e^{bx} - 1) / (e^b - 1), tending to x as b -> 0
    if abs(b) < 1e-12:
        return x
    return np.expm1(b * x) / math.expm1(b)


def _total(w: np.ndarray) -> float:
    return float(np.sum(np.diff(w) / w[:-1]))


def incentive_total(dist: WealthDistribution) -> IncentiveResult:
    """
    Per-person incentives and their sum.

    :param dist: A sorted distribution.
    :type dist: WealthDistribution
    :return: i_k = (w_{k+1} - w_k) / w_k with i_n = 0, and I = sum of i_k.
    :rtype: IncentiveResult
    """
    w = dist.weights
    if not dist.sorted or (np.diff(w) < 0).any():
        raise UnsortedDistribution("incentive_total needs weights sorted poorest first")
    per_person = np.zeros_like(w)
    per_person[:-1] = np.diff(w) / w[:-1]
    return IncentiveResult(per_person=per_person, total=float(per_person.sum()))


def continuous_incentive_total(params: ExponentialFamilyParams) -> float:
    """Integral of w'(x)/w(x) over [0, 1] for a smooth curve: ln(wmax / w0)."""
    return math.log(params.wmax / params.w0)


def fit_exponential_family(w0: float, b: float, n: int) -> ExponentialFamilyParams:
    """
    Solves wmax so that the n mid-cell samples x = (k - 1/2)/n of the curve sum to 1.

    :param w0: Floor, 0 < w0 <= 1/n.
    :type w0: float
    :param b: Skewness, non-zero.
    :type b: float
    :param n: Population size.
    :type n: int
    :rtype: ExponentialFamilyParams
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if b == 0:
        raise DomainError("skewness b must be non-zero")
    if w0 <= 0:
        raise DomainError(f"w0 must be > 0, got {w0}")
    if w0 * n > 1 + NORM_TOL:
        raise DomainError(f"w0 * n = {w0 * n} leaves no mass to distribute")
    if abs(w0 * n - 1) <= NORM_TOL:
        return ExponentialFamilyParams(w0=w0, b=b, wmax=w0)
    x = (np.arange(1, n + 1) - 0.5) / n
    g = _shape(x, b)

    def residual(wmax: float) -> float:
        return float(np.sum(w0 + (wmax - w0) * g) - 1.0)

    hi = w0 + 2 * (1 - n * w0) / g.sum()
    wmax = brentq(residual, w0, hi, xtol=1e-16, rtol=4 * np.finfo(float).eps)
    return ExponentialFamilyParams(w0=w0, b=b, wmax=float(wmax))


def exponential_family(w0: float, b: float, n: int) -> WealthDistribution:
    """
    Samples the exponentially rising curve with offset at the cell midpoints.

    :param w0: Floor, 0 < w0 <= 1/n; w0 = 1/n gives the flat distribution.
    :type w0: float
    :param b: Skewness, non-zero.
    :type b: float
    :param n: Population size.
    :type n: int
    :rtype: WealthDistribution
    """
    params = fit_exponential_family(w0, b, n)
    weights = np.maximum(params.curve((np.arange(1, n + 1) - 0.5) / n), w0)
    return WealthDistribution.from_weights(weights, w0)


def uniform_distribution(n: int, w0: float) -> WealthDistribution:
    return WealthDistribution.from_weights(np.full(n, 1.0 / n), w0)


def linear_distribution(n: int, w0: float) -> WealthDistribution:
    """Linear ramp starting at the floor, poorest at w0."""
    ramp = np.arange(n, dtype=float)
    weights = w0 + (1 - n * w0) * ramp / ramp.sum() if n > 1 else np.ones(1)
    return WealthDistribution.from_weights(weights, w0)


def random_distribution(n: int, w0: float, seed: int) -> WealthDistribution:
    """Uniform draws projected onto the constraints: floor w0 plus a random split of the rest."""
    draws = np.random.default_rng(seed).uniform(size=n)
    return WealthDistribution.from_weights(w0 + (1 - n * w0) * draws / draws.sum(), w0)


def ga_optimize(
    init: WealthDistribution,
    steps: int,
    mutation_scale: float = 0.1,
    seed: int = 0,
    on_accept: Optional[Callable[[int, np.ndarray, float], None]] = None,
    drain_rate: float = 0.0,
) -> GAResult:
    """
    Evolutionary hill climbing of the total incentive.

    Each step moves a random amount, uniform in (0, mutation_scale / n), from one random person to
    another, never pushing the giver below the floor. With probability ``drain_rate`` the giver
    hands over everything above the floor instead. The candidate is re-sorted and kept only if the
    total incentive strictly increases.

    Small transfers alone settle a uniform start into the one-at-floor structure. A banker with a
    wheedler beside it is not a resting state: draining the wheedler into the banker always raises
    the total, so with ``drain_rate > 0`` every start ends with all but the top at the floor.

    :param init: Starting distribution.
    :type init: WealthDistribution
    :param steps: Number of mutations to try, >= 0.
    :type steps: int
    :param mutation_scale: Largest transfer as a fraction of the mean weight.
    :type mutation_scale: float
    :param seed: Generator seed.
    :type seed: int
    :param on_accept: Called as on_accept(step, weights, objective) after every accepted mutation.
    :type on_accept: Callable, optional
    :param drain_rate: Probability in [0, 1] that a step moves the giver's whole excess over the floor.
    :type drain_rate: float
    :rtype: GAResult
    """
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")
    if not 0.0 <= drain_rate <= 1.0:
        raise DomainError(f"drain_rate must be in [0, 1], got {drain_rate}")
    w = np.sort(init.weights.copy())
    w0, n = init.w0, init.n
    best = _total(w) if n > 1 else 0.0
    history = np.full(steps + 1, best)
    if n < 2 or steps == 0:
        return GAResult(final=init, history=history, accepted=0, seed=seed)

    rng = np.random.default_rng(seed)
    givers = rng.integers(0, n, size=steps)
    takers = (givers + rng.integers(1, n, size=steps)) % n
    amounts = rng.uniform(0.0, mutation_scale / n, size=steps)
    if drain_rate > 0:
        amounts[rng.random(size=steps) < drain_rate] = np.inf

    accepted = 0
    for step in range(steps):
        i, j = givers[step], takers[step]
        room = w[i] - w0
        if room > 0:
            cand = w.copy()
            if amounts[step] >= room:
                cand[j] += room
                cand[i] = w0
            else:
                cand[i] -= amounts[step]
                cand[j] += amounts[step]
            cand.sort()
            drift = cand.sum() - 1.0
            if drift:
                cand[-1] -= drift
            total = _total(cand)
            if total > best:
                w, best = cand, total
                accepted += 1
                if on_accept is not None:
                    on_accept(step, w, best)
        history[step + 1] = best
    logger.debug("ga seed %d: %d of %d mutations accepted, I = %.6g", seed, accepted, steps, best)
    return GAResult(final=WealthDistribution(weights=w, w0=w0), history=history, accepted=accepted, seed=seed)


def multi_start(
    init_factory: Callable[[int], WealthDistribution],
    seeds: Iterable[int],
    steps: int,
    mutation_scale: float = 0.1,
    jobs: int = 1,
    drain_rate: float = 0.0,
) -> GAResult:
    """
    Independent restarts, one per seed; the best final objective wins, ties to the earliest seed.

    :param init_factory: Builds the starting distribution for a seed.
    :type init_factory: Callable[[int], WealthDistribution]
    :param seeds: Seeds to run.
    :param steps: Steps per run.
    :param mutation_scale: See :func:`ga_optimize`.
    :param jobs: Worker threads.
    :param drain_rate: See :func:`ga_optimize`.
    :rtype: GAResult
    """
    seeds = list(seeds)
    if not seeds:
        raise DomainError("multi_start needs at least one seed")

    def run(seed: int) -> GAResult:
        return ga_optimize(init_factory(seed), steps, mutation_scale, seed, drain_rate=drain_rate)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(run, seeds))
    return max(results, key=lambda r: (r.history[-1], -seeds.index(r.seed)))


def classify_equilibrium(
    dist: WealthDistribution, rel_tol: float = 0.05, bulk_tol: float = 0.25, bulk_quorum: float = 0.75
) -> Equilibrium:
    """
    Names the shape of a distribution. Checks run in order and the first match wins.

    Uniform: everyone within rel_tol of 1/n. Delta: the top holds all it can and everyone else is
    at the floor. BankerWheedler: n-2 persons at the floor, one above it, and a top holding the
    majority. SlaveOfficial: a single person at the floor, a top standing out of the bulk, and at
    least ``bulk_quorum`` of the bulk within ``bulk_tol`` of the bulk median.

    :param dist: The distribution to classify.
    :type dist: WealthDistribution
    :param rel_tol: Relative tolerance for "at the floor" and "uniform".
    :type rel_tol: float
    :rtype: Equilibrium
    """
    w = np.sort(dist.weights)
    n, w0 = w.size, dist.w0
    at_floor = w <= w0 * (1 + rel_tol)
    n_floor = int(at_floor.sum())

    if (np.abs(w - 1.0 / n) <= rel_tol / n).all():
        return Equilibrium.UNIFORM
    if n < 3:
        return Equilibrium.OTHER
    if w[-1] >= 1 - w0 * (n - 1) - rel_tol and at_floor[:-1].all():
        return Equilibrium.DELTA
    if n_floor == n - 2 and at_floor[:-2].all() and w[-1] >= 0.5:
        return Equilibrium.BANKER_WHEEDLER
    if n_floor == 1:
        bulk = w[1:-1]
        median = float(np.median(bulk))
        near = np.abs(bulk - median) <= bulk_tol * median
        if w[-1] > median * (1 + bulk_tol) and near.mean() >= bulk_quorum:
            return Equilibrium.SLAVE_OFFICIAL
    return Equilibrium.OTHER


@dataclass
class StructureSummary:
    """Figures quoted for an optimizer equilibrium."""

    equilibrium: Equilibrium
    top: float
    top_over_floor: float
    n_at_floor: int
    bulk_median: float
    incentive: float


def summarize(dist: WealthDistribution, rel_tol: float = 0.05) -> StructureSummary:
    w = np.sort(dist.weights)
    n_floor = int((w <= dist.w0 * (1 + rel_tol)).sum())
    return StructureSummary(
        equilibrium=classify_equilibrium(dist, rel_tol),
        top=float(w[-1]),
        top_over_floor=float(w[-1] / dist.w0),
        n_at_floor=n_floor,
        bulk_median=float(np.median(w[1:-1])) if w.size > 2 else float("nan"),
        incentive=incentive_total(WealthDistribution(weights=w, w0=dist.w0)).total,
    )
