"""Word usage measures and the special functions they are built on.

All functions are pure: they only depend on their arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from operator import index
from typing import NamedTuple, Sequence

import numpy as np
import numpy.typing as npt
from scipy.special import digamma
from scipy.stats import entropy

from .errors import MeasureDomainError

EULER_C = 0.5772156649015329
"""Euler's constant C, the limit of H_N - ln N"""

HARMONIC_CUTOFF = 256
"""Largest frequency for which harmonic numbers are summed term by term

Above it, the asymptotic expansion is used; its truncation error at the
cutoff is far below 1e-13.
"""

EXACT_ORDER_MAX_DENOMINATOR = 64
"""Largest denominator of a generalized-measure parameter ranked exactly"""


def _partial_harmonic_sums(upto: int) -> tuple[float, ...]:
    return tuple(
        math.fsum(1 / k for k in range(1, f + 1)) for f in range(upto + 1))


_EXACT_HARMONIC = _partial_harmonic_sums(HARMONIC_CUTOFF)


@dataclass(frozen=True)
class FrequencyDistribution:
    """Frequencies of one word in each category of a corpus."""

    word: str
    """Normalized word form"""

    counts: tuple[int, ...]
    """Frequency of the word in each category, in category order"""

    def __post_init__(self) -> None:
        try:
            counts = tuple(index(c) for c in self.counts)
        except TypeError as e:
            raise MeasureDomainError(
                f'counts of "{self.word}" must be integers') from e
        if any(c < 0 for c in counts):
            raise MeasureDomainError(
                f'counts of "{self.word}" must be non-negative')
        object.__setattr__(self, 'counts', counts)

    @property
    def n(self) -> int:
        """Number of categories.

        Returns:
            the length of :attr:`counts`
        """
        return len(self.counts)

    @property
    def total(self) -> int:
        """Total corpus frequency F.

        Returns:
            the sum of the frequencies in all categories
        """
        return sum(self.counts)

    @property
    def range(self) -> int:
        """Range t.

        Returns:
            the number of categories where the word occurs at least once
        """
        return sum(1 for c in self.counts if c > 0)

    def as_array(self) -> npt.NDArray[np.float64]:
        """Return the counts as a float vector.

        Returns:
            a new numpy array with the counts
        """
        return np.asarray(self.counts, dtype=np.float64)


@dataclass(frozen=True)
class GeneralizedParams:
    """Parameter of the generalized measure ``M = F^(1-a) * t^a``."""

    a: float
    """Weight of the range (0: frequency only, 1: range only)"""

    def __post_init__(self) -> None:
        a = float(self.a)
        if not 0 <= a <= 1:
            raise MeasureDomainError(f'parameter a must be in [0, 1]; got {a}')
        object.__setattr__(self, 'a', a)

    @property
    def fraction(self) -> Fraction | None:
        """``a`` as a fraction with a small denominator, if it is one.

        Returns:
            ``p/q`` equal to ``a`` up to rounding, with ``q`` at most
            :data:`EXACT_ORDER_MAX_DENOMINATOR`, or ``None``
        """
        frac = Fraction(self.a).limit_denominator(EXACT_ORDER_MAX_DENOMINATOR)
        return frac if abs(float(frac) - self.a) <= 1e-12 else None


@dataclass(frozen=True)
class StevensParams:
    """Parameters of Stevens' power law ``R = a * S^n_exp + b``."""

    a: float = 1.0
    """Scale"""

    b: float = 0.0
    """Offset"""

    n_exp: float = 0.5
    """Exponent (must be positive)"""

    def __post_init__(self) -> None:
        if not self.n_exp > 0:
            raise MeasureDomainError(
                f'exponent must be positive; got {self.n_exp}')


@dataclass(frozen=True)
class WeberFechnerParams:
    """Parameters of the Weber-Fechner law ``R = a * ln S + b``.

    The defaults are the values that make the law meet R(1) = 1 in the
    limit of large frequencies.
    """

    a: float = 1.0
    """Scale"""

    b: float = EULER_C
    """Offset"""


def harmonic_r_asymptotic(f: int) -> float:
    """Evaluate the asymptotic expansion of the harmonic number H_F.

    ``ln F + C + 1/(2F) - 1/(12F^2) + 1/(120F^4)``

    Args:
        f: word frequency (at least 1)

    Raises:
        MeasureDomainError: if ``f < 1``

    Returns:
        the approximation of H_F
    """
    f = index(f)
    if f < 1:
        raise MeasureDomainError(
            f'asymptotic expansion needs F >= 1; got {f}')
    x = float(f)
    inv2 = 1 / (x * x)
    return math.log(x) + EULER_C + 0.5 / x - inv2 / 12 + inv2 * inv2 / 120


def harmonic_r(f: int) -> float:
    """Return the reaction R(F) to a word seen F times in a text.

    It is the harmonic number ``H_F = 1 + 1/2 + ... + 1/F`` (equivalently
    ``psi(F + 1) + C``), with ``R(0) = 0`` and ``R(1) = 1``.

    Args:
        f: word frequency (non-negative)

    Raises:
        MeasureDomainError: if ``f`` is negative

    Returns:
        the harmonic number H_F
    """
    f = index(f)
    if f < 0:
        raise MeasureDomainError(f'frequency must be non-negative; got {f}')
    if f <= HARMONIC_CUTOFF:
        return _EXACT_HARMONIC[f]
    return harmonic_r_asymptotic(f)


def psi_r(s: float) -> float:
    """Return ``psi(S + 1) + C`` for a real stimulus S.

    Agrees with :func:`harmonic_r` on integers and interpolates it between
    them.

    Args:
        s: stimulus (non-negative)

    Raises:
        MeasureDomainError: if ``s`` is negative

    Returns:
        the reaction
    """
    if not s >= 0:
        raise MeasureDomainError(f'stimulus must be non-negative; got {s}')
    return float(digamma(s + 1.0)) + EULER_C


def generalized_m(f: int, t: int, params: GeneralizedParams) -> float:
    """Compute the generalized usage measure ``M = F^(1-a) * t^a``.

    ``a = 0`` gives the frequency, ``a = 1`` the range, ``a = 0.5`` ranks
    like ``F*t`` and ``a = 1/3`` like ``F*sqrt(t)``.

    Args:
        f: total frequency F
        t: range t
        params: the parameter ``a``

    Raises:
        MeasureDomainError: unless ``F >= t >= 1``

    Returns:
        the value of M
    """
    f, t = index(f), index(t)
    if t < 1 or f < t:
        raise MeasureDomainError(
            f'inconsistent frequency and range: F={f}, t={t}')
    a = params.a
    return float(f**(1 - a) * t**a)


def generalized_key(f: int, t: int, params: GeneralizedParams) -> int | float:
    """Compute a value that orders words exactly like ``M``.

    For ``a = p/q`` (see :attr:`GeneralizedParams.fraction`) this is the
    integer ``M^q = F^(q-p) * t^p``, so words with equal ``M`` compare
    equal; ``a = 0.5`` orders like ``F*t``. For other values of ``a`` it is
    ``M`` itself.

    Args:
        f: total frequency F
        t: range t
        params: the parameter ``a``

    Raises:
        MeasureDomainError: unless ``F >= t >= 1``

    Returns:
        the ordering key
    """
    m = generalized_m(f, t, params)
    if (frac := params.fraction) is None:
        return m
    p, q = frac.numerator, frac.denominator
    return index(f)**(q - p) * index(t)**p


def _check_dispersion_domain(dist: FrequencyDistribution) -> None:
    if dist.n < 2:
        raise MeasureDomainError(
            'dispersion undefined for a single category (needs n >= 2); '
            f'"{dist.word}" has n={dist.n}')
    if dist.total == 0:
        raise MeasureDomainError(
            f'dispersion undefined for zero frequency ("{dist.word}")')


def juilland_d(dist: FrequencyDistribution) -> float:
    """Compute Juilland's coefficient of dispersion D.

    ``D = 1 - V / sqrt(n - 1)``, where ``V`` is the coefficient of
    variation (population standard deviation over mean) of the
    per-category frequencies. Evaluated in integer arithmetic, so that
    D is exactly 1 for uniform counts and exactly 0 when one category
    holds all occurrences.

    Args:
        dist: the word distribution (n >= 2, F > 0)

    Returns:
        D, between 0 and 1
    """
    _check_dispersion_domain(dist)
    n, f = dist.n, dist.total
    num = n * sum(c * c for c in dist.counts) - f * f
    den = (n - 1) * f * f
    return min(1.0, max(0.0, 1.0 - math.sqrt(num / den)))


def juilland_u(dist: FrequencyDistribution) -> float:
    """Compute Juilland's usage coefficient ``U = F * D``.

    Args:
        dist: the word distribution (n >= 2, F > 0)

    Returns:
        U
    """
    return dist.total * juilland_d(dist)


def _proportions(
        dist: FrequencyDistribution,
        category_sizes: Sequence[int] | None) -> npt.NDArray[np.float64]:
    counts = dist.as_array()
    if category_sizes is None:
        return counts
    if len(category_sizes) != dist.n:
        raise MeasureDomainError(
            f'{len(category_sizes)} category sizes given for '
            f'{dist.n} categories')
    sizes = np.asarray(category_sizes, dtype=np.float64)
    if np.any(sizes <= 0):
        raise MeasureDomainError('category sizes must be positive')
    return counts / sizes


def carroll_d2(dist: FrequencyDistribution,
               category_sizes: Sequence[int] | None = None,
               base: float | None = None) -> float:
    """Compute Carroll's entropy-based dispersion index D2.

    ``D2 = -sum(p_j log p_j) / log n``, with ``p_j`` proportional to
    ``F_j / s_j`` (``F_j / F`` when all categories have the same size) and
    ``0 log 0 = 0``. The result does not depend on the logarithm base.

    Args:
        dist: the word distribution (n >= 2, F > 0)
        category_sizes: size of each category in tokens (optional)
        base: logarithm base (natural logarithm if omitted)

    Returns:
        D2, between 0 and 1
    """
    _check_dispersion_domain(dist)
    p = _proportions(dist, category_sizes)
    h = float(entropy(p, base=base))
    log_n = math.log(dist.n) / (math.log(base) if base else 1.0)
    return min(1.0, max(0.0, h / log_n))


def carroll_um(dist: FrequencyDistribution,
               category_sizes: Sequence[int] | None = None) -> float:
    """Compute Carroll's usage coefficient U_m.

    ``U_m = D2 * F + (1 - D2) * f_min``, where the minimum value
    ``f_min = F * min(s) / sum(s)`` is ``F / n`` for equal categories.
    Unlike Juilland's U, it stays positive when one category holds all
    occurrences.

    Args:
        dist: the word distribution (n >= 2, F > 0)
        category_sizes: size of each category in tokens (optional)

    Returns:
        U_m
    """
    d2 = carroll_d2(dist, category_sizes)
    f = dist.total
    if category_sizes is None:
        f_min = f / dist.n
    else:
        f_min = f * min(category_sizes) / sum(category_sizes)
    return d2 * f + (1 - d2) * f_min


def ur_score(dist: FrequencyDistribution) -> float:
    """Compute the usage measure U_R.

    ``U_R = sum_j (psi(F_j + 1) + C)``, the sum of the reactions to the
    word over all texts. Defined for any number of categories; raw
    frequencies are used even when texts differ in size.

    Args:
        dist: the word distribution

    Returns:
        U_R
    """
    return math.fsum(harmonic_r(c) for c in dist.counts)


def stevens_r(s: float, params: StevensParams = StevensParams()) -> float:
    """Evaluate Stevens' power law ``R = a * S^n + b``.

    Args:
        s: stimulus (non-negative)
        params: law parameters

    Raises:
        MeasureDomainError: if ``s`` is negative

    Returns:
        the reaction
    """
    if not s >= 0:
        raise MeasureDomainError(f'stimulus must be non-negative; got {s}')
    return params.a * float(s)**params.n_exp + params.b


def weber_fechner_r(
    s: float, params: WeberFechnerParams = WeberFechnerParams()
) -> float:
    """Evaluate the Weber-Fechner law ``R = a * ln S + b``.

    Args:
        s: stimulus (positive)
        params: law parameters

    Raises:
        MeasureDomainError: if ``s`` is not positive

    Returns:
        the reaction
    """
    if not s > 0:
        raise MeasureDomainError(f'stimulus must be positive; got {s}')
    return params.a * math.log(s) + params.b


class CurvePoint(NamedTuple):
    """Reactions predicted by the three laws for one frequency."""

    f: int
    """Word frequency"""

    stevens: float
    """Stevens' power law"""

    harmonic: float
    """Harmonic number H_F"""

    weber_fechner: float
    """Weber-Fechner law"""


def law_curves(max_f: int) -> list[CurvePoint]:
    """Tabulate the three stimulus-response curves for F = 1..max_f.

    Args:
        max_f: largest frequency (at least 1)

    Raises:
        MeasureDomainError: if ``max_f < 1``

    Returns:
        one point per frequency
    """
    max_f = index(max_f)
    if max_f < 1:
        raise MeasureDomainError(f'max F must be at least 1; got {max_f}')
    return [
        CurvePoint(f, stevens_r(f), harmonic_r(f), weber_fechner_r(f))
        for f in range(1, max_f + 1)
    ]


__all__: Sequence[str] = [
    'EULER_C',
    'EXACT_ORDER_MAX_DENOMINATOR',
    'HARMONIC_CUTOFF',
] + [
    c.__name__ for c in [
        CurvePoint,
        FrequencyDistribution,
        GeneralizedParams,
        StevensParams,
        WeberFechnerParams,
        carroll_d2,
        carroll_um,
        generalized_key,
        generalized_m,
        harmonic_r,
        harmonic_r_asymptotic,
        juilland_d,
        juilland_u,
        law_curves,
        psi_r,
        stevens_r,
        ur_score,
        weber_fechner_r,
    ]
]
