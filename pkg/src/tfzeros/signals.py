"""Test-signal generation: tones, chirps, white Gaussian noise, SNR mixing.

All signals are real-valued and uniformly sampled. Frequencies are expressed
in cycles per sample, so with the default ``fs = 1.0`` the usable band is
(0, 0.5). Noise generation is deterministic: a (seed, stream_index) pair
always reproduces the same samples, and distinct stream indices give
statistically independent streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Signal",
    "NoiseSpec",
    "ToneTriplet",
    "rng_stream",
    "white_gaussian_noise",
    "linear_chirp",
    "triple_tone",
    "mix_at_snr",
]


@dataclass(frozen=True)
class Signal:
    """A uniformly sampled real-valued sequence."""

    samples: np.ndarray
    fs: float = 1.0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("signal must be a 1-D array with at least one sample")
        if not np.all(np.isfinite(samples)):
            raise ValueError("signal samples must be finite")
        if self.fs <= 0:
            raise ValueError("sample rate must be positive")
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def energy(self) -> float:
        """Squared 2-norm of the samples."""
        return float(np.sum(self.samples**2))


@dataclass(frozen=True)
class NoiseSpec:
    """White Gaussian noise parameters plus a reproducible stream identity."""

    variance: float
    seed: int = 0
    stream_index: int = 0

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("noise variance must be nonnegative")
        if self.stream_index < 0:
            raise ValueError("stream index must be nonnegative")


@dataclass(frozen=True)
class ToneTriplet:
    """Three equispaced tones around ``f2``.

    The separation between adjacent tones is ``theta / (t_win * sqrt(2*pi))``
    cycles per sample, i.e. ``theta`` standard deviations of the analysis
    window's frequency profile for a window of width ``t_win`` samples.
    """

    f2: float
    theta: float
    t_win: float
    fs: float = 1.0
    delta_f: float = field(init=False)

    def __post_init__(self):
        if self.theta <= 0:
            raise ValueError("theta must be positive")
        if self.t_win <= 0:
            raise ValueError("t_win must be positive")
        delta_f = self.theta / (self.t_win * np.sqrt(2.0 * np.pi))
        object.__setattr__(self, "delta_f", float(delta_f))
        f1, _, f3 = self.frequencies
        if f1 <= 0 or f3 >= self.fs / 2:
            raise ValueError(
                f"tones f1={f1:.4g}, f3={f3:.4g} fall outside (0, fs/2)"
            )

    @property
    def frequencies(self) -> tuple[float, float, float]:
        """(f1, f2, f3) in cycles per sample."""
        return (self.f2 - self.delta_f, self.f2, self.f2 + self.delta_f)

    @property
    def midpoints(self) -> tuple[float, float]:
        """Frequencies halfway between adjacent tone pairs."""
        f1, f2, f3 = self.frequencies
        return ((f1 + f2) / 2.0, (f2 + f3) / 2.0)


def rng_stream(seed: int, *key: int) -> np.random.Generator:
    """Generator for the substream identified by (seed, key).

    Substreams with distinct keys are independent and order-insensitive,
    which keeps ensemble loops deterministic under any scheduling.
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(key))
    return np.random.default_rng(ss)


def white_gaussian_noise(n: int, spec: NoiseSpec) -> Signal:
    """i.i.d. Normal(0, spec.variance) samples, reproducible per stream."""
    if n < 1:
        raise ValueError("need at least one sample")
    rng = rng_stream(spec.seed, spec.stream_index)
    samples = rng.standard_normal(n) * np.sqrt(spec.variance)
    return Signal(samples)


def linear_chirp(f_start: float, f_end: float, n: int, fs: float = 1.0) -> Signal:
    """Unit-amplitude cosine whose instantaneous frequency ramps linearly."""
    if n < 1:
        raise ValueError("need at least one sample")
    for f in (f_start, f_end):
        if not 0 < f < fs / 2:
            raise ValueError(f"frequency {f} outside (0, fs/2)")
    t = np.arange(n, dtype=np.float64)
    # phase(t) = integral of the instantaneous frequency f_start + (f_end-f_start)*t/n
    phase = f_start * t + (f_end - f_start) * t**2 / (2.0 * n)
    return Signal(np.cos(2.0 * np.pi * phase / fs), fs=fs)


def triple_tone(spec: ToneTriplet, n: int, fs: float = 1.0) -> Signal:
    """Sum of three unit cosines at the triplet frequencies."""
    if n < 1:
        raise ValueError("need at least one sample")
    if fs != spec.fs:
        spec = ToneTriplet(spec.f2, spec.theta, spec.t_win, fs=fs)
    t = np.arange(n, dtype=np.float64)
    samples = np.zeros(n)
    for f in spec.frequencies:
        samples += np.cos(2.0 * np.pi * f * t / fs)
    return Signal(samples, fs=fs)


def mix_at_snr(x: Signal, noise: Signal, snr_db: float) -> tuple[Signal, float]:
    """Rescale ``noise`` so the mixture has exactly the requested SNR.

    The SNR convention is 10*log10(energy(x) / noise_variance); the noise is
    scaled so its mean square matches the target variance exactly. Returns
    the mixture and the applied noise standard deviation (the ground-truth
    gamma_0 of the mixture).
    """
    if len(x) != len(noise):
        raise ValueError("signal and noise must have the same length")
    if x.energy <= 0:
        raise ValueError("cannot set an SNR against a zero-energy signal")
    noise_ms = float(np.mean(noise.samples**2))
    if noise_ms <= 0:
        raise ValueError("noise realization has zero energy")
    gamma0_sq = x.energy * 10.0 ** (-snr_db / 10.0)
    scale = np.sqrt(gamma0_sq / noise_ms)
    mixture = Signal(x.samples + scale * noise.samples, fs=x.fs)
    return mixture, float(np.sqrt(gamma0_sq))
