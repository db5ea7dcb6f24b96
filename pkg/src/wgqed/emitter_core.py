"""Closed-form steady state and transport of a driven two-level emitter in a 1D waveguide.

The emitter is characterized by its total decay rate ``gamma_total``, the
fraction ``beta`` of spontaneous emission that goes into the guided mode, and
a pure dephasing rate ``gamma_deph``.  Everything is expressed in rate units;
the conventional normalization is ``gamma_total = 1`` so that detunings, Rabi
frequencies and dephasing rates are quoted in units of the total linewidth.

The drive amplitude follows the dipole-energy convention ``rabi = d.E/hbar``,
i.e. the coherent coupling enters the rotating-frame Hamiltonian as
``-rabi * (sigma_eg + sigma_ge)``.  With that convention the stationary
excited population saturates at 1/2 and the on-resonance transmittance of a
perfectly coupled, dephasing-free emitter vanishes in the weak-drive limit.

Transport through the guide splits the input power into transmittance T,
reflectance R and out-of-mode loss S with T + R + S = 1 exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TwoLevelEmitter",
    "Drive",
    "SteadyStateTLS",
    "TransportCoefficients",
    "SpectrumTrace",
    "SaturationCurve",
    "steady_state",
    "transport",
    "transport_sweep",
    "transmission_via_coherences",
    "low_power_split",
    "low_power_transmission",
    "extinction",
    "linewidth",
    "critical_flux",
    "flux_to_rabi",
    "saturation_curve",
    "spectrum_sweep",
]


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class TwoLevelEmitter:
    """Rates and coupling efficiency of a single waveguide-coupled emitter."""

    beta: float
    gamma_total: float = 1.0
    gamma_deph: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(beta=self.beta, gamma_total=self.gamma_total,
                        gamma_deph=self.gamma_deph)
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must be in [0,1]")
        if self.gamma_total <= 0.0:
            raise ValueError("gamma_total must be > 0")
        if self.gamma_deph < 0.0:
            raise ValueError("gamma_deph must be >= 0")

    @property
    def gamma_1d(self) -> float:
        """Emission rate into the guided mode."""
        return self.beta * self.gamma_total

    @property
    def gamma_loss(self) -> float:
        """Emission rate into all non-guided modes (gamma_total - gamma_1d)."""
        return self.gamma_total - self.gamma_1d

    @property
    def gamma_2(self) -> float:
        """Total coherence decay rate: half the population decay plus dephasing."""
        return 0.5 * self.gamma_total + self.gamma_deph


@dataclass(frozen=True)
class Drive:
    """Continuous-wave drive: detuning from the emitter resonance and Rabi amplitude.

    The Rabi amplitude is real and non-negative; a global drive phase is
    unobservable in every quantity computed here.
    """

    detuning: float
    rabi: float

    def __post_init__(self) -> None:
        _require_finite(detuning=self.detuning, rabi=self.rabi)
        if self.rabi < 0.0:
            raise ValueError("rabi must be >= 0")


@dataclass(frozen=True)
class SteadyStateTLS:
    """Stationary excited population and optical coherence of the driven emitter."""

    rho_ee: float
    rho_ge: complex

    def __post_init__(self) -> None:
        if not -1e-12 <= self.rho_ee <= 0.5 + 1e-12:
            raise ValueError("rho_ee must lie in [0, 1/2]")
        if abs(self.rho_ge) ** 2 > self.rho_ee * (1.0 - self.rho_ee) + 1e-12:
            raise ValueError("coherence violates state positivity")

    @property
    def rho_eg(self) -> complex:
        return np.conj(self.rho_ge)

    @property
    def rho_gg(self) -> float:
        return 1.0 - self.rho_ee


@dataclass(frozen=True)
class TransportCoefficients:
    """Transmittance, reflectance and out-of-mode loss; they sum to one."""

    transmittance: float
    reflectance: float
    loss: float

    def __post_init__(self) -> None:
        for name, value in (("transmittance", self.transmittance),
                            ("reflectance", self.reflectance),
                            ("loss", self.loss)):
            if not -1e-12 <= value <= 1.0 + 1e-12:
                raise ValueError(f"{name} out of [0,1]: {value!r}")


@dataclass(frozen=True, eq=False)
class SpectrumTrace:
    """Response values sampled on a strictly increasing detuning grid."""

    detunings: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        detunings = np.asarray(self.detunings, dtype=float)
        values = np.asarray(self.values)
        if detunings.ndim != 1 or detunings.size == 0:
            raise ValueError("empty detuning grid")
        if not np.all(np.isfinite(detunings)):
            raise ValueError("detunings must be finite")
        if np.any(np.diff(detunings) <= 0.0):
            raise ValueError("detunings must be strictly increasing")
        if values.shape != detunings.shape:
            raise ValueError("values and detunings must have the same length")
        if np.any(np.isnan(values)):
            raise ValueError("values must not contain NaN")
        object.__setattr__(self, "detunings", detunings)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True, eq=False)
class SaturationCurve:
    """Extinction and linewidth as a function of the input photon flux."""

    flux: np.ndarray
    rabi: np.ndarray
    extinction: np.ndarray
    fwhm: np.ndarray


def _lorentzian_denominator(emitter: TwoLevelEmitter, detuning: float,
                            rabi: float) -> float:
    # Shared line-shape denominator: gamma_2^2 + detuning^2 + power broadening.
    g2 = emitter.gamma_2
    return g2 * g2 + detuning * detuning + 4.0 * (g2 / emitter.gamma_total) * rabi * rabi


def steady_state(emitter: TwoLevelEmitter, drive: Drive) -> SteadyStateTLS:
    """Stationary density-matrix elements of the driven, damped two-level emitter.

    The excited population grows quadratically with the drive at low power and
    saturates at 1/2; the coherence carries the dispersive/absorptive line
    shape.  The omitted elements follow from rho_gg = 1 - rho_ee and
    rho_eg = conj(rho_ge).
    """
    g2 = emitter.gamma_2
    denom = _lorentzian_denominator(emitter, drive.detuning, drive.rabi)
    rho_ee = 2.0 * g2 * drive.rabi ** 2 / (emitter.gamma_total * denom)
    rho_ge = -drive.rabi * (1j * g2 + drive.detuning) / denom
    return SteadyStateTLS(rho_ee=rho_ee, rho_ge=rho_ge)


def transport(emitter: TwoLevelEmitter, drive: Drive) -> TransportCoefficients:
    """Stationary transmittance/reflectance/loss of the waveguide input."""
    g = emitter.gamma_total
    g2 = emitter.gamma_2
    denom = _lorentzian_denominator(emitter, drive.detuning, drive.rabi)
    transmittance = 1.0 - emitter.beta * g * g2 * (2.0 - emitter.beta) / (2.0 * denom)
    reflectance = emitter.beta ** 2 * g * g2 / (2.0 * denom)
    # Guard against sub-epsilon negative rounding at the perfect-extinction point.
    if -1e-12 < transmittance < 0.0:
        transmittance = 0.0
    loss = 1.0 - transmittance - reflectance
    if -1e-12 < loss < 0.0:
        loss = 0.0
    return TransportCoefficients(transmittance=transmittance,
                                 reflectance=reflectance, loss=loss)


def transport_sweep(emitter: TwoLevelEmitter, rabi: float,
                    detunings: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (T, R, S) over a detuning grid at fixed drive power."""
    if rabi < 0.0 or not math.isfinite(rabi):
        raise ValueError("rabi must be finite and >= 0")
    deltas = np.asarray(detunings, dtype=float)
    g = emitter.gamma_total
    g2 = emitter.gamma_2
    denom = g2 * g2 + deltas ** 2 + 4.0 * (g2 / g) * rabi * rabi
    transmittance = 1.0 - emitter.beta * g * g2 * (2.0 - emitter.beta) / (2.0 * denom)
    reflectance = emitter.beta ** 2 * g * g2 / (2.0 * denom)
    np.clip(transmittance, 0.0, 1.0, out=transmittance)
    loss = 1.0 - transmittance - reflectance
    np.clip(loss, 0.0, 1.0, out=loss)
    return transmittance, reflectance, loss


def transmission_via_coherences(emitter: TwoLevelEmitter, drive: Drive) -> float:
    """Transmittance assembled from the emitter's stationary population and coherence.

    This is the scattered-field route: the forward field is the input plus the
    emitter's coherent radiation, so T picks up an incoherent term carried by
    the excited population and a coherent term carried by the optical
    coherence.  It agrees with :func:`transport` to machine precision and
    serves as its cross check.  Requires a nonzero drive because the scattered
    wave is normalized to the input amplitude.
    """
    if drive.rabi <= 0.0:
        raise ValueError("drive.rabi must be > 0 (use transport() at zero power)")
    ss = steady_state(emitter, drive)
    coupling = emitter.beta * emitter.gamma_total / (2.0 * drive.rabi)
    return 1.0 + coupling ** 2 * ss.rho_ee + 2.0 * coupling * ss.rho_ge.imag


def low_power_split(emitter: TwoLevelEmitter) -> tuple[float, float]:
    """Coherent and incoherent contributions to the weak-drive resonant transmittance.

    The coherently transmitted fraction is set by beta_co = gamma_1d/(2 gamma_2),
    the guided emission rate relative to twice the coherence decay.  Without
    pure dephasing beta_co equals beta and the incoherent term vanishes.
    """
    beta_co = emitter.gamma_1d / (2.0 * emitter.gamma_2)
    coherent = (1.0 - beta_co) ** 2
    incoherent = beta_co * (emitter.beta - beta_co)
    return coherent, incoherent


def low_power_transmission(emitter: TwoLevelEmitter) -> float:
    """Weak-drive resonant transmittance (sum of the coherent/incoherent split)."""
    coherent, incoherent = low_power_split(emitter)
    return coherent + incoherent


def extinction(emitter: TwoLevelEmitter, rabi: float) -> float:
    """Transmission dip depth 1 - T(resonance); the far-detuned transmittance is 1."""
    if rabi < 0.0 or not math.isfinite(rabi):
        raise ValueError("rabi must be finite and >= 0")
    return 1.0 - transport(emitter, Drive(detuning=0.0, rabi=rabi)).transmittance


def linewidth(emitter: TwoLevelEmitter, rabi: float) -> float:
    """FWHM of the transmission dip, including power broadening."""
    if rabi < 0.0 or not math.isfinite(rabi):
        raise ValueError("rabi must be finite and >= 0")
    g2 = emitter.gamma_2
    return 2.0 * math.sqrt(g2 * g2 + 4.0 * (g2 / emitter.gamma_total) * rabi * rabi)


def flux_to_rabi(emitter: TwoLevelEmitter, flux: float, coefficient: float = 2.0) -> float:
    """Map an input photon flux to a Rabi amplitude: rabi^2 = coefficient * gamma_1d * flux.

    The default coefficient 2 corresponds to a coherent input of amplitude
    sqrt(flux) in input-output normalization.  It is configurable because the
    flux<->Rabi conversion is a normalization convention, not an observable.
    """
    if flux < 0.0 or not math.isfinite(flux):
        raise ValueError("flux must be finite and >= 0")
    if coefficient <= 0.0:
        raise ValueError("coefficient must be > 0")
    return math.sqrt(coefficient * emitter.gamma_1d * flux)


def critical_flux(emitter: TwoLevelEmitter, coefficient: float = 2.0) -> float:
    """Flux at which the on-resonance extinction drops to half its weak-drive value."""
    if emitter.beta == 0.0:
        raise ValueError("critical flux undefined for beta = 0")
    # Saturation parameter s = 4 rabi^2/(gamma_total*gamma_2) reaches 1 here.
    return emitter.gamma_2 / (4.0 * coefficient * emitter.beta)


def saturation_curve(emitter: TwoLevelEmitter, fluxes: np.ndarray,
                     coefficient: float = 2.0) -> SaturationCurve:
    """Extinction and power-broadened linewidth versus input photon flux."""
    flux = np.asarray(fluxes, dtype=float)
    if flux.ndim != 1 or flux.size == 0:
        raise ValueError("flux grid must be a non-empty 1-D array")
    if np.any(flux < 0.0) or not np.all(np.isfinite(flux)):
        raise ValueError("flux values must be finite and >= 0")
    rabi = np.array([flux_to_rabi(emitter, f, coefficient) for f in flux])
    ext = np.array([extinction(emitter, w) for w in rabi])
    fwhm = np.array([linewidth(emitter, w) for w in rabi])
    return SaturationCurve(flux=flux, rabi=rabi, extinction=ext, fwhm=fwhm)


def spectrum_sweep(emitter: TwoLevelEmitter, rabi: float,
                   detunings: np.ndarray) -> SpectrumTrace:
    """Transmittance over a detuning grid; even in detuning by construction."""
    transmittance, _, _ = transport_sweep(emitter, rabi, detunings)
    return SpectrumTrace(detunings=np.asarray(detunings, dtype=float),
                         values=transmittance)
