"""Additive noise perturbations on a decibel scale.

The perturbation level is expressed in dB relative to the mean pixel value T
of the perturbed region::

    level_db = 20 * log10(std(noise) / T)

Noise fields are synthesized from a flat amplitude spectrum with uniformly
random phases (Hermitian-symmetric, so the field is real), then affinely
normalized to zero mean and the target standard deviation over the region.
A white-Gaussian mode is available behind the ``mode`` switch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import ValidationError
from ..image import as_image
from ..seeds import spawn

# Sentinel for "noise disabled": perturb_image returns the input unchanged.
NOISE_OFF = float("-inf")

# Finite dB levels accepted by NoiseSpec; wide enough for any measured
# threshold, narrow enough to catch unit mistakes (e.g. passing a std).
DB_RANGE = (-120.0, 40.0)

NOISE_MODES = ("phase", "gaussian")


def db_to_std(level_db: float, t_mean: float) -> float:
    """Noise standard deviation (pixel units) for a dB level relative to t_mean."""
    if not t_mean > 0:
        raise ValidationError(
            f"mean pixel value must be positive, got {t_mean} (degenerate all-black region)"
        )
    return t_mean * 10.0 ** (level_db / 20.0)


def std_to_db(std: float, t_mean: float) -> float:
    """Inverse of db_to_std: dB level for a noise standard deviation."""
    if not t_mean > 0:
        raise ValidationError(
            f"mean pixel value must be positive, got {t_mean} (degenerate all-black region)"
        )
    if not std > 0:
        raise ValidationError(f"noise std must be positive, got {std}")
    return 20.0 * math.log10(std / t_mean)


@dataclass(frozen=True)
class NoiseSpec:
    """One noise condition: where, how strong, and which random draw.

    region is (top, left, height, width) in pixel coordinates.
    """

    region: tuple[int, int, int, int]
    level_db: float
    seed: int
    mode: str = "phase"

    def validate(self, image_shape: tuple[int, int]) -> None:
        top, left, height, width = self.region
        if height < 1 or width < 1:
            raise ValidationError(f"noise region is empty: {self.region}")
        if height * width < 2:
            raise ValidationError("noise region must contain at least 2 pixels")
        if top < 0 or left < 0 or top + height > image_shape[0] or left + width > image_shape[1]:
            raise ValidationError(
                f"noise region {self.region} exceeds image shape {image_shape}"
            )
        if self.mode not in NOISE_MODES:
            raise ValidationError(f"unknown noise mode {self.mode!r}")
        if self.level_db != NOISE_OFF and not (
            DB_RANGE[0] <= self.level_db <= DB_RANGE[1]
        ):
            raise ValidationError(
                f"level_db {self.level_db} outside allowed range {DB_RANGE}"
            )


def centered_square_region(image_shape: tuple[int, int]) -> tuple[int, int, int, int]:
    """Default noise region: centered square of half the shorter image side."""
    side = max(2, min(image_shape[0], image_shape[1]) // 2)
    top = (image_shape[0] - side) // 2
    left = (image_shape[1] - side) // 2
    return (top, left, side, side)


def _flat_spectrum_field(rng: np.random.Generator, height: int, width: int) -> np.ndarray:
    """Real field whose DFT has unit amplitude everywhere and random phases."""
    half_w = width // 2 + 1
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(height, half_w))
    spec = np.exp(1j * phases)
    # Columns k_x = 0 (and k_x = width/2 for even width) must be internally
    # Hermitian; their self-conjugate bins must be real with unit amplitude.
    self_conj_rows = [0] + ([height // 2] if height % 2 == 0 else [])
    hermitian_cols = [0] + ([width // 2] if width % 2 == 0 else [])
    for col in hermitian_cols:
        if col >= half_w:
            continue
        column = spec[:, col]
        upper = np.arange(1, (height + 1) // 2)
        column[-upper] = np.conj(column[upper])
        for row in self_conj_rows:
            column[row] = 1.0 if column[row].real >= 0 else -1.0
    return np.fft.irfft2(spec, s=(height, width))


def synth_noise(
    spec: NoiseSpec, image_shape: tuple[int, int], t_mean: float
) -> np.ndarray:
    """Noise field on a full canvas, zero outside spec.region.

    The field over the region has exactly zero mean and exactly the standard
    deviation db_to_std(spec.level_db, t_mean). Identical spec -> identical
    field.
    """
    spec.validate(image_shape)
    field = np.zeros(image_shape, dtype=np.float64)
    if spec.level_db == NOISE_OFF:
        return field
    target_std = db_to_std(spec.level_db, t_mean)
    top, left, height, width = spec.region
    rng = spawn(spec.seed, "noise", spec.mode, spec.region, repr(spec.level_db))
    if spec.mode == "phase":
        raw = _flat_spectrum_field(rng, height, width)
    else:
        raw = rng.standard_normal((height, width))
    raw = raw - raw.mean()
    std = raw.std()
    if std == 0.0:
        raise ValidationError("degenerate noise draw: zero variance over region")
    field[top : top + height, left : left + width] = raw * (target_std / std)
    return field


def perturb_image(image: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    """Add the spec's noise field inside its region; clamp the result to [0, 255].

    T is the mean pixel value over the region where noise is added. Pixels
    outside the region are untouched.
    """
    image = as_image(image)
    spec.validate(image.shape[:2])
    if spec.level_db == NOISE_OFF:
        return image.copy()
    top, left, height, width = spec.region
    window = (slice(top, top + height), slice(left, left + width))
    t_mean = float(image[window].mean())
    field = synth_noise(spec, image.shape[:2], t_mean)
    out = image.copy()
    if image.ndim == 3:
        out[window] += field[window][:, :, None]
    else:
        out[window] += field[window]
    out[window] = np.clip(out[window], 0.0, 255.0)
    return out
