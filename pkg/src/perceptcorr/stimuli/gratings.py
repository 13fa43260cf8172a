"""Sinusoidal grating stimuli."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import ValidationError

# Default measurement grids, log-spaced in contrast; frequency is in cycles
# per image width. Both are configurable wherever they are consumed.
DEFAULT_CONTRASTS = (0.01, 0.018, 0.032, 0.056, 0.1, 0.18, 0.32, 0.56, 1.0)
DEFAULT_FREQUENCIES = (3.0, 6.0, 12.0, 24.0, 48.0, 75.0, 96.0)


@dataclass(frozen=True)
class GratingSpec:
    contrast: float
    frequency: float  # cycles per image width
    orientation: float = 0.0  # radians
    phase: float = 0.0  # radians
    mean_level: float = 127.5


def render_grating(spec: GratingSpec, size: int = 224, channels: int = 1) -> np.ndarray:
    """Render pixel(x, y) = mean * (1 + contrast * sin(2*pi*f*u/width + phase)).

    u is the pixel coordinate rotated by spec.orientation. Frequency counts
    cycles across the image width.
    """
    if not 0.0 <= spec.contrast <= 1.0:
        raise ValidationError(f"contrast must be in [0, 1], got {spec.contrast}")
    if spec.frequency < 0:
        raise ValidationError(f"frequency must be >= 0, got {spec.frequency}")
    peak = spec.mean_level * (1.0 + spec.contrast)
    trough = spec.mean_level * (1.0 - spec.contrast)
    if peak > 255.0 + 1e-9 or trough < -1e-9:
        raise ValidationError(
            f"grating exceeds pixel range: mean {spec.mean_level}, contrast {spec.contrast}"
        )
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    u = x * np.cos(spec.orientation) + y * np.sin(spec.orientation)
    wave = np.sin(2.0 * np.pi * spec.frequency * u / size + spec.phase)
    img = spec.mean_level * (1.0 + spec.contrast * wave)
    if channels == 3:
        img = np.repeat(img[:, :, None], 3, axis=2)
    return img
