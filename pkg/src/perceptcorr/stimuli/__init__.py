"""Deterministic stimulus synthesis: noise perturbations, line/letter/shape
patterns, and sine gratings."""

from .noise import NoiseSpec, db_to_std, std_to_db, synth_noise, perturb_image
from .gratings import GratingSpec, render_grating
from .patterns import (
    PARADIGMS,
    CategoryLabel,
    PatternConfig,
    category_labels,
    enumerate_configs,
    render_pattern,
)

__all__ = [
    "NoiseSpec",
    "db_to_std",
    "std_to_db",
    "synth_noise",
    "perturb_image",
    "GratingSpec",
    "render_grating",
    "PARADIGMS",
    "PatternConfig",
    "CategoryLabel",
    "category_labels",
    "enumerate_configs",
    "render_pattern",
]
