"""Desk-scale correlates of visual perception in layered feed-forward vision models.

Subpackages:

- ``stimuli``    noise perturbations, line/letter/shape patterns, sine gratings
- ``engine``     neutral-format feed-forward inference with named layer taps
- ``filterbank`` Gabor and steerable-pyramid baselines as tappable graphs
- ``metrics``    perturbation saliency, per-neuron mutual information,
                 contrast-response curves
- ``stats``      prediction evaluation (R^2, SROCC, RMSE) and image-statistic
                 baselines
- ``harness``    experiment orchestration, dataset ingestion, CLI
"""

__version__ = "0.1.0"


class PerceptcorrError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(PerceptcorrError):
    """Bad input: malformed file, invalid configuration, or domain error."""
