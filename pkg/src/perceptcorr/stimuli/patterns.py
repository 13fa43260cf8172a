"""Line, letter, and shape patterns for the background-context experiments.

Three paradigms, each a 90-configuration grid (3 scales x jitter levels x
locations or layouts), rendered white-on-black at the network input size:

- segmentation: a uniform grid of horizontal lines with two (hard) or three
  (easy) diagonal elements arranged horizontally or vertically; per-line
  location jitter.
- crowding: a target letter A-F, either on a blank background (easy) or
  surrounded by a static ring of the letters M, N, S, T (hard); whole-letter
  jitter on the target only.
- shape: a discriminated line in one of four locations plus a context layout
  that either forms a coherent shape (easy) or does not (six hard layouts);
  whole-pattern jitter.

Rendering is hard-edged (1-pixel lines, nearest-neighbor glyphs, no
anti-aliasing) and a pure function of (config, label, seed). Jitter offsets
are truncated to whole pixels, so an offset never exceeds the configured
bound in either axis; sub-pixel jitter levels therefore quantize to zero.
The "random" location is redrawn per sample from the render seed (location
uncertainty), unlike the nine fixed locations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .. import ValidationError
from .font5x7 import raster_glyph

PARADIGMS = ("segmentation", "crowding", "shape")

SEGMENTATION_SCALES = (9.0, 12.3, 19.4)  # line length, px
SEGMENTATION_GRIDS = (13, 9, 6)  # lines per side co-vary with line length
CROWDING_SCALES = (15.1, 20.6, 32.4)  # font size, px
SHAPE_SCALES = (9.0, 15.1, 22.7)  # discriminated-line length, px

JITTER_UNIT = 0.0625
SEGMENTATION_JITTER_MULTIPLIERS = (1, 2, 3)
CROWDING_JITTER_MULTIPLIERS = (1, 2, 3)
SHAPE_JITTER_MULTIPLIERS = (1, 2, 5, 10, 15)

N_LOCATIONS = 10
N_HARD_LAYOUTS = 6

# (row, col) canvas fractions: center, random (drawn per sample), four
# half-distances to the corners, four half-distances to the border midpoints.
LOCATION_FRACTIONS = (
    (0.5, 0.5),
    None,
    (0.25, 0.25),
    (0.25, 0.75),
    (0.75, 0.25),
    (0.75, 0.75),
    (0.25, 0.5),
    (0.75, 0.5),
    (0.5, 0.25),
    (0.5, 0.75),
)

CONDITIONS = {
    "segmentation": ("easy", "hard"),
    "crowding": ("blank", "cluttered"),
    "shape": ("easy", "hard"),
}

CATEGORIES = {
    "segmentation": ("horizontal", "vertical"),
    "crowding": ("A", "B", "C", "D", "E", "F"),
    "shape": ("0", "1", "2", "3"),
}

SURROUND_LETTERS = ("M", "N", "S", "T")
WHITE = 255.0


def _check_paradigm(paradigm: str) -> None:
    if paradigm not in PARADIGMS:
        raise ValidationError(f"unknown paradigm {paradigm!r}; expected one of {PARADIGMS}")


@dataclass(frozen=True)
class PatternConfig:
    """One psychophysical configuration of a paradigm."""

    paradigm: str
    scale_index: int
    jitter_level_index: int
    location_index: int  # 0..9 target location, or 0..5 hard-layout for shape
    element_size: float  # px: line length (segmentation/shape) or font size

    @property
    def jitter_multiplier(self) -> int:
        if self.paradigm == "shape":
            return SHAPE_JITTER_MULTIPLIERS[self.jitter_level_index]
        return SEGMENTATION_JITTER_MULTIPLIERS[self.jitter_level_index]

    @property
    def jitter_px(self) -> float:
        return self.jitter_multiplier * JITTER_UNIT * self.element_size

    @property
    def config_id(self) -> str:
        return (
            f"{self.paradigm[:3]}-s{self.scale_index}"
            f"-j{self.jitter_level_index}-l{self.location_index}"
        )


@dataclass(frozen=True)
class CategoryLabel:
    """The sampled category (MI's discriminated variable) plus the condition."""

    category: str
    condition: str

    def validate(self, paradigm: str) -> None:
        _check_paradigm(paradigm)
        if self.category not in CATEGORIES[paradigm]:
            raise ValidationError(
                f"category {self.category!r} invalid for {paradigm}; "
                f"expected one of {CATEGORIES[paradigm]}"
            )
        if self.condition not in CONDITIONS[paradigm]:
            raise ValidationError(
                f"condition {self.condition!r} invalid for {paradigm}; "
                f"expected one of {CONDITIONS[paradigm]}"
            )


def category_labels(paradigm: str, condition: str) -> list[CategoryLabel]:
    """All category labels of a paradigm under one condition."""
    _check_paradigm(paradigm)
    labels = [CategoryLabel(cat, condition) for cat in CATEGORIES[paradigm]]
    for label in labels:
        label.validate(paradigm)
    return labels


def enumerate_configs(paradigm: str) -> list[PatternConfig]:
    """The full 90-configuration grid of a paradigm, in deterministic order."""
    _check_paradigm(paradigm)
    if paradigm == "segmentation":
        scales, n_jit, n_loc = SEGMENTATION_SCALES, 3, N_LOCATIONS
    elif paradigm == "crowding":
        scales, n_jit, n_loc = CROWDING_SCALES, 3, N_LOCATIONS
    else:
        scales, n_jit, n_loc = SHAPE_SCALES, 5, N_HARD_LAYOUTS
    configs = []
    for s_idx, size in enumerate(scales):
        for j_idx in range(n_jit):
            for l_idx in range(n_loc):
                configs.append(PatternConfig(paradigm, s_idx, j_idx, l_idx, size))
    return configs


# ---------------------------------------------------------------------------
# drawing primitives


def _draw_line(canvas: np.ndarray, p0, p1, clip: bool = False) -> None:
    """1-pixel hard-edged line from p0 to p1, (row, col) float endpoints."""
    r0, c0 = p0
    r1, c1 = p1
    n = int(max(abs(r1 - r0), abs(c1 - c0))) + 1
    rows = np.rint(np.linspace(r0, r1, n)).astype(int)
    cols = np.rint(np.linspace(c0, c1, n)).astype(int)
    if clip:
        keep = (rows >= 0) & (rows < canvas.shape[0]) & (cols >= 0) & (cols < canvas.shape[1])
        rows, cols = rows[keep], cols[keep]
    elif (
        rows.min() < 0
        or cols.min() < 0
        or rows.max() >= canvas.shape[0]
        or cols.max() >= canvas.shape[1]
    ):
        raise ValidationError(
            f"line ({p0}) -> ({p1}) exceeds canvas {canvas.shape}"
        )
    canvas[rows, cols] = WHITE


def _stamp_glyph(canvas: np.ndarray, glyph: np.ndarray, center, clip: bool = False) -> None:
    """Place a boolean glyph bitmap with its center at (row, col)."""
    gh, gw = glyph.shape
    r0 = int(round(center[0])) - gh // 2
    c0 = int(round(center[1])) - gw // 2
    if clip:
        rs, cs = max(r0, 0), max(c0, 0)
        re = min(r0 + gh, canvas.shape[0])
        ce = min(c0 + gw, canvas.shape[1])
        if re <= rs or ce <= cs:
            return
        sub = glyph[rs - r0 : re - r0, cs - c0 : ce - c0]
        canvas[rs:re, cs:ce][sub] = WHITE
        return
    if r0 < 0 or c0 < 0 or r0 + gh > canvas.shape[0] or c0 + gw > canvas.shape[1]:
        raise ValidationError(
            f"glyph of size {glyph.shape} at {center} exceeds canvas {canvas.shape}"
        )
    canvas[r0 : r0 + gh, c0 : c0 + gw][glyph] = WHITE


def _jitter_offset(rng: np.random.Generator, jitter_px: float) -> np.ndarray:
    """Whole-pixel jitter, truncated so |offset| <= floor(jitter_px) per axis."""
    return np.trunc(rng.uniform(-jitter_px, jitter_px, size=2))


# ---------------------------------------------------------------------------
# segmentation


def segmentation_geometry(config: PatternConfig, canvas_size: int) -> dict:
    """Grid geometry: line-center coordinates, spacing, and the margin."""
    n = SEGMENTATION_GRIDS[config.scale_index]
    length = config.element_size
    margin = np.ceil(length / 2.0 + np.floor(config.jitter_px) + 1.0)
    span = canvas_size - 2.0 * margin
    if span < (n - 1) or span <= 0:
        raise ValidationError(
            f"canvas {canvas_size} too small for a {n}-line grid of length {length}"
        )
    centers = margin + np.arange(n) * (span / (n - 1))
    return {"n": n, "centers": centers, "spacing": span / (n - 1), "margin": margin}


def _nearest_interior_cell(centers: np.ndarray, coord: float) -> int:
    idx = int(np.argmin(np.abs(centers - coord)))
    return min(max(idx, 1), len(centers) - 2)


def _render_segmentation(
    config: PatternConfig, label: CategoryLabel, rng: np.random.Generator, canvas_size: int
) -> np.ndarray:
    geo = segmentation_geometry(config, canvas_size)
    centers = geo["centers"]
    n = geo["n"]
    frac = LOCATION_FRACTIONS[config.location_index]
    if frac is None:
        tr = int(rng.integers(1, n - 1))
        tc = int(rng.integers(1, n - 1))
    else:
        tr = _nearest_interior_cell(centers, frac[0] * canvas_size)
        tc = _nearest_interior_cell(centers, frac[1] * canvas_size)
    if label.category == "horizontal":
        flankers = {(tr, tc - 1), (tr, tc + 1)}
    else:
        flankers = {(tr - 1, tc), (tr + 1, tc)}
    central_diagonal = label.condition == "easy"

    canvas = np.zeros((canvas_size, canvas_size), dtype=np.float64)
    half = config.element_size / 2.0
    diag = config.element_size / (2.0 * np.sqrt(2.0))
    for i in range(n):
        for j in range(n):
            offset = _jitter_offset(rng, config.jitter_px)
            r = centers[i] + offset[0]
            c = centers[j] + offset[1]
            diagonal = (i, j) in flankers or ((i, j) == (tr, tc) and central_diagonal)
            if diagonal:
                _draw_line(canvas, (r - diag, c - diag), (r + diag, c + diag))
            else:
                _draw_line(canvas, (r, c - half), (r, c + half))
    return canvas


# ---------------------------------------------------------------------------
# crowding


def _crowding_location(
    config: PatternConfig, rng: np.random.Generator, canvas_size: int, glyph_shape
) -> np.ndarray:
    margin_r = glyph_shape[0] / 2.0 + np.floor(config.jitter_px) + 1.0
    margin_c = glyph_shape[1] / 2.0 + np.floor(config.jitter_px) + 1.0
    if 2 * margin_r >= canvas_size or 2 * margin_c >= canvas_size:
        raise ValidationError(
            f"canvas {canvas_size} too small for font size {config.element_size}"
        )
    frac = LOCATION_FRACTIONS[config.location_index]
    if frac is None:
        return np.array(
            [
                rng.uniform(margin_r, canvas_size - margin_r),
                rng.uniform(margin_c, canvas_size - margin_c),
            ]
        )
    loc = np.array([frac[0] * canvas_size, frac[1] * canvas_size])
    return np.clip(loc, (margin_r, margin_c), (canvas_size - margin_r, canvas_size - margin_c))


def _render_crowding(
    config: PatternConfig, label: CategoryLabel, rng: np.random.Generator, canvas_size: int
) -> np.ndarray:
    glyph = raster_glyph(label.category, config.element_size)
    nominal = _crowding_location(config, rng, canvas_size, glyph.shape)
    offset = _jitter_offset(rng, config.jitter_px)
    canvas = np.zeros((canvas_size, canvas_size), dtype=np.float64)
    if label.condition == "cluttered":
        # Static 3x3 ring around the nominal location; surround glyphs may be
        # clipped at the canvas border, the target never is.
        spacing = round(1.25 * config.element_size)
        ring = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]
        for idx, (dr, dc) in enumerate(ring):
            letter = SURROUND_LETTERS[idx % len(SURROUND_LETTERS)]
            center = (nominal[0] + dr * spacing, nominal[1] + dc * spacing)
            _stamp_glyph(canvas, raster_glyph(letter, config.element_size), center, clip=True)
    _stamp_glyph(canvas, glyph, nominal + offset)
    return canvas


# ---------------------------------------------------------------------------
# shape


def _load_shape_layouts() -> dict:
    path = resources.files("perceptcorr.stimuli").joinpath("data/shape_layouts.json")
    return json.loads(path.read_text(encoding="utf-8"))


_SHAPE_LAYOUTS: dict | None = None


def shape_layouts() -> dict:
    global _SHAPE_LAYOUTS
    if _SHAPE_LAYOUTS is None:
        _SHAPE_LAYOUTS = _load_shape_layouts()
    return _SHAPE_LAYOUTS


def _render_shape(
    config: PatternConfig, label: CategoryLabel, rng: np.random.Generator, canvas_size: int
) -> np.ndarray:
    layouts = shape_layouts()
    scale = config.element_size / layouts["target_length"]
    if label.condition == "easy":
        context = layouts["easy"]
    else:
        context = layouts["hard"][config.location_index]
    target = layouts["targets"][int(label.category)]
    offset = _jitter_offset(rng, config.jitter_px)
    canvas = np.zeros((canvas_size, canvas_size), dtype=np.float64)
    center = canvas_size / 2.0
    for seg in list(context) + [target]:
        (x0, y0), (x1, y1) = seg
        p0 = (
            (y0 - 0.5) * scale + center + offset[0],
            (x0 - 0.5) * scale + center + offset[1],
        )
        p1 = (
            (y1 - 0.5) * scale + center + offset[0],
            (x1 - 0.5) * scale + center + offset[1],
        )
        _draw_line(canvas, p0, p1)
    return canvas


# ---------------------------------------------------------------------------


def render_pattern(
    config: PatternConfig, label: CategoryLabel, seed: int, canvas_size: int = 224
) -> np.ndarray:
    """Render one stimulus; a pure function of (config, label, seed)."""
    label.validate(config.paradigm)
    rng = np.random.default_rng(seed)
    if config.paradigm == "segmentation":
        return _render_segmentation(config, label, rng, canvas_size)
    if config.paradigm == "crowding":
        return _render_crowding(config, label, rng, canvas_size)
    return _render_shape(config, label, rng, canvas_size)
