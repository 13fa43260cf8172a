"""Embedded 5x7 bitmap font for letter stimuli.

Only the letters the patterns need: targets A-F and the static surround
letters M, N, S, T. Glyphs are scaled to a requested pixel size by nearest
neighbor, which keeps rendering deterministic and hard-edged.
"""

from __future__ import annotations

import numpy as np

from .. import ValidationError

_GLYPHS = {
    "A": (
        ".###.",
        "#...#",
        "#...#",
        "#####",
        "#...#",
        "#...#",
        "#...#",
    ),
    "B": (
        "####.",
        "#...#",
        "#...#",
        "####.",
        "#...#",
        "#...#",
        "####.",
    ),
    "C": (
        ".###.",
        "#...#",
        "#....",
        "#....",
        "#....",
        "#...#",
        ".###.",
    ),
    "D": (
        "####.",
        "#...#",
        "#...#",
        "#...#",
        "#...#",
        "#...#",
        "####.",
    ),
    "E": (
        "#####",
        "#....",
        "#....",
        "####.",
        "#....",
        "#....",
        "#####",
    ),
    "F": (
        "#####",
        "#....",
        "#....",
        "####.",
        "#....",
        "#....",
        "#....",
    ),
    "M": (
        "#...#",
        "##.##",
        "#.#.#",
        "#.#.#",
        "#...#",
        "#...#",
        "#...#",
    ),
    "N": (
        "#...#",
        "##..#",
        "#.#.#",
        "#..##",
        "#...#",
        "#...#",
        "#...#",
    ),
    "S": (
        ".####",
        "#....",
        "#....",
        ".###.",
        "....#",
        "....#",
        "####.",
    ),
    "T": (
        "#####",
        "..#..",
        "..#..",
        "..#..",
        "..#..",
        "..#..",
        "..#..",
    ),
}


def glyph_bitmap(letter: str) -> np.ndarray:
    """5x7 boolean bitmap of a supported letter."""
    try:
        rows = _GLYPHS[letter]
    except KeyError:
        raise ValidationError(f"no glyph for letter {letter!r}") from None
    return np.array([[ch == "#" for ch in row] for row in rows], dtype=bool)


def raster_glyph(letter: str, font_size_px: float) -> np.ndarray:
    """Scale a glyph to font_size_px height (width keeps the 5:7 aspect)."""
    if font_size_px < 7:
        raise ValidationError(f"font size {font_size_px} too small to rasterize")
    bitmap = glyph_bitmap(letter)
    height = int(round(font_size_px))
    width = max(1, int(round(font_size_px * 5.0 / 7.0)))
    rows = np.minimum((np.arange(height) * 7) // height, 6)
    cols = np.minimum((np.arange(width) * 5) // width, 4)
    return bitmap[np.ix_(rows, cols)]
