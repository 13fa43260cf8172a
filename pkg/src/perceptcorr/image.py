"""Image plane conventions and raster I/O.

Images are plain numpy arrays, float64, shape ``(H, W)`` for grayscale or
``(H, W, 3)`` for RGB, with pixel values nominally in ``[0, 255]``. Every
stimulus and every engine input uses this convention.
"""

from __future__ import annotations

import numpy as np
from PIL import Image

from . import ValidationError

PIXEL_MIN = 0.0
PIXEL_MAX = 255.0


def as_image(arr) -> np.ndarray:
    """Validate and return an image array (float64, finite, 1 or 3 channels)."""
    img = np.asarray(arr, dtype=np.float64)
    if img.ndim == 2:
        pass
    elif img.ndim == 3 and img.shape[2] in (1, 3):
        if img.shape[2] == 1:
            img = img[:, :, 0]
    else:
        raise ValidationError(f"image must be (H, W) or (H, W, 3), got {img.shape}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValidationError(f"image must be at least 1x1, got {img.shape}")
    if not np.all(np.isfinite(img)):
        raise ValidationError("image contains non-finite pixels")
    return img


def clamp(img: np.ndarray) -> np.ndarray:
    """Clip pixel values into the displayable [0, 255] range."""
    return np.clip(img, PIXEL_MIN, PIXEL_MAX)


def ensure_channels(img: np.ndarray, channels: int) -> np.ndarray:
    """Replicate a grayscale image to RGB when a consumer expects 3 channels."""
    if channels == 1:
        if img.ndim == 3:
            raise ValidationError("cannot reduce RGB image to a single channel")
        return img
    if channels == 3:
        if img.ndim == 2:
            return np.repeat(img[:, :, None], 3, axis=2)
        return img
    raise ValidationError(f"channel count must be 1 or 3, got {channels}")


def resize_bilinear(img: np.ndarray, height: int, width: int) -> np.ndarray:
    """Bilinear resample to (height, width) pixels."""
    img = as_image(img)
    if img.ndim == 2:
        pil = Image.fromarray(img.astype(np.float32), mode="F")
        out = pil.resize((width, height), Image.BILINEAR)
        return np.asarray(out, dtype=np.float64)
    chans = [resize_bilinear(img[:, :, c], height, width) for c in range(3)]
    return np.stack(chans, axis=2)


def write_png(path, img: np.ndarray) -> None:
    """Dump an image as 8-bit PNG (grayscale or RGB), rounding pixel values."""
    img = clamp(as_image(img))
    data = np.round(img).astype(np.uint8)
    Image.fromarray(data).save(path, format="PNG")


def write_pgm(path, img: np.ndarray) -> None:
    """Dump a grayscale image as binary 8-bit PGM."""
    img = clamp(as_image(img))
    if img.ndim != 2:
        raise ValidationError("PGM supports grayscale images only")
    data = np.round(img).astype(np.uint8)
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(data.tobytes())


def read_image(path) -> np.ndarray:
    """Load a PNG/PGM/JPEG image as float64 in [0, 255]."""
    with Image.open(path) as pil:
        if pil.mode in ("L", "I;16", "I", "F"):
            arr = np.asarray(pil.convert("F"), dtype=np.float64)
        else:
            arr = np.asarray(pil.convert("RGB"), dtype=np.float64)
    return as_image(arr)
