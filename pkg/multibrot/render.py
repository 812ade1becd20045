"""
Escape-time grids over a window of the parameter plane and binary PGM output
"""
import logging
from pathlib import Path
from typing import Dict, List, Union

import numpy as np

from .dynamics import escape_counts, require_degree
from .errors import InvalidParameterError, RenderOutputError
from .models import ComplexPoint, EscapeGrid, IterationBudget, Window

logger = logging.getLogger(__name__)

MAXVAL = 255
DEFAULT_EXTENT = 3.0


def default_window(d: int, px: int, width: float = DEFAULT_EXTENT, height: float = DEFAULT_EXTENT) -> Window:
    """
    Square window framing M_d.

    Centered at 0 for d >= 3. M_2 reaches -2 on the left, so its window is
    shifted to the left by 0.75.
    """
    d = require_degree(d)
    center = ComplexPoint(re=-0.75 if d == 2 else 0.0, im=0.0)
    return Window(center=center, width=width, height=height, px_w=px, px_h=px)


def pixel_grid(window: Window) -> np.ndarray:
    """
    Parameters at every pixel center, shape (px_h, px_w), row 0 at the top.

    Same arithmetic as Window.pixel_to_c, so mirrored pixels of a window centered
    at 0 hold exact negatives.
    """
    i = np.arange(window.px_w, dtype=np.float64)
    j = np.arange(window.px_h, dtype=np.float64)
    re = window.center.re + ((2.0 * i + 1.0 - window.px_w) / (2.0 * window.px_w)) * window.width
    im = window.center.im + ((window.px_h - (2.0 * j + 1.0)) / (2.0 * window.px_h)) * window.height

    c = np.empty((window.px_h, window.px_w), dtype=np.complex128)
    c.real = re[np.newaxis, :]
    c.imag = im[:, np.newaxis]
    return c


def compute_grid(d: int, window: Window, budget: IterationBudget) -> EscapeGrid:
    """
    Escape counts of p_c at every pixel center.

    Args:
        d: Integer degree >= 2
        window: Sampled region and resolution
        budget: Iteration budget and escape margin

    Returns:
        EscapeGrid whose counts hold the escape step, or 0 for orbits that never
        left the escape disk within the budget
    """
    d = require_degree(d)
    counts = escape_counts(d, pixel_grid(window), budget)
    grid = EscapeGrid(d=d, window=window, counts=counts, budget=budget)
    inside = int(np.count_nonzero(counts == 0))
    logger.info(f"Rendered d={d} at {window.px_w}x{window.px_h}: {inside} pixels not escaped")
    return grid


def shade(counts: np.ndarray, max_iters: int) -> np.ndarray:
    """Gray levels: 0 for count 0, else 1 + floor(254 * min(count, max_iters) / max_iters)."""
    if max_iters < 1:
        raise InvalidParameterError("max_iters", max_iters, "must be at least 1")
    counts = np.asarray(counts, dtype=np.int64)
    scaled = 1 + (254 * np.minimum(counts, max_iters)) // max_iters
    return np.where(counts == 0, 0, scaled).astype(np.uint8)


def pgm_bytes(grid: EscapeGrid) -> bytes:
    header = f"P5\n{grid.window.px_w} {grid.window.px_h}\n{MAXVAL}\n".encode("ascii")
    pixels = shade(grid.counts, grid.budget.max_iters)
    return header + np.ascontiguousarray(pixels).tobytes()


def write_pgm(grid: EscapeGrid, path: Union[str, Path]) -> Path:
    """
    Write a grid as a binary PGM (P5, maxval 255), rows top to bottom.

    Raises:
        RenderOutputError: If the file cannot be written
    """
    path = Path(path)
    data = pgm_bytes(grid)
    try:
        path.write_bytes(data)
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        raise RenderOutputError(str(path), str(e)) from e
    logger.info(f"Wrote {len(data)} bytes to {path}")
    return path


def symmetry_fraction(grid: EscapeGrid) -> float:
    """Share of pixels whose count equals that of the pixel mirrored through the window center."""
    counts = grid.counts
    return float(np.mean(counts == counts[::-1, ::-1]))


def symmetry_exceptions(grid: EscapeGrid) -> List[Dict[str, int]]:
    """Pixels that differ from their 180-degree mirror image."""
    counts = grid.counts
    mirrored = counts[::-1, ::-1]
    rows, cols = np.nonzero(counts != mirrored)
    return [
        {"i": int(i), "j": int(j), "count": int(counts[j, i]), "mirrored": int(mirrored[j, i])}
        for j, i in zip(rows, cols)
    ]
