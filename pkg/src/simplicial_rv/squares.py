"""Binary digit interleaving between [0, 1) and the unit square, plus SVG output.

At resolution ``k`` the dyadic interval ``[m/4^k, (m+1)/4^k)`` maps onto the
square cell ``(i, j)`` whose x index collects the odd-position binary digits
of ``m`` and whose y index collects the even-position ones.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Tuple, Union
from xml.sax.saxutils import escape

from .errors import DomainError, PrecisionError
from .intervals import IntervalSet
from .rational import ONE, ZERO, RatLike, as_rat

UNIT = 1000  # SVG user units per unit square


@dataclass(frozen=True, order=True)
class SquareCell:
    k: int
    i: int
    j: int

    def box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        side = Fraction(1, 2 ** self.k)
        return self.i * side, self.j * side, (self.i + 1) * side, (self.j + 1) * side


def split_index(m: int, k: int) -> tuple[int, int]:
    """Dyadic index ``m`` (2k digits, most significant first) -> cell ``(i, j)``."""
    i = j = 0
    for pos in range(2 * k):
        bit = (m >> (2 * k - 1 - pos)) & 1
        if pos % 2 == 0:
            i = (i << 1) | bit
        else:
            j = (j << 1) | bit
    return i, j


def merge_index(i: int, j: int, k: int) -> int:
    m = 0
    for pos in range(k):
        m = (m << 2) | (((i >> (k - 1 - pos)) & 1) << 1) | ((j >> (k - 1 - pos)) & 1)
    return m


def required_resolution(A: IntervalSet) -> int:
    """Smallest ``k`` with every endpoint of ``A`` a multiple of ``4^-k``.

    Raises ``DomainError`` if some endpoint is not dyadic at all.
    """
    k = 0
    for lo, hi in A:
        for x in (lo, hi):
            d = x.denominator
            if d & (d - 1):
                raise DomainError(f"endpoint {x} is not dyadic")
            bits = d.bit_length() - 1
            k = max(k, (bits + 1) // 2)
    return max(k, 1)


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError("resolution must be >= 1")


def square_embed(A: IntervalSet, k: int) -> set[SquareCell]:
    """Cells whose preimage interval lies inside ``A``; exact for aligned ``A``."""
    _check_k(k)
    for lo, hi in A:
        for x in (lo, hi):
            if (x * 4 ** k).denominator != 1:
                try:
                    need = required_resolution(A)
                except DomainError:
                    need = None
                raise PrecisionError(f"endpoint {x} is not a multiple of 4^-{k}", need)
    n = 4 ** k
    cells = set()
    for lo, hi in A:
        for m in range(int(lo * n), int(hi * n)):
            i, j = split_index(m, k)
            cells.add(SquareCell(k, i, j))
    return cells


def square_coverage(A: IntervalSet, k: int) -> dict[SquareCell, Fraction]:
    """Fraction of each cell covered by the image of ``A`` (any rational endpoints)."""
    _check_k(k)
    n = 4 ** k
    out: dict[SquareCell, Fraction] = {}
    for lo, hi in A:
        first = int(lo * n)
        last = min(n - 1, int(hi * n) if (hi * n).denominator != 1 else int(hi * n) - 1)
        for m in range(first, last + 1):
            c_lo, c_hi = Fraction(m, n), Fraction(m + 1, n)
            cov = (min(hi, c_hi) - max(lo, c_lo)) * n
            if cov > 0:
                i, j = split_index(m, k)
                cell = SquareCell(k, i, j)
                out[cell] = out.get(cell, ZERO) + cov
    return out


def rect_to_set(x0: RatLike, y0: RatLike, x1: RatLike, y1: RatLike, k: int) -> IntervalSet:
    """Preimage of the rectangle ``[x0, x1) × [y0, y1)`` with corners snapped down to the ``2^-k`` grid."""
    _check_k(k)
    side = 2 ** k
    i0, i1 = int(as_rat(x0) * side), int(as_rat(x1) * side)
    j0, j1 = int(as_rat(y0) * side), int(as_rat(y1) * side)
    n = 4 ** k
    return IntervalSet((Fraction(m, n), Fraction(m + 1, n))
                       for i in range(i0, i1) for j in range(j0, j1)
                       for m in (merge_index(i, j, k),))


class RectangleSetPath:
    """Moving rectangle in the square, corners interpolated linearly and snapped to the grid."""

    def __init__(self, k: int, keyframes: Sequence[Tuple[RatLike, Tuple[RatLike, RatLike, RatLike, RatLike]]]):
        _check_k(k)
        self.k = k
        self.us = tuple(as_rat(u) for u, _ in keyframes)
        self.rects = tuple(tuple(as_rat(c) for c in r) for _, r in keyframes)
        if len(self.us) < 2 or self.us[0] != 0 or self.us[-1] != 1:
            raise DomainError("keyframes must start at 0 and end at 1")

    def rect(self, u: RatLike) -> tuple[Fraction, ...]:
        u = as_rat(u)
        if not (ZERO <= u <= ONE):
            raise DomainError(f"path parameter {u} is outside [0, 1]")
        i = min(bisect.bisect_right(self.us, u) - 1, len(self.us) - 2)
        u0, u1 = self.us[i], self.us[i + 1]
        w = (u - u0) / (u1 - u0)
        return tuple(a + (b - a) * w for a, b in zip(self.rects[i], self.rects[i + 1]))

    def snapped_rect(self, u: RatLike) -> tuple[Fraction, ...]:
        side = 2 ** self.k
        return tuple(Fraction(int(c * side), side) for c in self.rect(u))

    def __call__(self, u: RatLike) -> IntervalSet:
        return rect_to_set(*self.rect(u), self.k)


# -- SVG ------------------------------------------------------------------

def _fmt(x: Union[Fraction, float]) -> str:
    return f"{float(x):.3f}".rstrip("0").rstrip(".")


def svg_panel(layers: Sequence[Tuple[Mapping[SquareCell, Fraction], str]],
              title: str = "",
              outlines: Iterable[Tuple[Tuple[Fraction, ...], str]] = ()) -> list[str]:
    """SVG elements for one unit square; y grows upwards."""
    out = [f'<rect x="0" y="0" width="{UNIT}" height="{UNIT}" fill="white" stroke="black" stroke-width="2"/>']
    for cells, color in layers:
        for cell in sorted(cells):
            cov = cells[cell]
            x0, y0, x1, y1 = cell.box()
            attrs = f'fill="{color}"'
            if cov != 1:
                attrs += f' fill-opacity="{_fmt(cov)}"'
            out.append(f'<rect x="{_fmt(x0 * UNIT)}" y="{_fmt((1 - y1) * UNIT)}" '
                       f'width="{_fmt((x1 - x0) * UNIT)}" height="{_fmt((y1 - y0) * UNIT)}" {attrs}/>')
    for (x0, y0, x1, y1), color in outlines:
        out.append(f'<rect x="{_fmt(x0 * UNIT)}" y="{_fmt((1 - y1) * UNIT)}" '
                   f'width="{_fmt((x1 - x0) * UNIT)}" height="{_fmt((y1 - y0) * UNIT)}" '
                   f'fill="none" stroke="{color}" stroke-width="6" stroke-dasharray="20,12"/>')
    # axes
    out.append(f'<line x1="0" y1="{UNIT}" x2="{UNIT}" y2="{UNIT}" stroke="black" stroke-width="4"/>')
    out.append(f'<line x1="0" y1="0" x2="0" y2="{UNIT}" stroke="black" stroke-width="4"/>')
    if title:
        out.append(f'<text x="{UNIT // 2}" y="{UNIT + 70}" font-size="60" text-anchor="middle">{escape(title)}</text>')
    return out


def render_svg(panels: Sequence[Sequence[str]], path: Union[str, Path], columns: int) -> Path:
    """Write panels (from ``svg_panel``) on a grid to ``path``."""
    gap = 150
    rows = (len(panels) + columns - 1) // columns
    width = columns * (UNIT + gap) + gap
    height = rows * (UNIT + gap) + gap
    body = []
    for idx, panel in enumerate(panels):
        r, c = divmod(idx, columns)
        body.append(f'<g transform="translate({gap + c * (UNIT + gap)},{gap // 2 + r * (UNIT + gap)})">')
        body.extend(panel)
        body.append("</g>")
    text = "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width // 5}" height="{height // 5}" '
        f'viewBox="0 0 {width} {height}">',
        *body, "</svg>", ""])
    path = Path(path)
    path.write_text(text)
    return path


def render_cells_svg(cells: Union[Iterable[SquareCell], Mapping[SquareCell, Fraction]],
                     path: Union[str, Path], color: str = "#1f5fbf") -> Path:
    """Single-panel SVG of a cell set or a coverage map."""
    if not isinstance(cells, Mapping):
        cells = {c: ONE for c in cells}
    return render_svg([svg_panel([(cells, color)])], path, columns=1)
