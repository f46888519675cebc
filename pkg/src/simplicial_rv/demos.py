"""Figure reconstructions in the unit square and the lift verification report."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Union

from .geodesic import shrink
from .homotopy import ScalarPath, phi
from .intervals import IntervalSet
from .fibration import LiftedPath, PmfPath, law
from .rational import ONE, ZERO, rat_to_str
from .squares import RectangleSetPath, rect_to_set, render_svg, square_coverage, svg_panel
from .stepfn import StepFn

RESOLUTION = 4
BLUE = "#1f5fbf"
RED = "#c0392b"
PALE = "#f3b7b0"

# the blue rectangle A and the dashed moving rectangle E_u
RECT_A = (Fraction(1, 4), Fraction(1, 4), Fraction(9, 16), Fraction(5, 8))
MOVING_E = ((0, (Fraction(1, 8), Fraction(1, 8), Fraction(3, 4), Fraction(3, 4))),
            (1, (Fraction(3, 8), Fraction(1, 16), Fraction(15, 16), Fraction(1, 2))))


def sample_grid(samples: int) -> list[Fraction]:
    if samples < 2:
        raise ValueError("need at least two samples")
    return [Fraction(i, samples) for i in range(samples)]


def figure_sets():
    A = rect_to_set(*RECT_A, RESOLUTION)
    E = RectangleSetPath(RESOLUTION, MOVING_E)
    a = ScalarPath.affine(A.measure / E(ZERO).measure, 0)
    return A, E, a


def geodesic_demo(out: Union[str, Path], samples: int = 6) -> Path:
    A, _, _ = figure_sets()
    panels = []
    for u in sample_grid(samples):
        S = shrink(A, u)
        assert S.measure == (1 - u) * A.measure
        panels.append(svg_panel([(square_coverage(S, RESOLUTION), BLUE)], title=f"u = {u}"))
    return render_svg(panels, out, columns=samples)


def phi_demo(out: Union[str, Path], samples: int = 6) -> Path:
    A, E, a = figure_sets()
    grid = sample_grid(samples)
    top, bottom = [], []
    for u in grid:
        Eu = E(u)
        outline = [(E.snapped_rect(u), RED)]
        P = phi(a, E, A, u)
        assert P <= Eu and P.measure == a(u) * Eu.measure
        top.append(svg_panel([(square_coverage(Eu, RESOLUTION), PALE)], title=f"u = {u}", outlines=outline))
        bottom.append(svg_panel([(square_coverage(Eu, RESOLUTION), PALE),
                                 (square_coverage(P, RESOLUTION), BLUE)], outlines=outline))
    return render_svg(top + bottom, out, columns=samples)


def lift_report(H: PmfPath, h0: StepFn, grid: int) -> dict:
    """Evaluate the lift on ``u = k/grid`` and record every exact check."""
    if grid < 1:
        raise ValueError("grid must be >= 1")
    L = LiftedPath(H, h0)
    rows = []
    for k in range(grid + 1):
        u = Fraction(k, grid)
        sets = L.level_sets(u)
        f = L(u)
        disjoint = all(a.isdisjoint(b) for i, a in enumerate(sets) for b in sets[i + 1:])
        covers = sum((s.measure for s in sets), ZERO) == ONE
        rows.append({
            "u": rat_to_str(u),
            "law_matches": law(f) == H(u),
            "partition": disjoint and covers,
            "lifted": f.to_json(),
        })
    start_ok = L(ZERO) == h0
    ok = start_ok and all(r["law_matches"] and r["partition"] for r in rows)
    return {"grid": grid, "start_matches": start_ok, "ok": ok, "samples": rows}
