"""Explicit failure of continuity of the law map into the weak-topology realization.

Near the constant ``f0 ≡ 0`` sits the step function ``f`` that is ``0`` on
``[0, 1 - 2/n)``, takes each value ``k = 1..n²`` on a sliver of length ``1/n³``,
and is ``n² + 1`` on ``[1 - 1/n, 1)``. It is ``2/n``-close to ``f0`` but its law
leaves the open set ``U = {α : α(s) < 1/#supp(α) for s ≠ 0}`` that contains the
law of ``f0``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DomainError
from .fibration import law
from .rational import ONE, rat_to_str
from .simplicial import Pmf, SimplicialComplex, in_L
from .stepfn import StepFn, distance

NATURALS = SimplicialComplex.full()


@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    distance_to_f0: Fraction
    support_size: int
    mass_at_top: Fraction
    violates_U: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["distance_to_f0"] = rat_to_str(self.distance_to_f0)
        d["mass_at_top"] = rat_to_str(self.mass_at_top)
        return d


def in_U(alpha: Pmf) -> bool:
    r = len(alpha)
    return all(m < Fraction(1, r) for v, m in alpha.items() if v != 0)


def counterexample_fn(n: int) -> StepFn:
    if n < 2:
        raise DomainError("construction needs n >= 2")
    base = ONE - Fraction(2, n)
    sliver = Fraction(1, n ** 3)
    pieces = [(0, base, 0)]
    pieces += [(base + (k - 1) * sliver, base + k * sliver, k) for k in range(1, n * n + 1)]
    pieces.append((ONE - Fraction(1, n), ONE, n * n + 1))
    return StepFn.from_pieces(pieces)


def counterexample(n: int) -> CounterexampleReport:
    f = counterexample_fn(n)
    f0 = StepFn.constant(0)
    if not (in_L(NATURALS, f) and in_L(NATURALS, f0)):
        raise AssertionError("construction left L(Ω, P_f*(ℕ))")
    alpha = law(f)
    top = alpha[n * n + 1]
    return CounterexampleReport(
        n=n,
        distance_to_f0=distance(f, f0),
        support_size=len(alpha),
        mass_at_top=top,
        violates_U=top > Fraction(1, len(alpha)),
    )
