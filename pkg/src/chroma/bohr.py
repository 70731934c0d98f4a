"""Coloring Cayley graphs on F_p through the large spectrum and Bohr sets.

The route: threshold the Fourier coefficients of the indicator of A to get
the large spectrum L, pull it back through one equation coefficient to get
the frequency set Gamma, and partition F_p by discretizing the phases of
xi*u for xi in Gamma into M arcs.  Two vertices in the same cell differ by
an element of the Bohr set B(Gamma, rho); if A meets that Bohr set in fewer
than k points, every cell of Cay(F_p, A) has maximum degree at most 2(k-1)
and a greedy pass colors it with at most 2k-1 colors, for a total bounded
by (2k-1) * M^|Gamma| colors overall.

Everything is checked after the fact: the emitted coloring is re-validated
against the actual adjacency, whether or not the degree bound held.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import config
from .equations import Equation, dft, first_zero_sum_subset
from .exact import _as_fraction
from .groups import ElementSet, make_group
from .primes import is_prime, mod_inverse

__all__ = [
    "SpectrumParams",
    "BohrSet",
    "ColoringReport",
    "large_spectrum",
    "bohr_set",
    "claim_ab_test",
    "phase_partition",
    "bohr_color",
    "rho_from_supersaturation",
]


@dataclass(frozen=True)
class SpectrumParams:
    """Spectrum threshold nu, pullback index, and Bohr radius rho.

    nu in (0, 1] thresholds |hat 1_A|; rho in (0, 1/2) is the phase radius;
    M = ceil(2/rho) is the number of arcs in the phase discretization (at
    least 4 by the rho bound).  s_index, when given, fixes which equation
    coefficient pulls the spectrum back; by default the first index of the
    lexicographically first zero-sum subset of size >= 3 is used, and if the
    equation has none, an explicit s_index is required.
    """

    nu: float = 0.1
    rho: float = 0.05
    s_index: int | None = None

    def __post_init__(self):
        if not 0 < self.nu <= 1:
            raise ValueError("nu must lie in (0, 1]")
        rho = _as_fraction(self.rho)
        if not 0 < rho < Fraction(1, 2):
            raise ValueError("rho must lie in (0, 1/2)")

    @property
    def rho_exact(self) -> Fraction:
        return _as_fraction(self.rho)

    @property
    def arc_count(self) -> int:
        """M = ceil(2/rho) >= 4."""
        r = self.rho_exact
        return -(-2 * r.denominator // r.numerator)


def large_spectrum(a_set: ElementSet, nu: float) -> np.ndarray:
    """Frequencies where |hat 1_A| >= nu; sorted, always a subset of F_p.

    With f = 1_A, Parseval gives sum |hat f|^2 = |A|/p <= 1, so at most
    nu^-2 frequencies can pass the threshold.
    """
    g = a_set.group
    if g.rank != 1 or not is_prime(g.moduli[0]):
        raise ValueError("large_spectrum expects a set over a prime field")
    if not 0 < nu <= 1:
        raise ValueError("nu must lie in (0, 1]")
    coeffs = dft(a_set.mask().astype(np.float64))
    # Exactness at the boundary is float-limited; nudge by one ulp so that
    # coefficients mathematically equal to nu are kept.
    keep = np.abs(coeffs) >= nu * (1.0 - 1e-12)
    return np.flatnonzero(keep).astype(np.int64)


@dataclass(frozen=True)
class BohrSet:
    """B(Gamma, rho) = {x : every xi*x has phase within rho of an integer}."""

    p: int
    frequencies: tuple[int, ...]
    rho: Fraction
    members: ElementSet

    @property
    def count(self) -> int:
        return self.members.count


def bohr_set(frequencies, rho, p: int) -> BohrSet:
    """Exact membership: min(r, p - r) <= rho*p for r = xi*x mod p.

    The comparison runs over integers (r*q <= rho_num*p style), so float
    radii like 0.1 mean exactly 1/10.
    """
    freqs = tuple(sorted({int(f) % p for f in frequencies}))
    if not freqs:
        raise ValueError("frequency set must be nonempty")
    rho = _as_fraction(rho)
    xs = np.arange(p, dtype=np.int64)
    ok = np.ones(p, dtype=bool)
    num, den = rho.numerator, rho.denominator
    for xi in freqs:
        r = (xi * xs) % p
        ok &= np.minimum(r, p - r) * den <= num * p
    members = ElementSet.from_mask(make_group([p]), ok)
    return BohrSet(p, freqs, rho, members)


def claim_ab_test(a_set: ElementSet, bohr: BohrSet, k: int) -> tuple[bool, np.ndarray]:
    """Whether |A n B| < k; returns the intersection as evidence either way."""
    inter = a_set.intersection(bohr.members).indices()
    return inter.size < k, inter


def phase_partition(frequencies, arc_count: int, p: int) -> np.ndarray:
    """Cell labels from discretizing each phase circle into arc_count arcs.

    Row u holds (floor(M * (xi*u mod p) / p)) over the frequencies; vertices
    sharing a row lie in the same cell, and then for each frequency the two
    phases sit in one arc of width 1/M, giving |xi*(u - v)/p| within 2/M of
    an integer.
    """
    freqs = tuple(sorted({int(f) % p for f in frequencies}))
    if not freqs:
        raise ValueError("frequency set must be nonempty")
    if arc_count < 1:
        raise ValueError("arc_count must be positive")
    xs = np.arange(p, dtype=np.int64)
    cols = [(arc_count * ((xi * xs) % p)) // p for xi in freqs]
    return np.stack(cols, axis=1)


@dataclass(frozen=True)
class ColoringReport:
    """Everything bohr_color measured, ready for JSON serialization."""

    p: int
    k: int
    nu: float
    rho: Fraction
    arc_count: int
    s_index: int
    spectrum_size: int
    frequency_count: int
    bohr_size: int
    intersection_size: int
    claim_passed: bool
    cells: int
    max_cell_degree: int
    colors_used: int
    color_budget: int
    within_budget: bool
    proper: bool

    def to_report(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "nu": self.nu,
            "rho": str(self.rho),
            "arc_count": self.arc_count,
            "s_index": self.s_index,
            "spectrum_size": self.spectrum_size,
            "frequency_count": self.frequency_count,
            "bohr_size": self.bohr_size,
            "intersection_size": self.intersection_size,
            "claim_passed": self.claim_passed,
            "cells": self.cells,
            "max_cell_degree": self.max_cell_degree,
            "colors_used": self.colors_used,
            "color_budget": self.color_budget,
            "within_budget": self.within_budget,
            "proper": self.proper,
        }


def _pullback(spectrum: np.ndarray, c_s: int, p: int) -> np.ndarray:
    """Gamma = {eta : c_s * eta in L}, i.e. c_s^{-1} * L."""
    inv = mod_inverse(c_s % p, p)
    return np.unique((inv * spectrum) % p)


def _validate_coloring(a_mask: np.ndarray, colors: np.ndarray, p: int) -> bool:
    """Proper iff no difference of like-colored vertices lands in A u -A."""
    conn = np.flatnonzero(a_mask | a_mask[(-np.arange(p)) % p])
    conn = conn[conn != 0]
    for d in conn:
        if np.any(colors == np.roll(colors, -int(d))):
            return False
    return True


def bohr_color(a_set: ElementSet, eq: Equation,
               params: SpectrumParams | None = None) -> tuple[np.ndarray, ColoringReport]:
    """Proper-color Cay(F_p, A) cell by cell; returns (colors, report).

    Each phase cell gets a fresh palette and a greedy pass in vertex order,
    so cells never share colors and the total is the sum of per-cell counts.
    When the intersection test passes, per-cell degrees are at most 2(k-1)
    and the total stays within (2k-1) * M^|Gamma|; when it fails the greedy
    pass still terminates with a proper coloring, only the budget claim is
    dropped.  Properness is re-validated from scratch before returning.
    """
    if params is None:
        params = SpectrumParams()
    g = a_set.group
    if g.rank != 1 or not is_prime(g.moduli[0]):
        raise ValueError("bohr_color expects a set over a prime field")
    p = g.moduli[0]
    if p > config.DFT_CAP:
        raise ValueError(f"p = {p} exceeds the transform cap")
    k = eq.k

    s_index = params.s_index
    if s_index is None:
        subset = first_zero_sum_subset(eq, min_size=3)
        if subset is None:
            raise ValueError(
                "equation has no zero-sum subset of size >= 3; "
                "pass an explicit s_index"
            )
        s_index = subset[0]
    if not 0 <= s_index < k:
        raise ValueError(f"s_index {s_index} out of range")
    c_s = eq.coeffs[s_index]
    if c_s % p == 0:
        raise ValueError("chosen coefficient vanishes mod p")

    spectrum = large_spectrum(a_set, params.nu)
    if spectrum.size:
        frequencies = _pullback(spectrum, c_s, p)
    else:
        # Empty spectrum: fall back to the trivial frequency, one cell.
        frequencies = np.array([0], dtype=np.int64)
    arc_count = params.arc_count
    bohr = bohr_set(frequencies, params.rho_exact, p)
    claim_passed, intersection = claim_ab_test(a_set, bohr, k)

    cell_matrix = phase_partition(frequencies, arc_count, p)
    _, cell_of = np.unique(cell_matrix, axis=0, return_inverse=True)
    cell_of = cell_of.astype(np.int64)
    num_cells = int(cell_of.max()) + 1

    a_mask = a_set.mask()
    conn = np.flatnonzero(a_mask | a_mask[(-np.arange(p)) % p])
    conn = conn[conn != 0]

    order = np.argsort(cell_of, kind="stable")
    bounds = np.flatnonzero(np.diff(cell_of[order])) + 1
    groups = np.split(order, bounds)

    colors = np.full(p, -1, dtype=np.int64)
    next_color = 0
    max_cell_degree = 0
    for verts in groups:
        cid = cell_of[verts[0]]
        local: dict[int, int] = {}
        used_here = 0
        for v in verts:
            nbrs = (v + conn) % p
            nbrs = nbrs[cell_of[nbrs] == cid]
            max_cell_degree = max(max_cell_degree, int(nbrs.size))
            taken = {local[u] for u in nbrs.tolist() if u in local}
            c = 0
            while c in taken:
                c += 1
            local[int(v)] = c
            used_here = max(used_here, c + 1)
        for v, c in local.items():
            colors[v] = next_color + c
        next_color += used_here

    budget = (2 * k - 1) * arc_count ** len(frequencies)
    proper = _validate_coloring(a_mask, colors, p)
    report = ColoringReport(
        p=p, k=k, nu=params.nu, rho=params.rho_exact, arc_count=arc_count,
        s_index=s_index, spectrum_size=int(spectrum.size),
        frequency_count=int(len(frequencies)), bohr_size=bohr.count,
        intersection_size=int(intersection.size), claim_passed=claim_passed,
        cells=num_cells, max_cell_degree=max_cell_degree,
        colors_used=next_color, color_budget=budget,
        within_budget=next_color <= budget, proper=proper,
    )
    return colors, report


def rho_from_supersaturation(delta: float, eq: Equation,
                             zero_sum_subset: tuple[int, ...]) -> tuple[float, float]:
    """(nu, rho) from a supersaturation constant delta for the given subset.

    nu = delta/6 and rho = delta^3 / (216*pi*D') where D' sums |c_i| outside
    the zero-sum subset.  delta itself comes from a removal-lemma argument
    and is not computable here; this helper just applies the two formulas.
    """
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    outside = [c for i, c in enumerate(eq.coeffs) if i not in set(zero_sum_subset)]
    d_out = sum(abs(c) for c in outside)
    if d_out == 0:
        raise ValueError(
            "zero-sum subset covers every index; the phase partition route "
            "is not needed in that regime"
        )
    nu = delta / 6
    rho = delta ** 3 / (216 * math.pi * d_out)
    return nu, rho
