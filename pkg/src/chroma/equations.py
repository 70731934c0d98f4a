"""Homogeneous linear equations c1*x1 + ... + ck*xk = 0 over finite groups.

The module classifies equations by their zero-sum subset structure, tests
whether a subset of a prime field is free of injective solutions, and counts
solutions two independent ways: exact brute-force convolution and a
Fourier-analytic counter (the two are cross-checked in the test suite).

Counting conventions: the Fourier counter and the default brute counter count
all tuples in A^k, coordinates not necessarily distinct.  Injective counting
(pairwise-distinct coordinates) is available behind the `injective` flag.
"""

from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import config
from .groups import ElementSet, GroupElement, GroupSpec
from .primes import is_prime, mod_inverse

__all__ = [
    "Equation",
    "EquationClass",
    "SolutionFreeResult",
    "classify",
    "first_zero_sum_subset",
    "is_solution_free",
    "count_solutions_brute",
    "count_solutions_brute_all",
    "count_solutions_dft",
    "count_solutions_dft_all",
    "dft",
    "idft",
]


@dataclass(frozen=True)
class Equation:
    """Integer coefficient vector (c1, ..., ck), k >= 3, all nonzero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 3:
            raise ValueError("an equation needs at least 3 variables")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("zero coefficients are not allowed")

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @property
    def coeff_sum(self) -> int:
        return sum(self.coeffs)

    @property
    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    @property
    def max_abs_coeff(self) -> int:
        return max(abs(c) for c in self.coeffs)

    @staticmethod
    def parse(text: str) -> "Equation":
        """Parse "[1, 1, -1]" or "1*x1 + 1*x2 - 1*x3 = 0"."""
        text = text.strip()
        if text.startswith("["):
            vals = ast.literal_eval(text)
            if not isinstance(vals, (list, tuple)):
                raise ValueError(f"bad equation literal {text!r}")
            return Equation(tuple(int(v) for v in vals))
        lhs, _, rhs = text.partition("=")
        if rhs and rhs.strip() != "0":
            raise ValueError("equation right-hand side must be 0")
        found: dict[int, int] = {}
        compact = lhs.replace(" ", "")
        pos = 0
        for m in re.finditer(r"([+-]?)(\d*)\*?x(\d+)", compact):
            if m.start() != pos:
                raise ValueError(f"cannot parse equation near {compact[pos:]!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            idx = int(m.group(3))
            if idx in found:
                raise ValueError(f"variable x{idx} appears twice")
            found[idx] = sign * coeff
        if pos != len(compact) or not found:
            raise ValueError(f"cannot parse equation {text!r}")
        k = len(found)
        if sorted(found) != list(range(1, k + 1)):
            raise ValueError("variables must be x1..xk with no gaps")
        return Equation(tuple(found[i] for i in range(1, k + 1)))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            sign = "-" if c < 0 else ("+" if i > 1 else "")
            mag = abs(c)
            terms.append(f"{sign}{' ' if i > 1 else ''}{mag}*x{i}")
        return " ".join(terms) + " = 0"


@dataclass(frozen=True)
class EquationClass:
    """Degeneracy flags derived from zero-sum subsets of the coefficients.

    roth_degenerate:  the full coefficient sum is 0.
    rt_degenerate:    some nonempty subset of coefficients sums to 0.
    chi_vanishing:    some subset of size >= 3 sums to 0.

    Implications (validated in tests): roth => chi_vanishing => rt.
    """

    roth_degenerate: bool
    rt_degenerate: bool
    chi_vanishing: bool
    rt_witness: tuple[int, ...] | None
    chi_witness: tuple[int, ...] | None

    @property
    def witness_subset(self) -> tuple[int, ...] | None:
        """A zero-sum witness: size >= 3 if one exists, else any nonempty one."""
        return self.chi_witness if self.chi_witness is not None else self.rt_witness

    def to_report(self) -> dict:
        return {
            "roth": self.roth_degenerate,
            "rt": self.rt_degenerate,
            "chi_vanishing": self.chi_vanishing,
            "witness_subset": list(self.witness_subset)
            if self.witness_subset is not None
            else None,
        }


_CLASSIFY_MAX_K = 30


def _subset_sums(coeffs: Sequence[int], offset: int) -> dict[int, dict[int, int]]:
    """sum -> {subset size -> one witness bitmask}, over all subsets."""
    table: dict[int, dict[int, int]] = {}
    h = len(coeffs)
    for mask in range(1 << h):
        s = 0
        size = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                s += coeffs[i]
                size += 1
            m >>= 1
            i += 1
        sizes = table.setdefault(s, {})
        if size not in sizes:
            sizes[size] = mask << offset
    return table


def classify(eq: Equation) -> EquationClass:
    """Exact classification by zero-sum subsets (all 2^k - 1 nonempty subsets).

    Runs as a meet-in-the-middle scan over the two coefficient halves, which
    covers the same subsets as a direct enumeration at ~2^(k/2) cost.
    """
    k = eq.k
    if k > _CLASSIFY_MAX_K:
        raise ValueError(f"classification supports k <= {_CLASSIFY_MAX_K}, got {k}")
    half = k // 2
    left = _subset_sums(eq.coeffs[:half], 0)
    right = _subset_sums(eq.coeffs[half:], half)

    rt_mask = None
    chi_mask = None
    for s, left_sizes in left.items():
        right_sizes = right.get(-s)
        if right_sizes is None:
            continue
        for zl, lmask in left_sizes.items():
            for zr, rmask in right_sizes.items():
                size = zl + zr
                if size >= 1 and rt_mask is None:
                    rt_mask = lmask | rmask
                if size >= 3 and chi_mask is None:
                    chi_mask = lmask | rmask
        if rt_mask is not None and chi_mask is not None:
            break

    def mask_to_subset(mask):
        if mask is None:
            return None
        return tuple(i for i in range(k) if mask >> i & 1)

    return EquationClass(
        roth_degenerate=(eq.coeff_sum == 0),
        rt_degenerate=rt_mask is not None,
        chi_vanishing=chi_mask is not None,
        rt_witness=mask_to_subset(rt_mask),
        chi_witness=mask_to_subset(chi_mask),
    )


def first_zero_sum_subset(eq: Equation, min_size: int = 3) -> tuple[int, ...] | None:
    """Lexicographically first index subset of size >= min_size summing to 0.

    Subsets are ordered as sorted index tuples ((0,1,2) < (0,1,2,3) < (0,1,3)).
    """
    k = eq.k
    if k > 24:
        raise ValueError("lexicographic subset scan supports k <= 24")
    coeffs = eq.coeffs
    found: list[tuple[int, ...]] = []

    def dfs(start: int, prefix: list[int], total: int) -> tuple[int, ...] | None:
        if len(prefix) >= min_size and total == 0:
            return tuple(prefix)
        for i in range(start, k):
            prefix.append(i)
            hit = dfs(i + 1, prefix, total + coeffs[i])
            if hit is not None:
                return hit
            prefix.pop()
        return None

    return dfs(0, [], 0)


# ---------------------------------------------------------------------------
# Injective solution search over prime fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolutionFreeResult:
    free: bool
    witness: tuple[int, ...] | None   # field elements, one per variable

    def __bool__(self) -> bool:
        return self.free


def _require_prime_field(eq: Equation, A: ElementSet) -> int:
    g = A.group
    if g.rank != 1:
        raise ValueError("solution-free testing expects a single cyclic factor Z_p")
    p = g.moduli[0]
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p <= eq.max_abs_coeff:
        raise ValueError(
            f"modulus {p} must exceed the largest coefficient magnitude "
            f"{eq.max_abs_coeff}"
        )
    return p


def _require_invertible_modulus(eq: Equation, A: ElementSet) -> int:
    """Cyclic modulus with every coefficient invertible (prime not required)."""
    g = A.group
    if g.rank != 1:
        raise ValueError("solution-free testing expects a single cyclic factor")
    mod = g.moduli[0]
    for c in eq.coeffs:
        if math.gcd(c, mod) != 1:
            raise ValueError(
                f"coefficient {c} is not invertible modulo {mod}"
            )
    return mod


def _verify_witness(eq: Equation, p: int, xs: Sequence[int]) -> None:
    assert len(set(xs)) == len(xs), "witness is not injective"
    assert sum(c * x for c, x in zip(eq.coeffs, xs)) % p == 0, "witness not a solution"


def is_solution_free(eq: Equation, A: ElementSet) -> SolutionFreeResult:
    """True iff no injective tuple in A^k solves the equation modulo |G|.

    Works over any cyclic group whose order is coprime to all coefficients
    (prime fields and products of large primes alike).  Strategy: vectorized
    final-coordinate scan for k=3, meet-in-the-middle over coordinate halves
    for k=4, DFS with a final-coordinate lookup beyond.  Any returned witness
    is re-verified before being handed back.
    """
    p = _require_invertible_modulus(eq, A)
    elems = A.indices()
    n = elems.size
    if n < eq.k:
        return SolutionFreeResult(True, None)

    witness = None
    if eq.k == 3:
        witness = _find_injective_k3(eq, p, elems, A.mask())
    elif eq.k == 4 and n * n <= 4_000_000:
        witness = _find_injective_mitm4(eq, p, elems)
    else:
        if n ** (eq.k - 1) > config.BRUTE_TUPLE_CAP:
            raise ValueError(
                f"|A|^(k-1) = {n}^{eq.k - 1} exceeds the brute-force cap"
            )
        witness = _find_injective_dfs(eq, p, elems)

    if witness is None:
        return SolutionFreeResult(True, None)
    _verify_witness(eq, p, witness)
    return SolutionFreeResult(False, tuple(witness))


def _find_injective_k3(eq, p, elems, in_a):
    c1, c2, c3 = eq.coeffs
    inv3 = mod_inverse(c3, p)
    block = max(1, 4_000_000 // max(1, elems.size))
    for lo in range(0, elems.size, block):
        e1 = elems[lo:lo + block, None]
        e2 = elems[None, :]
        x3 = (-inv3 * (c1 * e1 + c2 * e2)) % p
        ok = in_a[x3] & (x3 != e1) & (x3 != e2) & (e1 != e2)
        if ok.any():
            i, j = np.argwhere(ok)[0]
            return (int(e1[i, 0]), int(elems[j]), int(x3[i, j]))
    return None


def _find_injective_mitm4(eq, p, elems):
    c1, c2, c3, c4 = eq.coeffs
    n = elems.size
    ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    distinct = ii != jj
    ii, jj = ii[distinct], jj[distinct]
    left_sum = (c1 * elems[ii] + c2 * elems[jj]) % p
    right_sum = (c3 * elems[ii] + c4 * elems[jj]) % p
    order = np.argsort(left_sum, kind="stable")
    ls, li, lj = left_sum[order], ii[order], jj[order]
    want = (-right_sum) % p
    starts = np.searchsorted(ls, want, side="left")
    ends = np.searchsorted(ls, want, side="right")
    for r in range(want.size):
        a, b = starts[r], ends[r]
        if a == b:
            continue
        x3, x4 = elems[ii[r]], elems[jj[r]]
        for t in range(a, b):
            x1, x2 = elems[li[t]], elems[lj[t]]
            if len({int(x1), int(x2), int(x3), int(x4)}) == 4:
                return (int(x1), int(x2), int(x3), int(x4))
    return None


def _find_injective_dfs(eq, p, elems):
    k = eq.k
    ck = eq.coeffs[-1]
    by_value: dict[int, list[int]] = {}
    for a in elems.tolist():
        by_value.setdefault((ck * a) % p, []).append(a)
    pool = elems.tolist()

    def rec(depth: int, chosen: list[int], acc: int):
        if depth == k - 1:
            for a in by_value.get((-acc) % p, ()):
                if a not in chosen:
                    return (*chosen, a)
            return None
        c = eq.coeffs[depth]
        for a in pool:
            if a in chosen:
                continue
            chosen.append(a)
            hit = rec(depth + 1, chosen, (acc + c * a) % p)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(0, [], 0)


# ---------------------------------------------------------------------------
# Exact counting
# ---------------------------------------------------------------------------


def _as_target_index(group: GroupSpec, y) -> int:
    if isinstance(y, GroupElement):
        return group.index(y)
    return int(y) % group.order


def count_solutions_brute_all(eq: Equation, A: ElementSet, injective: bool = False) -> np.ndarray:
    """Exact count table N(y) for every y in the group. Integer arithmetic only."""
    group = A.group
    if not injective:
        return _conv_count_table(group, eq.coeffs, A)
    if eq.k <= 5:
        return _injective_by_partitions(group, eq, A)
    return _injective_by_enumeration(group, eq, A)


def count_solutions_brute(eq: Equation, A: ElementSet, y, injective: bool = False) -> int:
    """Exact number of (injective) tuples in A^k with sum_i c_i x_i = y."""
    table = count_solutions_brute_all(eq, A, injective=injective)
    return int(table[_as_target_index(A.group, y)])


def _conv_count_table(group: GroupSpec, coeffs: Sequence[int], A: ElementSet) -> np.ndarray:
    """Iterated shift-and-add convolution; exact in int64.

    Cost is |A| * order per coefficient; guarded by the brute-force cap.
    """
    idx = A.indices()
    work = len(coeffs) * idx.size * group.order
    if work > config.BRUTE_TUPLE_CAP * 32:
        raise ValueError("convolution count exceeds the brute-force work cap")
    shape = group.moduli
    acc = np.zeros(shape, dtype=np.int64)
    acc.flat[0] = 1
    coords = group.indices_to_coords(idx)
    for c in coeffs:
        if c == 0:
            acc = acc * idx.size  # free variable ranging over A
            continue
        nxt = np.zeros_like(acc)
        for a in coords:
            shift = tuple(int((c * ai) % ni) for ai, ni in zip(a, shape))
            nxt += np.roll(acc, shift, axis=tuple(range(len(shape))))
        acc = nxt
    return acc.reshape(group.order)


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _injective_by_partitions(group: GroupSpec, eq: Equation, A: ElementSet) -> np.ndarray:
    """Inclusion-exclusion over coordinate-equality partitions (k <= 5)."""
    total = np.zeros(group.order, dtype=np.int64)
    size = len(A.indices())
    for part in _set_partitions(tuple(range(eq.k))):
        merged = [sum(eq.coeffs[i] for i in block) for block in part]
        mu = 1
        for block in part:
            b = len(block)
            mu *= (-1) ** (b - 1) * math.factorial(b - 1)
        free = sum(1 for c in merged if c == 0)
        kept = [c for c in merged if c != 0]
        if kept:
            table = _conv_count_table(group, kept, A)
        else:
            table = np.zeros(group.order, dtype=np.int64)
            table[0] = 1
        total += mu * (size ** free) * table
    return total


def _injective_by_enumeration(group: GroupSpec, eq: Equation, A: ElementSet) -> np.ndarray:
    idx = A.indices()
    n = idx.size
    if n ** eq.k > config.BRUTE_TUPLE_CAP:
        raise ValueError("injective enumeration exceeds the brute-force cap")
    out = np.zeros(group.order, dtype=np.int64)
    elems = [group.from_index(int(i)) for i in idx]

    def rec(depth, used, acc: GroupElement):
        if depth == eq.k:
            out[group.index(acc)] += 1
            return
        c = eq.coeffs[depth]
        for t, e in enumerate(elems):
            if used[t]:
                continue
            used[t] = True
            rec(depth + 1, used, group.add(acc, group.scalar_mul(c, e)))
            used[t] = False

    rec(0, [False] * n, group.zero())
    return out


# ---------------------------------------------------------------------------
# Fourier counting
# ---------------------------------------------------------------------------


def dft(values: np.ndarray, cap: int = config.DFT_CAP) -> np.ndarray:
    """Normalized transform fhat(xi) = (1/p) * sum_x f(x) e(-x*xi/p).

    Implemented with an FFT; identical (up to rounding) to the direct O(p^2)
    sum, which the test suite keeps as an oracle.  `cap` bounds the length.
    """
    values = np.asarray(values)
    p = values.shape[0]
    if p > cap:
        raise ValueError(f"transform length {p} exceeds cap {cap}")
    return np.fft.fft(values) / p


def idft(table: np.ndarray) -> np.ndarray:
    """Inverse of dft: f(x) = sum_xi fhat(xi) e(x*xi/p)."""
    table = np.asarray(table)
    return np.fft.ifft(table) * table.shape[0]


def _dft_product(eq: Equation, A: ElementSet, cap: int) -> tuple[int, np.ndarray]:
    p = _require_prime_field(eq, A)
    if p > cap:
        raise ValueError(f"p = {p} exceeds the transform cap {cap}")
    ahat = dft(A.mask().astype(np.float64), cap=cap)
    xi = np.arange(p, dtype=np.int64)
    prod = np.ones(p, dtype=np.complex128)
    for c in eq.coeffs:
        prod *= ahat[(c * xi) % p]
    return p, prod


def count_solutions_dft_all(eq: Equation, A: ElementSet,
                            cap: int = config.DFT_CAP) -> np.ndarray:
    """All-targets Fourier solution count, rounded to exact integers.

    Raises ArithmeticError if any rounded value strays from an integer by more
    than 1e-6 * p^(k-1) (the documented instability tolerance).
    """
    p, prod = _dft_product(eq, A, cap)
    raw = (p ** (eq.k - 1)) * idft(prod)
    tol = 1e-6 * p ** (eq.k - 1)
    rounded = np.rint(raw.real)
    if np.abs(raw.real - rounded).max() > tol or np.abs(raw.imag).max() > tol:
        raise ArithmeticError(
            "Fourier solution count did not round cleanly to integers; "
            "instability beyond the documented tolerance"
        )
    return rounded.astype(np.int64)


def count_solutions_dft(eq: Equation, A: ElementSet, y,
                        cap: int = config.DFT_CAP) -> int:
    """Fourier solution count of sum_i c_i x_i = y over A^k (not injective)."""
    table = count_solutions_dft_all(eq, A, cap=cap)
    return int(table[_as_target_index(A.group, y)])
