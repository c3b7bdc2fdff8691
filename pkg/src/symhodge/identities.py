"""Truncation-level checks of generating-function identities for Sym^n of groups.

Each checker builds both sides as ZSeries up to a chosen order and compares
them coefficientwise.  Right-hand sides are products of factors
``(1 - s * mono * z)^e`` described by an exponent map, see :func:`product_series`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Mapping, Sequence

from .hodgecore import hodge_table, lag
from .polyring import ONE, Monomial, TriPoly, ZSeries
from .symgroup import class_size, det_eval, partitions_of
from .symprod import cheah_series, class_average, sym_mhp_det, sym_poincare


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: ZSeries
    rhs: ZSeries
    equal: bool
    first_discrepancy: tuple[int, TriPoly] | None = None

    def to_text(self) -> str:
        head = f"{self.name}: {'PASS' if self.equal else 'FAIL'} (order {self.lhs.order})"
        if self.first_discrepancy is None:
            return head
        n, diff = self.first_discrepancy
        return f"{head}\n  first discrepancy at z^{n}: lhs - rhs = {diff}"

    def to_dict(self) -> dict:
        out = {
            "identity": self.name,
            "order": self.lhs.order,
            "equal": self.equal,
            "lhs": [c.to_records() for c in self.lhs.coeffs],
            "rhs": [c.to_records() for c in self.rhs.coeffs],
            "first_discrepancy": None,
        }
        if self.first_discrepancy is not None:
            n, diff = self.first_discrepancy
            out["first_discrepancy"] = {"power": n, "difference": diff.to_records()}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def compare_series(lhs: ZSeries, rhs: ZSeries, name: str = "identity") -> IdentityReport:
    if lhs.order != rhs.order:
        raise ValueError(f"order mismatch: {lhs.order} vs {rhs.order}")
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return IdentityReport(name, lhs, rhs, False, (n, a - b))
    return IdentityReport(name, lhs, rhs, True)


def product_series(exponents: Mapping[tuple[Monomial, int], int], order: int) -> ZSeries:
    """``prod (1 - s * mono * z)^e`` over ``{(mono, s): e}`` truncated at z^order."""
    out = ZSeries.one(order)
    for (mono, s), e in sorted(exponents.items()):
        if e:
            factor = ZSeries.linear(order, ONE, TriPoly({Monomial(*mono): -s}))
            out = out * factor**e
    return out


def p_odd(m: int, k: int) -> int:
    """Partitions of k into distinct odd parts, none larger than 2m-1."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")

    def count(rest: int, largest: int) -> int:
        if rest == 0:
            return 1
        return sum(count(rest - part, part - 2) for part in range(min(largest, rest), 0, -1) if part % 2)

    return count(k, 2 * m - 1)


def subset_count(degrees: Sequence[int], k: int) -> int:
    """Number of sub-multisets (by position) of ``degrees`` summing to k."""
    if any(d % 2 == 0 for d in degrees):
        raise ValueError("all degrees must be odd")
    if k < 0:
        return 0
    ways = [1] + [0] * k
    for d in degrees:
        for s in range(k, d - 1, -1):
            ways[s] += ways[s - d]
    return ways[k]


def _lag_degrees(r: Sequence[int]) -> list[int]:
    return [2 * i - 1 for i, ri in enumerate(r, 1) for _ in range(ri)]


def betti_exponents(r: Sequence[int]) -> dict[tuple[Monomial, int], int]:
    """Exponent map of the Betti-number product ``prod_k (1 - (-1)^k t^k z)^{(-1)^{k+1} b_k}``."""
    degrees = _lag_degrees(r)
    out = {}
    for k in range(sum(degrees) + 1):
        b = subset_count(degrees, k)
        if b:
            out[(Monomial(k, 0, 0), (-1) ** k)] = (-1) ** (k + 1) * b
    return out


def combgl_exponents(m: int) -> dict[tuple[Monomial, int], int]:
    """Exponent map of ``prod_k (1 - t^k z)^{(-1)^{k+1} p_odd(m, k)}``."""
    out = {}
    for k in range(m * m + 1):
        c = p_odd(m, k)
        if c:
            out[(Monomial(k, 0, 0), 1)] = (-1) ** (k + 1) * c
    return out


def check_betti_identity(r: Sequence[int], order: int) -> IdentityReport:
    """Poincare series of Sym^n G against the Betti-number product."""
    pres = lag(r)
    lhs = ZSeries(order, [sym_poincare(pres, n) for n in range(order + 1)])
    rhs = product_series(betti_exponents(r), order)
    return compare_series(lhs, rhs, f"betti r={tuple(r)}")


def _combgl_coeff(m: int, n: int) -> TriPoly:
    if n == 0:
        return ONE
    terms = []
    for lam in partitions_of(n):
        c = lam.cycle_type()
        value = ONE
        for i in range(1, m + 1):
            value = value * det_eval(c, Monomial(2 * i - 1, 0, 0), -1)
        terms.append((class_size(c), value))
    return class_average(terms, factorial(n))


def check_combgl(m: int, order: int) -> IdentityReport:
    """Averaged ``prod_i det(I - t^{2i-1} M)`` against the p_odd product."""
    if m < 1:
        raise ValueError("m must be positive")
    lhs = ZSeries(order, [_combgl_coeff(m, n) for n in range(order + 1)])
    rhs = product_series(combgl_exponents(m), order)
    return compare_series(lhs, rhs, f"combgl m={m}")


def check_cheahfls(r: Sequence[int], order: int) -> IdentityReport:
    """Two-variable (t, x) identity for groups with weights (i, i).

    x stands for uv; since p = q everywhere it is realised by u = x, v = 1.
    """
    pres = lag(r)
    lhs = ZSeries(order, [sym_mhp_det(pres, n).poly.specialize(v=1) for n in range(order + 1)])
    rhs = cheah_series(hodge_table(pres), order).map(lambda c: c.specialize(v=1))
    return compare_series(lhs, rhs, f"cheahfls r={tuple(r)}")

