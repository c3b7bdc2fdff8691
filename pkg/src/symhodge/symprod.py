"""Mixed Hodge polynomials of symmetric products Sym^n X and related quotients.

There are three independent evaluators of mu(Sym^n X):

``sym_mhp_det``
    averages ``prod_i det(I + w_i M_sigma)^{r_i}`` over the conjugacy classes
    of S_n, working one generator family at a time (mu_X is never expanded);
``sym_mhp_partition``
    expands mu_X first and sums ``prod_j mu_X(-(-t)^j, u^j, v^j)^{a_j} / (a_j! j^{a_j})``
    over partitions, never building a determinant;
``sym_mhp_cheah``
    reads the z^n coefficient of Cheah's product
    ``prod (1 - (-1)^k u^p v^q t^k z)^{(-1)^{k+1} h^{k;p,q}}`` over the Hodge table.

All three must agree exactly; :func:`sym_mhp_all` runs them together.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .hodgecore import ExteriorPresentation, HodgeTable, compact_duality, hodge_table, mhp
from .polyring import ONE, IntegralityError, Monomial, TriPoly, ZSeries, poly_sum
from .symgroup import (
    ClassLabel,
    CycleType,
    Partition,
    PermutationWord,
    as_cycle_type,
    class_size,
    det_eval,
    mn_character,
    partitions_of,
    perm_to_cycle_type,
)

METHODS = ("det", "partition", "cheah")


class SubgroupError(ValueError):
    """The given permutations do not form a subgroup of S_n."""


class PathDisagreement(AssertionError):
    """Independent evaluators returned different polynomials."""


def default_workers() -> int:
    """Thread cap from ``SYMHODGE_THREADS`` (1 when unset or invalid)."""
    raw = os.environ.get("SYMHODGE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parallel_map(fn: Callable, items: Sequence, workers: int | None) -> list:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def class_average(weighted: Iterable[tuple[int, TriPoly]], group_order: int) -> TriPoly:
    """``(1/|G|) sum count * value``, raising IntegralityError on any remainder."""
    total = poly_sum(value * count for count, value in weighted)
    try:
        return total.exact_div(group_order)
    except IntegralityError as exc:
        raise IntegralityError(f"class average not integral (group order {group_order}): {exc}") from None


@dataclass(frozen=True)
class SymResult:
    n: int
    poly: TriPoly
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not self.poly.is_nonnegative():
            raise IntegralityError(f"negative coefficient in Sym^{self.n} result ({self.method})")

    def to_dict(self) -> dict:
        return {"n": self.n, "method": self.method, "poly": self.poly.to_records()}


# -- equivariant data -------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of S_n with TriPoly values."""

    n: int
    values: Mapping[CycleType, TriPoly]

    def __post_init__(self):
        vals = {as_cycle_type(c): v for c, v in dict(self.values).items()}
        expected = {p.cycle_type() for p in partitions_of(self.n)}
        if set(vals) != expected:
            raise ValueError(f"class function on S_{self.n} must be defined on every class")
        ordered = {p.cycle_type(): vals[p.cycle_type()] for p in partitions_of(self.n)}
        object.__setattr__(self, "values", ordered)

    def __getitem__(self, c: ClassLabel) -> TriPoly:
        return self.values[as_cycle_type(c)]

    def items(self):
        return self.values.items()

    def identity_value(self) -> TriPoly:
        return self[CycleType.identity(self.n)]

    @classmethod
    def constant(cls, n: int, value: TriPoly | int) -> "ClassFunction":
        if isinstance(value, int):
            value = TriPoly.constant(value)
        return cls(n, {p.cycle_type(): value for p in partitions_of(n)})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [{"class": c.to_text(), "poly": v.to_records()} for c, v in self.values.items()],
        }


def _class_value(pres: ExteriorPresentation, c: CycleType, *, weighted: bool = True, sign: int = 1) -> TriPoly:
    value = ONE
    for f in pres.families:
        w = f.signature if weighted else Monomial(f.d, 0, 0)
        value = value * det_eval(c, w, sign) ** f.r
    return value


def equivariant_class_function(
    pres: ExteriorPresentation, n: int, workers: int | None = None
) -> ClassFunction:
    """Character of S_n on H^*(X^n), graded by (k; p, q).

    At a class c the value is ``prod_i det(I + t^d_i u^p_i v^q_i M_c)^{r_i}``,
    the graded trace of a permutation of type c on the exterior algebra.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    classes = [p.cycle_type() for p in partitions_of(n)]
    values = _parallel_map(lambda c: _class_value(pres, c), classes, workers)
    return ClassFunction(n, dict(zip(classes, values)))


def dimension_check(cf: ClassFunction, pres: ExteriorPresentation) -> TriPoly:
    """Return the value at the identity, checking it equals mu_X^n (Kunneth)."""
    value = cf.identity_value()
    if value != mhp(pres) ** cf.n:
        raise AssertionError("class function at the identity does not match mu_X^n")
    return value


def trivial_multiplicity(cf: ClassFunction) -> TriPoly:
    return class_average(((class_size(c), v) for c, v in cf.items()), factorial(cf.n))


def isotypic_multiplicity(cf: ClassFunction, lam: Partition | Sequence[int]) -> TriPoly:
    """Graded multiplicity of the irreducible S_n-module indexed by ``lam``."""
    if not isinstance(lam, Partition):
        lam = Partition.of(lam)
    if lam.n != cf.n:
        raise ValueError(f"partition of {lam.n} does not index an irreducible of S_{cf.n}")
    result = class_average(
        ((class_size(c) * mn_character(lam, c), v) for c, v in cf.items()), factorial(cf.n)
    )
    if not result.is_nonnegative():
        raise IntegralityError(f"negative multiplicity for {lam.to_text()}: {result}")
    return result


# -- the three evaluators ---------------------------------------------------


def sym_mhp_det(pres: ExteriorPresentation, n: int, workers: int | None = None) -> SymResult:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SymResult(0, ONE, "det")
    classes = partitions_of(n)

    def term(p: Partition) -> tuple[int, TriPoly]:
        c = p.cycle_type()
        return class_size(c), _class_value(pres, c)

    poly = class_average(_parallel_map(term, classes, workers), factorial(n))
    return SymResult(n, poly, "det")


def sym_mhp_partition(pres: ExteriorPresentation, n: int) -> SymResult:
    if n < 0:
        raise ValueError("n must be nonnegative")
    mu = mhp(pres)
    substituted: dict[int, TriPoly] = {}
    total = []
    for lam in partitions_of(n):
        # scaled by n! so the weight prod 1/(a_j! j^a_j) stays integral until the end
        mult = lam.cycle_type()
        denom = 1
        for j, a in mult.items():
            denom *= factorial(a) * j**a
        weight = factorial(n) // denom
        value = ONE
        for j, a in mult.items():
            if j not in substituted:
                substituted[j] = mu.substitute_power(j)
            value = value * substituted[j] ** a
        total.append((weight, value))
    return SymResult(n, class_average(total, factorial(n)), "partition")


def cheah_series(table: HodgeTable, order: int, variant: str = "ordinary") -> ZSeries:
    """Cheah's generating series sum_n mu(Sym^n X) z^n, truncated at z^order.

    ``variant="compact"`` gives the compactly supported series; an ordinary
    table is first dualised using its ``dim``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if variant == "ordinary":
        if table.compact:
            raise ValueError("ordinary series requested from a compactly supported table")
    elif variant == "compact":
        if not table.compact:
            table = compact_duality(table)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    series = ZSeries.one(order)
    for (k, p, q), h in table.items():
        sign = 1 if k % 2 else -1
        factor = ZSeries.linear(order, ONE, TriPoly({Monomial(k, p, q): sign}))
        exponent = h if k % 2 else -h
        series = series * factor**exponent
    return series


def sym_mhp_cheah(pres: ExteriorPresentation, n: int) -> SymResult:
    if n < 0:
        raise ValueError("n must be nonnegative")
    series = cheah_series(hodge_table(pres), n, "ordinary")
    return SymResult(n, series.coeff(n), "cheah")


_EVALUATORS = {
    "det": sym_mhp_det,
    "partition": sym_mhp_partition,
    "cheah": sym_mhp_cheah,
}


def sym_mhp(pres: ExteriorPresentation, n: int, method: str = "det") -> SymResult:
    try:
        fn = _EVALUATORS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}") from None
    return fn(pres, n)


def sym_mhp_all(pres: ExteriorPresentation, n: int) -> list[SymResult]:
    """Run every evaluator; raise PathDisagreement unless all polynomials match."""
    results = [sym_mhp(pres, n, m) for m in METHODS]
    ref = results[0].poly
    for r in results[1:]:
        if r.poly != ref:
            raise PathDisagreement(
                f"Sym^{n}: det gives {ref} but {r.method} gives {r.poly}"
            )
    return results


# -- specialisations with their own det path --------------------------------


def sym_poincare(pres: ExteriorPresentation, n: int) -> TriPoly:
    """Poincare polynomial of Sym^n X, from determinants with weights dropped."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    terms = []
    for p in partitions_of(n):
        c = p.cycle_type()
        terms.append((class_size(c), _class_value(pres, c, weighted=False)))
    return class_average(terms, factorial(n))


def sym_epoly(pres: ExteriorPresentation, n: int) -> TriPoly:
    """E-polynomial mu(Sym^n X)(-1, u, v).

    With t = -1 and odd d each generator weight is ``-u^p v^q``, so the
    determinant is ``det(I - u^p v^q M_sigma)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    terms = []
    for p in partitions_of(n):
        c = p.cycle_type()
        value = ONE
        for f in pres.families:
            value = value * det_eval(c, Monomial(0, f.p, f.q), -1) ** f.r
        terms.append((class_size(c), value))
    return class_average(terms, factorial(n))


# -- quotients by subgroups -------------------------------------------------


def check_subgroup(n: int, elements: Iterable[PermutationWord | Sequence[int]]) -> list[PermutationWord]:
    """Deduplicate and validate: nonempty, degree n, contains identity, closed."""
    group: list[PermutationWord] = []
    seen = set()
    for w in elements:
        if not isinstance(w, PermutationWord):
            w = PermutationWord(tuple(w))
        if w.n != n:
            raise SubgroupError(f"permutation {w} has degree {w.n}, expected {n}")
        if w not in seen:
            seen.add(w)
            group.append(w)
    if not group:
        raise SubgroupError("subgroup must be nonempty")
    if PermutationWord.identity(n) not in seen:
        raise SubgroupError("subgroup must contain the identity")
    for a in group:
        for b in group:
            ab = a.compose(b)
            if ab not in seen:
                raise SubgroupError(f"not closed under composition: {a} * {b} = {ab}")
    return group


def quotient_by_subgroup(
    pres: ExteriorPresentation, n: int, elements: Iterable[PermutationWord | Sequence[int]]
) -> TriPoly:
    """Mixed Hodge polynomial of X^n / H for an explicit subgroup H of S_n."""
    group = check_subgroup(n, elements)
    counts: dict[CycleType, int] = {}
    for h in group:
        c = perm_to_cycle_type(h)
        counts[c] = counts.get(c, 0) + 1
    return class_average(((cnt, _class_value(pres, c)) for c, cnt in counts.items()), len(group))


def parse_subgroup(text: str) -> list[PermutationWord]:
    """One permutation per line in bracket notation; blank lines and ``#`` comments skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(PermutationWord.parse(line))
    return out
