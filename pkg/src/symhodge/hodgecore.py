"""Exterior-algebra presentations of cohomology and the Hodge data they determine.

A presentation lists families of odd-degree generators ``(d; p, q) x r``:
``r`` generators of cohomological degree ``d`` sitting in Hodge bidegree
``(p, q)``.  The cohomology is the free exterior algebra on all of them, so
its mixed Hodge polynomial is ``prod (1 + t^d u^p v^q)^r``.

Presentations whose weights are all ``(0, 0)`` (the ``lie`` preset) model
singular cohomology of topological spaces; only their Poincare polynomial
is meaningful and the u, v variables are formal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .polyring import Monomial, TriPoly, ONE


class PresentationError(ValueError):
    """Invalid presentation data (even degree, bad multiplicity, bad schema)."""


@dataclass(frozen=True)
class GeneratorFamily:
    d: int
    p: int
    q: int
    r: int = 1

    def __post_init__(self):
        for name in ("d", "p", "q", "r"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise PresentationError(f"field {name!r} must be an integer, got {val!r}")
        if self.d < 1 or self.d % 2 == 0:
            raise PresentationError(f"degree must be odd and positive, got d={self.d}")
        if self.p < 0 or self.q < 0:
            raise PresentationError(f"weights must be nonnegative, got (p, q)=({self.p}, {self.q})")
        if self.r < 1:
            raise PresentationError(f"multiplicity must be positive, got r={self.r}")

    @property
    def signature(self) -> Monomial:
        return Monomial(self.d, self.p, self.q)


@dataclass(frozen=True)
class ExteriorPresentation:
    """Canonical list of generator families.

    Families with equal ``(d, p, q)`` are merged and the result is sorted,
    so two presentations of the same algebra compare equal.  ``dim`` is the
    optional complex dimension of the variety, needed only for duality.
    """

    families: tuple[GeneratorFamily, ...] = ()
    label: str | None = None
    dim: int | None = None

    def __post_init__(self):
        merged: dict[Monomial, int] = {}
        for f in self.families:
            if not isinstance(f, GeneratorFamily):
                f = GeneratorFamily(*f)
            merged[f.signature] = merged.get(f.signature, 0) + f.r
        fams = tuple(GeneratorFamily(s.k, s.p, s.q, r) for s, r in sorted(merged.items()))
        object.__setattr__(self, "families", fams)
        if self.dim is not None and (not isinstance(self.dim, int) or self.dim < 0):
            raise PresentationError(f"dim must be a nonnegative integer, got {self.dim!r}")

    @property
    def generator_count(self) -> int:
        return sum(f.r for f in self.families)

    def degrees(self) -> list[int]:
        """Degrees of all generators, repeated by multiplicity."""
        return [f.d for f in self.families for _ in range(f.r)]

    def is_weightless(self) -> bool:
        return all(f.p == 0 and f.q == 0 for f in self.families)

    def to_dict(self) -> dict:
        out: dict = {}
        if self.label is not None:
            out["label"] = self.label
        if self.dim is not None:
            out["dim"] = self.dim
        out["generators"] = [{"d": f.d, "p": f.p, "q": f.q, "r": f.r} for f in self.families]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "ExteriorPresentation":
        if not isinstance(data, Mapping):
            raise PresentationError("presentation must be a JSON object")
        gens = data.get("generators")
        if not isinstance(gens, list):
            raise PresentationError("'generators' must be a list")
        fams = []
        for g in gens:
            if not isinstance(g, Mapping):
                raise PresentationError(f"generator entry must be an object, got {g!r}")
            missing = {"d", "p", "q"} - set(g)
            if missing:
                raise PresentationError(f"generator entry missing {sorted(missing)}")
            fams.append(GeneratorFamily(g["d"], g["p"], g["q"], g.get("r", 1)))
        label = data.get("label")
        if label is not None and not isinstance(label, str):
            raise PresentationError("'label' must be a string")
        return cls(tuple(fams), label=label, dim=data.get("dim"))

    @classmethod
    def from_json(cls, text: str) -> "ExteriorPresentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def load_presentation(path) -> ExteriorPresentation:
    with open(path, encoding="utf-8") as fh:
        return ExteriorPresentation.from_json(fh.read())


@dataclass(frozen=True)
class HodgeTable:
    """Nonzero mixed Hodge numbers ``h^{k;p,q}`` keyed by ``(k, p, q)``.

    ``compact`` marks a table of compactly supported numbers.
    """

    numbers: Mapping[Monomial, int] = field(default_factory=dict)
    dim: int | None = None
    compact: bool = False

    def __post_init__(self):
        clean = {}
        for key, h in dict(self.numbers).items():
            if h < 0:
                raise ValueError(f"negative Hodge number at {tuple(key)}")
            if h:
                clean[Monomial(*key)] = int(h)
        object.__setattr__(self, "numbers", dict(sorted(clean.items())))

    def __getitem__(self, key) -> int:
        return self.numbers.get(Monomial(*key), 0)

    def items(self):
        return self.numbers.items()

    def total(self) -> int:
        return sum(self.numbers.values())

    def to_poly(self) -> TriPoly:
        return TriPoly(self.numbers)

    def __eq__(self, other):
        if not isinstance(other, HodgeTable):
            return NotImplemented
        return (self.numbers, self.dim, self.compact) == (other.numbers, other.dim, other.compact)

    def __hash__(self):
        return hash((tuple(self.numbers.items()), self.dim, self.compact))

    @classmethod
    def from_poly(cls, poly: TriPoly, dim: int | None = None, compact: bool = False) -> "HodgeTable":
        if not poly.is_nonnegative():
            raise ValueError("Hodge numbers must be nonnegative")
        return cls(dict(poly.terms()), dim=dim, compact=compact)


def mhp(pres: ExteriorPresentation) -> TriPoly:
    """Mixed Hodge polynomial ``prod (1 + t^d u^p v^q)^r``."""
    out = ONE
    for f in pres.families:
        out = out * (ONE + TriPoly({f.signature: 1})) ** f.r
    return out


def hodge_table(pres: ExteriorPresentation) -> HodgeTable:
    return HodgeTable.from_poly(mhp(pres), dim=pres.dim)


def poincare(pres: ExteriorPresentation) -> TriPoly:
    return mhp(pres).specialize(u=1, v=1)


def e_poly(pres: ExteriorPresentation) -> TriPoly:
    return mhp(pres).specialize(t=-1)


def compact_duality(table: HodgeTable, d: int | None = None) -> HodgeTable:
    """Swap ordinary and compactly supported Hodge numbers by Poincare duality.

    ``h^{k;p,q}`` lands on ``(2d-k; d-p, d-q)``.  The map is an involution,
    so it also converts a compactly supported table back.  Only valid for
    smooth varieties or orbifolds.
    """
    if d is None:
        d = table.dim
    if d is None:
        raise ValueError("complex dimension required for duality")
    out = {}
    for (k, p, q), h in table.items():
        key = (2 * d - k, d - p, d - q)
        if min(key) < 0:
            raise ValueError(
                f"entry h^{{{k};{p},{q}}} has no dual in dimension {d} (got index {key})"
            )
        out[key] = h
    return HodgeTable(out, dim=d, compact=not table.compact)


# -- presets ----------------------------------------------------------------

PRESET_NAMES = ("torus", "cstar", "gl", "lag", "lie")


def torus(d: int) -> ExteriorPresentation:
    """Complex torus of dimension d: H^1 = H^{1,0} + H^{0,1}, each of rank d."""
    _positive(d=d)
    return ExteriorPresentation(
        (GeneratorFamily(1, 1, 0, d), GeneratorFamily(1, 0, 1, d)), label=f"torus({d})", dim=d
    )


def cstar(r: int) -> ExteriorPresentation:
    _positive(r=r)
    return ExteriorPresentation((GeneratorFamily(1, 1, 1, r),), label=f"cstar({r})", dim=r)


def gl(m: int) -> ExteriorPresentation:
    """GL(m, C): one primitive generator in each degree 2i-1, weight (i, i)."""
    _positive(m=m)
    fams = tuple(GeneratorFamily(2 * i - 1, i, i, 1) for i in range(1, m + 1))
    return ExteriorPresentation(fams, label=f"gl({m})", dim=m * m)


def lag(rs: Sequence[int]) -> ExteriorPresentation:
    """Linear algebraic group with r_i primitive generators of degree 2i-1.

    Zero entries are allowed (e.g. ``lag([0, 1])`` for SL(2, C)).
    """
    rs = list(rs)
    if not rs or any(r < 0 for r in rs) or not any(rs):
        raise PresentationError(f"lag multiplicities must be nonnegative, not all zero: {rs}")
    fams = tuple(GeneratorFamily(2 * i - 1, i, i, r) for i, r in enumerate(rs, 1) if r)
    return ExteriorPresentation(fams, label="lag(" + ",".join(map(str, rs)) + ")")


def lie(gens: Iterable[tuple[int, int]]) -> ExteriorPresentation:
    """Topological space with exterior cohomology on generators of the given (degree, count).

    Weights are (0, 0), so u and v are formal here; only the Poincare
    specialisation carries meaning.
    """
    gens = list(gens)
    if not gens:
        raise PresentationError("lie preset needs at least one (degree, count) pair")
    fams = tuple(GeneratorFamily(d, 0, 0, r) for d, r in gens)
    label = "lie(" + ",".join(f"{d}:{r}" for d, r in gens) + ")"
    return ExteriorPresentation(fams, label=label)


def point() -> ExteriorPresentation:
    return ExteriorPresentation((), label="point", dim=0)


def preset(name: str, **params) -> ExteriorPresentation:
    if name == "torus":
        return torus(params["d"])
    if name == "cstar":
        return cstar(params["r"])
    if name == "gl":
        return gl(params["m"])
    if name == "lag":
        return lag(params["r"])
    if name == "lie":
        return lie(params["gens"])
    raise KeyError(f"unknown preset {name!r}")


def _positive(**kw):
    for name, val in kw.items():
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise PresentationError(f"{name} must be a positive integer, got {val!r}")
