"""Exact integer polynomials in (t, u, v) and truncated power series in z over them.

``t`` tracks cohomological degree, ``u`` and ``v`` the two Hodge weights.
Coefficients are Python ints, so nothing ever overflows or rounds.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union


class IntegralityError(ArithmeticError):
    """A division that must be exact left a remainder."""


class Monomial(NamedTuple):
    """Exponent vector ``t^k u^p v^q``; tuple order is lexicographic on (k, p, q)."""

    k: int = 0
    p: int = 0
    q: int = 0

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(self.k + other.k, self.p + other.p, self.q + other.q)

    def scaled(self, j: int) -> "Monomial":
        return Monomial(j * self.k, j * self.p, j * self.q)


def _check_monomial(m) -> Monomial:
    m = Monomial(*m)
    if m.k < 0 or m.p < 0 or m.q < 0:
        raise ValueError(f"negative exponent in monomial {tuple(m)}")
    return m


Scalar = Union[int, "TriPoly"]


class TriPoly:
    """Sparse polynomial in t, u, v with integer coefficients.

    Instances are immutable and hashable.  Zero coefficients are never stored.

    >>> (TriPoly.parse("1 + t*u") * TriPoly.parse("1 + t*v")).to_text()
    '1 + t*v + t*u + t^2*u*v'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict[Monomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                if not isinstance(c, int):
                    raise TypeError(f"coefficient must be int, got {type(c).__name__}")
                mono = _check_monomial(mono)
                acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "TriPoly":
        # terms must already be clean: Monomial keys, nonzero ints
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "TriPoly":
        return cls._raw({Monomial(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, k: int = 0, p: int = 0, q: int = 0, c: int = 1) -> "TriPoly":
        return cls({Monomial(k, p, q): c})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, mono) -> int:
        return self._terms.get(Monomial(*mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def constant_term(self) -> int:
        return self._terms.get(Monomial(0, 0, 0), 0)

    def degree(self, var: str = "t") -> int:
        """Maximal exponent of ``var``; -1 for the zero polynomial."""
        idx = "tuv".index(var)
        return max((m[idx] for m in self._terms), default=-1)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms()]

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __call__(self, t=1, u=1, v=1):
        """Evaluate at exact numbers (int or Fraction)."""
        return sum((c * t**m.k * u**m.p * v**m.q for m, c in self._terms.items()), 0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "TriPoly":
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, int):
            return TriPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return TriPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TriPoly._raw({})
            return TriPoly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, int] = {}
        for (k1, p1, q1), c1 in self._terms.items():
            for (k2, p2, q2), c2 in other._terms.items():
                m = Monomial(k1 + k2, p1 + p2, q1 + q2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return TriPoly._raw({m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = TriPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, d: int | Fraction) -> "TriPoly":
        """Divide every coefficient by ``d``; raise :class:`IntegralityError` on a remainder."""
        d = Fraction(d)
        if d == 0:
            raise ZeroDivisionError("division of TriPoly by zero")
        out = {}
        for m, c in self._terms.items():
            val = c / d
            if val.denominator != 1:
                raise IntegralityError(
                    f"coefficient {c} of {_render_monomial(m) or '1'} is not divisible by {d}"
                )
            out[m] = int(val)
        return TriPoly._raw(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TriPoly.constant(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions ------------------------------------------------------

    def substitute_power(self, j: int) -> "TriPoly":
        """Apply t -> -(-t)^j, u -> u^j, v -> v^j.

        A term t^k u^p v^q becomes (-1)^((j+1)k) t^(jk) u^(jp) v^(jq).
        """
        if j < 1:
            raise ValueError("j must be a positive integer")
        out = {}
        for m, c in self._terms.items():
            sign = -1 if ((j + 1) * m.k) % 2 else 1
            out[m.scaled(j)] = sign * c
        return TriPoly._raw(out)

    def specialize(self, t=None, u=None, v=None) -> "TriPoly":
        """Partially evaluate; ``None`` keeps a variable, an int substitutes it."""
        acc: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            k, p, q = m
            if t is not None:
                c *= t**k
                k = 0
            if u is not None:
                c *= u**p
                p = 0
            if v is not None:
                c *= v**q
                q = 0
            key = Monomial(k, p, q)
            acc[key] = acc.get(key, 0) + c
        return TriPoly._raw({m: c for m, c in acc.items() if c})

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.terms()):
            body = _render_monomial(m)
            mag = abs(c)
            if body:
                piece = body if mag == 1 else f"{mag}*{body}"
            else:
                piece = str(mag)
            if i == 0:
                out.append(piece if c > 0 else f"-{piece}")
            else:
                out.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"TriPoly({self.to_text()!r})"

    def to_records(self) -> list[dict]:
        return [{"k": m.k, "p": m.p, "q": m.q, "c": str(c)} for m, c in self.terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "TriPoly":
        return cls((Monomial(int(r["k"]), int(r["p"]), int(r["q"])), int(r["c"])) for r in records)

    @classmethod
    def from_json(cls, text: str) -> "TriPoly":
        return cls.from_records(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "TriPoly":
        """Read the canonical text form (also accepts unsorted, uncollected input)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[Monomial, int] = {}
        pos = 0
        for match in _TERM_RE.finditer(s):
            if match.start() != pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            factors = match.group(2).split("*")
            c = 1
            exps = [0, 0, 0]
            for f in factors:
                if f.isdigit():
                    c *= int(f)
                    continue
                var, _, e = f.partition("^")
                if var not in ("t", "u", "v") or (e and not e.isdigit()):
                    raise ValueError(f"bad factor {f!r}")
                exps["tuv".index(var)] += int(e) if e else 1
            mono = Monomial(*exps)
            acc[mono] = acc.get(mono, 0) + sign * c
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        return cls(acc)


_TERM_RE = re.compile(r"([+-])((?:\d+|[tuv](?:\^\d+)?)(?:\*(?:\d+|[tuv](?:\^\d+)?))*)")


def _render_monomial(m: Monomial) -> str:
    parts = []
    for var, e in zip("tuv", m):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


ONE = TriPoly.constant(1)
ZERO = TriPoly.constant(0)
T = TriPoly.monomial(1, 0, 0)
U = TriPoly.monomial(0, 1, 0)
V = TriPoly.monomial(0, 0, 1)


def poly_add(a: TriPoly, b: TriPoly) -> TriPoly:
    return a + b


def poly_mul(a: TriPoly, b: TriPoly) -> TriPoly:
    return a * b


def poly_pow(a: TriPoly, e: int) -> TriPoly:
    return a**e


def poly_substitute_power(a: TriPoly, j: int) -> TriPoly:
    return a.substitute_power(j)


def poly_specialize(a: TriPoly, t=None, u=None, v=None) -> TriPoly:
    return a.specialize(t=t, u=u, v=v)


def poly_sum(polys: Iterable[TriPoly]) -> TriPoly:
    acc: dict[Monomial, int] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return TriPoly._raw({m: c for m, c in acc.items() if c})


class ZSeries:
    """Power series in z with TriPoly coefficients, exact modulo z^(order+1).

    The truncation order is part of the value; combining series of different
    orders raises ``ValueError`` instead of silently truncating.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [c if isinstance(c, TriPoly) else TriPoly.constant(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "ZSeries":
        return cls(order, [ONE])

    @classmethod
    def linear(cls, order: int, c0: Scalar, c1: Scalar) -> "ZSeries":
        """The series ``c0 + c1*z``."""
        return cls(order, [c0, c1])

    def _check(self, other: "ZSeries"):
        if not isinstance(other, ZSeries):
            raise TypeError("expected a ZSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            out.append(poly_sum(a[j] * b[i - j] for j in range(i + 1) if a[j] and b[i - j]))
        return ZSeries(n, out)

    def inverse(self) -> "ZSeries":
        """Inverse in the truncated ring; the constant coefficient must be exactly 1."""
        if self.coeffs[0] != ONE:
            raise ValueError("constant coefficient must be 1 to invert")
        a = self.coeffs
        inv = [ONE]
        for i in range(1, self.order + 1):
            inv.append(-poly_sum(a[j] * inv[i - j] for j in range(1, i + 1) if a[j]))
        return ZSeries(self.order, inv)

    def __pow__(self, e: int) -> "ZSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = ZSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def coeff(self, n: int) -> TriPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def map(self, fn) -> "ZSeries":
        return ZSeries(self.order, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def to_text(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            body = c.to_text()
            parts.append(body if not z else f"({body})*{z}")
        return (" + ".join(parts) or "0") + f" + O(z^{self.order + 1})"

    def __repr__(self):
        return f"ZSeries({self.to_text()!r})"


def series_mul(a: ZSeries, b: ZSeries) -> ZSeries:
    return a * b


def series_int_pow(a: ZSeries, e: int) -> ZSeries:
    if a.coeffs[0] != ONE:
        raise ValueError("constant coefficient must be 1")
    return a**e


def series_coeff(a: ZSeries, n: int) -> TriPoly:
    return a.coeff(n)
