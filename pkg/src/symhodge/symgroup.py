"""Partitions, conjugacy classes and characters of the symmetric group S_n.

Conjugacy classes of S_n are labelled by cycle types.  Everything that
depends only on the class (class sizes, ``det(I + w M_sigma)``, character
values) is computed straight from the cycle type, so sums over S_n need
p(n) terms rather than n!.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence, Union

from .polyring import Monomial, TriPoly, ONE


@dataclass(frozen=True, order=False)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > i) for i in range(self.parts[0])))

    def cycle_type(self) -> "CycleType":
        return CycleType.from_partition(self)

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls.of(int(x) for x in text.split(","))

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class CycleType:
    """Cycle multiplicities ``{j: a_j}`` of a permutation; stored as sorted pairs."""

    mult: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = self.mult.items() if isinstance(self.mult, dict) else self.mult
        clean = tuple(sorted(((int(j), int(a)) for j, a in pairs if a), reverse=True))
        for j, a in clean:
            if j < 1 or a < 0:
                raise ValueError(f"invalid cycle multiplicity {j}^{a}")
        if len({j for j, _ in clean}) != len(clean):
            raise ValueError("repeated cycle length")
        object.__setattr__(self, "mult", clean)

    @classmethod
    def from_partition(cls, lam: Partition | Sequence[int]) -> "CycleType":
        parts = lam.parts if isinstance(lam, Partition) else lam
        return cls(tuple(Counter(parts).items()))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls(((1, n),)) if n else cls(())

    def to_partition(self) -> Partition:
        return Partition(tuple(j for j, a in self.mult for _ in range(a)))

    @property
    def n(self) -> int:
        return sum(j * a for j, a in self.mult)

    def __getitem__(self, j: int) -> int:
        return dict(self.mult).get(j, 0)

    def items(self):
        return iter(self.mult)

    def fixed_points(self) -> int:
        return self[1]

    def to_text(self) -> str:
        return " ".join(f"{j}^{a}" for j, a in self.mult)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        pairs = []
        for tok in text.split():
            j, _, a = tok.partition("^")
            pairs.append((int(j), int(a) if a else 1))
        return cls(tuple(pairs))

    def __str__(self):
        return self.to_text()


ClassLabel = Union[CycleType, Partition, Sequence[int]]


def as_cycle_type(c: ClassLabel) -> CycleType:
    if isinstance(c, CycleType):
        return c
    return CycleType.from_partition(c)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def class_size(c: ClassLabel) -> int:
    """Number of permutations of the given cycle type: n! / prod j^a_j a_j!."""
    c = as_cycle_type(c)
    denom = 1
    for j, a in c.items():
        denom *= j**a * factorial(a)
    return factorial(c.n) // denom


def conjugacy_classes(n: int) -> list[tuple[CycleType, int]]:
    """``(cycle type, class size)`` for every class of S_n, in partition order."""
    return [(p.cycle_type(), class_size(p)) for p in partitions_of(n)]


@dataclass(frozen=True)
class PermutationWord:
    """A permutation of {1..n} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "PermutationWord":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "PermutationWord") -> "PermutationWord":
        """``self after other``: i -> self(other(i))."""
        if other.n != self.n:
            raise ValueError("permutations of different degree")
        return PermutationWord(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> "PermutationWord":
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return PermutationWord(tuple(inv))

    def to_text(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    @classmethod
    def parse(cls, text: str) -> "PermutationWord":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected bracketed one-line notation, got {text!r}")
        inner = body[1:-1].strip()
        return cls(tuple(int(x) for x in inner.split(",")) if inner else ())

    def __str__(self):
        return self.to_text()


def perm_to_cycle_type(w: PermutationWord | Sequence[int]) -> CycleType:
    if not isinstance(w, PermutationWord):
        w = PermutationWord(tuple(w))
    seen = [False] * w.n
    lengths = []
    for start in range(w.n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = w.images[i] - 1
            length += 1
        lengths.append(length)
    return CycleType.from_partition(lengths)


def det_eval(c: ClassLabel, w: Monomial | Sequence[int], sign: int = 1) -> TriPoly:
    """``det(I + sign*w*M_sigma)`` for any sigma of cycle type ``c``.

    A j-cycle block contributes ``1 - (-sign*w)^j``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = as_cycle_type(c)
    w = Monomial(*w)
    result = ONE
    for j, a in c.items():
        # (-sign*w)^j = (-sign)^j w^j
        coeff = -((-sign) ** j)
        block = ONE + TriPoly({w.scaled(j): coeff})
        result = result * block**a
    return result


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def elementary_symmetric_profile(c: ClassLabel) -> list[int]:
    """Coefficients e_0..e_n of prod_j (1 - (-x)^j)^a_j.

    ``e_k`` is the character of the k-th exterior power of the permutation
    representation at the class ``c``.
    """
    c = as_cycle_type(c)
    poly = [1]
    for j, a in c.items():
        block = [0] * (j + 1)
        block[0] = 1
        block[j] = -((-1) ** j)
        for _ in range(a):
            poly = _int_poly_mul(poly, block)
    return poly + [0] * (c.n + 1 - len(poly))


def exterior_std_character(k: int, c: ClassLabel) -> int:
    """Character of the k-th exterior power of the standard representation at ``c``.

    Valid for 0 <= k <= n-1; larger ``k`` raises rather than returning 0.
    """
    c = as_cycle_type(c)
    if not 0 <= k < c.n:
        raise ValueError(f"exterior power index {k} outside 0..{c.n - 1}")
    e = elementary_symmetric_profile(c)
    return sum((-1) ** (k - i) * e[i] for i in range(k + 1))


def mn_character(lam: Partition | Sequence[int], c: ClassLabel) -> int:
    """Irreducible character chi_lam at class ``c`` (Murnaghan-Nakayama rule)."""
    if not isinstance(lam, Partition):
        lam = Partition.of(lam)
    c = as_cycle_type(c)
    if lam.n != c.n:
        raise ValueError(f"shape of size {lam.n} vs class of size {c.n}")
    return _mn(lam.parts, c.to_partition().parts)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # Rim hooks are removed via the beta-set: a hook of length r moves one bead
    # from b to b - r; the sign counts beads jumped over.
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beads:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beads - {b}) | {nb}, reverse=True)
        m = len(new_beta)
        new_shape = tuple(x for x in (new_beta[i] - (m - 1 - i) for i in range(m)) if x > 0)
        total += (-1) ** height * _mn(new_shape, rest)
    return total


def character_table(n: int) -> dict[Partition, dict[CycleType, int]]:
    classes = [p.cycle_type() for p in partitions_of(n)]
    return {lam: {c: mn_character(lam, c) for c in classes} for lam in partitions_of(n)}


def all_permutations(n: int) -> Iterator[PermutationWord]:
    for p in permutations(range(1, n + 1)):
        yield PermutationWord(p)
