"""Value types for Goursat germ invariants and the sgv <-> derived-vector maps.

Text formats used throughout the package:

* small growth vectors and flat derived vectors: ``"2,3,4,4,5"``
* block form: space separated ``M^m`` atoms, ``^1`` optional: ``"1^2 2^6 4 6^3 18 24^2"``
* Puiseux characteristics: ``"[24; 90, 94, 103]"``

All indices exposed by accessors are 1-based.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Iterable, Sequence

from .errors import MalformedDerived, MalformedSgv, InvalidPuiseux


def _parse_int_list(text: str, err: type[Exception]) -> tuple[int, ...]:
    parts = [p.strip() for p in text.strip().strip("()[]").split(",")]
    if not parts or parts == [""]:
        raise err(f"empty integer list: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise err(f"not a comma-separated integer list: {text!r}") from None


@dataclass(frozen=True)
class SmallGrowthVector:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 2:
            raise MalformedSgv("small growth vector needs at least two entries")
        if dims[0] != 2:
            raise MalformedSgv(f"first entry must be 2, got {dims[0]}")
        for i in range(1, len(dims)):
            step = dims[i] - dims[i - 1]
            if step not in (0, 1):
                raise MalformedSgv(
                    f"entries {i} and {i + 1} differ by {step}; allowed steps are 0 and 1"
                )
        if dims[-1] == dims[-2]:
            raise MalformedSgv(f"final entry {dims[-1]} must appear exactly once")
        runs = [len(list(run)) for _, run in groupby(dims)][:-1]
        for i in range(1, len(runs)):
            if runs[i] < runs[i - 1]:
                raise MalformedSgv(
                    f"multiplicity of {i + 2} ({runs[i]}) is below that of {i + 1} ({runs[i - 1]})"
                )

    @property
    def n(self) -> int:
        return self.dims[-1]

    def __len__(self) -> int:
        return len(self.dims)

    def __str__(self) -> str:
        return ",".join(map(str, self.dims))

    @classmethod
    def parse(cls, text: str) -> SmallGrowthVector:
        return cls(_parse_int_list(text, MalformedSgv))


@dataclass(frozen=True)
class DerivedVector:
    """Derived vector stored in block form ``((M_1, m_1), ..., (M_{v+1}, m_{v+1}))``.

    The flat form ``(d_1, ..., d_N)`` is a cached view. Construction only
    enforces the structural invariants (positive, strictly increasing block
    values); Goursat realizability is checked by :func:`goursat.codes.derived_to_rvt`.
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(M), int(m)) for M, m in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise MalformedDerived("derived vector is empty")
        prev = 0
        for i, (M, m) in enumerate(blocks, start=1):
            if M < 1:
                raise MalformedDerived(f"block value M_{i} = {M} is not positive")
            if m < 1:
                raise MalformedDerived(f"multiplicity m_{i} = {m} must be at least 1")
            if M <= prev:
                raise MalformedDerived(
                    f"block values must increase strictly: M_{i - 1} = {prev}, M_{i} = {M}"
                )
            prev = M

    @classmethod
    def from_flat(cls, flat: Iterable[int]) -> DerivedVector:
        flat = tuple(flat)
        if not flat:
            raise MalformedDerived("derived vector is empty")
        for i in range(1, len(flat)):
            if flat[i] < flat[i - 1]:
                raise MalformedDerived(
                    f"entries must be non-decreasing: d_{i} = {flat[i - 1]} > d_{i + 1} = {flat[i]}"
                )
        return cls(tuple((M, len(list(run))) for M, run in groupby(flat)))

    @classmethod
    def parse_flat(cls, text: str) -> DerivedVector:
        return cls.from_flat(_parse_int_list(text, MalformedDerived))

    @classmethod
    def parse_blocks(cls, text: str) -> DerivedVector:
        blocks = []
        for atom in text.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", atom)
            if m is None:
                raise MalformedDerived(f"bad block atom {atom!r}; expected M or M^m")
            blocks.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(blocks))

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(M for M, m in self.blocks for _ in range(m))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(M for M, _ in self.blocks)

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.blocks)

    def M(self, i: int) -> int:
        """Block value ``M_i`` (1-based)."""
        if not 1 <= i <= len(self.blocks):
            raise IndexError(f"block index {i} out of range 1..{len(self.blocks)}")
        return self.blocks[i - 1][0]

    def m(self, i: int) -> int:
        """Block multiplicity ``m_i`` (1-based)."""
        if not 1 <= i <= len(self.blocks):
            raise IndexError(f"block index {i} out of range 1..{len(self.blocks)}")
        return self.blocks[i - 1][1]

    @property
    def v(self) -> int:
        return len(self.blocks) - 1

    @property
    def N(self) -> int:
        return sum(m for _, m in self.blocks)

    @property
    def total(self) -> int:
        return sum(M * m for M, m in self.blocks)

    @property
    def is_critical(self) -> bool:
        # m_1 = M_2 marks a code ending in V or T
        return len(self.blocks) >= 2 and self.blocks[0][1] == self.blocks[1][0]

    def format_flat(self) -> str:
        return ",".join(map(str, self.flat))

    def format_blocks(self) -> str:
        return " ".join(str(M) if m == 1 else f"{M}^{m}" for M, m in self.blocks)

    def __str__(self) -> str:
        return self.format_flat()


def sgv_to_derived(sgv: SmallGrowthVector | Sequence[int]) -> DerivedVector:
    """Run-length multiplicities of ``sgv`` with the trailing multiplicity 1 dropped."""
    if not isinstance(sgv, SmallGrowthVector):
        sgv = SmallGrowthVector(tuple(sgv))
    runs = [len(list(run)) for _, run in groupby(sgv.dims)]
    return DerivedVector.from_flat(runs[:-1])


def derived_to_sgv(der: DerivedVector | Sequence[int]) -> SmallGrowthVector:
    if not isinstance(der, DerivedVector):
        der = DerivedVector.from_flat(der)
    dims = []
    for i, d in enumerate(der.flat, start=1):
        dims.extend([i + 1] * d)
    dims.append(der.N + 2)
    return SmallGrowthVector(tuple(dims))


@dataclass(frozen=True)
class GeometrySummary:
    level: int
    dim: int
    sgv_length: int
    v: int
    g: int


def geometry_summary(der: DerivedVector) -> GeometrySummary:
    values = der.values
    g = sum(1 for i in range(1, len(values)) if values[i] % values[i - 1] == 0)
    return GeometrySummary(
        level=der.N, dim=der.N + 2, sgv_length=der.total + 1, v=der.v, g=g
    )


@dataclass(frozen=True)
class PuiseuxCharacteristic:
    """``[lambda_0; lambda_1, ..., lambda_g]``.

    Construction does not enforce validity; use
    :func:`goursat.curves.validate_puiseux` for the gcd-chain checks.
    """

    lambda0: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))

    @property
    def g(self) -> int:
        return len(self.exponents)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.lambda0, *self.exponents)

    def e_chain(self) -> tuple[int, ...]:
        """``(e_0, ..., e_g)`` with ``e_0 = lambda_0`` and ``e_j = gcd(e_{j-1}, lambda_j)``."""
        chain = [self.lambda0]
        for lam in self.exponents:
            chain.append(math.gcd(chain[-1], lam))
        return tuple(chain)

    def __str__(self) -> str:
        return f"[{self.lambda0}; {', '.join(map(str, self.exponents))}]"

    @classmethod
    def parse(cls, text: str) -> PuiseuxCharacteristic:
        m = re.fullmatch(r"\s*\[\s*(-?\d+)\s*;\s*(.*?)\s*\]\s*", text)
        if m is None:
            raise InvalidPuiseux(f"expected '[l0; l1, ..., lg]', got {text!r}")
        rest = m.group(2)
        try:
            exps = tuple(int(x) for x in rest.split(",")) if rest else ()
        except ValueError:
            raise InvalidPuiseux(f"non-integer exponent in {text!r}") from None
        return cls(int(m.group(1)), exps)
