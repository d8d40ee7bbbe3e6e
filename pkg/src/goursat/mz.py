"""Puiseux characteristic of a critical RVT code by the E-operator recursion.

A critical code splits as ``R^{c_0} w_1 R^{c_1} w_2 ... R^{c_{q-1}} w_q`` with
each ``w_i`` a maximal critical string (a V followed by letters from {V, T}).
Each critical string is reduced to a coprime pair ``(a, b)`` by the
E-operator, and the pairs are combined left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .codes import RvtCode, validate_rvt
from .errors import MalformedCriticalString, NoCriticalLetters, NotCritical
from .invariants import PuiseuxCharacteristic

_SPLIT = re.compile(r"(R+)([VT]+)")


class EPair(tuple):
    """Immutable ``(a, b)`` pair produced by :func:`e_operator`."""

    __slots__ = ()

    def __new__(cls, a: int, b: int):
        return tuple.__new__(cls, (a, b))

    @property
    def a(self) -> int:
        return self[0]

    @property
    def b(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"EPair(a={self[0]}, b={self[1]})"


@dataclass(frozen=True)
class CodeDecomposition:
    c: tuple[int, ...]
    omegas: tuple[str, ...]

    @property
    def q(self) -> int:
        return len(self.omegas)

    def reassemble(self) -> str:
        return "".join("R" * c + w for c, w in zip(self.c, self.omegas))


def split_code(code: RvtCode | str) -> CodeDecomposition:
    code = validate_rvt(code)
    if code.v == 0:
        raise NoCriticalLetters(f"{code.letters} contains no V")
    if not code.is_critical:
        raise NotCritical(f"{code.letters} ends in R")
    pairs = _SPLIT.findall(code.letters)
    return CodeDecomposition(
        tuple(len(rs) for rs, _ in pairs), tuple(w for _, w in pairs)
    )


def e_operator(omega: str) -> EPair:
    """Fold a critical string right to left from the seed ``(1, 2)``.

    T sends ``(a, b)`` to ``(a, a + b)``; V sends it to ``(b, a + b)``.
    """
    if not omega or omega[0] != "V" or omega.strip("VT"):
        raise MalformedCriticalString(
            f"{omega!r} is not a critical string (V followed by letters V/T)"
        )
    a, b = 1, 2
    for ch in reversed(omega):
        if ch == "T":
            b = a + b
        else:
            a, b = b, a + b
    return EPair(a, b)


def puiseux_from_rvt(code: RvtCode | str) -> PuiseuxCharacteristic:
    dec = split_code(code)
    a, b = e_operator(dec.omegas[0])
    lam0 = a
    lams = [(dec.c[0] - 1) * a + b]
    for i in range(1, dec.q):
        a, b = e_operator(dec.omegas[i])
        s = dec.c[i]
        last = a * (lams[-1] + s - 1) + b - a
        lam0 *= a
        lams = [a * x for x in lams]
        lams.append(last)
    return PuiseuxCharacteristic(lam0, tuple(lams))
