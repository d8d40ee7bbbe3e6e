"""RVT codes and Mormul's bijection with Goursat derived vectors.

A code with ``v`` letters V is laid out as::

    R^{r_{v+1}} V T^{t_v} R^{r_v} ... V T^{t_1} R^{r_1}

so ``t_j`` and ``r_j`` describe the segment after the j-th V counted from the
right. The forward map ``derived_to_rvt`` applies the relations

    r_{v+1} = m_{v+1} + 1,  t_1 = M_2 - 2,  r_1 = m_1 - M_2

and for ``2 <= j <= v``

    M_j | M_{j+1}:   t_j = M_{j+1}/M_j - 2,  r_j = m_j - t_j - 1   (Case 1)
    otherwise:       t_j = m_j - 1,          r_j = 0              (Case 2)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadAlphabet,
    MissingLeadingRR,
    NotCritical,
    NotRealizable,
    RoundTripFailure,
    SingleStage,
    TAfterR,
)
from .invariants import DerivedVector

ALPHABET = "RVT"


@dataclass(frozen=True)
class CodeProfile:
    """Run lengths of a code: ``t = (t_1, ..., t_v)``, ``r = (r_1, ..., r_{v+1})``.

    Use :meth:`t_at` / :meth:`r_at` for 1-based access.
    """

    v: int
    t: tuple[int, ...]
    r: tuple[int, ...]

    def t_at(self, j: int) -> int:
        if not 1 <= j <= self.v:
            raise IndexError(f"t_{j} undefined for v = {self.v}")
        return self.t[j - 1]

    def r_at(self, j: int) -> int:
        if not 1 <= j <= self.v + 1:
            raise IndexError(f"r_{j} undefined for v = {self.v}")
        return self.r[j - 1]

    @property
    def length(self) -> int:
        return self.v + sum(self.t) + sum(self.r)

    def to_letters(self) -> str:
        parts = ["R" * self.r[self.v]]
        for j in range(self.v, 0, -1):
            parts.append("V" + "T" * self.t[j - 1] + "R" * self.r[j - 1])
        return "".join(parts)


def _profile_of(word: str) -> CodeProfile:
    # word already passed the grammar checks, so every V-segment is T*R*
    parts = word.split("V")
    v = len(parts) - 1
    t = [0] * v
    r = [0] * (v + 1)
    r[v] = len(parts[0])
    for pos, seg in enumerate(parts[1:]):
        j = v - pos
        nt = len(seg) - len(seg.lstrip("T"))
        t[j - 1] = nt
        r[j - 1] = len(seg) - nt
    return CodeProfile(v, tuple(t), tuple(r))


@dataclass(frozen=True)
class RvtCode:
    letters: str
    profile: CodeProfile

    @property
    def is_critical(self) -> bool:
        return self.letters[-1] != "R"

    @property
    def level(self) -> int:
        return len(self.letters)

    @property
    def v(self) -> int:
        return self.profile.v

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


def validate_rvt(word: str | RvtCode) -> RvtCode:
    """Check ``word`` against the code grammar and attach its run-length profile.

    Grammar: letters in {R, V, T}; the first letter is R; T never directly
    follows R; if any V occurs the code opens with at least two R's.
    Errors report 1-based positions.
    """
    if isinstance(word, RvtCode):
        return word
    for i, ch in enumerate(word, start=1):
        if ch not in ALPHABET:
            raise BadAlphabet(f"letter {ch!r} is not one of R, V, T", i)
    if not word:
        raise MissingLeadingRR("empty code", 1)
    if word[0] != "R":
        raise MissingLeadingRR("code must start with R", 1)
    if "V" in word and (len(word) < 2 or word[1] != "R"):
        raise MissingLeadingRR("code containing V must start with RR", 2)
    i = word.find("RT")
    if i >= 0:
        raise TAfterR("T directly after R", i + 2)
    return RvtCode(word, _profile_of(word))


def derived_to_rvt(der: DerivedVector) -> RvtCode:
    """Mormul's relations: the RVT code of a Goursat-realizable derived vector.

    Raises :class:`NotRealizable` naming the first violated relation.
    """
    blocks = der.blocks
    v = len(blocks) - 1
    if v == 0:
        N = blocks[0][1]
        if blocks[0][0] != 1:
            raise NotRealizable("M_1 = 1", f"got M_1 = {blocks[0][0]}")
        return RvtCode("R" * N, CodeProfile(0, (), (N,)))

    M = [0] + [b[0] for b in blocks]  # 1-based
    m = [0] + [b[1] for b in blocks]
    if M[1] != 1:
        raise NotRealizable("M_1 = 1", f"got M_1 = {M[1]}")
    t = [0] * (v + 1)
    r = [0] * (v + 2)
    t[1] = M[2] - 2
    r[1] = m[1] - M[2]
    if r[1] < 0:
        raise NotRealizable(
            "r_1 = m_1 - M_2 ≥ 0", f"m_1 = {m[1]} < M_2 = {M[2]}"
        )
    for j in range(2, v + 1):
        if M[j + 1] % M[j] == 0:
            t[j] = M[j + 1] // M[j] - 2
            r[j] = m[j] - t[j] - 1
            if r[j] < 1:
                raise NotRealizable(
                    f"Case-1 r_{j} = m_{j} - t_{j} - 1 ≥ 1",
                    f"m_{j} = {m[j]}, t_{j} = {t[j]} gives r_{j} = {r[j]}",
                )
        else:
            expected = m[j] * M[j] + M[j - 1]
            if M[j + 1] != expected:
                raise NotRealizable(
                    f"Case-2 recurrence M_{j + 1} ≠ m_{j}·M_{j} + M_{j - 1}",
                    f"M_{j + 1} = {M[j + 1]}, m_{j}·M_{j} + M_{j - 1} = {expected}",
                )
            t[j] = m[j] - 1
            r[j] = 0
    r[v + 1] = m[v + 1] + 1
    profile = CodeProfile(v, tuple(t[1:]), tuple(r[1:]))
    return RvtCode(profile.to_letters(), profile)


def invert_profile(profile: CodeProfile) -> DerivedVector:
    """Unchecked inversion of the coding relations; see :func:`rvt_to_derived`."""
    v = profile.v
    t, r = profile.t, profile.r
    if v == 0:
        return DerivedVector(((1, r[0]),))
    M = [0, 1, t[0] + 2]
    m = [0, M[2] + r[0]]
    for j in range(2, v + 1):
        tj, rj = t[j - 1], r[j - 1]
        if rj >= 1:
            M.append((tj + 2) * M[j])
            m.append(rj + tj + 1)
        else:
            m.append(tj + 1)
            M.append(m[j] * M[j] + M[j - 1])
    m.append(r[v] - 1)
    return DerivedVector(tuple(zip(M[1:], m[1:])))


def rvt_to_derived(code: RvtCode | str) -> DerivedVector:
    """Invert Mormul's relations, then confirm by re-encoding.

    Case 1 is chosen where ``r_j >= 1`` and Case 2 where ``r_j = 0``; the
    re-encoding check rejects anything outside the image of the forward map.
    """
    code = validate_rvt(code)
    try:
        der = invert_profile(code.profile)
        back = derived_to_rvt(der)
    except (NotRealizable, ValueError) as exc:
        raise RoundTripFailure(f"{code.letters}: inversion rejected ({exc})") from exc
    if back.letters != code.letters:
        raise RoundTripFailure(
            f"{code.letters} -> {der.format_blocks()} -> {back.letters}"
        )
    return der


@dataclass(frozen=True)
class Truncation:
    """``alpha = beta R^s omega`` with ``beta`` described by its derived vector."""

    beta: DerivedVector
    s: int
    omega: str
    r: int  # block index with M_r | M_{r+1} at the second-smallest divisibility entry


def truncate_last_stage(der: DerivedVector, check: bool = True) -> Truncation:
    """Strip the final R-run and critical string from the code of ``der``.

    The derived vector of the remaining prefix is computed from the tilde
    relations (``m~_1 = M_{r+1}/M_r``, ``M~_i = M_{r+i-1}/M_r``,
    ``m~_{i+1} = m_{r+i}``). With ``check`` the result is compared against
    parsing the stripped code directly.
    """
    if not der.is_critical:
        raise NotCritical(f"{der.format_blocks()} is not critical (needs v ≥ 1 and m_1 = M_2)")
    code = derived_to_rvt(der)
    blocks = der.blocks
    M = [0] + [b[0] for b in blocks]
    m = [0] + [b[1] for b in blocks]
    v = len(blocks) - 1
    ks = [i for i in range(2, v + 2) if M[i] % M[i - 1] == 0]
    if len(ks) < 2:
        raise SingleStage(f"{der.format_blocks()} has g = {len(ks)}; nothing to truncate")
    r = ks[1] - 1
    ratio = M[r + 1] // M[r]
    s = m[r] - ratio + 1
    omega = "".join("V" + "T" * (m[j] - 1) for j in range(r - 1, 1, -1)) + "V" + "T" * (M[2] - 2)
    beta_blocks = [(1, ratio)] + [(M[b] // M[r], m[b]) for b in range(r + 1, v + 2)]
    beta = DerivedVector(tuple(beta_blocks))
    result = Truncation(beta, s, omega, r)
    if check:
        parsed = parse_truncation(code, s, omega)
        if parsed != beta:
            raise RoundTripFailure(
                f"tilde relations give {beta.format_blocks()}, "
                f"parsing the stripped code gives {parsed.format_blocks()}"
            )
    return result


def parse_truncation(code: RvtCode, s: int, omega: str) -> DerivedVector:
    """Derived vector of ``code`` with its trailing ``R^s omega`` removed."""
    tail = "R" * s + omega
    if not code.letters.endswith(tail):
        raise RoundTripFailure(f"{code.letters} does not end with R^{s} {omega}")
    prefix = code.letters[: len(code.letters) - len(tail)]
    if not prefix or prefix[-1] == "R":
        raise RoundTripFailure(f"R-run before {omega!r} in {code.letters} is longer than s = {s}")
    return rvt_to_derived(prefix)
