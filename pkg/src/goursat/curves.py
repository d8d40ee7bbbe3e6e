"""Puiseux characteristic of a plane branch ``(t^m, sum a_k t^k)``.

Only the exponent support ``{k : a_k != 0}`` matters, so a branch is modelled
by its multiplicity and that support; coefficients are never stored. Putting
a curve into this normal form in the first place is the caller's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadlyParametrized, InvalidPuiseux, MalformedBranch
from .invariants import PuiseuxCharacteristic


@dataclass(frozen=True)
class BranchSupport:
    m: int
    exps: tuple[int, ...] = ()

    def __post_init__(self):
        exps = tuple(sorted(set(int(k) for k in self.exps)))
        object.__setattr__(self, "exps", exps)
        if self.m < 2:
            raise MalformedBranch(f"multiplicity must be at least 2, got {self.m}")
        if exps and exps[0] < self.m:
            raise MalformedBranch(f"exponent {exps[0]} is below the multiplicity {self.m}")


def is_well_parametrized(branch: BranchSupport) -> bool:
    return math.gcd(branch.m, *branch.exps) == 1


def puiseux_from_exponents(branch: BranchSupport) -> PuiseuxCharacteristic:
    e = branch.m
    lams = []
    while e > 1:
        # smallest support exponent not divisible by the current gcd
        nxt = next((k for k in branch.exps if k % e), None)
        if nxt is None:
            raise BadlyParametrized(
                f"every exponent is divisible by {e}; (t^{branch.m}, ...) factors "
                f"through t -> t^{e}"
            )
        lams.append(nxt)
        e = math.gcd(e, nxt)
    return PuiseuxCharacteristic(branch.m, tuple(lams))


@dataclass(frozen=True)
class PuiseuxValidation:
    valid: bool
    chain: tuple[int, ...]
    problems: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.valid


def validate_puiseux(pc: PuiseuxCharacteristic) -> PuiseuxValidation:
    problems = []
    if pc.lambda0 < 2:
        problems.append(f"lambda_0 = {pc.lambda0} < 2")
    seq = pc.as_tuple()
    for j in range(1, len(seq)):
        if seq[j] <= seq[j - 1]:
            problems.append(f"lambda_{j} = {seq[j]} does not exceed lambda_{j - 1} = {seq[j - 1]}")
    chain = pc.e_chain() if pc.lambda0 > 0 else (pc.lambda0,)
    for j in range(1, len(chain)):
        if chain[j] >= chain[j - 1]:
            problems.append(
                f"e_{j} = gcd(e_{j - 1}, lambda_{j}) = {chain[j]} does not drop below e_{j - 1} = {chain[j - 1]}"
            )
    if chain[-1] != 1:
        problems.append(f"chain ends at e_{len(chain) - 1} = {chain[-1]}, not 1")
    return PuiseuxValidation(not problems, chain, tuple(problems))


def witness_exponents(pc: PuiseuxCharacteristic) -> BranchSupport:
    """Smallest branch support realising ``pc``: exactly ``{lambda_1, ..., lambda_g}``."""
    check = validate_puiseux(pc)
    if not check:
        raise InvalidPuiseux(f"{pc}: " + "; ".join(check.problems))
    return BranchSupport(pc.lambda0, pc.exponents)
