"""Direct formula from a derived vector to the Puiseux characteristic.

In block form ``((M_1, m_1), ..., (M_{v+1}, m_{v+1}))`` let ``k_1 > ... > k_g``
be the block indices ``k >= 2`` with ``M_{k-1} | M_k``. Then

    lambda_0 = M_{v+1}
    lambda_j = sum_{i >= k_j} m_i M_i + M_{k_j} + M_{k_j - 1}

Flat form: ``lambda_0 = d_N`` and
``lambda_j = sum_{i >= k_j} d_i + d_{k_j} + d_{k_j - 1}`` with ``k_j`` now a
flat index where ``d_{k_j - 1}`` properly divides ``d_{k_j}``. Block values
are distinct, so the two readings coincide; only the block form is computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import derived_to_rvt
from .errors import NotCritical
from .invariants import DerivedVector, PuiseuxCharacteristic


@dataclass(frozen=True)
class DivisibilityProfile:
    values: tuple[int, ...]  # N_1 > ... > N_g
    indices: tuple[int, ...]  # k_1 > ... > k_g, block indices (1-based)

    @property
    def g(self) -> int:
        return len(self.values)

    @property
    def S(self) -> frozenset[int]:
        return frozenset(self.values)


def divisibility_points(der: DerivedVector) -> DivisibilityProfile:
    vals = der.values
    ks = [k for k in range(len(vals), 1, -1) if vals[k - 1] % vals[k - 2] == 0]
    return DivisibilityProfile(tuple(vals[k - 1] for k in ks), tuple(ks))


def puiseux_from_derived(
    der: DerivedVector, check_realizable: bool = True
) -> PuiseuxCharacteristic:
    if not der.is_critical:
        raise NotCritical("immersed: normal form (t, 0)")
    if check_realizable:
        derived_to_rvt(der)
    blocks = der.blocks
    n = len(blocks)
    # tail[k] = sum_{i >= k} m_i M_i, 1-based k
    tail = [0] * (n + 2)
    for k in range(n, 0, -1):
        M, m = blocks[k - 1]
        tail[k] = tail[k + 1] + m * M
    prof = divisibility_points(der)
    lams = tuple(
        tail[k] + blocks[k - 1][0] + blocks[k - 2][0] for k in prof.indices
    )
    return PuiseuxCharacteristic(blocks[-1][0], lams)
