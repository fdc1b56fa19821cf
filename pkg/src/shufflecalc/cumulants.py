"""State <-> cumulant transforms, inter-cumulant conversions, c-free
cumulants of a pair of states, and the four convolutions.

Moment tables extend multiplicatively to characters; cumulant tables extend
to infinitesimal characters.  All transforms materialize the resulting
functional back into a table on every word up to the shared truncation
degree, so results are exact and serializable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from . import series
from .functionals import (
    CumulantTable,
    MomentTable,
    character,
    conv,
    half_left,
    half_right,
    infinitesimal,
    inverse,
    materialize,
    unit,
)

FREE = "free"
BOOLEAN = "boolean"
MONOTONE = "monotone"
CFREE = "cfree"
KINDS = (FREE, BOOLEAN, MONOTONE)


@dataclass(frozen=True)
class StatePair:
    """A pair of states (phi, psi) on a shared alphabet and truncation."""

    phi: MomentTable
    psi: MomentTable

    def __post_init__(self):
        self.phi._check_compatible(self.psi)

    @property
    def alphabet(self):
        return self.phi.alphabet

    @property
    def max_len(self) -> int:
        return self.phi.max_len

    def to_json(self) -> dict:
        return {"phi": self.phi.to_json(), "psi": self.psi.to_json()}

    @classmethod
    def from_json(cls, obj) -> "StatePair":
        try:
            phi, psi = obj["phi"], obj["psi"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed state pair JSON: {exc}") from exc
        return cls(MomentTable.from_json(phi), MomentTable.from_json(psi))


def unit_state(alphabet, max_len: int) -> MomentTable:
    """The character extension of the counit: all moments of nonempty words
    vanish."""
    return MomentTable.zeros(alphabet, max_len)


def free_cumulants(phi: MomentTable) -> CumulantTable:
    """Left half-shuffle logarithm of the state, as a table."""
    f = series.log_left(character(phi))
    return materialize(f, phi.alphabet, phi.max_len, CumulantTable)


def boolean_cumulants(phi: MomentTable) -> CumulantTable:
    """Right half-shuffle logarithm of the state, as a table."""
    f = series.log_right(character(phi))
    return materialize(f, phi.alphabet, phi.max_len, CumulantTable)


def monotone_cumulants(phi: MomentTable) -> CumulantTable:
    """Convolution logarithm of the state, as a table."""
    f = series.log_conv(character(phi))
    return materialize(f, phi.alphabet, phi.max_len, CumulantTable)


def moments_from_free(kappa: CumulantTable) -> MomentTable:
    f = series.exp_left(infinitesimal(kappa))
    return materialize(f, kappa.alphabet, kappa.max_len, MomentTable)


def moments_from_boolean(beta: CumulantTable) -> MomentTable:
    f = series.exp_right(infinitesimal(beta))
    return materialize(f, beta.alphabet, beta.max_len, MomentTable)


def moments_from_monotone(rho: CumulantTable) -> MomentTable:
    f = series.exp_conv(infinitesimal(rho))
    return materialize(f, rho.alphabet, rho.max_len, MomentTable)


_TO_MOMENTS = {
    FREE: moments_from_free,
    BOOLEAN: moments_from_boolean,
    MONOTONE: moments_from_monotone,
}
_FROM_MOMENTS = {
    FREE: free_cumulants,
    BOOLEAN: boolean_cumulants,
    MONOTONE: monotone_cumulants,
}


def convert(table: CumulantTable, src: str, dst: str) -> CumulantTable:
    """Convert between free, boolean and monotone cumulant tables.

    Monotone <-> free/boolean go through the pre-Lie Magnus pair; free <->
    boolean are conjugations by the reconstructed state.
    """
    if src not in KINDS or dst not in KINDS:
        raise DomainError(f"unknown cumulant kind: {src!r} -> {dst!r}")
    if src == dst:
        return table
    alphabet, n = table.alphabet, table.max_len
    a = infinitesimal(table)
    if src == MONOTONE and dst == FREE:
        out = series.magnus_inverse(a)
    elif src == MONOTONE and dst == BOOLEAN:
        out = -series.magnus_inverse(-a)
    elif src == FREE and dst == MONOTONE:
        out = series.magnus(a)
    elif src == BOOLEAN and dst == MONOTONE:
        out = -series.magnus(-a)
    elif src == FREE and dst == BOOLEAN:
        phi = series.exp_left(a)
        out = half_left(half_right(inverse(phi), a), phi)
    else:  # boolean -> free
        phi = series.exp_right(a)
        out = half_left(half_right(phi, a), inverse(phi))
    return materialize(out, alphabet, n, CumulantTable)


def cfree_cumulants(pair: StatePair) -> CumulantTable:
    """c-free cumulants of (phi, psi): the boolean logarithm of phi
    conjugated by psi, ``R = Psi > (Phi^{*-1} > (Phi - e)) < Psi^{*-1}``."""
    phi = character(pair.phi)
    psi = character(pair.psi)
    boolean_log = half_right(inverse(phi), phi - unit())
    r = half_left(half_right(psi, boolean_log), inverse(psi))
    return materialize(r, pair.alphabet, pair.max_len, CumulantTable)


def moments_from_cfree(R: CumulantTable, psi: MomentTable) -> MomentTable:
    """Reconstruct phi from c-free cumulants and the second state:
    ``Phi = E>(Psi^{*-1} > R < Psi)``."""
    R._check_compatible(psi)
    psic = character(psi)
    conjugated = half_left(half_right(inverse(psic), infinitesimal(R)), psic)
    phi = series.exp_right(conjugated)
    return materialize(phi, psi.alphabet, psi.max_len, MomentTable)


def convolve_free(phi1: MomentTable, phi2: MomentTable) -> MomentTable:
    phi1._check_compatible(phi2)
    return moments_from_free(free_cumulants(phi1) + free_cumulants(phi2))


def convolve_boolean(phi1: MomentTable, phi2: MomentTable) -> MomentTable:
    phi1._check_compatible(phi2)
    return moments_from_boolean(boolean_cumulants(phi1) + boolean_cumulants(phi2))


def convolve_monotone(phi1: MomentTable, phi2: MomentTable) -> MomentTable:
    """Monotone convolution is the convolution product of the characters."""
    phi1._check_compatible(phi2)
    product = conv(character(phi1), character(phi2))
    return materialize(product, phi1.alphabet, phi1.max_len, MomentTable)


def convolve_cfree(p1: StatePair, p2: StatePair) -> StatePair:
    """c-free convolution: psi-free cumulants and c-free cumulants both add."""
    p1.phi._check_compatible(p2.phi)
    kappa_psi = free_cumulants(p1.psi) + free_cumulants(p2.psi)
    psi = moments_from_free(kappa_psi)
    r = cfree_cumulants(p1) + cfree_cumulants(p2)
    phi = moments_from_cfree(r, psi)
    return StatePair(phi, psi)
