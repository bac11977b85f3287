"""Spin structures as quadratic forms on H_1(Sigma; Z/2).

A quadratic form is stored by its values on the basis.  Its value on an
arbitrary class is the unique extension whose polarization is the mod-2
intersection pairing::

    w(x) = sum_k x_k w(e_k) + sum_i x_{A(i)} x_{B(i)}   (mod 2)

(the only basis pairs with nonzero pairing are A(i), B(i)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleError, InvalidInputError, PreconditionError
from .surface import (
    F2Class,
    SurfaceSig,
    _handle_masks,
    _same_sig,
    dual_mask,
)


def _popparity(mask: int) -> int:
    return bin(mask).count("1") & 1


def _bits_to_mask(bits: Sequence[int], length: int, what: str) -> int:
    if len(bits) != length:
        raise InvalidInputError(f"{what} has {len(bits)} entries, expected {length}")
    mask = 0
    for k, b in enumerate(bits):
        if b not in (0, 1):
            raise InvalidInputError(f"{what}[{k}] is {b!r}, expected 0 or 1")
        mask |= b << k
    return mask


@dataclass(frozen=True)
class QuadForm:
    sig: SurfaceSig
    base_mask: int

    @classmethod
    def from_bits(cls, sig: SurfaceSig, base: Sequence[int]) -> QuadForm:
        return cls(sig, _bits_to_mask(base, sig.rank, "base"))

    @property
    def base(self) -> tuple[int, ...]:
        return tuple((self.base_mask >> k) & 1 for k in range(self.sig.rank))

    def sort_key(self) -> tuple[int, ...]:
        return self.base

    def __str__(self) -> str:
        return "".join(map(str, self.base)) or "-"


@dataclass(frozen=True)
class LinFunctional:
    """An element of H^1(Sigma; Z/2), given by its values on the basis."""

    sig: SurfaceSig
    mask: int

    @property
    def values(self) -> tuple[int, ...]:
        return tuple((self.mask >> k) & 1 for k in range(self.sig.rank))

    def __call__(self, x: F2Class) -> int:
        _same_sig(self.sig, x.sig)
        return _popparity(self.mask & x.mask)


@dataclass(frozen=True)
class BoundaryFunctional:
    """An element of H^1(dSigma; Z/2): one bit per boundary component d_0..d_n."""

    sig: SurfaceSig
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.sig.boundary_count:
            raise InvalidInputError(
                f"boundary functional has {len(self.values)} entries, "
                f"{self.sig} has {self.sig.boundary_count} boundary components"
            )
        if any(v not in (0, 1) for v in self.values):
            raise InvalidInputError(f"boundary functional entries must be bits: {self.values}")

    @property
    def total(self) -> int:
        """Value on the fundamental class [dSigma]_2."""
        return sum(self.values) & 1

    def is_zero(self) -> bool:
        return not any(self.values)


def _eval_mask(sig: SurfaceSig, base_mask: int, x: int) -> int:
    mask_a, _ = _handle_masks(sig)
    cross = x & (x >> 1) & mask_a
    return _popparity(x & base_mask) ^ _popparity(cross)


def eval(omega: QuadForm, x: F2Class) -> int:  # noqa: A001 - mirrors the math name
    _same_sig(omega.sig, x.sig)
    return _eval_mask(omega.sig, omega.base_mask, x.mask)


def transvect_class(a: F2Class, x: F2Class) -> F2Class:
    """T_a(x) = x + (x.a) a, the homology action of the Dehn twist along a."""
    _same_sig(a.sig, x.sig)
    if _popparity(x.mask & dual_mask(a.sig, a.mask)):
        return F2Class(a.sig, x.mask ^ a.mask)
    return x


def coboundary(omega: QuadForm, a: F2Class) -> LinFunctional:
    """m_w(T_a) = (w(a) + 1) (a .)"""
    _same_sig(omega.sig, a.sig)
    if eval(omega, a):
        return LinFunctional(omega.sig, 0)
    return LinFunctional(omega.sig, dual_mask(omega.sig, a.mask))


def act_transvection(omega: QuadForm, a: F2Class) -> QuadForm:
    """The form w o T_a."""
    shift = coboundary(omega, a)
    return QuadForm(omega.sig, omega.base_mask ^ shift.mask)


def act_word(omega: QuadForm, directions: Sequence[F2Class]) -> QuadForm:
    """Right action of T_{a_1} T_{a_2} ... T_{a_k}: the result is w o T_{a_1} o ... o T_{a_k}."""
    for a in directions:
        omega = act_transvection(omega, a)
    return omega


def difference(omega1: QuadForm, omega2: QuadForm) -> LinFunctional:
    """w2 - w1 as a linear functional."""
    _same_sig(omega1.sig, omega2.sig)
    return LinFunctional(omega1.sig, omega1.base_mask ^ omega2.base_mask)


def restrict_boundary(omega: QuadForm) -> BoundaryFunctional:
    sig = omega.sig
    g2 = 2 * sig.genus
    tail = tuple((omega.base_mask >> (g2 + j)) & 1 for j in range(sig.n))
    # d_0 is homologous (mod 2) to D(1)+...+D(n); boundary classes pair trivially
    h0 = sum(tail) & 1
    return BoundaryFunctional(sig, (h0,) + tail)


def base_form(sig: SurfaceSig, h: BoundaryFunctional | Sequence[int]) -> QuadForm:
    """The form w^{0,h}: zero on every alpha_i, beta_i and equal to h on the boundary."""
    if not isinstance(h, BoundaryFunctional):
        h = BoundaryFunctional(sig, tuple(h))
    _same_sig(sig, h.sig)
    if h.total:
        raise InfeasibleError(
            f"boundary functional {h.values} is nonzero on the fundamental class"
        )
    mask = 0
    for j, v in enumerate(h.values[1:]):
        mask |= v << (2 * sig.genus + j)
    return QuadForm(sig, mask)


def arf(omega: QuadForm) -> int:
    h = restrict_boundary(omega)
    if not h.is_zero():
        raise PreconditionError(
            f"Arf invariant needs zero boundary restriction, got {h.values}"
        )
    m = omega.base_mask
    mask_a, _ = _handle_masks(omega.sig)
    return _popparity(m & (m >> 1) & mask_a)


def same_orbit(omega1: QuadForm, omega2: QuadForm) -> F2Class | None:
    """Decide whether two forms lie in one mapping class group orbit.

    Returns a witness class x with w1(x) = 0 and w2 - w1 = x. when they do,
    otherwise None.  The handle part of x is forced by the difference; among
    the 2^n radical translates the lexicographically first one (scanning
    D(1), ..., D(n) as most-to-least significant) with w1(x) = 0 is chosen.
    """
    sig = omega1.sig
    delta = difference(omega1, omega2).mask
    g2 = 2 * sig.genus
    if delta >> g2:
        # x. vanishes on every D(j)
        return None
    x = dual_mask(sig, delta)
    if _eval_mask(sig, omega1.base_mask, x) == 0:
        return F2Class(sig, x)
    # w1(x + D(j)) = w1(x) + w1(D(j)); the lexicographically first fix is the
    # single D(j) with the largest j among those where w1 is 1.
    for j in range(sig.n, 0, -1):
        if (omega1.base_mask >> (g2 + j - 1)) & 1:
            return F2Class(sig, x | (1 << (g2 + j - 1)))
    return None


def orbit_count(sig: SurfaceSig, h: BoundaryFunctional | Sequence[int]) -> int:
    """Number of orbits of forms restricting to h on the boundary."""
    if not isinstance(h, BoundaryFunctional):
        h = BoundaryFunctional(sig, tuple(h))
    if h.total:
        return 0
    if not h.is_zero() or sig.genus == 0:
        return 1
    return 2


def all_forms(sig: SurfaceSig) -> list[QuadForm]:
    return [QuadForm(sig, m) for m in range(1 << sig.rank)]


def describe(omega: QuadForm) -> dict:
    """Classification data of a single form."""
    h = restrict_boundary(omega)
    out = {
        "base": list(omega.base),
        "boundary_restriction": list(h.values),
        "orbits_over_restriction": orbit_count(omega.sig, h),
        "arf": arf(omega) if h.is_zero() else None,
    }
    return out


__all__ = [
    "BoundaryFunctional",
    "LinFunctional",
    "QuadForm",
    "act_transvection",
    "act_word",
    "all_forms",
    "arf",
    "base_form",
    "coboundary",
    "describe",
    "difference",
    "eval",
    "orbit_count",
    "restrict_boundary",
    "same_orbit",
    "transvect_class",
]
