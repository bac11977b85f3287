"""The surface model Sigma_{g,n+1} and its first homology.

Homology classes are written in the fixed basis

    A(1), B(1), ..., A(g), B(g), D(1), ..., D(n)

where A(i), B(i) are the classes of the handle curves alpha_i, beta_i and
D(j) is the class of the boundary component d_j.  The component d_0 is the
dependent one: [d_0] = -(D(1) + ... + D(n)).

Integral classes are plain integer tuples.  Mod-2 classes are stored as int
bitmasks (bit k is coordinate k) inside :class:`F2Class`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInputError

IntClass = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SurfaceSig:
    """Genus and number of boundary components of a compact surface."""

    genus: int
    boundary_count: int

    def __post_init__(self) -> None:
        if isinstance(self.genus, bool) or not isinstance(self.genus, int):
            raise InvalidInputError(f"genus must be an integer, got {self.genus!r}")
        if isinstance(self.boundary_count, bool) or not isinstance(self.boundary_count, int):
            raise InvalidInputError(
                f"boundary count must be an integer, got {self.boundary_count!r}"
            )
        if self.genus < 0:
            raise InvalidInputError(f"genus must be >= 0, got {self.genus}")
        if self.boundary_count < 1:
            raise InvalidInputError(
                f"boundary count must be >= 1, got {self.boundary_count}"
            )

    @classmethod
    def from_gn(cls, g: int, n: int) -> SurfaceSig:
        """Build Sigma_{g,n+1} from the genus and the number of free boundary classes."""
        return cls(g, n + 1)

    @property
    def n(self) -> int:
        return self.boundary_count - 1

    @property
    def rank(self) -> int:
        """First Betti number 2g + n."""
        return 2 * self.genus + self.n

    @property
    def euler_characteristic(self) -> int:
        return 1 - 2 * self.genus - self.n

    def __str__(self) -> str:
        return f"Sigma_{{{self.genus},{self.boundary_count}}}"


class BasisIndex(NamedTuple):
    """One basis element: ``kind`` is ``"A"``, ``"B"`` or ``"D"``; ``index`` is 1-based."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}({self.index})"


def basis(sig: SurfaceSig) -> list[BasisIndex]:
    out = []
    for i in range(1, sig.genus + 1):
        out.append(BasisIndex("A", i))
        out.append(BasisIndex("B", i))
    out.extend(BasisIndex("D", j) for j in range(1, sig.n + 1))
    return out


def position(sig: SurfaceSig, idx: BasisIndex) -> int:
    """Coordinate position of a basis element."""
    kind, i = idx
    if kind in ("A", "B"):
        if not 1 <= i <= sig.genus:
            raise InvalidInputError(f"handle index {i} out of range for {sig}")
        return 2 * (i - 1) + (kind == "B")
    if kind == "D":
        if not 1 <= i <= sig.n:
            raise InvalidInputError(f"boundary index {i} out of range for {sig}")
        return 2 * sig.genus + i - 1
    raise InvalidInputError(f"unknown basis kind {kind!r}")


def unit(sig: SurfaceSig, kind: str, index: int) -> IntClass:
    coords = [0] * sig.rank
    coords[position(sig, BasisIndex(kind, index))] = 1
    return tuple(coords)


def check_int_class(sig: SurfaceSig, x: Sequence[int]) -> IntClass:
    if len(x) != sig.rank:
        raise InvalidInputError(
            f"class has {len(x)} coordinates, {sig} needs {sig.rank}"
        )
    return tuple(int(v) for v in x)


def intersection(sig: SurfaceSig, x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection number with the convention A(i).B(i) = +1."""
    x = check_int_class(sig, x)
    y = check_int_class(sig, y)
    total = 0
    for i in range(sig.genus):
        a, b = 2 * i, 2 * i + 1
        total += x[a] * y[b] - x[b] * y[a]
    return total


def euler_characteristic(sig: SurfaceSig) -> int:
    return sig.euler_characteristic


# ---------------------------------------------------------------------------
# mod 2


def _handle_masks(sig: SurfaceSig) -> tuple[int, int]:
    mask_a = 0
    for i in range(sig.genus):
        mask_a |= 1 << (2 * i)
    return mask_a, mask_a << 1


@dataclass(frozen=True)
class F2Class:
    """A class in H_1(Sigma; Z/2) as a bitmask over the fixed basis."""

    sig: SurfaceSig
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.sig.rank:
            raise InvalidInputError(f"mask {self.mask} does not fit {self.sig}")

    @classmethod
    def from_bits(cls, sig: SurfaceSig, bits: Sequence[int]) -> F2Class:
        if len(bits) != sig.rank:
            raise InvalidInputError(
                f"class has {len(bits)} coordinates, {sig} needs {sig.rank}"
            )
        mask = 0
        for k, b in enumerate(bits):
            if b not in (0, 1):
                raise InvalidInputError(f"bit {k} is {b!r}, expected 0 or 1")
            mask |= b << k
        return cls(sig, mask)

    @classmethod
    def from_int_class(cls, sig: SurfaceSig, x: Sequence[int]) -> F2Class:
        return cls.from_bits(sig, [v % 2 for v in check_int_class(sig, x)])

    @classmethod
    def zero(cls, sig: SurfaceSig) -> F2Class:
        return cls(sig, 0)

    @classmethod
    def unit(cls, sig: SurfaceSig, kind: str, index: int) -> F2Class:
        return cls(sig, 1 << position(sig, BasisIndex(kind, index)))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> k) & 1 for k in range(self.sig.rank))

    def __add__(self, other: F2Class) -> F2Class:
        _same_sig(self.sig, other.sig)
        return F2Class(self.sig, self.mask ^ other.mask)

    __sub__ = __add__

    def __str__(self) -> str:
        names = [str(e) for e, b in zip(basis(self.sig), self.bits) if b]
        return "+".join(names) if names else "0"


def _same_sig(s: SurfaceSig, t: SurfaceSig) -> None:
    if s != t:
        raise InvalidInputError(f"surface mismatch: {s} vs {t}")


def dual_mask(sig: SurfaceSig, mask: int) -> int:
    """Bitmask of the functional ``y -> y . x`` evaluated on the basis.

    Mod 2, e_{A(i)}.x = x_{B(i)} and e_{B(i)}.x = x_{A(i)}; boundary classes
    pair to zero with everything.
    """
    mask_a, mask_b = _handle_masks(sig)
    return ((mask & mask_a) << 1) | ((mask & mask_b) >> 1)


def pair_masks(sig: SurfaceSig, x: int, y: int) -> int:
    return bin(x & dual_mask(sig, y)).count("1") & 1


def intersection_mod2(sig: SurfaceSig, x: F2Class, y: F2Class) -> int:
    _same_sig(sig, x.sig)
    _same_sig(sig, y.sig)
    return pair_masks(sig, x.mask, y.mask)


def boundary_class(sig: SurfaceSig, j: int) -> tuple[F2Class, IntClass]:
    """Class of the boundary component d_j, mod 2 and integrally."""
    if not 0 <= j <= sig.n:
        raise InvalidInputError(f"boundary component {j} out of range for {sig}")
    if j >= 1:
        x = unit(sig, "D", j)
        return F2Class.from_int_class(sig, x), x
    coords = [0] * sig.rank
    for k in range(1, sig.n + 1):
        coords[position(sig, BasisIndex("D", k))] = -1
    x = tuple(coords)
    return F2Class.from_int_class(sig, x), x


def boundary_fundamental_class_mod2(sig: SurfaceSig) -> tuple[F2Class, tuple[int, ...]]:
    """Image of [dSigma]_2 in H_1(Sigma; Z/2) and its indicator on H_1(dSigma; Z/2)."""
    image = F2Class.zero(sig)
    for j in range(sig.n + 1):
        image = image + boundary_class(sig, j)[0]
    return image, (1,) * sig.boundary_count


def all_classes(sig: SurfaceSig) -> Iterator[F2Class]:
    for mask in range(1 << sig.rank):
        yield F2Class(sig, mask)


def parse_surface(doc: object) -> SurfaceSig:
    """Read ``{"genus": g, "boundary": n+1}``."""
    if not isinstance(doc, dict):
        raise InvalidInputError("surface descriptor must be a JSON object")
    try:
        g = doc["genus"]
        b = doc["boundary"]
    except KeyError as exc:
        raise InvalidInputError(f"surface descriptor is missing {exc.args[0]!r}") from None
    return SurfaceSig(_as_int(g, "genus"), _as_int(b, "boundary"))


def surface_to_json(sig: SurfaceSig) -> dict[str, int]:
    return {"genus": sig.genus, "boundary": sig.boundary_count}


def _as_int(value: object, name: str) -> int:
    if isinstance(value, bool):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError:
            pass
    raise InvalidInputError(f"{name} must be an integer, got {value!r}")


as_int = _as_int
