"""Absolute framings and their mapping class group orbits.

A framing of Sigma_{g,n+1} is determined by its rotation numbers on
alpha_i, beta_i and d_1..d_n; every integer vector occurs.  The rotation
number of d_0 is not free: the boundary rotation numbers sum to the Euler
characteristic.

Orbits are classified by the boundary profile nu_j = rot(d_j) + 1 together
with

* nothing else in genus 0,
* Ã = gcd(rot(alpha), rot(beta), nu_0, ..., nu_n) in genus 1,
* the Arf invariant in genus >= 2 when every nu_j is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union

from . import spin
from .errors import InfeasibleError, InvalidInputError, PreconditionError
from .generators import Generator, Word, compress
from .surface import SurfaceSig, _same_sig, as_int, parse_surface, surface_to_json


@dataclass(frozen=True)
class Framing:
    sig: SurfaceSig
    rot_a: tuple[int, ...]
    rot_b: tuple[int, ...]
    rot_d: tuple[int, ...]

    def __post_init__(self) -> None:
        g, n = self.sig.genus, self.sig.n
        for name, vec, size in (("rot_alpha", self.rot_a, g), ("rot_beta", self.rot_b, g),
                                ("rot_boundary", self.rot_d, n)):
            if len(vec) != size:
                raise InvalidInputError(f"{name} has {len(vec)} entries, {self.sig} needs {size}")

    @classmethod
    def make(cls, sig: SurfaceSig, rot_a: Sequence[int] = (), rot_b: Sequence[int] = (),
             rot_d: Sequence[int] = ()) -> Framing:
        return cls(sig, tuple(rot_a), tuple(rot_b), tuple(rot_d))

    @classmethod
    def from_coords(cls, sig: SurfaceSig, coords: Sequence[int]) -> Framing:
        """Inverse of :attr:`coords` (basis order A(1), B(1), ..., D(n))."""
        if len(coords) != sig.rank:
            raise InvalidInputError(f"{len(coords)} coordinates given, {sig} needs {sig.rank}")
        g = sig.genus
        return cls(sig, tuple(coords[0:2 * g:2]), tuple(coords[1:2 * g:2]), tuple(coords[2 * g:]))

    @property
    def coords(self) -> tuple[int, ...]:
        out: list[int] = []
        for a, b in zip(self.rot_a, self.rot_b):
            out += (a, b)
        return tuple(out) + self.rot_d

    @property
    def rot_0(self) -> int:
        """Rotation number of d_0, forced by Poincare-Hopf."""
        return self.sig.euler_characteristic - sum(self.rot_d)

    @property
    def boundary_rots(self) -> tuple[int, ...]:
        return (self.rot_0,) + self.rot_d

    def replace(self, rot_a: Sequence[int] | None = None,
                rot_b: Sequence[int] | None = None) -> Framing:
        return Framing(self.sig,
                       self.rot_a if rot_a is None else tuple(rot_a),
                       self.rot_b if rot_b is None else tuple(rot_b),
                       self.rot_d)


# ---------------------------------------------------------------------------
# orbit keys


@dataclass(frozen=True)
class Genus0Key:
    nu: tuple[int, ...]


@dataclass(frozen=True)
class Genus1Key:
    nu: tuple[int, ...]
    a_tilde: int


@dataclass(frozen=True)
class GenusHighKey:
    nu: tuple[int, ...]
    arf: int | None


OrbitKey = Union[Genus0Key, Genus1Key, GenusHighKey]


def nu_profile(f: Framing) -> tuple[int, ...]:
    return tuple(r + 1 for r in f.boundary_rots)


def _all_even(nu: Iterable[int]) -> bool:
    return all(v % 2 == 0 for v in nu)


def gcd_all(values: Iterable[int]) -> int:
    out = 0
    for v in values:
        out = gcd(out, v)
    return out


def arf_framing(f: Framing) -> int:
    nu = nu_profile(f)
    if not _all_even(nu):
        raise PreconditionError(
            f"Arf invariant of a framing needs every boundary rotation number odd, nu = {nu}"
        )
    return sum((a + 1) * (b + 1) for a, b in zip(f.rot_a, f.rot_b)) % 2


def spin_of(f: Framing) -> spin.QuadForm:
    """The mod-2 reduction: w_f(e) = rot_f(e) + 1 on every basis curve."""
    return spin.QuadForm.from_bits(f.sig, [(r + 1) % 2 for r in f.coords])


def a_tilde(f: Framing) -> int | None:
    g = f.sig.genus
    if g == 0:
        return None
    if g >= 2:
        return 1
    return gcd_all((f.rot_a[0], f.rot_b[0]) + nu_profile(f))


def orbit_key(f: Framing) -> OrbitKey:
    nu = nu_profile(f)
    g = f.sig.genus
    if g == 0:
        return Genus0Key(nu)
    if g == 1:
        return Genus1Key(nu, a_tilde(f))
    return GenusHighKey(nu, arf_framing(f) if _all_even(nu) else None)


def same_orbit(f1: Framing, f2: Framing) -> bool:
    _same_sig(f1.sig, f2.sig)
    return orbit_key(f1) == orbit_key(f2)


# ---------------------------------------------------------------------------
# generator actions


def _check_generator(sig: SurfaceSig, gen: Generator) -> None:
    g, n = sig.genus, sig.n
    kind = gen.kind
    if kind in ("TwistA", "TwistB", "EvenShiftA", "EvenShiftB"):
        if not 1 <= gen.index[0] <= g:
            raise InvalidInputError(f"{gen}: handle index out of range for {sig}")
        if kind.startswith("EvenShift") and g < 2:
            raise InvalidInputError(f"{gen}: even shifts need genus >= 2, {sig} has genus {g}")
    elif kind == "MixBoundary":
        if g != 1:
            raise InvalidInputError(f"{gen}: MixBoundary needs genus 1, {sig} has genus {g}")
        if not 1 <= gen.index[0] <= n:
            raise InvalidInputError(f"{gen}: boundary index out of range 1..{n}")
    elif kind == "BoundaryTwist":
        if not 0 <= gen.index[0] <= n:
            raise InvalidInputError(f"{gen}: boundary index out of range 0..{n}")
    elif kind == "PantsTwist":
        if not all(1 <= j <= n for j in gen.index):
            raise InvalidInputError(f"{gen}: boundary indices out of range 1..{n}")
    else:
        raise InvalidInputError(f"{gen} does not act on absolute framings")


def apply(f: Framing, gen: Generator) -> Framing:
    """Precompose the framing with the generator (right action)."""
    _check_generator(f.sig, gen)
    kind, p = gen.kind, gen.power
    a, b = list(f.rot_a), list(f.rot_b)
    if kind in ("TwistA", "TwistB", "EvenShiftA", "EvenShiftB"):
        i = gen.index[0] - 1
        if kind == "TwistA":
            b[i] -= p * a[i]
        elif kind == "TwistB":
            a[i] += p * b[i]
        elif kind == "EvenShiftA":
            a[i] += 2 * p
        else:
            b[i] += 2 * p
    elif kind == "MixBoundary":
        b[0] -= p * nu_profile(f)[gen.index[0]]
    # BoundaryTwist and PantsTwist move no absolute coordinate
    return f.replace(a, b)


def apply_word(f: Framing, word: Iterable[Generator]) -> Framing:
    for gen in word:
        f = apply(f, gen)
    return f


def catalog(sig: SurfaceSig) -> list[Generator]:
    """Every unit generator (both signs) valid on ``sig``."""
    g, n = sig.genus, sig.n
    out: list[Generator] = []
    for p in (1, -1):
        for i in range(1, g + 1):
            out += [Generator.twist_a(i, p), Generator.twist_b(i, p)]
            if g >= 2:
                out += [Generator.even_shift_a(i, p), Generator.even_shift_b(i, p)]
        if g == 1:
            out += [Generator.mix_boundary(j, p) for j in range(1, n + 1)]
        out += [Generator.boundary_twist(j, p) for j in range(n + 1)]
        out += [Generator.pants_twist(j1, j2, p)
                for j1 in range(1, n + 1) for j2 in range(j1 + 1, n + 1)]
    return out


# ---------------------------------------------------------------------------
# Euclidean reduction in one handle


def euclid_word(a: int, b: int, handle: int = 1) -> tuple[list[Generator], int]:
    """Twist word taking (a, b) to (d, 0) in the given handle; returns (word, d).

    |d| = gcd(a, b); the sign of d is not normalised here.
    """
    word: list[Generator] = []
    while b != 0:
        if a == 0:
            # (0, b) -> (b, b) -> (b, 0)
            word += [Generator.twist_b(handle, 1), Generator.twist_a(handle, 1)]
            a, b = b, 0
            break
        q = b // a
        if q:
            word.append(Generator.twist_a(handle, q))
            b -= q * a
        if b == 0:
            break
        q = a // b
        word.append(Generator.twist_b(handle, -q))
        a -= q * b
    return word, a


def negate_axis_word(handle: int = 1) -> list[Generator]:
    """Twist word taking (d, 0) to (-d, 0)."""
    return [Generator.twist_a(handle, 1), Generator.twist_b(handle, 2),
            Generator.twist_a(handle, 1)]


# ---------------------------------------------------------------------------
# canonical forms


def _canonical_interior(sig: SurfaceSig, arf: int | None) -> list[int]:
    """Lexicographically least {0,1} interior vector with the requested Arf.

    All zeros has Arf = g mod 2; switching on only the last coordinate (b_g)
    kills the last handle's contribution and is the next vector in
    lexicographic order that changes Arf.
    """
    g = sig.genus
    coords = [0] * (2 * g)
    if arf is not None and arf != g % 2:
        coords[-1] = 1
    return coords


def canonicalize(f: Framing) -> tuple[Framing, Word | None]:
    """Canonical representative of the orbit of ``f`` and, for genus <= 1, a witness word.

    The word replays ``f`` onto the representative through :func:`apply_word`.
    """
    g = f.sig.genus
    if g == 0:
        return f, ()
    if g >= 2:
        key = orbit_key(f)
        interior = _canonical_interior(f.sig, key.arf)
        return Framing.from_coords(f.sig, interior + list(f.rot_d)), None

    nu = nu_profile(f)
    word, d = euclid_word(f.rot_a[0], f.rot_b[0])
    for j in range(1, f.sig.n + 1):
        if nu[j] == 0 or (d != 0 and nu[j] % d == 0):
            continue
        # (d, 0) -> (d, nu_j), then Euclid again down to gcd(d, nu_j)
        word.append(Generator.mix_boundary(j, -1))
        step, d = euclid_word(d, nu[j])
        word += step
    if d < 0:
        word += negate_axis_word()
        d = -d
    word_t = compress(word)
    target = f.replace((d,), (0,))
    if apply_word(f, word_t) != target:  # pragma: no cover - internal consistency guard
        raise AssertionError(f"canonical word failed to replay for {f}")
    return target, word_t


def even_lattice_word(f1: Framing, f2: Framing) -> Word | None:
    """EvenShift word taking f1 to f2 when they agree mod 2 (genus >= 2)."""
    _same_sig(f1.sig, f2.sig)
    if f1.sig.genus < 2 or f1.rot_d != f2.rot_d:
        return None
    word = []
    for i, (a1, a2, b1, b2) in enumerate(zip(f1.rot_a, f2.rot_a, f1.rot_b, f2.rot_b), 1):
        if (a2 - a1) % 2 or (b2 - b1) % 2:
            return None
        word.append(Generator.even_shift_a(i, (a2 - a1) // 2))
        word.append(Generator.even_shift_b(i, (b2 - b1) // 2))
    return compress(word)


def equivalence_witness(f1: Framing, f2: Framing) -> Word | None:
    """A word taking f1 to f2, when one can be produced.

    Genus <= 1 words come from the two canonical reductions; in genus >= 2
    only pairs that agree mod 2 get an (even-shift) witness.
    """
    if not same_orbit(f1, f2):
        return None
    if f1.sig.genus >= 2:
        return even_lattice_word(f1, f2)
    _, w1 = canonicalize(f1)
    _, w2 = canonicalize(f2)
    return compress(tuple(w1) + tuple(g.inverse() for g in reversed(w2)))


# ---------------------------------------------------------------------------
# realization


def check_profile(sig: SurfaceSig, nu: Sequence[int]) -> tuple[int, ...]:
    nu = tuple(nu)
    if len(nu) != sig.boundary_count:
        raise InvalidInputError(f"nu has {len(nu)} entries, {sig} has {sig.boundary_count} boundary components")
    if sum(nu) != 2 - 2 * sig.genus:
        raise InfeasibleError(
            f"boundary profile {nu} sums to {sum(nu)}, Poincare-Hopf requires {2 - 2 * sig.genus}"
        )
    return nu


def realize(sig: SurfaceSig, key: OrbitKey) -> Framing:
    """A framing whose orbit key is ``key``."""
    nu = check_profile(sig, key.nu)
    rot_d = tuple(v - 1 for v in nu[1:])
    g = sig.genus
    if g == 0:
        if not isinstance(key, Genus0Key):
            raise InvalidInputError(f"{sig} needs a genus-0 key")
        return Framing(sig, (), (), rot_d)
    if g == 1:
        if not isinstance(key, Genus1Key):
            raise InvalidInputError(f"{sig} needs a genus-1 key")
        c = gcd_all(nu)
        at = key.a_tilde
        if at < 0:
            raise InfeasibleError(f"a_tilde must be non-negative, got {at}")
        if c != 0 and (at == 0 or c % at):
            raise InfeasibleError(
                f"a_tilde = {at} is not a positive divisor of gcd(nu) = {c}"
            )
        return Framing(sig, (at,), (0,), rot_d)
    if not isinstance(key, GenusHighKey):
        raise InvalidInputError(f"{sig} needs a genus >= 2 key")
    if _all_even(nu) != (key.arf is not None):
        if key.arf is None:
            raise InfeasibleError("Arf must be given when every nu_j is even")
        raise InfeasibleError("Arf is undefined unless every nu_j is even")
    if key.arf not in (None, 0, 1):
        raise InvalidInputError(f"arf must be 0 or 1, got {key.arf}")
    interior = _canonical_interior(sig, key.arf)
    return Framing.from_coords(sig, interior + list(rot_d))


# ---------------------------------------------------------------------------
# JSON


def framing_to_json(f: Framing) -> dict:
    return {
        "surface": surface_to_json(f.sig),
        "rot_alpha": list(f.rot_a),
        "rot_beta": list(f.rot_b),
        "rot_boundary": list(f.rot_d),
        "rot_boundary_0": f.rot_0,
    }


def framing_from_json(doc: object) -> Framing:
    if not isinstance(doc, dict):
        raise InvalidInputError("framing must be a JSON object")
    sig = parse_surface(doc.get("surface"))

    def vec(name: str) -> tuple[int, ...]:
        raw = doc.get(name, [])
        if not isinstance(raw, list):
            raise InvalidInputError(f"{name} must be a list")
        return tuple(as_int(v, name) for v in raw)

    f = Framing(sig, vec("rot_alpha"), vec("rot_beta"), vec("rot_boundary"))
    if "rot_boundary_0" in doc:
        r0 = as_int(doc["rot_boundary_0"], "rot_boundary_0")
        if r0 != f.rot_0:
            raise InfeasibleError(
                f"rot_boundary_0 = {r0} contradicts Poincare-Hopf (expected {f.rot_0})"
            )
    return f


def key_to_json(key: OrbitKey) -> dict:
    if isinstance(key, Genus0Key):
        return {"kind": "genus0", "nu": list(key.nu)}
    if isinstance(key, Genus1Key):
        return {"kind": "genus1", "nu": list(key.nu), "a_tilde": key.a_tilde}
    return {"kind": "genus_high", "nu": list(key.nu), "arf": key.arf}


def key_from_json(doc: object) -> OrbitKey:
    if not isinstance(doc, dict) or "kind" not in doc or "nu" not in doc:
        raise InvalidInputError("orbit key must be an object with 'kind' and 'nu'")
    if not isinstance(doc["nu"], list):
        raise InvalidInputError("nu must be a list")
    nu = tuple(as_int(v, "nu") for v in doc["nu"])
    kind = doc["kind"]
    if kind == "genus0":
        return Genus0Key(nu)
    if kind == "genus1":
        return Genus1Key(nu, as_int(doc.get("a_tilde"), "a_tilde"))
    if kind == "genus_high":
        arf = doc.get("arf")
        return GenusHighKey(nu, None if arf is None else as_int(arf, "arf"))
    raise InvalidInputError(f"unknown orbit key kind {kind!r}")
