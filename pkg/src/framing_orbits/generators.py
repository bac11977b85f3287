"""Named mapping-class generators and words in them.

A generator carries an integer ``power``; ``power=1`` and ``power=-1`` are
the two signs, larger powers are repeated application.  Every action in the
catalog is affine in the power, so a word never needs more entries than the
number of Euclidean steps that produced it, even for huge coordinates.

Catalog (coordinates are rotation numbers a_i = rot(alpha_i),
b_i = rot(beta_i); c_j are arc ceilings in the relative model; nu_j are the
fixed boundary values rot(d_j) + 1):

=================  =========================================================
``TwistA(i)``      b_i -= p*a_i          (Dehn twist along alpha_i)
``TwistB(i)``      a_i += p*b_i          (Dehn twist along beta_i)
``EvenShiftA(i)``  a_i += 2p             (bounding-pair map, genus >= 2)
``EvenShiftB(i)``  b_i += 2p             (bounding-pair map, genus >= 2)
``MixBoundary(j)`` b_1 -= p*nu_j         (genus 1); relatively also
                   c_j -= p*(a_1 + nu_j)
``BoundaryTwist``  identity on absolute coordinates;
                   relatively c_j += p*(1 - nu_j)
``PantsTwist``     identity on absolute coordinates; relatively
                   c_j1, c_j2 += p*(nu_j1 + nu_j2 - 1)  (genus 1)
``Tau``            (a_1, b_1) -> (-a_1, -b_1) for odd p   (genus 1, relative)
``Psi(j)``         c_j += p*(-A - 1)    at handle (A, 0), A | nu_j
``PsiPrime(j)``    c_j += p*(A - 1)     at handle (A, 0), A | nu_j
=================  =========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .surface import as_int

KINDS = (
    "TwistA",
    "TwistB",
    "EvenShiftA",
    "EvenShiftB",
    "MixBoundary",
    "BoundaryTwist",
    "PantsTwist",
    "Tau",
    "Psi",
    "PsiPrime",
)

_ARITY = {k: 1 for k in KINDS}
_ARITY["PantsTwist"] = 2
_ARITY["Tau"] = 0


@dataclass(frozen=True)
class Generator:
    kind: str
    index: tuple[int, ...] = ()
    power: int = 1

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise InvalidInputError(f"unknown generator {self.kind!r}")
        if len(self.index) != _ARITY[self.kind]:
            raise InvalidInputError(
                f"{self.kind} takes {_ARITY[self.kind]} index value(s), got {self.index}"
            )
        if self.kind == "PantsTwist" and self.index[0] == self.index[1]:
            raise InvalidInputError("PantsTwist needs two distinct boundary components")

    # constructors -------------------------------------------------------
    @classmethod
    def twist_a(cls, i: int, power: int = 1) -> Generator:
        return cls("TwistA", (i,), power)

    @classmethod
    def twist_b(cls, i: int, power: int = 1) -> Generator:
        return cls("TwistB", (i,), power)

    @classmethod
    def even_shift_a(cls, i: int, power: int = 1) -> Generator:
        return cls("EvenShiftA", (i,), power)

    @classmethod
    def even_shift_b(cls, i: int, power: int = 1) -> Generator:
        return cls("EvenShiftB", (i,), power)

    @classmethod
    def mix_boundary(cls, j: int, power: int = 1) -> Generator:
        return cls("MixBoundary", (j,), power)

    @classmethod
    def boundary_twist(cls, j: int, power: int = 1) -> Generator:
        return cls("BoundaryTwist", (j,), power)

    @classmethod
    def pants_twist(cls, j1: int, j2: int, power: int = 1) -> Generator:
        return cls("PantsTwist", (j1, j2), power)

    @classmethod
    def tau(cls, power: int = 1) -> Generator:
        return cls("Tau", (), power)

    @classmethod
    def psi(cls, j: int, power: int = 1) -> Generator:
        return cls("Psi", (j,), power)

    @classmethod
    def psi_prime(cls, j: int, power: int = 1) -> Generator:
        return cls("PsiPrime", (j,), power)

    # --------------------------------------------------------------------
    def inverse(self) -> Generator:
        return Generator(self.kind, self.index, -self.power)

    def with_power(self, power: int) -> Generator:
        return Generator(self.kind, self.index, power)

    def to_json(self) -> dict:
        doc: dict = {"gen": self.kind, "power": self.power}
        if self.kind == "PantsTwist":
            doc["pair"] = list(self.index)
        elif self.index:
            doc["index"] = self.index[0]
        return doc

    @classmethod
    def from_json(cls, doc: object) -> Generator:
        if not isinstance(doc, dict) or "gen" not in doc:
            raise InvalidInputError(f"generator must be an object with 'gen': {doc!r}")
        kind = doc["gen"]
        power = as_int(doc.get("power", 1), "power")
        if kind == "PantsTwist":
            pair = doc.get("pair")
            if not isinstance(pair, list) or len(pair) != 2:
                raise InvalidInputError("PantsTwist needs 'pair': [j1, j2]")
            index = tuple(as_int(v, "pair") for v in pair)
        elif kind == "Tau":
            index = ()
        else:
            if "index" not in doc:
                raise InvalidInputError(f"{kind} needs 'index'")
            index = (as_int(doc["index"], "index"),)
        return cls(str(kind), index, power)

    def __str__(self) -> str:
        idx = ",".join(map(str, self.index))
        return f"{self.kind}({idx})^{self.power}"


Word = tuple[Generator, ...]


def invert_word(word: Sequence[Generator]) -> Word:
    return tuple(g.inverse() for g in reversed(word))


def compress(word: Iterable[Generator]) -> Word:
    """Merge adjacent powers of the same generator and drop identities.

    Only safe for generators whose action does not depend on the state in a
    way the neighbour changes; every catalog entry commutes with itself, so
    merging equal neighbours is always exact.
    """
    out: list[Generator] = []
    for g in word:
        if out and out[-1].kind == g.kind and out[-1].index == g.index:
            g = g.with_power(out.pop().power + g.power)
        if g.power == 0 or (g.kind == "Tau" and g.power % 2 == 0):
            continue
        out.append(g)
    return tuple(out)


def word_to_json(word: Sequence[Generator]) -> list[dict]:
    return [g.to_json() for g in word]


def word_from_json(doc: object) -> Word:
    if not isinstance(doc, list):
        raise InvalidInputError("a word must be a JSON list of generators")
    return tuple(Generator.from_json(d) for d in doc)
