"""Relative framings: framings extending a fixed framing of the boundary.

Coordinates are the evaluation vector

    ((rot(alpha_i), rot(beta_i))_i, (ceil(rot(eta_j)))_j)

where eta_j is an arc from d_0 to d_j disjoint from every alpha_i, beta_i.
The boundary framing enters only through nu_j = rot(d_j) + 1, which no
mapping class changes.

In genus 1 the orbits are classified by Ã and the generalized Arf invariant;
:func:`rel_canonicalize` produces the canonical representative together with
a replayable generator word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    InfeasibleError,
    InvalidInputError,
    UnresolvedCaseError,
    UnsupportedCaseError,
)
from .framing import euclid_word, gcd_all
from .generators import Generator, Word, compress
from .surface import SurfaceSig, _same_sig, as_int, parse_surface, surface_to_json


@dataclass(frozen=True)
class BoundaryData:
    sig: SurfaceSig
    nu: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.nu) != self.sig.boundary_count:
            raise InvalidInputError(
                f"delta_nu has {len(self.nu)} entries, {self.sig} has "
                f"{self.sig.boundary_count} boundary components"
            )


def exists_relative(b: BoundaryData) -> bool:
    """Whether some framing extends the boundary framing (Poincare-Hopf)."""
    return sum(b.nu) == 2 - 2 * b.sig.genus


def _require_feasible(b: BoundaryData) -> None:
    if not exists_relative(b):
        raise InfeasibleError(
            f"boundary profile {b.nu} sums to {sum(b.nu)}; no framing of {b.sig} "
            f"extends it (need {2 - 2 * b.sig.genus})"
        )


@dataclass(frozen=True)
class RelFraming:
    boundary: BoundaryData
    rot_a: tuple[int, ...]
    rot_b: tuple[int, ...]
    arc_ceil: tuple[int, ...]

    def __post_init__(self) -> None:
        sig = self.boundary.sig
        for name, vec, size in (("rot_alpha", self.rot_a, sig.genus),
                                ("rot_beta", self.rot_b, sig.genus),
                                ("arc_ceil", self.arc_ceil, sig.n)):
            if len(vec) != size:
                raise InvalidInputError(f"{name} has {len(vec)} entries, {sig} needs {size}")

    @classmethod
    def make(cls, sig: SurfaceSig, nu: Sequence[int], rot_a: Sequence[int] = (),
             rot_b: Sequence[int] = (), arc_ceil: Sequence[int] = ()) -> RelFraming:
        return cls(BoundaryData(sig, tuple(nu)), tuple(rot_a), tuple(rot_b), tuple(arc_ceil))

    @property
    def sig(self) -> SurfaceSig:
        return self.boundary.sig

    @property
    def nu(self) -> tuple[int, ...]:
        return self.boundary.nu

    @property
    def ev(self) -> tuple[int, ...]:
        """The evaluation vector in basis order."""
        out: list[int] = []
        for a, b in zip(self.rot_a, self.rot_b):
            out += (a, b)
        return tuple(out) + self.arc_ceil

    def replace(self, rot_a: Sequence[int] | None = None, rot_b: Sequence[int] | None = None,
                arc_ceil: Sequence[int] | None = None) -> RelFraming:
        return RelFraming(self.boundary,
                          self.rot_a if rot_a is None else tuple(rot_a),
                          self.rot_b if rot_b is None else tuple(rot_b),
                          self.arc_ceil if arc_ceil is None else tuple(arc_ceil))


@dataclass(frozen=True)
class RelGenus1Key:
    a_tilde: int
    gen_arf: int


@dataclass(frozen=True)
class RelGenusHighKey:
    gen_arf: int


RelOrbitKey = Union[RelGenus1Key, RelGenusHighKey]


def gen_arf(f: RelFraming) -> int:
    handles = sum((a + 1) * (b + 1) for a, b in zip(f.rot_a, f.rot_b))
    arcs = sum(v * c for v, c in zip(f.nu[1:], f.arc_ceil))
    return (handles + arcs) % 2


def rel_a_tilde(f: RelFraming) -> int:
    if f.sig.genus != 1:
        raise UnsupportedCaseError(f"Ã is a relative invariant only in genus 1, not {f.sig}")
    return gcd_all((f.rot_a[0], f.rot_b[0]) + f.nu)


def rel_orbit_key(f: RelFraming) -> RelOrbitKey:
    _require_feasible(f.boundary)
    g = f.sig.genus
    if g == 0:
        raise UnsupportedCaseError("relative genus-0 orbits are not classified")
    if g == 1:
        return RelGenus1Key(rel_a_tilde(f), gen_arf(f))
    return RelGenusHighKey(gen_arf(f))


def rel_same_orbit(f1: RelFraming, f2: RelFraming) -> bool:
    if f1.boundary != f2.boundary:
        if f1.sig != f2.sig:
            _same_sig(f1.sig, f2.sig)
        raise InvalidInputError("relative framings extend different boundary framings")
    return rel_orbit_key(f1) == rel_orbit_key(f2)


# ---------------------------------------------------------------------------
# generator actions


def _check(f: RelFraming, gen: Generator) -> None:
    sig = f.sig
    g, n = sig.genus, sig.n
    kind = gen.kind
    if kind in ("TwistA", "TwistB"):
        if not 1 <= gen.index[0] <= g:
            raise InvalidInputError(f"{gen}: handle index out of range for {sig}")
        return
    if kind == "BoundaryTwist":
        if not 1 <= gen.index[0] <= n:
            raise InvalidInputError(f"{gen}: boundary index out of range 1..{n}")
        return
    if kind not in ("Tau", "PantsTwist", "MixBoundary", "Psi", "PsiPrime"):
        raise InvalidInputError(f"{gen} does not act on relative framings")
    if g != 1:
        raise InvalidInputError(f"{gen} needs genus 1, {sig} has genus {g}")
    if not all(1 <= j <= n for j in gen.index):
        raise InvalidInputError(f"{gen}: boundary index out of range 1..{n}")
    if kind in ("Psi", "PsiPrime"):
        a, b = f.rot_a[0], f.rot_b[0]
        nu_j = f.nu[gen.index[0]]
        if b != 0:
            raise InfeasibleError(f"{gen} needs rot(beta) = 0, got {b}")
        if a == 0:
            raise InfeasibleError(f"{gen} needs rot(alpha) != 0")
        if nu_j % a:
            raise InfeasibleError(f"{gen} needs rot(alpha) = {a} to divide nu_j = {nu_j}")


def applicable(f: RelFraming, gen: Generator) -> bool:
    try:
        _check(f, gen)
    except (InvalidInputError, InfeasibleError):
        return False
    return True


def rel_apply(f: RelFraming, gen: Generator) -> RelFraming:
    _check(f, gen)
    kind, p = gen.kind, gen.power
    a, b, c = list(f.rot_a), list(f.rot_b), list(f.arc_ceil)
    nu = f.nu
    if kind == "TwistA":
        i = gen.index[0] - 1
        b[i] -= p * a[i]
    elif kind == "TwistB":
        i = gen.index[0] - 1
        a[i] += p * b[i]
    elif kind == "Tau":
        if p % 2:
            a[0], b[0] = -a[0], -b[0]
    elif kind == "BoundaryTwist":
        j = gen.index[0]
        c[j - 1] += p * (1 - nu[j])
    elif kind == "PantsTwist":
        j1, j2 = gen.index
        shift = p * (nu[j1] + nu[j2] - 1)
        c[j1 - 1] += shift
        c[j2 - 1] += shift
    elif kind == "MixBoundary":
        # t_alpha^{-1} t_{alpha^(j)}; alpha^(j) crosses eta_j once
        j = gen.index[0]
        b[0] -= p * nu[j]
        c[j - 1] -= p * (a[0] + nu[j])
    elif kind == "Psi":
        c[gen.index[0] - 1] += p * (-a[0] - 1)
    else:  # PsiPrime
        c[gen.index[0] - 1] += p * (a[0] - 1)
    return f.replace(a, b, c)


def rel_apply_word(f: RelFraming, word: Iterable[Generator]) -> RelFraming:
    for gen in word:
        f = rel_apply(f, gen)
    return f


def rel_catalog(sig: SurfaceSig) -> list[Generator]:
    """Unit generators (both signs); Psi moves are listed even where inapplicable."""
    g, n = sig.genus, sig.n
    out: list[Generator] = []
    for p in (1, -1):
        for i in range(1, g + 1):
            out += [Generator.twist_a(i, p), Generator.twist_b(i, p)]
        out += [Generator.boundary_twist(j, p) for j in range(1, n + 1)]
        if g == 1:
            out.append(Generator.tau(p))
            for j in range(1, n + 1):
                out += [Generator.mix_boundary(j, p), Generator.psi(j, p),
                        Generator.psi_prime(j, p)]
            out += [Generator.pants_twist(j1, j2, p)
                    for j1 in range(1, n + 1) for j2 in range(j1 + 1, n + 1)]
    return out


# ---------------------------------------------------------------------------
# canonical forms in genus 1


def odd_position(nu: Sequence[int]) -> int:
    """Largest j in 1..n with nu_j odd (the position kept at 1 in case 3)."""
    for j in range(len(nu) - 1, 0, -1):
        if nu[j] % 2:
            return j
    raise UnresolvedCaseError(
        f"odd Ã with generalized Arf 1 but nu_1..nu_n = {tuple(nu[1:])} all even"
    )


def rel_case(f: RelFraming) -> int:
    """Which canonical family (1, 2 or 3) the orbit of ``f`` belongs to."""
    key = rel_orbit_key(f)
    if not isinstance(key, RelGenus1Key):
        raise UnsupportedCaseError("canonical families are defined in genus 1 only")
    if key.a_tilde % 2 == 0:
        return 1
    return 2 if key.gen_arf == 0 else 3


def rel_target(f: RelFraming) -> RelFraming:
    """The canonical representative f_1, f_2 or f_3 of the orbit of ``f``."""
    case = rel_case(f)
    A = rel_a_tilde(f)
    arcs = [0] * f.sig.n
    if case == 3:
        arcs[odd_position(f.nu) - 1] = 1
    return f.replace((A,), (0,), arcs)


def _reduce_handle(f: RelFraming) -> list[Generator]:
    """Word taking the handle to (Ã, 0)."""
    nu = f.nu
    word, d = euclid_word(f.rot_a[0], f.rot_b[0])
    for j in range(1, f.sig.n + 1):
        if nu[j] == 0 or (d != 0 and nu[j] % d == 0):
            continue
        word.append(Generator.mix_boundary(j, -1))
        step, d = euclid_word(d, nu[j])
        word += step
    if d < 0:
        word.append(Generator.tau())
    return word


def _clear_even(j: int, c: int) -> list[Generator]:
    """Psi/PsiPrime pair lowering an even arc ceiling c to 0 (handle at (A, 0), A != 0)."""
    k = c // 2
    # Psi^k PsiPrime^k shifts by k(-A-1) + k(A-1) = -2k
    return [Generator.psi(j, k), Generator.psi_prime(j, k)] if k else []


def rel_canonicalize(f: RelFraming) -> tuple[RelFraming, Word]:
    """Canonical representative of the orbit of ``f`` and a word reaching it."""
    _require_feasible(f.boundary)
    if f.sig.genus != 1:
        if f.sig.genus == 0:
            raise UnsupportedCaseError("relative genus-0 orbits are not classified")
        raise UnsupportedCaseError("relative canonical forms are provided in genus 1 only")
    target = rel_target(f)
    word = _reduce_handle(f)
    cur = rel_apply_word(f, word)
    A = cur.rot_a[0]
    nu, n = f.nu, f.sig.n

    def push(gens: list[Generator]) -> None:
        nonlocal cur
        for gen in gens:
            cur = rel_apply(cur, gen)
            word.append(gen)

    if A == 0:
        # every nu_j is 0, so BoundaryTwist(j)^p moves c_j by exactly p
        push([Generator.boundary_twist(j, -c) for j, c in enumerate(cur.arc_ceil, 1) if c])
    elif A % 2 == 0:
        # every nu_j is even: boundary twists have odd shift 1 - nu_j
        push([Generator.boundary_twist(j, 1) for j, c in enumerate(cur.arc_ceil, 1) if c % 2])
    else:
        odd = [j for j in range(1, n + 1) if nu[j] % 2]
        # ceilings at even nu_j carry no Arf weight: fix their parity freely
        push([Generator.boundary_twist(j, 1) for j in range(1, n + 1)
              if nu[j] % 2 == 0 and cur.arc_ceil[j - 1] % 2])
        flagged = [j for j in odd if cur.arc_ceil[j - 1] % 2]
        while len(flagged) >= 2:
            j1, j2 = flagged.pop(), flagged.pop()
            push([Generator.pants_twist(j2, j1, 1)])
        if flagged:
            j0 = odd_position(nu)
            if flagged[0] != j0:
                push([Generator.pants_twist(flagged[0], j0, 1)])
    if A != 0:
        for j in range(1, n + 1):
            want = target.arc_ceil[j - 1]
            push(_clear_even(j, cur.arc_ceil[j - 1] - want))

    word_t = compress(word)
    if rel_apply_word(f, word_t) != target:  # pragma: no cover - internal consistency guard
        raise AssertionError(f"relative canonical word failed to replay for {f}")
    return target, word_t


def rel_equivalence_witness(f1: RelFraming, f2: RelFraming) -> Word | None:
    if not rel_same_orbit(f1, f2):
        return None
    if f1.sig.genus != 1:
        return None
    _, w1 = rel_canonicalize(f1)
    _, w2 = rel_canonicalize(f2)
    return compress(tuple(w1) + tuple(g.inverse() for g in reversed(w2)))


# ---------------------------------------------------------------------------
# JSON


def rel_to_json(f: RelFraming) -> dict:
    return {
        "surface": surface_to_json(f.sig),
        "rot_alpha": list(f.rot_a),
        "rot_beta": list(f.rot_b),
        "rot_boundary": [v - 1 for v in f.nu[1:]],
        "rot_boundary_0": f.nu[0] - 1,
        "arc_ceil": list(f.arc_ceil),
        "delta_nu": list(f.nu),
    }


def _vec(doc: dict, name: str) -> tuple[int, ...]:
    raw = doc.get(name, [])
    if not isinstance(raw, list):
        raise InvalidInputError(f"{name} must be a list")
    return tuple(as_int(v, name) for v in raw)


def boundary_from_json(doc: object) -> BoundaryData:
    if not isinstance(doc, dict):
        raise InvalidInputError("relative framing must be a JSON object")
    sig = parse_surface(doc.get("surface"))
    if "delta_nu" not in doc:
        raise InvalidInputError("relative framing needs 'delta_nu'")
    b = BoundaryData(sig, _vec(doc, "delta_nu"))
    if "rot_boundary" in doc and _vec(doc, "rot_boundary") != tuple(v - 1 for v in b.nu[1:]):
        raise InvalidInputError("rot_boundary disagrees with delta_nu")
    if "rot_boundary_0" in doc and as_int(doc["rot_boundary_0"], "rot_boundary_0") != b.nu[0] - 1:
        raise InvalidInputError("rot_boundary_0 disagrees with delta_nu")
    return b


def rel_from_json(doc: object) -> RelFraming:
    b = boundary_from_json(doc)
    _require_feasible(b)
    return RelFraming(b, _vec(doc, "rot_alpha"), _vec(doc, "rot_beta"), _vec(doc, "arc_ceil"))


def rel_key_to_json(key: RelOrbitKey) -> dict:
    if isinstance(key, RelGenus1Key):
        return {"kind": "rel_genus1", "a_tilde": key.a_tilde, "gen_arf": key.gen_arf}
    return {"kind": "rel_genus_high", "gen_arf": key.gen_arf}
