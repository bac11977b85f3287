"""Brute-force verifiers the classification results are checked against.

Nothing here calls the decision procedures it is meant to test: spin orbits
come from closing the form universe under every transvection evaluated
pointwise, framing orbits from breadth-first search over coordinate boxes.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import framing as fr
from . import relative as rel
from . import spin
from .errors import InvalidInputError
from .generators import Generator
from .surface import F2Class, SurfaceSig, intersection_mod2

MAX_SPIN_RANK = 16

Box = Sequence[tuple[int, int]]
State = Union[fr.Framing, rel.RelFraming]


# ---------------------------------------------------------------------------
# spin structures


@dataclass(frozen=True)
class OrbitPartition:
    sig: SurfaceSig
    blocks: tuple[frozenset, ...]

    def block_of(self, item: object) -> int:
        for k, block in enumerate(self.blocks):
            if item in block:
                return k
        raise KeyError(item)

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


def _transvection_images(sig: SurfaceSig, a: F2Class) -> list[int]:
    """Masks of T_a(e_k) = e_k + (e_k.a) a for every basis vector e_k."""
    out = []
    for k in range(sig.rank):
        e = F2Class(sig, 1 << k)
        out.append((e + a).mask if intersection_mod2(sig, e, a) else e.mask)
    return out


def enumerate_spin_orbits(sig: SurfaceSig) -> OrbitPartition:
    """Orbits of all quadratic forms under every transvection.

    For each direction a the pulled-back form w o T_a is computed for every w
    at once by evaluating w on the images T_a(e_k); the orbit graph is then
    split into connected components.
    """
    if sig.rank > MAX_SPIN_RANK:
        raise InvalidInputError(
            f"exhaustive enumeration is limited to 2g+n <= {MAX_SPIN_RANK}, {sig} has {sig.rank}"
        )
    size = 1 << sig.rank
    forms = np.arange(size, dtype=np.int64)
    parity = np.zeros(size, dtype=np.int64)
    for k in range(sig.rank):
        parity ^= (forms >> k) & 1
    zero = spin.QuadForm(sig, 0)
    src, dst = [forms], [forms]
    for m in range(1, size):
        pulled = np.zeros(size, dtype=np.int64)
        for k, image in enumerate(_transvection_images(sig, F2Class(sig, m))):
            # w(image) = <image, base> + (value of the zero-base form at image)
            cross = spin.eval(zero, F2Class(sig, image))
            pulled |= (parity[forms & image] ^ cross) << k
        src.append(forms)
        dst.append(pulled)
    s_all, d_all = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(s_all.size, dtype=np.int8), (s_all, d_all)), shape=(size, size))
    _, labels = connected_components(graph, directed=True, connection="weak")
    groups: dict[int, set] = {}
    for m in range(size):
        groups.setdefault(int(labels[m]), set()).add(spin.QuadForm(sig, m))
    blocks = sorted((frozenset(b) for b in groups.values()),
                    key=lambda b: min(w.base_mask for w in b))
    return OrbitPartition(sig, tuple(blocks))


def spin_table(sig: SurfaceSig, part: OrbitPartition | None = None) -> list[dict]:
    """Per boundary functional h: enumerated orbit count, predicted count, Arf split."""
    part = part or enumerate_spin_orbits(sig)
    rows = []
    for h in product((0, 1), repeat=sig.boundary_count):
        blocks = [b for b in part.blocks
                  if spin.restrict_boundary(next(iter(b))).values == h]
        row = {
            "h": list(h),
            "enumerated": len(blocks),
            "predicted": spin.orbit_count(sig, h),
            "block_sizes": sorted((len(b) for b in blocks), reverse=True),
        }
        if not any(h) and sig.genus >= 1:
            row["arf_of_blocks"] = [sorted({spin.arf(w) for w in b}) for b in
                                    sorted(blocks, key=len, reverse=True)]
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# breadth-first search over framings


@dataclass
class BfsReport:
    start: tuple[int, ...]
    box: tuple[tuple[int, int], ...]
    visited: int
    violations: list[str] = field(default_factory=list)
    reached: list[tuple[int, ...]] = field(default_factory=list)
    states: frozenset = frozenset()


def _state_coords(f: State) -> tuple[int, ...]:
    if isinstance(f, rel.RelFraming):
        return f.ev
    return f.coords[: 2 * f.sig.genus]


def _state_key(f: State) -> object:
    if isinstance(f, rel.RelFraming):
        return rel.rel_orbit_key(f)
    return fr.orbit_key(f)


def _step(f: State, gen: Generator) -> State | None:
    if isinstance(f, rel.RelFraming):
        return rel.rel_apply(f, gen) if rel.applicable(f, gen) else None
    return fr.apply(f, gen)


def _in_box(coords: Sequence[int], box: Box) -> bool:
    return all(lo <= v <= hi for v, (lo, hi) in zip(coords, box))


def default_generators(f: State) -> list[Generator]:
    if isinstance(f, rel.RelFraming):
        return rel.rel_catalog(f.sig)
    return fr.catalog(f.sig)


def bfs_framing(f: State, box: Box, gens: Iterable[Generator] | None = None,
                targets: Iterable[Sequence[int]] = ()) -> BfsReport:
    """Breadth-first closure of ``f`` inside ``box``.

    ``box`` bounds the handle coordinates (absolute) or the whole evaluation
    vector (relative).  States leaving the box are pruned.
    """
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    start = _state_coords(f)
    if len(box) != len(start):
        raise InvalidInputError(f"box has {len(box)} bounds, state has {len(start)} coordinates")
    gens = list(gens) if gens is not None else default_generators(f)
    key0 = _state_key(f)
    wanted = {tuple(t) for t in targets}
    seen = {start}
    queue = deque([f])
    violations: list[str] = []
    while queue:
        cur = queue.popleft()
        for gen in gens:
            nxt = _step(cur, gen)
            if nxt is None:
                continue
            c = _state_coords(nxt)
            if c in seen or not _in_box(c, box):
                continue
            seen.add(c)
            key = _state_key(nxt)
            if key != key0:
                violations.append(f"{gen} took {_state_coords(cur)} to {c} with key {key}")
            queue.append(nxt)
    return BfsReport(start, box, len(seen), violations, sorted(wanted & seen), frozenset(seen))


# ---------------------------------------------------------------------------
# vectorised component labelling on boxes

Coords = list[np.ndarray]
Move = Callable[[Coords], tuple[Coords, np.ndarray]]


def abs_moves(sig: SurfaceSig, nu: Sequence[int]) -> list[tuple[Generator, Move]]:
    """Array versions of the unit catalog moves acting on handle coordinates."""
    out: list[tuple[Generator, Move]] = []
    for gen in fr.catalog(sig):
        p = gen.power
        if gen.kind in ("BoundaryTwist", "PantsTwist"):
            continue
        if gen.kind == "MixBoundary":
            v = nu[gen.index[0]]
            out.append((gen, _shift(1, -p * v)))
            continue
        i = 2 * (gen.index[0] - 1)
        if gen.kind == "TwistA":
            out.append((gen, _lin(i + 1, i, -p)))
        elif gen.kind == "TwistB":
            out.append((gen, _lin(i, i + 1, p)))
        elif gen.kind == "EvenShiftA":
            out.append((gen, _shift(i, 2 * p)))
        else:
            out.append((gen, _shift(i + 1, 2 * p)))
    return out


def _lin(dst: int, src: int, coef: int) -> Move:
    def move(x: Coords) -> tuple[Coords, np.ndarray]:
        y = list(x)
        y[dst] = x[dst] + coef * x[src]
        return y, np.ones(x[0].shape, dtype=bool)
    return move


def _shift(dst: int, amount: int) -> Move:
    def move(x: Coords) -> tuple[Coords, np.ndarray]:
        y = list(x)
        y[dst] = x[dst] + amount
        return y, np.ones(x[0].shape, dtype=bool)
    return move


def rel_moves(sig: SurfaceSig, nu: Sequence[int]) -> list[tuple[Generator, Move]]:
    """Array versions of the unit relative catalog (genus 1) on (a, b, c_1..c_n)."""
    if sig.genus != 1:
        raise InvalidInputError("vectorised relative moves are provided in genus 1")
    out: list[tuple[Generator, Move]] = []
    for gen in rel.rel_catalog(sig):
        p, kind = gen.power, gen.kind
        if kind == "TwistA":
            out.append((gen, _lin(1, 0, -p)))
        elif kind == "TwistB":
            out.append((gen, _lin(0, 1, p)))
        elif kind == "Tau":
            out.append((gen, _tau))
        elif kind == "BoundaryTwist":
            j = gen.index[0]
            out.append((gen, _shift(1 + j, p * (1 - nu[j]))))
        elif kind == "PantsTwist":
            j1, j2 = gen.index
            out.append((gen, _pants(1 + j1, 1 + j2, p * (nu[j1] + nu[j2] - 1))))
        elif kind == "MixBoundary":
            out.append((gen, _mix(1 + gen.index[0], nu[gen.index[0]], p)))
        else:
            out.append((gen, _psi(1 + gen.index[0], nu[gen.index[0]], p, kind == "Psi")))
    return out


def _tau(x: Coords) -> tuple[Coords, np.ndarray]:
    return [-x[0], -x[1]] + list(x[2:]), np.ones(x[0].shape, dtype=bool)


def _pants(k1: int, k2: int, amount: int) -> Move:
    def move(x: Coords) -> tuple[Coords, np.ndarray]:
        y = list(x)
        y[k1] = x[k1] + amount
        y[k2] = x[k2] + amount
        return y, np.ones(x[0].shape, dtype=bool)
    return move


def _mix(k: int, v: int, p: int) -> Move:
    def move(x: Coords) -> tuple[Coords, np.ndarray]:
        y = list(x)
        y[1] = x[1] - p * v
        y[k] = x[k] - p * (x[0] + v)
        return y, np.ones(x[0].shape, dtype=bool)
    return move


def _psi(k: int, v: int, p: int, plain: bool) -> Move:
    def move(x: Coords) -> tuple[Coords, np.ndarray]:
        a = x[0]
        ok = (x[1] == 0) & (a != 0)
        safe = np.where(a == 0, 1, a)
        ok &= (v % safe) == 0
        y = list(x)
        y[k] = x[k] + p * ((-a - 1) if plain else (a - 1))
        return y, ok
    return move


@dataclass
class BoxLabels:
    box: tuple[tuple[int, int], ...]
    coords: Coords
    labels: np.ndarray
    count: int

    def index(self, point: Sequence[int]) -> int:
        return int(np.ravel_multi_index(
            tuple(v - lo for v, (lo, _) in zip(point, self.box)),
            tuple(hi - lo + 1 for lo, hi in self.box)))

    def label(self, point: Sequence[int]) -> int:
        return int(self.labels[self.index(point)])


def label_box(box: Box, moves: Sequence[tuple[Generator, Move]]) -> BoxLabels:
    """Connected components of the move graph restricted to ``box``."""
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    shape = tuple(hi - lo + 1 for lo, hi in box)
    grids = np.meshgrid(*(np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in box),
                        indexing="ij")
    coords = [g.ravel() for g in grids]
    size = coords[0].size
    src_all, dst_all = [], []
    for _, move in moves:
        y, ok = move(coords)
        for v, (lo, hi) in zip(y, box):
            ok &= (v >= lo) & (v <= hi)
        src = np.nonzero(ok)[0]
        dst = np.ravel_multi_index(tuple(v[src] - lo for v, (lo, _) in zip(y, box)), shape)
        src_all.append(src)
        dst_all.append(dst)
    src = np.concatenate(src_all) if src_all else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dst_all) if dst_all else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(size, size))
    count, labels = connected_components(graph, directed=True, connection="weak")
    return BoxLabels(box, coords, labels, count)


def key_arrays_abs(sig: SurfaceSig, nu: Sequence[int], coords: Coords) -> np.ndarray:
    """Orbit-key discriminator per box point (the profile nu is fixed per box)."""
    g = sig.genus
    if g == 1:
        c = 0
        for v in nu:
            c = np.gcd(c, v)
        return np.gcd(np.gcd(coords[0], coords[1]), c)
    if all(v % 2 == 0 for v in nu):
        total = sum((coords[2 * i] + 1) * (coords[2 * i + 1] + 1) for i in range(g))
        return total % 2
    return np.zeros(coords[0].shape, dtype=np.int64)


def key_arrays_rel(nu: Sequence[int], coords: Coords) -> np.ndarray:
    """Encodes (Ã, gen_arf) as 2*Ã + gen_arf per box point (genus 1)."""
    c = 0
    for v in nu:
        c = np.gcd(c, v)
    at = np.gcd(np.gcd(coords[0], coords[1]), c)
    ga = (coords[0] + 1) * (coords[1] + 1)
    for j, v in enumerate(nu[1:]):
        ga = ga + v * coords[2 + j]
    return 2 * at + ga % 2


def labels_respect_keys(labels: np.ndarray, keys: np.ndarray) -> bool:
    """True when every component carries a single key value."""
    order = np.lexsort((keys, labels))
    lab, key = labels[order], keys[order]
    same_comp = lab[1:] == lab[:-1]
    return bool(np.all(key[1:][same_comp] == key[:-1][same_comp]))


# ---------------------------------------------------------------------------
# random words


def random_word(rng: random.Random, gens: Sequence[Generator], length: int,
                max_power: int = 3) -> list[Generator]:
    out = []
    for _ in range(length):
        gen = rng.choice(gens)
        out.append(gen.with_power(rng.choice([p for p in range(-max_power, max_power + 1) if p])))
    return out


def _abs_invariants(f: fr.Framing) -> dict:
    out: dict = {"nu": fr.nu_profile(f), "a_tilde": fr.a_tilde(f)}
    if f.sig.genus >= 1 and all(v % 2 == 0 for v in out["nu"]):
        out["arf"] = fr.arf_framing(f)
    return out


def _rel_invariants(f: rel.RelFraming) -> dict:
    out: dict = {"nu": f.nu, "gen_arf": rel.gen_arf(f)}
    if f.sig.genus == 1:
        out["a_tilde"] = rel.rel_a_tilde(f)
    return out


def random_word_check(f: State, length: int, seed: int = 0,
                      max_power: int = 3) -> list[str]:
    """Apply a seeded random word; list every invariant that changed along the way."""
    rng = random.Random(seed)
    violations: list[str] = []
    if isinstance(f, rel.RelFraming):
        gens = rel.rel_catalog(f.sig)
        before = _rel_invariants(f)
        cur = f
        for _ in range(length):
            options = [g for g in gens if rel.applicable(cur, g)]
            gen = random_word(rng, options, 1, max_power)[0]
            cur = rel.rel_apply(cur, gen)
            after = _rel_invariants(cur)
            if after != before:
                violations.append(f"{gen} changed {before} to {after}")
                before = after
        return violations
    gens = fr.catalog(f.sig)
    before = _abs_invariants(f)
    omega0 = fr.spin_of(f)
    cur = f
    for gen in random_word(rng, gens, length, max_power):
        cur = fr.apply(cur, gen)
        after = _abs_invariants(cur)
        if after != before:
            violations.append(f"{gen} changed {before} to {after}")
            before = after
        if spin.same_orbit(omega0, fr.spin_of(cur)) is None:
            violations.append(f"{gen} moved the spin structure out of its orbit")
    return violations


def random_framing(rng: random.Random, sig: SurfaceSig, bound: int) -> fr.Framing:
    coords = [rng.randint(-bound, bound) for _ in range(sig.rank)]
    return fr.Framing.from_coords(sig, coords)


def random_rel_framing(rng: random.Random, sig: SurfaceSig, bound: int) -> rel.RelFraming:
    nu = [rng.randint(-bound, bound) for _ in range(sig.n)]
    nu = [2 - 2 * sig.genus - sum(nu)] + nu
    return rel.RelFraming.make(
        sig, nu,
        [rng.randint(-bound, bound) for _ in range(sig.genus)],
        [rng.randint(-bound, bound) for _ in range(sig.genus)],
        [rng.randint(-bound, bound) for _ in range(sig.n)],
    )


# ---------------------------------------------------------------------------
# verification suites


def _sigs(max_size: int, max_genus: int = 3, max_n: int = 3) -> list[SurfaceSig]:
    return [SurfaceSig.from_gn(g, n) for g in range(max_genus + 1) for n in range(max_n + 1)
            if 2 * g + n <= max_size]


def suite_spin(seed: int, max_size: int) -> tuple[int, list[str]]:
    cases, failures = 0, []
    for sig in _sigs(max_size):
        part = enumerate_spin_orbits(sig)
        for row in spin_table(sig, part):
            cases += 1
            if row["enumerated"] != row["predicted"]:
                failures.append(f"{sig} h={row['h']}: {row['enumerated']} orbits, "
                                f"predicted {row['predicted']}")
            if "arf_of_blocks" in row and row["arf_of_blocks"] != [[0], [1]] \
                    and row["arf_of_blocks"] != [[1], [0]]:
                failures.append(f"{sig}: Arf does not split the two orbits")
        label = {w: k for k, b in enumerate(part.blocks) for w in b}
        forms = spin.all_forms(sig)
        for w1 in forms:
            for w2 in forms:
                cases += 1
                x = spin.same_orbit(w1, w2)
                if (x is not None) != (label[w1] == label[w2]):
                    failures.append(f"{sig}: decision disagrees on {w1} vs {w2}")
                elif x is not None and spin.act_transvection(w1, x) != w2:
                    failures.append(f"{sig}: witness {x} does not carry {w1} to {w2}")
    return cases, failures


def suite_abs(seed: int, max_size: int) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    cases, failures = 0, []
    for sig in _sigs(max_size, max_genus=3, max_n=3):
        for _ in range(40):
            f = random_framing(rng, sig, 9)
            cases += 1
            failures += [f"{sig} {f.coords}: {v}" for v in
                         random_word_check(f, 30, rng.randrange(1 << 30))]
            target, word = fr.canonicalize(f)
            if fr.orbit_key(target) != fr.orbit_key(f):
                failures.append(f"{sig} {f.coords}: canonical form changes the key")
            if word is not None and fr.apply_word(f, word) != target:
                failures.append(f"{sig} {f.coords}: canonical word does not replay")
    for sig in (SurfaceSig(1, 1), SurfaceSig(1, 2)):
        nus = [(0,)] if sig.n == 0 else [(-d, d) for d in range(-4, 5)]
        for nu in nus:
            labels = label_box([(-30, 30)] * 2, abs_moves(sig, nu))
            keys = key_arrays_abs(sig, nu, labels.coords)
            cases += 1
            if not labels_respect_keys(labels.labels, keys):
                failures.append(f"{sig} nu={nu}: a box component mixes orbit keys")
            pts = list(product(range(-4, 5), repeat=2))
            seen: dict[int, int] = {}
            for p in pts:
                k = int(keys[labels.index(p)])
                lab = labels.label(p)
                if seen.setdefault(k, lab) != lab:
                    failures.append(f"{sig} nu={nu}: key {k} split between components at {p}")
    return cases, failures


def suite_rel(seed: int, max_size: int) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    cases, failures = 0, []
    for n in range(0, 4):
        sig = SurfaceSig.from_gn(1, n)
        if sig.rank > max_size:
            continue
        for _ in range(60):
            f = random_rel_framing(rng, sig, 7)
            cases += 1
            failures += [f"{sig} {f.ev} nu={f.nu}: {v}" for v in
                         random_word_check(f, 30, rng.randrange(1 << 30))]
            target, word = rel.rel_canonicalize(f)
            if rel.rel_apply_word(f, word) != target:
                failures.append(f"{sig} {f.ev} nu={f.nu}: canonical word does not replay")
    for sig in _sigs(max_size, max_genus=3, max_n=2):
        if sig.genus < 2:
            continue
        for _ in range(20):
            f = random_rel_framing(rng, sig, 7)
            cases += 1
            failures += [f"{sig} {f.ev}: {v}" for v in
                         random_word_check(f, 30, rng.randrange(1 << 30))]
    return cases, failures


SUITES = {"spin": suite_spin, "abs": suite_abs, "rel": suite_rel}


def run_suite(name: str, seed: int = 0, max_size: int = 6) -> dict:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise InvalidInputError(f"unknown suite {name!r}")
    cases, failures = 0, []
    for n in names:
        c, f = SUITES[n](seed, max_size)
        cases += c
        failures += [f"[{n}] {msg}" for msg in f]
    return {"suite": name, "seed": seed, "max_size": max_size, "cases": cases,
            "failures": failures}


__all__ = [
    "BfsReport",
    "BoxLabels",
    "OrbitPartition",
    "abs_moves",
    "bfs_framing",
    "enumerate_spin_orbits",
    "label_box",
    "random_word_check",
    "rel_moves",
    "run_suite",
    "spin_table",
]
