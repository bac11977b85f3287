from __future__ import annotations

import random

import numpy as np
import pytest

from framing_orbits import framing as fr
from framing_orbits import oracle
from framing_orbits import relative as rel
from framing_orbits import spin
from framing_orbits.errors import InvalidInputError
from framing_orbits.framing import Framing
from framing_orbits.surface import SurfaceSig


def test_spin_enumeration_examples():
    assert sorted(oracle.enumerate_spin_orbits(SurfaceSig(1, 1)).sizes()) == [1, 3]
    part = oracle.enumerate_spin_orbits(SurfaceSig(0, 3))
    assert part.sizes() == [1, 1, 1, 1]
    restrictions = {spin.restrict_boundary(next(iter(b))).values for b in part.blocks}
    assert restrictions == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}
    sig = SurfaceSig(1, 2)
    rows = oracle.spin_table(sig)
    assert len(oracle.enumerate_spin_orbits(sig).blocks) == sum(r["predicted"] for r in rows) == 3


def test_spin_enumeration_guard():
    with pytest.raises(InvalidInputError):
        oracle.enumerate_spin_orbits(SurfaceSig.from_gn(8, 1))


@pytest.mark.parametrize("g,n", [(5, 0), (4, 2)])
def test_decision_matches_enumeration_at_rank_ten(g, n):
    sig = SurfaceSig.from_gn(g, n)
    part = oracle.enumerate_spin_orbits(sig)
    label = {w: k for k, b in enumerate(part.blocks) for w in b}
    rng = random.Random(g * 10 + n)
    forms = spin.all_forms(sig)
    reps = [next(iter(b)) for b in part.blocks]
    for w1 in forms:
        for w2 in reps + rng.sample(forms, 8):
            assert (spin.same_orbit(w1, w2) is not None) == (label[w1] == label[w2])


def test_bfs_examples():
    s11 = SurfaceSig(1, 1)
    box = [(-60, 60)] * 2
    report = oracle.bfs_framing(Framing.make(s11, (6,), (4,)), box, targets=[(2, 0)])
    assert report.reached == [(2, 0)] and not report.violations
    report = oracle.bfs_framing(Framing.make(s11, (2,), (0,)), box, targets=[(1, 0)])
    assert report.reached == [] and not report.violations
    s21 = SurfaceSig(2, 1)
    report = oracle.bfs_framing(Framing.make(s21, (0, 0), (0, 0)), [(-8, 8)] * 4)
    assert not report.violations
    assert all(fr.arf_framing(Framing.from_coords(s21, c)) == 0 for c in report.states)


def test_bfs_relative_reaches_canonical_target():
    f = rel.RelFraming.make(SurfaceSig(1, 2), (-2, 2), (2,), (0,), (5,))
    report = oracle.bfs_framing(f, [(-20, 20)] * 3, targets=[(2, 0, 0), (2, 0, 1)])
    assert report.reached == [(2, 0, 0), (2, 0, 1)]
    assert not report.violations


def test_bfs_box_mismatch():
    with pytest.raises(InvalidInputError):
        oracle.bfs_framing(Framing.make(SurfaceSig(1, 1), (0,), (0,)), [(-1, 1)])


def test_random_word_examples():
    f = Framing.make(SurfaceSig(1, 2), (3,), (-2,), (4,))
    assert oracle.random_word_check(f, 0, seed=1) == []
    assert oracle.random_word_check(f, 1000, seed=1) == []
    g = rel.RelFraming.make(SurfaceSig(1, 2), (-4, 4), (2,), (6,), (3,))
    assert oracle.random_word_check(g, 1000, seed=2) == []


def test_vector_moves_match_scalar_actions():
    rng = np.random.default_rng(5)
    sig = SurfaceSig(1, 4)
    nu = (-4, 2, 0, 2)
    pts = rng.integers(-9, 10, size=(5, 400))
    pts[1, :100] = 0  # make Psi applicable on a slice
    for gen, move in oracle.rel_moves(sig, nu):
        out, ok = move([pts[k] for k in range(5)])
        for col in range(pts.shape[1]):
            f = rel.RelFraming.make(sig, nu, [pts[0, col]], [pts[1, col]], pts[2:, col].tolist())
            assert bool(ok[col]) == rel.applicable(f, gen)
            if ok[col]:
                assert tuple(int(v[col]) for v in out) == rel.rel_apply(f, gen).ev
    for sig, nu in ((SurfaceSig(1, 2), (-3, 3)), (SurfaceSig(2, 1), (-2,))):
        for gen, move in oracle.abs_moves(sig, nu):
            coords = rng.integers(-9, 10, size=(2 * sig.genus, 50))
            out, _ = move(list(coords))
            for col in range(50):
                f = Framing.make(sig, coords[0::2, col].tolist(), coords[1::2, col].tolist(),
                                 [v - 1 for v in nu[1:]])
                assert tuple(int(v[col]) for v in out) == fr.apply(f, gen).coords[: 2 * sig.genus]


def test_label_box_components_respect_keys():
    sig = SurfaceSig(1, 1)
    labels = oracle.label_box([(-10, 10)] * 2, oracle.abs_moves(sig, (0,)))
    keys = oracle.key_arrays_abs(sig, (0,), labels.coords)
    assert oracle.labels_respect_keys(labels.labels, keys)
    assert labels.label((4, 6)) == labels.label((-2, 0))
    assert labels.label((0, 0)) != labels.label((1, 0))


def test_labels_respect_keys_detects_mixing():
    assert not oracle.labels_respect_keys(np.array([0, 0, 1]), np.array([1, 2, 2]))


@pytest.mark.parametrize("suite", ["spin", "abs", "rel"])
def test_suites_clean(suite):
    report = oracle.run_suite(suite, seed=3, max_size=5)
    assert report["failures"] == []
    assert report["cases"] > 0
