from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from framing_orbits import spin
from framing_orbits.errors import InfeasibleError, PreconditionError
from framing_orbits.spin import QuadForm
from framing_orbits.surface import F2Class, SurfaceSig, intersection_mod2

from .strategies import forms_and_classes

T10 = SurfaceSig.from_gn(1, 0)
T11 = SurfaceSig.from_gn(1, 1)
P2 = SurfaceSig.from_gn(0, 2)


def cls(sig, *names):
    x = F2Class.zero(sig)
    for name in names:
        x = x + F2Class.unit(sig, name[0], int(name[1:]))
    return x


@pytest.mark.parametrize("sig,base,x,expected", [
    (T10, (0, 0), ("A1", "B1"), 1),
    (T10, (1, 0), ("A1",), 1),
    (T11, (0, 0, 1), ("A1", "D1"), 1),
])
def test_eval(sig, base, x, expected):
    assert spin.eval(QuadForm.from_bits(sig, base), cls(sig, *x)) == expected


def test_transvect_class():
    a, b, d = cls(T11, "A1"), cls(T11, "B1"), cls(T11, "D1")
    assert spin.transvect_class(a, b) == a + b
    assert spin.transvect_class(a, a) == a
    assert spin.transvect_class(d, a + b + d) == a + b + d


def test_coboundary():
    omega = QuadForm.from_bits(T10, (0, 0))
    assert spin.coboundary(omega, cls(T10, "A1")).values == (0, 1)
    assert spin.coboundary(QuadForm.from_bits(T10, (1, 0)), cls(T10, "A1")).mask == 0
    for m in range(8):
        assert spin.coboundary(QuadForm(T11, m), cls(T11, "D1")).mask == 0


def test_act_transvection_examples():
    omega = QuadForm.from_bits(T10, (0, 0))
    assert spin.act_transvection(omega, cls(T10, "A1")).base == (0, 1)
    odd = QuadForm.from_bits(T10, (1, 0))
    assert spin.act_transvection(odd, cls(T10, "A1")) == odd
    w = QuadForm.from_bits(T11, (1, 1, 0))
    assert spin.act_transvection(w, cls(T11, "D1")) == w


@pytest.mark.parametrize("sig,base,h", [
    (T10, (1, 1), (0,)),
    (P2, (1, 0), (1, 1, 0)),
    (T11, (0, 0, 1), (1, 1)),
])
def test_restrict_boundary(sig, base, h):
    assert spin.restrict_boundary(QuadForm.from_bits(sig, base)).values == h


@pytest.mark.parametrize("sig,h,base", [
    (T10, (0,), (0, 0)),
    (SurfaceSig.from_gn(1, 2), (1, 1, 0), (0, 0, 1, 0)),
    (P2, (0, 1, 1), (1, 1)),
])
def test_base_form(sig, h, base):
    omega = spin.base_form(sig, h)
    assert omega.base == base
    assert spin.restrict_boundary(omega).values == h


def test_base_form_rejects_odd_total():
    with pytest.raises(InfeasibleError):
        spin.base_form(P2, (1, 0, 0))


@pytest.mark.parametrize("sig,base,value", [
    (T10, (1, 1), 1),
    (T10, (0, 0), 0),
    (SurfaceSig.from_gn(2, 0), (1, 1, 1, 1), 0),
])
def test_arf(sig, base, value):
    assert spin.arf(QuadForm.from_bits(sig, base)) == value


def test_arf_needs_zero_restriction():
    with pytest.raises(PreconditionError):
        spin.arf(QuadForm.from_bits(T11, (0, 0, 1)))


def test_same_orbit_examples():
    w00 = QuadForm.from_bits(T10, (0, 0))
    x = spin.same_orbit(w00, QuadForm.from_bits(T10, (1, 0)))
    assert x == cls(T10, "B1")
    assert spin.same_orbit(w00, QuadForm.from_bits(T10, (1, 1))) is None
    assert spin.same_orbit(w00, w00) == F2Class.zero(T10)


@pytest.mark.parametrize("sig,h,count", [
    (T10, (1,), 0),
    (P2, (0, 1, 1), 1),
    (SurfaceSig.from_gn(2, 1), (0, 0), 2),
])
def test_orbit_count(sig, h, count):
    assert spin.orbit_count(sig, h) == count


def test_describe():
    d = spin.describe(QuadForm.from_bits(T10, (1, 1)))
    assert d == {"base": [1, 1], "boundary_restriction": [0],
                 "orbits_over_restriction": 2, "arf": 1}


# ---------------------------------------------------------------------------
# properties


@given(forms_and_classes())
def test_quadratic_law(data):
    omega, x, y = data
    lhs = spin.eval(omega, x + y)
    rhs = spin.eval(omega, x) ^ spin.eval(omega, y) ^ intersection_mod2(omega.sig, x, y)
    assert lhs == rhs


@given(forms_and_classes())
def test_action_matches_pointwise_pullback(data):
    omega, a, x = data
    moved = spin.act_transvection(omega, a)
    assert spin.eval(moved, x) == spin.eval(omega, spin.transvect_class(a, x))


@given(forms_and_classes(), st.data())
def test_cocycle_law(data, more):
    omega, a1, a2 = data
    sig = omega.sig
    top = (1 << sig.rank) - 1
    b1 = F2Class(sig, more.draw(st.integers(0, top)))
    s1, s2 = [a1, b1], [a2]
    total = spin.difference(omega, spin.act_word(omega, s1 + s2)).mask
    first = spin.difference(omega, spin.act_word(omega, s1))
    # (w o S1 - w) o S2: pull the functional back along the homology action of S2
    pulled = 0
    for k in range(sig.rank):
        e = F2Class(sig, 1 << k)
        for a in reversed(s2):
            e = spin.transvect_class(a, e)
        pulled |= first(e) << k
    second = spin.difference(omega, spin.act_word(omega, s2)).mask
    assert total == pulled ^ second


@given(forms_and_classes())
def test_action_preserves_boundary_and_arf(data):
    omega, a, _ = data
    moved = spin.act_transvection(omega, a)
    h = spin.restrict_boundary(omega)
    assert spin.restrict_boundary(moved) == h
    if h.is_zero():
        assert spin.arf(moved) == spin.arf(omega)


@given(forms_and_classes())
def test_arf_of_shifted_base_form(data):
    omega, x, _ = data
    sig = omega.sig
    w0 = spin.base_form(sig, (0,) * sig.boundary_count)
    shifted = QuadForm(sig, w0.base_mask ^ spin.dual_mask(sig, x.mask))
    assert spin.arf(shifted) == spin.eval(w0, x) ^ spin.arf(w0)


@given(forms_and_classes(max_rank=8), st.data())
def test_same_orbit_is_equivalence(data, more):
    omega, _, _ = data
    sig = omega.sig
    top = (1 << sig.rank) - 1
    w2 = QuadForm(sig, more.draw(st.integers(0, top)))
    w3 = QuadForm(sig, more.draw(st.integers(0, top)))
    assert spin.same_orbit(omega, omega) is not None
    r12 = spin.same_orbit(omega, w2) is not None
    assert r12 == (spin.same_orbit(w2, omega) is not None)
    if r12 and spin.same_orbit(w2, w3) is not None:
        assert spin.same_orbit(omega, w3) is not None


@given(forms_and_classes(), st.data())
def test_witness_carries_forms(data, more):
    omega, _, _ = data
    sig = omega.sig
    w2 = QuadForm(sig, more.draw(st.integers(0, (1 << sig.rank) - 1)))
    x = spin.same_orbit(omega, w2)
    if x is not None:
        assert spin.eval(omega, x) == 0
        assert spin.act_transvection(omega, x) == w2
