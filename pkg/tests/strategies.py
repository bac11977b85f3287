"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from framing_orbits.framing import Framing
from framing_orbits.relative import RelFraming
from framing_orbits.spin import QuadForm
from framing_orbits.surface import F2Class, SurfaceSig

ints = st.integers(min_value=-40, max_value=40)


@st.composite
def sigs(draw, max_genus: int = 3, max_n: int = 3) -> SurfaceSig:
    return SurfaceSig.from_gn(draw(st.integers(0, max_genus)), draw(st.integers(0, max_n)))


@st.composite
def framings(draw, sig_strategy=None, coords=ints) -> Framing:
    sig = draw(sig_strategy if sig_strategy is not None else sigs())
    return Framing.from_coords(sig, draw(st.lists(coords, min_size=sig.rank, max_size=sig.rank)))


@st.composite
def rel_framings(draw, genus: int | None = 1, max_n: int = 3, coords=ints) -> RelFraming:
    g = draw(st.integers(1, 3)) if genus is None else genus
    sig = SurfaceSig.from_gn(g, draw(st.integers(0, max_n)))
    tail = draw(st.lists(st.integers(-12, 12), min_size=sig.n, max_size=sig.n))
    nu = [2 - 2 * g - sum(tail)] + tail
    vec = lambda k: draw(st.lists(coords, min_size=k, max_size=k))  # noqa: E731
    return RelFraming.make(sig, nu, vec(g), vec(g), vec(sig.n))


@st.composite
def forms_and_classes(draw, max_rank: int = 10):
    sig = draw(sigs().filter(lambda s: s.rank <= max_rank))
    top = (1 << sig.rank) - 1
    omega = QuadForm(sig, draw(st.integers(0, top)))
    x = F2Class(sig, draw(st.integers(0, top)))
    y = F2Class(sig, draw(st.integers(0, top)))
    return omega, x, y
