from __future__ import annotations

import hypothesis
import pytest

from framing_orbits.surface import SurfaceSig

hypothesis.settings.register_profile("default", deadline=None, max_examples=150)
hypothesis.settings.load_profile("default")


@pytest.fixture
def torus1() -> SurfaceSig:
    return SurfaceSig(1, 1)


@pytest.fixture
def torus2() -> SurfaceSig:
    return SurfaceSig(1, 2)
