import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from origamikit import Origami, Permutation  # noqa: E402
from origamikit import corpus  # noqa: E402
from origamikit.perm import is_transitive  # noqa: E402

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

PUBLISHED = list(corpus.PUBLISHED)
SIX = PUBLISHED + ["octa8_cover"]


@pytest.fixture
def torus():
    return Origami.from_images([0], [0], "torus")


@pytest.fixture
def l_origami():
    # squares 0, 1 side by side, square 2 on top of 0
    return Origami.from_images([1, 0, 2], [2, 1, 0], "L")


@pytest.fixture(params=SIX)
def corpus_surface(request):
    return corpus.get(request.param).origami


def perms(n):
    return st.permutations(range(n)).map(Permutation)


@st.composite
def origamis(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    h = draw(perms(n))
    v = draw(perms(n))
    if not is_transitive([h, v], n):
        # make it connected by threading a cycle through all squares
        v = Permutation(list(range(1, n)) + [0])
    return Origami(h, v)


@st.composite
def relabelings(draw, n):
    return draw(perms(n))
