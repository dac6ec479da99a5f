"""Hypothesis strategies for property tests"""
from hypothesis import strategies as st

from source.mapping import DeterministicMap
from spectrum.pmf import Pmf


@st.composite
def pmfs(draw, min_size=1, max_size=8, prefix='s', allow_zeros=True):
    """Pmfs with rational probabilities w_i / sum(w)"""
    low = 0 if allow_zeros else 1
    weights = draw(
        st.lists(st.integers(low, 24), min_size=min_size, max_size=max_size)
        .filter(lambda w: sum(w) > 0)
    )
    total = sum(weights)
    labels = tuple(f'{prefix}{i}' for i in range(len(weights)))
    return Pmf(labels, tuple(w / total for w in weights))


@st.composite
def maps_for(draw, pmf, max_codomain=4):
    """A random total map from the labels of pmf onto t0, t1, ..."""
    size = draw(st.integers(1, max_codomain))
    codomain = tuple(f't{j}' for j in range(size))
    images = draw(st.lists(st.sampled_from(codomain),
                           min_size=len(pmf), max_size=len(pmf)))
    return DeterministicMap(pmf.labels, codomain,
                            dict(zip(pmf.labels, images)))


eps_values = st.floats(min_value=0.01, max_value=0.99)
gammas = st.floats(min_value=-3.0, max_value=3.0)
