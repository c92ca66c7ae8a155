# Hypothesis strategies for small monomial ideals.

import hypothesis.strategies as st

from core.models.monomial import Monomial
from core.models.rooting import TotalOrder
from core.tools.monomial_core import minimalize_generators
from core.tools.simplicial import default_context


@st.composite
def monomial_ideals(draw, max_vars: int = 5, max_gens: int = 5, max_exp: int = 2):
    m = draw(st.integers(min_value=1, max_value=max_vars))
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * m).filter(any)
    gens = draw(st.lists(exps, min_size=1, max_size=max_gens, unique=True))
    return minimalize_generators([Monomial(exponents=g) for g in gens], default_context(m))


@st.composite
def ideals_with_order(draw, **kwargs):
    ideal = draw(monomial_ideals(**kwargs))
    seq = draw(st.permutations(list(range(1, ideal.r + 1))))
    return ideal, TotalOrder(sequence=list(seq))


def faces_of(r: int):
    """Sorted subsets of 1..r, the empty face included."""
    return st.sets(st.integers(min_value=1, max_value=r), max_size=r).map(lambda s: tuple(sorted(s)))


@st.composite
def ideals_with_faces(draw, count: int = 3, **kwargs):
    ideal = draw(monomial_ideals(**kwargs))
    return ideal, [draw(faces_of(ideal.r)) for _ in range(count)]


@st.composite
def ideals_with_complex(draw, **kwargs):
    ideal = draw(monomial_ideals(**kwargs))
    facets = draw(st.lists(faces_of(ideal.r).filter(bool), min_size=1, max_size=4))
    return ideal, facets
