import random

import hypothesis.strategies as st
from hypothesis import settings

from heckejones.coxeter import Permutation
from heckejones.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    images = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(images)


@st.composite
def laurent_polys(draw, max_terms=5, max_exp=6, max_coeff=10**6):
    terms = draw(st.dictionaries(st.integers(-max_exp, max_exp),
                                 st.integers(-max_coeff, max_coeff), max_size=max_terms))
    return LaurentPoly(terms)


def random_word(rng: random.Random, n: int, length: int) -> list[int]:
    return [rng.randint(1, n - 1) for _ in range(length)]
