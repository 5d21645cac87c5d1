import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from cuntzsum.randomgen import random_element, random_raw, rng_for

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def elements(max_n=6, max_len=2, max_components=3):
    """Random unitized elements, driven by a hypothesis-chosen seed."""
    return seeds.map(lambda s: random_element(rng_for(s), max_n=max_n, max_len=max_len,
                                              max_components=max_components))


@st.composite
def raw_inputs(draw, max_n=3, max_len=3):
    n = draw(st.integers(min_value=2, max_value=max_n))
    seed = draw(seeds)
    return n, random_raw(rng_for(seed), n, max_len, max_terms=6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
