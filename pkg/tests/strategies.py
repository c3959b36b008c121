"""Hypothesis strategies for small algebras."""

from hypothesis import strategies as st

from schurmult.randgen import GenSpec, random_quotient

specs = st.builds(
    GenSpec,
    generators=st.integers(1, 2),
    nilpotency_class=st.integers(2, 3),
    target_dim=st.integers(2, 5),
    seed=st.integers(0, 2**32),
).filter(lambda s: s.target_dim >= s.generators)

nilpotent_algebras = specs.map(random_quotient)
