import pytest
from hypothesis import given, settings, strategies as st

from ptpig import (
    GenSpec,
    connected_components,
    generate,
    oracle_recognize,
    probe_subgraph,
    recognize,
    serialize_tagged_graph,
    validate_nonprobe_independence,
    verify_certificate,
)


def test_deterministic_per_seed():
    a, ca = generate(GenSpec(20, 6, seed=11))
    b, cb = generate(GenSpec(20, 6, seed=11))
    assert serialize_tagged_graph(a) == serialize_tagged_graph(b) and ca == cb
    c, _ = generate(GenSpec(20, 6, seed=12))
    assert serialize_tagged_graph(a) != serialize_tagged_graph(c)


def test_planted_instances_carry_their_proof():
    g, cert = generate(GenSpec(40, 12, seed=3))
    assert verify_certificate(g, cert) is None
    assert recognize(g).accepted


def test_probe_part_stays_connected():
    for seed in range(8):
        g, _ = generate(GenSpec(30, 5, seed=seed, overlap=0.2))
        assert connected_components(probe_subgraph(g)).r == 1


def test_small_seeded_examples():
    g, _ = generate(GenSpec(3, 1, seed=7))
    assert recognize(g).accepted

    g, cert = generate(GenSpec(0, 2, seed=0))
    assert g.p == 0 and g.q == 2 and g.edge_count == 0
    assert recognize(g).accepted and verify_certificate(g, cert) is None

    g, _ = generate(GenSpec(8, 3, seed=1))
    assert recognize(g).accepted and oracle_recognize(g)


def test_perturbed_loses_the_certificate():
    g, cert = generate(GenSpec(10, 3, seed=5, perturb=4))
    assert cert is None
    # flips touch only probe-incident pairs, so independence must survive
    assert validate_nonprobe_independence(g) is None


def test_bad_specs_raise():
    with pytest.raises(ValueError):
        GenSpec(-1, 0)
    with pytest.raises(ValueError):
        GenSpec(2, -2)
    with pytest.raises(ValueError):
        GenSpec(2, 2, overlap=1.5)
    with pytest.raises(ValueError):
        GenSpec(2, 2, span=-0.1)
    with pytest.raises(ValueError):
        GenSpec(2, 2, perturb=-1)


@given(
    st.integers(0, 14),
    st.integers(0, 5),
    st.integers(0, 2 ** 32),
    st.floats(0, 1),
    st.floats(0, 1),
)
@settings(max_examples=120, deadline=None)
def test_planted_always_accepts(p, q, seed, overlap, span):
    g, cert = generate(GenSpec(p, q, seed=seed, overlap=overlap, span=span))
    assert verify_certificate(g, cert) is None
    res = recognize(g)
    assert res.accepted
    assert verify_certificate(g, res.certificate) is None


@given(st.integers(1, 8), st.integers(0, 3), st.integers(0, 500), st.integers(1, 5))
@settings(max_examples=100, deadline=None)
def test_perturbed_matches_oracle(p, q, seed, perturb):
    g, _ = generate(GenSpec(p, q, seed=seed, perturb=perturb))
    assert recognize(g).accepted == oracle_recognize(g)
