"""Randomised properties at sizes past the exhaustive range (n up to 12),
mirroring the exhaustive small-n checks."""
from hypothesis import given, settings
from hypothesis import strategies as st

from opstat.core import OrderedSetPartition
from opstat.families import beta, beta_inv
from opstat.motzkin import lambda_map
from opstat.paths import (
    insertion_labels,
    phi,
    phi_inv,
    psi,
    psi_inv,
    theta_map,
    trace_with_block,
    upsilon,
    varphi,
    xi_map,
)
from opstat.statistics import (
    aggregate_profile,
    binv,
    bmaj,
    composite,
    six_composites,
    stat,
    stat_restricted,
    trace_rsb,
)


@st.composite
def partitions(draw, max_n: int = 12):
    n = draw(st.integers(1, max_n))
    blocks: list[list[int]] = []
    for i in range(1, n + 1):
        j = draw(st.integers(0, len(blocks)))
        if j == len(blocks):
            blocks.append([i])
        else:
            blocks[j].append(i)
    order = draw(st.permutations(range(len(blocks))))
    return OrderedSetPartition.from_blocks([blocks[j] for j in order])


@settings(max_examples=80)
@given(partitions())
def test_encoding_roundtrips(pi):
    assert phi(phi_inv(pi)) == pi
    assert psi(psi_inv(pi)) == pi


@settings(max_examples=80)
@given(partitions())
def test_varphi_involution_random(pi):
    h = phi_inv(pi)
    assert varphi(varphi(h)) == h


@settings(max_examples=60)
@given(partitions())
def test_xi_transport_random(pi):
    image = xi_map(pi)
    assert xi_map(image) == pi
    a, b, ci, *_ = six_composites(pi)
    a2, b2, ci2, *_ = six_composites(image)
    assert (a2, b2, ci2) == (b, a, ci)
    assert image.partition_type() == pi.partition_type().complement()
    assert image.standard_form()[1] == pi.standard_form()[1]
    assert stat_restricted(image, "rsb", "TC") == stat_restricted(pi, "rsb", "TC")


@settings(max_examples=60)
@given(partitions())
def test_upsilon_transport_random(pi):
    image = upsilon(pi)
    assert stat(image, "maj") == stat(pi, "inv")
    assert image.partition_type() == pi.partition_type()
    a, b, ci, *_ = six_composites(pi)
    *_, c2, d2, cm2 = six_composites(image)
    assert (c2, d2, cm2) == (a, b, ci)


@settings(max_examples=60)
@given(partitions())
def test_theta_transport_random(pi):
    image = theta_map(pi)
    assert theta_map(image) == pi
    assert stat(image, "maj") == stat(pi, "maj")
    assert image.partition_type() == pi.partition_type().complement()
    assert stat_restricted(image, "rsb", "TC") == stat_restricted(pi, "rsb", "TC")


@settings(max_examples=60)
@given(partitions())
def test_lambda_involution_random(pi):
    std = pi.standard_form()[0]
    image = lambda_map(std)
    assert lambda_map(image) == std
    assert image.k == std.k
    assert stat(std, "mak") == stat(image, "rcb")
    assert stat(std, "lcb") == stat(image, "lcb")


@settings(max_examples=60)
@given(partitions(), st.data())
def test_beta_roundtrip_random(pi, data):
    std = pi.standard_form()[0]
    c = tuple(data.draw(st.integers(0, j - 1)) for j in range(1, std.k + 1))
    image = beta(std, c)
    assert stat(image, "maj") == sum(c)
    assert beta_inv(image) == c
    assert image.standard_form()[0] == std


@settings(max_examples=60)
@given(partitions(), st.data())
def test_insertion_law_random(pi, data):
    i = data.draw(st.integers(0, pi.n - 1))
    t = pi.trace(i)
    labels = insertion_labels(t)
    level = data.draw(st.integers(0, len(labels) - 1))
    active = data.draw(st.booleans())
    base = bmaj(t)
    t2 = trace_with_block(t, labels[level], i + 1, active)
    assert trace_rsb(t2, i + 1) + bmaj(t2) - base == level


@settings(max_examples=60)
@given(partitions())
def test_fast_paths_match_definitions_random(pi):
    prof = aggregate_profile(pi)
    assert prof["ros"] == stat(pi, "ros")
    assert prof["rsb_tc"] == stat_restricted(pi, "rsb", "TC")
    expected = (
        composite(pi, "mak") + binv(pi),
        composite(pi, "makp") + binv(pi),
        composite(pi, "cinvlsb"),
        composite(pi, "mak") + bmaj(pi),
        composite(pi, "makp") + bmaj(pi),
        composite(pi, "cmajlsb"),
    )
    assert six_composites(pi) == expected
