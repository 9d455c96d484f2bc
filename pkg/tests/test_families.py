from math import factorial

import pytest

from opstat.core import OrderedSetPartition, Permutation
from opstat.families import (
    DeskScaleError,
    FamilySpec,
    beta,
    beta_inv,
    compositions,
    fubini,
    generate,
    ordered_set_partitions,
    partitions_of_type,
    path_diagrams,
    permutations,
    rearrangements,
    set_partitions,
    sigma_partitions,
    stirling2,
    subdiagonal_vectors,
    words,
)
from opstat.statistics import stat


def test_counts_against_closed_forms():
    assert [fubini(n) for n in range(7)] == [1, 1, 3, 13, 75, 541, 4683]
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert sum(1 for _ in set_partitions(n, k)) == stirling2(n, k)


def test_ordered_counts():
    for n in range(1, 7):
        assert sum(1 for _ in ordered_set_partitions(n)) == fubini(n)
        for k in range(1, n + 1):
            count = sum(1 for _ in ordered_set_partitions(n, k))
            assert count == factorial(k) * stirling2(n, k)


def test_set_partitions_smallest():
    assert [pi.to_text() for pi in set_partitions(1, 1)] == ["1"]
    assert [pi.to_text() for pi in set_partitions(3, 2)] == ["1 2/3", "1 3/2", "1/2 3"]


def test_generators_are_deterministic_and_duplicate_free():
    first = list(ordered_set_partitions(4))
    second = list(ordered_set_partitions(4))
    assert first == second
    assert len(set(first)) == len(first)


def test_rearrangement_class_worked_example():
    pi = OrderedSetPartition.parse("1 4/2 3/5")
    got = {rho.to_text() for rho in rearrangements(pi)}
    assert got == {
        "1 4/2 3/5",
        "1 4/5/2 3",
        "5/2 3/1 4",
        "2 3/1 4/5",
        "2 3/5/1 4",
        "5/1 4/2 3",
    }


def test_sigma_partitions_count_and_class():
    sigma = Permutation.parse("312")
    for n in (4, 5):
        members = list(sigma_partitions(n, 3, sigma))
        assert len(members) == stirling2(n, 3)
        assert all(pi.standard_form()[1] == sigma for pi in members)


def test_sigma_class_sizes_at_scale():
    # every sigma-class has exactly S(n,k) members, k <= 4, n <= 7
    for n in range(1, 8):
        for k in range(1, min(n, 4) + 1):
            for sigma in permutations(k):
                assert sum(1 for _ in sigma_partitions(n, k, sigma)) == stirling2(n, k)


def test_type_classes_partition_the_family():
    from collections import Counter

    for n in range(1, 7):
        counts = Counter()
        for pi in ordered_set_partitions(n):
            counts[pi.partition_type()] += 1
        assert sum(counts.values()) == fubini(n)
        for lam, size in counts.items():
            assert sum(1 for _ in partitions_of_type(lam)) == size


def test_partitions_of_type():
    lam = OrderedSetPartition.parse("1 3/2").partition_type()
    members = list(partitions_of_type(lam))
    assert {pi.to_text() for pi in members} == {"1 3/2", "2/1 3"}


def test_words_multiset_permutations():
    got = list(words((2, 1)))
    assert got == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(words(())) == [()]
    assert list(words((0, 1))) == [(2,)]


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(compositions(0)) == [()]


def test_path_diagram_counts_match_fubini():
    for n in range(1, 6):
        total = sum(sum(1 for _ in path_diagrams(n, k)) for k in range(1, n + 1))
        assert total == fubini(n)


def test_family_spec_dispatch():
    assert list(generate(FamilySpec("P", n=3, k=2))) == list(set_partitions(3, 2))
    assert list(generate(FamilySpec("S", k=3))) == list(permutations(3))
    assert list(generate(FamilySpec("words", parts=(1, 1)))) == [(1, 2), (2, 1)]
    with pytest.raises(ValueError, match="unknown family kind"):
        FamilySpec("Q", n=1)


def test_desk_scale_guard(monkeypatch):
    with pytest.raises(DeskScaleError):
        next(ordered_set_partitions(13))
    monkeypatch.setenv("OPSTAT_MAX_N", "13")
    assert next(ordered_set_partitions(13)) is not None
    monkeypatch.delenv("OPSTAT_MAX_N")
    assert next(ordered_set_partitions(13, allow_large=True)) is not None


# ---------------------------------------------------------------------------
# beta
# ---------------------------------------------------------------------------

def test_beta_zero_vector_has_maj_zero():
    for pi0 in set_partitions(5, 3):
        rho = beta(pi0, (0, 0, 0))
        assert stat(rho, "maj") == 0


def test_beta_realises_prescribed_maj():
    for pi0 in set_partitions(5, 3):
        for c in subdiagonal_vectors(3):
            assert stat(beta(pi0, c), "maj") == sum(c)


def test_beta_image_is_rearrangement_class():
    for k in range(1, 5):
        for pi0 in set_partitions(5, k):
            image = {beta(pi0, c) for c in subdiagonal_vectors(k)}
            assert image == set(rearrangements(pi0))


def test_beta_roundtrip_exhaustive():
    for k in range(1, 6):
        for pi0 in set_partitions(5, k):
            for c in subdiagonal_vectors(k):
                assert beta_inv(beta(pi0, c)) == c


def test_beta_validation():
    pi0 = OrderedSetPartition.parse("1 2/3")
    with pytest.raises(ValueError):
        beta(pi0, (0,))
    with pytest.raises(ValueError):
        beta(pi0, (0, 5))
    with pytest.raises(ValueError):
        beta(OrderedSetPartition.parse("3/1 2"), (0, 0))
