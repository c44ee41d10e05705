"""Deterministic stream generator used for sampling."""

from quadcert.rng import SplitMix64


def test_same_seed_same_stream():
    a = SplitMix64(12345)
    b = SplitMix64(12345)
    assert [a.next_u64() for _ in range(50)] == [b.next_u64() for _ in range(50)]


def test_different_seeds_differ():
    a = SplitMix64(1)
    b = SplitMix64(2)
    assert [a.next_u64() for _ in range(8)] != [b.next_u64() for _ in range(8)]


def test_known_first_output():
    # reference value for seed 0; pinned from the published mixing
    # constants so any accidental edit to the mixer shows up here
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_below_is_in_range():
    r = SplitMix64(99)
    for n in (1, 2, 7, 11, 81, 6561, 10 ** 9):
        for _ in range(20):
            v = r.below(n)
            assert 0 <= v < n


def test_below_hits_all_residues_eventually():
    r = SplitMix64(7)
    seen = {r.below(5) for _ in range(200)}
    assert seen == {0, 1, 2, 3, 4}


def test_derive_seed_independent_of_parent_draws():
    a = SplitMix64(42)
    s1 = a.derive_seed()
    s2 = a.derive_seed()
    assert s1 != s2
    b = SplitMix64(42)
    assert (b.derive_seed(), b.derive_seed()) == (s1, s2)
