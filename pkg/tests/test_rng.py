from hypothesis import given, strategies as st

from hgt.rng import SplitMix64, substream

# reference outputs of splitmix64 published with the algorithm
SEED0_FIRST = 0xE220A8397B1DCDAF
SEED1234567 = [6457827717110365317, 3203168211198807973, 9817491932198370423,
               4593380528125082431, 16408922859458223821]


def test_reference_vectors():
    assert SplitMix64(0).next_u64() == SEED0_FIRST
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == SEED1234567


def test_substreams_differ_and_repeat():
    a = [substream(7, i).next_u64() for i in range(20)]
    assert len(set(a)) == 20
    assert a == [substream(7, i).next_u64() for i in range(20)]


@given(st.integers(0, 2**64 - 1), st.integers(1, 10**30))
def test_below_in_range(seed, bound):
    assert 0 <= SplitMix64(seed).below(bound) < bound


@given(st.integers(0, 2**64 - 1), st.integers(0, 30), st.integers(0, 30))
def test_sample_distinct(seed, pop, k):
    k = min(k, pop)
    s = SplitMix64(seed).sample(pop, k)
    assert len(s) == k == len(set(s)) and all(0 <= x < pop for x in s)


def test_bernoulli_frequency():
    rng = SplitMix64(99)
    hits = sum(rng.bernoulli(2, 3) for _ in range(30000))
    assert abs(hits / 30000 - 2 / 3) < 0.01


def test_bernoulli_extremes():
    rng = SplitMix64(5)
    assert not any(rng.bernoulli(0, 3) for _ in range(100))
    assert all(rng.bernoulli(3, 3) for _ in range(100))
