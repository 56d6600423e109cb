import pytest

from totirr import SplitMix64

# splitmix64 outputs for seed 0; first three are the widely published
# reference values, the rest cross-checked against an independent
# reimplementation of the mixer
SEED0_STREAM = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
    0x1B39896A51A8749B,
)


def test_reference_stream_matches_inline_oracle():
    mask = (1 << 64) - 1

    def mix(z):
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & mask
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB & mask
        return z ^ (z >> 31)

    state = 0xDEC0DE
    rng = SplitMix64(0xDEC0DE)
    for _ in range(200):
        state = (state + 0x9E3779B97F4A7C15) & mask
        assert rng.next_u64() == mix(state)


def test_reference_stream_seed_zero():
    rng = SplitMix64(0)
    got = tuple(rng.next_u64() for _ in range(5))
    assert got == SEED0_STREAM


def test_same_seed_same_stream():
    a = SplitMix64(12345)
    b = SplitMix64(12345)
    assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]


def test_distinct_seeds_diverge():
    a = SplitMix64(1)
    b = SplitMix64(2)
    assert [a.next_u64() for _ in range(4)] != [b.next_u64() for _ in range(4)]


def test_outputs_are_64_bit():
    rng = SplitMix64(0xDEADBEEF)
    for _ in range(1000):
        v = rng.next_u64()
        assert 0 <= v < 1 << 64


def test_below_in_range_and_deterministic():
    rng = SplitMix64(7)
    vals = [rng.below(10) for _ in range(500)]
    assert all(0 <= v < 10 for v in vals)
    again = SplitMix64(7)
    assert vals == [again.below(10) for _ in range(500)]
    # small bounds still hit every residue eventually
    assert set(vals) == set(range(10))


def test_below_rejects_nonpositive():
    rng = SplitMix64(0)
    with pytest.raises(ValueError):
        rng.below(0)
    with pytest.raises(ValueError):
        rng.below(-3)


def test_child_streams_are_stable_and_independent():
    parent = SplitMix64(99)
    first = parent.child(0).next_u64()
    # consuming the parent must not shift child derivation
    parent.next_u64()
    parent.next_u64()
    assert parent.child(0).next_u64() == first
    assert parent.child(1).next_u64() != first


def test_children_of_distinct_keys_differ():
    parent = SplitMix64(0xC0FFEE)
    seeds = {parent.child(k).seed for k in range(1000)}
    assert len(seeds) == 1000


def test_chance_rate_tracks_ratio():
    rng = SplitMix64(42)
    hits = sum(1 for _ in range(10000) if rng.chance(2, 10))
    # 0.2 nominal; generous deterministic envelope
    assert 1700 <= hits <= 2300
