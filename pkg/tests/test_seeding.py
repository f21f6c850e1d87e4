"""Seed derivation: stable, in-range, label-sensitive."""

import pytest

from ocpack.seeding import MAX_SEED, check_seed, derive_seed


def test_derive_seed_is_stable():
    assert derive_seed(0, "rep", 0) == derive_seed(0, "rep", 0)


def test_derive_seed_depends_on_every_label():
    seeds = {
        derive_seed(7, "rep", 0),
        derive_seed(7, "rep", 1),
        derive_seed(7, "cycle", 0),
        derive_seed(8, "rep", 0),
    }
    assert len(seeds) == 4


def test_derived_seed_is_in_range():
    for i in range(50):
        s = derive_seed(i, "x", i)
        assert 0 <= s <= MAX_SEED
        check_seed(s)


def test_check_seed_rejects_bad_values():
    with pytest.raises(ValueError):
        check_seed(-1)
    with pytest.raises(ValueError):
        check_seed(MAX_SEED + 1)
    with pytest.raises(ValueError):
        check_seed("7")
    check_seed(0)
    check_seed(MAX_SEED)
