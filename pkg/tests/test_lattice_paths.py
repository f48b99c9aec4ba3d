import pytest
from hypothesis import given, strategies as st

from qtcatalan.errors import CapacityError, ValidationError
from qtcatalan.lattice_paths import (
    DYCK_CAP,
    DyckPath,
    MotzkinPath,
    area,
    area_from_height_sum,
    area_prime,
    area_rank_counts,
    catalan,
    enumerate_dyck,
    enumerate_motzkin,
    first_return_split,
    raise_path,
)
from qtcatalan.su_words import decode, motzkin_area, rank_su, word_of_path

EXAMPLE_8 = "UUUUUDDUUDUDDDDD"
SPLIT_EXAMPLE = "UUUDUUDDDDUUDDUD"
AREA_8 = "UUUDUUDDDD"


def test_validation():
    for bad in ("UDD", "DU", "UUD", "UXD"):
        with pytest.raises(ValidationError):
            DyckPath(bad)
    with pytest.raises(ValidationError):
        MotzkinPath("DU")


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 14), (5, 42)])
def test_enumerate_counts(n, count):
    assert len(list(enumerate_dyck(n))) == count


def test_enumerate_order_is_lexicographic():
    paths = [p.steps for p in enumerate_dyck(3)]
    assert paths == sorted(paths, key=lambda s: s.replace("U", "0").replace("D", "1"))
    assert paths[0] == "UUUDDD"
    assert list(enumerate_dyck(1))[0].steps == "UD"
    assert list(enumerate_dyck(0))[0].steps == ""


def test_enumerate_cap():
    with pytest.raises(CapacityError):
        next(enumerate_dyck(DYCK_CAP + 1))


@pytest.mark.parametrize("n", range(0, 11))
def test_enumerate_catalan_and_distinct(n):
    paths = [p.steps for p in enumerate_dyck(n)]
    assert len(paths) == catalan(n) == len(set(paths))


@pytest.mark.parametrize("steps, value", [("UDUDUDUD", 0), (AREA_8, 8), ("UUUUDDDD", 6), ("", 0)])
def test_area(steps, value):
    assert area(DyckPath(steps)) == value


@pytest.mark.parametrize("steps, value", [("UD", 1), (AREA_8, 13), ("UUUUDDDD", 10)])
def test_area_prime(steps, value):
    assert area_prime(DyckPath(steps)) == value


def test_split_examples():
    s = first_return_split(DyckPath("UD"))
    assert (s.k, s.left.steps, s.right.steps) == (0, "", "")
    s = first_return_split(DyckPath("UDUUDD"))
    assert (s.k, s.left.steps, s.right.steps) == (0, "", "UUDD")
    s = first_return_split(DyckPath(SPLIT_EXAMPLE))
    assert s.k == 4 and s.left.order == 4 and s.right.order == 3
    assert (s.left.steps, s.right.steps) == ("UUDUUDDD", "UUDDUD")
    assert s.recompose().steps == SPLIT_EXAMPLE


def test_raise_examples():
    assert raise_path(DyckPath("")).steps == "UD"
    assert raise_path(DyckPath("UD")).steps == "UUDD"
    p = decode("rblre")
    assert word_of_path(raise_path(p)).letters == "blrbee"


@pytest.mark.parametrize("n, count", [(1, 1), (4, 4), (5, 9)])
def test_motzkin_counts(n, count):
    assert len(list(enumerate_motzkin(n))) == count


def test_motzkin_order_five_weights():
    # Weights of the nine order-5 Motzkin paths.
    weights = sorted((motzkin_area(m), m.ups) for m in enumerate_motzkin(5))
    assert weights == sorted([(0, 0), (3, 1), (3, 1), (3, 1), (5, 1), (5, 1), (7, 1), (6, 2), (10, 2)])


@pytest.mark.parametrize("n", range(0, 11))
def test_split_round_trip(n):
    for p in enumerate_dyck(n):
        if n:
            assert first_return_split(p).recompose() == p


@pytest.mark.parametrize("n", range(0, 10))
def test_raise_adds_order_to_area(n):
    for p in enumerate_dyck(n):
        assert area(raise_path(p)) == n + area(p)


@pytest.mark.parametrize("n", range(0, 11))
def test_two_area_formulas_agree(n):
    for p in enumerate_dyck(n):
        assert area(p) == area_from_height_sum(p)


@pytest.mark.parametrize("n", range(0, 13))
def test_area_at_least_rank(n):
    assert all(a >= r for a, r in area_rank_counts(n))


@pytest.mark.parametrize("n", range(0, 9))
def test_fast_tally_matches_objects(n):
    tally = {}
    for p in enumerate_dyck(n):
        key = (area(p), rank_su(p))
        tally[key] = tally.get(key, 0) + 1
    assert tally == area_rank_counts(n)


@given(st.lists(st.booleans(), max_size=20))
def test_random_prefix_walks(bits):
    # Any walk that stays nonnegative and closes is accepted, others raise.
    steps = "".join("U" if b else "D" for b in bits)
    h, ok = 0, True
    for c in steps:
        h += 1 if c == "U" else -1
        ok &= h >= 0
    ok &= h == 0
    if ok:
        assert DyckPath(steps).order == len(steps) // 2
    else:
        with pytest.raises(ValidationError):
            DyckPath(steps)
