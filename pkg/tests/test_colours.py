import random

import pytest

from clab.colours import (bits_of, build_blocks, is_proper, mask_of,
                          permute_assignment)
from clab.solver import decide


def test_mask_bits_roundtrip():
    for s in ({0}, {1, 3, 7}, set(), {0, 63, 100}):
        assert set(bits_of(mask_of(s))) == s


def test_is_proper_ok(k2):
    lists = {v: frozenset({0, 1}) for v in k2.vertices}
    phi = {"v0": frozenset({0}), "v1": frozenset({1})}
    assert is_proper(k2, lists, phi, 1).ok


def test_is_proper_edge_violation(k2):
    lists = {v: frozenset({0, 1}) for v in k2.vertices}
    phi = {"v0": frozenset({0}), "v1": frozenset({0})}
    verdict = is_proper(k2, lists, phi, 1)
    assert not verdict.ok
    assert verdict.kind == "edge"
    assert verdict.where == ("v0", "v1")


def test_is_proper_reports_first_shared_colour(k3):
    lists = {v: frozenset(range(5)) for v in k3.vertices}
    phi = {"v0": frozenset({0, 1}), "v1": frozenset({2, 3}),
           "v2": frozenset({0, 4})}
    verdict = is_proper(k3, lists, phi, 2)
    assert verdict.kind == "edge"
    assert verdict.where == ("v0", "v2")


def test_is_proper_size_and_list_violations(k2):
    lists = {"v0": frozenset({0, 1}), "v1": frozenset({2})}
    assert is_proper(k2, lists, {"v0": frozenset({0, 1}), "v1": frozenset({2})}, 1).kind == "size"
    assert is_proper(k2, lists, {"v0": frozenset({2}), "v1": frozenset({2})}, 1).kind == "list"


def test_is_proper_missing_vertex(k2):
    lists = {v: frozenset({0, 1}) for v in k2.vertices}
    with pytest.raises(ValueError, match="missing"):
        is_proper(k2, lists, {"v0": frozenset({0})}, 1)


def test_blocks_m1():
    b = build_blocks(1)
    assert b.A == {0} and b.B == {1}
    assert b.X == {2} and b.Xp == {3}
    assert b.C == {2, 3} and b.D == {4, 5}


def test_blocks_m5():
    b = build_blocks(5)
    assert len(b.C) == len(b.D) == 11
    assert b.C == frozenset(range(10, 21))
    assert b.D == frozenset(range(21, 32))


def test_blocks_m2():
    b = build_blocks(2)
    assert b.X == {4, 5} and b.Xp == {6, 7}
    assert b.C == frozenset(range(4, 8))
    assert b.C == b.X | b.Xp


def test_blocks_rejects_nonpositive_m():
    with pytest.raises(ValueError):
        build_blocks(0)


def test_block_invariants_all_m_to_100():
    for m in range(1, 101):
        b = build_blocks(m)
        k = (2 * m - 1) // 9
        b.validate(m, k)
        assert b.X | b.Xp <= b.C
        assert not b.X & b.Xp
        assert len(b.universe) == 6 * m + 2 * k


def test_proper_invariant_under_permutation(c5):
    rng = random.Random(7)
    lists = {v: frozenset(range(5)) for v in c5.vertices}
    out = decide(c5, lists, 2)
    assert out.feasible
    universe = list(range(5))
    for _ in range(20):
        shuffled = universe[:]
        rng.shuffle(shuffled)
        pi = dict(zip(universe, shuffled))
        assert is_proper(c5, permute_assignment(lists, pi),
                         permute_assignment(out.colouring, pi), 2).ok
