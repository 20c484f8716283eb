"""Degeneration pipeline: problem validation, genus-0 integrals, padding,
distributions, and the genus-g assembly against the genus-1 pipelines."""

import itertools

import pytest

from pencils.degeneration import (
    RamificationProblem,
    consolidate_fixed,
    count_with_padding,
    distributions,
    genus0_count,
    genus0_weighted,
    genus_g_count,
    genus_g_weighted,
    pad_moving,
)
from pencils.errors import DomainError
from pencils.exactmath import catalan
from pencils.genus1 import Genus1Tuple, count_laurent, on_shell_tuples, weighted_count


def test_problem_validation():
    with pytest.raises(DomainError, match="genus"):
        RamificationProblem(-1, 3, (2, 2), (2, 2, 3))
    with pytest.raises(DomainError, match="degree"):
        RamificationProblem(1, 1, (2, 2), (2, 2, 3))
    with pytest.raises(DomainError, match="imposes no condition"):
        RamificationProblem(1, 3, (1, 3), (2, 2, 3))
    with pytest.raises(DomainError, match="moving conditions exceed"):
        RamificationProblem(0, 3, (2, 2), (2,))
    with pytest.raises(DomainError, match="unstable"):
        RamificationProblem(0, 3, (3, 3))  # two fixed points on a rational curve
    with pytest.raises(DomainError, match="unstable"):
        RamificationProblem(1, 2, (), (2, 2, 2))
    with pytest.raises(DomainError, match="off-shell"):
        RamificationProblem(1, 3, (2, 2), (2, 2))


def test_problem_properties():
    p = RamificationProblem(1, 3, (2, 2), (2, 2, 3))
    assert (p.n, p.m) == (2, 3)
    assert p.conditions_imposed() == 3
    assert p.moduli_dimension() == 3
    assert p.fixed == (2, 2) and p.moving == (2, 2, 3)


def test_genus0_examples():
    assert genus0_count(2, (2, 2)) == 1
    assert genus0_count(3, (2, 2, 2, 2)) == 2
    assert genus0_count(3, (3, 3)) == 1
    assert genus0_count(4, (2,) * 6) == catalan(3)
    for d in range(2, 8):
        assert genus0_count(d, (d, d)) == 1
    with pytest.raises(DomainError, match="outside"):
        genus0_count(3, (4, 2))
    with pytest.raises(DomainError, match="off-shell"):
        genus0_count(3, (2, 2))


def test_genus0_weighted():
    assert genus0_weighted(2, (2, 2)) == 1
    assert genus0_weighted(3, (3, 3)) == 2
    assert genus0_weighted(4, (4, 4)) == 5
    # the weighted count only sees the total: any on-shell orders give
    # the same Catalan number, and orders above the degree are allowed
    for d in range(2, 10):
        assert genus0_weighted(d, (d, d)) == catalan(d - 1)
        assert genus0_weighted(d, (2,) * (2 * d - 2)) == catalan(d - 1)
    assert genus0_weighted(3, (4, 2)) == 2
    with pytest.raises(DomainError, match="off-shell"):
        genus0_weighted(3, (3, 2))


def test_pad_moving():
    p = RamificationProblem(1, 3, (3,), (3,))
    padded, factor = pad_moving(p)
    assert padded.moving == (3, 2, 2) and factor == 2
    full = RamificationProblem(1, 3, (2, 2), (2, 2, 3))
    assert pad_moving(full) == (full, 1)
    q = RamificationProblem(2, 4, (3,), (3, 3, 2, 2))
    padded, factor = pad_moving(q)
    assert padded.moving == (3, 3, 2, 2, 2, 2) and factor == 2


def test_distributions():
    assert distributions((2, 2, 3), 1) == [((2, 2, 3),)]
    twenty = distributions((4, 5, 6, 7, 8, 9), 2)
    assert len(twenty) == 20
    assert len(set(twenty)) == 20
    for dist in twenty:
        assert sorted(x for triple in dist for x in triple) == [4, 5, 6, 7, 8, 9]
    assert len(distributions((2,) * 9, 3)) == 1680
    with pytest.raises(DomainError, match="labels"):
        distributions((2, 2), 1)


def test_worked_example():
    p = RamificationProblem(1, 3, (2, 2), (2, 2, 3))
    assert genus_g_count(p) == 16


def test_hyperelliptic_sextuple():
    p = RamificationProblem(2, 2, (), (2,) * 6)
    assert genus_g_count(p) == 720
    assert genus_g_weighted(p) == 720
    bare = RamificationProblem(2, 2)
    assert count_with_padding(bare) == (1, 720, 720)


def test_genus1_reduction_matches_direct_count():
    for degree in range(2, 7):
        for quad in on_shell_tuples(degree, ordered=True, min_order=2):
            p = RamificationProblem(1, degree, quad[:1], quad[1:])
            assert genus_g_count(p) == count_laurent(Genus1Tuple(*quad)), quad


def test_genus1_weighted_reduction():
    for degree in range(2, 7):
        for quad in on_shell_tuples(degree, min_order=2):
            p = RamificationProblem(1, degree, quad[:1], quad[1:])
            assert genus_g_weighted(p) == weighted_count(Genus1Tuple(*quad)), quad


def test_requires_full_moving_complement():
    p = RamificationProblem(1, 3, (3,), (3,))
    with pytest.raises(DomainError, match="pad with simple ones first"):
        genus_g_count(p)
    with pytest.raises(DomainError, match="pad with simple ones first"):
        genus_g_weighted(p)


def test_weighted_moving_order_cap():
    p = RamificationProblem(2, 3, (), (4, 2, 2, 2, 2, 2))
    assert genus_g_count(p) >= 0  # unweighted side has no cap
    with pytest.raises(DomainError, match="weighted domain"):
        genus_g_weighted(p)


def test_consolidate_fixed():
    p = RamificationProblem(1, 3, (2, 2), (2, 2, 3))
    assert consolidate_fixed(p).fixed == (3,)
    q = RamificationProblem(1, 4, (3, 2, 2), (3, 2, 2))
    assert consolidate_fixed(q).fixed == (5,)
    single = RamificationProblem(1, 3, (3,), (3, 2, 2))
    assert consolidate_fixed(single) == single
    with pytest.raises(DomainError, match="nothing to consolidate"):
        consolidate_fixed(RamificationProblem(2, 2))


def _partitions(total, max_part=None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _problems(g, d):
    """On-shell problems with at least one fixed condition and 3g moving."""
    target = g + 2 * (d - g - 1)
    for fixed_cost in range(1, target + 1):
        moving_cost = target - fixed_cost
        for fixed_parts in _partitions(fixed_cost):
            fixed = tuple(x + 1 for x in fixed_parts)
            if 2 * g - 2 + len(fixed) <= 0:
                continue
            for moving_parts in _partitions(moving_cost):
                if len(moving_parts) > 3 * g:
                    continue
                moving = tuple(x + 2 for x in moving_parts)
                moving += (2,) * (3 * g - len(moving))
                yield RamificationProblem(g, d, fixed, moving)


def test_weighted_consolidation_invariance():
    checked = 0
    for g in (1, 2):
        for d in range(2, 6):
            if g + 2 * (d - g - 1) < 1:
                continue
            cap = max(2, 2 * d - g - 1)
            for p in _problems(g, d):
                if max(p.moving) > cap:
                    continue
                assert genus_g_weighted(p) == genus_g_weighted(consolidate_fixed(p)), p
                checked += 1
    assert checked > 30


def test_count_with_padding_family():
    for d in range(2, 9):
        p = RamificationProblem(1, d, (d,), (d,))
        assert count_with_padding(p) == (d * d - 1, 2 * (d * d - 1), 2)
        assert count_laurent(Genus1Tuple(d, d, 2, 2)) == 2 * (d * d - 1)


def test_label_symmetry():
    base = RamificationProblem(1, 4, (3, 2), (3, 3, 2))
    want = genus_g_count(base)
    want_w = genus_g_weighted(base)
    assert want_w == 72
    for moving in set(itertools.permutations((3, 3, 2))):
        for fixed in set(itertools.permutations((3, 2))):
            p = RamificationProblem(1, 4, fixed, moving)
            assert genus_g_count(p) == want
            assert genus_g_weighted(p) == want_w


def test_genus0_routing():
    p = RamificationProblem(0, 3, (2, 2, 2, 2))
    assert genus_g_count(p) == 2
    assert genus_g_weighted(p) == 2
    assert count_with_padding(p) == (2, 2, 1)


def test_node_codimension_balances():
    # every admissible node choice saturates the ambient dimension, so no
    # distribution is discarded by a dimension filter
    for p in (
        RamificationProblem(1, 3, (2, 2), (2, 2, 3)),
        RamificationProblem(2, 2, (), (2,) * 6),
        RamificationProblem(2, 4, (3,), (3, 3, 2, 2, 2, 2)),
    ):
        d = p.d
        fixed_codim = sum(o - 1 for o in p.fixed)
        for dist in distributions(p.moving, p.g):
            for triples in itertools.product(
                *(
                    [
                        (a, 2 * d + 4 - sum(triple) - a)
                        for a in range(
                            max(0, 2 * d + 4 - sum(triple) - d),
                            min((2 * d + 4 - sum(triple) - 1) // 2, d - 2) + 1,
                        )
                    ]
                    for triple in dist
                )
            ):
                node_codim = sum(2 * d - 1 - a - b for a, b in triples)
                assert fixed_codim + node_codim == 2 * d - 2
