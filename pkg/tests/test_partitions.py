import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sytknap.partitions import (
    add_rim_hooks,
    branching_children,
    conjugate,
    fat_hook,
    format_shape,
    hook_lengths,
    make_partition,
    pad,
    parse_shape,
    partitions,
    second_part_family,
    square_two_tail_partitions,
    three_row,
)

small_partitions = st.integers(0, 12).flatmap(
    lambda n: st.sampled_from(list(partitions(n)) or [()])
)


class TestMakePartition:
    def test_trims_trailing_zeros(self):
        assert make_partition([3, 1, 0]) == (3, 1)
        assert make_partition([3, 0, 0]) == (3,)

    def test_empty(self):
        assert make_partition([]) == ()
        assert make_partition([0, 0]) == ()

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            make_partition([2, 3])

    def test_rejects_interior_zero(self):
        with pytest.raises(ValueError):
            make_partition([3, 0, 1])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            make_partition([2, -1])

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError):
            make_partition([2.5, 1])


class TestConjugate:
    def test_known(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate((5,)) == (1, 1, 1, 1, 1)
        assert conjugate(()) == ()

    @settings(max_examples=60)
    @given(small_partitions)
    def test_involution(self, p):
        assert conjugate(conjugate(p)) == p

    def test_involution_at_20(self):
        for p in partitions(20):
            assert conjugate(conjugate(p)) == p


class TestHookLengths:
    def test_two_by_two(self):
        assert hook_lengths((2, 2)) == [[3, 2], [2, 1]]

    def test_single_cell(self):
        assert hook_lengths((1,)) == [[1]]

    def test_first_row_of_311(self):
        assert hook_lengths((3, 1, 1))[0] == [5, 2, 1]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            hook_lengths(())

    def test_three_row_first_row_product(self):
        # first-row hooks of (r, s, t) multiply to (r+2)!/((r-t+2)(r-s+1))
        from math import factorial

        r, s, t = 7, 4, 2
        row = hook_lengths((r, s, t))[0]
        prod = 1
        for h in row:
            prod *= h
        assert prod * (r - t + 2) * (r - s + 1) == factorial(r + 2)


class TestBranching:
    def test_single_corner(self):
        assert branching_children((2, 2)) == [(2, 1)]

    def test_two_corners(self):
        assert branching_children((3, 1)) == [(3,), (2, 1)]

    def test_long_fat_hook(self):
        got = branching_children((6, 5) + (1,) * 8)
        assert set(got) == {
            (5, 5) + (1,) * 8,
            (6, 4) + (1,) * 8,
            (6, 5) + (1,) * 7,
        }

    def test_child_count_is_distinct_part_count(self):
        for n in range(1, 13):
            for p in partitions(n):
                assert len(branching_children(p)) == len(set(p))


class TestRimHooks:
    def test_known_alternating_example(self):
        got = add_rim_hooks((3, 1), 6)
        assert got == [
            (1, (9, 1)),
            (-1, (6, 4)),
            (1, (4, 4, 2)),
            (-1, (3, 3, 2, 1, 1)),
            (1, (3, 2, 2, 1, 1, 1)),
            (-1, (3, 1, 1, 1, 1, 1, 1, 1)),
        ]

    def test_single_cell(self):
        assert add_rim_hooks((), 1) == [(1, (1,))]

    def test_all_three_hooks(self):
        assert add_rim_hooks((), 3) == [(1, (3,)), (-1, (2, 1)), (1, (1, 1, 1))]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            add_rim_hooks((2,), 0)

    def test_results_are_rim_additions(self):
        # every output contains mu cellwise, has the right size, and the
        # added cells form one connected rim strip
        for m in range(9):
            for mu in partitions(m):
                for k in range(1, 9):
                    for _, lam in add_rim_hooks(mu, k):
                        assert sum(lam) == m + k
                        padded_mu = pad(mu, len(lam))
                        assert all(a >= b for a, b in zip(lam, padded_mu))
                        assert _is_rim_strip(lam, padded_mu)


def _is_rim_strip(lam, mu):
    """Added cells are connected along the rim and one cell thick."""
    cells = set()
    for i in range(len(lam)):
        for j in range(mu[i], lam[i]):
            cells.add((i, j))
    # one cell thick: no 2x2 block
    for (i, j) in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    # connected via side-adjacency or diagonal (i+1, j-1) rim steps
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    while frontier:
        i, j = frontier.pop()
        for nxt in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1), (i + 1, j - 1), (i - 1, j + 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen == cells


class TestSecondPartFamily:
    def test_n32_k11_members(self):
        assert second_part_family(32, 11, True) == [
            (20, 11, 1),
            (18, 11, 3),
            (16, 11, 5),
            (14, 11, 7),
            (12, 11, 9),
        ]

    def test_n32_k12_opposite_members(self):
        assert second_part_family(32, 12, False) == [
            (19, 12, 1),
            (17, 12, 3),
            (15, 12, 5),
            (13, 12, 7),
        ]

    def test_small(self):
        assert second_part_family(4, 1, True) == [(2, 1, 1)]

    def test_zero_third_parts_are_canonical(self):
        fam = second_part_family(20, 2, True)
        assert fam[0] == (18, 2)

    def test_union_is_all_three_part_with_fixed_second(self):
        for n in range(1, 31):
            for k in range(n + 1):
                same = second_part_family(n, k, True)
                opp = second_part_family(n, k, False)
                assert not set(same) & set(opp)
                expected = {
                    p for p in partitions(n, 3) if pad(p, 3)[1] == k
                }
                assert set(same) | set(opp) == expected

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            second_part_family(4, 5, True)


class TestFamilies:
    def test_max_rows(self):
        assert list(partitions(4, 3)) == [(4,), (3, 1), (2, 2), (2, 1, 1)]

    def test_square_two_tail(self):
        assert square_two_tail_partitions(4) == [(2, 2)]
        assert set(square_two_tail_partitions(6)) == {(2, 2, 2), (3, 3)}

    def test_square_two_tail_odd_rejected(self):
        with pytest.raises(ValueError):
            square_two_tail_partitions(7)

    def test_partition_counts(self):
        assert sum(1 for _ in partitions(12)) == 77

    def test_fat_hook_shapes(self):
        assert fat_hook(5, 5, 3) == (5, 5, 1, 1, 1)
        assert fat_hook(3, 3, 0) == (3, 3)
        assert fat_hook(3, 3, -2) is None
        assert fat_hook(0, 0, 4) is None
        assert fat_hook(2, 3, 1) is None

    def test_three_row_shapes(self):
        assert three_row(4, 3, 1) == (4, 3, 1)
        assert three_row(4, 0, 0) == (4,)
        assert three_row(2, 3, 1) is None


class TestShapeText:
    def test_format(self):
        assert format_shape((5, 5, 1, 1, 1)) == "5,5,1^3"
        assert format_shape((2, 2, 2)) == "2^3"
        assert format_shape((10, 10)) == "10,10"
        assert format_shape((18, 2, 0)) == "18,2,0"
        assert format_shape(()) == "()"

    def test_parse(self):
        assert parse_shape("5,5,1^10") == (5, 5) + (1,) * 10
        assert parse_shape("3,1") == (3, 1)
        assert parse_shape("()") == ()

    def test_parse_rejects_bad_input(self):
        with pytest.raises(ValueError):
            parse_shape("1^-2")
        with pytest.raises(ValueError):
            parse_shape("1,3")

    def test_pad_rejects_short_length(self):
        with pytest.raises(ValueError):
            pad((3, 2, 1), 2)

    def test_roundtrip(self):
        for n in range(13):
            for p in partitions(n):
                assert parse_shape(format_shape(p)) == p
