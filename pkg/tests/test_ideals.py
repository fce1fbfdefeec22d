"""Generator families, tabulated wall identities, and variety comparison."""

from __future__ import annotations

import pytest

from fusionforge import (
    build_root_system,
    char_poly,
    generator_list,
    parse_lie_type,
    solve_rank2_system,
    tabulated_wall_root,
    verify_equality_rank2,
    verify_inclusion,
)


def rs_of(name):
    return build_root_system(parse_lie_type(name))


def test_generator_lists_frozen():
    assert generator_list(rs_of("A2"), 2, "thm4.1a").generators == ((3, 0), (4, 0))
    assert generator_list(rs_of("C3"), 1, "thm4.1b").generators == \
        ((2, 0, 0), (1, 1, 0), (1, 0, 1))
    assert generator_list(rs_of("B3"), 1, "thm4.2a").generators == \
        ((2, 0, 0), (3, 0, 0), (4, 0, 0), (5, 0, 0))
    assert generator_list(rs_of("F4"), 2, "thm4.2c").generators == tuple(
        (0, 0, 0, 2 + m) for m in range(1, 7)
    )
    # E7 runs on the basic node 7
    gens = generator_list(rs_of("E7"), 1, "thm4.2a").generators
    assert len(gens) == 17 and gens[0] == (0, 0, 0, 0, 0, 0, 2)


def test_generator_parity_cases():
    odd = generator_list(rs_of("G2"), 3, "thm4.2b")
    assert odd.parity_case == "odd"
    assert odd.generators == ((4, 0), (5, 0), (0, 2))
    even = generator_list(rs_of("G2"), 4, "thm4.2b")
    assert even.parity_case == "even"
    assert even.generators == ((5, 0), (6, 0), (1, 2))
    e8_odd = generator_list(rs_of("E8"), 1, "thm4.2d")
    assert len(e8_odd.generators) == 29
    assert e8_odd.generators[-1] == (0, 0, 0, 0, 0, 0, 0, 1)
    e8_even = generator_list(rs_of("E8"), 2, "thm4.2d")
    assert len(e8_even.generators) == 28
    conj_b = generator_list(rs_of("B4"), 2, "conj4.3a")
    assert conj_b.generators[-1] == (2, 0, 0, 1)
    conj_d = generator_list(rs_of("D5"), 1, "conj4.3b")
    assert conj_d.generators[-2:] == ((1, 0, 0, 1, 0), (1, 0, 0, 0, 1))


def test_source_type_mismatch_rejected():
    with pytest.raises(ValueError):
        generator_list(rs_of("B3"), 1, "thm4.1a")
    with pytest.raises(ValueError):
        generator_list(rs_of("A2"), 1, "thm4.2a")
    with pytest.raises(ValueError):
        generator_list(rs_of("G2"), 1, "thm4.2c")
    with pytest.raises(ValueError):
        generator_list(rs_of("A2"), 1, "nonsense")
    with pytest.raises(ValueError):
        generator_list(rs_of("A2"), 0, "thm4.1a")


def test_tabulated_wall_roots_frozen():
    b3 = rs_of("B3")
    assert tabulated_wall_root(b3, 1, 1) == (1, 2, 2)
    assert tabulated_wall_root(b3, 1, 3) == (1, 1, 0)
    assert tabulated_wall_root(rs_of("G2"), 1, 1) == (3, 2)
    assert tabulated_wall_root(rs_of("G2"), 1, 2) == (3, 1)
    assert tabulated_wall_root(rs_of("F4"), 3, 1) == (2, 3, 4, 2)
    assert tabulated_wall_root(rs_of("F4"), 3, 6) == (0, 1, 2, 2)


def test_tabulated_wall_roots_whole_range():
    # Construction validates positivity and the pairing identity itself;
    # walk every position on a grid of types and levels.
    for name, top in [("B3", 4), ("B5", 8), ("B6", 10),
                      ("D4", 5), ("D5", 7), ("D6", 9),
                      ("G2", 3), ("F4", 6)]:
        rs = rs_of(name)
        for level in (1, 2, 5):
            for m in range(1, top + 1):
                root = tabulated_wall_root(rs, level, m)
                assert root in set(rs.positive_roots)
        with pytest.raises(ValueError):
            tabulated_wall_root(rs, 1, top + 1)
    with pytest.raises(ValueError):
        tabulated_wall_root(rs_of("E6"), 1, 1)


def test_inclusion_reports():
    for name, source in [("B3", "thm4.2a"), ("D4", "conj4.3b"),
                         ("G2", "thm4.2b"), ("F4", "thm4.2c"),
                         ("A2", "thm4.1a"), ("C2", "thm4.1b"),
                         ("E6", "thm4.2a")]:
        rs = rs_of(name)
        for level in (1, 2):
            rep = verify_inclusion(rs, level, source)
            assert rep.passed, (name, source, level)
            for check in rep.checks:
                assert check.fold_is_zero and check.witness is not None
                if check.expected_root is not None:
                    assert check.pairing_matches


def test_inclusion_with_evaluation_covers_added_generators():
    rep = verify_inclusion(rs_of("B4"), 2, "conj4.3a", with_evaluation=True)
    assert rep.passed
    extra = rep.checks[-1]
    assert extra.weight == (2, 0, 0, 1)
    assert extra.max_abs_value is not None and extra.max_abs_value < 1e-6
    rep = verify_inclusion(rs_of("D4"), 2, "conj4.3b", with_evaluation=True)
    assert rep.passed
    for check in rep.checks[-2:]:
        assert check.max_abs_value is not None and check.max_abs_value < 1e-6


def test_solve_rank2_simple_systems():
    x1_sq_minus_1 = {(2, 0): 1, (0, 0): -1}
    x2 = {(0, 1): 1}
    zeros = solve_rank2_system([x2, x1_sq_minus_1])
    assert len(zeros) == 2
    vals = sorted(z[0].real for z in zeros)
    assert abs(vals[0] + 1) < 1e-9 and abs(vals[1] - 1) < 1e-9
    assert all(abs(z[1]) < 1e-9 for z in zeros)
    # inconsistent system: empty zero set
    assert solve_rank2_system([x2, x1_sq_minus_1, {(0, 0): 1, (2, 0): 1}]) == []
    # shared factor makes every resultant vanish; reported, not mangled
    with pytest.raises(ValueError):
        solve_rank2_system([{(0, 1): 1}, {(0, 1): 1, (1, 1): 1}])
    with pytest.raises(ValueError):
        solve_rank2_system([x1_sq_minus_1])


def test_variety_comparison_g2():
    for level, count in [(1, 2), (2, 4), (3, 6)]:
        cmp = verify_equality_rank2(rs_of("G2"), level, "thm4.2b")
        assert cmp.equal and len(cmp.zeros) == count
        assert cmp.max_distance < 1e-6


def test_variety_comparison_rank_one_and_a2():
    cmp = verify_equality_rank2(rs_of("A1"), 1, "thm4.1a")
    assert cmp.equal and len(cmp.zeros) == 2
    vals = sorted(z[0].real for z in cmp.zeros)
    assert abs(vals[0] + 1) < 1e-9 and abs(vals[1] - 1) < 1e-9
    for level in (1, 2):
        cmp = verify_equality_rank2(rs_of("A2"), level, "thm4.1a")
        assert cmp.equal, cmp.diagnostics
        cmp = verify_equality_rank2(rs_of("C2"), level, "thm4.1b")
        assert cmp.equal, cmp.diagnostics
    with pytest.raises(ValueError):
        verify_equality_rank2(rs_of("B3"), 1, "thm4.2a")


def test_char_poly_of_generators_vanish_beyond_minimum():
    # The full generator polynomial system at G2 level 1, evaluated at the
    # fusion points, must vanish generator by generator.
    from fusionforge import enumerate_plevel, fusion_points, poly_eval

    rs = rs_of("G2")
    spec = generator_list(rs, 1, "thm4.2b")
    pts = fusion_points(enumerate_plevel(rs, 1))
    for lam in spec.generators:
        poly = char_poly(rs, lam)
        for p in pts:
            assert abs(poly_eval(poly, p.coords)) < 1e-9
