"""Combinatorial oracles: worked values, cross-algorithm agreement, invariants."""

import pytest

from parityq.enumeration import (
    ALL_CONFIGS,
    DecoratedPartition,
    Parity,
    Restriction,
    SepConfig,
    Variant,
    count_overpartitions,
    count_sep,
    count_sep_enumerated,
    enumerate_sep,
    parse_variant,
    series_sep,
)

OD_EU = SepConfig.from_code("od-eu")


class TestConfigCodes:
    def test_roundtrip(self):
        for cfg in ALL_CONFIGS:
            assert SepConfig.from_code(cfg.code) == cfg

    def test_eight_configs(self):
        assert len(ALL_CONFIGS) == 8
        assert len({cfg.code for cfg in ALL_CONFIGS}) == 8

    def test_high_parity_is_opposite(self):
        cfg = SepConfig.from_code("ed-ou")
        assert cfg.low_parity is Parity.EVEN
        assert cfg.high_parity is Parity.ODD
        assert cfg.low_restriction is Restriction.DISTINCT
        assert cfg.high_restriction is Restriction.UNRESTRICTED

    def test_bad_codes_rejected(self):
        for bad in ["oo-ee", "od", "od-ou", "xd-eu", "od-e"]:
            with pytest.raises(ValueError):
                SepConfig.from_code(bad)

    def test_variant_parsing(self):
        assert parse_variant("over") is Variant.OVERLINED
        assert parse_variant("modified") is Variant.MODIFIED
        with pytest.raises(ValueError):
            parse_variant("overlined?!")


class TestWorkedValues:
    def test_six_overlined_objects_of_three(self):
        got = {p.render() for p in enumerate_sep(OD_EU, Variant.OVERLINED, 3)}
        assert got == {"3", "2+1", "3~", "2~+1", "2+1~", "2~+1~"}

    def test_three_modified_objects_of_three(self):
        got = {p.render() for p in enumerate_sep(OD_EU, Variant.MODIFIED, 3)}
        assert got == {"3", "2+1", "2~+1"}

    def test_plain_objects_of_three(self):
        got = {p.render() for p in enumerate_sep(OD_EU, Variant.PLAIN, 3)}
        assert got == {"3", "2+1"}

    def test_counts_of_three(self):
        assert count_sep(OD_EU, Variant.OVERLINED, 3) == 6
        assert count_sep(OD_EU, Variant.MODIFIED, 3) == 3
        assert count_sep(OD_EU, Variant.PLAIN, 3) == 2

    def test_n_zero_is_single_empty_partition(self):
        for cfg in ALL_CONFIGS:
            for v in Variant:
                objs = list(enumerate_sep(cfg, v, 0))
                assert objs == [DecoratedPartition(())]
                assert count_sep(cfg, v, 0) == 1

    def test_single_part_counts(self):
        # (ou low, eu high), overlined: 1 and 1~
        cfg = SepConfig.from_code("ou-eu")
        assert count_sep(cfg, Variant.OVERLINED, 1) == 2

    def test_overlined_series_low_orders(self):
        s = series_sep(SepConfig.from_code("eu-ou"), Variant.OVERLINED, 2)
        assert [s.coefficient(k) for k in range(2)] == [1, 2]
        s = series_sep(SepConfig.from_code("od-ed"), Variant.OVERLINED, 2)
        assert [s.coefficient(k) for k in range(2)] == [1, 2]

    def test_plain_series_constant_term(self):
        for cfg in ALL_CONFIGS:
            s = series_sep(cfg, Variant.PLAIN, 1)
            assert s.coefficient(0) == 1


class TestDeterministicOrder:
    def test_paper_family_order(self):
        got = [p.render() for p in enumerate_sep(OD_EU, Variant.OVERLINED, 3)]
        assert got == ["3", "3~", "2+1", "2~+1", "2+1~", "2~+1~"]

    def test_modified_order(self):
        got = [p.render() for p in enumerate_sep(OD_EU, Variant.MODIFIED, 3)]
        assert got == ["3", "2+1", "2~+1"]

    def test_golden_eu_ou_over_four(self):
        cfg = SepConfig.from_code("eu-ou")
        got = [p.render() for p in enumerate_sep(cfg, Variant.OVERLINED, 4)]
        # 2+1+1 is absent: its odd parts are not larger than its even part
        assert got == [
            "4", "4~",
            "3+1", "3~+1", "3+1~", "3~+1~",
            "2+2", "2~+2",
            "1+1+1+1", "1~+1+1+1",
        ]


class TestCrossAlgorithmAgreement:
    def test_enumeration_equals_weighted_dp(self):
        for cfg in ALL_CONFIGS:
            for v in Variant:
                for n in range(16):
                    assert count_sep_enumerated(cfg, v, n) == count_sep(cfg, v, n), (
                        cfg.code, v.value, n)

    def test_series_matches_counts(self):
        for cfg in ALL_CONFIGS:
            for v in Variant:
                s = series_sep(cfg, v, 12)
                for n in range(12):
                    assert s.coefficient(n) == count_sep(cfg, v, n)


class TestInvariants:
    def test_monotone_refinement(self):
        for cfg in ALL_CONFIGS:
            for n in range(20):
                plain = count_sep(cfg, Variant.PLAIN, n)
                modified = count_sep(cfg, Variant.MODIFIED, n)
                over = count_sep(cfg, Variant.OVERLINED, n)
                assert plain <= modified <= over

    def test_both_unrestricted_mod_equals_over(self):
        for code in ("eu-ou", "ou-eu"):
            cfg = SepConfig.from_code(code)
            for n in range(20):
                assert count_sep(cfg, Variant.MODIFIED, n) == \
                    count_sep(cfg, Variant.OVERLINED, n)

    def test_both_distinct_mod_equals_plain(self):
        for code in ("ed-od", "od-ed"):
            cfg = SepConfig.from_code(code)
            for n in range(20):
                assert count_sep(cfg, Variant.MODIFIED, n) == \
                    count_sep(cfg, Variant.PLAIN, n)

    def test_every_emitted_object_is_valid(self):
        for cfg in ALL_CONFIGS:
            for v in Variant:
                for n in range(10):
                    for p in enumerate_sep(cfg, v, n):
                        assert p.is_valid(cfg, v), (cfg.code, v.value, p)
                        assert p.total == n

    def test_validator_rejects_bad_objects(self):
        cfg = OD_EU  # odd low distinct, even high unrestricted
        bad = [
            DecoratedPartition(((1, False), (2, False))),       # increasing sizes
            DecoratedPartition(((1, False), (1, False))),       # odd block not distinct
            DecoratedPartition(((3, False), (2, False))),       # even not above odd
            DecoratedPartition(((2, True), (2, True))),         # double overline
            DecoratedPartition(((2, False), (2, True), (1, False))),  # overline not first
        ]
        for p in bad:
            assert not p.is_valid(cfg, Variant.OVERLINED)
        # overline on a distinct-block size is fine when overlined but not modified
        p = DecoratedPartition(((3, True),))
        assert p.is_valid(cfg, Variant.OVERLINED)
        assert not p.is_valid(cfg, Variant.MODIFIED)
        assert not p.is_valid(cfg, Variant.PLAIN)


class TestOverpartitionAnchor:
    def test_known_values(self):
        assert count_overpartitions(0) == 1
        assert count_overpartitions(3) == 8
        assert count_overpartitions(4) == 14

    def test_first_few_match_decorated_enumeration(self):
        # brute force overpartitions = decorated partitions with no
        # parity/separation constraints; compare against a direct recursion
        def partitions(n, largest):
            if n == 0:
                yield ()
                return
            for s in range(min(largest, n), 0, -1):
                for rest in partitions(n - s, s):
                    yield (s,) + rest

        for n in range(9):
            total = sum(2 ** len(set(p)) for p in partitions(n, n))
            assert count_overpartitions(n) == total
