"""Acceptance criteria 1-9, one pytest mark per criterion.

Expected values are the published ones, asserted at the published
tolerances. ``conftest.py`` prints a PASS/FAIL line per criterion at the
end of the run.
"""
import math
from collections import defaultdict

import numpy as np
import pytest

from compound_magic import (
    ClanKey,
    FriersonSpec,
    addition_table,
    analyze_properties,
    catalog,
    catalog_spec,
    clan_table,
    closed_form_svs,
    closed_form_svs_mppd,
    construct_frierson,
    counting_table,
    entropy_compression,
    enumerate_assignments,
    lowest_entropy_series,
    mppd_compound,
    mppd_series,
    ones_matrix,
    singular_values_numeric,
    symmetry_variants,
    zero_based_shift,
)
from compound_magic.construction import CATALOG_NAMES, M3

H_TOL = 1e-4
C_TOL = 0.01
SV_REL = 1e-4


def crit(n):
    return pytest.mark.criterion(n)


def measures(prof, n):
    return entropy_compression(prof.sigmas, n)


# -- 1 ----------------------------------------------------------------------

TABLE2 = {
    # name: (square, sigmas, H, C, rank, R, L)
    "5E3": (lambda: ones_matrix(3) * 5, (15, 0, 0), 0.0, 100.0, 1, 0, 50625),
    "M3": (lambda: M3, (15, 6.9282, 3.4641), 0.937098, 14.7017, 3, 2448, 53073),
    "AT3": (lambda: addition_table(3), (16.8481, 1.06837, 0), 0.22595, 79.4332, 2, None, 80577),
}


@crit(1)
@pytest.mark.parametrize("name", list(TABLE2))
def test_c1_table2(name):
    build, sigmas, H, C, rank, R, L = TABLE2[name]
    prof = singular_values_numeric(build())
    for got, want in zip(prof.sigmas, sigmas):
        if want == 0:
            assert got <= 1e-9 * prof.sigmas[0]
        else:
            assert got == pytest.approx(want, rel=SV_REL)
    m = measures(prof, 3)
    assert abs(m.H - H) <= H_TOL
    assert abs(m.C - C) <= C_TOL
    assert prof.rank == rank
    assert prof.L == L
    if R is not None:
        assert prof.R == R


# -- 2 ----------------------------------------------------------------------

SEXTET_CLANS = [
    # (H, C, R), ascending in H
    (1.12999, 48.572, 1_301_165_856),
    (1.31781, 40.0241, 797_281_056),
    (1.32208, 39.8296, 842_630_688),
]


@crit(2)
def test_c2_sextet_clans():
    groups = defaultdict(list)
    for spec in enumerate_assignments(2):
        groups[closed_form_svs(spec).sigma_sq_exact].append(spec)
    assert len(groups) == 3
    rows = []
    for sq, members in groups.items():
        assert len(members) == 2
        prof = singular_values_numeric(construct_frierson(members[0]))
        assert prof.sigma_sq_exact == sq
        assert prof.sigma_sq_exact[0] == 369**2
        m = measures(prof, 9)
        rows.append((m.H, m.C, prof.R))
    rows.sort()
    for (H, C, R), (eH, eC, eR) in zip(rows, SEXTET_CLANS):
        assert abs(H - eH) <= H_TOL
        assert abs(C - eC) <= C_TOL
        assert R == eR


# -- 3 ----------------------------------------------------------------------

def _agree(mat, cf):
    num = singular_values_numeric(mat)
    assert num.rank == cf.rank
    for a, b in zip(num.sigmas, cf.sigmas):
        assert abs(a - b) <= 1e-9 * (b if b > 0 else cf.sigmas[0])
    return num


@crit(3)
@pytest.mark.parametrize("l", [1, 2, 3])
def test_c3_oracle_all_canonical(l):
    for spec in enumerate_assignments(l):
        num = _agree(construct_frierson(spec), closed_form_svs(spec))
        assert num.rank == 2 * l + 1


@crit(3)
def test_c3_oracle_browne_b27():
    spec = FriersonSpec.of(1, (27, 1), (81, 3), (243, 9))
    assert _agree(catalog("browne_b27"), closed_form_svs(spec)).rank == 7
    assert ClanKey.from_spec(spec) == clan_table(3)[-1].key


@crit(3)
@pytest.mark.parametrize("name", [n for n in CATALOG_NAMES if catalog_spec(n) is not None])
def test_c3_oracle_catalog(name):
    spec = catalog_spec(name)
    assert _agree(catalog(name), closed_form_svs(spec)).rank == 2 * spec.level + 1


# -- 4 ----------------------------------------------------------------------

TABLE5 = [
    (1.16247, 64.7291), (1.20646, 63.3944), (1.20697, 63.3788), (1.34763, 59.1110),
    (1.35191, 58.9813), (1.38498, 57.9778), (1.38566, 57.9573), (1.38973, 57.8338),
    (1.39035, 57.8149), (1.46991, 55.4010), (1.46996, 55.3995), (1.47129, 55.3593),
    (1.47148, 55.3533), (1.47178, 55.3443), (1.47193, 55.3398),
]


@crit(4)
def test_c4_table5_h_and_c():
    rows = clan_table(3)
    assert len(rows) == 15
    for row, (H, C) in zip(rows, TABLE5):
        assert abs(row.H - H) <= H_TOL, row.key
        assert abs(row.C - C) <= C_TOL, row.key


@crit(4)
def test_c4_r_clan_a():
    assert clan_table(3)[0].R == 691_492_899_739_824


@crit(4)
def test_c4_r_clan_o():
    assert clan_table(3)[-1].R == 420_327_995_019_696


# -- 5 ----------------------------------------------------------------------

TABLE6 = {
    # l: (sigma1, tail / sqrt3, H, C)
    1: (15, (4, 2), 0.93709, 14.7017),
    2: (369, (108, 54, 12, 6), 1.1299, 48.572),
    3: (9855, (2916, 1458, 324, 162, 36, 18), 1.16247, 64.7291),
    4: (265761, (78732, 39366, 8748, 4374, 972, 486, 108, 54), 1.16732, 73.4364),
    5: (7174575, (2125764, 1062882, 236196, 118098, 26244, 13122, 2916, 1458, 324, 162), 1.1677038, 78.7368),
}


@pytest.fixture(scope="module")
def series():
    return {r.l: r for r in lowest_entropy_series(6)}


@crit(5)
@pytest.mark.parametrize("l", sorted(TABLE6))
def test_c5_sigma1_and_tail(series, l):
    sigma1, tail, _, _ = TABLE6[l]
    row = series[l]
    assert row.sigma1 == sigma1
    assert row.tail_over_sqrt3 == tail
    sq = closed_form_svs(FriersonSpec.of(1, *ClanKey.of((3 ** (2 * i), 3 ** (2 * i + 1)) for i in range(l)).couples))
    assert sq.sigma_sq_exact[0] == sigma1**2
    assert list(sq.sigma_sq_exact[1:2 * l + 1]) == [3 * t * t for t in tail]


@crit(5)
@pytest.mark.parametrize("l", sorted(TABLE6))
def test_c5_entropy(series, l):
    assert abs(series[l].H - TABLE6[l][2]) <= H_TOL


@crit(5)
@pytest.mark.parametrize("l", sorted(TABLE6))
def test_c5_compression(series, l):
    assert abs(series[l].C - TABLE6[l][3]) <= C_TOL


@crit(5)
def test_c5_level6_entropy(series):
    assert abs(series[6].H - 1.167856) <= H_TOL


@crit(5)
def test_c5_level6_compression(series):
    assert abs(series[6].C - 82.2829) <= C_TOL


@crit(5)
def test_c5_level4_sigma_total_reported(series):
    total = series[4].sigma_total
    print(f"recomputed n=81 sigma_total = {total:.1f}")
    assert total == pytest.approx(265761 + math.sqrt(3) * sum(TABLE6[4][1]))


# -- 6 ----------------------------------------------------------------------

@crit(6)
def test_c6_table7():
    rows = counting_table(5)
    assert [r.num_squares for r in rows] == [1, 6, 90, 2520, 113400]
    assert [len(enumerate_assignments(r.l)) for r in rows] == [1, 6, 90, 2520, 113400]
    assert [r.num_clans for r in rows] == [1, 3, 15, 105, 945]
    assert [r.first_couples for r in rows] == [1, 6, 15, 28, 45]
    assert [r.variant_exponent for r in rows] == [0, 9, 90, 819, 7380]


@crit(6)
def test_c6_big_variant_count():
    v = counting_table(3)[2].variant_count
    assert v == 8**90 == 2**270
    assert len(str(v)) == 82 == math.floor(90 * math.log10(8)) + 1


# -- 7 ----------------------------------------------------------------------

TABLE8 = {
    1: (34, 0.8702, 37.2284, 3),
    2: (2056, 0.98975, 64.3023, 5),
    3: (131104, 1.00156, 75.9175, 7),
    4: (8388736, 1.00257, 81.9199, 9),
}


@crit(7)
@pytest.mark.parametrize("l", sorted(TABLE8))
def test_c7_table8(l):
    sigma1, H, C, rank = TABLE8[l]
    row = mppd_series(l)[-1]
    assert row.sigma1 == sigma1
    assert abs(row.H - H) <= H_TOL
    assert abs(row.C - C) <= C_TOL
    assert row.rank == rank
    cf = closed_form_svs_mppd(l)
    assert cf.sigma_sq_exact[0] == sigma1**2
    for e, s2 in zip(row.tail_log2_over_sqrt5, cf.sigma_sq_exact[1:rank]):
        assert s2 == 5 * 4**e


@crit(7)
@pytest.mark.parametrize("l", [1, 2, 3])
def test_c7_numeric_cross_check(l):
    _agree(mppd_compound(l), closed_form_svs_mppd(l))


# -- 8 ----------------------------------------------------------------------

@crit(8)
@pytest.mark.parametrize("l", [1, 2, 3])
def test_c8_canonical_properties(l):
    for spec in enumerate_assignments(l):
        rep = analyze_properties(construct_frierson(spec))
        assert rep.is_natural and rep.is_magic and rep.is_associative


@crit(8)
def test_c8_at3_and_m3():
    at3 = analyze_properties(addition_table(3))
    assert at3.is_pandiagonal and not at3.is_magic
    m3 = analyze_properties(M3)
    assert m3.is_magic and not m3.is_pandiagonal


@crit(8)
@pytest.mark.parametrize("name", ["m3", "at3", "t9a", "t9c", "f27a", "browne_b27", "mppd4alpha"])
def test_c8_symmetry_invariance(name):
    base = np.array(singular_values_numeric(catalog(name)).sigmas)
    for v in symmetry_variants(catalog(name)):
        got = np.array(singular_values_numeric(v).sigmas)
        assert np.all(np.abs(got - base) <= 1e-9 * base[0])


@crit(8)
def test_c8_zero_based_m3():
    m = measures(singular_values_numeric(zero_based_shift(M3)), 3)
    assert abs(m.H - 0.985975) <= H_TOL
    assert abs(m.C - 10.2527) <= C_TOL


# -- 9 ----------------------------------------------------------------------

@crit(9)
def test_c9_strictly_increasing(series):
    hs = [series[l].H for l in range(1, 7)]
    assert all(a < b for a, b in zip(hs, hs[1:]))


@crit(9)
def test_c9_h6_below_bound(series):
    assert series[6].H < 1.168


@crit(9)
def test_c9_last_increment(series):
    assert series[6].H - series[5].H < 2e-4
