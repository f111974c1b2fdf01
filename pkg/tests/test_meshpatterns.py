import pytest

from permstat import meshpatterns as mp
from permstat import statistics as st
from permstat.errors import BadParams, UnknownPattern
from permstat.permutation import Permutation, enumerate_permutations, identity

PI = Permutation((3, 1, 4, 5, 6, 2))


def test_examples():
    assert mp.occurrences(mp.builtin("kstep_inv", k=1), PI) == 2
    assert mp.occurrences(mp.builtin("kstep_inv", k=1), identity(6)) == 0
    assert mp.occurrences(mp.builtin("certified_kstep", k=2), (1, 4, 2, 3)) == 1


def test_builtin_shapes():
    p = mp.builtin("kstep_inv", k=2)
    assert p.base == (2, 1) and not p.shaded
    assert p.constraints == (mp.Constraint(mp.Region.column_band(1, 2), "=", 1),)

    z = mp.builtin("zcv_coord", k=2, n=6)
    assert z.base == (2, 1)
    assert {(c.region, c.comparator, c.bound) for c in z.constraints} == {
        (mp.Region.column_band(0, 2), "<=", 1),
        (mp.Region.column_band(2, 2), "<=", 3),
    }

    c = mp.builtin("certified_kstep", k=3)
    assert c.base == (1, 3, 2)
    assert c.shaded == {(1, 3), (2, 3)}
    (band,) = c.constraints
    assert band.comparator == "=" and band.bound == 1


def test_errors():
    with pytest.raises(UnknownPattern):
        mp.builtin("nope")
    with pytest.raises(BadParams):
        mp.builtin("kstep_inv")
    with pytest.raises(BadParams):
        mp.builtin("certified_kstep", k=1)
    with pytest.raises(BadParams):
        mp.builtin("zcv_coord", k=5, n=5)
    with pytest.raises(BadParams):
        mp.MarkedMeshPattern(Permutation((1, 2, 3, 4)))
    with pytest.raises(BadParams):
        mp.MarkedMeshPattern(Permutation((2, 1)), shaded=frozenset({(3, 0)}))
    with pytest.raises(BadParams):
        mp.Constraint(mp.Region.cell(0, 0), "<", 1)
    with pytest.raises(BadParams):
        mp.Constraint(mp.Region.cell(0, 0), "=", -1)


def test_shaded_cell_semantics():
    # 21 with the cell between the two points shaded: adjacent-or-empty box
    pat = mp.MarkedMeshPattern(Permutation((2, 1)), shaded=frozenset({(1, 1)}))
    assert list(mp.matches(pat, (3, 2, 1))) == [(1, 2), (2, 3)]
    assert list(mp.matches(pat, (3, 1, 2))) == [(1, 2), (1, 3)]


@pytest.mark.parametrize("n", range(1, 7))
def test_identities(n):
    for pi in enumerate_permutations(n):
        counts = []
        for k in range(1, n):
            c = mp.occurrences(mp.builtin("kstep_inv", k=k), pi)
            assert c == st.inv_k(pi, k)
            counts.append(c)
            assert mp.occurrences(mp.builtin("le_kstep_inv", k=k), pi) == st.inv_le_k(pi, k)
            assert mp.occurrences(mp.builtin("zcv_coord", k=k, n=n), pi) == st.zone_vector(pi, "inv")[k - 1]
            for k2 in range(1, n):
                assert mp.occurrences(mp.builtin("k1k2_inv", k1=k, k2=k2), pi) == st.inv_k1k2(pi, k, k2)
            for d in (2, 3):
                assert mp.modinv_by_patterns(pi, d, k) == st.modinv_dk(pi, d, k)
            if k >= 2:
                found = list(mp.matches(mp.builtin("certified_kstep", k=k), pi))
                # at most one middle per endpoint pair, so deduplication changes nothing
                assert len({(m[0], m[2]) for m in found}) == len(found)
                assert len(found) == st.certified_ninv_k(pi, k)
        assert sum(counts) == st.inv(pi)
        assert sum(k * c for k, c in enumerate(counts, start=1)) == st.invsum(pi)
