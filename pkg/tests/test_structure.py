import itertools

import numpy as np
import pytest

from skewlab import rings as rg
from skewlab import structure as st
from skewlab.errors import CapacityError

from oracles import all_right_annihilators, idempotents, principal_right


def _brute_right_ideals(o):
    n = o.ring.order
    out = []
    for k in range(1, n + 1):
        for S in itertools.combinations(range(n), k):
            s = set(S)
            if 0 in s and all(o.add(a, b) in s for a in s for b in s) and \
                    all(o.mul(a, r) in s for a in s for r in range(n)):
                out.append(frozenset(s))
    return set(out)


def test_lattice_matches_all_subsets(oracle_rings):
    for label, o in oracle_rings:
        if o.ring.order > 8:
            continue
        got = {frozenset(I.elements) for I in st.annihilator_lattice(o.ring)}
        assert got == all_right_annihilators(o), label


def test_left_lattice_by_mirroring(oracle_rings):
    o = dict(oracle_rings)["T2Z2"]
    n = o.ring.order
    want = {frozenset(c for c in range(n) if all(o.mul(c, d) == 0 for d in X))
            for k in range(n + 1) for X in itertools.combinations(range(n), k)}
    assert {frozenset(I.elements) for I in st.annihilator_lattice(o.ring, "left")} == want


def test_right_ideals_match_brute_force(oracle_rings):
    for label in ("Z4", "Z6", "dual", "Z2xZ2", "T2Z2", "GF8"):
        o = dict(oracle_rings)[label]
        assert {frozenset(I.elements) for I in st.right_ideals(o.ring)} == _brute_right_ideals(o), label


def test_m2z2_right_ideals():
    m = rg.make_matrix(2, rg.make_zn(2))
    assert len(st.right_ideals(m)) == 5
    assert len(st.annihilator_lattice(m)) == 5


def test_idempotents_and_generation(oracle_rings):
    for label, o in oracle_rings:
        if o.ring.graded:
            continue
        assert st.idempotent_indices(o.ring) == idempotents(o), label
        for e in idempotents(o):
            assert set(np.flatnonzero(st.principal_mask(o.ring, e))) == principal_right(o, e)


def test_z4_examples():
    z4 = rg.make_zn(4)
    assert repr(st.right_annihilator(z4, [z4.element(2)])) == "{0,2}"
    assert [repr(I) for I in st.annihilator_lattice(z4)] == ["{0}", "{0,2}", "{0,1,2,3}"]
    assert st.is_generated_by_idempotent(z4, st.right_annihilator(z4, [2])) is None
    assert st.right_annihilator(z4, []).elements == (0, 1, 2, 3)


def test_z6_idempotents():
    assert st.idempotent_indices(rg.make_zn(6)) == [0, 1, 3, 4]


def test_m2z2_annihilator_of_e11():
    m = rg.make_matrix(2, rg.make_zn(2))
    ann = st.right_annihilator(m, [m.unit(1, 1)])
    assert sorted(repr(a) for a in ann.members) == sorted(
        ["[[0,0],[0,0]]", "[[0,0],[1,0]]", "[[0,0],[0,1]]", "[[0,0],[1,1]]"])
    e = st.is_generated_by_idempotent(m, ann)
    assert e is not None and e * e == e


def test_ideal_validation():
    z4 = rg.make_zn(4)
    with pytest.raises(ValueError):
        st.Ideal(z4, (0, 1))
    with pytest.raises(ValueError):
        st.Ideal(z4, (1, 3))
    assert 2 in st.Ideal(z4, (0, 2)) and len(st.Ideal(z4, (2, 0))) == 2


def test_capacity():
    big = rg.make_galois_field(2, 7)
    with pytest.raises(CapacityError):
        st.right_ideals(big)
    with pytest.raises(CapacityError):
        st.annihilator_lattice_sources(rg.make_zn(2 * 3 * 5 * 7), cap=4)


def test_q8_lattice_size(q8_oracle):
    assert len(st.annihilator_lattice(q8_oracle.ring)) == 15


def test_lattice_sources_generate():
    m = rg.make_matrix(2, rg.make_zn(2))
    for mask, src in st.annihilator_lattice_sources(m).values():
        assert np.array_equal(st.annihilator_mask(m, src), mask)
