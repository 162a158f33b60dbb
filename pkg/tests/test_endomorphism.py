import itertools

import numpy as np
import pytest

from skewlab import endomorphism as en
from skewlab import rings as rg
from skewlab.errors import ConstructionError, NotAnEndomorphism, RingMismatch

from oracles import RingOracle, ZnModel, ProductModel


def brute_endomorphisms(o):
    """Every additive, multiplicative self-map, by checking all n^n maps."""
    n = o.ring.order
    out = []
    for images in itertools.product(range(n), repeat=n):
        if all(images[o.add(a, b)] == o.add(images[a], images[b]) and
               images[o.mul(a, b)] == o.mul(images[a], images[b])
               for a in range(n) for b in range(n)):
            out.append(images)
    return out


@pytest.mark.parametrize("label", ["Z2", "Z3", "Z4", "GF4", "dual", "Z2xZ2"])
def test_all_endomorphisms_matches_brute_force(oracle_rings, label):
    o = dict(oracle_rings)[label]
    got = sorted(s.images for s in en.all_endomorphisms(o.ring))
    assert got == sorted(brute_endomorphisms(o))


def test_builtins():
    gf4 = rg.make_galois_field(2, 2)
    fr = en.frobenius(gf4, 2)
    assert fr.label == "frobenius(2)" and fr.injective and fr.preserves_unity
    assert not fr.is_identity
    assert fr.orbit_shape() == (0, 2)
    assert np.array_equal(fr.power(2), np.arange(4))

    p = rg.make_product(rg.make_zn(2), rg.make_zn(2))
    sw = en.swap(p)
    assert sw(p.element((1, 0))) == p.element((0, 1))

    dual = rg.make_poly_quotient(rg.make_zn(2), "t^2")
    ct = en.constant_term(dual)
    assert ct.images == (0, 1, 0, 1)
    assert not ct.injective and ct.orbit_shape() == (1, 1)

    w = rg.make_bounded_poly(rg.make_zn(2), 2)
    ev = en.eval_at_zero(w)
    assert ev.label == "eval0"
    assert all(ev(a).index in (0, 1) for a in w.elements())


def test_identity_flags():
    r = rg.make_zn(4)
    s = en.identity(r)
    assert s.is_identity and s.label == "identity"
    assert en.from_table(r, [0, 1, 2, 3]) == s


def test_non_unital_allowed():
    p = rg.make_product(rg.make_zn(2), rg.make_zn(2))
    # (a, b) -> (a, 0)
    s = en.from_table(p, {i: p.encode((p.decode(i)[0], 0)) for i in range(4)})
    assert not s.preserves_unity


@pytest.mark.parametrize("build, exc", [
    (lambda: en.swap(rg.make_zn(4)), ConstructionError),
    (lambda: en.swap(rg.make_product(rg.make_zn(2), rg.make_zn(3))), ConstructionError),
    (lambda: en.constant_term(rg.make_zn(4)), ConstructionError),
    (lambda: en.from_table(rg.make_zn(4), [0, 2, 0, 2]), NotAnEndomorphism),
    (lambda: en.from_table(rg.make_zn(4), [0, 1, 2]), NotAnEndomorphism),
    (lambda: en.from_table(rg.make_zn(4), [0, 1, 2, 7]), NotAnEndomorphism),
    (lambda: en.from_table(rg.make_zn(4), {0: 0, 1: 1}), NotAnEndomorphism),
    (lambda: en.frobenius(rg.make_zn(4), 2), NotAnEndomorphism),
])
def test_rejections(build, exc):
    with pytest.raises(exc):
        build()


def test_verification_report_witness():
    rep = en.verify_endomorphism(rg.make_zn(3), [0, 2, 2])
    assert not rep.ok and rep.additive_witness is not None


def test_apply_power_and_mismatch():
    gf4 = rg.make_galois_field(2, 2)
    fr = en.frobenius(gf4, 2)
    t = gf4.element((0, 1))
    assert en.apply_power(fr, 3, t) == fr(t)
    with pytest.raises(RingMismatch):
        en.apply_power(fr, 1, rg.make_zn(2).one())
    with pytest.raises(ValueError):
        fr.power(-1)


def test_power_cache_threadsafe():
    from concurrent.futures import ThreadPoolExecutor
    r = rg.make_galois_field(2, 4)
    s = en.frobenius(r, 2)
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(lambda k: s.power(k).tolist(), range(40)))
    for k, imgs in enumerate(results):
        assert imgs == s.power(k % 4).tolist()
