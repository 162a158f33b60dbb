import pytest

from skewlab import endomorphism as en
from skewlab import harness
from skewlab import rings as rg
from skewlab.errors import CatalogError
from skewlab.properties import Bounds, Status, replay


@pytest.fixture(scope="module")
def catalog():
    return {e.name: e for e in harness.load_catalog()}


def test_catalog_profiles_rederived(catalog):
    assert len(catalog) == 11
    assert catalog["Z2x-eval0"].ring.graded
    for e in catalog.values():
        assert e.sigma.ring == e.ring


def test_catalog_mismatch_raises(monkeypatch):
    Z4 = rg.make_zn(4)

    def bogus():
        yield ("Z4-wrong", Z4, en.identity(Z4), {"reduced": Status.HOLDS}, "")

    monkeypatch.setattr(harness, "_catalog_specs", bogus)
    with pytest.raises(CatalogError, match="reduced"):
        harness.load_catalog()
    assert len(harness.load_catalog(verify=False)) == 1


def test_catalog_entry_lookup():
    assert harness.catalog_entry("GF4-frobenius").ring.order == 4
    with pytest.raises(KeyError):
        harness.catalog_entry("nope")


@pytest.mark.parametrize("tid", harness.THEOREM_IDS)
def test_gf4_frobenius_confirms_everything(catalog, tid):
    r = harness.verify_theorem(tid, catalog["GF4-frobenius"])
    assert r.status == harness.CONFIRMED, r


def test_l31_on_dual_numbers(catalog):
    r = harness.verify_theorem("L3.1", catalog["dual-const"])
    assert r.status == harness.CONFIRMED


def test_t_baer_needs_a_baer_ring(catalog):
    r = harness.verify_theorem("T-BAER", catalog["Z4-identity"])
    assert r.status == harness.NOT_MET
    assert r.hypotheses


def test_identity_baseline_is_flagged(catalog):
    r = harness.verify_theorem("T2.3", catalog["Z2-identity"])
    assert "identity" in r.notes


def test_eval0_window_breaks_baer_transfer(catalog):
    e = catalog["Z2x-eval0"]
    r = harness.verify_theorem("T-BAER", e)
    assert r.status == harness.VIOLATION
    assert r.evidence and r.evidence["kind"] == "annihilator"
    assert harness.replay_report(r, e)


def test_replay_rejects_tampered_evidence(catalog):
    e = catalog["Z2x-eval0"]
    r = harness.verify_theorem("T-BAER", e)
    ev = dict(r.evidence)
    ev["q"] = [0] * len(ev["q"])  # zero is in every annihilator
    r.evidence = ev
    assert not harness.replay_report(r, e)


def test_confirmed_reports_do_not_replay(catalog):
    r = harness.verify_theorem("T-BAER", catalog["Z2-identity"])
    assert r.status == harness.CONFIRMED
    assert not harness.replay_report(r, catalog["Z2-identity"])


def test_unknown_theorem():
    with pytest.raises(KeyError):
        harness.verify_theorem("T9.9", harness.catalog_entry("Z2-identity"))


def test_truncation_caveat():
    rep = harness.truncation_caveat_check()
    assert rep.passed
    assert rep.baer_truncated.status is Status.FAILS
    assert "passed" in str(rep)


def test_search_reduced_not_rigid():
    hits = harness.search_counterexamples(["reduced"], "sigma_rigid", 4)
    assert hits
    for h in hits:
        assert replay(h.fails, h.ring, h.sigma)
        assert all(v.status is not Status.FAILS for v in h.holds)


def test_search_is_deterministic():
    a = [str(h) for h in harness.search_counterexamples(["reduced"], "sigma_reversible_right", 4)]
    b = [str(h) for h in harness.search_counterexamples(["reduced"], "sigma_reversible_right", 4)]
    assert a == b


def test_search_sigma_free_uses_identity_only():
    hits = harness.search_counterexamples(["symmetric"], "reduced", 8)
    assert {h.sigma.label for h in hits} == {"identity"}
    assert {h.ring.expr for h in hits} >= {"Zn(4)", "Zn(8)"}


def test_search_family_is_ordered():
    rs = harness.search_rings(16)
    assert [r.order for r in rs] == sorted(r.order for r in rs)
    assert len({r.expr for r in rs}) == len(rs)


def test_search_endomorphisms_start_with_identity():
    dual = rg.make_poly_quotient(rg.make_zn(2), "t^2")
    ss = harness.search_endomorphisms(dual)
    assert ss[0].label == "identity"
    assert ss[1].label == "const_term"
    assert len(set(ss)) == len(ss)


def test_separations_replay():
    found = harness.separation_witnesses()
    assert set(found) == set(harness.SEPARATIONS)
    for name, hits in found.items():
        assert hits, name
        h = hits[0]
        assert replay(h.fails, h.ring, h.sigma), name


def test_family_sampling_is_seeded():
    a, sampled = harness._family(12, (1, 2, 3), 40, seed=3)
    b, _ = harness._family(12, (1, 2, 3), 40, seed=3)
    assert a == b and sampled
    assert len(a) == 40 and len(set(a)) == 40
    full, sampled = harness._family(5, (1, 2), 100, seed=0)
    assert len(full) == 5 + 10 and not sampled


def test_bounds_show_up_in_reports(catalog):
    r = harness.verify_theorem("L3.2", catalog["dual-const"], Bounds(N=3))
    assert "N=3" in r.bounds_text()
