#!/usr/bin/env python3
"""Z_2[x] with f -> f(0): a Baer-type transfer failure, rechecked by hand.

Take y the series variable, A = {y} and q = x.  Then y * x = sigma(x) y = 0,
so x lies in the right annihilator of A.  The only idempotents of the window
are 0 and 1, and neither generates an annihilator containing x but not 1.
"""

from skewlab import endomorphism as en
from skewlab import harness
from skewlab import rings as rg
from skewlab import structure as st
from skewlab.properties import decide
from skewlab.skew import SkewPoly, shadow


def main():
    w = rg.make_bounded_poly(rg.make_zn(2), 2)
    sigma = en.eval_at_zero(w)
    wide = shadow(sigma)
    x = wide.ring.encode((0, 1) + (0,) * (wide.ring.width - 2))
    y = SkewPoly(wide, [0, 1])
    q = SkewPoly(wide, [x])
    print(f"ring {w.name}, sigma={sigma.label}")
    print(f"y * x = {y * q}")
    print(f"idempotents: {[str(e) for e in st.idempotents(w)]}")
    print(f"baer(R) decided: {decide('baer', w, sigma).status}")

    entry = harness.catalog_entry("Z2x-eval0")
    r = harness.verify_theorem("T-BAER", entry)
    print(f"\n{r}\n  hypotheses: {r.hypotheses}\n  conclusions: {r.conclusions}")
    print(f"  evidence replays: {harness.replay_report(r, entry)}")


if __name__ == "__main__":
    main()
