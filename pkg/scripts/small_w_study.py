"""Error of the raw closed forms against quadrature as w/a shrinks.

The area and volume closed forms subtract nearly equal terms when w << a;
this prints how many digits they lose, which is what sets the switch-over
ratios to the power series in the library.

    python scripts/small_w_study.py
"""

import math

from eggcurve.area import area_egg, area_numeric_oracle, area_specialized
from eggcurve.curve import EggParams
from eggcurve.solid import volume_egg, volume_numeric_oracle


def raw_volume(p):
    a, b, w = p.a, p.b, p.w
    d = (a - w) * (a + w)
    return math.pi * b * b / (4 * w**3) * (d * d * math.log((a - w) / (a + w)) + 2 * a * w * (a * a + w * w))


def main():
    print(f"{'w/a':>8} {'area raw':>10} {'area lib':>10} {'vol raw':>10} {'vol lib':>10}")
    for k in range(1, 9):
        r = 10.0 ** (-k / 1.5)
        p = EggParams(1.0, 1.0, r)
        a_ref = area_numeric_oracle(p, tol=1e-14).value
        v_ref = volume_numeric_oracle(p, tol=1e-14).value
        rel = lambda x, y: abs(x - y) / y
        print(f"{r:8.1e} {rel(area_specialized(p).total, a_ref):10.1e} {rel(area_egg(p).total, a_ref):10.1e} "
              f"{rel(raw_volume(p), v_ref):10.1e} {rel(volume_egg(p), v_ref):10.1e}")


if __name__ == "__main__":
    main()
