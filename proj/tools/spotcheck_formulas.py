#!/usr/bin/env python3
"""Independent spot-check of the zone formulas (RD 34.21.122-87, appendix 3).

Evaluates the standard's formulas in their native metre form, without going
through data/formula_table.txt or the C++ engine. The printed values are the
ones frozen into tests/test_zonecalc.cpp and the acceptance suite.
"""


def rod_single(h, zone):
    if zone == "B":
        return 0.92 * h, 1.5 * h, lambda hx: 1.5 * (h - hx / 0.92)
    k = 1.1 - 0.002 * h
    return 0.85 * h, k * h, lambda hx: k * (h - hx / 0.85)


def wire_single(h, zone):
    if zone == "B":
        return 0.92 * h, 1.7 * h, lambda hx: 1.7 * (h - hx / 0.92)
    k = 1.35 - 0.0025 * h
    return 0.85 * h, k * h, lambda hx: k * (h - hx / 0.85)


def rod_pair(h, L, zone):
    h0, r0, _ = rod_single(h, zone)
    if zone == "B":
        if L <= h:
            return h0, r0
        if L <= 6 * h:
            return h0 - 0.14 * (L - h), r0
        return 0.0, 0.0
    if L <= h:
        return h0, r0
    if L <= 2 * h:
        return h0 - (0.17 + 3e-4 * h) * (L - h), r0
    if L <= 4 * h:
        return h0 - (0.17 + 3e-4 * h) * (L - h), r0 * (1 - 0.2 * (L - 2 * h) / h)
    return 0.0, 0.0


def wire_pair(h, L, zone):
    h0, r0, _ = wire_single(h, zone)
    if zone == "B":
        if L <= h:
            return h0, r0
        if L <= 6 * h:
            return h0 - 0.12 * (L - h), r0
        return 0.0, 0.0
    if L <= h:
        return h0, r0
    if L <= 2 * h:
        return h0 - (0.14 + 5e-4 * h) * (L - h), r0
    if L <= 4 * h:
        return h0 - (0.14 + 5e-4 * h) * (L - h), r0 * (1 - 0.2 * (L - 2 * h) / h)
    return 0.0, 0.0


def rcx(hc, rc, hx):
    if hc <= 0 or hx >= hc:
        return 0.0
    return rc * (hc - hx) / hc


if __name__ == "__main__":
    for zone in ("B", "A"):
        h0, r0, rx = rod_single(10.0, zone)
        print(f"rod h=10 zone {zone}: h0={h0:.10f} r0={r0:.10f} rx(5)={rx(5.0):.10f}")
    for zone in ("B", "A"):
        h0, r0, rx = wire_single(10.0, zone)
        print(f"wire h=10 zone {zone}: h0={h0:.10f} r0={r0:.10f} rx(5)={rx(5.0):.10f}")
    for L in (8.0, 20.0, 100.0):
        print(f"rod pair h=10 L={L} B: hc, rc = {rod_pair(10.0, L, 'B')}")
    for L in (15.0, 30.0):
        print(f"rod pair h=10 L={L} A: hc, rc = {rod_pair(10.0, L, 'A')}")
    for L in (15.0, 30.0):
        print(f"wire pair h=10 L={L} A: hc, rc = {wire_pair(10.0, L, 'A')}")
    print(f"wire pair h=10 L=20 B: {wire_pair(10.0, 20.0, 'B')}")
    print(f"rcx(7.8, 15, 3.9) = {rcx(7.8, 15.0, 3.9)}")
    # Zone B rod h=20, section at 7.973 m -> plan radius used by drafting goldens
    _, _, rx20 = rod_single(20.0, "B")
    print(f"rod h=20 B rx(7.973) = {rx20(7.973):.10f}")
    print(f"rod h=16.667 B r0 = {1.5 * 16.667:.10f}")
    # Two h=20 rods 47.883 m apart, section at 7.973 m -> min-width golden
    hc20, rc20 = rod_pair(20.0, 47.883, "B")
    print(f"rod pair h=20 L=47.883 B: hc={hc20:.10f} rcx(7.973)={rcx(hc20, rc20, 7.973):.10f}")
