#!/usr/bin/env python3
"""Re-derive the frozen values in data/expected.txt with oracle.py and compare."""
import sys

import oracle


def load(path):
    table = {}
    for line in open(path):
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("version"):
            continue
        key, value = (s.strip() for s in line.split("=", 1))
        table[key] = [int(x) for x in value.split()]
    return table


def main(path):
    want = load(path)
    got = {}
    for name, f in [("fermat", oracle.fermat())] + [(f"seed:{s}", oracle.random_quartic(s)) for s in (1, 2, 3)]:
        got[f"dims-vxd.dims[{name}]"] = ([oracle.quotient_dim([f], d) for d in range(1, 11)], want["dims-vxd.dims"])
        got[f"euler-dims.dims[{name}]"] = ([oracle.euler_section_dim(f, k) for k in (0, 4, 5)], want["euler-dims.dims"])
        got[f"hom-m-m4-dim.dim[{name}]"] = ([oracle.hom_m_m4(f)], want["hom-m-m4-dim.dim"])
        got[f"homF-const-dim.dim[{name}]"] = ([oracle.hom_f_o([f], 5)], want["homF-const-dim.dim"])
    got["homF-const-dim.p3_cross_check"] = ([oracle.hom_f_o([], 5), oracle.hom_f_o([], 1)],
                                            want["homF-const-dim.p3_cross_check"])
    bad = 0
    for key, (computed, expected) in got.items():
        ok = computed == expected
        bad += not ok
        print(f"{'ok  ' if ok else 'BAD '} {key}: oracle {computed}, frozen {expected}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
