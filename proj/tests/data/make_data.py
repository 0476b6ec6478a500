#!/usr/bin/env python3
"""Regenerates the SKJF fixtures in this directory (fixed seeds)."""
import random
from collections import defaultdict
from math import isqrt
from pathlib import Path

HERE = Path(__file__).resolve().parent


def support(n_max):
    for n in range(n_max + 1):
        R = isqrt(4 * n)
        for r in range(-R, R + 1):
            yield n, r


def mul(a, b, n_max):
    out = defaultdict(int)
    for (n1, r1), c1 in a.items():
        for (n2, r2), c2 in b.items():
            if n1 + n2 <= n_max:
                out[(n1 + n2, r1 + r2)] += c1 * c2
    return {k: v for k, v in out.items() if v}


def phi10(n_max):
    # q (zeta - 2 + 1/zeta) prod (1 - q^n)^20 (1 - q^n zeta)^2 (1 - q^n / zeta)^2
    f = {(1, 1): 1, (1, 0): -2, (1, -1): 1}
    for n in range(1, n_max + 1):
        for _ in range(20):
            f = mul(f, {(0, 0): 1, (n, 0): -1}, n_max)
        for _ in range(2):
            f = mul(f, {(0, 0): 1, (n, 1): -1}, n_max)
            f = mul(f, {(0, 0): 1, (n, -1): -1}, n_max)
    return f


def write(name, header, rows):
    lines = ["SKJF 1", header] + [f"{n} {r} {v}" for n, r, v in rows]
    (HERE / name).write_text("\n".join(lines) + "\n")


def main():
    n_max = 24
    f = phi10(n_max)
    write("phi10_level4.skjf",
          f"k=10 m=1 N=4 chi=table:0,zeta^0/1,0,zeta^0/1 nmax={n_max} cusp=1",
          [(n, r, f"{f.get((n, r), 0)}/1") for n, r in support(n_max)])

    rng = random.Random(20240611)
    rows = []
    for n, r in support(n_max):
        v = 0 if (n, r) == (0, 0) else rng.randint(-9, 9)
        rows.append((n, r, f"{v}/{rng.choice([1, 1, 2, 3])}"))
    write("random_level4_chi4.skjf",
          f"k=11 m=1 N=4 chi=table:0,zeta^0/1,0,zeta^1/2 nmax={n_max} cusp=0", rows)

    rng = random.Random(777)
    rows = []
    for n, r in support(n_max):
        a, b = (0, 0) if (n, r) == (0, 0) else (rng.randint(-5, 5), rng.randint(-5, 5))
        rows.append((n, r, f"{a}/1,{b}/1,0/1,0/1"))
    write("random_level5_order4.skjf",
          f"k=3 m=1 N=5 chi=table:0,zeta^0/1,zeta^1/4,zeta^3/4,zeta^1/2 nmax={n_max} cusp=0", rows)


if __name__ == "__main__":
    main()
