#!/usr/bin/env python3
"""Independent oracle for the frozen constants in the C++ test suites.

Evaluates the rate expressions with 50-digit arithmetic (mpmath) and prints
each expected value to 17 significant digits, ready to paste into tests.
Run from anywhere: python3 compute_expected.py
"""
from mpmath import mp, mpf, log, floor

mp.dps = 50
LOG2 = log(2)


def log2(v):
    return log(v) / LOG2


def pair_bound(xi, xj, m, clamp=False):
    v = log2(xi / (xi + xj) + xi) / (2 * m)
    return max(mpf(0), v) if clamp else v


def show(name, v):
    print(f"{name} = {mp.nstr(mpf(v), 17)}")


n = None

print("# pair_rate_bound")
show("exact(1,1,m=1)", pair_bound(1, 1, 1, clamp=True))
show("weak(0.1,10,m=2)", pair_bound(mpf("0.1"), 10, 2))
show("weak_arg(0.1,10)", mpf("0.1") / (mpf("0.1") + 10) + mpf("0.1"))

print("# chain 1-2-3, profile (1,2,4), WEAK, m=2")
x = {1: mpf(1), 2: mpf(2), 3: mpf(4)}
r1 = pair_bound(x[1], x[2], 2)
r2 = min(pair_bound(x[2], x[1], 2), pair_bound(x[2], x[3], 2))
r3 = pair_bound(x[3], x[2], 2)
show("r1", r1)
show("r2", r2)
show("r3", r3)
show("common", min(r1, r2, r3))
show("sum", r1 + r2 + r3)

print("# star center 1, N=3, profile (1,2,4), WEAK, m=2")
s1 = min(pair_bound(x[1], x[2], 2), pair_bound(x[1], x[3], 2))
s2 = pair_bound(x[2], x[1], 2)
s3 = pair_bound(x[3], x[1], 2)
show("s1", s1)
show("s2", s2)
show("s3", s3)
show("sum", s1 + s2 + s3)

print("# d values / products")
show("d(0.25, n=3)", mpf(2) ** (4 * mpf("0.25")))
ds_chain = (x[1] * (1 + 1 / (x[1] + x[2]))
            * x[2] * (1 + 1 / (x[2] + x[3]))
            * x[3] * (1 + 1 / (x[3] + x[2])))
show("ds_chain_124", ds_chain)
ds_star = (x[1] * (1 + 1 / (x[1] + x[3]))
           * x[2] * (1 + 1 / (x[2] + x[1]))
           * x[3] * (1 + 1 / (x[3] + x[1])))
show("ds_star_124", ds_star)

print("# closed forms")
show("max_common_124", min(pair_bound(x[1], x[2], 2), pair_bound(x[2], x[3], 2)))
show("max_common_cc_N2_c1", log2(mpf(1) + mpf(1) / 2) / 2)  # (1/2)log2(c+1/2), c=1
show("max_sum_124", (log2(mpf("1.2")) + log2(mpf(8) / 3) + log2(mpf("4.8"))) / 4)
show("max_sum_11", log2(mpf("2.25")) / 2)
t1_low = mpf("0.1") + mpf("0.1") / (mpf("0.1") + 10)
show("eq16_t1(0.1,0.2,10)", t1_low)  # < 1, clamps
t2_low = mpf("0.2") / (mpf("0.2") + mpf("0.1")) + mpf("0.2")
t3_low = mpf(10) / (mpf(10) + mpf("0.1")) + mpf(10)
show("max_sum_low(0.1,0.2,10)",
     (log2(max(mpf(1), t1_low)) + log2(max(mpf(1), t2_low)) + log2(max(mpf(1), t3_low))) / 4)

print("# equivalence condition")
show("cond(0.3,10)", mpf("0.3") + mpf("0.3") / (mpf("0.3") + 10))
show("cond(0.62,0.62)", mpf("0.62") + mpf("0.62") / (mpf("0.62") + mpf("0.62")))

print("# gap bounds")
show("common_gap(N=4, x1=1, xN=10)", log2(mpf(21) / 2) / 6)
show("sum_gap(x1=1, xN=10)", log2(mpf(10) * 3 / 21) / 2)
show("common_gap(N=4, x=1e6)", log2((1 + 2 * mpf(10) ** 6) / (2 * mpf(10) ** 6)) / 6)

print("# symmetric profile per-user rate, all-equal SNR c, N users")
for c, nn in ((mpf(1), 3), (mpf(10) ** 6, 4)):
    show(f"rate(c={float(c):g},N={nn})", log2(c + mpf(1) / 2) / (2 * (nn - 1)))

print("# chi-square")
from scipy.stats import chi2
print("chi2_crit(0.99, df=15) =", repr(chi2.ppf(0.99, 15)))
