"""Derives the pinned box length h/L above which the box-normalised mean
number agrees with the continuum value to 1e-3 relative (N=800, aL/c^2=0.02,
Lambda L = 1).

The box sum runs over k = 2 pi n / h with weight 2 pi / h; both the mean and
the norm are summed directly in mpmath, the continuum value comes from
oracles.spectrum_logs. The threshold is the smallest scanned h from which on
every scanned h' >= h stays within tolerance.
Run: python3 tests/oracles/box_threshold.py
"""
import mpmath as mp

from oracles import log_abs2, log_n, sigma, spectrum_logs

N, G, LAM, TOL = 800, mp.mpf("0.02"), 1, mp.mpf("1e-3")


def box_log_mean(h):
    s = sigma(G)
    c = N / s
    dk = 2 * mp.pi / h
    lo = int(mp.floor(LAM / dk)) + 1
    hi = int(mp.ceil((c + 40 / s) / dk))
    ks = [dk * n for n in range(lo, hi + 1) if dk * n > LAM]
    la = [log_abs2(k, N, s) for k in ks]
    peak = max(la)
    norm = mp.fsum(mp.exp(v - peak) for v in la)
    lm = [v + log_n(k, G) for v, k in zip(la, ks)]
    pm = max(lm)
    mean = mp.fsum(mp.exp(v - pm) for v in lm)
    return pm + mp.log(mean) - peak - mp.log(norm)


def main():
    cont = spectrum_logs(N, G, LAM)["mean"]
    scan = [mp.mpf(i) / 4 for i in range(4, 81)] + [mp.mpf(v) for v in (25, 50, 100, 200, 400)]
    rel = [(h, abs(mp.expm1(box_log_mean(h) - cont))) for h in scan]
    threshold = None
    for i, (h, _) in enumerate(rel):
        if all(r <= TOL for _, r in rel[i:]):
            threshold = h
            break
    for h, r in rel:
        if h <= 8 or h >= 25:
            print(f"h={mp.nstr(h, 6):>6}  rel={mp.nstr(r, 4)}")
    print("continuum log_mean =", mp.nstr(cont, 17))
    print("pinned threshold h/L =", mp.nstr(threshold, 6))


if __name__ == "__main__":
    main()
