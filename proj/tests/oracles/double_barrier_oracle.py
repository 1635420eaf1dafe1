"""Independent reference for double knock-out prices.

Uses the eigenfunction (Fourier sine) expansion of the density of a drifted
Brownian motion killed at two flat barriers, integrated against the payoff
in closed form, at 40 significant digits. Shares no code or formula with
the image-series implementation under test.

Usage: python3 double_barrier_oracle.py
Prints one line per case: S K L U sigma T rd rf direction price
"""

import mpmath as mp

mp.mp.dps = 40


def koko(S, K, L, U, sigma, T, rd, rf, phi):
    S, K, L, U, sigma, T, rd, rf = map(mp.mpf, (S, K, L, U, sigma, T, rd, rf))
    a = mp.log(U / L)
    x0 = mp.log(S / L)
    nu = rd - rf - sigma**2 / 2
    c = nu / sigma**2
    # payoff region in x = log(S_T / L)
    k = mp.log(K / L)
    lo, hi = (max(k, 0), a) if phi > 0 else (0, min(k, a))
    if lo >= hi:
        return mp.mpf(0)
    pref = mp.e ** (-c * x0 - nu**2 * T / (2 * sigma**2)) * 2 / a

    def int_exp_sin(beta, w):
        # integral of e^{beta x} sin(w x) over [lo, hi]
        def F(x):
            return mp.e ** (beta * x) * (beta * mp.sin(w * x) - w * mp.cos(w * x)) / (beta**2 + w**2)
        return F(hi) - F(lo)

    total = mp.mpf(0)
    n = 1
    while True:
        w = n * mp.pi / a
        decay = mp.e ** (-sigma**2 * w**2 * T / 2)
        spot_part = L * int_exp_sin(c + 1, w)
        strike_part = K * int_exp_sin(c, w)
        term = decay * mp.sin(w * x0) * phi * (spot_part - strike_part)
        total += term
        if n > 20 and decay < mp.mpf(10) ** -45:
            break
        n += 1
    return mp.e ** (-rd * T) * pref * total


CASES = [
    (100, 100, 85, 115, 0.2, 0.5, 0.02, 0.01, +1),
    (100, 100, 85, 115, 0.2, 0.5, 0.02, 0.01, -1),
    (100, 100, 90, 112, 0.2, 0.5, 0.02, 0.01, -1),
    (100, 100, 90, 112, 0.2, 0.5, 0.02, 0.01, +1),
    (105, 100, 80, 130, 0.15, 1.0, 0.03, 0.05, +1),
    (95, 102, 70, 140, 0.3, 0.25, -0.01, 0.02, -1),
    (100, 110, 60, 180, 0.25, 2.0, 0.05, 0.0, +1),
    # strike outside the corridor (used by KIKO replication)
    (100, 80, 90, 115, 0.2, 0.5, 0.02, 0.01, +1),
    (100, 120, 90, 115, 0.2, 0.5, 0.02, 0.01, -1),
]

if __name__ == "__main__":
    for case in CASES:
        price = koko(*case)
        print(*case, mp.nstr(price, 20))
