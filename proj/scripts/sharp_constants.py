"""Reference decimals for the sharp constants and a few frozen test values.

Requires mpmath. Prints 30 significant digits; the values in
core/include/ellip/constants.hpp and the regression constants in tests/
were produced by this script.
"""
import mpmath as mp

mp.mp.dps = 50


def K(r):
    return mp.ellipk(r * r)


def E(r):
    return mp.ellipe(r * r)


def comp(r):
    return mp.sqrt(1 - r * r)


def thm11(r, q):
    rc = comp(r)
    return mp.pi / 4 * (mp.sqrt(q + (1 - q) * rc**2) + mp.sqrt((1 - q) + q * rc**2))


def thm12(r, t, p):
    rc = comp(r)
    return (2 ** (p - 2) * mp.pi * (1 + rc) ** (1 - 2 * p)
            * ((t + (1 - t) * rc) ** 2 + ((1 - t) + t * rc) ** 2) ** p)


def alzer_qiu(r):
    a = mp.mpf(1) / 2 - mp.sqrt(2) / 4
    b = mp.mpf(1) / 2 + mp.sqrt(2) / 4
    return mp.pi / 4 * (mp.sqrt(1 - a * r * r) + mp.sqrt(1 - b * r * r))


def vuorinen(r):
    return mp.pi / 2 * ((1 + comp(r) ** mp.mpf(1.5)) / 2) ** (mp.mpf(2) / 3)


def t_lower(p):
    return mp.mpf(1) / 2 + mp.sqrt(1 / (4 * p)) / 2


def t_upper(p):
    return mp.mpf(1) / 2 + mp.sqrt((4 / mp.pi) ** (1 / p) - 1) / 2


def largest_root(f, lo, hi):
    # f changes sign once on [lo, hi]; bisection to full working precision.
    flo = f(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def show(name, value):
    print(f"{name:<28} {mp.nstr(value, 30)}")


def main():
    beta = mp.mpf(1) / 2 - 2 * mp.sqrt(2 * (mp.pi**2 - 8)) / mp.pi**2
    alpha = mp.mpf(1) / 2 - mp.sqrt(2) / 4
    lam = mp.mpf(1) / 2 + mp.sqrt(2) / 8
    mu = mp.mpf(1) / 2 + mp.sqrt((4 / mp.pi) ** 2 - 1) / 2
    show("beta_star", beta)
    show("alpha_star", alpha)
    show("lambda_star", lam)
    show("mu_star", mu)
    show("alzer_beta", mp.mpf(1) / 2 + mp.sqrt(2) / 4)
    for p in (mp.mpf(1) / 2, 1, 2):
        show(f"t_lower(p={float(p)})", t_lower(p))
        show(f"t_upper(p={float(p)})", t_upper(p))

    show("K(0.5)", K(mp.mpf("0.5")))
    show("E(0.5)", E(mp.mpf("0.5")))
    show("limit alzer-qiu r->1", alzer_qiu(1))
    show("limit vuorinen r->1", mp.mpf(2) ** (-mp.mpf(5) / 3) * mp.pi)

    r = 1 - mp.mpf("1e-6")
    k, e = K(r), E(r)
    d = e - comp(r) ** 2 * k
    show("g(1-1e-6)", ((k - e) * d + e * ((k - e) - d)) / d**2)

    cor31_upper = lambda x: thm12(x, mu, mp.mpf(1) / 2)
    cor31_lower = lambda x: thm12(x, lam, 2)
    root1 = largest_root(lambda x: cor31_upper(x) - alzer_qiu(x), mp.mpf("0.9"), mp.mpf("0.999"))
    root2 = largest_root(lambda x: thm11(x, beta) - vuorinen(x), mp.mpf("0.9"), mp.mpf("0.999"))
    show("delta1", 1 - root1)
    show("delta2", 1 - root2)

    for x in ("0.5", "0.99", "0.999"):
        x = mp.mpf(x)
        lowers = [vuorinen(x), cor31_lower(x), thm11(x, beta)]
        lowers += [thm12(x, t_lower(p), p) for p in (mp.mpf(1) / 2, 1, 2)]
        uppers = [mp.pi / 2 * mp.sqrt((1 + comp(x) ** 2) / 2), alzer_qiu(x),
                  cor31_upper(x), thm11(x, alpha)]
        uppers += [thm12(x, t_upper(p), p) for p in (mp.mpf(1) / 2, 1, 2)]
        show(f"best width r={mp.nstr(x, 4)}", min(uppers) - max(lowers))
    show("cor31 width r=0.5", cor31_upper(mp.mpf("0.5")) - cor31_lower(mp.mpf("0.5")))


if __name__ == "__main__":
    main()
