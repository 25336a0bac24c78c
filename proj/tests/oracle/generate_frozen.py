"""Regenerates tests/frozen_values.hpp with mpmath at 30 digits.

The values are frozen in the header so the C++ tests do not depend on Python.
Run from the repository root: python3 tests/oracle/generate_frozen.py
"""
import mpmath as mp

mp.mp.dps = 30
I = mp.mpc(0, 1)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=0), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=0))


def line(a, b, f):
    d = b - a
    return mp.quad(lambda t: f(a + t * d) * d, [0, 1])


# ODE coefficient ratios for the default parameters of every catalog entry.
def ratios(eq):
    if eq == "legendre":
        return lambda z: -2 * z / (1 - z**2), lambda z: 2 / (1 - z**2)
    if eq == "legendre_assoc":
        return lambda z: -2 * z / (1 - z**2), lambda z: (2 - 1 / (1 - z**2)) / (1 - z**2)
    if eq == "bessel":
        return lambda z: 1 / z, lambda z: 1
    if eq == "chebyshev1":
        return lambda z: -z / (1 - z**2), lambda z: 1 / (1 - z**2)
    if eq == "chebyshev2":
        return lambda z: -z / (1 - z**2), lambda z: 3 / (1 - z**2)
    if eq == "laguerre":
        return lambda z: (1 - z) / z, lambda z: 1 / z
    if eq == "laguerre_assoc":
        return lambda z: (2 - z) / z, lambda z: 2 / z
    if eq == "hermite":
        return lambda z: -2 * z, lambda z: -2
    if eq == "gegenbauer":
        return lambda z: -2 / (1 - z**2), lambda z: 2 / (1 - z**2)
    if eq == "jacobi":
        return lambda z: (1 - 5 * z) / (1 - z**2), lambda z: 5 / (1 - z**2)
    raise KeyError(eq)


BASES = {"bessel": 1, "laguerre": 1, "laguerre_assoc": 1}
POINTS_0 = [mp.mpc(0.5, 0.5), mp.mpc(-0.7, 0.2), mp.mpc(0.3, -1.5)]
POINTS_1 = [mp.mpc(2, 1), mp.mpc(0.5, -0.5), mp.mpc(-1, 2)]
ORDER = ["legendre", "legendre_assoc", "bessel", "chebyshev1", "chebyshev2",
         "laguerre", "laguerre_assoc", "hermite", "gegenbauer", "jacobi"]


def transport(eq, z):
    """E = exp(-int q/p), K = int (r/p) exp(int q/p), both from the base point along the segment."""
    qp, rp = ratios(eq)
    z0 = mp.mpc(BASES.get(eq, 0))
    phase = lambda w: line(z0, w, qp)
    E = mp.exp(-phase(z))
    K = line(z0, z, lambda w: rp(w) * mp.exp(phase(w)))
    return E, K


out = []
out.append("#pragma once")
out.append("// Generated by tests/oracle/generate_frozen.py (mpmath, 30 digits). Do not edit.")
out.append("")
out.append("#include <complex>")
out.append("")
out.append("namespace frozen {")
out.append("")
out.append("using C = std::complex<double>;")
out.append("struct Pair { C z, value; };")
out.append("")


def table(name, fn, points):
    out.append("inline const Pair %s[] = {" % name)
    for p in points:
        out.append("    {%s, %s}," % (c(p), c(fn(mp.mpc(p)))))
    out.append("};")
    out.append("")


table("kEi", mp.ei, [2, mp.mpc(1, 1), mp.mpc(-3, 0.5), mp.mpc(-3, -0.5), mp.mpc(0, 10), mp.mpc(0.05, 0.02), 20,
                     mp.mpc(-15, 1), mp.mpc(35, -4), mp.mpc(0.5, -60)])
table("kLi2", lambda z: mp.polylog(2, z), [0.5, mp.mpc(0.5, 0.5), mp.mpc(2, 1), -3, mp.mpc(0.9, -0.3), mp.mpc(3, -2),
                                           mp.mpc(-0.2, 4), mp.mpc(1, 1e-3)])
table("kErf", mp.erf, [mp.mpc(1, 1), mp.mpc(0.3, -2), mp.mpc(3, 0.5), mp.mpc(-0.1, 0.1), mp.mpc(5, 5)])
table("kArcsin", mp.asin, [mp.mpc(2, 0.1), mp.mpc(0, 0.5), mp.mpc(-3, -1), mp.mpc(0.3, 0)])

out.append("struct Transport { const char* eq; C base; C z; C E; C K; };")
out.append("// E = exp(-int q/p), K = int (r/p) exp(int q/p) along the segment from the base point.")
out.append("inline const Transport kTransport[] = {")
for eq in ORDER:
    z0 = BASES.get(eq, 0)
    for p in (POINTS_1 if z0 == 1 else POINTS_0):
        E, K = transport(eq, p)
        out.append('    {"%s", %s, %s, %s, %s},' % (eq, c(z0), c(p), c(E), c(K)))
out.append("};")
out.append("")

# Laguerre alpha = 1, lambda = 1, c1 = 1, c2 = 0: eta^2 = e^z/z, chi = e^{-z}.
xi0 = mp.mpc(1, 1)
out.append("struct Surface { C xi; double F[3]; };")
out.append("// Laguerre surface from 1+i by direct quadrature of the J integrals.")
out.append("inline const Surface kLaguerreSurface[] = {")
for xi in [mp.mpc(2, 1), mp.mpc(-1, 0.5), mp.mpc(0.3, 2.5), mp.mpc(-2.5, 0.1)]:
    j1 = line(xi0, xi, lambda w: mp.exp(w) / w)
    j2 = line(xi0, xi, lambda w: 1 / w)
    j3 = line(xi0, xi, lambda w: mp.exp(-w) / w)
    F = [mp.re(j1 - j3) / 2, -mp.im(j1 + j3) / 2, mp.re(j2)]
    out.append("    {%s, {%s}}," % (c(xi), ", ".join(mp.nstr(f, 20, min_fixed=-1, max_fixed=0) for f in F)))
out.append("};")
out.append("")
out.append("} // namespace frozen")

with open("tests/frozen_values.hpp", "w") as fh:
    fh.write("\n".join(out) + "\n")
