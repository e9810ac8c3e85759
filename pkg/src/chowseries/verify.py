"""Recompute the closed formulas for the standard example families.

Each check compares a computed quantity against a formula and records both.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .builtins import catalog, gen_blowup_pn, gen_hirzebruch, gen_pn, gen_product_pn_pm
from .cohomology import build_presentation, orbit_class_table
from .polyring import Polynomial
from .series import (
    WeightFunctional,
    equivariant_series,
    euler_from_classes,
    find_positive_functional,
    orbit_weights,
    pushforward_J,
)

EXAMPLES = ("pn", "product", "blowup", "hirzebruch", "zero-cycles", "equivariant")


@dataclass
class Check:
    example: str
    name: str
    expected: object
    actual: object
    ok: bool
    note: str = ""

    def to_dict(self):
        d = {"example": self.example, "check": self.name, "expected": self.expected,
             "actual": self.actual, "ok": self.ok}
        if self.note:
            d["note"] = self.note
        return d


def _grouped(table):
    return {c.coords: m for c, m in table.grouped.items()}


def _as_multiset(d):
    return sorted((list(k), v) for k, v in d.items())


def _mono(nvars, powers):
    e = [0] * nvars
    for i, k in powers.items():
        e[i] += k
    return Polynomial.monomial(e)


def check_pn(max_n=5, bound=6):
    out = []
    for n in range(1, max_n + 1):
        pres = build_presentation(gen_pn(n))
        for p in range(n + 1):
            grouped = _grouped(orbit_class_table(pres, p))
            N = comb(n + 1, p)
            out.append(Check("pn", f"P^{n} codim {p}: closed form", {(1,): N}, grouped, grouped == {(1,): N}))
            expansion = euler_from_classes(grouped).expand(WeightFunctional((1,)), bound)
            actual = [expansion[(d,)] for d in range(bound + 1)]
            expected = [comb(N + d - 1, d) for d in range(bound + 1)]
            out.append(Check("pn", f"P^{n} codim {p}: coefficients d=0..{bound}", expected, actual, actual == expected))
            # dimension q = n - p cycles: exponent C(n+1, q+1)
            q = n - p
            out.append(Check("pn", f"P^{n} dimension {q}: exponent C(n+1,q+1)", comb(n + 1, q + 1), N,
                             comb(n + 1, q + 1) == N))
    return out


def check_product(pairs=((1, 1), (2, 1), (1, 2), (2, 2))):
    out = []
    for n, m in pairs:
        fan = gen_product_pn_pm(n, m)
        pres = build_presentation(fan)
        K = fan.nrays
        a, b = n + m, n + m + 1
        for p in range(n + m + 1):
            expected = Counter()
            for k in range(min(p, n) + 1):
                l = p - k
                if l > m:
                    continue
                cls = pres.class_of(_mono(K, {a: k, b: l}), p)
                expected[cls.coords] += comb(n + 1, k) * comb(m + 1, l)
            grouped = _grouped(orbit_class_table(pres, p))
            out.append(Check("product", f"P^{n} x P^{m} codim {p}", _as_multiset(expected),
                             _as_multiset(grouped), dict(expected) == grouped))
    return out


def check_blowup(dims=(2, 3)):
    out = []
    for n in dims:
        fan = gen_blowup_pn(n)
        pres = build_presentation(fan)
        K = fan.nrays
        last, new = n, n + 1  # e_{n+1}, e_{n+2} = -e_1
        for p in range(n):
            expected = Counter()
            t1 = pres.class_of(_mono(K, {last: p}), p)
            expected[t1.coords] += comb(n, p)
            if p >= 1:
                t2 = pres.class_of(_mono(K, {new: 1, last: p - 1}), p)
                expected[(t1 + t2).coords] += comb(n, p - 1)
                expected[t2.coords] += comb(n, p - 1)
            grouped = _grouped(orbit_class_table(pres, p))
            out.append(Check("blowup", f"blow-up of P^{n} codim {p}", _as_multiset(expected),
                             _as_multiset(grouped), dict(expected) == grouped))
        grouped = _grouped(orbit_class_table(pres, n))
        point = pres.class_of(_mono(K, {new: 1, last: n - 1}), n)
        expected = {point.coords: 2 * n}
        out.append(Check(
            "blowup", f"blow-up of P^{n} codim {n}: orbit count", _as_multiset(expected), _as_multiset(grouped),
            grouped == expected and len(fan.max_cones) == 2 * n,
            note=f"closed formula exponent C(n+2,n) = {comb(n + 2, n)} disagrees with the {2 * n} fixed points",
        ))
    return out


def check_hirzebruch(values=(1, 2, 3)):
    out = []
    for a in values:
        pres = build_presentation(gen_hirzebruch(a))
        t3 = pres.class_of(_mono(4, {2: 1}), 1)
        t4 = pres.class_of(_mono(4, {3: 1}), 1)
        e1 = {t3.coords: 2, t4.coords: 1, (t4 + t3.scale(-a)).coords: 1}
        g1 = _grouped(orbit_class_table(pres, 1))
        out.append(Check("hirzebruch", f"a={a} codim 1", _as_multiset(e1), _as_multiset(g1), g1 == e1))
        g2 = _grouped(orbit_class_table(pres, 2))
        out.append(Check("hirzebruch", f"a={a} codim 2", [[[1], 4]], _as_multiset(g2), g2 == {(1,): 4}))
        g0 = _grouped(orbit_class_table(pres, 0))
        out.append(Check("hirzebruch", f"a={a} codim 0", [[[1], 1]], _as_multiset(g0), g0 == {(1,): 1}))
    return out


def check_zero_cycles():
    out = []
    for name, fan in catalog():
        pres = build_presentation(fan)
        grouped = _grouped(orbit_class_table(pres, fan.dim))
        chi = len(fan.max_cones)
        out.append(Check("zero-cycles", f"{name}: codim {fan.dim}", [[[1], chi]], _as_multiset(grouped),
                         grouped == {(1,): chi}))
    return out


def check_equivariant(bound=4, max_dim=3):
    out = []
    for name, fan in catalog(max_dim):
        pres = build_presentation(fan)
        for p in range(fan.dim + 1):
            table = orbit_class_table(pres, p)
            classes = table.classes
            weight = find_positive_functional(classes)
            expected = euler_from_classes(table.grouped).expand(weight, bound)
            eq = equivariant_series(len(classes)).expand(orbit_weights(classes, weight), bound)
            pushed = pushforward_J(eq, classes, weight, bound)
            zero_one = all(c in (0, 1) for c in eq.support.values())
            out.append(Check(
                "equivariant", f"{name} codim {p}: J(E^T) = E at D={bound}",
                len(expected.support), len(pushed.support), pushed == expected and zero_one,
                note="" if zero_one else "equivariant coefficient outside {0,1}",
            ))
    return out


CHECKS = {
    "pn": check_pn,
    "product": check_product,
    "blowup": check_blowup,
    "hirzebruch": check_hirzebruch,
    "zero-cycles": check_zero_cycles,
    "equivariant": check_equivariant,
}


def run_checks(only=None):
    names = EXAMPLES if only is None else [only]
    out = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown example {name!r}; expected one of {list(EXAMPLES)}")
        out.extend(CHECKS[name]())
    return out
