"""Closed-form value distributions, codeword counts and weight distributions.

Every theorem-level predictor is a list of *cases*.  A case is one class of
(alpha, beta) pairs with alpha != 0 that share the count
N = |{x in D : c_{alpha,beta}(x) = 0}|, so it contributes ``size`` codewords
of weight ``L - N`` where L is the code length.  The two alpha = 0 cases
(weight 0 once, weight L for the p^t - 1 nonzero constants) are added by
:func:`_assemble`, which also merges coinciding weights and checks that the
total mass is p^{t (n/t + 1)}.

All arithmetic is exact (:class:`fractions.Fraction`, then checked to be
integral).  Sign bookkeeping for epsilon and theta goes through
:class:`~bentcodes.spectral.QuarticUnit`; the combinations that enter the
formulas are always real, and :func:`_real` refuses anything else.

Notation used throughout (q = p^m, Q = p^t):

* ``P  = p^{n-m}``,  ``P2 = p^{n-2m}``,  ``Pt = p^{n-m-t}``
* ``R  = p^{(n-m)/2}``, ``r3 = p^{(n-3m)/2}``, ``rt = p^{(n-m)/2-t}``
* ``E  = eps p^{n/2-m}``; ``Dv = P - E`` (= |D_{F,i}| for i != 0 under II)
* ``A0 = |D_{F*,0}| - 1`` and ``A1 = p^n - |D_{F*,0}|``: the numbers of
  alpha != 0 with F*(alpha) = 0 and F*(alpha) != 0
* ``u  = theta (-1)^{m-1} eps^m`` and ``u' = theta^{-1} (-1)^{m-1} eps^m``
* ``e1 = eta_m(-1)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Literal

import numpy as np

from .codes import SubsetSpec, WeightDist
from .errors import ParamViolation
from .galois import field_make, tables, tower, trace_table
from .spectral import QuarticUnit, eps_of_prime

TheoremId = Literal[
    "T1", "T3i", "T3ii", "T4", "C1", "T5i", "T5ii", "T6i", "T6ii", "T7S", "T7N", "T8i", "T8ii", "T8iii"
]
THEOREM_IDS: tuple[str, ...] = (
    "T1", "T3i", "T3ii", "T4", "C1", "T5i", "T5ii", "T6i", "T6ii", "T7S", "T7N", "T8i", "T8ii", "T8iii"
)
CONDITION_OF_THEOREM = {
    "T1": "I",
    **{k: "II" for k in ("T3i", "T3ii", "T4", "C1", "T5i", "T5ii")},
    **{k: "III" for k in ("T6i", "T6ii", "T7S", "T7N", "T8i", "T8ii", "T8iii")},
}
# upper bounds on the number of distinct nonzero weights
MAX_WEIGHTS = {
    "T1": 5, "T3i": 5, "T4": 5, "C1": 5, "T5i": 5, "T3ii": 4,
    "T5ii": 6, "T6i": 6, "T6ii": 6, "T7S": 6, "T7N": 6, "T8i": 6, "T8ii": 6, "T8iii": 6,
}

Num = Fraction | int


# ---------------------------------------------------------------------------
# small exact helpers
# ---------------------------------------------------------------------------

def _pp(p: int, e: Num) -> Fraction:
    """p**e for a non-negative integral exponent given as int or Fraction."""
    e = Fraction(e)
    if e.denominator != 1 or e < 0:
        raise ParamViolation(f"exponent {e} is not a non-negative integer")
    return Fraction(p) ** int(e)


def _real(z: QuarticUnit) -> int:
    if z.imaginary:
        raise ParamViolation(f"sign combination {z} is not real")
    return z.sign


def _int(x: Num, what: str = "value") -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ParamViolation(f"{what} {x} is not an integer")
    return int(x)


def _as_unit(x: QuarticUnit | int | str) -> QuarticUnit:
    if isinstance(x, QuarticUnit):
        return x
    if isinstance(x, str):
        return QuarticUnit.parse(x)
    if x in (1, -1):
        return QuarticUnit(int(x), False)
    raise ParamViolation(f"cannot read {x!r} as a sign")


def _eta_sign(q: int) -> int:
    """eta_m(-1) for odd q."""
    return 1 if q % 4 == 1 else -1


def u_signs(p: int, m: int, theta: QuarticUnit) -> tuple[int, int]:
    """(u, u') = (theta, theta^{-1}) * (-1)^{m-1} eps^m, both real."""
    base = (eps_of_prime(p) ** m).scale((-1) ** (m - 1))
    return _real(theta * base), _real(theta.inverse() * base)


# ---------------------------------------------------------------------------
# value distributions
# ---------------------------------------------------------------------------

def value_dist(
    condition: str,
    p: int,
    m: int,
    n: int,
    unit: QuarticUnit | int | str,
    *,
    f0: int = 0,
    dual: bool = False,
) -> dict[int, int]:
    """|D_{F,i}| for every codomain index i (or |D_{F*,i}| when ``dual``).

    ``unit`` is epsilon for Conditions I and II and theta for Condition III.
    ``f0`` is the index of F(0) (Condition I only; F(0) = 0 otherwise).
    Condition III needs the field F_{p^m} for eta_m, which is built here.
    """
    unit = _as_unit(unit)
    q = p**m
    if n % 2 and condition != "III":
        raise ParamViolation("n must be even")
    if condition in ("I", "II"):
        if 2 * m > n:
            raise ParamViolation("need m <= n/2")
        eps = _real(unit.inverse() if dual else unit)
        zero = f0 if condition == "I" else 0
        base = _pp(p, n - m)
        E = eps * _pp(p, Fraction(n, 2) - m)
        out = {i: _int(base + E * (q * (i == zero) - 1)) for i in range(q)}
    elif condition == "III":
        if p == 2 or (n - m) % 2:
            raise ParamViolation("Condition III needs odd p and n - m even")
        u, u_ = u_signs(p, m, unit)
        s = u_ if dual else u
        T = tables(field_make(p, m))
        eta_neg = T.eta(T.neg(np.arange(q)))
        R = _pp(p, Fraction(n - m, 2))
        out = {i: _int(_pp(p, n - m) + s * int(eta_neg[i]) * R) for i in range(q)}
    else:
        raise ParamViolation(f"unknown condition {condition!r}")
    if sum(out.values()) != p**n or min(out.values()) < 0:
        raise ParamViolation("parameters give an inconsistent value distribution")
    return out


# ---------------------------------------------------------------------------
# codeword counts N_{I,alpha,beta}
# ---------------------------------------------------------------------------

def count_N_I(
    p: int, m: int, n: int, t: int, eps: int,
    *, I_size: int, fstar_in_I: bool, f0_in_I: bool, beta_zero: bool,
) -> int:
    """N_{I,alpha,beta} under Condition I (alpha != 0)."""
    eps = _real(_as_unit(eps))
    h = eps * _pp(p, Fraction(n, 2) - t)
    val = (
        h * int(fstar_in_I) * (p**t * int(beta_zero) - 1)
        + h * int(f0_in_I)
        - eps * _pp(p, Fraction(n, 2) - m) * I_size * int(beta_zero)
        + _pp(p, n - m - t) * I_size
    )
    return _int(val, "N")


def _root_values(p: int, m: int, t: int, fstar: int, a: int, l: int) -> tuple[np.ndarray, Any, np.ndarray]:
    """Tr_t^m(y F* - a y^{1-l}) for every y in F_{p^m}^*, as F_{p^t} indices."""
    Fm = field_make(p, m)
    T = tables(Fm)
    tr = trace_table(tower(field_make(p, t), Fm))
    ys = np.arange(1, Fm.q, dtype=np.int64)
    arg = T.sub(T.mul(ys, fstar), T.mul(a, T.pow(ys, (1 - l) % (Fm.q - 1))))
    return tr[arg], T, ys


def count_N_II(
    p: int, m: int, n: int, t: int, eps: int, l: int, *, a: int, fstar: int, beta: int
) -> int:
    """N_{a,alpha,beta} under Condition II; ``a``, ``fstar`` are F_{p^m} indices, ``beta`` an F_{p^t} index."""
    eps = _real(_as_unit(eps))
    vals, _, _ = _root_values(p, m, t, fstar, a, l)
    roots = int(np.count_nonzero(vals == beta))
    val = (
        eps * _pp(p, Fraction(n, 2) - m) * roots
        + eps * _pp(p, Fraction(n, 2) - t) * (int(a == 0) - 1)
        + _pp(p, n - m - t)
    )
    return _int(val, "N")


def count_N_III(
    p: int, m: int, n: int, t: int, theta: QuarticUnit | str, l: int, *, a: int, fstar: int, beta: int
) -> int:
    """N_{a,alpha,beta} under Condition III (indices as in :func:`count_N_II`)."""
    theta = _as_unit(theta)
    if m % t:
        raise ParamViolation("t must divide m")
    u, _ = u_signs(p, m, theta)
    Fm = field_make(p, m)
    T = tables(Fm)
    tail = _pp(p, n - m - t)
    if a == 0:
        eta_f = int(T.eta(fstar))
        return _int(u * eta_f * _pp(p, Fraction(n - m, 2) - t) * (p**t * int(beta == 0) - 1) + tail, "N")
    vals, T, ys = _root_values(p, m, t, fstar, a, l)
    eta_y = T.eta(ys)
    mid = u * int(T.eta(T.neg(a))) * _pp(p, Fraction(n - m, 2) - t)
    if (m // t) % 2 == 0:
        s = int(eta_y[vals == beta].sum())
        head = _real(theta) * _pp(p, Fraction(n, 2) - m) * s
    else:
        Ft = field_make(p, t)
        Tt = tables(Ft)
        diff = Tt.sub(vals, beta)
        s = int((eta_y * Tt.eta(diff)).sum())
        coeff = theta * (eps_of_prime(p) ** t).scale((-1) ** (t - 1))
        head = _real(coeff) * _pp(p, Fraction(n - t, 2) - m) * s
    return _int(head + mid + tail, "N")


def count_N(condition: str, **params: Any) -> int:
    """Dispatch to :func:`count_N_I`, :func:`count_N_II` or :func:`count_N_III`."""
    fn = {"I": count_N_I, "II": count_N_II, "III": count_N_III}.get(condition)
    if fn is None:
        raise ParamViolation(f"unknown condition {condition!r}")
    return fn(**params)


# ---------------------------------------------------------------------------
# theorem selectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremSelector:
    """Which weight-distribution statement to evaluate, with its parameters.

    ``unit`` is epsilon (Conditions I, II) or theta (Condition III).  Field
    parameters ``a`` and ``gamma`` are only needed through their quadratic
    characters, which are passed directly as ``eta_neg_a`` (eta_m(-a)) and
    ``eta_gamma``.  ``delta`` is delta_I(F(0)) for T1.
    """

    id: str
    p: int
    t: int
    m: int
    n: int
    unit: QuarticUnit = field(default_factory=QuarticUnit)
    l: int | None = None
    I_size: int | None = None
    delta: int = 0
    eta_neg_a: int | None = None
    eta_gamma: int | None = None
    b: int | None = None
    j: int | None = None
    jp: int | None = None

    @property
    def condition(self) -> str:
        return CONDITION_OF_THEOREM[self.id]

    def to_dict(self) -> dict[str, Any]:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__ if getattr(self, k) is not None}
        d["unit"] = str(self.unit)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "TheoremSelector":
        d = dict(d)
        if "unit" in d:
            d["unit"] = _as_unit(d["unit"])
        return cls(**d)

    def validate(self) -> None:
        if self.id not in THEOREM_IDS:
            raise ParamViolation(f"unknown theorem id {self.id!r}")
        p, t, m, n = self.p, self.t, self.m, self.n
        cond = self.condition

        def need(ok: bool, clause: str) -> None:
            if not ok:
                raise ParamViolation(f"{self.id}: {clause}")

        need(m >= 1 and t >= 1 and n >= 1, "degrees must be positive")
        if cond == "I":
            need(n % 2 == 0 and 2 * t <= n and 2 * m < n, "Condition I needs 2 | n, t <= n/2, m < n/2")
            need(p != 2 or m >= 2, "m >= 2 when p = 2")
            need(self.I_size is not None and 1 <= self.I_size < p**m, "|I| must be in [1, p^m)")
            need(self.delta in (0, 1), "delta must be 0 or 1")
            _real(self.unit)
            return
        need(m % t == 0, "t | m")
        q = p**m
        if cond == "II":
            need(n % 2 == 0 and 2 * m < n, "Condition II needs 2 | n, m < n/2")
            need(p != 2 or (m >= 2 and 2 * (m + t) < n), "p = 2 needs m >= 2 and m + t < n/2")
            _real(self.unit)
        else:
            need(p != 2, "Condition III needs odd p")
            need((n - m) % 2 == 0 and 3 * m <= n, "Condition III needs 2 | (n - m), 3m <= n")
            need((n, p**t) != (3, 3), "(n, p^t) != (3, 3)")
            u_signs(p, m, self.unit)
        if self.id in ("T3ii", "T5i", "T5ii", "T6ii", "T8i", "T8ii", "T8iii"):
            need(t == m, "t = m")
            need(self.l is None or self.l % (q - 1) == 2 % (q - 1), "l = 2")
        if self.id in ("T3ii", "T6ii"):
            need(p == 2 or self.eta_neg_a in (1, -1), "eta_m(-a) must be +-1 (a != 0)")
        if self.id in ("T4", "C1", "T5i", "T5ii", "T8i", "T8ii", "T8iii"):
            need(self.b is not None and self.b >= 1 and (q - 1) % self.b == 0, "b | p^m - 1")
        if self.id == "T4":
            need(self.l is not None and self.l % self.b == 0, "b | l")
        if self.id == "C1":
            need(p != 2 and self.b == 2 and self.l is not None and self.l % 2 == 0, "odd p, b = 2, 2 | l")
        if self.id in ("T5i", "T5ii"):
            j, jp, b = self.j, self.jp, self.b
            need(j is not None and jp is not None and m == 2 * j * jp, "m = 2 j j'")
            need(b >= 2 and (p**j + 1) % b == 0, "b >= 2, b | p^j + 1")
            need(all((p**i + 1) % b for i in range(1, j)), "j minimal")
            need((b % 2 == 1) == (self.id == "T5i"), "T5i is b odd, T5ii is b even")
        if self.id in ("T8i", "T8ii"):
            need(self.b % 2 == 0, "b even")
            need(self.eta_gamma == (1 if self.id == "T8i" else -1), "gamma in S (T8i) or N (T8ii)")
        if self.id == "T8iii":
            need(self.b % 2 == 1, "b odd")


# ---------------------------------------------------------------------------
# assembling cases into a weight distribution
# ---------------------------------------------------------------------------

def _assemble(sel: TheoremSelector, L: Num, cases: Iterable[tuple[Num, Num]]) -> WeightDist:
    """Merge (N, size) cases for alpha != 0 with the alpha = 0 codewords."""
    Q = sel.p**sel.t
    Lf = Fraction(L)
    counts: dict[int, int] = {0: 1}
    counts[_int(Lf, "length")] = counts.get(_int(Lf), 0) + Q - 1
    for N, size in cases:
        size_i = _int(size, "multiplicity")
        if size_i < 0:
            raise ParamViolation("negative multiplicity")
        if size_i == 0:
            continue
        w = _int(Lf - Fraction(N), "weight")
        if w < 0:
            raise ParamViolation("negative weight")
        counts[w] = counts.get(w, 0) + size_i
    total = sum(counts.values())
    expect = Q ** (sel.n // sel.t + 1)
    if total != expect:
        raise ParamViolation(f"{sel.id}: multiplicities sum to {total}, expected {expect}")
    return WeightDist.from_counts(counts, source="theorem")


def _common(sel: TheoremSelector) -> dict[str, Fraction]:
    p, t, m, n = sel.p, sel.t, sel.m, sel.n
    h = Fraction(1, 2)
    return {
        "q": Fraction(p**m),
        "Q": Fraction(p**t),
        "pn": Fraction(p**n),
        "P": _pp(p, n - m),
        "P2": _pp(p, n - 2 * m) if n >= 2 * m else Fraction(0),
        "Pt": _pp(p, n - m - t),
        "R": _pp(p, h * (n - m)) if (n - m) % 2 == 0 else Fraction(0),
        "r3": _pp(p, h * (n - 3 * m)) if (n - 3 * m) % 2 == 0 and n >= 3 * m else Fraction(0),
        "rt": _pp(p, h * (n - m) - t) if (n - m) % 2 == 0 else Fraction(0),
    }


def _cond2(sel: TheoremSelector) -> tuple[dict[str, Fraction], int, Fraction, Fraction, Fraction, Fraction]:
    c = _common(sel)
    eps = _real(sel.unit)
    E = eps * _pp(sel.p, Fraction(sel.n, 2) - sel.m)
    Dv = c["P"] - E
    A0 = c["P"] + E * (c["q"] - 1) - 1
    A1 = Dv * (c["q"] - 1)
    return c, eps, E, Dv, A0, A1


# ---------------------------------------------------------------------------
# Condition I
# ---------------------------------------------------------------------------

def _t1(sel: TheoremSelector) -> WeightDist:
    p, t, m, n = sel.p, sel.t, sel.m, sel.n
    eps = _real(sel.unit)
    I, d = sel.I_size, sel.delta
    Q = p**t
    Em = eps * _pp(p, Fraction(n, 2) - m)
    Et = eps * _pp(p, Fraction(n, 2) - t)
    En = eps * _pp(p, Fraction(n, 2))
    L = (_pp(p, n - m) - Em) * I + En * d
    # alpha != 0 with F*(alpha) in I, and its complement
    A = (_pp(p, n - m) - Em) * I + (En - 1) * d
    B = p**n - 1 - A
    Pt = _pp(p, n - m - t)

    def N(in_I: int, beta_zero: int) -> Fraction:
        return Et * in_I * (Q * beta_zero - 1) + Et * d - Em * I * beta_zero + Pt * I

    return _assemble(sel, L, [
        (N(1, 1), A), (N(1, 0), (Q - 1) * A), (N(0, 1), B), (N(0, 0), (Q - 1) * B),
    ])


# ---------------------------------------------------------------------------
# Condition II
# ---------------------------------------------------------------------------

def _t3i(sel: TheoremSelector) -> WeightDist:
    c, eps, E, Dv, A0, A1 = _cond2(sel)
    Q, q, Pt = c["Q"], c["q"], c["Pt"]
    L = A0 + 1
    return _assemble(sel, L, [
        # F*(alpha) = 0: y-count is (p^m - 1) for beta = 0 and 0 otherwise
        (E * (q - 1) + Pt, A0),
        (Pt, A0 * (Q - 1)),
        # F*(alpha) != 0: the trace is balanced over y
        (E * (q / Q - 1) + Pt, A1),
        (E * q / Q + Pt, A1 * (Q - 1)),
    ])


def _t3ii(sel: TheoremSelector) -> WeightDist:
    c, eps, E, Dv, A0, A1 = _cond2(sel)
    q, P2 = c["q"], c["P2"]
    p = sel.p
    L = Dv
    base = P2 - E  # delta_0(a) - 1 = -1, p^{n/2-t} = p^{n/2-m}
    cases: list[tuple[Fraction, Fraction]] = [
        # F*(alpha) = 0: roots of -a y^{-1} = beta; one root iff beta != 0
        (base, A0),
        (E + base, A0 * (q - 1)),
    ]
    if p == 2:
        # y F* + a y^{-1} = beta: y^2 = a / F* has one root at beta = 0, and
        # the remaining q - 2 roots come in pairs over the nonzero beta
        cases += [(E + base, A1), (2 * E + base, A1 * (q / 2 - 1)), (base, A1 * q / 2)]
    else:
        # y^2 F* - beta y - a = 0; classes by eta(-a F*), which fixes how
        # many beta give a double root
        half = (q - 1) / 2
        for z in (2, 0):
            if z == 2:
                double, two, none = 2, (q - 3) / 2, (q - 1) / 2
            else:
                double, two, none = 0, (q - 1) / 2, (q + 1) / 2
            cases += [(E + base, half * Dv * double), (2 * E + base, half * Dv * two), (base, half * Dv * none)]
    return _assemble(sel, L, cases)


def _t4(sel: TheoremSelector) -> WeightDist:
    c, eps, E, Dv, A0, A1 = _cond2(sel)
    p, t, n = sel.p, sel.t, sel.n
    Q, q, Pt, P = c["Q"], c["q"], c["Pt"], c["P"]
    k = (q - 1) / sel.b
    Et = eps * _pp(p, Fraction(n, 2) - t)
    L = Dv * k
    C = Dv * k  # alpha with F*(alpha) in gamma H_b
    Bc = c["pn"] - 1 - C
    w = [
        ((Pt * k - Et) * (Q - 1), C),
        ((P - Pt - E) * k + Et, (Q - 1) * C),
        (Pt * (Q - 1) * k, Bc),
        ((P - Pt - E) * k, (Q - 1) * Bc),
    ]
    return _assemble(sel, L, [(L - wt, size) for wt, size in w])


def _t5(sel: TheoremSelector) -> WeightDist:
    c, eps, E, Dv, A0, A1 = _cond2(sel)
    p, b = sel.p, sel.b
    q, P2 = c["q"], c["P2"]
    k = (q - 1) / b
    h = (-1) ** sel.jp * _pp(p, Fraction(sel.m, 2))  # (-1)^{j'} p^{m/2}
    L = Dv * k

    def N(T: Fraction) -> Fraction:
        return E * T + (P2 - E) * k

    if b % 2:
        hit = -h + (h + q - 2) / b
        miss = (h + q - 2) / b
        cases = [
            (N(Fraction(0)), A0),
            (N(k), A0 * (q - 1) + A1),
            (N(hit), A1 * k),
            (N(miss), A1 * (q - 1 - k)),
        ]
    else:
        hit = -h + ((q - 1) + 2 * (h - 1)) / b
        miss = ((q - 1) + 2 * (h - 1)) / b
        half = A1 / 2
        cases = [
            (N(Fraction(0)), A0 + half),
            (N(k), A0 * (q - 1) + half * (q - 1)),
            (N(2 * k), half),
            (N(hit), half * 2 * k),
            (N(miss), half * (q - 1 - 2 * k)),
        ]
    return _assemble(sel, L, cases)


# ---------------------------------------------------------------------------
# Condition III
# ---------------------------------------------------------------------------

def _cond3(sel: TheoremSelector) -> tuple[dict[str, Fraction], int, int, int]:
    c = _common(sel)
    u, u_ = u_signs(sel.p, sel.m, sel.unit)
    return c, u, u_, _eta_sign(sel.p**sel.m)


def _t6i(sel: TheoremSelector) -> WeightDist:
    c, u, u_, e1 = _cond3(sel)
    q, Q, P, R, Pt, rt = c["q"], c["Q"], c["P"], c["R"], c["Pt"], c["rt"]
    cases: list[tuple[Fraction, Fraction]] = [(Pt, (P - 1) * Q)]
    for s in (1, -1):
        size = (q - 1) / 2 * (P + u_ * e1 * s * R)
        cases += [(u * s * rt * (Q - 1) + Pt, size), (-u * s * rt + Pt, size * (Q - 1))]
    return _assemble(sel, P, cases)


def _t6ii(sel: TheoremSelector) -> WeightDist:
    c, u, u_, e1 = _cond3(sel)
    q, P, P2, R, r3 = c["q"], c["P"], c["P2"], c["R"], c["r3"]
    ea = sel.eta_neg_a
    L = P + u * ea * R
    cases: list[tuple[Fraction, Fraction]] = [(u * ea * R + P2, P - 1), (P2, (P - 1) * (q - 1))]
    for s in (1, -1):
        size = (q - 1) / 2 * (P + u_ * e1 * s * R)
        z = 1 + s * ea  # beta with a vanishing discriminant
        cases += [(u * s * r3 * (q - 1) + P2, size * z), (-u * s * r3 + P2, size * (q - z))]
    return _assemble(sel, L, cases)


def _t7(sel: TheoremSelector, flip: int) -> WeightDist:
    c, u, u_, e1 = _cond3(sel)
    u, u_ = flip * u, flip * u_
    q, Q, P, R, Pt, rt = c["q"], c["Q"], c["P"], c["R"], c["Pt"], c["rt"]
    k2 = (q - 1) / 2
    A0 = P - 1
    CS = k2 * (P + u_ * R)
    CN = k2 * (P - u_ * R)
    L = (P + u * e1 * R) * k2
    return _assemble(sel, L, [
        ((u * e1 * R + Pt) * k2, A0),
        (Pt * k2, A0 * (Q - 1)),
        (Pt * k2 + u * e1 * rt * (k2 - Q + 1), CS),
        (Pt * k2 + u * e1 * rt * (q + 1) / 2, CS * (Q - 1)),
        ((Pt + u * e1 * rt) * k2, CN * Q),
    ])


def _t8(sel: TheoremSelector) -> WeightDist:
    c, u, u_, e1 = _cond3(sel)
    q, P, P2, R, r3 = c["q"], c["P"], c["P2"], c["R"], c["r3"]
    b = sel.b
    k = (q - 1) / b
    g = sel.eta_gamma if b % 2 == 0 else 0  # eta is constant on gamma H_b only for b even
    A0 = P - 1
    L = (P + g * u * e1 * R) * k
    cases: list[tuple[Fraction, Fraction]] = [
        ((g * u * e1 * R + P2) * k, A0),
        (P2 * k, A0 * (q - 1)),
    ]
    for s in (1, -1):  # s = eta_m(-F*(alpha))
        size = (q - 1) / 2 * (P + s * u_ * R)
        eta_f = s * e1  # eta_m(F*(alpha))
        if b % 2:
            hits = k
        else:
            hits = 2 * k if s * g == 1 else Fraction(0)
        cases += [
            (u * eta_f * r3 * (q - k) + P2 * k, size * hits),
            ((-u * eta_f * r3 + P2) * k, size * (q - hits)),
        ]
    return _assemble(sel, L, cases)


_DISPATCH = {
    "T1": _t1,
    "T3i": _t3i,
    "T3ii": _t3ii,
    "T4": _t4,
    "C1": _t4,
    "T5i": _t5,
    "T5ii": _t5,
    "T6i": _t6i,
    "T6ii": _t6ii,
    "T7S": lambda s: _t7(s, 1),
    "T7N": lambda s: _t7(s, -1),
    "T8i": _t8,
    "T8ii": _t8,
    "T8iii": _t8,
}


def weights_thm(sel: TheoremSelector) -> WeightDist:
    """The theorem's complete weight distribution for C_{D_{F,I}} (``source="theorem"``)."""
    sel.validate()
    return _DISPATCH[sel.id](sel)


# ---------------------------------------------------------------------------
# selectors for concrete instances
# ---------------------------------------------------------------------------

def _minimal_j(p: int, b: int, limit: int) -> int | None:
    for j in range(1, limit + 1):
        if (p**j + 1) % b == 0:
            return j
    return None


def selectors_for(
    condition: str,
    p: int,
    t: int,
    m: int,
    n: int,
    unit: QuarticUnit,
    l: int | None,
    I: SubsetSpec,
    *,
    f0: int = 0,
    I_size: int | None = None,
) -> list[TheoremSelector]:
    """Every theorem whose hypotheses cover (condition, I); possibly empty.

    ``f0`` is the codomain index of F(0) (Condition I) and ``I_size`` the
    resolved size of I when it is not implied by the variant.
    """
    out: list[TheoremSelector] = []
    base = dict(p=p, t=t, m=m, n=n, unit=unit, l=l)

    def add(id_: str, **kw: Any) -> None:
        sel = TheoremSelector(id_, **base, **kw)
        try:
            sel.validate()
        except ParamViolation:
            return
        out.append(sel)

    if condition == "I":
        if I_size is None:
            raise ParamViolation("Condition I selectors need |I|")
        if I.variant == "first":
            delta = int(1 <= f0 <= I.count)
        elif I.variant == "zero":
            delta = int(f0 == 0)
        else:
            raise ParamViolation("Condition I selectors need I given as zero or first:k")
        add("T1", I_size=I_size, delta=delta)
        return out

    Fm = field_make(p, m)
    T = tables(Fm)
    q = Fm.q
    is_l2 = l is not None and l % (q - 1) == 2 % (q - 1)

    def coeff(x: Any) -> int:
        from .catalog import resolve_coeff

        return resolve_coeff(Fm, x)

    v = I.variant
    if condition == "II":
        if v == "zero":
            add("T3i")
        elif v == "single":
            a = coeff(I.a)
            if a and is_l2:
                add("T3ii", eta_neg_a=int(T.eta(T.neg(a))) if p > 2 else None)
            if a == 0:
                add("T3i")
        elif v in ("squares", "nonsquares"):
            add("C1", b=2)
            add("T4", b=2)
        elif v == "coset":
            b = int(I.b)
            add("T4", b=b)
            if p > 2 and b == 2:
                add("C1", b=2)
            if is_l2 and m % 2 == 0 and b >= 2:
                j = _minimal_j(p, b, m // 2)
                if j is not None and (m // 2) % j == 0:
                    add("T5i" if b % 2 else "T5ii", b=b, j=j, jp=m // (2 * j))
    elif condition == "III":
        if v == "zero":
            add("T6i")
        elif v == "single":
            a = coeff(I.a)
            if a == 0:
                add("T6i")
            elif is_l2:
                add("T6ii", eta_neg_a=int(T.eta(T.neg(a))))
        elif v in ("squares", "nonsquares"):
            add("T7S" if v == "squares" else "T7N")
            if is_l2:
                add("T8i" if v == "squares" else "T8ii", b=2, eta_gamma=1 if v == "squares" else -1)
        elif v == "coset":
            b = int(I.b)
            g = coeff(I.gamma if I.gamma is not None else 1)
            eg = int(T.eta(g))
            if b == 2:
                add("T7S" if eg == 1 else "T7N")
            if is_l2:
                if b % 2:
                    add("T8iii", b=b, eta_gamma=eg)
                else:
                    add("T8i" if eg == 1 else "T8ii", b=b, eta_gamma=eg)
    else:
        raise ParamViolation(f"unknown condition {condition!r}")
    return out
