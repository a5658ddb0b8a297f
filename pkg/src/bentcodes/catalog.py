"""Explicit families of vectorial dual-bent functions.

Each family is addressed by the tag of its defining formula:

======  ==========================================================  =========
tag     F                                                           condition
======  ==========================================================  =========
EQ3     B(alpha x1 x2^{-1})                                         I
EQ4     B(Tr_r^{n'}(alpha x1 x2^{-u}))                              I
EQ5     B1(alpha x1 x2^{-1}) + B2(Tr_r^{n''}(beta x3 x4^{-u}))      I
EQ7     Tr_m^{n'}(alpha x1 x2^u)                                    II
EQ8     Tr_m^n(alpha x^2)                                           II
EQ9     sum_i alpha_i x_i^2 over F_{p^m}, s even                    II
EQ10    Tr_m^{n/2}(alpha x^{p^{n/2}+1})                             II
EQ11    H(Tr_m^{n''}(gamma y2^2); x) + Tr_m^{n''}(beta y1 L(y2))    II
EQ13    Tr_m^n(alpha x^2), n/m odd                                  III
EQ14    sum_i alpha_i x_i^2 over F_{p^m}, s odd                     III
EQ15    as EQ11 with n'/m odd                                       III
======  ==========================================================  =========

Inverses follow the ``0^{-1} = 0`` convention.  ``H(i; x)`` selects
``Tr_m^{n'}(alpha_k x^2)`` by whether ``i`` is zero, a nonzero square or a
non-square.

Coefficients are given symbolically and resolved in the field they live in:
an integer ``c`` is the prime-field scalar, ``"w^k"`` is the k-th power of the
field's fixed primitive element and a list is a raw coefficient tuple.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from .errors import NonPermutationL, ParamViolation
from .galois import FieldDesc, field_make, space_make, tables, tower, trace_table, embed_table
from .spectral import PrimeVectorSpace, QuarticUnit, VecFn, eps_of_prime

FAMILIES = ("EQ3", "EQ4", "EQ5", "EQ7", "EQ8", "EQ9", "EQ10", "EQ11", "EQ13", "EQ14", "EQ15")
CONDITION_OF = {
    "EQ3": "I", "EQ4": "I", "EQ5": "I",
    "EQ7": "II", "EQ8": "II", "EQ9": "II", "EQ10": "II", "EQ11": "II",
    "EQ13": "III", "EQ14": "III", "EQ15": "III",
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    p: int
    t: int
    m: int
    n: int | None = None  # single-field domains (EQ8, EQ10, EQ13)
    n1: int | None = None  # n'
    n2: int | None = None  # n''
    r: int | None = None
    s: int | None = None
    u: int | None = None
    coeffs: dict[str, Any] = field(default_factory=dict)
    balanced: dict[str, Any] | None = None  # None = default projection; else {"B": [...], "B1": [...], "B2": [...]}
    L: list[Any] | None = None  # coefficients a_i of L(y) = sum a_i y^{p^{m i}}; None = identity
    name: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None and v != {}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "FamilySpec":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(d) - known
        if extra:
            raise ParamViolation(f"unknown FamilySpec fields: {sorted(extra)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        return cls.from_dict(json.loads(text))

    def replace(self, **kw: Any) -> "FamilySpec":
        d = asdict(self)
        d.update(kw)
        return FamilySpec(**d)


@dataclass(frozen=True)
class Expected:
    """Condition metadata predicted by a family's closed-form statement."""

    condition: str
    unit: QuarticUnit  # epsilon for I/II, theta for III
    l: int | None  # exponent mod p^m - 1 (0 for Condition I)
    d: int | None

    def to_dict(self) -> dict[str, Any]:
        return {"condition": self.condition, "unit": str(self.unit), "l": self.l, "d": self.d}


# ---------------------------------------------------------------------------
# coefficient and balanced-map helpers
# ---------------------------------------------------------------------------

def resolve_coeff(F: FieldDesc, spec: Any) -> int:
    """Integer index of a symbolic coefficient in F."""
    if isinstance(spec, bool):
        raise ParamViolation("boolean is not a field coefficient")
    if isinstance(spec, int):
        return spec % F.p
    if isinstance(spec, str):
        text = spec.replace(" ", "")
        if text == "w":
            text = "w^1"
        if text.startswith("w^"):
            k = int(text[2:])
            return int(tables(F).exp[k % (F.q - 1)])
        return int(text) % F.p
    if isinstance(spec, (list, tuple)):
        return F.elem(spec).index
    raise ParamViolation(f"cannot interpret coefficient {spec!r}")


def balanced_default(k: int, m_prime: int, p: int) -> VecFn:
    """Projection of F_{p^k} onto its first m' base-p coordinates, as a map to F_p^{m'}."""
    if not 1 <= m_prime <= k:
        raise ParamViolation(f"balanced map needs 1 <= m' <= k, got m'={m_prime}, k={k}")
    S = space_make(p, (k,))
    idx = np.arange(p**k, dtype=np.int64)
    return VecFn(S, PrimeVectorSpace(p, m_prime), idx % p**m_prime)


def _balanced_table(spec: FamilySpec, key: str, k: int) -> np.ndarray:
    tables_spec = spec.balanced or {}
    if key in tables_spec:
        B = np.asarray(tables_spec[key], dtype=np.int64)
        q, qm = spec.p**k, spec.p**spec.m
        if B.shape != (q,) or B.min() < 0 or B.max() >= qm:
            raise ParamViolation(f"{key}: explicit table must map {q} points into [0, {qm})")
        counts = np.bincount(B, minlength=qm)
        if not (counts == q // qm).all():
            raise ParamViolation(f"{key}: explicit table is not balanced")
        return B
    return balanced_default(k, spec.m, spec.p).values


def _check(ok: bool, family: str, clause: str) -> None:
    if not ok:
        raise ParamViolation(f"{family}: {clause}")


def _u0_exists(p: int, r: int, u: int) -> bool:
    mod = p**r - 1
    return any((u - p**u0) % mod == 0 for u0 in range(r))


def _nonzero(F: FieldDesc, idx: int, family: str, name: str) -> int:
    _check(idx != 0, family, f"{name} must be nonzero")
    return idx


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(spec: FamilySpec) -> None:
    """Raise ParamViolation naming the first violated clause."""
    f, p, t, m = spec.family, spec.p, spec.t, spec.m
    _check(f in FAMILIES, f, f"unknown family; expected one of {FAMILIES}")
    _check(min(t, m) >= 1, f, "t and m are positive")
    if f == "EQ3":
        n1 = spec.n1
        _check(n1 is not None, f, "n' is given")
        _check(m < n1, f, "m < n'")
        _check(n1 % t == 0, f, "t | n'")
        _check(p != 2 or m >= 2, f, "m >= 2 if p = 2")
    elif f == "EQ4":
        n1, r, u = spec.n1, spec.r, spec.u
        _check(None not in (n1, r, u), f, "n', r and u are given")
        _check(n1 % r == 0, f, "r | n'")
        _check(m <= r, f, "m <= r")
        _check(m != n1, f, "m != n'")
        _check(n1 % t == 0, f, "t | n'")
        _check(math.gcd(u, p**n1 - 1) == 1, f, "gcd(u, p^{n'} - 1) = 1")
        _check((u - 1) % (p**t - 1) == 0, f, "u = 1 (mod p^t - 1)")
        _check(_u0_exists(p, r, u), f, "u = p^{u0} (mod p^r - 1) for some 0 <= u0 < r")
        _check(p != 2 or m >= 2, f, "m >= 2 if p = 2")
    elif f == "EQ5":
        n1, n2, r, u = spec.n1, spec.n2, spec.r, spec.u
        _check(None not in (n1, n2, r, u), f, "n', n'', r and u are given")
        _check(m <= n1, f, "m <= n'")
        _check(m <= r, f, "m <= r")
        _check(n2 % r == 0, f, "r | n''")
        _check(n1 % t == 0 and n2 % t == 0, f, "t | n' and t | n''")
        _check(math.gcd(u, p**n2 - 1) == 1, f, "gcd(u, p^{n''} - 1) = 1")
        _check((u - 1) % (p**t - 1) == 0, f, "u = 1 (mod p^t - 1)")
        _check(_u0_exists(p, r, u), f, "u = p^{u0} (mod p^r - 1) for some 0 <= u0 < r")
        _check(p != 2 or m >= 2, f, "m >= 2 if p = 2")
    elif f == "EQ7":
        n1, u = spec.n1, spec.u
        _check(None not in (n1, u), f, "n' and u are given")
        _check(m % t == 0, f, "t | m")
        _check(n1 % m == 0, f, "m | n'")
        _check(m != n1, f, "m != n'")
        _check(math.gcd(u, p**n1 - 1) == 1, f, "gcd(u, p^{n'} - 1) = 1")
        _check(p != 2 or (m >= 2 and m + t < n1), f, "m >= 2 and m + t < n' when p = 2")
    elif f in ("EQ8", "EQ10"):
        n = spec.n
        _check(n is not None, f, "n is given")
        _check(p % 2 == 1, f, "p is odd")
        _check(m % t == 0, f, "t | m")
        _check(n % (2 * m) == 0, f, "2m | n")
        _check(2 * m != n, f, "2m != n")
    elif f == "EQ13":
        n = spec.n
        _check(n is not None, f, "n is given")
        _check(p % 2 == 1, f, "p is odd")
        _check(m % t == 0, f, "t | m")
        _check(n % m == 0, f, "m | n")
        _check(n // m >= 3 and (n // m) % 2 == 1, f, "n/m >= 3 is odd")
        _check((p**t, n) != (3, 3), f, "(p^t, n) != (3, 3)")
    elif f in ("EQ9", "EQ14"):
        s = spec.s
        _check(s is not None, f, "s is given")
        _check(p % 2 == 1, f, "p is odd")
        _check(m % t == 0, f, "t | m")
        if f == "EQ9":
            _check(s % 2 == 0 and s != 2, f, "2 | s and s != 2")
        else:
            _check(s >= 3 and s % 2 == 1, f, "s >= 3 is odd")
            _check((p**t, m * s) != (3, 3), f, "(p^t, ms) != (3, 3)")
    elif f in ("EQ11", "EQ15"):
        n1, n2 = spec.n1, spec.n2
        _check(None not in (n1, n2), f, "n' and n'' are given")
        _check(p % 2 == 1, f, "p is odd")
        _check(m % t == 0, f, "t | m")
        _check(n2 % m == 0, f, "m | n''")
        if f == "EQ11":
            _check(n1 % (2 * m) == 0, f, "2m | n'")
        else:
            _check(n1 % m == 0 and (n1 // m) % 2 == 1, f, "m | n' and n'/m is odd")
            _check((p**t, n1 + 2 * n2) != (3, 3), f, "(p^t, n' + 2n'') != (3, 3)")


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _alphas(spec: FamilySpec, F: FieldDesc, count: int) -> list[int]:
    raw = spec.coeffs.get("alphas")
    if raw is None:
        raw = [1] * count
    _check(len(raw) == count, spec.family, f"{count} alpha coefficients are given")
    return [_nonzero(F, resolve_coeff(F, a), spec.family, "alpha_i") for a in raw]


def _eta(F: FieldDesc, idx: int) -> int:
    return int(tables(F).eta(np.array([idx]))[0])


def _trace_to(sub: FieldDesc, sup: FieldDesc) -> np.ndarray:
    return trace_table(tower(sub, sup))


def _L_values(spec: FamilySpec, F: FieldDesc) -> np.ndarray:
    """Table of L(y) = sum a_i y^{p^{m i}} on F, checked to be a permutation."""
    T = tables(F)
    y = np.arange(F.q, dtype=np.int64)
    coeffs = spec.L if spec.L is not None else [1]
    out = np.zeros(F.q, dtype=np.int64)
    for i, a in enumerate(coeffs):
        ai = resolve_coeff(F, a)
        out = T.add(out, T.mul(ai, T.pow(y, spec.p ** (spec.m * i))))
    if np.unique(out).size != F.q:
        raise NonPermutationL("L does not permute the field")
    return out


def _selector_family(spec: FamilySpec) -> tuple[VecFn, list[int]]:
    p, m = spec.p, spec.m
    Fx, Fy, Fm = field_make(p, spec.n1), field_make(p, spec.n2), field_make(p, m)
    Tx, Ty = tables(Fx), tables(Fy)
    S = space_make(p, (spec.n1, spec.n2, spec.n2))
    pidx = S.part_indices()
    x, y1, y2 = pidx[:, 0], pidx[:, 1], pidx[:, 2]
    alphas = _alphas(spec, Fx, 3)
    classes = {_eta(Fx, a) for a in alphas}
    _check(len(classes) == 1, spec.family, "alpha_1, alpha_2, alpha_3 are all squares or all non-squares")
    beta = _nonzero(Fy, resolve_coeff(Fy, spec.coeffs.get("beta", 1)), spec.family, "beta")
    gamma = _nonzero(Fy, resolve_coeff(Fy, spec.coeffs.get("gamma", 1)), spec.family, "gamma")
    tr_x, tr_y = _trace_to(Fm, Fx), _trace_to(Fm, Fy)
    sel = tr_y[Ty.mul(gamma, Ty.mul(y2, y2))]
    cls = tables(Fm).eta(sel)
    x2 = Tx.mul(x, x)
    H = np.select(
        [cls == 0, cls == 1, cls == -1],
        [tr_x[Tx.mul(alphas[0], x2)], tr_x[Tx.mul(alphas[1], x2)], tr_x[Tx.mul(alphas[2], x2)]],
    )
    Lv = _L_values(spec, Fy)
    G = tr_y[Ty.mul(beta, Ty.mul(y1, Lv[y2]))]
    return VecFn(S, Fm, tables(Fm).add(H, G)), alphas


def build(spec: FamilySpec) -> tuple[VecFn, Expected]:
    """Tabulate the family member over its full domain and return predicted metadata."""
    validate(spec)
    f, p, m = spec.family, spec.p, spec.m
    ep = eps_of_prime(p)
    one = QuarticUnit(1, False)

    if f in ("EQ3", "EQ4"):
        F = field_make(p, spec.n1)
        T = tables(F)
        S = space_make(p, (spec.n1, spec.n1))
        pidx = S.part_indices()
        alpha = _nonzero(F, resolve_coeff(F, spec.coeffs.get("alpha", 1)), f, "alpha")
        u = 1 if f == "EQ3" else spec.u
        z = T.mul(alpha, T.mul(pidx[:, 0], T.pow(T.inv(pidx[:, 1]), u)))
        if f == "EQ3":
            B = _balanced_table(spec, "B", spec.n1)
            vals = B[z]
        else:
            Fr = field_make(p, spec.r)
            B = _balanced_table(spec, "B", spec.r)
            vals = B[_trace_to(Fr, F)[z]]
        return VecFn(S, PrimeVectorSpace(p, m), vals), Expected("I", one, 0, None)

    if f == "EQ5":
        F1, F2, Fr = field_make(p, spec.n1), field_make(p, spec.n2), field_make(p, spec.r)
        T1, T2 = tables(F1), tables(F2)
        S = space_make(p, (spec.n1, spec.n1, spec.n2, spec.n2))
        pidx = S.part_indices()
        alpha = _nonzero(F1, resolve_coeff(F1, spec.coeffs.get("alpha", 1)), f, "alpha")
        beta = _nonzero(F2, resolve_coeff(F2, spec.coeffs.get("beta", 1)), f, "beta")
        z1 = T1.mul(alpha, T1.mul(pidx[:, 0], T1.inv(pidx[:, 1])))
        z2 = _trace_to(Fr, F2)[T2.mul(beta, T2.mul(pidx[:, 2], T2.pow(T2.inv(pidx[:, 3]), spec.u)))]
        B1 = _balanced_table(spec, "B1", spec.n1)
        B2 = _balanced_table(spec, "B2", spec.r)
        V = PrimeVectorSpace(p, m)
        C = V.coords()
        vals = V.encode(C[B1[z1]] + C[B2[z2]])
        return VecFn(S, V, vals), Expected("I", one, 0, None)

    Fm = field_make(p, m)
    order_m = p**m - 1

    if f == "EQ7":
        F = field_make(p, spec.n1)
        T = tables(F)
        S = space_make(p, (spec.n1, spec.n1))
        pidx = S.part_indices()
        alpha = _nonzero(F, resolve_coeff(F, spec.coeffs.get("alpha", 1)), f, "alpha")
        vals = _trace_to(Fm, F)[T.mul(alpha, T.mul(pidx[:, 0], T.pow(pidx[:, 1], spec.u)))]
        u_inv = pow(spec.u, -1, p**spec.n1 - 1)
        return VecFn(S, Fm, vals), Expected("II", one, (1 + spec.u) % order_m, (1 + u_inv) % order_m)

    if f in ("EQ8", "EQ13"):
        n = spec.n
        F = field_make(p, n)
        T = tables(F)
        S = space_make(p, (n,))
        x = np.arange(F.q, dtype=np.int64)
        alpha = _nonzero(F, resolve_coeff(F, spec.coeffs.get("alpha", 1)), f, "alpha")
        vals = _trace_to(Fm, F)[T.mul(alpha, T.mul(x, x))]
        eta = _eta(F, alpha)
        if f == "EQ8":
            unit = -(ep**n).scale(eta)
            cond = "II"
        else:
            unit = (ep**n).scale((-1) ** (n - 1) * eta)
            cond = "III"
        return VecFn(S, Fm, vals), Expected(cond, unit, 2 % order_m, 2 % order_m)

    if f == "EQ10":
        n = spec.n
        F, Fh = field_make(p, n), field_make(p, n // 2)
        T = tables(F)
        S = space_make(p, (n,))
        x = np.arange(F.q, dtype=np.int64)
        alpha_h = _nonzero(Fh, resolve_coeff(Fh, spec.coeffs.get("alpha", 1)), f, "alpha")
        alpha = int(embed_table(tower(Fh, F))[alpha_h])
        y = T.mul(alpha, T.pow(x, p ** (n // 2) + 1))
        # y lies in F_{p^{n/2}}, so Tr_m^n(y) = 2 Tr_m^{n/2}(y) and p is odd
        half = int(tables(Fm).inv(np.array([2 % p]))[0])
        vals = tables(Fm).mul(half, _trace_to(Fm, F)[y])
        return VecFn(S, Fm, vals), Expected("II", -one, 2 % order_m, 2 % order_m)

    if f in ("EQ9", "EQ14"):
        s = spec.s
        Tm = tables(Fm)
        S = space_make(p, (m,) * s)
        pidx = S.part_indices()
        alphas = _alphas(spec, Fm, s)
        vals = np.zeros(S.size, dtype=np.int64)
        for i, a in enumerate(alphas):
            vals = Tm.add(vals, Tm.mul(a, Tm.mul(pidx[:, i], pidx[:, i])))
        prod = 1
        for a in alphas:
            prod = int(Tm.mul(prod, a))
        eta = _eta(Fm, prod)
        if f == "EQ9":
            unit = (ep ** (m * s)).scale(eta)
            cond = "II"
        else:
            unit = (ep ** (m * s)).scale((-1) ** (m - 1) * eta)
            cond = "III"
        return VecFn(S, Fm, vals), Expected(cond, unit, 2 % order_m, 2 % order_m)

    if f in ("EQ11", "EQ15"):
        Fn, alphas = _selector_family(spec)
        Fx = field_make(p, spec.n1)
        eta = _eta(Fx, alphas[0])
        n1 = spec.n1
        if f == "EQ11":
            unit = -(ep**n1).scale(eta)
            cond = "II"
        else:
            unit = (ep**n1).scale((-1) ** (n1 - 1) * eta)
            cond = "III"
        return Fn, Expected(cond, unit, 2 % order_m, 2 % order_m)

    raise ParamViolation(f"unknown family {f!r}")


def selector_indicator_form(spec: FamilySpec) -> VecFn:
    """EQ11/EQ15 rewritten with an indicator of y2 != 0 in place of the H case split.

    Valid when the selector Tr(gamma y2^2) never takes a non-square value; then
    F = [y2 != 0] Tr((alpha_2 - alpha_1) x^2) + Tr(alpha_1 x^2) + G(y1, y2), the
    shape in which the worked instances are usually written.
    """
    _check(spec.family in ("EQ11", "EQ15"), spec.family, "indicator form applies to EQ11/EQ15")
    validate(spec)
    p, m = spec.p, spec.m
    Fx, Fy, Fm = field_make(p, spec.n1), field_make(p, spec.n2), field_make(p, m)
    Tx, Ty, Tm = tables(Fx), tables(Fy), tables(Fm)
    S = space_make(p, (spec.n1, spec.n2, spec.n2))
    pidx = S.part_indices()
    x, y1, y2 = pidx[:, 0], pidx[:, 1], pidx[:, 2]
    a1, a2, _ = _alphas(spec, Fx, 3)
    beta = resolve_coeff(Fy, spec.coeffs.get("beta", 1))
    gamma = resolve_coeff(Fy, spec.coeffs.get("gamma", 1))
    tr_x, tr_y = _trace_to(Fm, Fx), _trace_to(Fm, Fy)
    sel = tr_y[Ty.mul(gamma, Ty.mul(y2, y2))]
    _check(bool((Tm.eta(sel) >= 0).all()), spec.family, "selector avoids non-squares")
    x2 = Tx.mul(x, x)
    indicator = np.where(y2 != 0, 1, 0)
    diff = Tx.sub(a2, a1)
    H = Tm.add(Tm.mul(indicator, tr_x[Tx.mul(diff, x2)]), tr_x[Tx.mul(a1, x2)])
    G = tr_y[Ty.mul(beta, Ty.mul(y1, _L_values(spec, Fy)[y2]))]
    return VecFn(S, Fm, Tm.add(H, G))


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def _eq3(p: int, t: int, m: int, n1: int, name: str) -> FamilySpec:
    return FamilySpec("EQ3", p, t, m, n1=n1, coeffs={"alpha": 1}, name=name)


PRESETS: dict[str, FamilySpec] = {
    # alpha = 1 is the coefficient of the squared term; the worked instance leaves it implicit
    "example1": FamilySpec("EQ8", 3, 1, 2, n=8, coeffs={"alpha": 1}, name="example1"),
    "example2": FamilySpec(
        "EQ11", 3, 2, 2, n1=4, n2=2,
        coeffs={"alphas": ["w^2", 1, 1], "beta": 1, "gamma": 1}, name="example2",
    ),
    "example3": FamilySpec("EQ10", 5, 2, 2, n=8, coeffs={"alpha": 1}, name="example3"),
    "example4": FamilySpec(
        "EQ15", 3, 1, 2, n1=2, n2=2,
        coeffs={"alphas": ["w^2", 1, 1], "beta": 1, "gamma": 1}, name="example4",
    ),
    "example5": FamilySpec(
        "EQ15", 3, 2, 2, n1=2, n2=2,
        coeffs={"alphas": ["w^2", 1, 1], "beta": 1, "gamma": 1}, name="example5",
    ),
    "example6": FamilySpec(
        "EQ15", 5, 2, 2, n1=2, n2=2,
        coeffs={"alphas": ["w^3", "w^1", "w^1"], "beta": 1, "gamma": 1}, name="example6",
    ),
}


# (p, t, m, n') for each row of the EQ3 code table, in printed order
TABLE2_GEOMETRY: tuple[tuple[int, int, int, int], ...] = (
    (2, 1, 2, 3), (2, 1, 2, 3), (2, 1, 2, 3), (2, 1, 3, 4), (2, 1, 2, 3), (2, 1, 2, 4), (2, 1, 4, 5),
    (2, 1, 3, 4), (2, 1, 3, 4), (2, 1, 2, 4), (2, 1, 2, 4), (2, 1, 3, 5), (2, 1, 5, 6), (2, 1, 3, 4),
    (2, 1, 2, 4), (2, 1, 4, 5), (2, 1, 3, 4), (2, 1, 2, 5), (2, 1, 4, 6), (2, 1, 6, 7), (3, 1, 2, 3),
    (3, 1, 2, 3), (2, 2, 3, 4), (2, 2, 3, 4), (2, 2, 3, 4), (2, 2, 3, 4), (2, 2, 3, 4), (2, 2, 3, 4),
    (2, 2, 3, 4), (2, 3, 2, 3), (2, 3, 2, 3), (2, 3, 2, 3), (3, 2, 1, 2), (3, 2, 1, 2),
)
for _k, (_p, _t, _m, _n1) in enumerate(TABLE2_GEOMETRY, start=1):
    PRESETS[f"table2-row{_k}"] = _eq3(_p, _t, _m, _n1, f"table2-row{_k}")

# Small instances of every family (domain <= 3^8 points) used by the
# theorem-verification sweep.  Coefficients are arbitrary admissible choices.
_ONE = {"alpha": 1}
_H = {"alphas": [1, 1, 1], "beta": 1, "gamma": 1}
SWEEP: dict[str, FamilySpec] = {
    "eq3-p2-t1-m2-n3": FamilySpec("EQ3", 2, 1, 2, n1=3, coeffs=_ONE),
    "eq3-p3-t1-m1-n2": FamilySpec("EQ3", 3, 1, 1, n1=2, coeffs=_ONE),
    "eq3-p3-t1-m2-n3": FamilySpec("EQ3", 3, 1, 2, n1=3, coeffs=_ONE),
    "eq3-p2-t2-m3-n4": FamilySpec("EQ3", 2, 2, 3, n1=4, coeffs=_ONE),
    "eq4-p2-t1-m2-n4": FamilySpec("EQ4", 2, 1, 2, n1=4, r=2, u=7, coeffs=_ONE),
    "eq4-p3-t1-m1-n2": FamilySpec("EQ4", 3, 1, 1, n1=2, r=1, u=3, coeffs=_ONE),
    "eq5-p2-t1-m2": FamilySpec("EQ5", 2, 1, 2, n1=2, n2=2, r=2, u=1, coeffs={"alpha": 1, "beta": 1}),
    "eq7-p3-t1-m1-n2": FamilySpec("EQ7", 3, 1, 1, n1=2, u=1, coeffs=_ONE),
    "eq7-p3-t1-m1-n3": FamilySpec("EQ7", 3, 1, 1, n1=3, u=5, coeffs=_ONE),
    "eq7-p2-t2-m2-n6": FamilySpec("EQ7", 2, 2, 2, n1=6, u=1, coeffs=_ONE),
    "eq8-p3-t1-m1-n4": FamilySpec("EQ8", 3, 1, 1, n=4, coeffs=_ONE),
    "eq8-p5-t1-m1-n4": FamilySpec("EQ8", 5, 1, 1, n=4, coeffs={"alpha": "w^1"}),
    "eq9-p3-t1-m1-s4": FamilySpec("EQ9", 3, 1, 1, s=4, coeffs={"alphas": [1, 1, 2, 1]}),
    "eq9-p5-t1-m1-s4": FamilySpec("EQ9", 5, 1, 1, s=4, coeffs={"alphas": [1, 2, 1, 1]}),
    "eq10-p3-t1-m1-n4": FamilySpec("EQ10", 3, 1, 1, n=4, coeffs=_ONE),
    "eq10-p5-t1-m1-n4": FamilySpec("EQ10", 5, 1, 1, n=4, coeffs=_ONE),
    "eq11-p3-t1-m1": FamilySpec("EQ11", 3, 1, 1, n1=2, n2=1, coeffs=_H),
    "eq13-p3-t1-m1-n5": FamilySpec("EQ13", 3, 1, 1, n=5, coeffs=_ONE),
    "eq13-p5-t1-m1-n3": FamilySpec("EQ13", 5, 1, 1, n=3, coeffs={"alpha": "w^1"}),
    "eq13-p3-t2-m2-n6": FamilySpec("EQ13", 3, 2, 2, n=6, coeffs=_ONE),
    "eq13-p3-t1-m2-n6": FamilySpec("EQ13", 3, 1, 2, n=6, coeffs={"alpha": "w^1"}),
    "eq14-p3-t1-m1-s5": FamilySpec("EQ14", 3, 1, 1, s=5, coeffs={"alphas": [1, 1, 1, 1, 2]}),
    "eq14-p5-t1-m1-s3": FamilySpec("EQ14", 5, 1, 1, s=3, coeffs={"alphas": [1, 1, 2]}),
    "eq14-p3-t2-m2-s3": FamilySpec("EQ14", 3, 2, 2, s=3, coeffs={"alphas": [1, "w^1", 1]}),
    "eq15-p3-t1-m1": FamilySpec("EQ15", 3, 1, 1, n1=3, n2=1, coeffs=_H),
    "eq15-p5-t1-m1": FamilySpec("EQ15", 5, 1, 1, n1=1, n2=1, coeffs={"alphas": [2, 2, 2], "beta": 1, "gamma": 1}),
    "example1": PRESETS["example1"],
    "example2": PRESETS["example2"],
    "example4": PRESETS["example4"],
    "example5": PRESETS["example5"],
}


def preset(name: str) -> FamilySpec:
    try:
        return PRESETS[name]
    except KeyError:
        raise ParamViolation(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None
