"""Character-sum identities over finite fields, each with a brute-force oracle.

Every identity comes in two forms.  ``*_closed`` evaluates the case formula
using table lookups for set membership.  ``*_oracle`` evaluates the defining
sum or count directly with scalar ``FieldElem`` arithmetic, ``absolute_trace``
and ``CycloInt`` accumulation.  The two paths share no helpers beyond the
field constructor, so their agreement is a genuine check.

Field elements may be given as table indices, ``"w^k"`` strings (powers of
the fixed primitive element) or coefficient lists.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

from sympy import factorint

from . import cyclotomic as cy
from .errors import ParamViolation, ZeroLeadingCoeff
from .galois import FieldDesc, absolute_trace, field_make, quad_character, tables

Elem = Any  # index, "w^k" or coefficient list


def _field(p: int, m: int) -> FieldDesc:
    return field_make(p, m)


def _idx(F: FieldDesc, spec: Elem) -> int:
    from .catalog import resolve_coeff

    if isinstance(spec, int):
        if not 0 <= spec < F.q:
            raise ParamViolation(f"index {spec} outside F_{F.q}")
        return spec
    return resolve_coeff(F, spec)


def _require_odd(p: int) -> None:
    if p == 2:
        raise ParamViolation("this identity needs odd p")


def _check_minimal_j(p: int, m: int, b: int, j: int, jp: int) -> None:
    if m != 2 * j * jp:
        raise ParamViolation(f"m={m} must equal 2*j*j'={2 * j * jp}")
    if b < 2 or (p**j + 1) % b:
        raise ParamViolation(f"b={b} must be >= 2 and divide p^j + 1 = {p**j + 1}")
    for jj in range(1, j):
        if (p**jj + 1) % b == 0:
            raise ParamViolation(f"j={j} is not minimal: b divides p^{jj} + 1")


def _ipow(p: int, e2: int) -> int:
    """p^(e2/2) for even e2."""
    return p ** (e2 // 2)


def _subgroup(F: FieldDesc, b: int) -> set[int]:
    T = tables(F)
    q1 = F.q - 1
    return {int(T.exp[(b * k) % q1]) for k in range(q1)}


# ---------------------------------------------------------------------------
# P7: quadratic Gauss sum over F_q
# ---------------------------------------------------------------------------

def prop7_closed(p: int, m: int, a: Elem) -> cy.CycloInt:
    _require_odd(p)
    F = _field(p, m)
    ai = _idx(F, a)
    if ai == 0:
        return cy.CycloInt.integer(p, 0)
    sign = (-1) ** (m - 1) * int(tables(F).eta(ai))
    eps_sq = 1 if p % 4 == 1 else -1
    if m % 2 == 0:
        return cy.CycloInt.integer(p, sign * eps_sq ** (m // 2) * p ** (m // 2))
    return cy.gauss_sum(p).scale(sign * eps_sq ** ((m - 1) // 2) * p ** ((m - 1) // 2))


def prop7_oracle(p: int, m: int, a: Elem) -> cy.CycloInt:
    _require_odd(p)
    F = _field(p, m)
    a_el = F.from_index(_idx(F, a))
    chi = _chi_by_squaring(p, m)
    full = [0] * p
    for x in F.elements():
        if not x.is_zero():
            full[_tr(p, m)[(a_el * x).index]] += chi[x.index]
    return cy.CycloInt.from_full(p, full)


@functools.lru_cache(maxsize=128)
def _tr(p: int, m: int) -> tuple[int, ...]:
    """Absolute trace by index, one scalar ``absolute_trace`` call per element."""
    return tuple(absolute_trace(x) for x in _field(p, m).elements())


@functools.lru_cache(maxsize=128)
def _chi_by_squaring(p: int, m: int) -> tuple[int, ...]:
    """Quadratic character by index, read off the set of squares x * x."""
    F = _field(p, m)
    squares = {(x * x).index for x in F.elements()}
    return tuple(0 if i == 0 else (1 if i in squares else -1) for i in range(F.q))


# ---------------------------------------------------------------------------
# P8: quadratic character of a quadratic polynomial
# ---------------------------------------------------------------------------

def prop8_closed(p: int, m: int, a2: Elem, a1: Elem, a0: Elem) -> int:
    _require_odd(p)
    F = _field(p, m)
    T = tables(F)
    i2, i1, i0 = _idx(F, a2), _idx(F, a1), _idx(F, a0)
    if i2 == 0:
        raise ZeroLeadingCoeff("a2 must be nonzero")
    four = T.scalar_index(4)
    disc = T.sub(T.mul(i1, i1), T.mul(four, T.mul(i0, i2)))
    eta2 = int(T.eta(i2))
    return (F.q - 1) * eta2 if int(disc) == 0 else -eta2


def prop8_oracle(p: int, m: int, a2: Elem, a1: Elem, a0: Elem) -> int:
    _require_odd(p)
    F = _field(p, m)
    c2, c1, c0 = (F.from_index(_idx(F, v)) for v in (a2, a1, a0))
    if c2.is_zero():
        raise ZeroLeadingCoeff("a2 must be nonzero")
    chi = _chi_by_squaring(p, m)
    return sum(chi[(c2 * x * x + c1 * x + c0).index] for x in F.elements())


# ---------------------------------------------------------------------------
# P9: additive character sums over H_b
# ---------------------------------------------------------------------------

def prop9_closed(p: int, m: int, b: int, j: int, jp: int, a: Elem) -> cy.CycloInt:
    _check_minimal_j(p, m, b, j, jp)
    F = _field(p, m)
    T = tables(F)
    ai = _idx(F, a)
    if ai == 0:
        raise ParamViolation("a must be nonzero")
    H = _subgroup(F, b)
    half = _ipow(p, m)
    if p % 2 == 1 and jp % 2 == 1 and ((p**j + 1) // b) % 2 == 1:
        shift = int(T.exp[b // 2])
        in_coset = int(T.mul(ai, T.inv(shift))) in H
        val = in_coset * half - (half + 1) // b
    else:
        val = (ai in H) * (-1) ** (jp + 1) * half + ((-1) ** jp * half - 1) // b
    return cy.CycloInt.integer(p, val)


def prop9_oracle(p: int, m: int, b: int, j: int, jp: int, a: Elem) -> cy.CycloInt:
    _check_minimal_j(p, m, b, j, jp)
    F = _field(p, m)
    a_el = F.from_index(_idx(F, a))
    if a_el.is_zero():
        raise ParamViolation("a must be nonzero")
    Hb = {(x**b).coeffs for x in F.elements() if not x.is_zero()}
    full = [0] * p
    for h in Hb:
        full[_tr(p, m)[(a_el * F.elem(h)).index]] += 1
    return cy.CycloInt.from_full(p, full)


# ---------------------------------------------------------------------------
# P10: cyclotomic numbers of order two
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicCounts:
    SS: int
    SN: int
    NS: int
    NN: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.SS, self.SN, self.NS, self.NN)


def _split_prime_power(q: int) -> tuple[int, int]:
    f = factorint(q)
    if len(f) != 1:
        raise ParamViolation(f"{q} is not a prime power")
    (p, m), = f.items()
    if p == 2:
        raise ParamViolation("q must be odd")
    return int(p), int(m)


def prop10_closed(q: int) -> CyclotomicCounts:
    _split_prime_power(q)
    if q % 4 == 1:
        return CyclotomicCounts((q - 5) // 4, (q - 1) // 4, (q - 1) // 4, (q - 1) // 4)
    return CyclotomicCounts((q - 3) // 4, (q + 1) // 4, (q - 3) // 4, (q - 3) // 4)


def prop10_oracle(q: int) -> CyclotomicCounts:
    p, m = _split_prime_power(q)
    F = _field(p, m)
    cls = {x.coeffs: quad_character(x) for x in F.elements()}
    counts = {(1, 1): 0, (1, -1): 0, (-1, 1): 0, (-1, -1): 0}
    for x in F.elements():
        cx = cls[x.coeffs]
        cy1 = cls[(x + 1).coeffs]
        if cx and cy1:
            counts[(cx, cy1)] += 1
    return CyclotomicCounts(counts[(1, 1)], counts[(1, -1)], counts[(-1, 1)], counts[(-1, -1)])


# ---------------------------------------------------------------------------
# L8: sum over z with z^2 in a coset of H_b
# ---------------------------------------------------------------------------

def _lemma8_case(p: int, b: int, i: int) -> str:
    if p == 2:
        return "v"
    return {(0, 1): "i", (1, 1): "ii", (0, 0): "iii", (1, 0): "iv"}[(i % 2, b % 2)]


def lemma8_closed(p: int, m: int, b: int, i: int, beta: Elem) -> cy.CycloInt:
    F = _field(p, m)
    if b < 1 or (F.q - 1) % b:
        raise ParamViolation(f"b={b} must divide p^m - 1 = {F.q - 1}")
    T = tables(F)
    bi = _idx(F, beta)
    H = sorted(_subgroup(F, b))
    tr = _abs_trace_table(F)
    case = _lemma8_case(p, b, i)
    q1 = F.q - 1
    full = [0] * p

    def add_shift(k: int) -> None:
        c = T.neg(T.mul(int(T.exp[k % q1]), bi))
        for z in H:
            full[tr[int(T.mul(z, c))]] += 1

    if case == "i":
        add_shift(i // 2)
    elif case == "ii":
        add_shift((i + b) // 2)
    elif case == "iii":
        add_shift(i // 2)
        add_shift((i + b) // 2)
    elif case == "v":
        c = T.mul(int(T.exp[i % q1]), T.mul(bi, bi))
        for z in H:
            full[tr[int(T.mul(z, c))]] += 1
    return cy.CycloInt.from_full(p, full)


def _abs_trace_table(F: FieldDesc) -> list[int]:
    from .galois import prime_field, trace_table, tower

    sub = prime_field(F.p)
    return [int(v) for v in trace_table(tower(sub, F))]


def lemma8_oracle(p: int, m: int, b: int, i: int, beta: Elem) -> cy.CycloInt:
    F = _field(p, m)
    if b < 1 or (F.q - 1) % b:
        raise ParamViolation(f"b={b} must divide p^m - 1 = {F.q - 1}")
    beta_el = F.from_index(_idx(F, beta))
    full = [0] * p
    for z in _lemma8_roots(p, m, b, i % (F.q - 1)):
        full[_tr(p, m)[(-(F.from_index(z) * beta_el)).index]] += 1
    return cy.CycloInt.from_full(p, full)


@functools.lru_cache(maxsize=64)
def _lemma8_roots(p: int, m: int, b: int, i: int) -> tuple[int, ...]:
    """Indices z with z^2 in w^i H_b, found by direct powering."""
    F = _field(p, m)
    w = F.gen
    coset = {(w**i * x**b).coeffs for x in F.elements() if not x.is_zero()}
    return tuple(z.index for z in F.elements() if (z * z).coeffs in coset)


# ---------------------------------------------------------------------------
# L9: root counts of F*(alpha) y^2 - beta y - a over a in gamma H_b
# ---------------------------------------------------------------------------

def _sqrt_index(F: FieldDesc, c: int) -> int:
    T = tables(F)
    for x in range(F.q):
        if int(T.mul(x, x)) == c:
            return x
    raise ParamViolation("element is not a square")


def lemma9_case(p: int, m: int, b: int, fstar: int, beta: int, gamma: int) -> str:
    T = tables(_field(p, m))
    if fstar == 0:
        return "i" if beta == 0 else "ii"
    if beta == 0:
        if b % 2:
            return "ii"
        return "iii" if int(T.eta(T.mul(gamma, T.inv(fstar)))) == 1 else "i"
    return "iv" if b % 2 else "v"


def lemma9_closed(p: int, m: int, b: int, j: int, jp: int, fstar: Elem, beta: Elem, gamma: Elem) -> int:
    _check_minimal_j(p, m, b, j, jp)
    F = _field(p, m)
    T = tables(F)
    fs, be, ga = _idx(F, fstar), _idx(F, beta), _idx(F, gamma)
    if ga == 0:
        raise ParamViolation("gamma must be nonzero")
    q = F.q
    half = _ipow(p, m)
    case = lemma9_case(p, m, b, fs, be, ga)
    if case == "i":
        return 0
    if case == "ii":
        return (q - 1) // b
    if case == "iii":
        return 2 * (q - 1) // b
    c = int(T.inv(T.mul(ga, fs)))  # gamma^{-1} F*(alpha)^{-1}
    if case == "iv":
        base = ((-1) ** jp * half + q - 2) // b
        H = _subgroup(F, b)
        if p == 2:
            hit = int(T.mul(c, T.mul(be, be))) in H
        elif int(T.eta(c)) == 1:
            hit = int(T.mul(be, _sqrt_index(F, c))) in H
        else:
            hit = int(T.mul(be, _sqrt_index(F, int(T.mul(c, T.exp[b]))))) in H
        return (-1) ** (jp + 1) * half * hit + base
    # case v
    if int(T.eta(c)) != 1:
        return (q - 1) // b
    base = ((q - 1) + 2 * ((-1) ** jp * half - 1)) // b
    hit = int(T.mul(be, _sqrt_index(F, c))) in _subgroup(F, b // 2)
    return (-1) ** (jp + 1) * half * hit + base


def lemma9_oracle(p: int, m: int, b: int, j: int, jp: int, fstar: Elem, beta: Elem, gamma: Elem) -> int:
    _check_minimal_j(p, m, b, j, jp)
    F = _field(p, m)
    v, be, ga = (F.from_index(_idx(F, e)) for e in (fstar, beta, gamma))
    if ga.is_zero():
        raise ParamViolation("gamma must be nonzero")
    nonzero = [x for x in F.elements() if not x.is_zero()]
    coset = {(ga * x**b).coeffs for x in nonzero}
    # y is a root for a exactly when a = F* y^2 - beta y
    hits = Counter((v * y * y - be * y).coeffs for y in nonzero)
    return sum(hits[a] for a in coset)


# ---------------------------------------------------------------------------
# uniform query surface
# ---------------------------------------------------------------------------

Identity = Literal["P7", "P8", "P9", "P10", "L8", "L9"]
Mode = Literal["closed_form", "brute_force"]


@dataclass(frozen=True)
class SumQuery:
    identity: Identity
    p: int = 3
    m: int = 1
    t: int | None = None
    b: int | None = None
    j: int | None = None
    jp: int | None = None
    i: int | None = None
    a: Elem = None
    beta: Elem = None
    gamma: Elem = None
    coeffs: tuple = field(default_factory=tuple)  # (a2, a1, a0) for P8
    fstar: Elem = None
    mode: Mode = "closed_form"

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v not in (None, ())}


def _need(q: SumQuery, *names: str) -> None:
    missing = [n for n in names if getattr(q, n) is None]
    if missing:
        raise ParamViolation(f"{q.identity} needs {', '.join(missing)}")


def evaluate(q: SumQuery) -> int | cy.CycloInt | CyclotomicCounts:
    closed = q.mode == "closed_form"
    if q.identity == "P7":
        _need(q, "a")
        return (prop7_closed if closed else prop7_oracle)(q.p, q.m, q.a)
    if q.identity == "P8":
        if len(q.coeffs) != 3:
            raise ParamViolation("P8 needs coeffs (a2, a1, a0)")
        return (prop8_closed if closed else prop8_oracle)(q.p, q.m, *q.coeffs)
    if q.identity == "P9":
        _need(q, "b", "j", "jp", "a")
        return (prop9_closed if closed else prop9_oracle)(q.p, q.m, q.b, q.j, q.jp, q.a)
    if q.identity == "P10":
        return (prop10_closed if closed else prop10_oracle)(q.p**q.m)
    if q.identity == "L8":
        _need(q, "b", "i", "beta")
        return (lemma8_closed if closed else lemma8_oracle)(q.p, q.m, q.b, q.i, q.beta)
    if q.identity == "L9":
        _need(q, "b", "j", "jp", "fstar", "beta", "gamma")
        if q.t is not None and q.t != q.m:
            raise ParamViolation("L9 needs t = m")
        fn = lemma9_closed if closed else lemma9_oracle
        return fn(q.p, q.m, q.b, q.j, q.jp, q.fstar, q.beta, q.gamma)
    raise ParamViolation(f"unknown identity {q.identity!r}")


def value_to_json(v: int | cy.CycloInt | CyclotomicCounts) -> Any:
    if isinstance(v, cy.CycloInt):
        return v.as_integer() if v.is_integer() else {"p": v.p, "zeta_coeffs": list(v.coeffs)}
    if isinstance(v, CyclotomicCounts):
        return asdict(v)
    return int(v)


def _pick(closed_fn, oracle_fn, mode: Mode):
    if mode not in ("closed_form", "brute_force"):
        raise ParamViolation(f"unknown mode {mode!r}")
    return closed_fn if mode == "closed_form" else oracle_fn


def prop7(p: int, m: int, a: Elem, mode: Mode = "closed_form") -> cy.CycloInt:
    return _pick(prop7_closed, prop7_oracle, mode)(p, m, a)


def prop8(p: int, m: int, a2: Elem, a1: Elem, a0: Elem, mode: Mode = "closed_form") -> int:
    return _pick(prop8_closed, prop8_oracle, mode)(p, m, a2, a1, a0)


def prop9(p: int, m: int, b: int, j: int, jp: int, a: Elem, mode: Mode = "closed_form") -> cy.CycloInt:
    return _pick(prop9_closed, prop9_oracle, mode)(p, m, b, j, jp, a)


def prop10(q: int, mode: Mode = "closed_form") -> CyclotomicCounts:
    return _pick(prop10_closed, prop10_oracle, mode)(q)


def lemma8_X(p: int, m: int, b: int, i: int, beta: Elem, mode: Mode = "closed_form") -> cy.CycloInt:
    return _pick(lemma8_closed, lemma8_oracle, mode)(p, m, b, i, beta)


def lemma9_T(
    p: int, m: int, b: int, j: int, jp: int, fstar: Elem, beta: Elem, gamma: Elem, mode: Mode = "closed_form"
) -> int:
    return _pick(lemma9_closed, lemma9_oracle, mode)(p, m, b, j, jp, fstar, beta, gamma)
