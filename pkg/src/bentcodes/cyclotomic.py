"""Exact arithmetic in Z[zeta_p].

A ``CycloInt`` stores integers ``c_0..c_{p-2}`` for ``sum c_k zeta^k``; the
power ``zeta^{p-1}`` is always rewritten as ``-(1 + zeta + ... + zeta^{p-2})``,
so equality of values is equality of coefficient tuples.  For p = 2 the ring
is just Z (zeta = -1) and a single coefficient is kept.

The ``*_full`` helpers operate on integer arrays of shape ``(..., p)`` holding
coefficients of all p powers (a redundant but convenient representation for
bulk work) and ``canon`` maps them to the reduced ``(..., p-1)`` form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sympy import isprime

from .errors import EvenCharacteristic, NotPrime, PrimeMismatch


@dataclass(frozen=True)
class CycloInt:
    p: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_full(cls, p: int, full: Sequence[int]) -> "CycloInt":
        """Build from coefficients of zeta^0..zeta^{p-1} (any length, indices taken mod p)."""
        acc = [0] * p
        for k, c in enumerate(full):
            acc[k % p] += int(c)
        top = acc[p - 1]
        return cls(p, tuple(acc[k] - top for k in range(p - 1)))

    @classmethod
    def integer(cls, p: int, value: int) -> "CycloInt":
        return cls(p, (int(value),) + (0,) * (p - 2))

    def full(self) -> list[int]:
        return list(self.coeffs) + [0]

    def _check(self, other: "CycloInt") -> None:
        if other.p != self.p:
            raise PrimeMismatch(f"zeta_{self.p} vs zeta_{other.p}")

    def _lift(self, other: "CycloInt | int") -> "CycloInt":
        if isinstance(other, int):
            return CycloInt.integer(self.p, other)
        self._check(other)
        return other

    def __add__(self, other: "CycloInt | int") -> "CycloInt":
        o = self._lift(other)
        return CycloInt(self.p, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycloInt | int") -> "CycloInt":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "CycloInt":
        return self._lift(other) - self

    def __mul__(self, other: "CycloInt | int") -> "CycloInt":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        acc[(i + j) % p] += a * b
        return CycloInt.from_full(p, acc)

    __rmul__ = __mul__

    def scale(self, k: int) -> "CycloInt":
        return CycloInt(self.p, tuple(k * a for a in self.coeffs))

    def conj(self) -> "CycloInt":
        """Complex conjugation, zeta -> zeta^{p-1}."""
        p = self.p
        acc = [0] * p
        for k, c in enumerate(self.coeffs):
            acc[(-k) % p] += c
        return CycloInt.from_full(p, acc)

    def norm_sq(self) -> "CycloInt":
        """|z|^2 as z * conj(z); a rational integer only when z is a unit multiple of a real."""
        return self * self.conj()

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}z^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"Cyclo{self.p}({' + '.join(terms) or '0'})"


def cyc_arith(op: str, a: CycloInt, b: "CycloInt | int | None" = None) -> CycloInt:
    """Dispatch form of the ring operations: add, sub, mul, conj, scale."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "conj":
        return a.conj()
    if op == "scale":
        return a.scale(int(b))
    raise ValueError(f"unknown operation {op!r}")


def zeta_pow(p: int, k: int) -> CycloInt:
    full = [0] * p
    full[k % p] = 1
    return CycloInt.from_full(p, full)


def gauss_sum(p: int) -> CycloInt:
    """g = sum_{x in F_p} zeta^{x^2}; g^2 = p when p = 1 mod 4 and -p when p = 3 mod 4."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("the Gauss sum is defined here for odd p")
    full = [0] * p
    for x in range(p):
        full[(x * x) % p] += 1
    return CycloInt.from_full(p, full)


def match_unit_multiple(z: CycloInt, base: CycloInt) -> int | None:
    """The k in [0, p) with z == zeta^k * base, or None."""
    z._check(base)
    for k in range(base.p):
        if zeta_pow(base.p, k) * base == z:
            return k
    return None


# ---------------------------------------------------------------------------
# bulk helpers on (..., p) arrays of full coefficients
# ---------------------------------------------------------------------------

def canon(full: np.ndarray) -> np.ndarray:
    """(..., p) full coefficients -> (..., p-1) canonical coefficients."""
    return full[..., :-1] - full[..., -1:]


def expand(canonical: np.ndarray) -> np.ndarray:
    """(..., p-1) canonical -> (..., p) full with a zero top slot."""
    pad = np.zeros(canonical.shape[:-1] + (1,), dtype=canonical.dtype)
    return np.concatenate([canonical, pad], axis=-1)


def mul_full(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cyclic convolution along the last axis (product in Z[x]/(x^p - 1))."""
    p = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.result_type(a, b))
    for i in range(p):
        out += a[..., i : i + 1] * np.roll(b, i, axis=-1)
    return out


def conj_full(a: np.ndarray) -> np.ndarray:
    p = a.shape[-1]
    return a[..., (-np.arange(p)) % p]


def shift_full(a: np.ndarray, k) -> np.ndarray:
    """Multiply by zeta^k (k scalar) along the last axis."""
    return np.roll(a, k, axis=-1)


def to_cyclo(p: int, canonical_row: Sequence[int]) -> CycloInt:
    return CycloInt(p, tuple(int(c) for c in canonical_row))
