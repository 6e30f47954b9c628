"""Arbitrary-precision modular arithmetic and number-theory primitives.

Every residue carries its modulus; mixing moduli raises ModulusMismatch
instead of silently producing nonsense.  All functions are pure.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    FactorizationTimeout,
    ModulusMismatch,
    NonCoprimeModuli,
    NotAUnit,
)

_TRIAL_DIVISION_LIMIT = 10**6
_DEFAULT_RHO_BUDGET = 10**7

# These twelve bases make Miller-Rabin deterministic below 2^64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def default_factor_budget() -> int:
    """Pollard-rho iteration cap; HALIDON_FACTOR_BUDGET overrides it."""
    raw = os.environ.get("HALIDON_FACTOR_BUDGET")
    return int(raw) if raw else _DEFAULT_RHO_BUDGET


@dataclass(frozen=True)
class Residue:
    """An element of Z_n that remembers n.

    The stored value is always reduced to 0 <= value < modulus.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _require_same_modulus(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._require_same_modulus(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._require_same_modulus(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._require_same_modulus(other)
        return Residue(self.value * other.value, self.modulus)

    def __pow__(self, exp: int) -> "Residue":
        return mod_pow(self, exp)

    def inverse(self) -> "Residue":
        return mod_inverse(self)

    def is_unit(self) -> bool:
        return math.gcd(self.value, self.modulus) == 1

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_pow(base: Residue, exp: int) -> Residue:
    """base**exp by square-and-multiply, O(log exp) multiplications."""
    if exp < 0:
        return mod_pow(mod_inverse(base), -exp)
    return Residue(pow(base.value, exp, base.modulus), base.modulus)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def mod_inverse(a: Residue) -> Residue:
    """Multiplicative inverse; raises NotAUnit when gcd(a, n) > 1."""
    g, s, _ = ext_gcd(a.value, a.modulus)
    if g != 1:
        raise NotAUnit(
            f"{a.value} is not a unit mod {a.modulus} (gcd = {g})"
        )
    return Residue(s, a.modulus)


def is_probable_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin: deterministic below 2^64, `rounds` random bases above."""
    if n < 2:
        return False
    for p in _MR_BASES_64:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases: Iterable[int] = _MR_BASES_64
    else:
        bases = (random.randrange(2, n - 1) for _ in range(rounds))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical form of n: ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("empty factorization")
        prev = 1
        for p, e in self.pairs:
            if p <= prev:
                raise ValueError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise ValueError(f"exponent {e} for prime {p} must be >= 1")
            if not is_probable_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @property
    def n(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def is_even(self) -> bool:
        return self.pairs[0][0] == 2

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def __str__(self) -> str:
        return " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs
        )


def _brent_rho(n: int, budget: int) -> tuple[int, int]:
    """One nontrivial factor of odd composite n, or raise on budget blowout.

    Brent's cycle variant with batched gcds; the polynomial offset is
    stepped deterministically so results are reproducible.  Returns
    (factor, iterations_used).
    """
    used = 0
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                batch = min(128, r - k)
                for _ in range(batch):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += batch
                if used > budget:
                    raise FactorizationTimeout(
                        f"factor budget of {budget} iterations exceeded on {n}"
                    )
                g = math.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            # gcd batch overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g, used
        # cycle degenerated for this offset; try the next one
    raise FactorizationTimeout(f"no factor of {n} found (budget {budget})")


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Canonical factorization: trial division, then Pollard rho.

    `budget` caps the total rho iterations (FactorizationTimeout beyond);
    it defaults to default_factor_budget().
    """
    if n < 2:
        raise ValueError(f"cannot factorize {n}")
    if budget is None:
        budget = default_factor_budget()
    counts: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
    d = 5
    while d <= _TRIAL_DIVISION_LIMIT and d * d <= n:
        for step in (0, 2):  # 6k-1, 6k+1
            cand = d + step
            while n % cand == 0:
                counts[cand] = counts.get(cand, 0) + 1
                n //= cand
        d += 6
    stack = [n] if n > 1 else []
    while stack:
        n = stack.pop()
        if is_probable_prime(n):
            counts[n] = counts.get(n, 0) + 1
            continue
        factor, used = _brent_rho(n, budget)
        budget -= used
        stack.append(factor)
        stack.append(n // factor)
    return Factorization(tuple(sorted(counts.items())))


def euler_phi(f: Factorization) -> int:
    """Euler totient from the factorization: prod p^(e-1) * (p-1)."""
    out = 1
    for p, e in f.pairs:
        out *= p ** (e - 1) * (p - 1)
    return out


def group_exponent(f: Factorization) -> int:
    """Exponent of the unit group of Z_n (Carmichael function)."""
    parts = []
    for p, e in f.pairs:
        if p == 2:
            parts.append(1 if e == 1 else 2 if e == 2 else 1 << (e - 2))
        else:
            parts.append(p ** (e - 1) * (p - 1))
    return math.lcm(*parts)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors of {n} undefined")
    if n == 1:
        return [1]
    out = [1]
    for p, e in factorize(n).pairs:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def crt_combine(parts: Sequence[Residue]) -> Residue:
    """Unique residue mod prod(moduli) matching every part.

    Moduli must be pairwise coprime (NonCoprimeModuli otherwise).
    """
    if not parts:
        raise ValueError("crt_combine needs at least one residue")
    acc = parts[0]
    for part in parts[1:]:
        g, s, _ = ext_gcd(acc.modulus, part.modulus)
        if g != 1:
            raise NonCoprimeModuli(
                f"moduli {acc.modulus} and {part.modulus} share factor {g}"
            )
        # s = acc.modulus^(-1) mod part.modulus
        diff = (part.value - acc.value) % part.modulus
        lift = diff * s % part.modulus
        acc = Residue(
            acc.value + acc.modulus * lift, acc.modulus * part.modulus
        )
    return acc


def multiplicative_order(a: Residue) -> int:
    """Least s >= 1 with a^s = 1, by peeling primes off the group exponent."""
    if not a.is_unit():
        raise NotAUnit(
            f"{a.value} is not a unit mod {a.modulus}; order undefined"
        )
    order = group_exponent(factorize(a.modulus))
    for p, _ in factorize(order).pairs:
        while order % p == 0 and pow(a.value, order // p, a.modulus) == 1:
            order //= p
    return order
