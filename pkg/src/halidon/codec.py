"""Text encoding: the 40-symbol alphabet, block padding, unit tables.

Symbols are digits, A-Z, blank, colon, period, hyphen, numbered 0..39 in
that order.  Lowercase letters fold to uppercase; anything else is
rejected.  RSA-HGR replaces the numeric codes with an injective
assignment of symbols to units of Z_n.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence, Union

from .analysis import HalidonRing
from .arith import euler_phi, factorize
from .errors import (
    AlphabetTooLarge,
    CodeOutOfRange,
    MalformedFile,
    ModulusMismatch,
    NotAUnit,
    UnknownUnit,
    UnsupportedSymbol,
)
from .group_ring import LambdaVector

ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ :.-"
BLANK_CODE = 36

# Key names used in table files, in code order.
_KEY_NAMES = tuple(ALPHABET[:36]) + ("SPACE", "COLON", "PERIOD", "HYPHEN")


def text_to_codes(text: str) -> tuple[int, ...]:
    """Map text to symbol codes; lowercase folds, anything else rejects."""
    codes = []
    for pos, char in enumerate(text):
        folded = char.upper()
        idx = ALPHABET.find(folded)
        if idx < 0 or len(folded) != 1:
            raise UnsupportedSymbol(char, pos)
        codes.append(idx)
    return tuple(codes)


def codes_to_text(codes: Sequence[int]) -> str:
    """Inverse of text_to_codes; codes must lie in 0..39."""
    chars = []
    for pos, code in enumerate(codes):
        if not 0 <= code < len(ALPHABET):
            raise CodeOutOfRange(
                f"code {code} at position {pos} is outside 0..39"
            )
        chars.append(ALPHABET[code])
    return "".join(chars)


def pad_and_block(codes: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """Split into length-m blocks, padding the tail with blanks.

    An empty message still produces one all-blank block.
    """
    if m < 1:
        raise ValueError(f"block length {m} must be >= 1")
    codes = tuple(codes)
    total = max(1, -(-len(codes) // m)) * m
    padded = codes + (BLANK_CODE,) * (total - len(codes))
    return [padded[i : i + m] for i in range(0, total, m)]


@dataclass(frozen=True)
class UnitAssignment:
    """Map from the 40 symbols to units of Z_n, stored in code order."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(ALPHABET):
            raise ValueError(
                f"table needs {len(ALPHABET)} values, got {len(self.values)}"
            )
        for sym, value in zip(ALPHABET, self.values):
            if not 0 <= value < self.modulus:
                raise ValueError(
                    f"table value {value} for {sym!r} is outside Z_{self.modulus}"
                )
            if math.gcd(value, self.modulus) != 1:
                raise NotAUnit(
                    f"table value {value} for {sym!r} is not a unit mod {self.modulus}"
                )

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def value_for(self, symbol: str) -> int:
        idx = ALPHABET.find(symbol.upper())
        if idx < 0:
            raise UnsupportedSymbol(symbol, 0)
        return self.values[idx]

    @cached_property
    def _symbol_by_value(self) -> dict[int, str]:
        # first-wins: on duplicate values the symbol with the smaller
        # code is reported (the K/M, L/N style ambiguity of defective
        # tables resolves to K and L)
        out: dict[int, str] = {}
        for sym, value in zip(ALPHABET, self.values):
            out.setdefault(value, sym)
        return out

    def symbol_for(self, value: int) -> str | None:
        return self._symbol_by_value.get(value)


def gen_unit_table(
    ring: Union[HalidonRing, int], seed: int
) -> UnitAssignment:
    """Draw 40 distinct units uniformly (seeded) and assign in code order.

    Accepts a ring or a bare modulus (the table depends only on n).
    Needs phi(n) >= 40 (AlphabetTooLarge otherwise), which requires the
    factorization of n; rings certified without one are factorized here.
    """
    if isinstance(ring, int):
        n = ring
        f = factorize(n)
    else:
        n = ring.n
        f = ring.factorization or factorize(n)
    if euler_phi(f) < len(ALPHABET):
        raise AlphabetTooLarge(
            f"phi({n}) = {euler_phi(f)} < {len(ALPHABET)}; no injective table exists"
        )
    rng = random.Random(seed)
    chosen: list[int] = []
    seen: set[int] = set()
    while len(chosen) < len(ALPHABET):
        candidate = rng.randrange(1, n)
        if candidate in seen or math.gcd(candidate, n) != 1:
            continue
        seen.add(candidate)
        chosen.append(candidate)
    return UnitAssignment(modulus=n, values=tuple(chosen))


def apply_table(
    message: Union[str, Sequence[int]], table: UnitAssignment
) -> LambdaVector:
    """Symbol-wise translation of text (or codes) into unit values."""
    codes = text_to_codes(message) if isinstance(message, str) else message
    values = []
    for pos, code in enumerate(codes):
        if not 0 <= code < len(ALPHABET):
            raise CodeOutOfRange(
                f"code {code} at position {pos} is outside 0..39"
            )
        values.append(table.values[code])
    return LambdaVector(tuple(values), table.modulus)


def unapply_table(
    lambdas: Union[LambdaVector, Sequence[int]], table: UnitAssignment
) -> str:
    """Inverse of apply_table; UnknownUnit when a value is not in the table."""
    if isinstance(lambdas, LambdaVector):
        if lambdas.modulus != table.modulus:
            raise ModulusMismatch(
                f"spectrum mod {lambdas.modulus} against table mod {table.modulus}"
            )
        values: Sequence[int] = lambdas.values
    else:
        values = lambdas
    chars = []
    for pos, value in enumerate(values):
        sym = table.symbol_for(value)
        if sym is None:
            raise UnknownUnit(value, pos)
        chars.append(sym)
    return "".join(chars)


_TABLE_HEADER = "HGR-TABLE v1"


def render_table(table: UnitAssignment) -> str:
    lines = [_TABLE_HEADER, f"n={table.modulus}"]
    lines += [
        f"{key}={value}" for key, value in zip(_KEY_NAMES, table.values)
    ]
    return "\n".join(lines) + "\n"


def write_table(table: UnitAssignment, path) -> None:
    Path(path).write_text(render_table(table), encoding="utf-8", newline="\n")


def read_table(path) -> UnitAssignment:
    """Strict parse: header, n=, then the 40 keys in code order.

    Values must be units mod n; duplicates are tolerated (defective
    tables still load for inspection) but flagged by is_injective.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != _TABLE_HEADER:
        raise MalformedFile(path, 1, f"expected header {_TABLE_HEADER!r}")
    if len(lines) != 2 + len(_KEY_NAMES):
        raise MalformedFile(
            path, len(lines), f"expected exactly {2 + len(_KEY_NAMES)} lines"
        )
    if not lines[1].startswith("n=") or not lines[1][2:].isdigit():
        raise MalformedFile(path, 2, "expected line n=<decimal>")
    n = int(lines[1][2:])
    values = []
    for i, key in enumerate(_KEY_NAMES, start=3):
        line = lines[i - 1]
        prefix = f"{key}="
        if not line.startswith(prefix) or not line[len(prefix):].isdigit():
            raise MalformedFile(path, i, f"expected line {key}=<decimal>")
        value = int(line[len(prefix):])
        if not 0 <= value < n:
            raise MalformedFile(path, i, f"value {value} is outside Z_{n}")
        if math.gcd(value, n) != 1:
            raise MalformedFile(path, i, f"value {value} is not a unit mod {n}")
        values.append(value)
    return UnitAssignment(modulus=n, values=tuple(values))
