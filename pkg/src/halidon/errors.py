"""Exception types shared across the package.

``exit_code`` is what the command-line front end returns when the error
escapes: 2 for validation/usage problems, 3 for mathematical failures
(non-units, invalid roots, exhausted searches, wrong-key evidence).
"""


class HalidonError(Exception):
    exit_code = 2


class ModulusMismatch(HalidonError):
    """Arithmetic attempted between values reduced by different moduli."""


class NotAUnit(HalidonError):
    """gcd(value, modulus) > 1 where an invertible element was required."""

    exit_code = 3


class NonCoprimeModuli(HalidonError):
    """CRT combination over moduli that share a factor."""


class FactorizationTimeout(HalidonError):
    """The factoring work budget was exhausted before completion."""

    exit_code = 3


class BadPrime(HalidonError):
    """Key generation given a number that is even, repeated, or composite."""


class NotCoprime(HalidonError):
    """Public exponent shares a factor with phi(n)."""


class IndexNotSupported(HalidonError):
    """Requested index m does not divide psi(n)."""


class NotADivisor(HalidonError):
    """Requested sub-index does not divide the ring index."""


class LengthMismatch(HalidonError):
    """Vector length disagrees with the ring index m."""


class UnsupportedSymbol(HalidonError):
    """Character outside the 40-symbol alphabet."""

    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"unsupported symbol {char!r} at position {position}")


class CodeOutOfRange(HalidonError):
    """Symbol code outside 0..39; during decryption this signals a wrong key."""

    exit_code = 3


class AlphabetTooLarge(HalidonError):
    """phi(n) < 40, so no injective symbol-to-unit table exists."""


class UnknownUnit(HalidonError):
    """Decrypted value not present in the unit table (wrong table or root)."""

    exit_code = 3

    def __init__(self, value: int, position: int, detail: str = ""):
        self.value = value
        self.position = position
        msg = f"value {value} at position {position} is not in the unit table"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class InvalidOmega(HalidonError):
    """A value that must be a primitive m-th root of unity is not one."""

    exit_code = 3


class SearchExhausted(HalidonError):
    """Random root search hit its attempt budget without success."""

    exit_code = 3


class MalformedFile(HalidonError):
    """A key, table, or ciphertext file failed strict validation."""

    def __init__(self, path, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")
