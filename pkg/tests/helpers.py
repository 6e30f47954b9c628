"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive: scans, schoolbook products, and
the orthogonality definition taken literally, so that oracle failures
and implementation failures cannot share a cause.
"""

from math import gcd


def is_definition_primitive(n: int, m: int, w: int) -> bool:
    """Literal definition: invertible index, minimal order m, power sums.

    w must satisfy w^m = 1 with m minimal, and for every r the sum
    1 + w^r + ... + w^((m-1)r) must be m for r = 0 and 0 otherwise;
    the index m itself must be a unit so the structure is usable.
    """
    if gcd(m, n) != 1:
        return False
    power = w % n
    order = None
    for k in range(1, m + 1):
        if power == 1:
            order = k
            break
        power = power * w % n
    if order != m:
        return False
    for r in range(m):
        total = sum(pow(w, r * i, n) for i in range(m)) % n
        if total != (m % n if r == 0 else 0):
            return False
    return True


def definition_roots(n: int, m: int) -> list[int]:
    """All w < n passing the literal definition, ascending."""
    return [w for w in range(n) if is_definition_primitive(n, m, w)]


def schoolbook_cyclic(a, b, n: int) -> tuple[int, ...]:
    """Full 2m-1 coefficient product, then folded mod x^m - 1."""
    m = len(a)
    assert len(b) == m
    full = [0] * (2 * m - 1)
    for i in range(m):
        for j in range(m):
            full[i + j] += a[i] * b[j]
    folded = full[:m]
    for k in range(m, 2 * m - 1):
        folded[k - m] += full[k]
    return tuple(v % n for v in folded)


def trial_factor(n: int) -> list[tuple[int, int]]:
    """Factorization by undiluted trial division."""
    out = []
    d = 2
    while d * d <= n:
        count = 0
        while n % d == 0:
            n //= d
            count += 1
        if count:
            out.append((d, count))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def naive_lambda(coeffs, n: int, m: int, omega: int) -> list[int]:
    """Spectrum via the reversed-index formula taken verbatim.

    lambda_r = sum over i of a[(m - i + 2) mod m, with 0 meaning m] times
    omega^((i-1)(r-1)), indices 1-based.  Used to pin the index-wrapping
    convention of the cleaner evaluation form.
    """
    a = {i + 1: coeffs[i] for i in range(m)}
    out = []
    for r in range(1, m + 1):
        total = 0
        for i in range(1, m + 1):
            idx = (m - i + 2) % m
            if idx == 0:
                idx = m
            total += a[idx] * pow(omega, (i - 1) * (r - 1), n)
        out.append(total % n)
    return out
