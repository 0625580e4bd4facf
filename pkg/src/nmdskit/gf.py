"""Exact arithmetic in GF(p^m) with a deterministic, reproducible construction.

Elements are encoded as integers in [0, q): the base-p digits of the value
(little-endian) are the coefficients of the polynomial representative.  The
field is built on the lexicographically smallest monic primitive polynomial
of degree m over GF(p), so serialized artifacts are identical across runs.
Multiplication and inversion go through discrete-log tables of size q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldError

DEFAULT_Q_BOUND = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _poly_add(a: int, b: int, p: int, m: int) -> int:
    if p == 2:
        return a ^ b
    val, mult = 0, 1
    for da, db in zip(_digits(a, p, m), _digits(b, p, m)):
        val += ((da + db) % p) * mult
        mult *= p
    return val


def _mul_by_x_mod(a_coeffs: list[int], modulus: list[int], p: int) -> list[int]:
    # a_coeffs and the returned list have length m = deg(modulus)
    m = len(a_coeffs)
    carry = a_coeffs[-1]
    shifted = [0] + a_coeffs[:-1]
    if carry:
        # subtract carry * (modulus - x^m); modulus is monic
        for i in range(m):
            shifted[i] = (shifted[i] - carry * modulus[i]) % p
    return shifted


def _coeffs_to_int(coeffs: list[int], p: int) -> int:
    val, mult = 0, 1
    for c in coeffs:
        val += c * mult
        mult *= p
    return val


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of GF(p^m) plus precomputed log/exp tables.

    ``modulus`` holds m+1 coefficients in ascending degree and is monic.
    ``exp[i]`` is the encoding of the primitive element to the power i,
    for 0 <= i < q-1; ``log`` inverts it (log[0] is unused).
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    exp: tuple[int, ...]
    log: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def primitive(self) -> int:
        return self.exp[1] if self.q > 2 else 1

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        return _poly_add(a, b, self.p, self.m)

    def neg(self, a: int) -> int:
        self.check(a)
        if self.p == 2:
            return a
        val, mult = 0, 1
        for d in _digits(a, self.p, self.m):
            val += ((-d) % self.p) * mult
            mult *= self.p
        return val

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        self.check(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power in GF(q)")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def units(self) -> tuple[int, ...]:
        """The nonzero elements theta_1..theta_{q-1}, theta_i = w^(i-1)."""
        return self.exp

    def element_order(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.q - 1
        la = self.log[a]
        from math import gcd

        return n // gcd(la, n)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={list(self.modulus)})"


def _build_tables(p: int, m: int, modulus: list[int]) -> tuple[list[int], list[int]] | None:
    """Powers of the class of x modulo ``modulus``.

    Returns (exp, log) iff x is a unit of multiplicative order exactly
    p^m - 1 in GF(p)[x]/(modulus); that forces the quotient to be a field
    and the modulus to be primitive.
    """
    q = p ** m
    x_coeffs = [0] * m
    if m == 1:
        x_coeffs[0] = (-modulus[0]) % p  # x reduces to -c mod (x + c)
    else:
        x_coeffs[1] = 1
    cur = [0] * m
    cur[0] = 1  # the element 1
    exp: list[int] = []
    seen = set()
    for _ in range(q - 1):
        v = _coeffs_to_int(cur, p)
        if v == 0 or v in seen:
            return None
        seen.add(v)
        exp.append(v)
        # multiply by x
        if m == 1:
            cur = [(cur[0] * x_coeffs[0]) % p]
        else:
            cur = _mul_by_x_mod(cur, modulus, p)
    if _coeffs_to_int(cur, p) != 1:  # x^(q-1) must close the cycle
        return None
    log = [0] * q
    for i, v in enumerate(exp):
        log[v] = i
    return exp, log


def make_field(p: int, m: int, q_bound: int = DEFAULT_Q_BOUND) -> FieldSpec:
    """Construct GF(p^m) on the smallest monic primitive modulus.

    Candidate moduli are ordered by their coefficient vector read
    high-to-low as a base-p number, so the result is deterministic.
    """
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if m < 1:
        raise FieldError(f"m = {m} must be positive")
    q = p ** m
    if q > q_bound:
        raise FieldError(f"q = {q} exceeds the bound {q_bound}")
    for low in range(q):
        modulus = _digits(low, p, m) + [1]
        tables = _build_tables(p, m, modulus)
        if tables is not None:
            exp, log = tables
            return FieldSpec(p=p, m=m, modulus=tuple(modulus),
                             exp=tuple(exp), log=tuple(log))
    raise FieldError(f"no primitive polynomial found for GF({p}^{m})")  # pragma: no cover


def field_from_json(obj: dict, q_bound: int = DEFAULT_Q_BOUND) -> FieldSpec:
    p, m = obj["p"], obj["m"]
    modulus = list(obj["modulus"])
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise FieldError("modulus must be monic with m+1 ascending coefficients")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError("modulus coefficients must lie in [0, p)")
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if p ** m > q_bound:
        raise FieldError(f"q = {p ** m} exceeds the bound {q_bound}")
    tables = _build_tables(p, m, modulus)
    if tables is None:
        raise FieldError(f"modulus {modulus} is not primitive over GF({p})")
    exp, log = tables
    return FieldSpec(p=p, m=m, modulus=tuple(modulus), exp=tuple(exp), log=tuple(log))
