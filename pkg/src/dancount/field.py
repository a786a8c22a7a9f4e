"""Arithmetic in F_{p^r} with a deterministic modulus choice.

Elements are canonical coefficient vectors (little-endian in the modulus
root t) interned per field, so equal elements are the same object.  A
discrete-log table built once at construction backs multiplication and the
multiplicative-character machinery; addition works on the vectors directly.

The modulus is the lexicographically smallest monic irreducible polynomial
of degree r over F_p (coefficient vectors compared constant term first),
which makes element order, generator choice and discrete logs reproducible
across runs.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from . import config
from .errors import NotPrime, SizeCapExceeded, ZeroHasNoLog

_DIGIT_TABLE_MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^r with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    r = 0
    m = q
    while m > 1:
        m //= p
        r += 1
    if p**r != q:
        raise ValueError(f"{q} is not a prime power")
    return p, r


# -- dense polynomial helpers over Z_p (plain int lists, little-endian) --


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mulmod(a: list[int], b: list[int], mod: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic, so reduction needs no inversions
    deg_m = len(mod) - 1
    for i in range(len(prod) - 1, deg_m - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(deg_m):
                prod[i - deg_m + j] = (prod[i - deg_m + j] - c * mod[j]) % p
    return _trim(prod)


def _powmod(base: list[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = list(base)
    while e > 0:
        if e & 1:
            result = _mulmod(result, acc, mod, p)
        acc = _mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _gcd_fp(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b):
            c = (r[-1] * inv) % p
            shift = len(r) - len(b)
            for j, bj in enumerate(b):
                r[shift + j] = (r[shift + j] - c * bj) % p
            r.pop()
            _trim(r)
        a, b = b, r
    return a


def _is_irreducible(f: Sequence[int], p: int, r: int) -> bool:
    """Monic degree-r f over F_p: x^{p^r} = x mod f and the proper
    Frobenius fixed fields meet f trivially."""
    x = [0, 1]
    # x^{p^k} mod f by k successive p-th powers
    def frob_power(k: int) -> list[int]:
        t = list(x)
        for _ in range(k):
            t = _powmod(t, p, f, p)
        return t

    top = frob_power(r)
    if _trim(list(top)) != [0, 1]:
        return False
    for ell in prime_factors(r):
        g = frob_power(r // ell)
        diff = list(g)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_gcd_fp(diff, list(f), p)) > 1:
            return False
    return True


def _lex_smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree r, comparing (c0, c1, ...)"""
    if r == 1:
        return (0, 1)
    # counters over the low coefficients, most significant at index 0
    total = p**r
    for v in range(total):
        coeffs = []
        rest = v
        for i in range(r):
            coeffs.append(rest // p ** (r - 1 - i) % p)
        # v's base-p digits give (c0 ... c_{r-1}) with c0 varying slowest
        f = coeffs + [1]
        if _is_irreducible(f, p, r):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElement:
    """An element of a FiniteField; obtain instances through the field."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field._digits_of(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise ValueError("elements of different fields")
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._elem(self.field._add_codes(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._elem(
            self.field._add_codes(self.code, self.field._neg_code(o.code))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return self.field._elem(self.field._neg_code(self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._elem(self.field._mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        return self.field._elem(self.field._pow_code(self.code, e))

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        f = self.field
        return f._elem(f._exp_codes[(-f._dlog_codes[self.code]) % (f.q - 1)])

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and (
                other.field is self.field or other.field == self.field
            )
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.code))

    def __bool__(self):
        return self.code != 0

    def as_string(self) -> str:
        """Grammar-conformant rendering: digits, t powers, + separators."""
        if self.field.r == 1:
            return str(self.code)
        parts = []
        for i in range(self.field.r - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tp = "t" if i == 1 else f"t^{i}"
                parts.append(tp if c == 1 else f"{c}*{tp}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"<{self.as_string()} in F{self.field.q}>"


class FiniteField:
    """F_{p^r} with the deterministic lex-smallest modulus.

    Immutable after construction; all tables (element intern pool,
    discrete logs, trace basis) are built eagerly so lookups are pure reads.
    """

    def __init__(self, p: int, r: int = 1, size_cap: int | None = None):
        if not is_prime(p):
            raise NotPrime(p)
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**r
        cap = config.max_q() if size_cap is None else size_cap
        if q > cap:
            raise SizeCapExceeded(f"q = {q} exceeds cap {cap}")
        self.p = p
        self.r = r
        self.q = q
        self.modulus: tuple[int, ...] = _lex_smallest_irreducible(p, r)
        self._pow_p = [p**i for i in range(r + 1)]
        self._digit_table: list[tuple[int, ...]] | None = None
        if q <= _DIGIT_TABLE_MAX_Q:
            self._digit_table = [self._decode(c) for c in range(q)]
        self._elems: list[FieldElement | None] = [None] * q
        self.zero = self._elem(0)
        self.one = self._elem(1)
        # t: the modulus root, i.e. the second base-p digit (code p); for
        # prime fields t is not an element of interest but code p%q keeps
        # the attribute total
        self.t = self._elem(p % q)
        self._trace_basis = self._compute_trace_basis()
        gen_code = self._find_generator_code()
        self._exp_codes = self._build_exp_table(gen_code)
        self._dlog_codes = [-1] * q
        for k, c in enumerate(self._exp_codes):
            self._dlog_codes[c] = k
        self.generator = self._elem(gen_code)

    # -- construction helpers (raw coefficient arithmetic) --

    def _decode(self, code: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.r):
            code, d = divmod(code, p)
            out.append(d)
        return tuple(out)

    def _digits_of(self, code: int) -> tuple[int, ...]:
        if self._digit_table is not None:
            return self._digit_table[code]
        return self._decode(code)

    def _encode(self, digits: Sequence[int]) -> int:
        code = 0
        for i, d in enumerate(digits):
            code += d * self._pow_p[i]
        return code

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.r == 1:
            return (a * b) % self.p
        prod = _mulmod(list(self._digits_of(a)), list(self._digits_of(b)),
                       self.modulus, self.p)
        prod += [0] * (self.r - len(prod))
        return self._encode(prod)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        acc = a
        while e > 0:
            if e & 1:
                result = self._mul_raw(result, acc)
            acc = self._mul_raw(acc, acc)
            e >>= 1
        return result

    def _compute_trace_basis(self) -> tuple[int, ...]:
        # Tr(t^i) for i < r; trace of any element follows by F_p-linearity
        basis = []
        for i in range(self.r):
            ti = self._pow_raw(self.p % self.q, i)
            acc = 0
            x = ti
            for _ in range(self.r):
                acc = self._add_codes(acc, x)
                x = self._pow_raw(x, self.p)
            digits = self._digits_of(acc)
            if any(d != 0 for d in digits[1:]):
                raise AssertionError("trace left the prime subfield")
            basis.append(digits[0])
        return tuple(basis)

    def _find_generator_code(self) -> int:
        qm1 = self.q - 1
        checks = [qm1 // ell for ell in prime_factors(qm1)]
        for c in range(1, self.q):
            if all(self._pow_raw(c, e) != 1 for e in checks):
                return c
        raise AssertionError("no multiplicative generator found")  # unreachable

    def _build_exp_table(self, g: int) -> list[int]:
        table = [1] * (self.q - 1)
        acc = 1
        for k in range(1, self.q - 1):
            acc = self._mul_raw(acc, g)
            table[k] = acc
        return table

    # -- code-level operations (hot paths work on these directly) --

    def _add_codes(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        da, db = self._digits_of(a), self._digits_of(b)
        p = self.p
        code = 0
        for i in range(self.r):
            code += ((da[i] + db[i]) % p) * self._pow_p[i]
        return code

    def _neg_code(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        if a == 0:
            return 0
        p = self.p
        code = 0
        for i, d in enumerate(self._digits_of(a)):
            if d:
                code += (p - d) * self._pow_p[i]
        return code

    def _mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_codes[
            (self._dlog_codes[a] + self._dlog_codes[b]) % (self.q - 1)
        ]

    def _inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp_codes[(-self._dlog_codes[a]) % (self.q - 1)]

    def _pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("zero has no inverse")
        return self._exp_codes[(self._dlog_codes[a] * e) % (self.q - 1)]

    def _trace_code(self, a: int) -> int:
        if self.r == 1:
            return a
        acc = 0
        for d, tb in zip(self._digits_of(a), self._trace_basis):
            acc += d * tb
        return acc % self.p

    # -- public API --

    def _elem(self, code: int) -> FieldElement:
        e = self._elems[code]
        if e is None:
            e = FieldElement(self, code)
            self._elems[code] = e
        return e

    def element(self, value) -> FieldElement:
        """Build an element from an int (reduced mod p) or coefficient list."""
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return self._elem(value.code)
            raise ValueError("element of a different field")
        if isinstance(value, int):
            return self._elem(value % self.p)
        digits = [int(v) % self.p for v in value]
        if len(digits) > self.r:
            raise ValueError("too many coefficients")
        digits += [0] * (self.r - len(digits))
        return self._elem(self._encode(digits))

    def elements(self) -> Iterator[FieldElement]:
        """All q elements, base-p counter order, zero first.  Stable."""
        for code in range(self.q):
            yield self._elem(code)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        for code in range(1, self.q):
            yield self._elem(code)

    def trace(self, a: FieldElement) -> int:
        """Absolute trace a + a^p + ... + a^{p^{r-1}}, as an int in [0, p)."""
        return self._trace_code(a.code)

    def discrete_log(self, a: FieldElement) -> int:
        """k with generator^k = a; table lookup."""
        if a.code == 0:
            raise ZeroHasNoLog("discrete log of zero")
        return self._dlog_codes[a.code]

    def __eq__(self, other):
        if isinstance(other, FiniteField):
            return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, r={self.r})"


def field_with_order(q: int, size_cap: int | None = None) -> FiniteField:
    """FiniteField for a prime power given as a single integer."""
    p, r = factor_prime_power(q)
    return FiniteField(p, r, size_cap=size_cap)
