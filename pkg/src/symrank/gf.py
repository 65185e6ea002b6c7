"""Exact arithmetic for the field tower F_p <= F_q <= F_{q^n}.

``BaseField`` realises F_q = F_p[y]/(g) for a monic irreducible g of degree
e, and ``ExtField`` realises F_{q^n} = F_q[x]/(f) for a monic irreducible f
of degree n over F_q.

Elements are packed integers.  The F_q element with coefficient vector
(c_0, ..., c_{e-1}) over F_p (little endian) is sum(c_i * p**i); the F_{q^n}
element with coefficients (a_0, ..., a_{n-1}) over F_q is sum(a_i * q**i)
where each a_i is itself a packed F_q value.  Constants of F_q therefore
embed into F_{q^n} unchanged, 0 and 1 are the identities at every level, and
element equality is plain integer equality.

Multiplication, inversion, powers and the Frobenius x -> x^q run on
discrete-log tables over a fixed generator whenever the field order fits in
``ExtField.TABLE_LIMIT``; larger fields fall back to direct polynomial
arithmetic modulo the defining polynomial.  The tables make every decoder
inner loop O(1) per field operation.

Moduli may be user supplied or auto-generated by scanning monic polynomials
in ascending packed-coefficient order.  Generation is deterministic, so a
given (p, e, n) always denotes the same concrete tower.
"""

from __future__ import annotations

from dataclasses import dataclass


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def _prime_factors(m: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def _digits(value: int, radix: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, r = divmod(value, radix)
        out.append(r)
    return out


def _pack(digits, radix: int) -> int:
    out = 0
    for d in reversed(list(digits)):
        out = out * radix + d
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p (little-endian coefficient lists), used to build F_q

def _fp_trim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _fp_divmod(u, v, p):
    u = list(u)
    dv = len(v) - 1
    inv_lead = pow(v[-1], -1, p)
    quo = [0] * max(len(u) - dv, 0)
    for i in range(len(u) - 1, dv - 1, -1):
        c = (u[i] * inv_lead) % p
        if c:
            quo[i - dv] = c
            for j, vj in enumerate(v):
                u[i - dv + j] = (u[i - dv + j] - c * vj) % p
    return quo, _fp_trim(u)


def _fp_is_irreducible(poly: list[int], p: int) -> bool:
    poly = _fp_trim(list(poly))
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    # trial division is exhaustive and cheap at the sizes F_q needs
    for d in range(1, deg // 2 + 1):
        for packed in range(p**d):
            cand = _digits(packed, p, d) + [1]
            if not _fp_divmod(poly, cand, p)[1]:
                return False
    return True


def _find_irreducible_fp(p: int, e: int) -> tuple[int, ...]:
    for packed in range(p**e):
        cand = _digits(packed, p, e) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise ArithmeticError("no irreducible polynomial found (impossible)")


class BaseField:
    """F_q = F_p[y]/(g) acting on packed integer elements in [0, q).

    ``modulus`` is the little-endian coefficient tuple of g (length e + 1,
    monic).  Omitting it picks the first monic irreducible of degree e in
    ascending packed-coefficient order.
    """

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("extension degree e must be >= 1")
        if modulus is None:
            modulus = _find_irreducible_fp(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus g must be monic of degree e")
            if not _fp_is_irreducible(list(modulus), p):
                raise ValueError("modulus g is reducible over F_p")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._exp, self._log = self._build_tables()
        self._sqrt_table: dict[int, int] | None = None

    def __repr__(self):
        return f"BaseField(p={self.p}, e={self.e})"

    # -- raw polynomial arithmetic (table bootstrap only) -------------------

    def _mul_raw(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (a * b) % p
        da = _digits(a, p, e)
        db = _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return _pack(prod[:e], p)

    def _pow_raw(self, a: int, m: int) -> int:
        out = 1
        while m:
            if m & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            m >>= 1
        return out

    def _build_tables(self):
        q = self.q
        units = q - 1
        factors = _prime_factors(units)
        gen = None
        for c in range(1, q):
            if all(self._pow_raw(c, units // r) != 1 for r in factors):
                gen = c
                break
        exp = [0] * (2 * units)
        cur = 1
        for i in range(units):
            exp[i] = cur
            cur = self._mul_raw(cur, gen)
        if cur != 1:
            raise ArithmeticError("generator order mismatch")
        for i in range(units, 2 * units):
            exp[i] = exp[i - units]
        log = [-1] * q
        for i in range(units):
            log[exp[i]] = i
        return exp, log

    # -- field operations ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        place = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        place = 1
        while a:
            a, ra = divmod(a, p)
            out += ((-ra) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, m: int) -> int:
        if a == 0:
            if m == 0:
                return 1
            if m < 0:
                raise ZeroDivisionError("negative power of zero in F_q")
            return 0
        return self._exp[(self._log[a] * m) % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        """Quadratic residue test; trivially true in characteristic 2."""
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int:
        """A square root of a, via an exhaustive table (q is desk-sized)."""
        if self._sqrt_table is None:
            table: dict[int, int] = {}
            for b in range(self.q):
                table.setdefault(self.mul(b, b), b)
            self._sqrt_table = table
        try:
            return self._sqrt_table[a]
        except KeyError:
            raise ValueError(f"{a} is not a square in F_{self.q}") from None

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.e))

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) != self.e or any(not (0 <= c < self.p) for c in cs):
            raise ValueError("bad coefficient vector for F_q element")
        return _pack(cs, self.p)


# ---------------------------------------------------------------------------
# polynomials over F_q (little-endian lists of packed F_q values)

def _fq_trim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _fq_sub(base: BaseField, u, v):
    out = [0] * max(len(u), len(v))
    for i, x in enumerate(u):
        out[i] = x
    for i, y in enumerate(v):
        out[i] = base.sub(out[i], y)
    return _fq_trim(out)


def _fq_mul(base: BaseField, u, v):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                if y:
                    out[i + j] = base.add(out[i + j], base.mul(x, y))
    return _fq_trim(out)


def _fq_divmod(base: BaseField, u, v):
    u = list(u)
    v = _fq_trim(list(v))
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    dv = len(v) - 1
    inv_lead = base.inv(v[-1])
    quo = [0] * max(len(u) - dv, 0)
    for i in range(len(u) - 1, dv - 1, -1):
        c = base.mul(u[i], inv_lead)
        if c:
            quo[i - dv] = c
            for j, vj in enumerate(v):
                u[i - dv + j] = base.sub(u[i - dv + j], base.mul(c, vj))
    return _fq_trim(quo), _fq_trim(u)


def _fq_mulmod(base: BaseField, u, v, m):
    return _fq_divmod(base, _fq_mul(base, u, v), m)[1]


def _fq_powmod(base: BaseField, u, exp: int, m):
    out = [1]
    u = _fq_divmod(base, list(u), m)[1]
    while exp:
        if exp & 1:
            out = _fq_mulmod(base, out, u, m)
        u = _fq_mulmod(base, u, u, m)
        exp >>= 1
    return out


def _fq_gcd(base: BaseField, u, v):
    u = _fq_trim(list(u))
    v = _fq_trim(list(v))
    while v:
        u, v = v, _fq_divmod(base, u, v)[1]
    return u


def _fq_invmod(base: BaseField, u, m):
    # extended Euclid: s*u + t*m = gcd; returns s normalised so s*u = 1 mod m
    r0, r1 = _fq_trim(list(m)), _fq_divmod(base, list(u), m)[1]
    s0, s1 = [], [1]
    while r1:
        q, r = _fq_divmod(base, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fq_sub(base, s0, _fq_mul(base, q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo f")
    c = base.inv(r0[0])
    return _fq_trim([base.mul(c, x) for x in s0])


def _fq_is_irreducible(base: BaseField, poly) -> bool:
    """Rabin's test: f of degree n over F_q is irreducible iff
    x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n."""
    poly = _fq_trim(list(poly))
    n = len(poly) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    frob = [list(x)]
    h = list(x)
    for _ in range(n):
        h = _fq_powmod(base, h, base.q, poly)
        frob.append(list(h))
    if _fq_sub(base, frob[n], x):
        return False
    for r in _prime_factors(n):
        g = _fq_gcd(base, _fq_sub(base, frob[n // r], x), poly)
        if len(g) != 1:
            return False
    return True


def _find_irreducible_fq(base: BaseField, n: int) -> tuple[int, ...]:
    for packed in range(base.q**n):
        cand = _digits(packed, base.q, n) + [1]
        if _fq_is_irreducible(base, cand):
            return tuple(cand)
    raise ArithmeticError("no irreducible polynomial found (impossible)")


@dataclass(frozen=True)
class FieldParams:
    """Defining data of a tower: F_q = F_p[y]/(g), F_{q^n} = F_q[x]/(f).

    g is a little-endian tuple of F_p coefficients (length e + 1, monic);
    f is a little-endian tuple of packed F_q values (length n + 1, monic).
    """

    p: int
    e: int
    g: tuple[int, ...]
    n: int
    f: tuple[int, ...]


class ExtField:
    """F_{q^n} = F_q[x]/(f) acting on packed integer elements in [0, q^n)."""

    TABLE_LIMIT = 1 << 16

    def __init__(self, base: BaseField, n: int, modulus=None,
                 use_tables: bool | None = None):
        if n < 1:
            raise ValueError("extension degree n must be >= 1")
        if modulus is None:
            modulus = _find_irreducible_fq(base, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError("modulus f must be monic of degree n")
            if any(not (0 <= c < base.q) for c in modulus):
                raise ValueError("modulus f has out-of-range coefficients")
            if not _fq_is_irreducible(base, list(modulus)):
                raise ValueError("modulus f is reducible over F_q")
        self.base = base
        self.n = n
        self.q = base.q
        self.order = base.q**n
        self.modulus = tuple(modulus)
        self.zero = 0
        self.one = 1
        self._xor_add = base.p == 2
        if use_tables is None:
            use_tables = self.order <= self.TABLE_LIMIT
        self._exp = None
        self._logt = None
        self._frob_exp = None
        if use_tables:
            self._build_tables()

    def __repr__(self):
        return f"ExtField(q={self.q}, n={self.n})"

    @property
    def params(self) -> FieldParams:
        return FieldParams(self.base.p, self.base.e, self.base.modulus,
                           self.n, self.modulus)

    # -- raw polynomial arithmetic -------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        q, n = self.q, self.n
        da = _digits(a, q, n)
        db = _digits(b, q, n)
        prod = _fq_mul(self.base, da, db)
        rem = _fq_divmod(self.base, prod, list(self.modulus))[1]
        return _pack(rem + [0] * (n - len(rem)), q)

    def _pow_raw(self, a: int, m: int) -> int:
        out = 1
        while m:
            if m & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            m >>= 1
        return out

    def _inv_raw(self, a: int) -> int:
        da = _digits(a, self.q, self.n)
        s = _fq_invmod(self.base, da, list(self.modulus))
        return _pack(s + [0] * (self.n - len(s)), self.q)

    def _build_tables(self):
        units = self.order - 1
        factors = _prime_factors(units)
        gen = None
        for c in range(1, self.order):
            if all(self._pow_raw(c, units // r) != 1 for r in factors):
                gen = c
                break
        exp = [0] * (2 * units)
        cur = 1
        for i in range(units):
            exp[i] = cur
            cur = self._mul_raw(cur, gen)
        if cur != 1:
            raise ArithmeticError("generator order mismatch")
        for i in range(units, 2 * units):
            exp[i] = exp[i - units]
        log = [-1] * self.order
        for i in range(units):
            log[exp[i]] = i
        self._exp = exp
        self._logt = log
        self._frob_exp = [pow(self.q, i, units) for i in range(self.n)]

    # -- field operations ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._xor_add:
            return a ^ b
        q = self.q
        badd = self.base.add
        out = 0
        place = 1
        while a or b:
            a, ra = divmod(a, q)
            b, rb = divmod(b, q)
            out += badd(ra, rb) * place
            place *= q
        return out

    def neg(self, a: int) -> int:
        if self._xor_add:
            return a
        q = self.q
        bneg = self.base.neg
        out = 0
        place = 1
        while a:
            a, ra = divmod(a, q)
            out += bneg(ra) * place
            place *= q
        return out

    def sub(self, a: int, b: int) -> int:
        if self._xor_add:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._logt[a] + self._logt[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_{q^n}")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._logt[a]]
        return self._inv_raw(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, m: int) -> int:
        if a == 0:
            if m == 0:
                return 1
            if m < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._exp is not None:
            return self._exp[(self._logt[a] * m) % (self.order - 1)]
        if m < 0:
            return self._pow_raw(self._inv_raw(a), -m)
        return self._pow_raw(a, m % (self.order - 1) if self.order > 2 else m)

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); i is reduced mod n since Frobenius has order n."""
        i %= self.n
        if i == 0 or a == 0:
            return a
        if self._exp is not None:
            return self._exp[(self._logt[a] * self._frob_exp[i]) % (self.order - 1)]
        return self._pow_raw(a, pow(self.q, i, self.order - 1))

    def trace(self, a: int) -> int:
        """Tr(a) = a + a^q + ... + a^(q^(n-1)), a packed F_q value."""
        t = a
        for i in range(1, self.n):
            t = self.add(t, self.frobenius(a, i))
        if t >= self.q:
            raise ArithmeticError("trace landed outside the base field")
        return t

    def norm(self, a: int) -> int:
        """N(a) = a * a^q * ... * a^(q^(n-1)) = a^((q^n-1)/(q-1))."""
        if a == 0:
            return 0
        m = a
        for i in range(1, self.n):
            m = self.mul(m, self.frobenius(a, i))
        if m >= self.q:
            raise ArithmeticError("norm landed outside the base field")
        return m

    def is_square(self, a: int) -> bool:
        if self.base.p == 2 or a == 0:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def elements(self):
        return range(self.order)

    def units(self):
        return range(1, self.order)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.q, self.n))

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) != self.n or any(not (0 <= c < self.q) for c in cs):
            raise ValueError("bad coefficient vector for F_{q^n} element")
        return _pack(cs, self.q)


def make_field(p: int, e: int, n: int, g=None, f=None,
               use_tables: bool | None = None) -> ExtField:
    """Build the tower F_p <= F_{p^e} <= F_{p^(e*n)} with optional moduli."""
    base = BaseField(p, e, g)
    return ExtField(base, n, f, use_tables)


def field_from_params(params: FieldParams, use_tables: bool | None = None) -> ExtField:
    return make_field(params.p, params.e, params.n, params.g, params.f, use_tables)


# ---------------------------------------------------------------------------
# JSON forms: little-endian coefficient vectors, plain decimal ints per F_p
# coefficient.  An F_q value is a list of e ints; an F_{q^n} value a list of
# n such lists.

def field_to_json(field: ExtField) -> dict:
    return {
        "p": field.base.p,
        "e": field.base.e,
        "g": list(field.base.modulus),
        "n": field.n,
        "f": [list(field.base.coeffs(c)) for c in field.modulus],
    }


def field_from_json(doc: dict, use_tables: bool | None = None) -> ExtField:
    base = BaseField(int(doc["p"]), int(doc["e"]), tuple(doc["g"]))
    f = tuple(base.from_coeffs(c) for c in doc["f"])
    return ExtField(base, int(doc["n"]), f, use_tables)


def base_to_json(base: BaseField, a: int) -> list[int]:
    return list(base.coeffs(a))


def base_from_json(base: BaseField, data) -> int:
    return base.from_coeffs(data)


def ext_to_json(field: ExtField, a: int) -> list[list[int]]:
    return [list(field.base.coeffs(c)) for c in field.coeffs(a)]


def ext_from_json(field: ExtField, data) -> int:
    return field.from_coeffs(tuple(field.base.from_coeffs(c) for c in data))
