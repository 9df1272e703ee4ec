"""Finite coefficient rings: GF(p^m) in polynomial basis and Z_n.

Elements are stored as integer *codes*.  For GF(p^m) the code of
``c0 + c1*t + ... + c_{m-1}*t^{m-1}`` is ``sum(c_i * p**i)``; for Z_n it is the
residue itself.  Code 0 is always zero and code 1 is always one, which the
array kernels rely on.

Addition/multiplication tables are built once per ring (from the polynomial
basis arithmetic, not from discrete logs) when ``q <= TABLE_CAP``; larger rings
fall back to direct polynomial arithmetic and are not accepted by the kernels.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceededError, NotAUnitError, UsageError

ENUMERATION_CAP = 2**16
TABLE_CAP = 1024

# Lexicographically first primitive polynomial for each (p, m), coefficients
# low to high.  The class of t ("a" in the text syntax) is therefore a
# generator of the multiplicative group.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (11, 1): (3, 1),
    (11, 2): (7, 1, 1),
    (13, 1): (2, 1),
    (13, 2): (2, 1, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over Z_p as coefficient lists, low degree first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] = (a[shift + k] - c * bk) % p
        _trim(a)
    return q, a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _pdivmod(prod, mod, p)[1]


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or test: no factor of degree d <= m/2 divides ``modulus``."""
    f = _trim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    t = [0, 1]
    power = t
    for _ in range(m // 2):
        # power <- power^p mod f
        acc = [1]
        base, e = power, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingSpec:
    """A finite commutative coefficient ring.

    Build with :meth:`gf`, :meth:`zn`, :meth:`from_name` or :meth:`from_json`
    rather than the raw constructor, which does not validate.
    """

    kind: str  # "gf" or "zn"
    p: int = 0
    m: int = 0
    modulus: tuple[int, ...] = ()
    n: int = 0

    # -- construction -------------------------------------------------------

    @classmethod
    def gf(cls, p: int, m: int = 1, modulus: Sequence[int] | None = None) -> "RingSpec":
        if not is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        if m < 1:
            raise UsageError("extension degree must be >= 1")
        if modulus is None:
            if (p, m) not in DEFAULT_MODULI:
                raise UsageError(f"no default modulus for GF({p}^{m}); pass one explicitly")
            modulus = DEFAULT_MODULI[(p, m)]
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise UsageError(f"modulus must be monic of degree {m}: {list(modulus)}")
        if not is_irreducible(mod, p):
            raise UsageError(f"modulus {list(mod)} is reducible over Z_{p}")
        return cls("gf", p=p, m=m, modulus=mod)

    @classmethod
    def zn(cls, n: int) -> "RingSpec":
        if n < 2:
            raise UsageError("modulus n must be >= 2")
        return cls("zn", n=n)

    @classmethod
    def from_name(cls, name: str) -> "RingSpec":
        """Shorthand names: ``gf4``, ``gf9``, ``gf2^3``, ``z4``, ``zn6``."""
        s = name.strip().lower()
        match = re.fullmatch(r"(?:gf|f)(\d+)(?:\^(\d+))?", s)
        if match:
            base = int(match.group(1))
            if match.group(2):
                return cls.gf(base, int(match.group(2)))
            for p in range(2, base + 1):
                if base % p == 0:
                    m = round(math.log(base, p))
                    if p**m != base:
                        break
                    return cls.gf(p, m)
            raise UsageError(f"{base} is not a prime power")
        match = re.fullmatch(r"z(?:n)?_?(\d+)", s)
        if match:
            return cls.zn(int(match.group(1)))
        raise UsageError(f"unknown ring name {name!r}")

    @classmethod
    def from_json(cls, data: dict | str) -> "RingSpec":
        if isinstance(data, str):
            return cls.from_name(data)
        kind = data.get("kind")
        if kind == "gf":
            return cls.gf(int(data["p"]), int(data.get("m", 1)), data.get("modulus"))
        if kind == "zn":
            return cls.zn(int(data["n"]))
        raise UsageError(f"ring kind must be 'gf' or 'zn', got {kind!r}")

    def to_json(self) -> dict:
        if self.kind == "gf":
            return {"kind": "gf", "p": self.p, "m": self.m, "modulus": list(self.modulus)}
        return {"kind": "zn", "n": self.n}

    # -- basic facts --------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind == "gf"

    @property
    def size(self) -> int:
        return self.p**self.m if self.kind == "gf" else self.n

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "gf" else self.n

    def __str__(self) -> str:
        if self.kind == "gf":
            return f"GF({self.size})" if self.m > 1 else f"GF({self.p})"
        return f"Z_{self.n}"

    def __repr__(self) -> str:
        return f"RingSpec({self.to_json()})"

    # -- element construction -------------------------------------------------

    def __call__(self, value) -> "Element":
        if isinstance(value, Element):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            return Element(self, self._from_int(int(value)))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (list, tuple)):
            return Element(self, self._from_vector(value))
        raise UsageError(f"cannot build an element of {self} from {value!r}")

    def element(self, code: int) -> "Element":
        code = int(code)
        if not 0 <= code < self.size:
            raise UsageError(f"code {code} out of range for {self}")
        return Element(self, code)

    @property
    def zero(self) -> "Element":
        return Element(self, 0)

    @property
    def one(self) -> "Element":
        return Element(self, 1)

    @property
    def generator(self) -> "Element":
        """The class of t modulo the stored irreducible (text name ``a``)."""
        if self.kind != "gf":
            raise UsageError("Z_n has no field generator")
        if self.m == 1:
            return Element(self, (-self.modulus[0]) % self.p)
        return Element(self, self.p)

    def _from_int(self, k: int) -> int:
        return k % self.characteristic

    def _from_vector(self, vec: Sequence[int]) -> int:
        if self.kind != "gf":
            raise UsageError("coefficient vectors are only meaningful for GF(p^m)")
        if len(vec) > self.m:
            raise UsageError(f"vector longer than extension degree {self.m}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(vec))

    def _check(self, a: "Element") -> None:
        if a.ring != self:
            raise UsageError(f"element of {a.ring} used in {self}")

    def digits(self, code: int) -> tuple[int, ...]:
        if self.kind != "gf":
            return (code,)
        return tuple((code // self.p**i) % self.p for i in range(self.m))

    # -- code-level arithmetic ------------------------------------------------

    @cached_property
    def has_tables(self) -> bool:
        return self.size <= TABLE_CAP

    # nested lists index faster than numpy scalars in pure-Python loops
    @cached_property
    def _add_list(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def _mul_list(self) -> list[list[int]]:
        return self.mul_table.tolist()

    @cached_property
    def _frob_list(self) -> list[list[int]]:
        return self.frobenius_tables.tolist()

    @cached_property
    def _digit_array(self) -> np.ndarray:
        codes = np.arange(self.size, dtype=np.int64)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.m)], axis=1)

    def _encode(self, digits: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (digits % self.p) @ weights

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        q = self.size
        if self.kind == "zn":
            r = np.arange(q, dtype=np.int64)
            return (r[:, None] + r[None, :]) % q
        d = self._digit_array
        return self._encode(d[:, None, :] + d[None, :, :])

    @cached_property
    def neg_table(self) -> np.ndarray:
        self._require_tables()
        if self.kind == "zn":
            return (-np.arange(self.n, dtype=np.int64)) % self.n
        return self._encode(-self._digit_array)

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        q = self.size
        if self.kind == "zn":
            r = np.arange(q, dtype=np.int64)
            return (r[:, None] * r[None, :]) % q
        p, m = self.p, self.m
        mod = np.array(self.modulus[:m], dtype=np.int64)
        # shifted[k, a] = digits of a * t^k
        shifted = np.empty((m, q, m), dtype=np.int64)
        cur = self._digit_array.copy()
        for k in range(m):
            shifted[k] = cur
            top = cur[:, m - 1].copy()
            cur = np.concatenate([np.zeros((q, 1), dtype=np.int64), cur[:, : m - 1]], axis=1)
            cur = (cur - top[:, None] * mod[None, :]) % p
        prod = np.einsum("bk,kam->abm", self._digit_array, shifted)
        return self._encode(prod)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Inverse codes; entry 0 for non-units (check ``unit_mask``)."""
        self._require_tables()
        inv = np.zeros(self.size, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        return inv

    @cached_property
    def unit_mask(self) -> np.ndarray:
        if self.has_tables:
            return (self.mul_table == 1).any(axis=1)
        return np.array([self.is_unit_code(c) for c in range(self.size)], dtype=bool)

    def _require_tables(self) -> None:
        if not self.has_tables:
            raise CapExceededError(f"{self} exceeds the table cap ({TABLE_CAP} elements)")

    def add_codes(self, a: int, b: int) -> int:
        if self.has_tables:
            return self._add_list[a][b]
        if self.kind == "zn":
            return (a + b) % self.n
        da, db = self.digits(a), self.digits(b)
        return self._from_vector([x + y for x, y in zip(da, db)])

    def neg_code(self, a: int) -> int:
        if self.has_tables:
            return int(self.neg_table[a])
        if self.kind == "zn":
            return (-a) % self.n
        return self._from_vector([-x for x in self.digits(a)])

    def mul_codes(self, a: int, b: int) -> int:
        if self.has_tables:
            return self._mul_list[a][b]
        if self.kind == "zn":
            return a * b % self.n
        prod = _pmulmod(list(self.digits(a)), list(self.digits(b)), list(self.modulus), self.p)
        return self._from_vector(prod)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse_code(a), -e
        acc = 1
        while e:
            if e & 1:
                acc = self.mul_codes(acc, a)
            a = self.mul_codes(a, a)
            e >>= 1
        return acc

    def is_unit_code(self, a: int) -> bool:
        if self.kind == "zn":
            return math.gcd(a, self.n) == 1
        return a != 0

    def inverse_code(self, a: int) -> int:
        if not self.is_unit_code(a):
            raise NotAUnitError(f"{self.format_code(a)} is not a unit in {self}")
        if self.kind == "zn":
            return pow(a, -1, self.n)
        if self.has_tables:
            return int(self.inv_table[a])
        return self.pow_code(a, self.size - 2)

    def frobenius_code(self, a: int, e: int) -> int:
        """Apply a -> a^(p^e); ``e`` may be any integer (reduced mod m)."""
        if self.kind == "zn" or self.m == 1:
            return a
        e %= self.m
        if e == 0:
            return a
        if self.has_tables:
            return self._frob_list[e][a]
        return self.pow_code(a, self.p**e)

    @cached_property
    def frobenius_tables(self) -> np.ndarray:
        """Row e holds the permutation a -> a^(p^e), e = 0..m-1."""
        self._require_tables()
        m = self.m if self.kind == "gf" else 1
        q = self.size
        out = np.empty((m, q), dtype=np.int64)
        out[0] = np.arange(q)
        if m > 1:
            first = np.array([self.pow_code(a, self.p) for a in range(q)], dtype=np.int64)
            for e in range(1, m):
                out[e] = first[out[e - 1]]
        return out

    # -- text syntax ----------------------------------------------------------

    @cached_property
    def _logs(self) -> dict[int, int] | None:
        if self.kind != "gf" or self.size > ENUMERATION_CAP:
            return None
        g = self.generator.code
        logs, cur = {}, 1
        for k in range(self.size - 1):
            if cur in logs:
                return None
            logs[cur] = k
            cur = self.mul_codes(cur, g)
        return logs if len(logs) == self.size - 1 else None

    def format_code(self, code: int) -> str:
        if self.kind == "zn" or code < self.p:
            return str(code)
        logs = self._logs
        if logs is not None:
            k = logs[code]
            return "a" if k == 1 else f"a^{k}"
        return "[" + ",".join(str(d) for d in self.digits(code)) + "]"

    def format(self, a: "Element") -> str:
        self._check(a)
        return self.format_code(a.code)

    def parse(self, text: str) -> "Element":
        return Element(self, _ElementParser(self, text).parse())

    # -- enumeration ----------------------------------------------------------

    def elements(self, cap: int = ENUMERATION_CAP) -> list["Element"]:
        return enumerate_elements(self, cap)

    def units(self, cap: int = ENUMERATION_CAP) -> list["Element"]:
        return [e for e in enumerate_elements(self, cap) if self.is_unit_code(e.code)]


class _ElementParser:
    """Recursive-descent parser for coefficient text.

    expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
    factor := '-' factor | INT | 'a' ['^' INT] | '[' INT,... ']' | '(' expr ')'
    """

    _token = re.compile(r"\s*(\d+|a|\^|\*|\+|-|\(|\)|\[|\]|,)")

    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.strip()
        while pos < len(stripped):
            m = self._token.match(stripped, pos)
            if not m:
                raise UsageError(f"cannot parse element {text!r} near {stripped[pos:]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self, expected=None):
        tok = self._peek()
        if tok is None or (expected is not None and tok != expected):
            raise UsageError(f"cannot parse element {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> int:
        if not self.tokens:
            raise UsageError("empty element text")
        value = self._expr()
        if self._peek() is not None:
            raise UsageError(f"trailing input in element {self.text!r}")
        return value

    def _expr(self) -> int:
        r = self.ring
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = r.add_codes(value, rhs if op == "+" else r.neg_code(rhs))
        return value

    def _term(self) -> int:
        value = self._factor()
        while self._peek() == "*":
            self._take()
            value = self.ring.mul_codes(value, self._factor())
        return value

    def _int(self) -> int:
        tok = self._take()
        if not tok.isdigit():
            raise UsageError(f"expected an integer in {self.text!r}")
        return int(tok)

    def _factor(self) -> int:
        r = self.ring
        tok = self._peek()
        if tok == "-":
            self._take()
            return r.neg_code(self._factor())
        if tok == "(":
            self._take()
            value = self._expr()
            self._take(")")
            return value
        if tok == "[":
            self._take()
            vec = []
            while True:
                neg = False
                if self._peek() == "-":
                    self._take()
                    neg = True
                k = self._int()
                vec.append(-k if neg else k)
                if self._peek() == ",":
                    self._take()
                    continue
                self._take("]")
                break
            return r._from_vector(vec)
        if tok == "a":
            self._take()
            g = r.generator.code
            if self._peek() == "^":
                self._take()
                neg = False
                if self._peek() == "-":
                    self._take()
                    neg = True
                k = self._int()
                return r.pow_code(g, -k if neg else k)
            return g
        if tok is not None and tok.isdigit():
            return r._from_int(self._int())
        raise UsageError(f"cannot parse element {self.text!r}")


@dataclass(frozen=True)
class Element:
    """An element of a :class:`RingSpec`, always in reduced form."""

    ring: RingSpec
    code: int

    @property
    def vector(self) -> tuple[int, ...]:
        """Prime-field coefficient vector (GF) or the residue (Z_n)."""
        return self.ring.digits(self.code)

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self.ring._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return self.ring(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.add_codes(self.code, other.code))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring.neg_code(self.code))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.mul_codes(self.code, other.code))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return Element(self.ring, self.ring.pow_code(self.code, e))

    def __bool__(self) -> bool:
        return self.code != 0

    def is_unit(self) -> bool:
        return self.ring.is_unit_code(self.code)

    def inverse(self) -> "Element":
        return Element(self.ring, self.ring.inverse_code(self.code))

    def __str__(self) -> str:
        return self.ring.format_code(self.code)

    def __repr__(self) -> str:
        return f"<{self} in {self.ring}>"


def _same_ring(a: Element, b: Element) -> RingSpec:
    if a.ring != b.ring:
        raise UsageError(f"ring mismatch: {a.ring} vs {b.ring}")
    return a.ring


def add(a: Element, b: Element) -> Element:
    ring = _same_ring(a, b)
    return Element(ring, ring.add_codes(a.code, b.code))


def mul(a: Element, b: Element) -> Element:
    ring = _same_ring(a, b)
    return Element(ring, ring.mul_codes(a.code, b.code))


def neg(a: Element) -> Element:
    return -a


def inverse(a: Element) -> Element:
    return a.inverse()


def enumerate_elements(ring: RingSpec, cap: int = ENUMERATION_CAP) -> list[Element]:
    """Every element exactly once, in code order (0, 1, ...)."""
    if ring.size > cap:
        raise CapExceededError(f"{ring} has {ring.size} elements, above the enumeration cap {cap}")
    return [Element(ring, c) for c in range(ring.size)]


def iter_codes(ring: RingSpec, cap: int = ENUMERATION_CAP) -> Iterator[int]:
    if ring.size > cap:
        raise CapExceededError(f"{ring} has {ring.size} elements, above the enumeration cap {cap}")
    return iter(range(ring.size))


# ---------------------------------------------------------------------------
# automorphisms

_NAMED_AUTOS = {
    "id": (0, 0),
    "rho": (1, 0),
    "theta": (0, 1),
    "rhotheta": (1, 1),
    "rho^-1": (-1, 0),
    "theta^-1": (0, -1),
}


def automorphism_order(ring: RingSpec, frobenius_power: int) -> int:
    """Least d >= 1 with (Frob^power)^d = id."""
    if ring.kind == "zn" or ring.m == 1:
        return 1
    return ring.m // math.gcd(ring.m, frobenius_power % ring.m)


@dataclass(frozen=True)
class AutomorphismPair:
    """ρ = Frob^rho_power and θ = Frob^theta_power (identity pair on Z_n)."""

    rho_power: int = 0
    theta_power: int = 0

    def validate(self, ring: RingSpec) -> None:
        if self.rho_power < 0 or self.theta_power < 0:
            raise UsageError("Frobenius powers must be >= 0")
        if ring.kind == "zn" and (self.rho_power or self.theta_power):
            raise UsageError("Z_n only carries the identity automorphism pair")

    def exponent(self, i: int, j: int) -> int:
        """Frobenius exponent of ρ^i θ^j."""
        return self.rho_power * i + self.theta_power * j

    def apply(self, a: Element, which: str | tuple[int, int] = "rho") -> Element:
        """Apply ``which`` to ``a``: a name from {id, rho, theta, rhotheta,
        rho^-1, theta^-1} or an integer pair (i, j) meaning ρ^i θ^j."""
        i, j = _NAMED_AUTOS[which] if isinstance(which, str) else which
        return Element(a.ring, a.ring.frobenius_code(a.code, self.exponent(i, j)))

    def apply_code(self, ring: RingSpec, code: int, i: int, j: int) -> int:
        return ring.frobenius_code(code, self.exponent(i, j))

    def order(self, ring: RingSpec, which: str = "rho") -> int:
        i, j = _NAMED_AUTOS[which]
        return automorphism_order(ring, self.exponent(i, j))

    def rho_order(self, ring: RingSpec) -> int:
        return automorphism_order(ring, self.rho_power)

    def theta_order(self, ring: RingSpec) -> int:
        return automorphism_order(ring, self.theta_power)

    def is_fixed(self, a: Element, *which: str) -> bool:
        """True iff every listed automorphism (default: rho and theta) fixes ``a``."""
        return all(self.apply(a, w) == a for w in (which or ("rho", "theta")))

    def twist_tables(self, ring: RingSpec, rows: int, cols: int) -> np.ndarray:
        """``out[i, j]`` is the code permutation of ρ^i θ^j."""
        fr = ring.frobenius_tables
        m = fr.shape[0]
        ii, jj = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
        return fr[(self.rho_power * ii + self.theta_power * jj) % m]
