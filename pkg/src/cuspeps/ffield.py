"""Finite field towers GF(p^k) in Zech-logarithm form.

Every field is built once per (p, k) and carries a fixed primitive generator
g, the root of the chosen modulus.  Elements are discrete logs: the integer
``e`` stands for ``g^e`` and the sentinel :data:`ZERO` stands for 0.  With a
Zech table (``zech[l] = log(1 + g^l)``) addition is a single lookup, and the
group sums downstream are multiplication-heavy, so this representation keeps
the inner loops cheap.

The modulus is the primitive monic polynomial of degree k whose coefficient
vector, read as an integer ``sum(c_i * p^i)``, is smallest.  That makes every
table reproducible from (p, k) alone.

Subfield embeddings GF(p^a) -> GF(p^b) (a | b) send the small generator to
the smallest power ``g_b^{t*(p^b-1)/(p^a-1)}`` that is a root of the small
modulus; this is a genuine field embedding (additive as well as
multiplicative), whereas bare exponent scaling is only guaranteed to respect
multiplication.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import gcd

from .cyclo import CycloNumber, root_of_unity

__all__ = [
    "ZERO",
    "FieldSpec",
    "build_field",
    "subfield_embed",
    "AdditiveChar",
    "MultChar",
    "is_regular_char",
    "frobenius_orbit",
]

ZERO = -1  # log encoding of the zero element
DEFAULT_MAX_Q = 4096

_CACHE_ENV = "CUSPEPS_CACHE_DIR"
_FIELDS: dict[tuple[int, int], "FieldSpec"] = {}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _mul_by_x(vec: list[int], modulus: list[int], p: int) -> list[int]:
    """Multiply an element of F_p[x]/(f) by x; vec low-degree-first, f monic."""
    k = len(vec)
    lead = vec[-1]
    out = [0] + vec[:-1]
    if lead:
        for i in range(k):
            out[i] = (out[i] - lead * modulus[i]) % p
    return out


def _power_table(modulus: list[int], p: int, k: int) -> list[tuple[int, ...]] | None:
    """Successive powers 1, x, x^2, ... mod f, or None if x is not primitive."""
    q = p**k
    one = tuple([1] + [0] * (k - 1))
    powers = [one]
    cur = list(one)
    for _ in range(q - 2):
        cur = _mul_by_x(cur, modulus, p)
        t = tuple(cur)
        if t == one:
            return None
        powers.append(t)
    if tuple(_mul_by_x(cur, modulus, p)) != one:
        return None
    return powers


class FieldSpec:
    """GF(p^k) with Zech-log arithmetic; immutable once constructed."""

    __slots__ = (
        "p",
        "k",
        "q",
        "modulus",
        "zech",
        "powers",
        "_log",
        "_prime_embed",
        "_prime_decode",
        "_embed_mult",
        "_neg_shift",
    )

    def __init__(self, p: int, k: int, modulus: tuple[int, ...], powers: list[tuple[int, ...]]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.powers = tuple(powers)
        self._log = {vec: e for e, vec in enumerate(powers)}
        zech = []
        for l in range(self.q - 1):
            s = tuple((a + b) % p for a, b in zip(powers[l], powers[0]))
            zech.append(ZERO if not any(s) else self._log[s])
        self.zech = tuple(zech)
        # c * 1 for c = 0..p-1, as logs
        embed = [ZERO]
        for c in range(1, p):
            vec = tuple([c] + [0] * (k - 1))
            embed.append(self._log[vec])
        self._prime_embed = tuple(embed)
        self._prime_decode = {e: c for c, e in enumerate(embed)}
        self._embed_mult: dict[tuple[int, int], int] = {}
        self._neg_shift = 0 if p == 2 else (self.q - 1) // 2

    # -- arithmetic on logs --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        z = self.zech[(b - a) % (self.q - 1)]
        if z == ZERO:
            return ZERO
        return (a + z) % (self.q - 1)

    def neg(self, a: int) -> int:
        if a == ZERO:
            return ZERO
        return (a + self._neg_shift) % (self.q - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.q - 1)

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("inverting the zero element")
        return (-a) % (self.q - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == ZERO:
            if n <= 0:
                raise ZeroDivisionError("0 cannot be raised to a nonpositive power")
            return ZERO
        return (a * n) % (self.q - 1)

    def frobenius(self, a: int, i: int = 1) -> int:
        """a -> a^(p^i)."""
        return self.pow(a, pow(self.p, i, self.q - 1) if a != ZERO else 1)

    def one(self) -> int:
        return 0

    def from_int(self, c: int) -> int:
        """The prime-field element c*1 as a log."""
        return self._prime_embed[c % self.p]

    def to_int(self, a: int) -> int:
        """Inverse of from_int; raises if a is not in the prime field."""
        try:
            return self._prime_decode[a]
        except KeyError:
            raise ValueError("element does not lie in the prime field") from None

    def trace_to_prime(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        acc = ZERO
        for i in range(self.k):
            acc = self.add(acc, self.frobenius(a, i))
        return self._prime_decode[acc]

    # -- enumeration and formatting --------------------------------------

    def elements(self):
        """All elements: 0 first, then g^0, g^1, ... (the canonical order)."""
        yield ZERO
        yield from range(self.q - 1)

    @staticmethod
    def element_key(a: int) -> int:
        return 0 if a == ZERO else a + 1

    @staticmethod
    def format_element(a: int) -> str:
        return "0" if a == ZERO else f"g^{a}"

    @staticmethod
    def parse_element(s: str) -> int:
        if s == "0":
            return ZERO
        if s.startswith("g^"):
            return int(s[2:])
        raise ValueError(f"bad element literal {s!r}")

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.k}))"

    def __hash__(self):
        return hash((self.p, self.k))

    def __eq__(self, other):
        return self is other


def _cached_modulus(p: int, k: int) -> tuple[int, ...] | None:
    root = os.environ.get(_CACHE_ENV)
    if not root:
        return None
    path = os.path.join(root, f"field_p{p}_k{k}.json")
    try:
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
        return tuple(int(c) for c in data["modulus"])
    except (OSError, ValueError, KeyError):
        return None


def _store_modulus(p: int, k: int, modulus: tuple[int, ...]) -> None:
    root = os.environ.get(_CACHE_ENV)
    if not root:
        return
    try:
        os.makedirs(root, exist_ok=True)
        path = os.path.join(root, f"field_p{p}_k{k}.json")
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            json.dump({"p": p, "k": k, "modulus": list(modulus)}, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        pass


def build_field(p: int, k: int = 1, max_q: int = DEFAULT_MAX_Q) -> FieldSpec:
    """Construct (or fetch) GF(p^k) with a verified primitive modulus."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > max_q:
        raise ValueError(f"field size {p**k} exceeds the configured bound {max_q}")
    key = (p, k)
    if key in _FIELDS:
        return _FIELDS[key]

    cached = _cached_modulus(p, k)
    candidates = []
    if cached is not None:
        candidates.append(cached)
    for val in range(1, p**k):
        coeffs = tuple((val // p**i) % p for i in range(k))
        if coeffs[0] == 0:
            continue
        candidates.append(coeffs + (1,))
    for cand in candidates:
        if len(cand) != k + 1 or cand[-1] != 1:
            continue
        powers = _power_table(list(cand), p, k)
        if powers is not None:
            spec = FieldSpec(p, k, cand, powers)
            _FIELDS[key] = spec
            _store_modulus(p, k, cand)
            return spec
    raise AssertionError("no primitive polynomial found; this cannot happen")


def _embedding_multiplier(src: FieldSpec, dst: FieldSpec) -> int:
    """Exponent multiplier of the canonical embedding src -> dst."""
    if src.p != dst.p:
        raise ValueError("fields have different characteristic")
    if dst.k % src.k:
        raise ValueError(f"GF({src.p}^{src.k}) does not embed in GF({dst.p}^{dst.k})")
    key = (dst.p, dst.k)
    if key in src._embed_mult:
        return src._embed_mult[key]
    step = (dst.q - 1) // (src.q - 1)
    for t in range(1, src.q):
        if gcd(t, src.q - 1) != 1:
            continue
        h = (t * step) % (dst.q - 1)
        # Horner evaluation of the source modulus at g_dst^h
        acc = ZERO
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, h), dst.from_int(c))
        if acc == ZERO:
            src._embed_mult[key] = h
            return h
    raise AssertionError("no compatible embedding found; this cannot happen")


def subfield_embed(x: int, src: FieldSpec, dst: FieldSpec) -> int:
    """Image of x under the canonical embedding GF(p^a) -> GF(p^b), a | b."""
    if src is dst:
        return x
    mult = _embedding_multiplier(src, dst)
    if x == ZERO:
        return ZERO
    return (x * mult) % (dst.q - 1)


@dataclass(frozen=True)
class AdditiveChar:
    """psi_a(x) = zeta_p^{Tr(a*x)}, the additive character of GF(q) shifted by a."""

    field: FieldSpec
    a: int = 0  # log of the shift; 0 is the element 1

    def eval(self, x: int) -> CycloNumber:
        t = self.field.mul(self.a, x)
        if t == ZERO:
            return root_of_unity(1, 0)
        return root_of_unity(self.field.p, self.field.trace_to_prime(t))

    def conjugate(self) -> "AdditiveChar":
        return AdditiveChar(self.field, self.field.neg(self.a))

    @property
    def nontrivial(self) -> bool:
        return self.a != ZERO


@dataclass(frozen=True)
class MultChar:
    """theta_c(g^j) = zeta_{q-1}^{c*j}, a character of GF(q)^x."""

    field: FieldSpec
    c: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c", self.c % (self.field.q - 1))

    def eval(self, x: int) -> CycloNumber:
        if x == ZERO:
            raise ValueError("multiplicative characters are not defined at 0")
        return root_of_unity(self.field.q - 1, self.c * x)

    def conjugate(self) -> "MultChar":
        return MultChar(self.field, -self.c)

    def __mul__(self, other: "MultChar") -> "MultChar":
        if self.field is not other.field:
            raise ValueError("characters live on different fields")
        return MultChar(self.field, self.c + other.c)

    @property
    def trivial(self) -> bool:
        return self.c == 0


def frobenius_orbit(c: int, q: int, modulus: int) -> tuple[int, ...]:
    """Orbit of the exponent c under multiplication by q, sorted."""
    orbit = {c % modulus}
    cur = (c * q) % modulus
    while cur not in orbit:
        orbit.add(cur)
        cur = (cur * q) % modulus
    return tuple(sorted(orbit))


def is_regular_char(theta: MultChar, q: int) -> bool:
    """True when the Frobenius orbit of theta has full length n (q^n = |field|)."""
    big = theta.field.q
    n, qq = 0, 1
    while qq < big:
        qq *= q
        n += 1
    if qq != big:
        raise ValueError(f"{big} is not a power of {q}")
    return len(frobenius_orbit(theta.c, q, big - 1)) == n
