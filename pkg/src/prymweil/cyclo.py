"""Exact arithmetic in cyclotomic fields Q(zeta_n) and their finite products.

Elements are stored as dense coordinate vectors in the power basis
``1, z, ..., z^(phi(n)-1)`` reduced modulo the n-th cyclotomic polynomial,
so equality at a fixed conductor is plain tuple comparison. Nothing here
ever touches floating point; complex embeddings exist only as Galois
indices ``k`` acting by ``z -> z^k``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from . import linalg

Rat = Fraction

Scalar = Union[int, Fraction]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def units_mod(n: int) -> list[int]:
    """Representatives 1 <= k <= n of (Z/n)^*; ``[1]`` for n = 1."""
    if n == 1:
        return [1]
    return [k for k in range(1, n) if gcd(k, n) == 1]


# -- integer polynomials, coefficient tuples in ascending degree ------------

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(_trim(out))


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division by a monic integer polynomial ``b``."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (0,), tuple(_trim(rem))
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b):
                rem[i - db + j] -= c * bj
    return tuple(_trim(quot)), tuple(_trim(rem[:db] or [0]))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as ascending integer coefficients.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    num = (-1,) + (0,) * (n - 1) + (1,)
    den: tuple[int, ...] = (1,)
    for d in divisors(n)[:-1]:
        den = poly_mul(den, cyclotomic_polynomial(d))
    q, r = poly_divmod(num, den)
    if r != (0,):
        raise ArithmeticError(f"x^{n} - 1 not divisible by lower cyclotomic factors")
    return q


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Row e holds the nonzero integer coordinates (i, c) of z^e, 0 <= e < n."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            # z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
            cur = [c - top * cyc[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(exps: dict[int, int], n: int) -> list[int]:
    """Integer coordinates of sum c z^e over ``exps`` items e -> c."""
    table = _power_table(n)
    out = [0] * euler_phi(n)
    for e, c in exps.items():
        if c:
            for i, t in table[e % n]:
                out[i] += c * t
    return out


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-x for x in num], -den
    g = gcd(den, *num)
    if g > 1:
        return tuple(x // g for x in num), den // g
    return tuple(num), den


class CycloNum:
    """An element of Q(zeta_n).

    Stored as integer coordinates over one positive common denominator,
    kept in lowest terms, so the representation is canonical for a fixed
    conductor. ``coeffs`` gives the coordinates as fractions.

    Binary operations between equal conductors stay at that conductor.
    Mixed conductors are lifted to the lcm and the result is descended to
    the smallest conductor that still contains it.
    """

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, coeffs: Sequence[Scalar]):
        if conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {conductor}")
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"Q(zeta_{conductor}) needs {euler_phi(conductor)} coordinates, got {len(coeffs)}"
            )
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        self._set(conductor, *_normalize([int(c * den) for c in fr], den))

    def _set(self, conductor: int, num: tuple[int, ...], den: int) -> None:
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def _raw(cls, conductor: int, num: Sequence[int], den: int = 1) -> "CycloNum":
        obj = object.__new__(cls)
        obj._set(conductor, *_normalize(num, den))
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    # constructors

    @classmethod
    def rational(cls, q: Scalar, n: int = 1) -> "CycloNum":
        q = Fraction(q)
        num = [0] * euler_phi(n)
        num[0] = q.numerator
        return cls._raw(n, num, q.denominator)

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "CycloNum":
        """zeta_n ** e."""
        return _zeta_cached(n, e % n)

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, Scalar]) -> "CycloNum":
        """Sum of c * zeta_n^e over ``terms`` items ``e -> c``."""
        fr = {e: Fraction(c) for e, c in terms.items()}
        den = 1
        for c in fr.values():
            den = lcm(den, c.denominator)
        return cls._raw(n, _reduce({e: int(c * den) for e, c in fr.items()}, n), den)

    # basic predicates

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # conductor changes

    def lift(self, N: int) -> "CycloNum":
        """Same number viewed in Q(zeta_N); N must be a multiple of the conductor."""
        n = self.conductor
        if N % n:
            raise ValueError(f"cannot lift conductor {n} to {N}")
        if N == n:
            return self
        s = N // n
        return CycloNum._raw(N, _reduce({j * s: c for j, c in enumerate(self.num)}, N), self.den)

    def minimal(self) -> "CycloNum":
        """Descend to the smallest conductor d with self in Q(zeta_d)."""
        n = self.conductor
        if self.is_rational():
            return CycloNum._raw(1, self.num[:1], self.den)
        for d in divisors(n)[1:]:
            if d == n:
                return self
            fixing = [k for k in units_mod(n) if k % d == 1]
            if all(self.galois(k) == self for k in fixing):
                s = n // d
                basis = [_reduce({(j * s) % n: 1}, n) for j in range(euler_phi(d))]
                cols = [[Fraction(x) for x in col] for col in zip(*basis)]
                x = linalg.solve(cols, list(self.coeffs))
                if x is None:  # pragma: no cover - Galois theory guarantees a solution
                    raise ArithmeticError("descent failed")
                return CycloNum(d, x)
        return self

    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(other, self.conductor)
        return None

    # ring operations

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == self.conductor:
            return op(self, o)
        N = lcm(self.conductor, o.conductor)
        return op(self.lift(N), o.lift(N)).minimal()

    @staticmethod
    def _add(a: "CycloNum", b: "CycloNum") -> "CycloNum":
        if a.den == b.den:
            return CycloNum._raw(a.conductor, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycloNum._raw(
            a.conductor, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    @staticmethod
    def _mul(a: "CycloNum", b: "CycloNum") -> "CycloNum":
        acc: dict[int, int] = {}
        bn = [(j, y) for j, y in enumerate(b.num) if y]
        for i, x in enumerate(a.num):
            if x:
                for j, y in bn:
                    acc[i + j] = acc.get(i + j, 0) + x * y
        return CycloNum._raw(a.conductor, _reduce(acc, a.conductor), a.den * b.den)

    def __add__(self, other):
        return self._binary(other, CycloNum._add)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.conductor, [-x for x in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNum._raw(self.conductor, [x * q.numerator for x in self.num], self.den * q.denominator)
        return self._binary(other, CycloNum._mul)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Inverse via the norm: a^-1 = prod_{k != 1} sigma_k(a) / N(a)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        others = CycloNum.rational(1, self.conductor)
        for k in units_mod(self.conductor)[1:]:
            others = others * self.galois(k)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
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
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloNum.rational(1, self.conductor)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # Galois structure

    def galois(self, k: int) -> "CycloNum":
        """The automorphism zeta -> zeta^k."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"Galois index {k} is not a unit mod {n}")
        return CycloNum._raw(n, _reduce({(j * k) % n: c for j, c in enumerate(self.num)}, n), self.den)

    def conj(self) -> "CycloNum":
        return self.galois(-1 % self.conductor if self.conductor > 1 else 1)

    def trace(self) -> Fraction:
        total = [0] * len(self.num)
        for k in units_mod(self.conductor):
            for i, x in enumerate(self.galois(k).num):
                total[i] += x
        if any(total[1:]):  # pragma: no cover - the trace is Galois invariant
            raise ArithmeticError("trace is not rational")
        return Fraction(total[0], self.den)

    # comparison

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == self.conductor:
            return self.num == o.num and self.den == o.den
        N = lcm(self.conductor, o.conductor)
        a, b = self.lift(N), o.lift(N)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        m = self.minimal()
        if m.conductor == 1:
            return hash(Fraction(m.num[0], m.den))
        return hash((m.conductor, m.num, m.den))

    def __reduce__(self):
        return (CycloNum, (self.conductor, self.coeffs))

    def __repr__(self):
        return f"CycloNum({self.conductor}, {self})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@lru_cache(maxsize=4096)
def _zeta_cached(n: int, e: int) -> CycloNum:
    return CycloNum._raw(n, _reduce({e: 1}, n))


def cyclo_add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def cyclo_inv(a: CycloNum) -> CycloNum:
    return a.inverse()


def galois_apply(a: CycloNum, k: int) -> CycloNum:
    return a.galois(k)


def trace_to_Q(a: CycloNum, conductor: int | None = None) -> Fraction:
    """Trace from Q(zeta_n) down to Q.

    ``n`` is the conductor the element is stored at unless ``conductor``
    names a multiple of it, in which case the element is lifted first.
    """
    if conductor is not None:
        a = a.lift(conductor)
    return a.trace()


class EtaleAlg:
    """Finite product of cyclotomic fields Q(zeta_f1) x ... x Q(zeta_fr)."""

    def __init__(self, factors: Iterable[int]):
        self.factors = tuple(factors)
        for f in self.factors:
            if f < 1:
                raise ValueError(f"bad conductor {f}")

    @property
    def dimension(self) -> int:
        return sum(euler_phi(f) for f in self.factors)

    def element(self, parts: Sequence[CycloNum | Scalar]) -> tuple[CycloNum, ...]:
        if len(parts) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components, got {len(parts)}")
        out = []
        for f, x in zip(self.factors, parts):
            if isinstance(x, CycloNum):
                if x.conductor != f:
                    x = x.minimal()
                    if f % x.conductor:
                        raise ValueError(f"{x!r} does not lie in Q(zeta_{f})")
                    x = x.lift(f)
                out.append(x)
            else:
                out.append(CycloNum.rational(x, f))
        return tuple(out)

    def one(self) -> tuple[CycloNum, ...]:
        return self.element([1] * len(self.factors))

    def zero(self) -> tuple[CycloNum, ...]:
        return self.element([0] * len(self.factors))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def __repr__(self):
        return "EtaleAlg(" + " x ".join(f"Q(z{f})" if euler_phi(f) > 1 else "Q" for f in self.factors) + ")"
