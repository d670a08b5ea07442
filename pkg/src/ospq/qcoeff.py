"""Exact coefficient arithmetic for the deformed algebras.

All symbolic dependence on the deformation parameter is carried by Laurent
polynomials in s = q^(1/2) with coefficients in Q(sqrt 2):

    QCoeff : sum_e (r_e + w_e*sqrt(2)) s^e,  e in Z

Many structure constants are fractions with denominators that are products
of the two coprime binomials

    Dp = s + s^-1        Dm = s - s^-1        (note Dp*Dm = q - q^-1),

so the working coefficient type is

    QFrac  : QCoeff / (Dp^dp * Dm^dm),  dp, dm >= 0,

kept in reduced form (the numerator is divisible by neither binomial unless
the corresponding exponent is zero).  Since Dp ~ (s^2+1)/s and
Dm ~ (s^2-1)/s share no roots, the reduced (num, dp, dm) triple is a
canonical form and equality is structural.

Evaluation at the root of unity q = exp(i*pi/k) substitutes
s = exp(i*pi/(2k)); `eval_one` evaluates at s = 1 (the classical point),
which is exact (a Q2 number) whenever no Dm factor survives reduction.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .scalars import Q2

ScalarLike = Union[int, Fraction, Q2]


def _as_q2(x: object) -> Q2 | None:
    if isinstance(x, Q2):
        return x
    if isinstance(x, (int, Fraction)):
        return Q2(x)
    return None


class QCoeff:
    """Exact Laurent polynomial in s = q^(1/2) over Q(sqrt 2)."""

    __slots__ = ("_t",)

    def __init__(self, terms: dict[int, Q2] | None = None) -> None:
        # strip exact zeros so representation is unique
        self._t: dict[int, Q2] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self._t[e] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "QCoeff":
        return cls()

    @classmethod
    def one(cls) -> "QCoeff":
        return cls({0: Q2(1)})

    @classmethod
    def from_scalar(cls, x: ScalarLike) -> "QCoeff":
        c = _as_q2(x)
        if c is None:
            raise TypeError(f"cannot build QCoeff from {type(x).__name__}")
        return cls({0: c})

    @classmethod
    def s_pow(cls, e: int, coeff: ScalarLike = 1) -> "QCoeff":
        """The monomial coeff * s^e."""
        c = _as_q2(coeff)
        if c is None:
            raise TypeError("coefficient must be rational or Q2")
        return cls({e: c})

    # -- inspection ------------------------------------------------------

    def terms(self) -> list[tuple[int, Q2]]:
        """(exponent, coefficient) pairs sorted by descending exponent."""
        return sorted(self._t.items(), key=lambda p: -p[0])

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def coeff(self, e: int) -> Q2:
        return self._t.get(e, Q2(0))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: object) -> "QCoeff":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for e, c in o._t.items():
            c2 = t.get(e)
            if c2 is None:
                t[e] = c
            else:
                s = c2 + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        out = QCoeff.__new__(QCoeff)
        out._t = t
        return out

    __radd__ = __add__

    def __neg__(self) -> "QCoeff":
        out = QCoeff.__new__(QCoeff)
        out._t = {e: -c for e, c in self._t.items()}
        return out

    def __sub__(self, other: object) -> "QCoeff":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "QCoeff":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "QCoeff":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t: dict[int, Q2] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in o._t.items():
                e = e1 + e2
                p = c1 * c2
                c = t.get(e)
                if c is None:
                    t[e] = p
                else:
                    s = c + p
                    if s:
                        t[e] = s
                    else:
                        del t[e]
        out = QCoeff.__new__(QCoeff)
        out._t = {e: c for e, c in t.items() if c}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QCoeff":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QCoeff.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @staticmethod
    def _coerce(x: object) -> "QCoeff | None":
        if isinstance(x, QCoeff):
            return x
        c = _as_q2(x)
        if c is not None:
            return QCoeff({0: c})
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    # -- involutions and evaluation ------------------------------------

    def conjugate(self) -> "QCoeff":
        """The bar involution s -> s^-1 (coefficients in Q(sqrt 2) are real)."""
        out = QCoeff.__new__(QCoeff)
        out._t = {-e: c for e, c in self._t.items()}
        return out

    def eval_root(self, k: int) -> complex:
        """Numerical value at s = exp(i*pi/(2k)), i.e. q = exp(i*pi/k)."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        z = 0j
        for e, c in self._t.items():
            z += float(c) * cmath.exp(1j * cmath.pi * e / (2 * k))
        return z

    def eval_one(self) -> Q2:
        """Exact value at s = 1 (the classical point q = 1)."""
        out = Q2(0)
        for c in self._t.values():
            out = out + c
        return out

    def eval_scalar(self, s_val: complex) -> complex:
        """Numerical value at an arbitrary nonzero s."""
        z = 0j
        for e, c in self._t.items():
            z += float(c) * s_val**e
        return z

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [
                [e, [c.r.numerator, c.r.denominator], [c.w.numerator, c.w.denominator]]
                for e, c in sorted(self._t.items())
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "QCoeff":
        t: dict[int, Q2] = {}
        for e, (rn, rd), (wn, wd) in data["terms"]:
            t[int(e)] = Q2(Fraction(rn, rd), Fraction(wn, wd))
        return cls(t)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        chunks: list[str] = []
        for e, c in self.terms():
            if c.w == 0 and c.r != 0:
                ctxt = str(c.r)
            elif c.r == 0 and c.w != 0:
                ctxt = "r2" if c.w == 1 else ("-r2" if c.w == -1 else f"{c.w}*r2")
            else:
                ctxt = f"({c})"
            if e == 0:
                term = ctxt
            else:
                spow = "s" if e == 1 else f"s^{e}"
                if ctxt == "1":
                    term = spow
                elif ctxt == "-1":
                    term = f"-{spow}"
                else:
                    term = f"{ctxt} {spow}"
            chunks.append(term)
        out = chunks[0]
        for t in chunks[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"QCoeff({self})"


# the two canonical denominator binomials
DPLUS = QCoeff({1: Q2(1), -1: Q2(1)})    # s + s^-1
DMINUS = QCoeff({1: Q2(1), -1: Q2(-1)})  # s - s^-1
Q_MINUS_QINV = DPLUS * DMINUS            # q - q^-1 = s^2 - s^-2


def _laurent_divmod(num: QCoeff, den: QCoeff) -> tuple[QCoeff, QCoeff]:
    """Long division num = quo*den + rem in the Laurent ring.

    Shift both operands to ordinary polynomials, divide, and shift back:
    Laurent units s^e are invertible so the division is well defined.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if num.is_zero():
        return QCoeff.zero(), QCoeff.zero()
    mn, Mn = num.min_exp(), num.max_exp()
    md, Md = den.min_exp(), den.max_exp()
    P = [num.coeff(e) for e in range(mn, Mn + 1)]
    D = [den.coeff(e) for e in range(md, Md + 1)]
    lead = D[-1]
    if len(P) < len(D):
        return QCoeff.zero(), num
    Qc: list[Q2] = [Q2(0)] * (len(P) - len(D) + 1)
    R = list(P)
    for i in range(len(Qc) - 1, -1, -1):
        c = R[i + len(D) - 1] / lead
        Qc[i] = c
        if c:
            for j in range(len(D)):
                R[i + j] = R[i + j] - c * D[j]
    quo = QCoeff({i + mn - md: c for i, c in enumerate(Qc) if c})
    rem = QCoeff({i + mn: c for i, c in enumerate(R[: len(D) - 1]) if c})
    return quo, rem


def _divide_exact(num: QCoeff, den: QCoeff) -> QCoeff | None:
    quo, rem = _laurent_divmod(num, den)
    return quo if rem.is_zero() else None


def _divisible_by_dplus(num: QCoeff) -> bool:
    """Cheap exact test for divisibility by s + s^-1.

    After clearing the Laurent shift the divisor is x^2 + 1, irreducible
    over Q(sqrt 2), so divisibility is equivalent to vanishing at x = i:
    both the alternating even-index and odd-index coefficient sums must be
    zero.  Only Q2 additions are needed, no division.
    """
    if num.is_zero():
        return True
    mn = num.min_exp()
    re = Q2(0)
    im = Q2(0)
    for e, c in num._t.items():
        t = e - mn
        if t % 2 == 0:
            re = re + c if (t // 2) % 2 == 0 else re - c
        else:
            im = im + c if ((t - 1) // 2) % 2 == 0 else im - c
    return not re and not im


def _divisible_by_dminus(num: QCoeff) -> bool:
    """Cheap exact test for divisibility by s - s^-1 (i.e. by x^2 - 1:
    the polynomial must vanish at x = 1 and x = -1)."""
    if num.is_zero():
        return True
    mn = num.min_exp()
    p1 = Q2(0)
    m1 = Q2(0)
    for e, c in num._t.items():
        p1 = p1 + c
        m1 = m1 + c if (e - mn) % 2 == 0 else m1 - c
    return not p1 and not m1


class QFrac:
    """A QCoeff divided by the canonical denominator Dp^dp * Dm^dm.

    Instances are reduced on construction; equality is then structural
    because Dp and Dm are coprime non-units of the Laurent ring.
    """

    __slots__ = ("num", "dp", "dm")

    def __init__(self, num: QCoeff | ScalarLike, dp: int = 0, dm: int = 0) -> None:
        if not isinstance(num, QCoeff):
            num = QCoeff.from_scalar(num)
        if dp < 0 or dm < 0:
            raise ValueError("denominator exponents must be nonnegative")
        if num.is_zero():
            num, dp, dm = QCoeff.zero(), 0, 0
        else:
            while dp > 0 and _divisible_by_dplus(num):
                num, _ = _laurent_divmod(num, DPLUS)
                dp -= 1
            while dm > 0 and _divisible_by_dminus(num):
                num, _ = _laurent_divmod(num, DMINUS)
                dm -= 1
        self.num = num
        self.dp = dp
        self.dm = dm

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "QFrac":
        return cls(QCoeff.zero())

    @classmethod
    def one(cls) -> "QFrac":
        return cls(QCoeff.one())

    @staticmethod
    def _coerce(x: object) -> "QFrac | None":
        if isinstance(x, QFrac):
            return x
        if isinstance(x, QCoeff):
            return QFrac(x)
        c = _as_q2(x)
        if c is not None:
            return QFrac(QCoeff({0: c}))
        return None

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.dp == o.dp and self.dm == o.dm

    def __hash__(self) -> int:
        return hash((self.num, self.dp, self.dm))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "QFrac":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        dp = max(self.dp, o.dp)
        dm = max(self.dm, o.dm)
        a = self.num * DPLUS ** (dp - self.dp) * DMINUS ** (dm - self.dm)
        b = o.num * DPLUS ** (dp - o.dp) * DMINUS ** (dm - o.dm)
        return QFrac(a + b, dp, dm)

    __radd__ = __add__

    def __neg__(self) -> "QFrac":
        out = QFrac.__new__(QFrac)
        out.num, out.dp, out.dm = -self.num, self.dp, self.dm
        if out.num.is_zero():
            out.dp = out.dm = 0
        return out

    def __sub__(self, other: object) -> "QFrac":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "QFrac":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "QFrac":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QFrac(self.num * o.num, self.dp + o.dp, self.dm + o.dm)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QFrac":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QFrac.one()
        for _ in range(n):
            out = out * self
        return out

    # -- involutions and evaluation ------------------------------------

    def conjugate(self) -> "QFrac":
        """Bar involution s -> s^-1.

        Dp is invariant while Dm flips sign, so the conjugate picks up
        (-1)^dm on the numerator; reduction state is unchanged.
        """
        out = QFrac.__new__(QFrac)
        n = self.num.conjugate()
        if self.dm % 2:
            n = -n
        out.num, out.dp, out.dm = n, self.dp, self.dm
        return out

    def eval_root(self, k: int) -> complex:
        if k < 1:
            raise ValueError("k must be a positive integer")
        z = self.num.eval_root(k)
        s = cmath.exp(1j * cmath.pi / (2 * k))
        den = (s + 1 / s) ** self.dp * (s - 1 / s) ** self.dm
        return z / den

    def eval_one(self) -> Q2:
        """Exact value at s = 1; Dp(1) = 2, while a surviving Dm factor
        would be a pole, so that raises unless the fraction is zero."""
        if self.is_zero():
            return Q2(0)
        if self.dm > 0:
            raise ValueError("pole at s = 1 (Dm factor in denominator)")
        v = self.num.eval_one()
        return v / Fraction(2) ** self.dp

    def eval_scalar(self, s_val: complex) -> complex:
        z = self.num.eval_scalar(s_val)
        den = (s_val + 1 / s_val) ** self.dp * (s_val - 1 / s_val) ** self.dm
        return z / den

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "dp": self.dp, "dm": self.dm}

    @classmethod
    def from_json(cls, data: dict) -> "QFrac":
        return cls(QCoeff.from_json(data["num"]), int(data["dp"]), int(data["dm"]))

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if self.dp == 0 and self.dm == 0:
            return str(self.num)
        dens = []
        if self.dp:
            dens.append("(s+s^-1)" + (f"^{self.dp}" if self.dp > 1 else ""))
        if self.dm:
            dens.append("(s-s^-1)" + (f"^{self.dm}" if self.dm > 1 else ""))
        return f"({self.num}) / ({' '.join(dens)})"

    def __repr__(self) -> str:
        return f"QFrac({self})"


# frequently used constants
C_WEYL = QFrac(QCoeff.from_scalar(2), 1, 0)          # c = 2/(s+s^-1)
INV_QMQI = QFrac(QCoeff.one(), 1, 1)                 # 1/(q - q^-1)
HALF = QFrac(QCoeff.from_scalar(Fraction(1, 2)))


def q_int(m: int) -> QCoeff:
    """The symmetric q-integer [m] = (q^m - q^-m)/(q - q^-1).

    Laurent-polynomial form: q^(m-1) + q^(m-3) + ... + q^(1-m); [0] = 0 and
    [-m] = -[m].
    """
    if m < 0:
        return -q_int(-m)
    t = {2 * (m - 1 - 2 * j): Q2(1) for j in range(m)}
    return QCoeff(t)


def q_factorial(m: int) -> QCoeff:
    """[m]! = [1][2]...[m]; [0]! = 1."""
    if m < 0:
        raise ValueError("q-factorial needs m >= 0")
    out = QCoeff.one()
    for t in range(2, m + 1):
        out = out * q_int(t)
    return out


def fock_norm_factor(m: int) -> QFrac:
    """Squared norm (2/(s+s^-1))^m * [m]! of the unnormalized level-m vector.

    Note this is the *reciprocal* of the normalization constant quoted in
    some conventions (which divide by this quantity rather than multiply);
    consistency with the ladder action and the vacuum pairing fixes the
    present choice.  At q = exp(i*pi/k) the value is real, positive for
    0 <= m <= k-1, and zero at m = k.
    """
    if m < 0:
        raise ValueError("level must be nonnegative")
    return QFrac(QCoeff.from_scalar(2 ** m) * q_factorial(m), m, 0)


def eval_root(x: QCoeff | QFrac | ScalarLike, k: int) -> complex:
    """Evaluate any coefficient-like object at q = exp(i*pi/k)."""
    if isinstance(x, (QCoeff, QFrac)):
        return x.eval_root(k)
    c = _as_q2(x)
    if c is None:
        raise TypeError(f"cannot evaluate {type(x).__name__}")
    return complex(c)
