"""Exact scalar arithmetic: rationals and the Gaussian rationals Q(i).

Every quantity in the package is a ``QI`` value (re + i*im with exact
rational parts), so equality checks downstream are decidable and bit-exact.
"""

from __future__ import annotations

import re as _re

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _Q

__all__ = ["Q", "QI", "qi", "rational", "parse_scalar", "RationalSampler"]

Q = _Q


def rational(x):
    """Coerce an int/str/rational to the underlying exact rational type."""
    return _Q(x)


_R0 = _Q(0)
_R1 = _Q(1)


class QI:
    """An element of Q(i), held as exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _Q(re)
        self.im = _Q(im)

    @staticmethod
    def _raw(re, im):
        z = QI.__new__(QI)
        z.re = re
        z.im = im
        return z

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        other = qi(other)
        return QI._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = qi(other)
        return QI._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return qi(other).__sub__(self)

    def __neg__(self):
        return QI._raw(-self.re, -self.im)

    def __mul__(self, other):
        other = qi(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return QI._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = qi(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, -other.im
        return QI._raw((a * c - b * d) / n, (a * d + b * c) / n)

    def __rtruediv__(self, other):
        return qi(other).__truediv__(self)

    def __pow__(self, k):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        """The complex conjugation tau: re + i*im -> re - i*im."""
        return QI._raw(self.re, -self.im)

    # -- predicates ------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self):
        return not self.im

    def __eq__(self, other):
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_R0))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    # -- rendering --------------------------------------------------------
    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return str(re)
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = "%s i" % im
        if not re:
            return ims
        if im < 0:
            return "%s - %s" % (re, ims.lstrip("-"))
        return "%s + %s" % (re, ims)

    def __repr__(self):
        return "QI(%s)" % self


def qi(x, im=None):
    """Coerce to QI; ``qi(a, b)`` builds a + b*i."""
    if im is not None:
        return QI._raw(_Q(x), _Q(im))
    if isinstance(x, QI):
        return x
    return QI._raw(_Q(x), _R0)


ZERO = qi(0)
ONE = qi(1)
I = qi(0, 1)

_TERM = _re.compile(r"^\s*([+-]?)\s*([^+-]*?)\s*$")


def parse_scalar(text):
    """Parse the canonical rendering ``a/b + c/d i`` back into a QI value."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    # split into signed terms at top level
    terms = []
    buf = ""
    sign = 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "+-" and buf.strip():
            terms.append((sign, buf.strip()))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            buf += ch
        i += 1
    terms.append((sign, buf.strip()))
    re_part = _R0
    im_part = _R0
    for sgn, t in terms:
        if not t:
            raise ValueError("malformed scalar %r" % text)
        if t.endswith("i"):
            body = t[:-1].strip()
            val = _Q(1) if body == "" else _Q(body.replace(" ", ""))
            im_part += sgn * val
        else:
            re_part += sgn * _Q(t.replace(" ", ""))
    return QI._raw(re_part, im_part)


class RationalSampler:
    """Seeded generator of small rationals (numerators/denominators <= 7).

    Keeping coefficients tiny keeps exact arithmetic fast in property sweeps,
    and a fixed seed makes every sweep reproducible.
    """

    def __init__(self, seed=0):
        import random

        self._rng = random.Random(seed)

    def randint(self, a, b):
        return self._rng.randint(a, b)

    def rational(self, nonzero=False):
        while True:
            n = self._rng.randint(-7, 7)
            if nonzero and n == 0:
                continue
            return _Q(n, self._rng.randint(1, 7))

    def qi(self, nonzero=False):
        while True:
            z = QI._raw(self.rational(), self.rational())
            if nonzero and not z:
                continue
            return z

    def choice(self, seq):
        return self._rng.choice(seq)

    def sample_indices(self, n, k):
        return [self._rng.randrange(n) for _ in range(k)]
