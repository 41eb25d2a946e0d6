"""Exact rational arithmetic backend.

gmpy2.mpq is used when available (roughly an order of magnitude faster on
dense convolutions); fractions.Fraction is the drop-in fallback.  Both
expose numerator/denominator and hash identically for equal values.
"""

try:
    from gmpy2 import mpq as Rat

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

    _BACKEND = "fractions"

R0 = Rat(0)
R1 = Rat(1)


def rat(num, den=1):
    return Rat(num, den)


def is_rat(x):
    return isinstance(x, type(R0))


def rat_str(x):
    """Canonical text form used in reports: '3', '-1/2'."""
    n, d = x.numerator, x.denominator
    if d == 1:
        return str(n)
    return "%d/%d" % (n, d)


def parse_rat(text):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Rat(int(num), int(den))
    return Rat(int(text))
