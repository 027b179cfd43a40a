"""Small shared helpers: canonical JSON, digests, exact square-root bounds."""

from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction


def canonical_json(obj) -> str:
    """Serialize with sorted keys and fixed separators so equal values
    always produce equal bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_of(obj) -> str:
    return sha256_hex(canonical_json(obj).encode("utf-8"))


def fraction_str(x) -> str:
    """Exact decimal-string form: "8" for integers, "8/3" otherwise."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


def sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0: exact when x is a
    perfect square of a rational with the same denominator."""
    if x < 0:
        raise ValueError("sqrt of negative")
    n, d = x.numerator, x.denominator
    # sqrt(n/d) = sqrt(n*d)/d
    s = math.isqrt(n * d)
    if s * s == n * d:
        return Fraction(s, d)
    return Fraction(s + 1, d)
