"""Supernatural characteristics: finite prime-to-exponent maps denoting subgroups of Q.

A characteristic assigns to every prime an exponent in N ∪ {∞}: finitely many
primes are listed explicitly, all others take the default (0 or ∞).  It denotes
the subgroup {q ∈ Q : v_p(q) >= -chi(p) for all primes p}, which always
contains 1.  ``chi_z`` denotes Z, ``chi_q`` denotes Q, and e.g. chi(2)=∞ with
default 0 denotes the dyadic rationals Z[1/2].
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .errors import DomainError, UsageError

INF = math.inf

Exponent = Union[int, float]  # a natural number or INF


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...) in ascending order."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def valuation(q: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if q == 0:
        raise DomainError("valuation of 0 is undefined")
    q = Fraction(q)
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class Characteristic:
    """Canonical form: entries sorted by prime, no entry equal to the default."""

    default: Exponent
    primes: tuple[tuple[int, Exponent], ...]

    def exponent(self, p: int) -> Exponent:
        for q, e in self.primes:
            if q == p:
                return e
        return self.default

    @property
    def is_cyclic(self) -> bool:
        """True iff the denoted group is (1/m)Z for some m, i.e. has a least positive element."""
        return self.default == 0 and all(e != INF for _, e in self.primes)

    def modulus(self) -> int:
        """For a cyclic characteristic, the m with denoted group (1/m)Z."""
        if not self.is_cyclic:
            raise DomainError("modulus is only defined for cyclic characteristics")
        m = 1
        for p, e in self.primes:
            m *= p ** int(e)
        return m

    def __repr__(self) -> str:
        entries = ", ".join(f"{p}:{'inf' if e == INF else int(e)}" for p, e in self.primes)
        d = "inf" if self.default == INF else "0"
        return f"Characteristic(default={d}, {{{entries}}})"


def characteristic(assignments: Mapping[int, Exponent] | None = None,
                   default: Exponent = 0) -> Characteristic:
    """Build a characteristic in canonical form, validating primes and exponents."""
    if default not in (0, INF):
        raise DomainError("default exponent must be 0 or inf")
    entries = []
    for p, e in sorted((assignments or {}).items()):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if e != INF and (not isinstance(e, int) or isinstance(e, bool) or e < 0):
            raise DomainError(f"exponent for {p} must be a natural number or inf")
        if e != default:
            entries.append((p, e))
    return Characteristic(default, tuple(entries))


CHI_Z = characteristic()
CHI_Q = characteristic(default=INF)


def contains_rational(chi: Characteristic, q) -> bool:
    """Membership of q in the denoted subgroup of Q."""
    if not isinstance(q, Fraction):
        q = Fraction(q)
    den = q.denominator
    if den == 1:
        return True
    if chi.default == INF and not chi.primes:
        return True
    for p, e in factor(den):
        if e > chi.exponent(p):
            return False
    return True


_LABEL_RE = re.compile(r"^Z\[(.+)\]$")


def parse_group_label(text: str) -> Characteristic:
    """Parse shorthand like "Z", "Q", "Z[1/2]", "Z[1/2,1/3]", "Z[1/6]"."""
    text = text.strip()
    if text == "Z":
        return CHI_Z
    if text == "Q":
        return CHI_Q
    m = _LABEL_RE.match(text)
    if m is None:
        raise UsageError(f"unrecognized group shorthand {text!r}")
    assignments: dict[int, Exponent] = {}
    for part in m.group(1).split(","):
        part = part.strip()
        if not part.startswith("1/"):
            raise UsageError(f"expected entries of the form 1/m in {text!r}")
        try:
            denom = int(part[2:])
        except ValueError:
            raise UsageError(f"bad inverted integer in {text!r}") from None
        if denom < 2:
            raise UsageError(f"inverted integer must be >= 2 in {text!r}")
        for p, _ in factor(denom):
            assignments[p] = INF
    return characteristic(assignments)


def group_label(chi: Characteristic) -> str | None:
    """Shorthand for the denoted group, or None when it has no compact spelling."""
    if chi == CHI_Z:
        return "Z"
    if chi == CHI_Q:
        return "Q"
    if chi.default == 0 and all(e == INF for _, e in chi.primes):
        return "Z[" + ",".join(f"1/{p}" for p, _ in chi.primes) + "]"
    return None
