"""MV-algebra descriptors, elements, exact operations, and axiom checking.

Shipped descriptor kinds: finite chains (the n-valued Lukasiewicz algebras),
the rational unit interval, Delta-of-a-group algebras (unit interval of
Z lex G, so Chang's algebra is DeltaOf(Z)), and finite products.  All
arithmetic is exact: chain and interval payloads are reduced Fractions,
DeltaOf payloads are (bit, offset) lex pairs with offset in the base group.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Union

from .errors import DomainError, ModeError, StructuralError
from .groups import (LGroup, TrivialGroup, Z, group_add, group_coerce,
                     group_element_str, group_leq, group_meet, group_negate,
                     group_positive_cone, group_zero)
from .report import COUNTEREXAMPLE, VALID, CheckReport

DEFAULT_SAMPLE_BOUND = 100

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class FiniteChain:
    """The chain 0 < 1/(size-1) < ... < 1 with truncated addition."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 2:
            raise DomainError("a finite chain needs at least the two elements 0 and 1")

    def __repr__(self) -> str:
        return f"FiniteChain({self.size})"


@dataclass(frozen=True)
class RationalInterval:
    """[0, 1] ∩ Q with x ⊕ y = min(x + y, 1) and ¬x = 1 - x."""

    def __repr__(self) -> str:
        return "RationalInterval"


@dataclass(frozen=True)
class DeltaOf:
    """Unit interval of Z lex G: payloads (0, g) with g >= 0 and (1, g) with g <= 0."""

    group: LGroup

    def __repr__(self) -> str:
        if isinstance(self.group, type(Z)):
            return "Chang"
        return f"DeltaOf({self.group!r})"


@dataclass(frozen=True)
class ProductAlgebra:
    factors: tuple

    def __post_init__(self):
        if not isinstance(self.factors, tuple) or not self.factors:
            raise DomainError("a product algebra needs at least one factor")

    def __repr__(self) -> str:
        return "Product(" + ", ".join(repr(f) for f in self.factors) + ")"


MvAlgebra = Union[FiniteChain, RationalInterval, DeltaOf, ProductAlgebra]

CHANG = DeltaOf(Z)


def product_algebra(*factors: MvAlgebra) -> ProductAlgebra:
    return ProductAlgebra(tuple(factors))


@dataclass(frozen=True)
class MvElement:
    algebra: MvAlgebra
    payload: Any

    def __repr__(self) -> str:
        return f"<{element_str(self)} in {self.algebra!r}>"


def _coerce_payload(A: MvAlgebra, payload: Any):
    if isinstance(A, (FiniteChain, RationalInterval)):
        try:
            value = Fraction(payload)
        except (TypeError, ValueError):
            raise StructuralError(f"{payload!r} is not a rational") from None
        if not (_ZERO <= value <= _ONE):
            raise StructuralError(f"{value} is outside [0, 1]")
        if isinstance(A, FiniteChain) and (value * (A.size - 1)).denominator != 1:
            raise StructuralError(f"{value} is not a point of the {A.size}-element chain")
        return value
    if isinstance(A, DeltaOf):
        if not isinstance(payload, tuple) or len(payload) != 2 or payload[0] not in (0, 1):
            raise StructuralError(f"{payload!r} is not a (bit, offset) pair")
        bit, off = payload
        off = group_coerce(A.group, off)
        zero_g = group_zero(A.group)
        if bit == 0 and not group_leq(A.group, zero_g, off):
            raise StructuralError(f"offset of (0, {off!r}) must be >= 0")
        if bit == 1 and not group_leq(A.group, off, zero_g):
            raise StructuralError(f"offset of (1, {off!r}) must be <= 0")
        return (bit, off)
    if isinstance(A, ProductAlgebra):
        if not isinstance(payload, tuple) or len(payload) != len(A.factors):
            raise StructuralError(f"{payload!r} does not match the product arity")
        return tuple(_coerce_payload(f, p) for f, p in zip(A.factors, payload))
    raise StructuralError(f"unknown algebra descriptor {A!r}")


def element(A: MvAlgebra, payload: Any) -> MvElement:
    """Validate and canonicalize a payload, returning an element of A."""
    return MvElement(A, _coerce_payload(A, payload))


def _zero_payload(A: MvAlgebra):
    if isinstance(A, (FiniteChain, RationalInterval)):
        return _ZERO
    if isinstance(A, DeltaOf):
        return (0, group_zero(A.group))
    return tuple(_zero_payload(f) for f in A.factors)


def _one_payload(A: MvAlgebra):
    if isinstance(A, (FiniteChain, RationalInterval)):
        return _ONE
    if isinstance(A, DeltaOf):
        return (1, group_zero(A.group))
    return tuple(_one_payload(f) for f in A.factors)


def zero(A: MvAlgebra) -> MvElement:
    return MvElement(A, _zero_payload(A))


def one(A: MvAlgebra) -> MvElement:
    return MvElement(A, _one_payload(A))


def _oplus_payload(A: MvAlgebra, p, q):
    if isinstance(A, (FiniteChain, RationalInterval)):
        s = p + q
        return s if s < _ONE else _ONE
    if isinstance(A, DeltaOf):
        bit = p[0] + q[0]
        off = group_add(A.group, p[1], q[1])
        if bit == 0:
            return (0, off)
        if bit == 1:
            return (1, group_meet(A.group, off, group_zero(A.group)))
        return (1, group_zero(A.group))
    return tuple(_oplus_payload(f, a, b) for f, a, b in zip(A.factors, p, q))


def _neg_payload(A: MvAlgebra, p):
    if isinstance(A, (FiniteChain, RationalInterval)):
        return _ONE - p
    if isinstance(A, DeltaOf):
        return (1 - p[0], group_negate(A.group, p[1]))
    return tuple(_neg_payload(f, a) for f, a in zip(A.factors, p))


def _same_algebra(x: MvElement, y: MvElement) -> MvAlgebra:
    if x.algebra != y.algebra:
        raise StructuralError(f"descriptor mismatch: {x.algebra!r} vs {y.algebra!r}")
    return x.algebra


def mv_oplus(x: MvElement, y: MvElement) -> MvElement:
    A = _same_algebra(x, y)
    return MvElement(A, _oplus_payload(A, x.payload, y.payload))


def mv_neg(x: MvElement) -> MvElement:
    return MvElement(x.algebra, _neg_payload(x.algebra, x.payload))


def mv_odot(x: MvElement, y: MvElement) -> MvElement:
    """x ⊙ y = ¬(¬x ⊕ ¬y)."""
    return mv_neg(mv_oplus(mv_neg(x), mv_neg(y)))


def mv_ominus(x: MvElement, y: MvElement) -> MvElement:
    """x ⊖ y = x ⊙ ¬y."""
    return mv_odot(x, mv_neg(y))


def mv_implies(x: MvElement, y: MvElement) -> MvElement:
    """x → y = ¬x ⊕ y."""
    return mv_oplus(mv_neg(x), y)


def mv_join(x: MvElement, y: MvElement) -> MvElement:
    """x ∨ y = ¬(¬x ⊕ y) ⊕ y, the lattice join of the natural order."""
    return mv_oplus(mv_neg(mv_oplus(mv_neg(x), y)), y)


def mv_meet(x: MvElement, y: MvElement) -> MvElement:
    return mv_neg(mv_join(mv_neg(x), mv_neg(y)))


def mv_leq(x: MvElement, y: MvElement) -> bool:
    """Natural order, decided through the equivalent test ¬x ⊕ y = 1."""
    A = _same_algebra(x, y)
    return mv_implies(x, y).payload == _one_payload(A)


def is_boolean_elem(x: MvElement) -> bool:
    """True iff x is idempotent: x ⊕ x = x."""
    return mv_oplus(x, x) == x


def is_infinitesimal_elem(x: MvElement) -> bool:
    """Exact test for n·x <= ¬x for all n >= 1, decided representation-wise.

    On chains and the interval only 0 qualifies; on DeltaOf algebras exactly
    the bit-0 payloads do; products decide componentwise.
    """
    A = x.algebra
    if isinstance(A, (FiniteChain, RationalInterval)):
        return x.payload == _ZERO
    if isinstance(A, DeltaOf):
        return x.payload[0] == 0
    return all(is_infinitesimal_elem(MvElement(f, p))
               for f, p in zip(A.factors, x.payload))


def element_str(x: MvElement) -> str:
    return _payload_str(x.algebra, x.payload)


def _payload_str(A: MvAlgebra, p) -> str:
    if isinstance(A, (FiniteChain, RationalInterval)):
        return str(p)
    if isinstance(A, DeltaOf):
        return f"({p[0]},{group_element_str(A.group, p[1])})"
    return "(" + ",".join(_payload_str(f, c) for f, c in zip(A.factors, p)) + ")"


# ---------------------------------------------------------------------------
# Carriers: size, canonical enumeration, deterministic sampling.

def carrier_size(A: MvAlgebra) -> int | None:
    """Number of elements, or None when the carrier is infinite."""
    if isinstance(A, FiniteChain):
        return A.size
    if isinstance(A, RationalInterval):
        return None
    if isinstance(A, DeltaOf):
        return 2 if isinstance(A.group, TrivialGroup) else None
    total = 1
    for f in A.factors:
        n = carrier_size(f)
        if n is None:
            return None
        total *= n
    return total


def _farey(bound: int) -> list[Fraction]:
    out = {_ZERO, _ONE}
    for d in range(2, bound + 1):
        for n in range(1, d):
            out.add(Fraction(n, d))
    return sorted(out)


def enumerate_elements(A: MvAlgebra, bound: int | None = None) -> list[MvElement]:
    """Canonical enumeration: the full carrier when finite, else a bounded fragment.

    Chains and DeltaOf fragments come in ascending natural order; the interval
    fragment is the Farey sequence of order ``bound``; products are enumerated
    lexicographically by component.  DeltaOf fragments hold all elements with
    offset in the bound-limited fragment of the base group.
    """
    if isinstance(A, FiniteChain):
        n = A.size - 1
        return [MvElement(A, Fraction(k, n)) for k in range(n + 1)]
    if isinstance(A, RationalInterval):
        if bound is None:
            raise DomainError("enumerating the rational interval requires a bound")
        return [MvElement(A, q) for q in _farey(bound)]
    if isinstance(A, DeltaOf):
        if isinstance(A.group, TrivialGroup):
            return [zero(A), one(A)]
        if bound is None:
            raise DomainError(f"enumerating {A!r} requires a bound")
        cone = group_positive_cone(A.group, bound)
        lower = [MvElement(A, (0, g)) for g in cone]
        upper = [MvElement(A, (1, group_negate(A.group, g))) for g in reversed(cone)]
        return lower + upper
    if isinstance(A, ProductAlgebra):
        columns = [enumerate_elements(f, bound) for f in A.factors]
        return [MvElement(A, tuple(e.payload for e in combo))
                for combo in itertools.product(*columns)]
    raise StructuralError(f"unknown algebra descriptor {A!r}")


def sample_elements(A: MvAlgebra, count: int, seed: int,
                    bound: int = DEFAULT_SAMPLE_BOUND) -> list[MvElement]:
    """Deterministic sample, uniform over the bounded fragment (with replacement)."""
    if count < 1:
        raise DomainError("sample count must be >= 1")
    pool = enumerate_elements(A, bound)
    rng = random.Random(seed)
    return [rng.choice(pool) for _ in range(count)]


# ---------------------------------------------------------------------------
# MV axiom suite.

def _mv_axioms(A: MvAlgebra):
    zz, oo = zero(A), one(A)
    return [
        ("oplus_associative", 3,
         lambda x, y, z: mv_oplus(mv_oplus(x, y), z) == mv_oplus(x, mv_oplus(y, z))),
        ("oplus_commutative", 2, lambda x, y: mv_oplus(x, y) == mv_oplus(y, x)),
        ("zero_neutral", 1, lambda x: mv_oplus(x, zz) == x),
        ("one_absorbing", 1, lambda x: mv_oplus(x, oo) == oo),
        ("neg_involutive", 1, lambda x: mv_neg(mv_neg(x)) == x),
        ("neg_zero_is_one", 0, lambda: mv_neg(zz) == oo),
        ("lukasiewicz_exchange", 2,
         lambda x, y: mv_oplus(mv_neg(mv_oplus(mv_neg(x), y)), y)
         == mv_oplus(mv_neg(mv_oplus(mv_neg(y), x)), x)),
    ]


def check_mv_axioms(A: MvAlgebra, mode: str = "exhaustive", *,
                    samples: int = 1000, seed: int = 0,
                    bound: int = DEFAULT_SAMPLE_BOUND) -> CheckReport:
    """Verify the MV axioms over all tuples (exhaustive) or seeded samples.

    Exhaustive mode requires a finite carrier.  The first counterexample in
    canonical enumeration order is reported.
    """
    if mode == "exhaustive":
        if carrier_size(A) is None:
            raise ModeError(f"{A!r} has an infinite carrier; use sampled mode")
        elems = enumerate_elements(A)

        def tuples(arity):
            return itertools.product(elems, repeat=arity)
    elif mode == "sampled":
        pool = enumerate_elements(A, None if carrier_size(A) is not None else bound)
        rng = random.Random(seed)

        def tuples(arity):
            return (tuple(rng.choice(pool) for _ in range(arity))
                    for _ in range(samples))
    else:
        raise DomainError(f"unknown mode {mode!r}")

    checked = 0
    for name, arity, pred in _mv_axioms(A):
        for combo in tuples(arity) if arity else [()]:
            checked += 1
            if not pred(*combo):
                witness = {"axiom": name, "elements": list(combo)}
                return CheckReport(COUNTEREXAMPLE, checked, witness, mode)
    return CheckReport(VALID, checked, mode=mode)


def check_axioms_over(elements: Iterable, oplus: Callable, neg: Callable,
                      zero_el, one_el) -> CheckReport:
    """Run the MV axiom suite against explicitly supplied operations.

    Exercised by tests as a negative control: feed a corrupted operation table
    and the counterexample must surface.
    """
    elems = list(elements)
    axioms = [
        ("oplus_associative", 3,
         lambda x, y, z: oplus(oplus(x, y), z) == oplus(x, oplus(y, z))),
        ("oplus_commutative", 2, lambda x, y: oplus(x, y) == oplus(y, x)),
        ("zero_neutral", 1, lambda x: oplus(x, zero_el) == x),
        ("one_absorbing", 1, lambda x: oplus(x, one_el) == one_el),
        ("neg_involutive", 1, lambda x: neg(neg(x)) == x),
        ("neg_zero_is_one", 0, lambda: neg(zero_el) == one_el),
        ("lukasiewicz_exchange", 2,
         lambda x, y: oplus(neg(oplus(neg(x), y)), y) == oplus(neg(oplus(neg(y), x)), x)),
    ]
    checked = 0
    for name, arity, pred in axioms:
        for combo in itertools.product(elems, repeat=arity) if arity else [()]:
            checked += 1
            if not pred(*combo):
                return CheckReport(COUNTEREXAMPLE, checked,
                                   {"axiom": name, "elements": list(combo)})
    return CheckReport(VALID, checked)
