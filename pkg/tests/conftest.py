"""Shared test helpers: independent oracles and random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from mvtrop.terms import (CONST0, CONST1, Implies, Join, Meet, Neg, Odot,
                          Ominus, Oplus, Var)

# -- independent Lukasiewicz arithmetic on [0, 1], used as an oracle ---------

def luk_oplus(x: Fraction, y: Fraction) -> Fraction:
    return min(Fraction(1), x + y)


def luk_neg(x: Fraction) -> Fraction:
    return Fraction(1) - x


def luk_odot(x: Fraction, y: Fraction) -> Fraction:
    return max(Fraction(0), x + y - 1)


# -- independent Chang arithmetic on Z lex Z pairs ---------------------------
# Python tuples compare lexicographically, which is exactly the order of
# Z lex Z, so these few lines are a genuinely separate evaluation route.

CHANG_UNIT = (1, 0)


def chang_oplus(x: tuple, y: tuple) -> tuple:
    s = (x[0] + y[0], x[1] + y[1])
    return min(s, CHANG_UNIT)


def chang_neg(x: tuple) -> tuple:
    return (CHANG_UNIT[0] - x[0], CHANG_UNIT[1] - x[1])


def chang_fragment(bound: int) -> list[tuple]:
    return [(0, n) for n in range(bound + 1)] + [(1, -m) for m in range(bound, -1, -1)]


# -- random term generation ---------------------------------------------------

_BINARY_NODES = (Oplus, Odot, Ominus, Implies, Meet, Join)


def random_term(rng: random.Random, depth: int, names=("x", "y", "z")):
    if depth == 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.6:
            return Var(rng.choice(names))
        return CONST0 if roll < 0.8 else CONST1
    if rng.random() < 0.25:
        return Neg(random_term(rng, depth - 1, names))
    cls = rng.choice(_BINARY_NODES)
    return cls(random_term(rng, depth - 1, names), random_term(rng, depth - 1, names))
