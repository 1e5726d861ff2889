"""Evaluation of Lukasiewicz terms and equation / tautology checking.

Exhaustive checks walk every valuation of a finite algebra in canonical order
and report the first counterexample; bounded checks run over the bound-limited
fragment of an infinite algebra and can only refute (a clean run is reported
as valid_up_to_bound, never as a completeness claim).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .algebra import (CHANG, MvAlgebra, MvElement, carrier_size,
                      enumerate_elements, mv_implies, mv_join, mv_meet, mv_neg,
                      mv_odot, mv_ominus, mv_oplus, one, zero)
from .errors import EvaluationError, ModeError, StructuralError
from .report import COUNTEREXAMPLE, VALID, VALID_UP_TO_BOUND, CheckReport
from .terms import (Const, Equation, Implies, Join, Meet, Neg, Odot, Ominus,
                    Oplus, Term, Var, operation_count, parse, parse_equation)


@dataclass(frozen=True)
class Valuation:
    algebra: MvAlgebra
    bindings: Mapping[str, MvElement]


def valuation(A: MvAlgebra, **bindings: MvElement) -> Valuation:
    return Valuation(A, dict(bindings))


def evaluate(t: Term, v: Valuation) -> MvElement:
    """Evaluate by structural recursion; → is read as ¬x ⊕ y, ⊖ as x ⊙ ¬y."""
    A = v.algebra
    if isinstance(t, Var):
        try:
            x = v.bindings[t.name]
        except KeyError:
            raise EvaluationError(f"variable {t.name!r} is not bound") from None
        if x.algebra != A:
            raise StructuralError(f"binding for {t.name!r} inhabits {x.algebra!r}, not {A!r}")
        return x
    if isinstance(t, Const):
        return zero(A) if t.value == 0 else one(A)
    if isinstance(t, Neg):
        return mv_neg(evaluate(t.arg, v))
    a = evaluate(t.left, v)
    b = evaluate(t.right, v)
    if isinstance(t, Oplus):
        return mv_oplus(a, b)
    if isinstance(t, Odot):
        return mv_odot(a, b)
    if isinstance(t, Ominus):
        return mv_ominus(a, b)
    if isinstance(t, Implies):
        return mv_implies(a, b)
    if isinstance(t, Meet):
        return mv_meet(a, b)
    if isinstance(t, Join):
        return mv_join(a, b)
    raise TypeError(f"not a term: {t!r}")


def _valuations(A: MvAlgebra, names: list[str], bound: int | None):
    elems = enumerate_elements(A, bound)
    for combo in itertools.product(elems, repeat=len(names)):
        yield Valuation(A, dict(zip(names, combo)))


def check_equation_finite(e: Equation, A: MvAlgebra) -> CheckReport:
    """Exhaustive equation check over all valuations of a finite algebra."""
    if carrier_size(A) is None:
        raise ModeError(f"{A!r} has an infinite carrier; use a bounded check")
    names = sorted(e.variables())
    checked = 0
    for v in _valuations(A, names, None):
        checked += 1
        if evaluate(e.lhs, v) != evaluate(e.rhs, v):
            return CheckReport(COUNTEREXAMPLE, checked, dict(v.bindings))
    return CheckReport(VALID, checked)


def default_chang_bound(e: Equation) -> int:
    """Heuristic refutation bound: twice the equation's operation-symbol count."""
    return max(1, 2 * (operation_count(e.lhs) + operation_count(e.rhs)))


def check_equation_bounded(e: Equation, A: MvAlgebra, bound: int) -> CheckReport:
    """Refutation-only check over the bound-limited fragment of A.

    A counterexample is definitive; a clean run is reported as valid up to the
    bound, which is not a completeness claim.
    """
    names = sorted(e.variables())
    checked = 0
    for v in _valuations(A, names, bound):
        checked += 1
        if evaluate(e.lhs, v) != evaluate(e.rhs, v):
            return CheckReport(COUNTEREXAMPLE, checked, dict(v.bindings), mode="bounded")
    return CheckReport(VALID_UP_TO_BOUND, checked, mode="bounded",
                       details={"bound": bound})


def check_equation_chang(e: Equation, bound: int | None = None) -> CheckReport:
    """Bounded refutation check over Chang's algebra, the generator of V(C)."""
    if bound is None:
        bound = default_chang_bound(e)
    return check_equation_bounded(e, CHANG, bound)


def tautology_check(t: Term, A: MvAlgebra) -> CheckReport:
    """Valid iff the term evaluates to 1 under every valuation of a finite algebra."""
    if carrier_size(A) is None:
        raise ModeError(f"{A!r} has an infinite carrier; use sampled checks")
    names = sorted(variables_of(t))
    top = one(A)
    checked = 0
    for v in _valuations(A, names, None):
        checked += 1
        value = evaluate(t, v)
        if value != top:
            witness = {"valuation": dict(v.bindings), "value": value}
            return CheckReport(COUNTEREXAMPLE, checked, witness)
    return CheckReport(VALID, checked)


def variables_of(t: Term) -> set[str]:
    from .terms import variables
    return variables(t)


VC_AXIOM = parse_equation("(x (+) x) (.) (x (+) x) = (x (.) x) (+) (x (.) x)")


def vc_membership(A: MvAlgebra) -> CheckReport:
    """Does the finite algebra satisfy (2x)² = 2(x²), the axiom of V(C)?"""
    return check_equation_finite(VC_AXIOM, A)


LUKASIEWICZ_AXIOMS = (
    ("axiom_1", parse("x -> (y -> x)")),
    ("axiom_2", parse("(x -> y) -> ((y -> z) -> (x -> z))")),
    ("axiom_3", parse("((x -> y) -> y) -> ((y -> x) -> x)")),
    ("axiom_4", parse("(~x -> ~y) -> (y -> x)")),
)


def axiom_suite(A: MvAlgebra, *, samples: int | None = None, seed: int = 0,
                bound: int = 12) -> CheckReport:
    """Check that the four axioms are tautologies and modus ponens is sound.

    Exhaustive on finite algebras; with ``samples`` set, seeded random
    valuations from the bound-limited fragment are used instead (required for
    infinite carriers).
    """
    if samples is None:
        if carrier_size(A) is None:
            raise ModeError(f"{A!r} has an infinite carrier; pass samples=")
        elems = enumerate_elements(A)

        def tuples(arity):
            return itertools.product(elems, repeat=arity)
    else:
        import random
        pool = enumerate_elements(A, None if carrier_size(A) is not None else bound)
        rng = random.Random(seed)

        def tuples(arity):
            return (tuple(rng.choice(pool) for _ in range(arity))
                    for _ in range(samples))

    top = one(A)
    checked = 0
    for name, axiom in LUKASIEWICZ_AXIOMS:
        names = sorted(variables_of(axiom))
        for combo in tuples(len(names)):
            checked += 1
            v = Valuation(A, dict(zip(names, combo)))
            value = evaluate(axiom, v)
            if value != top:
                witness = {"axiom": name, "valuation": dict(v.bindings), "value": value}
                return CheckReport(COUNTEREXAMPLE, checked, witness,
                                   mode="exhaustive" if samples is None else "sampled")
    # Modus ponens soundness: whenever x → y and x take the value 1, so does y.
    for a, b in tuples(2):
        checked += 1
        if mv_implies(a, b) == top and a == top and b != top:
            witness = {"axiom": "modus_ponens", "valuation": {"x": a, "y": b}}
            return CheckReport(COUNTEREXAMPLE, checked, witness,
                               mode="exhaustive" if samples is None else "sampled")
    return CheckReport(VALID, checked,
                       mode="exhaustive" if samples is None else "sampled")
