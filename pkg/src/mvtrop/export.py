"""Structure export: full operation tables as JSON and Hasse diagrams as DOT."""

from __future__ import annotations

from .algebra import (MvAlgebra, carrier_size, element_str, enumerate_elements,
                      is_boolean_elem, is_infinitesimal_elem, mv_join, mv_leq,
                      mv_meet, mv_neg, mv_odot, mv_oplus)
from .errors import DomainError
from .jsonio import algebra_to_json, payload_to_json

MAX_EXPORT_CARRIER = 10000


def operation_tables(A: MvAlgebra, bound: int | None = None) -> dict:
    """Full ⊕/⊙/∧/∨ tables plus the negation map, as index matrices.

    Finite carriers export completely; infinite descriptors export the bounded
    fragment, in which case operation results can escape the listed elements
    and are rendered as payloads instead of indices (flagged by "fragment").
    """
    elems = _carrier(A, bound)
    fragment = carrier_size(A) is None
    index = {x: i for i, x in enumerate(elems)}

    def cell(x):
        return index[x] if x in index else payload_to_json(A, x.payload)

    ops = {"oplus": mv_oplus, "odot": mv_odot, "meet": mv_meet, "join": mv_join}
    tables = {name: [[cell(op(x, y)) for y in elems] for x in elems]
              for name, op in ops.items()}
    return {
        "algebra": algebra_to_json(A),
        "fragment": fragment,
        "elements": [payload_to_json(A, x.payload) for x in elems],
        "neg": [cell(mv_neg(x)) for x in elems],
        "tables": tables,
        "boolean": [i for i, x in enumerate(elems) if is_boolean_elem(x)],
        "infinitesimal": [i for i, x in enumerate(elems) if is_infinitesimal_elem(x)],
    }


def hasse_dot(A: MvAlgebra, bound: int | None = None) -> str:
    """DOT rendering of the natural order's Hasse diagram on the (bounded) carrier.

    Boolean elements are drawn with a double border, infinitesimals filled gray.
    """
    elems = _carrier(A, bound)
    n = len(elems)
    leq = [[mv_leq(x, y) for y in elems] for x in elems]
    lines = ["digraph hasse {", "  rankdir=BT;", '  node [shape=ellipse];']
    for i, x in enumerate(elems):
        attrs = [f'label="{element_str(x)}"']
        if is_boolean_elem(x):
            attrs.append("peripheries=2")
        if is_infinitesimal_elem(x):
            attrs.append('style=filled fillcolor=lightgray')
        lines.append(f"  n{i} [{' '.join(attrs)}];")
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            covering = not any(k != i and k != j and leq[i][k] and leq[k][j]
                               and not leq[k][i] and not leq[j][k]
                               for k in range(n))
            if covering:
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _carrier(A: MvAlgebra, bound: int | None):
    size = carrier_size(A)
    if size is None and bound is None:
        raise DomainError(f"{A!r} is infinite; exporting needs a bound")
    if size is not None and size > MAX_EXPORT_CARRIER:
        raise DomainError(f"carrier of {A!r} exceeds {MAX_EXPORT_CARRIER} elements")
    elems = enumerate_elements(A, bound)
    if len(elems) > MAX_EXPORT_CARRIER:
        raise DomainError(f"fragment of {A!r} exceeds {MAX_EXPORT_CARRIER} elements")
    return elems
