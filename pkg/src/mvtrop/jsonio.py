"""Canonical JSON encodings and command-line shorthand parsing.

Rationals render as "p/q" strings ("p" when the denominator is 1); descriptors
render as {"kind": ..., params}; elements as {"algebra": ..., "payload": ...}.
Every encoder/decoder pair round-trips exactly, and ``dumps`` is deterministic
(sorted keys, no whitespace) so command output can be used as goldens.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import (CHANG, DeltaOf, FiniteChain, MvAlgebra, MvElement,
                      ProductAlgebra, RationalInterval, element)
from .bisemirings import TOP, TopCone, cone_elements
from .characteristics import (INF, Characteristic, characteristic,
                              group_label, parse_group_label)
from .errors import UsageError
from .groups import (BOTTOM, Integers, LexZG, LGroup, QSubgroup, TrivialGroup,
                     TropOfGroup, qsubgroup)
from .report import CheckReport


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def rational_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{text!r} is not a rational") from None


# -- characteristics --------------------------------------------------------

def chi_to_json(chi: Characteristic) -> dict:
    return {
        "default": "inf" if chi.default == INF else "0",
        "primes": {str(p): ("inf" if e == INF else str(int(e)))
                   for p, e in chi.primes},
    }


def chi_from_json(data: dict) -> Characteristic:
    try:
        default = INF if data["default"] == "inf" else 0
        assignments = {int(p): (INF if e == "inf" else int(e))
                       for p, e in data.get("primes", {}).items()}
    except (KeyError, TypeError, ValueError, AttributeError):
        raise UsageError(f"malformed characteristic JSON: {data!r}") from None
    return characteristic(assignments, default)


# -- groups ------------------------------------------------------------------

def group_to_json(G: LGroup) -> dict:
    if isinstance(G, Integers):
        return {"kind": "integers"}
    if isinstance(G, TrivialGroup):
        return {"kind": "trivial"}
    if isinstance(G, QSubgroup):
        return {"kind": "q_subgroup", "chi": chi_to_json(G.chi)}
    if isinstance(G, LexZG):
        return {"kind": "lex_zg", "tail": group_to_json(G.tail)}
    raise UsageError(f"cannot encode group {G!r}")


def group_from_json(data: dict) -> LGroup:
    kind = data.get("kind")
    if kind == "integers":
        return Integers()
    if kind == "trivial":
        return TrivialGroup()
    if kind == "q_subgroup":
        return qsubgroup(chi_from_json(data.get("chi", {})))
    if kind == "lex_zg":
        return LexZG(group_from_json(data.get("tail", {})))
    raise UsageError(f"unknown group kind {kind!r}")


def group_payload_to_json(G: LGroup, x) -> Any:
    if isinstance(G, LexZG):
        return [x[0], group_payload_to_json(G.tail, x[1])]
    return rational_str(x)


def group_payload_from_json(G: LGroup, data) -> Any:
    from .groups import group_coerce
    if isinstance(G, LexZG):
        if not isinstance(data, list) or len(data) != 2:
            raise UsageError(f"expected a lex pair, got {data!r}")
        return group_coerce(G, (int(data[0]), group_payload_from_json(G.tail, data[1])))
    return group_coerce(G, parse_rational(str(data)))


# -- MV algebras and elements -------------------------------------------------

def algebra_to_json(A: MvAlgebra) -> dict:
    if isinstance(A, FiniteChain):
        return {"kind": "finite_chain", "size": A.size}
    if isinstance(A, RationalInterval):
        return {"kind": "rational_interval"}
    if isinstance(A, DeltaOf):
        if A == CHANG:
            return {"kind": "chang"}
        return {"kind": "delta", "group": group_to_json(A.group)}
    if isinstance(A, ProductAlgebra):
        return {"kind": "product", "factors": [algebra_to_json(f) for f in A.factors]}
    raise UsageError(f"cannot encode algebra {A!r}")


def algebra_from_json(data: dict) -> MvAlgebra:
    kind = data.get("kind")
    if kind == "finite_chain":
        return FiniteChain(int(data["size"]))
    if kind == "rational_interval":
        return RationalInterval()
    if kind == "chang":
        return CHANG
    if kind == "delta":
        return DeltaOf(group_from_json(data.get("group", {})))
    if kind == "product":
        return ProductAlgebra(tuple(algebra_from_json(f) for f in data.get("factors", [])))
    raise UsageError(f"unknown algebra kind {kind!r}")


def payload_to_json(A: MvAlgebra, payload) -> Any:
    if isinstance(A, (FiniteChain, RationalInterval)):
        return rational_str(payload)
    if isinstance(A, DeltaOf):
        return [payload[0], group_payload_to_json(A.group, payload[1])]
    if isinstance(A, ProductAlgebra):
        return [payload_to_json(f, p) for f, p in zip(A.factors, payload)]
    raise UsageError(f"cannot encode payload for {A!r}")


def payload_from_json(A: MvAlgebra, data) -> Any:
    if isinstance(A, (FiniteChain, RationalInterval)):
        return parse_rational(str(data))
    if isinstance(A, DeltaOf):
        if not isinstance(data, list) or len(data) != 2:
            raise UsageError(f"expected a [bit, offset] pair, got {data!r}")
        return (int(data[0]), group_payload_from_json(A.group, data[1]))
    if isinstance(A, ProductAlgebra):
        if not isinstance(data, list) or len(data) != len(A.factors):
            raise UsageError(f"payload arity mismatch for {A!r}: {data!r}")
        return tuple(payload_from_json(f, p) for f, p in zip(A.factors, data))
    raise UsageError(f"cannot decode payload for {A!r}")


def element_to_json(x: MvElement) -> dict:
    return {"algebra": algebra_to_json(x.algebra),
            "payload": payload_to_json(x.algebra, x.payload)}


def element_from_json(data: dict) -> MvElement:
    A = algebra_from_json(data.get("algebra", {}))
    return element(A, payload_from_json(A, data.get("payload")))


# -- semifields and cones ------------------------------------------------------

def semifield_to_json(S: TropOfGroup) -> dict:
    return {"kind": "trop", "group": group_to_json(S.group)}


def semifield_from_json(data: dict) -> TropOfGroup:
    if data.get("kind") != "trop":
        raise UsageError(f"unknown semifield kind {data.get('kind')!r}")
    return TropOfGroup(group_from_json(data.get("group", {})))


def cone_to_json(T: TopCone, bound: int) -> dict:
    elems = cone_elements(T, bound)
    return {"base_group": group_to_json(T.base_group),
            "elements": [("⊤" if x is TOP else group_payload_to_json(T.base_group, x))
                         for x in elems],
            "top": "⊤"}


# -- reports -------------------------------------------------------------------

def encode_value(v: Any) -> Any:
    """Best-effort JSON form for witnesses: payloads for elements, strings for rationals."""
    if isinstance(v, MvElement):
        return payload_to_json(v.algebra, v.payload)
    if isinstance(v, Fraction):
        return rational_str(v)
    if v is TOP:
        return "⊤"
    if v is BOTTOM:
        return "-inf"
    if isinstance(v, dict):
        return {str(k): encode_value(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(u) for u in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return repr(v)


def report_to_json(r: CheckReport) -> dict:
    out: dict[str, Any] = {"verdict": r.verdict, "checked": r.checked, "mode": r.mode}
    if r.witness is not None:
        out["witness"] = encode_value(r.witness)
    if r.details:
        out["details"] = encode_value(r.details)
    return out


# -- command-line shorthand ------------------------------------------------------

def parse_group_shorthand(text: str) -> LGroup:
    """"Z", "Q", "Z[1/2]", "trivial", "lex:GROUP", or inline descriptor JSON."""
    text = text.strip()
    if text.startswith("{"):
        return group_from_json(_load_json(text))
    if text == "trivial":
        return TrivialGroup()
    if text.startswith("lex:"):
        return LexZG(parse_group_shorthand(text[4:]))
    return qsubgroup(parse_group_label(text))


def parse_algebra_shorthand(text: str) -> MvAlgebra:
    """"chain:N", "interval", "chang", "delta:GROUP", "prod:A,B,...", or JSON."""
    text = text.strip()
    if text.startswith("{"):
        return algebra_from_json(_load_json(text))
    if text == "interval":
        return RationalInterval()
    if text == "chang":
        return CHANG
    if text.startswith("chain:"):
        try:
            return FiniteChain(int(text[6:]))
        except ValueError:
            raise UsageError(f"bad chain size in {text!r}") from None
    if text.startswith("delta:"):
        return DeltaOf(parse_group_shorthand(text[6:]))
    if text.startswith("prod:"):
        parts = _split_factors(text[5:])
        return ProductAlgebra(tuple(parse_algebra_shorthand(p) for p in parts))
    raise UsageError(f"unrecognized algebra shorthand {text!r}")


def _split_factors(text: str) -> list[str]:
    """Split "chain:2,chain:3" on commas; chain:/interval/chang only (no nesting)."""
    parts = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise UsageError(f"empty factor in product shorthand {text!r}")
        parts.append(piece)
    if not parts:
        raise UsageError("a product needs at least one factor")
    return parts


def parse_semifield_shorthand(text: str) -> TropOfGroup:
    text = text.strip()
    if text.startswith("{"):
        return semifield_from_json(_load_json(text))
    if text.startswith("trop:"):
        return TropOfGroup(parse_group_shorthand(text[5:]))
    raise UsageError(f"unrecognized semifield shorthand {text!r}")


def parse_payload_shorthand(A: MvAlgebra, text: str):
    """Compact element syntax: rationals, or parenthesized tuples like (0,3)."""
    return _coerce_tree(A, _parse_tuple_tree(text))


def _parse_tuple_tree(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        inner = text[1:-1]
        parts, depth, start = [], 0, 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                parts.append(inner[start:i])
                start = i + 1
        parts.append(inner[start:])
        return tuple(_parse_tuple_tree(p) for p in parts)
    return parse_rational(text)


def _coerce_tree(A: MvAlgebra, tree):
    if isinstance(A, (FiniteChain, RationalInterval)):
        if isinstance(tree, tuple):
            raise UsageError(f"expected a rational for {A!r}")
        return tree
    if isinstance(A, DeltaOf):
        if not isinstance(tree, tuple) or len(tree) != 2:
            raise UsageError(f"expected (bit, offset) for {A!r}")
        return (int(tree[0]), _coerce_group_tree(A.group, tree[1]))
    if isinstance(A, ProductAlgebra):
        if not isinstance(tree, tuple) or len(tree) != len(A.factors):
            raise UsageError(f"expected a {len(A.factors)}-tuple for {A!r}")
        return tuple(_coerce_tree(f, t) for f, t in zip(A.factors, tree))
    raise UsageError(f"cannot parse payloads for {A!r}")


def _coerce_group_tree(G: LGroup, tree):
    if isinstance(G, LexZG):
        if not isinstance(tree, tuple) or len(tree) != 2:
            raise UsageError(f"expected a lex pair for {G!r}")
        return (int(tree[0]), _coerce_group_tree(G.tail, tree[1]))
    if isinstance(tree, tuple):
        raise UsageError(f"expected a rational for {G!r}")
    return tree


def parse_group_element_shorthand(G: LGroup, text: str):
    from .groups import group_coerce
    return group_coerce(G, _coerce_group_tree(G, _parse_tuple_tree(text)))


def group_shorthand(G: LGroup) -> str:
    """Compact spelling of a group where one exists, else its JSON."""
    if isinstance(G, Integers):
        return "Z"
    if isinstance(G, TrivialGroup):
        return "trivial"
    if isinstance(G, QSubgroup):
        label = group_label(G.chi)
        if label is not None:
            return label
        return dumps(group_to_json(G))
    if isinstance(G, LexZG):
        return "lex:" + group_shorthand(G.tail)
    return dumps(group_to_json(G))


def algebra_shorthand(A: MvAlgebra) -> str:
    if isinstance(A, FiniteChain):
        return f"chain:{A.size}"
    if isinstance(A, RationalInterval):
        return "interval"
    if A == CHANG:
        return "chang"
    if isinstance(A, DeltaOf):
        return "delta:" + group_shorthand(A.group)
    if isinstance(A, ProductAlgebra):
        return "prod:" + ",".join(algebra_shorthand(f) for f in A.factors)
    return dumps(algebra_to_json(A))


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    return data
