"""Wire formats: exact rationals as strings, canonical JSON, and a compact
URL-safe encoding of problem specs.

Canonical JSON (sorted keys, no whitespace) is used for every API and CLI
response body, so equal payloads are equal byte strings.  Problem specs
round-trip through base64url without padding, suitable for query strings
and URL fragments.
"""

from __future__ import annotations

import base64
import binascii
import json
import re
from fractions import Fraction
from typing import Any

from .invariants import Value
from .store import Constraint, ProblemSpec

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


class ProblemDecodeError(ValueError):
    """The encoded problem is not valid base64url, JSON, or spec shape."""


def rational_to_str(value: Fraction) -> str:
    """"3", "-3", or "5/2"; denominators are always positive and reduced."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def value_to_wire(value: Value) -> str | bool | None:
    """Booleans pass through, rationals become strings, undefined becomes null."""
    if value is None or isinstance(value, bool):
        return value
    return rational_to_str(value)


def value_from_wire(wire: str | bool | None) -> Value:
    if wire is None or isinstance(wire, bool):
        return wire
    return rational_from_str(wire)


def dump_canonical(payload: Any) -> str:
    """Deterministic JSON: sorted keys, minimal separators, no trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), allow_nan=False)


# ---------------------------------------------------------------------------
# problem spec <-> wire dict <-> base64url


def spec_to_wire(spec: ProblemSpec) -> dict[str, Any]:
    highlight = None
    if spec.highlight is not None:
        hl_id, hl_target = spec.highlight
        highlight = {"invariant": hl_id, "target": value_to_wire(hl_target)}
    return {
        "class": spec.graph_class,
        "coloration": spec.coloration,
        "constraints": [
            {
                "invariant": c.invariant,
                "op": c.op,
                "target": None if c.target is None else rational_to_str(c.target),
            }
            for c in spec.constraints
        ],
        "extra_invariants": list(spec.extra_invariants),
        "highlight": highlight,
        "order": spec.order,
        "x_invariant": spec.x_invariant,
        "y_invariant": spec.y_invariant,
    }


_REQUIRED_KEYS = {"order", "x_invariant", "y_invariant"}
_ALL_KEYS = _REQUIRED_KEYS | {
    "class",
    "coloration",
    "constraints",
    "extra_invariants",
    "highlight",
}


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ProblemDecodeError(message)


def spec_from_wire(wire: Any) -> ProblemSpec:
    """Structural parse only; semantic checks (known invariants, kinds,
    order range) stay with validate_spec."""
    _expect(isinstance(wire, dict), "problem must be a JSON object")
    unknown = set(wire) - _ALL_KEYS
    _expect(not unknown, f"unknown problem keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(wire)
    _expect(not missing, f"missing problem keys: {sorted(missing)}")
    order = wire["order"]
    _expect(isinstance(order, int) and not isinstance(order, bool), "order must be an integer")
    x_inv, y_inv = wire["x_invariant"], wire["y_invariant"]
    _expect(isinstance(x_inv, str) and isinstance(y_inv, str), "axis invariants must be strings")
    graph_class = wire.get("class", "all")
    _expect(isinstance(graph_class, str), "class must be a string")
    coloration = wire.get("coloration")
    _expect(coloration is None or isinstance(coloration, str), "coloration must be a string or null")

    constraints = []
    raw_cons = wire.get("constraints", [])
    _expect(isinstance(raw_cons, list), "constraints must be a list")
    for item in raw_cons:
        _expect(isinstance(item, dict), "each constraint must be an object")
        _expect(
            set(item) <= {"invariant", "op", "target"} and {"invariant", "op"} <= set(item),
            "constraints need invariant and op (and an optional target)",
        )
        _expect(isinstance(item["invariant"], str), "constraint invariant must be a string")
        _expect(isinstance(item["op"], str), "constraint op must be a string")
        target = item.get("target")
        if target is not None:
            _expect(isinstance(target, str), "constraint target must be a rational string or null")
            try:
                target = rational_from_str(target)
            except ValueError as exc:
                raise ProblemDecodeError(str(exc)) from None
        constraints.append(Constraint(item["invariant"], item["op"], target))

    highlight = None
    raw_hl = wire.get("highlight")
    if raw_hl is not None:
        _expect(isinstance(raw_hl, dict), "highlight must be an object or null")
        _expect(set(raw_hl) == {"invariant", "target"}, "highlight needs invariant and target")
        _expect(isinstance(raw_hl["invariant"], str), "highlight invariant must be a string")
        hl_target = raw_hl["target"]
        if not isinstance(hl_target, bool):
            _expect(isinstance(hl_target, str), "highlight target must be a rational string or bool")
            try:
                hl_target = rational_from_str(hl_target)
            except ValueError as exc:
                raise ProblemDecodeError(str(exc)) from None
        highlight = (raw_hl["invariant"], hl_target)

    raw_extra = wire.get("extra_invariants", [])
    _expect(
        isinstance(raw_extra, list) and all(isinstance(e, str) for e in raw_extra),
        "extra_invariants must be a list of strings",
    )
    return ProblemSpec(
        x_invariant=x_inv,
        y_invariant=y_inv,
        order=order,
        graph_class=graph_class,
        constraints=tuple(constraints),
        coloration=coloration,
        highlight=highlight,
        extra_invariants=tuple(raw_extra),
    )


def encode_problem(spec: ProblemSpec) -> str:
    """base64url of the canonical JSON form, padding stripped."""
    raw = dump_canonical(spec_to_wire(spec)).encode("ascii")
    return base64.urlsafe_b64encode(raw).rstrip(b"=").decode("ascii")


def decode_problem(text: str) -> ProblemSpec:
    pad = -len(text) % 4
    try:
        raw = base64.b64decode((text + "=" * pad).encode("ascii"), altchars=b"-_", validate=True)
    except (binascii.Error, ValueError):
        raise ProblemDecodeError("not valid base64url") from None
    try:
        wire = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise ProblemDecodeError("encoded problem is not valid JSON") from None
    return spec_from_wire(wire)
