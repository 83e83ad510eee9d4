"""Ideal and report documents: stable JSON with monomial-string sugar.

The wire format is explicit about the ambient dimension and variable names;
exponent vectors are the canonical representation and monomial strings like
"x^2*z^2" are accepted for generators when variable names are declared.
Serialization sorts keys and uses fixed indentation so equal documents are
byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass, field

from .errors import PreconditionError
from .ideals import MonomialIdeal, minimalize
from .lattice import Vec

REPORT_VERSION = 1

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class NonminimalInputWarning(UserWarning):
    """Input generators were not minimal and have been minimalized."""


def default_variables(n: int) -> tuple[str, ...]:
    if n <= 3:
        return tuple("xyz"[:n])
    if n <= 26:
        return tuple(_LETTERS[:n])
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class IdealDocument:
    """Parsed ideal document; generators are kept exactly as given."""

    n: int
    vars: tuple[str, ...]
    generators: tuple[Vec, ...]
    name: str | None = None
    attributes: dict = field(default_factory=dict)


def parse_monomial(text: str, names: tuple[str, ...]) -> Vec:
    """Exponent vector of a monomial string such as "x^2*z^2" or "1"."""
    index = {v: i for i, v in enumerate(names)}
    exps = [0] * len(names)
    s = text.strip()
    if not s:
        raise PreconditionError("empty monomial string")
    if s == "1":
        return tuple(exps)
    for token in s.split("*"):
        token = token.strip()
        name, _, power = token.partition("^")
        if name not in index:
            raise PreconditionError(f"unknown variable {name!r} in monomial {text!r}")
        if power:
            try:
                e = int(power)
            except ValueError:
                raise PreconditionError(f"bad exponent {power!r} in monomial {text!r}") from None
        else:
            e = 1
        if e < 0:
            raise PreconditionError(f"negative exponent in monomial {text!r}")
        exps[index[name]] += e
    return tuple(exps)


def format_monomial(v: Vec, names: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(names, v):
        if e == 1:
            parts.append(name)
        elif e >= 2:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_DOCUMENT_KEYS = {"n", "vars", "generators", "name", "attributes"}


def parse_ideal_document(text: str) -> IdealDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"malformed document: {exc}") from None
    if not isinstance(raw, dict):
        raise PreconditionError("document must be a JSON object")
    unknown = set(raw) - _DOCUMENT_KEYS
    if unknown:
        raise PreconditionError(f"unknown document keys: {sorted(unknown)}")
    n = raw.get("n")
    if not isinstance(n, int) or n < 1:
        raise PreconditionError("document needs a positive integer 'n'")
    names = raw.get("vars")
    if names is None:
        names = list(default_variables(n))
    if (
        not isinstance(names, list)
        or len(names) != n
        or len(set(names)) != n
        or not all(isinstance(v, str) and v for v in names)
    ):
        raise PreconditionError(f"'vars' must be {n} distinct nonempty names")
    gens_raw = raw.get("generators")
    if not isinstance(gens_raw, list):
        raise PreconditionError("'generators' must be a list")
    gens: list[Vec] = []
    for item in gens_raw:
        if isinstance(item, str):
            gens.append(parse_monomial(item, tuple(names)))
            continue
        if (
            not isinstance(item, list)
            or len(item) != n
            or not all(isinstance(e, int) and e >= 0 for e in item)
        ):
            raise PreconditionError(f"bad generator entry {item!r}")
        gens.append(tuple(item))
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise PreconditionError("'name' must be a string")
    attributes = raw.get("attributes", {})
    if not isinstance(attributes, dict):
        raise PreconditionError("'attributes' must be an object")
    return IdealDocument(n, tuple(names), tuple(gens), name, attributes)


def document_to_ideal(doc: IdealDocument) -> MonomialIdeal:
    ideal = minimalize(doc.n, doc.generators)
    if sorted(doc.generators) != list(ideal.gens):
        warnings.warn(
            f"generators were not minimal; kept {len(ideal.gens)} of {len(doc.generators)}",
            NonminimalInputWarning,
            stacklevel=2,
        )
    return ideal


def ideal_to_document(
    ideal: MonomialIdeal,
    vars: tuple[str, ...] | None = None,
    name: str | None = None,
    attributes: dict | None = None,
) -> IdealDocument:
    return IdealDocument(
        ideal.n,
        tuple(vars) if vars is not None else default_variables(ideal.n),
        ideal.gens,
        name,
        dict(attributes or {}),
    )


def serialize_ideal_document(doc: IdealDocument) -> str:
    payload: dict = {
        "n": doc.n,
        "vars": list(doc.vars),
        "generators": [list(g) for g in doc.generators],
    }
    if doc.name is not None:
        payload["name"] = doc.name
    if doc.attributes:
        payload["attributes"] = doc.attributes
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def document_hash(doc: IdealDocument) -> str:
    return hashlib.sha256(serialize_ideal_document(doc).encode("utf-8")).hexdigest()


def jsonify(value):
    """Recursively convert tuples, sets and vector keys to plain JSON values."""
    if isinstance(value, dict):
        return {_string_key(k): jsonify(v) for k, v in sorted(value.items(), key=lambda kv: _string_key(kv[0]))}
    if isinstance(value, (set, frozenset)):
        return [jsonify(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    from fractions import Fraction

    if isinstance(value, Fraction):
        return str(value)
    raise PreconditionError(f"value {value!r} is not serializable")


def _string_key(key) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, int):
        return str(key)
    if isinstance(key, tuple):
        return ",".join(str(e) for e in key)
    raise PreconditionError(f"key {key!r} is not serializable")


def build_report(command: list[str], doc: IdealDocument | None, results: dict,
                 notes: list[str] | None = None) -> dict:
    report = {
        "command": list(command),
        "results": jsonify(results),
        "version": REPORT_VERSION,
    }
    if doc is not None:
        report["input"] = {"hash": document_hash(doc), "n": doc.n}
        if doc.name is not None:
            report["input"]["name"] = doc.name
    if notes:
        report["notes"] = list(notes)
    return report


def serialize_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
