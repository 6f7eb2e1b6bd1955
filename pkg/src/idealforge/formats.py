"""Text formats: coefficient lists, code descriptors and report rendering.

Coefficient lists are ascending and comma-separated everywhere (command line
and files): ``1,0,-1/2`` is 1 - x^2/2. Values are serialized as strings so
rationals stay exact.
"""

import json
from pathlib import Path
from typing import Any

from .algebra import DenseMatrix, FieldSpec, Polynomial, RootSet, Value, mat_rank
from .exceptions import IdealForgeError, UsageError

COEFFICIENT_GRAMMAR = "comma-separated ascending coefficients, e.g. 1,0,-1 or 1/2,3"
DESCRIPTOR_KEYS = ("field", "phi1", "phi2", "a", "b")


def parse_field(text: str, flag: str = "--field") -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except IdealForgeError as e:
        raise UsageError(f"{flag}: {e}") from e


def parse_coefficients(field: FieldSpec, text: str, flag: str) -> tuple[Value, ...]:
    """Read a coefficient list; every error names the flag and the grammar."""
    items = [item.strip() for item in text.split(",")]
    if not text.strip() or any(item == "" for item in items):
        raise UsageError(f"{flag}: expected {COEFFICIENT_GRAMMAR}, got {text!r}")
    try:
        return field.vector(items)
    except IdealForgeError as e:
        raise UsageError(f"{flag}: {e} (expected {COEFFICIENT_GRAMMAR})") from e


def parse_polynomial(field: FieldSpec, text: str, flag: str) -> Polynomial:
    return Polynomial(field, parse_coefficients(field, text, flag))


def parse_vector(field: FieldSpec, text: str, length: int, flag: str) -> tuple[Value, ...]:
    """Coefficient list zero-padded to ``length``; longer lists are refused."""
    values = parse_coefficients(field, text, flag)
    if len(values) > length:
        raise UsageError(f"{flag}: {len(values)} coefficients given, at most {length} allowed")
    return values + (field.zero,) * (length - len(values))


# =============================================================================
# Code descriptors
# =============================================================================


def descriptor_from_text(field_tag: str, phi1: str, phi2: str, a: str, b: str) -> dict[str, Any]:
    """Descriptor from command-line coefficient lists."""
    field = parse_field(field_tag)
    return {
        "field": field.tag,
        "phi1": [field.format(v) for v in parse_coefficients(field, phi1, "--phi1")],
        "phi2": [field.format(v) for v in parse_coefficients(field, phi2, "--phi2")],
        "a": [field.format(v) for v in parse_coefficients(field, a, "--a")],
        "b": [field.format(v) for v in parse_coefficients(field, b, "--b")],
    }


def load_code_descriptor(path: str | Path) -> dict[str, Any]:
    """
    Read a code descriptor from JSON.

    Any JSON object with the keys field/phi1/phi2/a/b is accepted, including
    a code report written with ``--output json``; other keys are ignored.
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"--input: cannot read code descriptor {path}: {e}") from e

    if isinstance(data, dict) and isinstance(data.get("code"), dict):
        data = data["code"]
    if not isinstance(data, dict):
        raise UsageError(f"--input: {path} does not hold a JSON object")
    missing = [key for key in DESCRIPTOR_KEYS if key not in data]
    if missing:
        raise UsageError(f"--input: descriptor is missing {', '.join(missing)}")
    for key in DESCRIPTOR_KEYS[1:]:
        if not isinstance(data[key], list):
            raise UsageError(f"--input: '{key}' must be a list of coefficients")
    return {key: data[key] for key in DESCRIPTOR_KEYS}


def descriptor_polynomials(descriptor: dict[str, Any]) -> tuple[FieldSpec, list[Polynomial]]:
    """Field and (phi1, phi2, a, b) of a descriptor."""
    field = parse_field(str(descriptor["field"]))
    polys = []
    for key in DESCRIPTOR_KEYS[1:]:
        try:
            polys.append(Polynomial(field, field.vector([str(v) for v in descriptor[key]])))
        except IdealForgeError as e:
            raise UsageError(f"{key}: {e}") from e
    return field, polys


def dump_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


# =============================================================================
# Pretty rendering
# =============================================================================


def render_matrix(matrix: DenseMatrix, label: str = "rank") -> str:
    """Right-aligned entries followed by a rank line."""
    cells = matrix.to_strings()
    width = max((len(c) for row in cells for c in row), default=1)
    lines = ["[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]
    lines.append(f"{label} = {mat_rank(matrix)}  ({matrix.rows} x {matrix.cols})")
    return "\n".join(lines)


def render_mapping(data: dict[str, Any]) -> str:
    width = max((len(k) for k in data), default=0)
    lines = []
    for key, value in data.items():
        if isinstance(value, list):
            value = "(" + ", ".join(str(v) for v in value) + ")"
        lines.append(f"{key.ljust(width)} : {value}")
    return "\n".join(lines)


def render_roots(roots: RootSet) -> str:
    listed = ", ".join(roots.field.format(r) for r in roots.roots) or "none"
    status = "splits into distinct linear factors" if roots.complete else "does not split"
    return f"roots of {roots.poly} over {roots.field}: {listed}\n{status}"


def render_summary(summary: dict[str, Any]) -> str:
    head = {k: v for k, v in summary.items() if k not in ("failures", "regimes")}
    lines = [render_mapping(head)]
    for regime, count in summary.get("regimes", {}).items():
        lines.append(f"  regime {regime}: {count}")
    for failure in summary.get("failures", []):
        lines.append(f"  FAILED trial {failure['index']} (seed {failure['seed']})")
        lines.append(f"    instance: {json.dumps(failure['instance'])}")
        if "error" in failure:
            lines.append(f"    error:    {failure['error']}")
        else:
            lines.append(f"    predicted: {json.dumps(failure['predicted'])}")
            lines.append(f"    observed:  {json.dumps(failure['observed'])}")
    return "\n".join(lines)
