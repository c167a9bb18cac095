"""Parsing and serialization of problem documents.

Documents are JSON, UTF-8, with every rational written as a string
"p" or "p/q" so nothing ever round-trips through floating point.  Field
elements are arrays of rational strings (coefficients of powers of t).
Parse failures raise ProblemFormatError carrying a JSON path into the
document.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import CompatibilityFailure, ProblemFormatError, QTorusError
from .galois_action import build_action
from .numfield import NumberField
from .specialization import CentralCharacter
from .torus import QMatrix, term_key

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(value, path):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise ProblemFormatError(f"expected an integer or 'p/q' string, got {value!r}", path)


def parse_element(fld, value, path):
    if isinstance(value, (int, str)):
        return fld.from_rational(parse_rational(value, path))
    if not isinstance(value, list):
        raise ProblemFormatError("expected a coefficient array", path)
    coeffs = [parse_rational(v, f"{path}[{i}]") for i, v in enumerate(value)]
    if len(coeffs) > fld.degree:
        raise ProblemFormatError(
            f"coefficient array longer than field degree {fld.degree}", path
        )
    return fld.element(coeffs)


def parse_field(doc, path="$.field"):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ProblemFormatError("field description needs a 'kind'", path)
    kind = doc["kind"]
    try:
        if kind == "quadratic":
            return NumberField.quadratic(int(doc["D"]))
        if kind == "cyclotomic":
            return NumberField.cyclotomic(int(doc["l"]))
        if kind == "rational":
            return NumberField.rationals()
        if kind == "custom":
            min_poly = [
                parse_rational(c, f"{path}.min_poly[{i}]")
                for i, c in enumerate(doc["min_poly"])
            ]
            autos = doc.get("automorphisms", [])
            parsed = []
            for i, g in enumerate(autos):
                parsed.append(
                    [parse_rational(c, f"{path}.automorphisms[{i}][{j}]") for j, c in enumerate(g)]
                )
            return NumberField.custom(min_poly, parsed)
    except ProblemFormatError:
        raise
    except KeyError as err:
        raise ProblemFormatError(f"missing key {err}", path) from err
    except (ValueError, TypeError) as err:
        raise ProblemFormatError(str(err), path) from err
    raise ProblemFormatError(f"unknown field kind {kind!r}", path)


def parse_int_matrix(doc, path):
    if not isinstance(doc, list) or not doc:
        raise ProblemFormatError("expected a nonempty matrix", path)
    out = []
    for i, row in enumerate(doc):
        if not isinstance(row, list):
            raise ProblemFormatError("expected a matrix row", f"{path}[{i}]")
        out.append([int(x) for x in row])
    return out


def parse_qmatrix(fld, doc, path="$.q"):
    """Parse the commutation data.

    Structural problems (bad rationals, missing keys) raise
    ProblemFormatError; a well-formed matrix that fails its defining
    identities raises CompatibilityFailure so the caller reports a
    failed check rather than a parse error.
    """
    if not isinstance(doc, dict):
        raise ProblemFormatError("q must be an object", path)
    try:
        if "root_of_unity" in doc:
            sub = doc["root_of_unity"]
            l = int(sub["l"])
            S = parse_int_matrix(sub["s_matrix"], f"{path}.root_of_unity.s_matrix")
            if "epsilon" in sub:
                eps = parse_element(fld, sub["epsilon"], f"{path}.root_of_unity.epsilon")
            elif fld.kind == "cyclotomic":
                eps = fld.gen()
            else:
                raise ProblemFormatError(
                    "epsilon required unless the field is cyclotomic",
                    f"{path}.root_of_unity",
                )
            args = ("root_of_unity", l, eps, S)
        elif "entries" in doc:
            rows = doc["entries"]
            entries = [
                [parse_element(fld, x, f"{path}.entries[{i}][{j}]") for j, x in enumerate(row)]
                for i, row in enumerate(rows)
            ]
            orders = doc.get("declared_orders")
            if orders is not None:
                orders = parse_int_matrix(orders, f"{path}.declared_orders")
            args = ("entries", entries, orders)
        else:
            raise ProblemFormatError("q needs 'entries' or 'root_of_unity'", path)
    except ProblemFormatError:
        raise
    except KeyError as err:
        raise ProblemFormatError(f"missing key {err}", path) from err
    except (ValueError, TypeError) as err:
        raise ProblemFormatError(str(err), path) from err
    try:
        if args[0] == "root_of_unity":
            return QMatrix.from_root_of_unity(fld, args[1], args[2], args[3])
        return QMatrix(fld, args[1], declared_orders=args[2])
    except ValueError as err:
        raise CompatibilityFailure(
            f"commutation matrix check failed: {err}", witness={"path": path}
        ) from err


def parse_action(qmatrix, galois, doc, path="$.action"):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ProblemFormatError("action description needs a 'kind'", path)
    spec = dict(doc)
    if spec["kind"] == "explicit":
        try:
            spec["matrices"] = [
                parse_int_matrix(M, f"{path}.matrices[{i}]")
                for i, M in enumerate(doc["matrices"])
            ]
            spec["cocycle"] = [
                [
                    parse_element(qmatrix.field, v, f"{path}.cocycle[{i}][{j}]")
                    for j, v in enumerate(row)
                ]
                for i, row in enumerate(doc["cocycle"])
            ]
        except KeyError as err:
            raise ProblemFormatError(f"missing key {err}", path) from err
    try:
        return build_action(qmatrix, galois, spec)
    except (ValueError, KeyError) as err:
        raise ProblemFormatError(str(err), path) from err


def parse_character(qmatrix, doc, path="$.character"):
    if not isinstance(doc, dict):
        raise ProblemFormatError("character must be an object", path)
    which = doc.get("lattice", "l_center")
    if which not in ("l_center", "full_center"):
        raise ProblemFormatError("lattice must be 'l_center' or 'full_center'", f"{path}.lattice")
    values_doc = doc.get("values")
    if not isinstance(values_doc, list):
        raise ProblemFormatError("character needs a 'values' array", f"{path}.values")
    values = [
        parse_element(qmatrix.field, v, f"{path}.values[{i}]") for i, v in enumerate(values_doc)
    ]
    try:
        if which == "l_center":
            return CentralCharacter.for_l_center(qmatrix, values), which
        return CentralCharacter.for_full_center(qmatrix, values), which
    except ProblemFormatError:
        raise
    except QTorusError as err:
        raise ProblemFormatError(str(err), path) from err
    except ValueError as err:
        raise ProblemFormatError(str(err), path) from err


@dataclass
class ProblemSpec:
    field: object
    qmatrix: object
    action: object
    character: object = None
    which: str = "l_center"
    options: dict = dc_field(default_factory=dict)
    document: dict = dc_field(default_factory=dict)


def parse_problem(doc):
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem document must be an object")
    fld = parse_field(doc.get("field"), "$.field")
    qmatrix = parse_qmatrix(fld, doc.get("q"), "$.q")
    if "n" in doc and int(doc["n"]) != qmatrix.n:
        raise ProblemFormatError(f"n does not match the matrix size {qmatrix.n}", "$.n")
    action = parse_action(qmatrix, fld.galois, doc.get("action"), "$.action")
    character = None
    which = "l_center"
    if "character" in doc:
        character, which = parse_character(qmatrix, doc["character"], "$.character")
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ProblemFormatError("options must be an object", "$.options")
    return ProblemSpec(fld, qmatrix, action, character, which, options, doc)


def load_problem(pathname):
    try:
        with open(pathname, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as err:
        raise ProblemFormatError(f"invalid JSON: {err}", "$") from err
    return parse_problem(doc)


# ---------------------------------------------------------------------------
# serialization


def rational_str(value):
    return str(value)


def element_json(x):
    return [rational_str(c) for c in x.coeffs]


def tl_element_json(elt):
    return [
        {"exp": list(m), "coeff": element_json(c)}
        for m, c in sorted(elt.terms.items(), key=lambda t: term_key(t[0]))
    ]


def lattice_json(lat):
    return [list(row) for row in lat.basis]
