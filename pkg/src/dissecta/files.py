"""File formats: parsing, validation, and canonical serialization.

Documents are JSON.  Poset/arrangement files carry elements plus covers or
relation pairs and optional per-element attrs; set-model files carry
ground/subspaces/refinement/chambers.  Both kinds are versioned with a
"format": "dissecta/1" tag.  Canonical form fixes key order, sorts pair
lists, and emits attrs in element order, so re-serializing a canonical
file is byte-identical.

The environment variable DISSECTA_MAX_ELEMENTS (default 4096) caps the
number of elements accepted from a file.
"""

import hashlib
import json
import os

from .dissection import SetModel, load_arrangement
from .errors import ParseError
from .poset import build_poset

FORMAT_TAG = "dissecta/1"
DEFAULT_MAX_ELEMENTS = 4096


def max_elements():
    raw = os.environ.get("DISSECTA_MAX_ELEMENTS")
    if raw is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"DISSECTA_MAX_ELEMENTS is not an integer: {raw!r}") from None


def read_document(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"{path}: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    tag = doc.get("format")
    if tag is not None and tag != FORMAT_TAG:
        raise ParseError(f"{path}: unsupported format tag {tag!r}")
    return doc


def read_document_any(path):
    """Like read_document but also accepts a bare JSON list (member files)."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"{path}: {e}") from None
    if isinstance(doc, dict):
        tag = doc.get("format")
        if tag is not None and tag != FORMAT_TAG:
            raise ParseError(f"{path}: unsupported format tag {tag!r}")
    return doc


def digest(path):
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def _check_poset_doc(doc, where="document"):
    if "elements" not in doc or not isinstance(doc["elements"], list):
        raise ParseError(f"{where}: missing 'elements' list")
    if not all(isinstance(e, str) for e in doc["elements"]):
        raise ParseError(f"{where}: element ids must be strings")
    if len(doc["elements"]) > max_elements():
        raise ParseError(
            f"{where}: {len(doc['elements'])} elements exceed the "
            f"DISSECTA_MAX_ELEMENTS cap of {max_elements()}"
        )
    if "covers" in doc and "relation" in doc:
        raise ParseError(f"{where}: give 'covers' or 'relation', not both")
    pairs = doc.get("covers", doc.get("relation"))
    if pairs is None:
        raise ParseError(f"{where}: missing 'covers' or 'relation'")
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise ParseError(f"{where}: pairs must be two-element lists")


def parse_poset(doc, where="document"):
    _check_poset_doc(doc, where)
    mode = "covers" if "covers" in doc else "relation"
    return build_poset(doc["elements"], doc.get("covers", doc.get("relation")), mode=mode)


def parse_arrangement(doc, where="document"):
    _check_poset_doc(doc, where)
    attrs = doc.get("attrs")
    if not isinstance(attrs, dict):
        raise ParseError(f"{where}: arrangement files need an 'attrs' object with chi values")
    return load_arrangement(doc)


def parse_set_model(doc, where="document"):
    for key in ("ground", "subspaces", "refinement", "chambers"):
        if key not in doc or not isinstance(doc[key], list):
            raise ParseError(f"{where}: missing '{key}' list")
    if not all(isinstance(t, (str, int)) and not isinstance(t, bool)
               for t in doc["ground"]):
        raise ParseError(f"{where}: ground points must be strings or integers")
    if len(doc["ground"]) > max_elements():
        raise ParseError(f"{where}: ground set exceeds the element cap")
    ground = set(doc["ground"])
    for key in ("subspaces", "refinement", "chambers"):
        for s in doc[key]:
            if not isinstance(s, list):
                raise ParseError(f"{where}: every entry of '{key}' must be a list")
            stray = [t for t in s
                     if not isinstance(t, (str, int)) or t not in ground]
            if stray:
                raise ParseError(f"{where}: '{key}' references unknown points {stray[:4]!r}")
    return SetModel.build(doc["ground"], doc["subspaces"], doc["refinement"], doc["chambers"])


def parse_member_list(doc, where="document"):
    """Subset files: either a bare JSON list or {"elements": [...]}"""
    if isinstance(doc, list):
        return list(doc)
    if isinstance(doc, dict) and isinstance(doc.get("elements"), list):
        return list(doc["elements"])
    raise ParseError(f"{where}: expected a list of element ids")


_POSET_KEYS = ("format", "elements", "covers", "relation", "top", "hyperplanes", "attrs")
_SETMODEL_KEYS = ("format", "ground", "subspaces", "refinement", "chambers")
_ATTR_KEYS = ("chi", "dim")


def _json_key(value):
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def canonical_document(doc):
    """Rebuild a parsed document in canonical key and pair order."""
    if "ground" in doc:
        out = {"format": FORMAT_TAG}
        for key in _SETMODEL_KEYS[1:]:
            if key == "ground":
                out[key] = list(doc[key])
            else:
                out[key] = sorted(
                    (sorted(s, key=_json_key) for s in doc[key]),
                    key=_json_key,
                )
        return out
    out = {"format": FORMAT_TAG}
    for key in _POSET_KEYS[1:]:
        if key not in doc:
            continue
        if key in ("covers", "relation"):
            out[key] = sorted((list(p) for p in doc[key]), key=_json_key)
        elif key == "attrs":
            attrs = doc[key]
            out[key] = {
                _attr_key(el): {k: attrs[el][k] for k in _ATTR_KEYS if k in attrs[el]}
                for el in doc["elements"]
                if el in attrs
            }
        elif key == "hyperplanes":
            out[key] = sorted(doc[key], key=_json_key)
        else:
            out[key] = doc[key]
    return out


def _attr_key(el):
    # JSON object keys are strings; element ids in attrs are used verbatim
    return el


def dumps_canonical(doc):
    return json.dumps(canonical_document(doc), indent=2, ensure_ascii=False) + "\n"


def write_canonical(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(doc))
