"""Versioned JSON cache for structure constants (bit-exact round trip).

Schema: {"version": 1, "label": str, "dimension": int,
         "basis": [descriptor strings],
         "triples": [[i, j, k, "p/q + r/s i"], ...]}  (i < j)
"""

from __future__ import annotations

import json
import os
import sys

from .scalars import qi, parse_scalar

SCHEMA_VERSION = 1


def sc_to_document(basis):
    triples = []
    for i, row in sorted(basis.structure_constants().items()):
        for j, cc in sorted(row.items()):
            for k in sorted(cc):
                triples.append([i, j, k, str(cc[k])])
    return {
        "version": SCHEMA_VERSION,
        "label": basis.label,
        "dimension": basis.dim,
        "basis": list(basis.descriptors),
        "triples": triples,
    }


def document_to_sc(doc):
    sc = {}
    for i, j, k, val in doc["triples"]:
        sc.setdefault(i, {}).setdefault(j, {})[k] = parse_scalar(val)
    return sc


def save_structure_constants(cache_dir, basis):
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, "sc_%s.json" % basis.label)
    with open(path, "w") as fh:
        json.dump(sc_to_document(basis), fh, separators=(",", ":"))
    return path


def load_structure_constants(cache_dir, basis):
    """Install cached structure constants into ``basis`` if a valid cache
    exists; corrupt caches are reported and ignored (the caller recomputes)."""
    path = os.path.join(cache_dir, "sc_%s.json" % basis.label)
    if not os.path.exists(path):
        return False
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if (doc.get("version") != SCHEMA_VERSION
                or doc.get("label") != basis.label
                or doc.get("dimension") != basis.dim
                or doc.get("basis") != list(basis.descriptors)):
            raise ValueError("cache metadata mismatch")
        basis.set_structure_constants(document_to_sc(doc))
        return True
    except Exception as exc:  # corrupted cache: rebuild
        print("warning: ignoring corrupt cache %s (%s)" % (path, exc),
              file=sys.stderr)
        try:
            os.remove(path)
        except OSError:
            pass
        return False


def ensure_structure_constants(basis, cache_dir=None):
    """Load from cache when possible, else compute and (if possible) save."""
    if cache_dir and load_structure_constants(cache_dir, basis):
        return basis.structure_constants()
    sc = basis.structure_constants()
    if cache_dir:
        try:
            save_structure_constants(cache_dir, basis)
        except OSError as exc:
            print("warning: could not write cache: %s" % exc, file=sys.stderr)
    return sc
