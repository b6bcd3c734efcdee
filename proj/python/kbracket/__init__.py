"""Kuperberg sl(3) bracket of virtual and free links from Gauss codes."""

import json as _json

from ._kbracket import (
    KBracketError,
    bracket_str,
    canon_key,
    diagram_girth,
    free_str,
    kus_key,
    kus_web_json,
    minimal_json,
    ngon,
    normalized_str,
    reduce_json,
    report_json,
    writhe,
)

__all__ = [
    "KBracketError",
    "bracket",
    "normalized",
    "free_bracket",
    "report",
    "writhe",
    "diagram_girth",
    "kus",
    "kus_web",
    "minimality",
    "reduce_web",
    "canonical",
    "ngon",
]


def bracket(code, threads=0):
    """Serialized state-sum bracket of a signed Gauss code."""
    return bracket_str(code, threads)


def normalized(code, threads=0):
    """Writhe-normalized bracket, the invariant form."""
    return normalized_str(code, threads)


def free_bracket(code, a, threads=0):
    """Sign-blind bracket at A = +1 or -1; accepts free-mode codes."""
    return free_str(code, a, threads)


def report(code, threads=0):
    """Full evaluation report as a dict."""
    return _json.loads(report_json(code, threads))


def kus(code):
    """Canonical key of the all-unoriented state web ('' if disconnected)."""
    return kus_key(code)


def kus_web(code):
    """All-unoriented state web as a dict."""
    return _json.loads(kus_web_json(code))


def minimality(code):
    """Crossing-minimality certificate as a dict."""
    return _json.loads(minimal_json(code))


def reduce_web(web):
    """Normal form of a web given as a dict or JSON string."""
    text = web if isinstance(web, str) else _json.dumps(web)
    return _json.loads(reduce_json(text))


def canonical(web):
    """Canonical serialization of a connected, circle-free web."""
    text = web if isinstance(web, str) else _json.dumps(web)
    return canon_key(text)
