"""Graph product rigidity toolkit.

Graphs are passed as graph6 strings, as dicts ``{"n": ..., "edges": [...]}``
or as labeled-graph dicts with an extra ``"labels"`` list. Reports come back
as plain dicts with the same layout as the command-line JSON output.
"""

from __future__ import annotations

import json
import os
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

from . import _core
from ._core import CapExceeded, InputError

__all__ = [
    "CapExceeded",
    "InputError",
    "analyze",
    "boundary",
    "catalog",
    "classify",
    "enumerate_words",
    "inverse",
    "isomorphism",
    "lemmas",
    "multiply",
    "parabolic_member",
    "parse",
    "product_member",
    "reduce",
    "sample",
    "split",
    "to_dot",
    "to_graph6",
    "verify",
]

GraphLike = Union[str, Mapping[str, Any]]


def _doc(graph: GraphLike) -> str:
    if isinstance(graph, str):
        return graph.strip()
    if isinstance(graph, Mapping):
        return json.dumps(graph)
    raise TypeError(f"expected a graph6 string or a graph dict, got {type(graph).__name__}")


def _threads(threads: Optional[int]) -> int:
    if threads is not None:
        return threads
    raw = os.environ.get("GRAPHPROD_THREADS", "")
    if not raw:
        return 0
    if not raw.isdigit():
        raise InputError(f"GRAPHPROD_THREADS must be a non-negative integer, got '{raw}'")
    return int(raw)


def parse(graph: GraphLike) -> dict:
    """Validated document for a graph; labeled input keeps its labels."""
    return json.loads(_core.parse(_doc(graph)))


def to_graph6(graph: GraphLike) -> str:
    return _core.to_graph6(_doc(graph))


def to_dot(graph: GraphLike) -> str:
    return _core.to_dot(_doc(graph))


def analyze(graph: GraphLike) -> dict:
    return json.loads(_core.analyze(_doc(graph)))


def classify(a: Mapping[str, Any], b: Mapping[str, Any]) -> dict:
    return json.loads(_core.classify(_doc(a), _doc(b)))


def isomorphism(a: GraphLike, b: GraphLike, mode: Optional[str] = None) -> dict:
    """Witness map or "none". With mode, both inputs must be labeled."""
    return json.loads(_core.isomorphism(_doc(a), _doc(b), mode or ""))


def reduce(graph: GraphLike, letters: Iterable[int]) -> list[int]:
    return _core.reduce(_doc(graph), list(letters))


def inverse(graph: GraphLike, letters: Iterable[int]) -> list[int]:
    return _core.inverse(_doc(graph), list(letters))


def multiply(graph: GraphLike, a: Iterable[int], b: Iterable[int]) -> list[int]:
    return _core.multiply(_doc(graph), list(a), list(b))


def boundary(graph: GraphLike, letters: Iterable[int]) -> dict:
    return json.loads(_core.boundary(_doc(graph), list(letters)))


def parabolic_member(graph: GraphLike, letters: Iterable[int], subset: Iterable[int]) -> bool:
    return _core.parabolic_member(_doc(graph), list(letters), list(subset))


def product_member(graph: GraphLike, letters: Iterable[int], factors: Sequence[Iterable[int]]) -> bool:
    return _core.product_member(_doc(graph), list(letters), [list(f) for f in factors])


def split(graph: GraphLike, letters: Iterable[int], left: Iterable[int], right: Iterable[int]) -> dict:
    return json.loads(_core.split(_doc(graph), list(letters), list(left), list(right)))


def enumerate_words(graph: GraphLike, max_len: int, gens: Optional[Iterable[int]] = None,
                    elements: bool = False, cap: int = 10_000_000) -> dict:
    g = None if gens is None else list(gens)
    return json.loads(_core.enumerate_words(_doc(graph), max_len, g, elements, cap))


def catalog(n: int, threads: Optional[int] = None) -> list[str]:
    """graph6 representatives of the isomorphism classes on n vertices."""
    return _core.catalog(n, _threads(threads))


def lemmas() -> list[str]:
    return _core.lemmas()


def verify(max_n: int = 7, lemma: Optional[str] = None, drop_hypothesis: bool = False,
           threads: Optional[int] = None) -> dict:
    return json.loads(_core.verify(max_n, lemma, drop_hypothesis, _threads(threads)))


def sample(n: int = 50, p: float = 0.5, trials: int = 1000, seed: int = 1,
           threads: Optional[int] = None) -> dict:
    return json.loads(_core.sample(n, p, trials, seed, _threads(threads)))
