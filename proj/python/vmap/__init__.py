"""Rectangular space-filling maps of vertex-weighted graphs."""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from . import _core
from ._core import (
    BorderTooWide,
    DisconnectedError,
    GraphError,
    aspect_ratio_loss,
    bench_aspect_ratio,
    builtin_names,
    cooling_schedule,
    dar_partition,
    lower_temperature,
    sew_partition,
)

__all__ = [
    "BorderTooWide",
    "DisconnectedError",
    "GraphError",
    "Layout",
    "QueryError",
    "aspect_ratio_loss",
    "bench_aspect_ratio",
    "builtin_graph",
    "builtin_names",
    "cooling_schedule",
    "dar_partition",
    "layout",
    "load_layout",
    "lower_temperature",
    "measure",
    "sew_partition",
]

LAYOUT_FORMAT = _core.LAYOUT_FORMAT


class QueryError(Exception):
    def __init__(self, status: int, body: Mapping[str, Any]):
        super().__init__(f"{status}: {body.get('message', body.get('error'))}")
        self.status = status
        self.body = dict(body)


def builtin_graph(name: str) -> dict:
    return json.loads(_core.builtin_graph(name))


def measure(graph: Mapping[str, Any], rects: Sequence[Sequence[float]], ratio: float = 1.5,
            weights: Sequence[float] = (0.5, 0.5, 0.0), eps: float = 1e-9) -> dict:
    return json.loads(_core.measure(json.dumps(graph), [tuple(r) for r in rects], ratio, tuple(weights), eps))


class Layout:
    """A layout document with route queries and SVG rendering."""

    def __init__(self, text: str):
        self.text = text
        self.document = json.loads(text)
        self._session = _core.Session(text)

    def _get(self, target: str) -> dict:
        status, body = self._session.get(target)
        data = json.loads(body)
        if status != 200:
            raise QueryError(status, data)
        return data

    def get(self, target: str) -> tuple[int, dict]:
        status, body = self._session.get(target)
        return status, json.loads(body)

    def ego(self, vertex: str) -> list[dict]:
        return self._get(f"/ego/{_quote(vertex)}")["channels"]

    def path(self, a: str, b: str, geometric: bool = False) -> dict:
        query = "?mode=geometric" if geometric else ""
        return self._get(f"/path/{_quote(a)}/{_quote(b)}{query}")

    def svg(self, ego: str | None = None, path: tuple[str, str] | None = None, labels: bool = True,
            debug_cuts: bool = False) -> str:
        return self._session.svg(ego=ego, path=path, labels=labels, debug_cuts=debug_cuts)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.text)


def _quote(s: str) -> str:
    from urllib.parse import quote

    return quote(s, safe="")


def layout(graph: Mapping[str, Any] | None = None, *, builtin: str | None = None, ns: int = 2048, ni: int = 0,
           seed: int = 1, weights: Sequence[float] = (0.5, 0.5, 0.0), ratio: float = 1.5,
           border: float | None = None, restarts: int = 1, width: float = 1200.0, height: float = 800.0,
           weight_perturbation: bool = True, ego: bool = False) -> Layout:
    """Optimizes, adjusts borders and builds the corridor network for a graph."""
    text = _core.layout(graph_json=None if graph is None else json.dumps(graph), builtin=builtin, ns=ns, ni=ni,
                        seed=seed, weights=tuple(weights), ratio=ratio, border=border, restarts=restarts,
                        width=width, height=height, weight_perturbation=weight_perturbation, ego=ego)
    return Layout(text)


def load_layout(path: str) -> Layout:
    with open(path, encoding="utf-8") as f:
        return Layout(f.read())
