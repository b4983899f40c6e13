"""JSON encodings of linkings and proof nets.

Linking::

    {"left": 3 | ["a", "b", "c"], "right": 2,
     "links": [{"left": [0], "right": [1]}, ...], "loops": 0}

Proof net (axiom pairs are leaf indices of ``dual(source) @ target``)::

    {"source": "(a * b)", "target": "(a * b)", "axioms": [[0, 2], [1, 3]]}
"""
from __future__ import annotations

import json
from typing import Any

from .irel import VertexSet
from .linking import Link, Linking, LinkingError
from .mll import FormulaSyntaxError, NetError, ProofNet, parse_formula


class FormatError(ValueError):
    """Input document is malformed; the message names the offending location."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


def _vertex_set(v, where) -> VertexSet:
    if isinstance(v, bool) or not isinstance(v, (int, list)):
        raise FormatError(where, "expected a vertex count or a list of labels")
    if isinstance(v, int):
        if v < 0:
            raise FormatError(where, f"vertex count must be >= 0, got {v}")
        return VertexSet(v)
    try:
        return VertexSet(len(v), tuple(str(s) for s in v))
    except ValueError as e:
        raise FormatError(where, str(e)) from None


def _indices(v, where, size) -> list[int]:
    if not isinstance(v, list):
        raise FormatError(where, "expected a list of vertex indices")
    for k, i in enumerate(v):
        if isinstance(i, bool) or not isinstance(i, int):
            raise FormatError(f"{where}[{k}]", f"expected an integer, got {i!r}")
        if not (0 <= i < size):
            raise FormatError(f"{where}[{k}]", f"vertex {i} out of range (size {size})")
    return v


def linking_from_obj(obj: Any, where: str = "$") -> Linking:
    if not isinstance(obj, dict):
        raise FormatError(where, "expected an object")
    for key in ("left", "right"):
        if key not in obj:
            raise FormatError(where, f"missing key {key!r}")
    left = _vertex_set(obj["left"], f"{where}.left")
    right = _vertex_set(obj["right"], f"{where}.right")
    loops = obj.get("loops", 0)
    if isinstance(loops, bool) or not isinstance(loops, int) or loops < 0:
        raise FormatError(f"{where}.loops", f"expected a natural number, got {loops!r}")
    raw = obj.get("links", [])
    if not isinstance(raw, list):
        raise FormatError(f"{where}.links", "expected a list")
    links = []
    owner: dict[tuple[str, int], int] = {}
    for k, item in enumerate(raw):
        at = f"{where}.links[{k}]"
        if not isinstance(item, dict):
            raise FormatError(at, "expected an object")
        lf = _indices(item.get("left", []), f"{at}.left", left.size)
        rf = _indices(item.get("right", []), f"{at}.right", right.size)
        if not lf and not rf:
            raise FormatError(at, "empty footprint; count loops in 'loops' instead")
        for side, feet in (("left", lf), ("right", rf)):
            for i, v in enumerate(feet):
                if (side, v) in owner:
                    raise FormatError(
                        f"{at}.{side}[{i}]",
                        f"{side} vertex {v} is already in links[{owner[side, v]}]")
                owner[side, v] = k
        links.append(Link.of(lf, rf))
    try:
        return Linking(left, right, tuple(links), loops)
    except LinkingError as e:
        raise FormatError(where, str(e)) from None


def _vertex_obj(V: VertexSet):
    return list(V.labels) if V.labels is not None else V.size


def linking_to_obj(L: Linking) -> dict:
    return {
        "left": _vertex_obj(L.left),
        "right": _vertex_obj(L.right),
        "links": [{"left": list(l.left), "right": list(l.right)} for l in L.links],
        "loops": L.loops,
    }


def loads_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}:{e.lineno}:{e.colno}", e.msg) from None


def load_linking(path: str) -> Linking:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    obj = loads_json(text, path)
    try:
        return linking_from_obj(obj)
    except FormatError as e:
        raise FormatError(f"{path}: {e.where}", e.message) from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def net_from_obj(obj: Any, where: str = "$") -> ProofNet:
    if not isinstance(obj, dict):
        raise FormatError(where, "expected an object")
    formulas = []
    for key in ("source", "target"):
        if not isinstance(obj.get(key), str):
            raise FormatError(f"{where}.{key}", "expected a formula string")
        try:
            formulas.append(parse_formula(obj[key]))
        except FormulaSyntaxError as e:
            raise FormatError(f"{where}.{key}", str(e)) from None
    pairs = obj.get("axioms")
    if not isinstance(pairs, list):
        raise FormatError(f"{where}.axioms", "expected a list of index pairs")
    for k, p in enumerate(pairs):
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in p)):
            raise FormatError(f"{where}.axioms[{k}]", "expected a pair of leaf indices")
    try:
        return ProofNet.from_pairs(formulas[0], formulas[1], pairs)
    except (NetError, LinkingError) as e:
        raise FormatError(f"{where}.axioms", str(e)) from None


def net_to_obj(net: ProofNet) -> dict:
    return {"source": str(net.source), "target": str(net.target),
            "axioms": [list(p) for p in net.pairs]}


def load_net(path: str) -> ProofNet:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    obj = loads_json(text, path)
    try:
        return net_from_obj(obj)
    except FormatError as e:
        raise FormatError(f"{path}: {e.where}", e.message) from None


def parse_axiom_spec(text: str) -> list[tuple[int, int]]:
    """``"0-3,1-2"`` -> ``[(0, 3), (1, 2)]``."""
    out = []
    for k, part in enumerate(p for p in text.split(",") if p.strip()):
        try:
            i, j = part.split("-")
            out.append((int(i), int(j)))
        except ValueError:
            raise FormatError(f"axioms[{k}]", f"expected 'i-j', got {part.strip()!r}") from None
    return out
