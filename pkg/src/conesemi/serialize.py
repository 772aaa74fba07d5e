"""Text, JSON and DOT renderings of a forest, plus a JSON loader."""

from __future__ import annotations

import json
from typing import Dict, List

from .cone import cone_new
from .errors import ParseError, UnknownFormatError
from .forest import Forest, ForestNode, Tree
from .orders import parse_order
from .positioned import classify
from .semigroup import from_gaps

FORMATS = ("text", "json", "dot")


def fmt_vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def fmt_vecs(vs) -> str:
    return "{" + ", ".join(fmt_vec(v) for v in vs) + "}"


def _offsets(forest: Forest) -> List[int]:
    out, total = [], 0
    for tree in forest.trees:
        out.append(total)
        total += len(tree)
    return out


def forest_to_dict(forest: Forest) -> Dict:
    """The JSON document; node ids are global and follow breadth-first order tree by tree."""
    trees = []
    for tree, off in zip(forest.trees, _offsets(forest)):
        nodes = []
        for n in tree.nodes:
            s = n.semigroup
            nodes.append({
                "id": off + n.id,
                "gaps": [list(g) for g in s.gaps],
                "beta": None if n.beta is None else list(n.beta),
                "parent_id": None if n.parent_id is None else off + n.parent_id,
                "genus": s.genus,
                "class": classify(s, forest.k, forest.order),
            })
        trees.append({"root": {"gaps": [list(g) for g in tree.root.semigroup.gaps]}, "nodes": nodes})
    return {
        "cone": {"generators": [list(g) for g in forest.cone.generators]},
        "k": list(forest.k),
        "order": forest.order.name,
        "trees": trees,
    }


def forest_from_dict(doc: Dict) -> Forest:
    try:
        cone_gens = doc["cone"]["generators"]
        cone = cone_new(len(cone_gens[0]), cone_gens)
        k = tuple(doc["k"])
        order = parse_order(doc["order"])
        trees = []
        for t in doc["trees"]:
            off = t["nodes"][0]["id"]
            depth: Dict[int, int] = {}
            nodes = []
            for raw in t["nodes"]:
                nid = raw["id"] - off
                parent = raw["parent_id"]
                parent = None if parent is None else parent - off
                depth[nid] = 0 if parent is None else depth[parent] + 1
                beta = None if raw["beta"] is None else tuple(raw["beta"])
                nodes.append(ForestNode(nid, from_gaps(cone, raw["gaps"]), beta, parent, depth[nid]))
            trees.append(Tree(tuple(nodes)))
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"malformed forest document: {exc!r}") from exc
    return Forest(cone, k, order, tuple(trees))


def load_forest(text: str) -> Forest:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return forest_from_dict(doc)


def _text(forest: Forest) -> str:
    head = f"P({fmt_vec(forest.k)}) over {forest.cone}, order {forest.order.name}"
    if forest.is_empty:
        return f"{head}\nP(k) is empty\n"
    lines = [f"{head}: {len(forest)} semigroups in {len(forest.trees)} trees"]
    for i, (tree, off) in enumerate(zip(forest.trees, _offsets(forest))):
        lines.append(f"tree {i}: {len(tree)} nodes")
        for n in tree.nodes:
            s = n.semigroup
            parent = "-" if n.parent_id is None else str(off + n.parent_id)
            beta = "-" if n.beta is None else fmt_vec(n.beta)
            lines.append(f"  [{off + n.id}] parent {parent} beta {beta} genus {s.genus} "
                         f"{classify(s, forest.k, forest.order)} gaps {fmt_vecs(s.gaps)}")
    return "\n".join(lines) + "\n"


def _dot(forest: Forest) -> str:
    lines = ["digraph forest {", "  node [shape=circle];"]
    for tree, off in zip(forest.trees, _offsets(forest)):
        for n in tree.nodes:
            nid = off + n.id
            beta = "-" if n.beta is None else fmt_vec(n.beta)
            shape = ", shape=doublecircle" if n.is_root else ""
            lines.append(f'  n{nid} [label="g={n.semigroup.genus}\\nbeta={beta}"{shape}];')
        for n in tree.nodes:
            if n.parent_id is not None:
                lines.append(f'  n{off + n.parent_id} -> n{off + n.id} [label="{fmt_vec(n.beta)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(forest: Forest, fmt: str = "text") -> str:
    """Deterministic serialization of ``forest`` as text, json or dot."""
    if fmt == "text":
        return _text(forest)
    if fmt == "json":
        return json.dumps(forest_to_dict(forest), indent=2) + "\n"
    if fmt == "dot":
        return _dot(forest)
    raise UnknownFormatError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
