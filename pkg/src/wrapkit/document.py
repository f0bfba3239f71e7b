"""The ``wrapkit/1`` wrapping document: JSON with exact textual numbers.

Example::

    {
      "format": "wrapkit/1",
      "b": "2/1 + 1/1*sqrt(3)",
      "d": 3,
      "side_sq": "1/2 + 1/4*sqrt(3)",
      "construction": {"p": "2", "r": "1", "sign": "plus", "m": 1, "n": 1, "u": 8, "v": 1},
      "squares": [[["x0", "y0"], ["x1", "y1"], ["x2", "y2"], ["x3", "y3"]], ...]
    }

Every number is a QuadExt string ``"a_num/a_den + c_num/c_den*sqrt(d)"``.
Documents are read back without validating the squares; that is the
verifier's job.
"""
import json
from fractions import Fraction

from .characterize import WrapParams
from .construct import ConstructionParams, WrappingSpec
from .errors import DocumentError, WrapkitError
from .exact_field import common_radicand
from .expr import parse_b
from .geometry import SquareShape, dot, vsub

FORMAT = "wrapkit/1"


def to_document(spec):
    values = [spec.b, spec.side_sq] + [c for sq in spec.squares for v in sq.vertices for c in v]
    doc = {
        "format": FORMAT,
        "b": str(spec.b),
        "d": common_radicand(values),
        "side_sq": str(spec.side_sq),
        "construction": spec.params.as_dict() if spec.params is not None else None,
        "squares": [[[str(x), str(y)] for x, y in sq.vertices] for sq in spec.squares],
    }
    return doc


def dumps(spec):
    return json.dumps(to_document(spec), indent=1)


def _number(text, d, where):
    try:
        value = parse_b(text)
    except WrapkitError as exc:
        raise DocumentError(f"{where}: {exc}") from None
    if value.d not in (0, d):
        raise DocumentError(f"{where}: radicand {value.d} differs from document d = {d}")
    return value


def from_document(doc):
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise DocumentError(f"not a {FORMAT} document")
    try:
        d = int(doc["d"])
        b = _number(doc["b"], d, "b")
        side_sq = _number(doc["side_sq"], d, "side_sq")
        raw_squares = doc["squares"]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"malformed document: {exc}") from None
    squares = []
    for i, quad in enumerate(raw_squares):
        if len(quad) != 4:
            raise DocumentError(f"square {i} needs 4 vertices")
        verts = tuple((_number(x, d, f"square {i}"), _number(y, d, f"square {i}"))
                      for x, y in quad)
        e = vsub(verts[1], verts[0])
        squares.append(SquareShape(verts, dot(e, e)))
    params = None
    prov = doc.get("construction")
    if prov:
        w = WrapParams(Fraction(prov["p"]), Fraction(prov["r"]),
                       1 if prov.get("sign", "plus") == "plus" else -1)
        params = ConstructionParams(w, prov["m"], prov["n"], prov["u"], prov["v"], b)
    return WrappingSpec(b, squares, side_sq, params)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def save(spec, path):
    with open(path, "w") as fh:
        fh.write(dumps(spec))
        fh.write("\n")


def load(path):
    with open(path) as fh:
        return loads(fh.read())
