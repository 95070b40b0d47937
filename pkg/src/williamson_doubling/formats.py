"""Text and JSON formats for sequences, quads, matrices and search reports.

Quad text: four '+'/'-' lines per quad, quads separated by a ``----`` line,
blank lines and ``#`` comments ignored.  Matrix text: one '+'/'-' line per
row, matrices separated the same way.  JSON documents are one per line.
"""

from __future__ import annotations

import json
from typing import Iterable

import numpy as np

from .seqcore import BinarySequence, CorrelationSpectrum, SequenceError
from .williamson import VerificationReport, WilliamsonQuad

SEPARATOR = "----"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def parse_sequence(text: str, line: int | None = None) -> BinarySequence:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty sequence", line)
    offset = len(text) - len(text.lstrip())
    for col, ch in enumerate(stripped):
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", line, offset + col + 1)
    return BinarySequence.from_string(stripped)


def _blocks(text: str) -> list[list[tuple[int, str]]]:
    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == SEPARATOR:
            blocks.append([])
            continue
        blocks[-1].append((lineno, raw))
    return [b for b in blocks if b]


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def parse_quads(text: str) -> list[WilliamsonQuad]:
    """Parse quad text, or any JSON document(s) carrying a ``quads`` list."""
    if _is_json(text):
        return [q for doc in _json_docs(text) for q in _quads_from_doc(doc)]
    quads = []
    for block in _blocks(text):
        first = block[0][0]
        if len(block) != 4:
            raise ParseError(f"a quad needs 4 sequences, found {len(block)}", first)
        seqs = [parse_sequence(raw, lineno) for lineno, raw in block]
        n = len(seqs[0])
        for (lineno, _), s in zip(block, seqs):
            if len(s) != n:
                raise ParseError(f"sequence length {len(s)} differs from {n}", lineno)
        quads.append(WilliamsonQuad(*seqs))
    if not quads:
        raise ParseError("no quads found")
    return quads


def format_quad(q: WilliamsonQuad) -> str:
    return "".join(f"{s}\n" for s in q.strings())


def format_quads(quads: Iterable[WilliamsonQuad]) -> str:
    return f"{SEPARATOR}\n".join(format_quad(q) for q in quads)


def parse_matrices(text: str) -> list[np.ndarray]:
    if _is_json(text):
        return [_matrix_from_doc(doc) for doc in _json_docs(text)]
    out = []
    for block in _blocks(text):
        rows = [parse_sequence(raw, lineno) for lineno, raw in block]
        m = len(rows)
        for (lineno, _), r in zip(block, rows):
            if len(r) != m:
                raise ParseError(f"row length {len(r)} but {m} rows", lineno)
        out.append(np.array([r.entries for r in rows], dtype=np.int64))
    if not out:
        raise ParseError("no matrix found")
    return out


def _row_string(row) -> str:
    return "".join("+" if x > 0 else "-" for x in row)


def format_matrix(m: np.ndarray) -> str:
    return "".join(_row_string(r) + "\n" for r in m)


def format_matrices(ms: Iterable[np.ndarray]) -> str:
    return f"{SEPARATOR}\n".join(format_matrix(m) for m in ms)


# JSON documents

def dumps(doc: dict) -> str:
    return json.dumps(doc) + "\n"


def _json_docs(text: str) -> list[dict]:
    docs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, lineno, exc.colno) from None
        if not isinstance(doc, dict):
            raise ParseError("expected a JSON object", lineno)
        docs.append(doc)
    return docs


def _quads_from_doc(doc: dict) -> list[WilliamsonQuad]:
    if "quads" not in doc:
        raise ParseError("JSON document has no 'quads' field")
    out = []
    for item in doc["quads"]:
        if not isinstance(item, list) or len(item) != 4 or not all(isinstance(s, str) for s in item):
            raise ParseError(f"malformed quad entry {item!r}")
        try:
            out.append(WilliamsonQuad.from_strings(*item))
        except SequenceError as exc:
            raise ParseError(str(exc)) from None
    return out


def quads_document(quads: Iterable[WilliamsonQuad]) -> dict:
    return {"quads": [list(q.strings()) for q in quads]}


def matrix_document(m: np.ndarray) -> dict:
    return {"order": int(m.shape[0]), "rows": [_row_string(r) for r in m]}


def _matrix_from_doc(doc: dict) -> np.ndarray:
    try:
        order, rows = doc["order"], doc["rows"]
    except KeyError as exc:
        raise ParseError(f"matrix document missing {exc.args[0]!r}") from None
    seqs = [parse_sequence(r) for r in rows]
    if len(seqs) != order or any(len(s) != order for s in seqs):
        raise ParseError(f"matrix document is not {order}x{order}")
    return np.array([s.entries for s in seqs], dtype=np.int64)


def spectrum_document(spec: CorrelationSpectrum) -> dict:
    return {"n": spec.n, "values": list(spec.values)}


def verification_document(q: WilliamsonQuad, report: VerificationReport) -> dict:
    return {
        "order": q.order,
        "quad": list(q.strings()),
        "is_williamson": report.is_williamson,
        "symmetry_failures": [[label, k] for label, k in report.symmetry_failures],
        "paf_violations": [[s, v] for s, v in report.paf_violations],
    }


def report_document(report) -> dict:
    """Machine form of a search report; wall time is left out so it is reproducible."""
    return {
        "order": report.order,
        "raw_count": report.raw_count,
        "candidates_examined": report.candidates_examined,
        "quads": [list(q.strings()) for q in report.normalized_quads],
    }


def parse_report_document(text: str) -> dict:
    """Load a machine search report, checking field types and quad syntax."""
    docs = _json_docs(text)
    if len(docs) != 1:
        raise ParseError(f"expected one report document, found {len(docs)}")
    doc = docs[0]
    for key in ("order", "raw_count", "candidates_examined"):
        if not isinstance(doc.get(key), int):
            raise ParseError(f"report field {key!r} must be an integer")
    quads = _quads_from_doc(doc)
    return {
        "order": doc["order"],
        "raw_count": doc["raw_count"],
        "candidates_examined": doc["candidates_examined"],
        "quads": [list(q.strings()) for q in quads],
    }


def format_report(report) -> str:
    """Human summary as ``#`` comments followed by the quads in quad text.

    The comment lines are ignored by the quad parser, so the output can be
    piped straight into ``double``, ``verify`` or ``hadamard``.
    """
    head = [
        f"# order {report.order}",
        f"# raw_count {report.raw_count}",
        f"# normalized_count {len(report.normalized_quads)}",
        f"# candidates_examined {report.candidates_examined}",
        f"# pruning {'on' if report.pruned else 'off'}",
        f"# elapsed {report.elapsed:.3f}s",
    ]
    return "\n".join(head) + "\n" + format_quads(report.normalized_quads)


def format_verification(q: WilliamsonQuad, report: VerificationReport) -> str:
    if report.is_williamson:
        return f"WILLIAMSON order {q.order}\n"
    lines = [f"NOT WILLIAMSON order {q.order}"]
    lines += [f"  asymmetric {label} k={k}" for label, k in report.symmetry_failures]
    lines += [f"  s={s} sum={v}" for s, v in report.paf_violations]
    return "\n".join(lines) + "\n"

