"""
Input and output handling for the Atom Decomposer application.

This module parses edge-list files into graphs and reads and writes the
JSON result document produced by the decompose command.
"""

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Iterable, List, Optional, Tuple, Union

from config import COMMENT_PREFIX
from errors import EdgeListParseError, ResultDocumentError
from models import Decomposition, Graph, LoadReport

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_edge_list(stream: Iterable[str]) -> Graph:
    """
    Parse an edge list into a Graph.

    Args:
        stream: Lines of text; each non-comment line holds two labels

    Returns:
        Graph with ids assigned in first-appearance order

    Raises:
        EdgeListParseError: On a malformed line or when no edge is found
    """
    graph, _ = load_edge_list_with_report(stream)
    return graph


def load_edge_list_with_report(stream: Iterable[str]) -> Tuple[Graph, LoadReport]:
    """
    Parse an edge list and report the normalizations applied.

    Blank lines and lines starting with '#' are skipped. Self-loops are
    dropped and duplicate edges merged; both are counted in the report
    and logged as a warning.

    Raises:
        EdgeListParseError: On a line without exactly two labels, or when
            the input holds no edge at all
    """
    pairs: List[Tuple[str, str]] = []
    for line_number, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith(COMMENT_PREFIX):
            continue
        tokens = text.split()
        if len(tokens) == 1:
            raise EdgeListParseError(f"label {tokens[0]!r} stands alone; isolated vertices are not allowed",
                                     line_number)
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 2 labels, found {len(tokens)}", line_number)
        pairs.append((tokens[0], tokens[1]))

    if not pairs:
        raise EdgeListParseError("the input contains no edges")

    graph, report = Graph.from_labeled_edges(pairs)
    if not report.clean:
        logger.warning("Dropped %d self-loops and merged %d duplicate edges",
                       report.self_loops, report.duplicate_edges)
    logger.debug("Loaded graph with %d vertices and %d edges", graph.n, graph.m)
    return graph, report


def load_edge_list_file(path: PathLike) -> Graph:
    """
    Load an edge-list file (UTF-8).

    Raises:
        OSError: If the file cannot be read
        EdgeListParseError: If the contents are malformed
    """
    with open(path, "r", encoding="utf-8") as handle:
        return load_edge_list(handle)


@dataclass
class ResultDocument:
    """
    Label form of a decomposition, as written to disk.

    atoms and separators are lists of sorted label lists, ordered by size
    and then lexicographically.
    """
    atoms: List[List[str]]
    separators: List[List[str]]
    algorithm: str
    tie_break: str
    wall_time_seconds: float
    vertices: int
    edges: int

    @classmethod
    def from_decomposition(cls, decomposition: Decomposition, graph: Graph) -> "ResultDocument":
        return cls(
            atoms=decomposition.atoms_as_labels(graph),
            separators=decomposition.separators_as_labels(graph),
            algorithm=decomposition.algorithm,
            tie_break=decomposition.tie_break,
            wall_time_seconds=decomposition.wall_time,
            vertices=graph.n,
            edges=graph.m,
        )

    @classmethod
    def from_dict(cls, data: object) -> "ResultDocument":
        """
        Validate and convert a parsed JSON object.

        Raises:
            ResultDocumentError: If keys are missing or have the wrong shape
        """
        if not isinstance(data, dict):
            raise ResultDocumentError("The result document must be a JSON object")
        for key in ("atoms", "algorithm"):
            if key not in data:
                raise ResultDocumentError(f"The result document has no {key!r} key")
        atoms = _label_lists(data["atoms"], "atoms")
        separators = _label_lists(data.get("separators") or [], "separators")
        try:
            wall_time = float(data.get("wall_time_seconds", 0.0))
            vertices = int(data.get("vertices", 0))
            edges = int(data.get("edges", 0))
        except (TypeError, ValueError):
            raise ResultDocumentError("wall_time_seconds, vertices and edges must be numbers") from None
        return cls(atoms, separators, str(data["algorithm"]), str(data.get("tie_break", "")),
                   wall_time, vertices, edges)

    def to_dict(self) -> dict:
        return asdict(self)


def _label_lists(value: object, key: str) -> List[List[str]]:
    if not isinstance(value, list) or not all(isinstance(item, list) for item in value):
        raise ResultDocumentError(f"{key!r} must be a list of label lists")
    return [[str(label) for label in item] for item in value]


def write_result_document(document: ResultDocument, target: Optional[Union[PathLike, IO[str]]] = None) -> str:
    """
    Serialize the document as indented JSON.

    Args:
        document: The document to write
        target: Path or open text stream; when None the text is only returned

    Returns:
        The JSON text
    """
    text = json.dumps(document.to_dict(), indent=2) + "\n"
    if target is None:
        return text
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")
    return text


def read_result_document(path: PathLike) -> ResultDocument:
    """
    Read a result document from disk.

    Raises:
        OSError: If the file cannot be read
        ResultDocumentError: If the file is not a valid result document
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ResultDocumentError(f"Result document is not valid JSON: {e}") from None
    return ResultDocument.from_dict(data)
