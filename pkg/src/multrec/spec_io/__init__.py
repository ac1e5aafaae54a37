"""Reading and writing recursions: the DSL, JSON problem files, rendered solutions."""

from .documents import (decode_value, document_from_dict, document_to_dict,
                        dumps_document, encode_value, loads_document)
from .dsl import (ProblemDocument, Query, format_value, parse_recursion,
                  render_recursion)
from .render import render_solution, render_solution_json, solution_to_dict

__all__ = [
    "ProblemDocument", "Query", "decode_value", "document_from_dict",
    "document_to_dict", "dumps_document", "encode_value", "format_value",
    "loads_document", "parse_recursion", "render_recursion", "render_solution",
    "render_solution_json", "solution_to_dict",
]
