from .cli import BraidExpr, build_parser, normal_form_to_dict, parse_braid, parse_expr, run

__all__ = [
    "BraidExpr",
    "build_parser",
    "normal_form_to_dict",
    "parse_braid",
    "parse_expr",
    "run",
]
