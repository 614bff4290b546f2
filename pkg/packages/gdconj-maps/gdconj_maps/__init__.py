from gdconj_maps.errors import ExpressionSyntaxError, MapDomainError, MapError
from gdconj_maps.expr import Expr, parse_ast, pretty_expr
from gdconj_maps.maps import (
    AffineMap,
    ExprMap,
    LFMap,
    LipschitzNorm,
    Map,
    eval_map,
    lipschitz_norm,
    parse_expr,
    same_map,
    validate_class_M,
)
from gdconj_maps.matrix import CheckReport, Matrix2, Number, Rationalish, is_exact, parse_rational

__all__ = [
    "AffineMap",
    "CheckReport",
    "Expr",
    "ExprMap",
    "ExpressionSyntaxError",
    "LFMap",
    "LipschitzNorm",
    "Map",
    "MapDomainError",
    "MapError",
    "Matrix2",
    "Number",
    "Rationalish",
    "eval_map",
    "is_exact",
    "lipschitz_norm",
    "parse_ast",
    "parse_expr",
    "parse_rational",
    "pretty_expr",
    "same_map",
    "validate_class_M",
]
