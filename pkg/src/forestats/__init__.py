"""Statistics, codes and equidistribution identities for labeled plane forests."""

from .forest import Forest, ForestError, parse_forest, path_forest
from .labelings import DomainError, ExhaustionBounds, enumerate_labelings, parse_labeling
from .genfun import MultiPoly, distribution, product_formula

__all__ = [
    "DomainError",
    "ExhaustionBounds",
    "Forest",
    "ForestError",
    "MultiPoly",
    "distribution",
    "enumerate_labelings",
    "parse_forest",
    "parse_labeling",
    "path_forest",
    "product_formula",
]
