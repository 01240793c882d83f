"""Vanishing uniform Turán density certificates, layered 3-graphs and related constructions."""

from .core import ThreeGraph, Graph, PartPattern, generate_named
from .layered import LayerFunction, find_layered_function
from .orderings import Labeling
from .uniform import UniformZeroCertificate, certify_uniform_zero

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LayerFunction",
    "Labeling",
    "PartPattern",
    "ThreeGraph",
    "UniformZeroCertificate",
    "certify_uniform_zero",
    "find_layered_function",
    "generate_named",
]
