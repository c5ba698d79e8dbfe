"""Tree-decompositions, blocks and Tutte-style decompositions."""
from minorhost.decomposition.blocks import Block, BlockStructure, blocks
from minorhost.decomposition.longpath import LongTreePath, ell, lift_long_path
from minorhost.decomposition.minor_part import MinorPart, locate_minor_part
from minorhost.decomposition.tree import (
    DecompositionReport,
    TreeDecomposition,
    torso,
    verify_decomposition,
)
from minorhost.decomposition.tutte import (
    TorsoKind,
    TutteDecomposition,
    tutte_decomposition,
    verify_tutte,
)

__all__ = [
    "Block",
    "BlockStructure",
    "DecompositionReport",
    "LongTreePath",
    "MinorPart",
    "TorsoKind",
    "TreeDecomposition",
    "TutteDecomposition",
    "blocks",
    "ell",
    "lift_long_path",
    "locate_minor_part",
    "torso",
    "tutte_decomposition",
    "verify_decomposition",
    "verify_tutte",
]
