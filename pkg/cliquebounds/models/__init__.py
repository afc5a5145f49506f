"""Data models for representations, bounds, complexes, graphs, boards and oracle reports."""
from cliquebounds.models.board import BoardRun, BoardState, MoveRecord, MoveType
from cliquebounds.models.bounds import BoundReport, NonconsecReport, RatioStats, Winner
from cliquebounds.models.complexes import Complex, FaceSet
from cliquebounds.models.construction import ConstructionPlan, ConstructionTag
from cliquebounds.models.envelope import OutputEnvelope
from cliquebounds.models.graph import CliqueVector, Graph
from cliquebounds.models.oracle import (
    CensusEntry,
    CliqueCensus,
    ConbdStatus,
    ExtremalRow,
    ExtremalTable,
    NonexistenceReport,
    NonexistenceStatus,
    TheoremReport,
    Violation,
)
from cliquebounds.models.representations import CascadeRep, ColoredRep, LgbdRep
import logging
logger = logging.getLogger(__name__)


__all__ = [
    "BoardRun",
    "BoardState",
    "BoundReport",
    "CascadeRep",
    "CensusEntry",
    "CliqueCensus",
    "CliqueVector",
    "ColoredRep",
    "Complex",
    "ConbdStatus",
    "ConstructionPlan",
    "ConstructionTag",
    "ExtremalRow",
    "ExtremalTable",
    "FaceSet",
    "Graph",
    "LgbdRep",
    "MoveRecord",
    "MoveType",
    "NonconsecReport",
    "NonexistenceReport",
    "NonexistenceStatus",
    "OutputEnvelope",
    "RatioStats",
    "TheoremReport",
    "Violation",
    "Winner",
]
