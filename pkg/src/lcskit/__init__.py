"""Lower central series ranks of conjugation-free groups and their line arrangements."""

from .arrangement import (
    IntersectionLattice,
    RationalLine,
    RoundTripReport,
    fan_graph,
    induced_presentation,
    lattice,
    realize,
    round_trip_check,
)
from .errors import (
    ArrangementError,
    HypothesisError,
    LcsKitError,
    PresentationError,
    PresentationSyntaxError,
    RealizationError,
    ResourceLimitError,
)
from .holonomy import holonomy_phi2, holonomy_phi3, oracle_report
from .presentation import (
    CyclicRelation,
    IncidenceData,
    Presentation,
    incidence_of,
    is_conjugation_free,
    parse_presentation,
    read_presentation,
    validate,
)
from .ranks import RankTable, b2, lcs_series_check, phi2_combinatorial, phi_formula, witt
from .relgraph import (
    RelationGraph,
    betti,
    build_graph,
    contract,
    graphs_isomorphic,
    is_conjugation_free_graph,
    is_cycle_separated,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
