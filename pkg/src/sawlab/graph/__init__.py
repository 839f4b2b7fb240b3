from .core import (
    CERTIFIED,
    HEURISTIC,
    OUT,
    QUASI_TRANSITIVE,
    TRANSITIVE,
    UNDIRECTED,
    GraphError,
    HeightFunction,
    HeightReport,
    RootedGraph,
    VertexId,
    ball,
    distances_from,
    girth_up_to,
    graph_key,
    height_of,
    neighbors,
    validate_height,
)
from .families import FAMILIES, make_family
from .transforms import (
    fisher_semicubic,
    fisher_transform,
    graph_from_spec,
    hexagonal_black,
    quotient_cylinder,
)
