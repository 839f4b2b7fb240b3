"""Self-avoiding walk enumeration and connective-constant bounds on lazy infinite graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    GraphError,
    HeightFunction,
    RootedGraph,
    fisher_semicubic,
    fisher_transform,
    girth_up_to,
    graph_from_spec,
    height_of,
    make_family,
    neighbors,
    quotient_cylinder,
    validate_height,
)
from .enum import (  # noqa: E402
    BudgetExceeded,
    CountSeries,
    SeriesCache,
    count_bridges,
    count_extendable,
    count_saws,
    count_saws_to,
    generating_function_eval,
)
