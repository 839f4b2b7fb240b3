from .cache import SeriesCache, default_cache_path
from .counting import (
    DEFAULT_BUDGET,
    count_bridges,
    count_extendable,
    count_extensions,
    count_saws,
    count_saws_to,
    generating_function_eval,
)
from .engine import BudgetExceeded, max_workers
from .series import BRIDGE, ENDPOINT, EXTENDABLE, SAW, CountSeries
