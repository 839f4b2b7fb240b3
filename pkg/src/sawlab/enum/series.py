from __future__ import annotations

from dataclasses import dataclass, field

SAW = "saw"
BRIDGE = "bridge"
EXTENDABLE = "extendable"
ENDPOINT = "endpoint"
KINDS = (SAW, BRIDGE, EXTENDABLE, ENDPOINT)


@dataclass(frozen=True)
class CountSeries:
    """Exact counts values[0..N] for one graph.

    `truncated` is set when the node-visit budget stopped the computation
    before `n_requested`; values then hold the longest complete prefix.
    """

    kind: str
    values: tuple
    graph_key: str
    params: dict = field(default_factory=dict)
    truncated: bool = False
    n_requested: int | None = None
    rigor: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1
