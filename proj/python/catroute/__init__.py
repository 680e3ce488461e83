"""Category systems and greedy routing on graphs."""

from ._core import (
    ArgumentError,
    CategorySystem,
    DisconnectedError,
    Error,
    GenerationError,
    Graph,
    InternalError,
    ParseError,
    PropertyReport,
    RouteTrace,
    ValidationError,
    bench_csv,
    construct,
    diameter,
    generate,
    graph_categories,
    greedy_route,
    greedy_step,
    is_connected,
    is_internally_connected,
    is_shattered,
    is_tree,
    path_categories,
    run_fixtures,
    verify_all_pairs_routing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
