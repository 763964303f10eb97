from ._restless import *  # noqa: F401,F403
from ._restless import __doc__  # noqa: F401


def solve(graph, source, delta, *, record_paths=False, prune=False):
    """Pick the unit solver when every delay is one, the general one otherwise."""
    if graph.uniform_delay_one:
        return solve_unit(graph, source, delta, record_paths=record_paths, prune=prune)
    return solve_general(graph, source, delta, record_paths=record_paths, prune=prune)


def path_to(result, graph, target):
    if graph.uniform_delay_one:
        return retrieve_path(result, graph, target)
    return retrieve_path_general(result, graph, target)
