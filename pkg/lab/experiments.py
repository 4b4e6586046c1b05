import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from enumeration.cloud import collapse_ratio, enumerate_cloud, resolve_workers
from enumeration.frontier import periphery
from exchanges.exceptions import NoTrade, PreconditionError
from exchanges.models import ORIGIN, PlayerId
from invariance.models import ScaleTransform
from invariance.transforms import apply_scale, mirror
from solvers.catalog import ALGORITHMS, solve
from solvers.models import Algorithm
from .generator import generate, make_rng, positive_rational
from .greedy import greedy_one_for_one
from .models import ComparisonStats, MedianProbeReport, ProbeRow

logger = logging.getLogger(__name__)

REL_TOL = 1e-9


def _coordinates_agree(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=REL_TOL)
    return a == b


def points_agree(a, b):
    return _coordinates_agree(a.u_x, b.u_x) and _coordinates_agree(a.u_y, b.u_y)


def reports_agree(a, b):
    """Both found no trade, or both headline the same point."""
    if a is None or b is None:
        return a is None and b is None
    return points_agree(a.headline, b.headline)


def _solve_or_none(per, name, **options):
    try:
        return solve(per, name, **options)
    except NoTrade:
        return None


def _solve_instance(instance, algorithms, **options):
    per = periphery(enumerate_cloud(instance, workers=1, **options))
    return {name: _solve_or_none(per, name) for name in algorithms}


def _mirrors(original, mirrored):
    """The mirrored instance's choice is the original's with the coordinates swapped."""
    if original is None or mirrored is None:
        return original is None and mirrored is None
    swapped = sorted(point.swapped() for point in original.chosen)
    return len(swapped) == len(mirrored.chosen) and all(
        points_agree(a, b) for a, b in zip(swapped, sorted(mirrored.chosen))
    )


def _same_exchanges(original, scaled):
    if original is None or scaled is None:
        return original is None and scaled is None
    return original.exchange_set() == scaled.exchange_set()


def run_one(cfg, k, algorithms=None, limit=None, force=False):
    """Stats for the k-th instance of a batch, generated from seed cfg.seed + k."""
    run_cfg = cfg.for_run(k)
    return compare_on_instance(generate(run_cfg), run_cfg.seed, algorithms, limit, force)


def compare_on_instance(instance, seed=0, algorithms=None, limit=None, force=False):
    """
    One-instance stats. seed drives the factor X is rescaled by for the
    scale-invariance counters.
    """
    algorithms = tuple(algorithms or ALGORITHMS)
    options = {'limit': limit, 'force': force}
    cloud = enumerate_cloud(instance, workers=1, **options)
    per = periphery(cloud)
    reports = {name: _solve_or_none(per, name) for name in algorithms}

    mirrored = _solve_instance(mirror(instance), algorithms, **options)
    factor = positive_rational(make_rng(seed))
    scaled = _solve_instance(apply_scale(instance, ScaleTransform(PlayerId.X, factor)), algorithms, **options)

    nash, median = reports.get(Algorithm.NASH), reports.get(Algorithm.MEDIAN)
    greedy = greedy_one_for_one(instance)
    nash_product = nash.objective_value if nash is not None else Fraction(0)
    greedy_product = greedy.point.product if greedy.point.u_x > 0 and greedy.point.u_y > 0 else Fraction(0)

    return ComparisonStats(
        algorithms=algorithms,
        instances_run=1,
        agreement={a: {b: int(reports_agree(reports[a], reports[b])) for b in algorithms} for a in algorithms},
        ties={a: int(reports[a] is not None and reports[a].tie_count > 1) for a in algorithms},
        unique={a: int(reports[a] is not None and reports[a].is_unique) for a in algorithms},
        symmetric={a: int(_mirrors(reports[a], mirrored[a])) for a in algorithms},
        scale_invariant={a: int(_same_exchanges(reports[a], scaled[a])) for a in algorithms},
        no_trade=int(per.is_empty),
        median_differs_from_nash=int(
            nash is not None and median is not None and not reports_agree(nash, median)
        ),
        greedy_stuck=int(greedy.point == ORIGIN and nash_product > 0),
        collapse_ratios=(collapse_ratio(cloud),),
        greedy_gaps=(nash_product - greedy_product,),
    )


def _run_task(task):
    return run_one(*task)


def compare_algorithms(cfg, runs, workers=None, algorithms=None, limit=None, force=False):
    """
    Run every algorithm on runs generated instances and fold the results.

    Runs are folded in run order whatever the worker count, so the stats
    are identical for one worker or many.
    """
    algorithms = tuple(algorithms or ALGORITHMS)
    workers = resolve_workers(workers)
    stats = ComparisonStats.empty(algorithms)
    if runs <= 0:
        return stats

    logger.info("Comparing %d algorithms over %d instances on %d worker(s).", len(algorithms), runs, workers)
    tasks = [(cfg, k, algorithms, limit, force) for k in range(runs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_task, tasks))
    else:
        results = [_run_task(task) for task in tasks]
    for result in results:
        stats = stats.merge(result)
    return stats


def median_dislike_scale_probe(instance, factors, limit=None, force=False, workers=None):
    """
    Check that the median and Nash picks stay put, and apart, under rescaling.

    Every factor is applied to X and to Y in turn; the instance is
    re-enumerated and both rules re-run on the scaled periphery.
    """
    options = {'limit': limit, 'force': force, 'workers': workers}
    per = periphery(enumerate_cloud(instance, **options))
    if per.is_empty:
        raise PreconditionError("The periphery is empty; there is nothing to probe.")
    nash = solve(per, Algorithm.NASH)
    median = solve(per, Algorithm.MEDIAN)
    if nash.exchange_set() == median.exchange_set():
        raise PreconditionError(f"Nash and median agree at {nash.headline}; there is no dislike to probe.")

    rows = []
    for player in (PlayerId.X, PlayerId.Y):
        for factor in factors:
            scaled = periphery(enumerate_cloud(apply_scale(instance, ScaleTransform(player, factor)), **options))
            scaled_nash = solve(scaled, Algorithm.NASH).exchange_set()
            scaled_median = solve(scaled, Algorithm.MEDIAN).exchange_set()
            rows.append(ProbeRow(
                player=player,
                factor=Fraction(factor),
                nash_unchanged=scaled_nash == nash.exchange_set(),
                median_unchanged=scaled_median == median.exchange_set(),
                distinct=scaled_nash != scaled_median,
            ))
    return MedianProbeReport(nash_point=nash.headline, median_point=median.headline, rows=tuple(rows))
