"""
Corpus runner for tracklab.
Generates random sphere triangulations, builds a maximal pattern on each and
checks the dual-tree theorem, the counting law and the edge-path property.
"""

import concurrent.futures
import random
import time
from dataclasses import dataclass
from typing import List

from ..builder.maximal import build_maximal
from ..dual_tree.regions import decompose
from ..dual_tree.theorem import check_tree
from ..dual_tree.tree import dual_tree, edge_walk
from ..curves.tracks import realize
from ..errors import TrackLabError
from ..models.schemas import CorpusReport, TrialRecord
from ..surface.generators import GeneratorSpec, generate
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TrialPlan:
    index: int
    v: int
    seed: int


def edge_path_failures(rd) -> List[str]:
    """Every edge walk must start and end at leaves and backtrack exactly at same-track pairs."""
    failures = []
    tri = rd.triangulation
    for eid in range(tri.edge_count):
        walk = edge_walk(rd, eid)
        if walk.endpoint_degrees != [1, 1]:
            failures.append(f"edge {walk.edge}: path ends at degrees {walk.endpoint_degrees}")
        turns = [k for k in range(1, len(walk.regions) - 1) if walk.regions[k - 1] == walk.regions[k + 1]]
        if turns != walk.backtracks:
            failures.append(f"edge {walk.edge}: turns {turns} but same-track pairs at {walk.backtracks}")
    return failures


def run_trial(plan: TrialPlan) -> TrialRecord:
    """Build and check one random triangulation; library errors become failures."""
    start = time.perf_counter()
    tri = generate(GeneratorSpec('random', plan.v), seed=plan.seed)
    failures: List[str] = []
    e_p = steps = 0
    try:
        state = build_maximal(tri)
        steps = len(state.trace)
        rd = decompose(tri, realize(tri, state.combined))
        report = check_tree(tri, dual_tree(rd))
        e_p = report.e_p
        failures.extend(report.failures)
        failures.extend(edge_path_failures(rd))
    except TrackLabError as e:
        failures.append(f"{type(e).__name__}: {e}")

    elapsed = time.perf_counter() - start
    passed = not failures
    logger.log_trial(plan.index, tri.vertex_count, e_p, passed, elapsed)
    return TrialRecord(
        index=plan.index,
        seed=plan.seed,
        v=tri.vertex_count,
        e=tri.edge_count,
        f=tri.face_count,
        e_P=e_p,
        passed=passed,
        builder_steps=steps,
        failures=failures,
        wall_time=round(elapsed, 6),
    )


class CorpusRunner:
    """Runs seeded trials, optionally across processes, aggregating in trial order."""

    def __init__(self, jobs: int = 1):
        self.jobs = max(1, jobs)

    @staticmethod
    def plan(trials: int, min_v: int, max_v: int, master_seed: int) -> List[TrialPlan]:
        if trials < 0:
            raise ValueError("trials must be non-negative")
        if min_v < 4 or max_v < min_v:
            raise ValueError(f"need 4 <= min_v <= max_v, got {min_v}..{max_v}")
        rng = random.Random(master_seed)
        return [TrialPlan(i, rng.randint(min_v, max_v), rng.randrange(2 ** 31)) for i in range(trials)]

    def run(self, trials: int, min_v: int, max_v: int, master_seed: int = 0) -> CorpusReport:
        plans = self.plan(trials, min_v, max_v, master_seed)
        logger.info(f"Running {len(plans)} trial(s) with {self.jobs} job(s)")
        if self.jobs > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.jobs) as executor:
                records = list(executor.map(run_trial, plans))
        else:
            records = [run_trial(p) for p in plans]

        passed = sum(1 for r in records if r.passed)
        return CorpusReport(
            master_seed=master_seed,
            trials=records,
            total=len(records),
            passed=passed,
            failed=len(records) - passed,
            count_law_holds=sum(1 for r in records if r.e_P == 2 * r.v - 3),
        )
