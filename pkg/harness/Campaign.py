from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from algebra.Errors import InconclusiveSearch, PostconditionError, PreconditionError, StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.TextSyntax import format_sequence
from algebra.WeightSet import WeightSet
from extremal.ExtremalSearch import (
    DEFAULT_MAX_NODES,
    ConstantResult,
    SearchBudget,
    egz_constant,
    lower_bound_witness,
    max_zero_sum_free_length,
)
from harness.WeightFamilyReturner import WeightFamilyReturner

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_MISMATCH = "mismatch"
STATUS_INCONCLUSIVE = "inconclusive"
STATUS_FAILED = "failed"

EXIT_OK = 0
EXIT_INCONCLUSIVE = 2
EXIT_FALSIFIED = 3


@dataclass
class CampaignConfig:
    """
    Every knob of a verification campaign.

    Defaults follow the CLI; ``max_length`` left as ``None`` means the
    per-group default ``4|G| + 16``.
    """

    n_range: Tuple[int, int] = (2, 8)
    weight_families: List[str] = field(default_factory=lambda: ["singleton"])
    max_nodes: int = DEFAULT_MAX_NODES
    max_length: Optional[int] = None
    allow_unit_pruning: bool = True
    jobs: int = 1
    seed: int = 0
    output_format: str = "csv"
    output_path: Optional[str] = None
    timing: bool = False
    all_subsets_max_n: int = 8
    quiet: bool = True

    def __post_init__(self) -> None:
        low, high = self.n_range
        if low < 1 or low > high:
            raise StructuralError(f"n range {low}-{high} is empty or starts below 1.")
        if self.jobs < 1:
            raise StructuralError(f"jobs must be at least 1, got {self.jobs}.")
        if not self.weight_families:
            raise StructuralError("At least one weight family is required.")
        if self.output_format not in ("csv", "json"):
            raise StructuralError(f"Unknown output format {self.output_format!r}; expected csv or json.")

    def budget_for(self, G: GroupSpec) -> SearchBudget:
        return SearchBudget.for_group(
            G, max_length=self.max_length, max_nodes=self.max_nodes, allow_unit_pruning=self.allow_unit_pruning
        )


@dataclass(frozen=True)
class VerificationRow:
    """
    One (n, A) cell of the campaign.

    ``d_a``, ``e_a``, ``predicted`` and ``equal`` are ``None`` where the
    search was inconclusive; ``status`` tells which.
    """

    n: int
    weights: str
    d_a: Optional[int]
    e_a: Optional[int]
    predicted: Optional[int]
    equal: Optional[bool]
    witness_d: str
    witness_e: str
    nodes: int
    elapsed_ms: int
    status: str

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class CellTask:
    n: int
    weights: Tuple[int, ...]
    budget: SearchBudget
    timing: bool


# ---------------------------------------------------------------------
# Cell worker
# ---------------------------------------------------------------------
def _witness_text(witness: Optional[GSequence]) -> str:
    return "" if witness is None else format_sequence(witness)


def compute_cell(task: CellTask) -> VerificationRow:
    """
    Compute ``D_A`` and ``E_A`` for one cell independently.

    ``E_A`` only borrows ``D_A`` for its length ceiling ``D_A + n + 2``,
    which can widen the search but never narrow it.
    """
    started = time.perf_counter()
    G = GroupSpec.cyclic(task.n)
    A = WeightSet.for_group(task.weights, G)
    text = A.text()

    def elapsed() -> int:
        return round((time.perf_counter() - started) * 1000) if task.timing else 0

    try:
        d: ConstantResult = max_zero_sum_free_length(G, A, task.budget)
    except InconclusiveSearch as exc:
        logger.warning("D_A inconclusive for n=%d, A={%s}: %s", task.n, text, exc)
        return VerificationRow(task.n, text, None, None, None, None, _witness_text(exc.best_witness), "",
                               exc.nodes_explored, elapsed(), STATUS_INCONCLUSIVE)

    # constructive certificate of E_A >= D_A + n - 1
    try:
        lower_bound_witness(G, A, d.witness)
    except (PreconditionError, PostconditionError) as exc:
        logger.error("Lower-bound certificate failed for n=%d, A={%s}: %s", task.n, text, exc)
        return VerificationRow(task.n, text, d.value, None, d.value + task.n - 1, None,
                               format_sequence(d.witness), "", d.nodes_explored, elapsed(), STATUS_FAILED)

    ceiling = max(task.budget.max_length, d.value + task.n + 2)
    try:
        e = egz_constant(G, A, task.n, task.budget.widened(ceiling))
    except InconclusiveSearch as exc:
        logger.warning("E_A inconclusive for n=%d, A={%s}: %s", task.n, text, exc)
        return VerificationRow(task.n, text, d.value, None, d.value + task.n - 1, None,
                               format_sequence(d.witness), _witness_text(exc.best_witness),
                               d.nodes_explored + exc.nodes_explored, elapsed(), STATUS_INCONCLUSIVE)

    predicted = d.value + task.n - 1
    equal = e.value == predicted
    return VerificationRow(
        task.n, text, d.value, e.value, predicted, equal,
        format_sequence(d.witness), format_sequence(e.witness),
        d.nodes_explored + e.nodes_explored, elapsed(),
        STATUS_OK if equal else STATUS_MISMATCH,
    )


# ---------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------
class Campaign:
    """
    Runs the verification grid of one ``CampaignConfig``.

    Workflow
    --------
    1. ``build_cells`` expands every family for every ``n`` in range and
       deduplicates the ``(n, A)`` cells.
    2. ``run`` computes the cells, serially or on a process pool, and sorts
       rows by ``n`` then weight tuple.
    3. ``exit_code`` summarizes: 3 if any mismatch or failed certificate, else 2 if anything was
       inconclusive, else 0.
    """

    def __init__(self, config: CampaignConfig) -> None:
        self.config = config
        self.family_returner = WeightFamilyReturner(config.seed, config.all_subsets_max_n)
        self.rows: List[VerificationRow] = []

    def build_cells(self) -> List[CellTask]:
        low, high = self.config.n_range
        seen = set()
        cells = []
        for n in range(low, high + 1):
            G = GroupSpec.cyclic(n)
            budget = self.config.budget_for(G)
            for descriptor in self.config.weight_families:
                for A in self.family_returner.return_weight_sets(descriptor, n):
                    key = (n, A.weights)
                    if key in seen:
                        continue
                    seen.add(key)
                    cells.append(CellTask(n, A.weights, budget, self.config.timing))
        cells.sort(key=lambda c: (c.n, c.weights))
        return cells

    def _execute(self, cells: Sequence[CellTask]) -> List[VerificationRow]:
        progress = dict(total=len(cells), desc="verify", disable=self.config.quiet, leave=False)
        if self.config.jobs <= 1 or len(cells) <= 1:
            return [compute_cell(c) for c in tqdm(cells, **progress)]
        with ProcessPoolExecutor(max_workers=self.config.jobs) as ex:
            return list(tqdm(ex.map(compute_cell, cells), **progress))

    def run(self) -> List[VerificationRow]:
        cells = self.build_cells()
        logger.info("Verifying %d cells with %d worker(s).", len(cells), self.config.jobs)
        rows = self._execute(cells)
        paired = sorted(zip(cells, rows), key=lambda pair: (pair[0].n, pair[0].weights))
        self.rows = [row for _, row in paired]
        for row in self.rows:
            logger.info("n=%d A={%s}: D_A=%s E_A=%s status=%s", row.n, row.weights, row.d_a, row.e_a, row.status)
            if row.status == STATUS_MISMATCH:
                logger.error("Falsification candidate at n=%d, A={%s}: E_A=%s but D_A + n - 1 = %s; witness %s",
                             row.n, row.weights, row.e_a, row.predicted, row.witness_e)
        return self.rows

    def mismatches(self) -> List[VerificationRow]:
        return [r for r in self.rows if r.status == STATUS_MISMATCH]

    def inconclusive(self) -> List[VerificationRow]:
        return [r for r in self.rows if r.status == STATUS_INCONCLUSIVE]

    def failures(self) -> List[VerificationRow]:
        return [r for r in self.rows if r.status == STATUS_FAILED]

    def summary(self) -> str:
        counts = {status: 0 for status in (STATUS_OK, STATUS_MISMATCH, STATUS_INCONCLUSIVE, STATUS_FAILED)}
        for row in self.rows:
            counts[row.status] += 1
        return (
            f"{len(self.rows)} cells: {counts[STATUS_OK]} equal, {counts[STATUS_MISMATCH]} mismatch, "
            f"{counts[STATUS_INCONCLUSIVE]} inconclusive, {counts[STATUS_FAILED]} failed"
        )

    def exit_code(self) -> int:
        if self.mismatches() or self.failures():
            return EXIT_FALSIFIED
        if self.inconclusive():
            return EXIT_INCONCLUSIVE
        return EXIT_OK
