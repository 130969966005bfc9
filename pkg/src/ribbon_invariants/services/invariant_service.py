"""
Service Layer - Command-level operations over the engine

Orchestrates parsing results, evaluation, report building and the optional
block store. Heavy computation runs in a worker thread so the store's event
loop stays responsive.
"""

import asyncio
import logging
from collections.abc import Sequence

from ..domain.models import (
    CheckResult,
    ComponentSummary,
    HomologyReport,
    InvarianceReport,
    InvariantReport,
    LieType,
    ModuleRef,
    RatioReport,
    RepReport,
    RibbonChoice,
    StoredBlock,
    Tangle,
    Weight,
)
from ..core.factories import close_store, initialize_store
from ..domain.protocols import BlockStore
from ..domain.tangle import homology_is_finite, trace_components
from ..exactalg import ZERO, SparseMatrix
from ..homology.unknot import (
    closed_form_mismatches,
    closed_form_parts,
    euler_specialization,
    unknot_series,
)
from ..quantum.braiding import BraidOp, cached_braids, seed_braid
from ..quantum.cartan import cartan_data
from ..quantum.conventions import CONVENTION_LEDGER_HASH
from ..quantum.repn import ModuleKey, build_irrep, quantum_character
from .checks import build_cases, run_cases
from .evaluator import (
    evaluate,
    evaluate_closed,
    invariance_suite,
    normalized_invariant,
    predicted_ratio,
    st_standard_ratio,
    unframed_invariant,
)

logger = logging.getLogger(__name__)


class InvariantService:
    """
    High-level operations behind the commands.
    Persists braid blocks through an optional BlockStore.
    """

    def __init__(self, store: BlockStore | None = None):
        """Inject store (None disables persistence)"""
        self._store = store
        self._persisted: set[str] = set()
        self._warmed: set[str] = set()

    async def initialize(self) -> None:
        """Open the store and drop blocks built under other conventions"""
        if self._store is None:
            return
        await initialize_store(self._store)
        removed = await self._store.delete_stale_blocks(CONVENTION_LEDGER_HASH)
        if removed:
            logger.info("dropped %d cached blocks from an older convention ledger", removed)

    async def close(self) -> None:
        """Cleanup"""
        if self._store is not None:
            await close_store(self._store)

    # === Block cache ===

    @staticmethod
    def _to_record(op: BraidOp) -> StoredBlock:
        return StoredBlock(
            algebra=op.left.algebra,
            left=ModuleRef(highest=op.left.highest, dual=op.left.dual),
            right=ModuleRef(highest=op.right.highest, dual=op.right.dual),
            inverse=op.inverse,
            ledger_hash=CONVENTION_LEDGER_HASH,
            matrix=op.matrix.to_json(),
        )

    @staticmethod
    def _from_record(block: StoredBlock) -> BraidOp:
        return BraidOp(
            ModuleKey(block.algebra, tuple(block.left.highest), block.left.dual),
            ModuleKey(block.algebra, tuple(block.right.highest), block.right.dual),
            block.inverse,
            SparseMatrix.from_json(block.matrix),
        )

    async def warm(self, lie_type: LieType) -> int:
        """Seed the braid cache with stored blocks of one algebra; returns how many"""
        if self._store is None or lie_type.name in self._warmed:
            return 0
        blocks = await self._store.get_blocks_by_algebra(lie_type.name, CONVENTION_LEDGER_HASH)
        for block in blocks:
            seed_braid(self._from_record(block))
            self._persisted.add(block.block_id)
        self._warmed.add(lie_type.name)
        logger.debug("warmed %d %s braid blocks from the store", len(blocks), lie_type.name)
        return len(blocks)

    async def persist(self) -> int:
        """Write braid blocks built since the last call; returns how many"""
        if self._store is None:
            return 0
        written = 0
        for op in cached_braids():
            record = self._to_record(op)
            if record.block_id in self._persisted:
                continue
            await self._store.insert_block(record)
            self._persisted.add(record.block_id)
            written += 1
        if written:
            logger.debug("persisted %d braid blocks", written)
        return written

    # === Invariants ===

    async def compute_invariant(
        self,
        tangle: Tangle,
        choice: RibbonChoice,
        unframed: bool = False,
        normalized: bool = False,
    ) -> InvariantReport:
        """
        Evaluate a tangle; closed links report the scalar and their components.
        unframed removes each component's framing, normalized divides a knot
        by its unknot.
        """
        await self.warm(tangle.algebra)
        matrix = await asyncio.to_thread(evaluate, tangle, choice)
        await self.persist()
        if not tangle.is_closed:
            if unframed or normalized:
                raise ValueError("framing corrections need a closed link")
            return InvariantReport(
                algebra=tangle.algebra.name,
                ribbon=choice.value,
                components=[],
                invariant=[],
                matrix=matrix.to_json(),
            )
        value = matrix.entry((), ()) or ZERO
        if unframed:
            value = await asyncio.to_thread(unframed_invariant, tangle, choice)
        quotient = None
        if normalized:
            quotient = str(await asyncio.to_thread(normalized_invariant, tangle, choice))
        components = trace_components(tangle).components
        return InvariantReport(
            algebra=tangle.algebra.name,
            ribbon=choice.value,
            components=[
                ComponentSummary(label=list(c.label), writhe=c.writhe) for c in components
            ],
            invariant=value.to_json(),
            homology_finite=homology_is_finite(tangle),
            normalized=quotient,
        )

    async def compare_ribbons(self, tangle: Tangle) -> RatioReport:
        """Both ribbon values of a closed link with the measured and predicted ratio"""
        await self.warm(tangle.algebra)
        st = await asyncio.to_thread(evaluate_closed, tangle, RibbonChoice.SNYDER_TINGLEY)
        standard = await asyncio.to_thread(evaluate_closed, tangle, RibbonChoice.STANDARD)
        ratio = await asyncio.to_thread(st_standard_ratio, tangle)
        await self.persist()
        return RatioReport(
            st=st.to_json(),
            standard=standard.to_json(),
            ratio=ratio,
            predicted_ratio=predicted_ratio(tangle),
        )

    async def compare_presentations(self, first: Tangle, second: Tangle) -> InvarianceReport:
        """Two presentations of one link under both ribbon choices"""
        await self.warm(first.algebra)
        report = await asyncio.to_thread(invariance_suite, first, second)
        await self.persist()
        return report

    # === Modules ===

    async def describe_module(self, lie_type: LieType, weight: Weight) -> RepReport:
        cd = cartan_data(lie_type)
        rep = await asyncio.to_thread(build_irrep, cd, weight)
        return RepReport(
            algebra=lie_type.name,
            highest_weight=list(rep.highest_weight),
            dimension=rep.dim,
            minuscule=cd.is_minuscule(rep.highest_weight),
            weights=[(list(w), m) for w, m in sorted(rep.weight_spaces.items(), reverse=True)],
            quantum_dimension=quantum_character(rep).to_json(),
        )

    # === Checks ===

    async def run_checks(
        self,
        suite: str,
        lie_type: LieType | None = None,
        weights: Sequence[Weight] = (),
        jobs: int = 1,
        samples: int = 10,
        seed: int = 0,
    ) -> list[CheckResult]:
        """Run one suite, optionally on a thread pool"""
        if lie_type is not None:
            await self.warm(lie_type)
        cases = build_cases(suite, lie_type, weights, samples, seed)
        logger.info("running %d %s cases on %d worker(s)", len(cases), suite, jobs)
        results = await asyncio.to_thread(run_cases, cases, jobs)
        await self.persist()
        return results

    # === Homology ===

    async def unknot_homology(self, t_max: int) -> HomologyReport:
        """The colour-2 unknot series through t^t_max against the closed form"""
        series = await asyncio.to_thread(unknot_series, t_max)
        mismatches = closed_form_mismatches(t_max, series)
        euler = euler_specialization(*closed_form_parts()).to_laurent()
        return HomologyReport(
            t_max=t_max,
            series=series.to_json(),
            mismatches=mismatches,
            matches_closed_form=not mismatches,
            euler_characteristic=euler.to_json(),
        )
