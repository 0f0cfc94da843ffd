"""
Service cross-checking the criteria against the exact oracle.
"""

import asyncio
import logging
import random
from typing import Iterable, Optional

from tenacity import (
    before_sleep_log,
    retry,
    retry_if_exception_type,
    stop_after_attempt,
)

from config.settings import get_settings
from src.models.matrix import DiagonalSpectrum, Matrix
from src.models.pattern import Pattern
from src.models.reports import SweepSummary, VerificationOutcome
from src.services.criteria import classify
from src.services.matrix_core import support
from src.services.oracle import (
    commutant_basis,
    diagonal_common_eigenvector,
    generated_algebra,
    invariant_subset_scan,
    is_decomposable,
    random_generic_matrix,
    random_spectrum,
    shemesh_common_eigenvector,
    support_union,
)
from src.services.pattern_semiring import pattern_closure, pattern_product
from src.utils.bitset import Rows, full_mask, loop_free_rows
from src.utils.exceptions import (
    CapExceededError,
    GenericityError,
    VerificationMismatchError,
)
from src.utils.logging_utils import log_async_execution_time, setup_logger

logger = setup_logger(__name__)

EXHAUSTIVE_MAX_N = 4


def loop_free_patterns(n: int) -> Iterable[Pattern]:
    """Every pattern on n vertices without diagonal pairs, in bit order."""
    for rows in loop_free_rows(n):
        yield Pattern.trusted(n, rows)


class VerificationService:
    """Runs criteria-versus-oracle comparisons on given or generated instances."""

    def __init__(self, seed: int = 0, bound: Optional[int] = None) -> None:
        """
        Args:
            seed: Seed for the instance generator
            bound: Numerator/denominator bound for generic entries
        """
        self.seed = seed
        self.bound = bound or get_settings().GENERIC_ENTRY_BOUND
        self.rng = random.Random(seed)

    # Single instances

    def verify_instance(
        self, spectrum: DiagonalSpectrum, matrix: Matrix
    ) -> VerificationOutcome:
        """Classify (Λ, A) and recompute every verdict by brute force."""
        report = classify(spectrum, matrix)
        mats = [spectrum.matrix(), matrix]
        scanned = invariant_subset_scan(spectrum, matrix)
        outcome = VerificationOutcome(
            support=report.support,
            irreducible=report.irreducible,
            schur_irreducible=report.schur_irreducible,
            indecomposable=report.indecomposable,
            algebra_dimension=generated_algebra(mats).dimension,
            commutant_dimension=commutant_basis(mats).dimension,
            decomposable=is_decomposable(spectrum, matrix),
            subsets_match=scanned == list(report.invariant_subsets),
        )
        if not outcome.agrees:
            logger.warning(f"Oracle disagreement on support {report.support.edges()}")
        return outcome

    def random_instance(
        self, n: int, pattern: Optional[Pattern] = None
    ) -> tuple[DiagonalSpectrum, Matrix]:
        """Random spectrum and generic entries; random support unless given."""
        if pattern is None:
            rows: Rows = tuple(self.rng.getrandbits(n) for _ in range(n))
            pattern = Pattern.trusted(n, rows)
        return (
            random_spectrum(n, self.rng, self.bound),
            random_generic_matrix(pattern, self.rng, self.bound),
        )

    @retry(
        stop=stop_after_attempt(2),
        retry=retry_if_exception_type(GenericityError),
        before_sleep=before_sleep_log(logger, logging.WARNING),
        reraise=True,
    )
    def check_product_soundness(self, g1: Pattern, g2: Pattern) -> bool:
        """
        Supp(XY) = G1∘G2 for generic X, Y with Supp(X) = G1, Supp(Y) = G2.

        A cancellation is redrawn once before GenericityError escapes.

        Raises:
            GenericityError: If both draws cancel
            VerificationMismatchError: If the product leaves G1∘G2
        """
        x = random_generic_matrix(g1, self.rng, self.bound)
        y = random_generic_matrix(g2, self.rng, self.bound)
        exact = support(x @ y)
        predicted = pattern_product(g1, g2)
        if not exact.issubset(predicted):
            raise VerificationMismatchError(
                f"Product support {exact.edges()} leaves {predicted.edges()}"
            )
        if exact != predicted:
            raise GenericityError(
                f"Generic product cancelled: {exact.edges()} != {predicted.edges()}"
            )
        return True

    def check_closure_soundness(self, spectrum: DiagonalSpectrum, matrix: Matrix) -> bool:
        """Support of the generated algebra equals the closure of Supp(A) ∪ diag."""
        span = generated_algebra([spectrum.matrix(), matrix])
        return support_union(span) == pattern_closure(support(matrix), with_diagonal=True)

    def check_shemesh(self, spectrum: DiagonalSpectrum, matrix: Matrix) -> bool:
        """Shemesh criterion agrees with the direct eigenvector search."""
        return shemesh_common_eigenvector(
            spectrum.matrix(), matrix
        ) == diagonal_common_eigenvector(spectrum, matrix)

    # Sweeps

    def _sweep_exhaustive(self, n: int) -> SweepSummary:
        spectrum = DiagonalSpectrum.of(list(range(1, n + 1)))
        disagreements = []
        count = 0
        for pattern in loop_free_patterns(n):
            _, matrix = self.random_instance(n, pattern)
            outcome = self.verify_instance(spectrum, matrix)
            count += 1
            if not outcome.agrees:
                disagreements.append(outcome)
        return SweepSummary(
            n=n,
            mode="exhaustive",
            instances=count,
            seed=self.seed,
            disagreements=tuple(disagreements),
        )

    def _sweep_random(self, n: int, count: int) -> SweepSummary:
        disagreements = []
        for _ in range(count):
            spectrum, matrix = self.random_instance(n)
            outcome = self.verify_instance(spectrum, matrix)
            if not outcome.agrees:
                disagreements.append(outcome)
        return SweepSummary(
            n=n,
            mode="random",
            instances=count,
            seed=self.seed,
            disagreements=tuple(disagreements),
        )

    @log_async_execution_time(logger)
    async def sweep_exhaustive(self, n: int) -> SweepSummary:
        """
        Every loop-free support on n vertices with Λ = diag(1, ..., n).

        Raises:
            CapExceededError: If n is above the exhaustive limit
        """
        if n > EXHAUSTIVE_MAX_N:
            raise CapExceededError("n", n, EXHAUSTIVE_MAX_N)
        summary = await asyncio.to_thread(self._sweep_exhaustive, n)
        logger.info(
            f"Exhaustive sweep n={n}: {summary.instances} instances, "
            f"{len(summary.disagreements)} disagreements"
        )
        return summary

    @log_async_execution_time(logger)
    async def sweep_random(self, n: int, count: int) -> SweepSummary:
        """`count` random spectra, supports and generic entries."""
        cap = get_settings().SUBSET_SCAN_CAP
        if n > cap:
            raise CapExceededError("n", n, cap)
        summary = await asyncio.to_thread(self._sweep_random, n, count)
        logger.info(
            f"Random sweep n={n}: {summary.instances} instances, "
            f"{len(summary.disagreements)} disagreements"
        )
        return summary

    async def sweep_product_soundness(self, n: int, count: Optional[int] = None) -> int:
        """
        Check pattern products against exact products.

        Without `count` every pair of loop-free patterns is checked; with it,
        `count` random pairs. Returns the number of pairs checked.
        """

        def run() -> int:
            if count is None:
                patterns = list(loop_free_patterns(n))
                pairs = [(a, b) for a in patterns for b in patterns]
            else:
                full = full_mask(n)
                pairs = [
                    (
                        Pattern.trusted(n, [self.rng.getrandbits(n) & full for _ in range(n)]),
                        Pattern.trusted(n, [self.rng.getrandbits(n) & full for _ in range(n)]),
                    )
                    for _ in range(count)
                ]
            for g1, g2 in pairs:
                self.check_product_soundness(g1, g2)
            return len(pairs)

        return await asyncio.to_thread(run)
