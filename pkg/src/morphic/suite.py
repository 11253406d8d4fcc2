"""Named registry of all verification checks with their default ranges.

The names here are the stable command-line tokens.  Defaults are the
ranges the test suite certifies; passing a larger n_max extends a
sweep, a smaller one shortens it.  For checks whose natural knob is
not a factor length, n_max maps onto that knob (power height for
dc-counts, sample length for kernel); tech-lemma has a fixed
exhaustive domain and ignores n_max.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import checks, ivp, regularity
from .complexity import DEFAULT_WINDOW_CAP, FactorScanner
from .ivp import sigma3_stream
from .reports import VerifyReport
from .witnesses import ternary_stream
from .words import WordDomainError


@dataclass
class SuiteContext:
    """Shared scanners and resource knobs for one batch of checks."""

    jobs: int | None = None
    window_cap: int = DEFAULT_WINDOW_CAP
    _tml: FactorScanner | None = field(default=None, repr=False)
    _sigma3: FactorScanner | None = field(default=None, repr=False)

    @property
    def tml(self) -> FactorScanner:
        if self._tml is None:
            self._tml = FactorScanner(ternary_stream(), window_cap=self.window_cap)
        return self._tml

    @property
    def sigma3(self) -> FactorScanner:
        if self._sigma3 is None:
            self._sigma3 = FactorScanner(sigma3_stream(), window_cap=self.window_cap)
        return self._sigma3


_REGISTRY = {
    "theorem1": (4096, lambda ctx, n: checks.verify_additive_formula(n, ctx.tml)),
    "ds-bounds": (4096, lambda ctx, n: checks.verify_ds_bounds(n, ctx.tml)),
    "witness": (4096, lambda ctx, n: checks.verify_witnesses(n)),
    "sigma-tau": (10, lambda ctx, n: checks.verify_swap_reverse_commutation(n, ctx.tml)),
    "mirror-closure": (10, lambda ctx, n: checks.verify_mirror_closure(n, ctx.tml)),
    "dc-counts": (24, lambda ctx, n: checks.verify_surplus_balance_counts(n)),
    "prefix-suffix": (4096, lambda ctx, n: checks.verify_witness_affixes(n)),
    "tech-lemma": (None, lambda ctx, n: checks.verify_shift_gain_exhaustive(ctx.jobs, ctx.tml)),
    "ivp-small": (128, lambda ctx, n: checks.verify_interior_sums_small(n, ctx.tml)),
    "additive-recurrence": (256, lambda ctx, n: regularity.verify_additive_recurrence(n, ctx.tml)),
    "kernel": (256, lambda ctx, n: regularity.verify_kernel_affine(e_max=6, T=n, scanner=ctx.tml)),
    "prop4": (300, lambda ctx, n: ivp.verify_parikh_prediction(3, n, ctx.sigma3)),
    "subword-recurrence": (256, lambda ctx, n: checks.verify_subword_recurrence(n, ctx.tml)),
}

ALL_CHECK_NAMES = tuple(_REGISTRY)


def run_check(
    name: str,
    n_max: int | None = None,
    jobs: int | None = None,
    window_cap: int | None = None,
    context: SuiteContext | None = None,
) -> VerifyReport:
    if name not in _REGISTRY:
        raise WordDomainError(
            f"unknown check {name!r}; available: {', '.join(ALL_CHECK_NAMES)}"
        )
    default_n, runner = _REGISTRY[name]
    if context is None:
        context = SuiteContext(
            jobs=jobs, window_cap=window_cap if window_cap else DEFAULT_WINDOW_CAP
        )
    elif jobs is not None:
        context.jobs = jobs
    return runner(context, n_max if n_max is not None else default_n)


def run_all(jobs: int | None = None, window_cap: int | None = None) -> list[VerifyReport]:
    """Every registered check at its default range, sharing one context."""
    context = SuiteContext(
        jobs=jobs, window_cap=window_cap if window_cap else DEFAULT_WINDOW_CAP
    )
    return [run_check(name, context=context) for name in ALL_CHECK_NAMES]
