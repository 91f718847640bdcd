"""Suite runner: the elementary-map theorems over many codes at once.

Exhaustive mode enumerates every code on n neurons (each set of nonempty
codewords, with and without the empty word); sampled mode draws seeded random
codes.  Instances fan out over a worker pool and results aggregate in
instance order, so output is deterministic for fixed inputs.
"""

from __future__ import annotations

import itertools
import multiprocessing
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .codes import NeuralCode
from .codemaps import (
    Outcome,
    VerificationReport,
    verify_add_trivial_off,
    verify_add_trivial_on,
    verify_duplicate,
    verify_permutation,
    verify_projection,
)
from .homology import Field
from .randgen import random_code

ALL_THEOREMS = ("permutation", "add_trivial_on", "add_trivial_off", "duplicate", "projection")


def exhaustive_codes(n: int) -> Iterator[NeuralCode]:
    """Every code on n neurons: all sets of nonempty words, ∅ toggled both ways."""
    top = (1 << n) - 1
    for bits in range(1 << top):
        masks = [m for m in range(1, top + 1) if bits >> (m - 1) & 1]
        yield NeuralCode.from_masks(n, masks)
        yield NeuralCode.from_masks(n, masks + [0])


def sampled_codes(n: int, count: int, seed: int, density: float = 0.3) -> list[NeuralCode]:
    """``count`` reproducible codes; code i uses child seed ``seed + i``."""
    return [random_code(n, seed + i, density) for i in range(count)]


def code_reports(
    code: NeuralCode,
    fld: Field = Field.GF2,
    theorems: Sequence[str] = ALL_THEOREMS,
    gammas: Sequence[tuple[int, ...]] | None = None,
    duplicate_sources: Sequence[int] = (1,),
    projection_deletes: Sequence[int] | None = None,
) -> list[VerificationReport]:
    """All requested theorem instances for one code, in a fixed order."""
    n = code.n
    if gammas is None:
        gammas = tuple(itertools.permutations(range(1, n + 1)))
    if projection_deletes is None:
        projection_deletes = tuple(range(1, n + 1)) if n >= 2 else ()
    reports: list[VerificationReport] = []
    if "permutation" in theorems:
        reports.extend(verify_permutation(code, g, fld) for g in gammas)
    if "add_trivial_on" in theorems:
        reports.append(verify_add_trivial_on(code, fld))
    if "add_trivial_off" in theorems:
        reports.append(verify_add_trivial_off(code, fld))
    if "duplicate" in theorems:
        reports.extend(verify_duplicate(code, s, fld) for s in duplicate_sources)
    if "projection" in theorems:
        reports.extend(verify_projection(code, d, fld) for d in projection_deletes)
    return reports


@dataclass
class SuiteResult:
    instances: int = 0
    holds: int = 0
    partial: int = 0
    violated: int = 0
    violations: list[dict] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violated == 0

    def to_json_dict(self) -> dict:
        return {
            "instances": self.instances,
            "holds": self.holds,
            "partial": self.partial,
            "violated": self.violated,
            "violations": self.violations,
        }


def _sample_gammas(n: int, rng: random.Random, count: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rng.sample(range(1, n + 1), n)) for _ in range(count))


def _run_one(args: tuple) -> list[dict]:
    n, masks, field_name, theorems, gammas, dup_sources, deletes = args
    code = NeuralCode.from_masks(n, masks)
    fld = Field.from_name(field_name)
    reports = code_reports(
        code,
        fld,
        theorems=theorems,
        gammas=gammas,
        duplicate_sources=dup_sources,
        projection_deletes=deletes,
    )
    return [r.to_json_dict() for r in reports]


def run_suite(
    codes: Iterable[NeuralCode],
    fld: Field = Field.GF2,
    theorems: Sequence[str] = ALL_THEOREMS,
    jobs: int = 1,
    gammas_per_code: int | None = None,
    gamma_seed: int = 0,
    duplicate_sources: Sequence[int] = (1,),
    keep_lines: bool = False,
) -> SuiteResult:
    """Run the theorem suite over many codes.

    ``gammas_per_code=None`` uses the whole symmetric group (exhaustive mode);
    an integer draws that many seeded permutations per code instead.
    """
    tasks = []
    for idx, code in enumerate(codes):
        n = code.n
        if gammas_per_code is None:
            gammas = tuple(itertools.permutations(range(1, n + 1)))
        else:
            rng = random.Random(gamma_seed * 1_000_003 + idx)
            gammas = _sample_gammas(n, rng, gammas_per_code)
        deletes = tuple(range(1, n + 1)) if n >= 2 else ()
        tasks.append(
            (n, tuple(sorted(code.masks())), fld.value, tuple(theorems), gammas,
             tuple(duplicate_sources), deletes)
        )

    result = SuiteResult()
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.imap(_run_one, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))
            for dicts in chunks:
                _absorb(result, dicts, keep_lines)
    else:
        for task in tasks:
            _absorb(result, _run_one(task), keep_lines)
    return result


def _absorb(result: SuiteResult, report_dicts: list[dict], keep_lines: bool) -> None:
    import json

    for d in report_dicts:
        result.instances += 1
        verdict = d["verdict"]
        if verdict == Outcome.HOLDS.value:
            result.holds += 1
        elif verdict == Outcome.PARTIAL.value:
            result.partial += 1
        else:
            result.violated += 1
            result.violations.append(d)
        if keep_lines:
            result.lines.append(json.dumps(d))


def run_exhaustive(
    n: int,
    fld: Field = Field.GF2,
    theorems: Sequence[str] = ALL_THEOREMS,
    jobs: int = 1,
    keep_lines: bool = False,
) -> SuiteResult:
    return run_suite(
        exhaustive_codes(n), fld, theorems=theorems, jobs=jobs, keep_lines=keep_lines
    )


def run_sampled(
    n: int,
    count: int,
    seed: int = 0,
    density: float = 0.3,
    fld: Field = Field.GF2,
    theorems: Sequence[str] = ALL_THEOREMS,
    jobs: int = 1,
    gammas_per_code: int = 2,
    keep_lines: bool = False,
) -> SuiteResult:
    return run_suite(
        sampled_codes(n, count, seed, density),
        fld,
        theorems=theorems,
        jobs=jobs,
        gammas_per_code=gammas_per_code,
        gamma_seed=seed,
        keep_lines=keep_lines,
    )
