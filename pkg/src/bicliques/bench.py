"""Benchmark sweeps: one varying generator parameter × seeds × algorithms.

Each job generates its instance, runs the algorithm with the given
timeout, and contributes one CSV row. Rows are emitted in sorted
(algorithm, value, seed) order; timed-out rows record the timeout value
as the wall time.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from collections.abc import Sequence

from .algorithms import ALGORITHMS, NEEDS_OCT, run_algorithm
from .generator import GeneratorParams, generate

CSV_HEADER = "algorithm,n_l,n_r,n_o,d_lr,d_cross,d_o,cv,seed,count,wall_time_s,timed_out"

SWEEPABLE = ("n_l", "n_r", "n_o", "d_lr", "d_cross", "d_o", "cv")


@dataclass(frozen=True)
class SweepSpec:
    """One varying parameter over ``values``, everything else fixed."""

    base: GeneratorParams
    vary: str
    values: tuple[float, ...]
    seeds: tuple[int, ...]
    algorithms: tuple[str, ...]
    timeout: float | None = None

    def validate(self) -> None:
        if self.vary not in SWEEPABLE:
            raise ValueError(f"cannot vary {self.vary!r}; choose from {', '.join(SWEEPABLE)}")
        if not self.values:
            raise ValueError("empty value list")
        if not self.seeds:
            raise ValueError("empty seed list")
        if not self.algorithms:
            raise ValueError("empty algorithm list")
        for name in self.algorithms:
            if name not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {name!r}")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    params: GeneratorParams
    count: int
    wall_time_s: float
    timed_out: bool

    def csv(self) -> str:
        p = self.params
        return ",".join(
            [
                self.algorithm,
                str(p.n_l),
                str(p.n_r),
                str(p.n_o),
                _num(p.d_lr),
                _num(p.d_cross),
                _num(p.d_o),
                _num(p.cv_lr),
                str(p.seed),
                str(self.count),
                f"{self.wall_time_s:.6f}",
                "true" if self.timed_out else "false",
            ]
        )


def _num(x: float) -> str:
    return repr(round(float(x), 12))


def _params_for(base: GeneratorParams, vary: str, value: float, seed: int) -> GeneratorParams:
    if vary == "cv":
        return replace(base, cv_lr=value, cv_cross=value, seed=seed)
    if vary in ("n_l", "n_r", "n_o"):
        return replace(base, **{vary: int(value), "seed": seed})
    return replace(base, **{vary: value, "seed": seed})


def run_sweep(spec: SweepSpec) -> list[BenchRow]:
    """Run the whole sweep; deterministic row order."""
    spec.validate()
    jobs = sorted(
        (alg, value, seed)
        for alg in spec.algorithms
        for value in spec.values
        for seed in spec.seeds
    )
    rows = []
    for alg, value, seed in jobs:
        params = _params_for(spec.base, spec.vary, value, seed)
        g, d = generate(params)
        res = run_algorithm(
            alg,
            g,
            decomposition=d if alg in NEEDS_OCT else None,
            timeout=spec.timeout,
            count_only=True,
        )
        wall = res.wall_time
        if res.timed_out and spec.timeout is not None:
            wall = spec.timeout
        rows.append(
            BenchRow(
                algorithm=alg,
                params=params,
                count=res.count,
                wall_time_s=wall,
                timed_out=res.timed_out,
            )
        )
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    """UTF-8, LF-terminated CSV with the fixed header."""
    return "\n".join([CSV_HEADER, *(row.csv() for row in rows)]) + "\n"
