"""Exhaustive enumeration of execution-site configurations."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .circuits import Circuit, global_gates
from .commute import CommuteMode
from .schedule import ConfigArr, ScheduleResult, min_teleportation

DEFAULT_MAX_GLOBAL = 20


class ConfigSpaceError(RuntimeError):
    """The configuration space is above the cap; raise max_global to proceed."""


def config_from_index(index: int, m_g: int) -> ConfigArr:
    """Bit vector of index over m_g global gates; bits[0] is the most significant digit."""
    if m_g < 0:
        raise ValueError("m_g must be non-negative")
    if not 0 <= index < (1 << m_g):
        raise ValueError(f"index {index} out of range for {m_g} bits")
    return ConfigArr(tuple((index >> (m_g - 1 - k)) & 1 for k in range(m_g)))


@dataclass(frozen=True)
class ConfigOutcome:
    config_index: int
    cfg: ConfigArr
    result: ScheduleResult


@dataclass(frozen=True)
class OptimizationReport:
    """Schedules for every configuration plus the extremes.

    improvement is (worst - best) / worst, or 0.0 when worst is 0.
    """

    per_config: tuple[ConfigOutcome, ...]
    best_index: int
    worst_n_t: int
    improvement: float

    @property
    def best(self) -> ConfigOutcome:
        return self.per_config[self.best_index]

    @property
    def best_n_t(self) -> int:
        return self.best.result.n_t

    @property
    def m_g(self) -> int:
        return len(self.per_config[0].cfg.bits) if self.per_config else 0


def optimize(circuit: Circuit, mode: CommuteMode = CommuteMode.STRICT,
             max_global: int = DEFAULT_MAX_GLOBAL, workers: int = 1,
             final_return: bool = True) -> OptimizationReport:
    """Schedule every site assignment and keep the cheapest; ties go to the
    lowest configuration index.

    Runs 2**m_g schedules, so m_g is capped at max_global.  workers > 1 fans
    the configurations out over a thread pool; the report is identical either
    way.
    """
    m_g = len(global_gates(circuit))
    if m_g > max_global:
        raise ConfigSpaceError(
            f"{m_g} global gates give 2^{m_g} configurations; "
            f"pass max_global >= {m_g} to search anyway")
    configs = [config_from_index(i, m_g) for i in range(1 << m_g)]

    def run(cfg: ConfigArr) -> ScheduleResult:
        return min_teleportation(circuit, cfg, mode, final_return=final_return)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, configs))
    else:
        results = [run(cfg) for cfg in configs]
    per_config = tuple(ConfigOutcome(i, cfg, res)
                       for i, (cfg, res) in enumerate(zip(configs, results)))
    best_index = min(per_config, key=lambda oc: (oc.result.n_t, oc.config_index)).config_index
    worst_n_t = max(oc.result.n_t for oc in per_config)
    best_n_t = per_config[best_index].result.n_t
    improvement = (worst_n_t - best_n_t) / worst_n_t if worst_n_t > 0 else 0.0
    return OptimizationReport(per_config, best_index, worst_n_t, improvement)
