"""Seeded Monte Carlo experiment harness with CSV output.

Four subcommands:

* ``sweep``          -- retrieval error vs theory while sweeping q, M, a or b
* ``dpnn-bench``     -- decorrelating pipeline vs raw Hopfield on a
                        correlated binary ensemble
* ``identify-bench`` -- pattern-number identification accuracy and cost
* ``theory-table``   -- closed-form bounds/capacities over a parameter grid

Every CSV starts with the same column prefix

    experiment,N,q,M,a,b,k,trials,seed,coord_err,pattern_err,avg_sweeps,
    theory_perr,vacuous_flag

followed by command-specific columns (documented per command below); cells
that do not apply are left empty.  Output bytes are a pure function of the
configuration and seed: trials draw from counter-based streams keyed by
trial index, so ``--jobs`` parallelism cannot change the result.  A trial
counts as a pattern error unless the final state matches the target exactly;
for signed networks an exact global sign flip is still an error but is also
reported in ``sign_flip``.

Exit codes: 0 success, 2 configuration error, 3 infeasible parameters.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import (
    NetworkKind,
    Pattern,
    asynchronous_retrieve,
    build_memory,
    synchronous_step,
)
from .dpnn import dpnn_build, dpnn_capacity, capacity_exponent, k_critical, map_binary, unmap_binary
from .errors import NoFeasibleK, PnnError, UnknownPattern
from .identifier import OpCounter, build_identifier, digit_count, identify
from .noise import (
    NoiseSpec,
    apply_binary_noise,
    apply_qnary_noise,
    correlated_binary_patterns,
    random_qnary_patterns,
)
from .rng import make_rng
from .theory import capacity_pnn2, capacity_pnn3, perr_pnn2, perr_pnn3

PREFIX_COLUMNS = [
    "experiment", "N", "q", "M", "a", "b", "k", "trials", "seed",
    "coord_err", "pattern_err", "avg_sweeps", "theory_perr", "vacuous_flag",
]


class ConfigError(ValueError):
    """Invalid or inconsistent experiment configuration."""


# ----------------------------------------------------------------------
# configuration plumbing

_FIELD_TYPES = {
    "N": int, "q": int, "M": int, "k": int, "trials": int,
    "max_sweeps": int, "seed": int, "jobs": int,
    "a": float, "b": float, "load": float, "overlap": float,
    "kind": str, "sweep": str, "values": str, "out": str,
}


@dataclass
class ExperimentConfig:
    """Resolved settings for one command invocation."""

    command: str
    N: int = 0
    q: int = 1
    M: int = 0
    a: float = 0.0
    b: float = 0.0
    kind: NetworkKind = NetworkKind.PNN2
    k: int = 0
    trials: int = 0
    max_sweeps: int = 20
    seed: int = 0
    out: str | None = None
    jobs: int = 1
    sweep: str | None = None
    values: list = field(default_factory=list)
    overlap: float = 0.0


def _read_config_file(path: str) -> dict:
    """Flat ``key=value`` lines; '#' starts a comment, blanks are ignored."""
    settings = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _FIELD_TYPES:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                settings[key] = value
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return settings


def _resolve(args: argparse.Namespace, key: str, default):
    """CLI flag beats config file beats default."""
    value = getattr(args, key, None)
    if value is None and args.config_values is not None:
        raw = args.config_values.get(key)
        if raw is not None:
            caster = _FIELD_TYPES[key]
            try:
                value = caster(raw)
            except ValueError as exc:
                raise ConfigError(f"config key {key}={raw!r}: {exc}") from exc
    return default if value is None else value


def _parse_kind(text: str) -> NetworkKind:
    try:
        return NetworkKind(text.lower())
    except ValueError:
        raise ConfigError(f"kind must be 'pnn2' or 'pnn3', got {text!r}") from None


def _parse_list(text: str, caster, what: str) -> list:
    if text.strip() == "":
        return []
    try:
        return [caster(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad {what} list {text!r}: {exc}") from exc


def _positive(value: int, what: str) -> int:
    if value < 1:
        raise ConfigError(f"{what} must be >= 1, got {value}")
    return value


def _resolve_m(args, cfg: ExperimentConfig) -> int:
    m = getattr(args, "M", None)
    load = getattr(args, "load", None)
    if args.config_values is not None:
        if m is None and "M" in args.config_values:
            m = int(args.config_values["M"])
        if load is None and "load" in args.config_values:
            load = float(args.config_values["load"])
    if m is not None and load is not None:
        raise ConfigError("give either --M or --load, not both")
    if load is not None:
        if load <= 0:
            raise ConfigError(f"load must be positive, got {load}")
        m = int(round(load * cfg.N))
    if m is None:
        raise ConfigError("pattern count required: --M or --load")
    return _positive(m, "M")


# ----------------------------------------------------------------------
# output helpers

def _fmt(x) -> str:
    if x is None or x == "":
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".10g")
    return str(x)


def _write_csv(out: str | None, header: Sequence[str], rows: list) -> None:
    def dump(fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])

    if out is None or out == "-":
        dump(sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            dump(fh)


def _mean(values) -> float:
    values = list(values)
    return math.fsum(values) / len(values) if values else float("nan")


def _run_batches(worker, payloads: list, jobs: int) -> list:
    """Run payload batches serially or in processes; order is preserved."""
    if jobs <= 1 or len(payloads) <= 1:
        batches = [worker(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(worker, payloads))
    return [record for batch in batches for record in batch]


def _batch_indices(trials: int, jobs: int) -> list[range]:
    per = max(1, math.ceil(trials / max(1, jobs * 4)))
    return [range(lo, min(lo + per, trials)) for lo in range(0, trials, per)]


_GEN_STREAM_STRIDE = 1 << 32  # per-sweep-point stream block; trial t uses base + 1 + t


# ----------------------------------------------------------------------
# sweep

def _coord_errors(result: Pattern, target: Pattern) -> int:
    return int(
        np.count_nonzero(
            (result.signs != target.signs) | (result.levels != target.levels)
        )
    )


def _sweep_batch(payload) -> list:
    memory, q, a, b, seed, stream_base, trial_range, max_sweeps = payload
    spec = NoiseSpec(a, b)
    m_count = memory.n_patterns
    records = []
    for t in trial_range:
        rng = make_rng(seed, stream_base + 1 + t)
        idx = t % m_count
        target = Pattern(memory.pattern_signs[idx], memory.pattern_levels[idx])
        noisy = apply_qnary_noise(target, q, spec, rng)
        sync = synchronous_step(memory, noisy)
        retrieval = asynchronous_retrieve(memory, noisy, max_sweeps)
        final = retrieval.final_state
        sign_flip = int(
            memory.kind is NetworkKind.PNN2 and final == target.sign_flipped()
        )
        records.append((
            _coord_errors(sync, target),
            int(sync != target),
            _coord_errors(final, target),
            int(final != target),
            sign_flip,
            retrieval.sweeps_used,
        ))
    return records


def _theory_bound(kind: NetworkKind, n, m, q, a, b):
    """(value, flag) for the one-step bound, empty cells when undefined."""
    try:
        bound = perr_pnn2(n, m, q, a, b) if kind is NetworkKind.PNN2 else perr_pnn3(n, m, q, b)
    except ValueError:
        return "", ""
    return bound.value, int(bound.vacuous)


SWEEP_EXTRAS = ["sync_coord_err", "sync_pattern_err", "sign_flip"]


def cmd_sweep(cfg: ExperimentConfig) -> list:
    if cfg.sweep not in ("q", "M", "b", "a"):
        raise ConfigError(f"sweep variable must be one of q, M, b, a; got {cfg.sweep!r}")
    if not cfg.values:
        raise ConfigError("sweep needs a non-empty --values list")
    _positive(cfg.trials, "trials")
    _positive(cfg.N, "N")
    _positive(cfg.max_sweeps, "max_sweeps")

    rows = []
    for point, value in enumerate(cfg.values):
        n, q, m, a, b = cfg.N, cfg.q, cfg.M, cfg.a, cfg.b
        if cfg.sweep == "q":
            q = int(value)
        elif cfg.sweep == "M":
            m = int(value)
        elif cfg.sweep == "a":
            a = float(value)
        else:
            b = float(value)
        _positive(q, "q")
        _positive(m, "M")
        if not 0 <= a <= 1 or not 0 <= b <= 1:
            raise ConfigError(f"noise rates must be in [0, 1], got a={a} b={b}")
        if cfg.kind is NetworkKind.PNN3 and a > 0:
            raise ConfigError("PNN3 states carry no sign; sign noise a must be 0")
        if cfg.kind is NetworkKind.PNN3 and q < 2:
            raise ConfigError("PNN3 requires q >= 2")
        if q == 1 and b > 0:
            raise ConfigError("q=1 has no level noise; set b=0")

        stream_base = point * _GEN_STREAM_STRIDE
        patterns = random_qnary_patterns(m, n, q, cfg.kind, make_rng(cfg.seed, stream_base))
        memory = build_memory(patterns, cfg.kind, q)
        payloads = [
            (memory, q, a, b, cfg.seed, stream_base, batch, cfg.max_sweeps)
            for batch in _batch_indices(cfg.trials, cfg.jobs)
        ]
        records = _run_batches(_sweep_batch, payloads, cfg.jobs)

        sync_coord, sync_pat, coord, pat, flips, sweeps = zip(*records)
        theory, vacuous = _theory_bound(cfg.kind, n, m, q, a, b)
        rows.append([
            f"sweep-{cfg.sweep}", n, q, m, a, b, "", cfg.trials, cfg.seed,
            _mean(coord) / n, _mean(pat), _mean(sweeps), theory, vacuous,
            _mean(sync_coord) / n, _mean(sync_pat), _mean(flips),
        ])
    return rows


# ----------------------------------------------------------------------
# dpnn-bench

DPNN_EXTRAS = [
    "hopfield_coord_err", "hopfield_pattern_err", "k_critical", "capacity", "note",
]


def _dpnn_batch(payload) -> list:
    dpnn_memory, hopfield_memory, ensemble, k, a, seed, trial_range, max_sweeps = payload
    records = []
    for t in trial_range:
        rng = make_rng(seed, 1 + t)
        target = ensemble[t % len(ensemble)]
        noisy = apply_binary_noise(target, a, rng)

        image = map_binary(noisy, k)
        retrieval = asynchronous_retrieve(dpnn_memory, image, max_sweeps)
        recovered = unmap_binary(retrieval.final_state, k)

        hop_image = map_binary(noisy, 0)
        hop_retrieval = asynchronous_retrieve(hopfield_memory, hop_image, max_sweeps)
        hop_recovered = unmap_binary(hop_retrieval.final_state, 0)

        records.append((
            int(np.count_nonzero(recovered != target)),
            int(not np.array_equal(recovered, target)),
            retrieval.sweeps_used,
            int(np.count_nonzero(hop_recovered != target)),
            int(not np.array_equal(hop_recovered, target)),
        ))
    return records


def cmd_dpnn_bench(cfg: ExperimentConfig) -> list:
    _positive(cfg.trials, "trials")
    _positive(cfg.N, "N")
    _positive(cfg.max_sweeps, "max_sweeps")
    if cfg.k < 0:
        raise ConfigError(f"k must be >= 0, got {cfg.k}")
    if cfg.N % (cfg.k + 1) != 0:
        raise ConfigError(f"k+1={cfg.k + 1} must divide N={cfg.N}")
    if not 0 <= cfg.a < 0.5:
        raise ConfigError(f"binary noise a must be in [0, 0.5), got {cfg.a}")
    if not 0 <= cfg.overlap < 1:
        raise ConfigError(f"overlap must be in [0, 1), got {cfg.overlap}")

    k_c = k_critical(cfg.N, cfg.a)  # NoFeasibleK propagates (exit 3)
    note = ""
    if cfg.k > k_c:
        note = "k>k_critical"
        print(
            f"warning: k={cfg.k} exceeds k_critical={k_c}; retrieval is expected to collapse",
            file=sys.stderr,
        )

    ensemble = correlated_binary_patterns(cfg.M, cfg.N, cfg.overlap, make_rng(cfg.seed, 0))
    dpnn_memory = dpnn_build(ensemble, cfg.k)
    hopfield_memory = dpnn_build(ensemble, 0)

    payloads = [
        (dpnn_memory, hopfield_memory, ensemble, cfg.k, cfg.a, cfg.seed, batch, cfg.max_sweeps)
        for batch in _batch_indices(cfg.trials, cfg.jobs)
    ]
    records = _run_batches(_dpnn_batch, payloads, cfg.jobs)
    coord, pat, sweeps, hop_coord, hop_pat = zip(*records)

    n_fragments = cfg.N // (cfg.k + 1)
    image_level_noise = 1.0 - (1.0 - cfg.a) ** cfg.k
    theory, vacuous = _theory_bound(
        NetworkKind.PNN2, n_fragments, cfg.M, max(1, 2**cfg.k), cfg.a, image_level_noise
    )
    return [[
        "dpnn-bench", cfg.N, max(1, 2**cfg.k), cfg.M, cfg.a, "", cfg.k,
        cfg.trials, cfg.seed,
        _mean(coord) / cfg.N, _mean(pat), _mean(sweeps), theory, vacuous,
        _mean(hop_coord) / cfg.N, _mean(hop_pat),
        k_c, dpnn_capacity(cfg.N, cfg.a, cfg.k), note,
    ]]


# ----------------------------------------------------------------------
# identify-bench

IDENTIFY_EXTRAS = ["n_digits", "field_evals_per_query"]


def _identify_batch(payload) -> list:
    net, levels_matrix, q, b, seed, trial_range = payload
    spec = NoiseSpec(0.0, b)
    m_count = levels_matrix.shape[0]
    records = []
    for t in trial_range:
        rng = make_rng(seed, 1 + t)
        idx = t % m_count
        target = Pattern(np.ones(levels_matrix.shape[1], dtype=np.int8), levels_matrix[idx])
        noisy = apply_qnary_noise(target, q, spec, rng)
        seeds = rng.integers(1, q + 1, size=net.n_digits)
        counter = OpCounter()
        start = time.perf_counter()
        try:
            got = identify(net, noisy, enumerated_init=seeds, counter=counter)
        except UnknownPattern as exc:
            got = exc.decoded_index
        elapsed = time.perf_counter() - start

        digit_errs = 0
        want, have = idx, got
        for _ in range(net.n_digits):
            digit_errs += int(want % q != have % q)
            want //= q
            have //= q
        records.append((
            digit_errs,
            int(got != idx or got >= m_count),
            counter.enumerated_field_evals,
            elapsed,
        ))
    return records


def cmd_identify_bench(cfg: ExperimentConfig) -> list:
    _positive(cfg.trials, "trials")
    _positive(cfg.N, "N")
    _positive(cfg.M, "M")
    if cfg.q < 2:
        raise ConfigError("identifier needs q >= 2")
    if cfg.a != 0:
        raise ConfigError("identifier runs on unsigned patterns; sign noise a must be 0")
    if not 0 <= cfg.b <= 1:
        raise ConfigError(f"level noise b must be in [0, 1], got {cfg.b}")

    patterns = random_qnary_patterns(cfg.M, cfg.N, cfg.q, NetworkKind.PNN3, make_rng(cfg.seed, 0))
    net = build_identifier(patterns, cfg.q)
    levels_matrix = net.pattern_levels

    payloads = [
        (net, levels_matrix, cfg.q, cfg.b, cfg.seed, batch)
        for batch in _batch_indices(cfg.trials, cfg.jobs)
    ]
    records = _run_batches(_identify_batch, payloads, cfg.jobs)
    digit_errs, misses, evals, elapsed = zip(*records)

    # wall time varies run to run; keep it out of the deterministic CSV
    print(
        f"identify-bench: mean {1e6 * _mean(elapsed):.1f} us/query over {cfg.trials} trials",
        file=sys.stderr,
    )
    theory, vacuous = _theory_bound(NetworkKind.PNN3, cfg.N, cfg.M, cfg.q, 0.0, cfg.b)
    n_digits = digit_count(cfg.M, cfg.q)
    return [[
        "identify-bench", cfg.N, cfg.q, cfg.M, 0.0, cfg.b, "", cfg.trials, cfg.seed,
        _mean(digit_errs) / n_digits, _mean(misses), 1.0, theory, vacuous,
        n_digits, _mean(evals),
    ]]


# ----------------------------------------------------------------------
# theory-table

THEORY_EXTRAS = [
    "capacity_pnn2", "perr_pnn3", "perr_pnn3_vacuous", "capacity_pnn3",
    "dpnn_capacity", "dpnn_exponent", "k_critical",
]


def cmd_theory_table(cfg: ExperimentConfig, grids: dict) -> list:
    rows = []
    for n in grids["N"]:
        for q in grids["q"]:
            for m in grids["M"]:
                for a in grids["a"]:
                    for b in grids["b"]:
                        for k in grids["k"]:
                            theory, vacuous = _theory_bound(NetworkKind.PNN2, n, m, q, a, b)
                            try:
                                cap2 = capacity_pnn2(n, q, a, b)
                            except ValueError:
                                cap2 = ""
                            try:
                                bound3 = perr_pnn3(n, m, q, b)
                                perr3, vac3 = bound3.value, int(bound3.vacuous)
                                cap3 = capacity_pnn3(n, q, b)
                            except ValueError:
                                perr3, vac3, cap3 = "", "", ""
                            try:
                                dcap = dpnn_capacity(n, a, k)
                            except (ValueError, PnnError):
                                dcap = ""
                            try:
                                expo = capacity_exponent(n, a)
                            except (ValueError, PnnError):
                                expo = ""
                            try:
                                kc = k_critical(n, a)
                            except (ValueError, PnnError):
                                kc = ""
                            rows.append([
                                "theory", n, q, m, a, b, k, "", cfg.seed,
                                "", "", "", theory, vacuous,
                                cap2, perr3, vac3, cap3, dcap, expo, kc,
                            ])
    return rows


# ----------------------------------------------------------------------
# argument parsing and dispatch

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnn",
        description="Monte Carlo experiments for vector-neuron associative memories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_trials=True):
        p.add_argument("--config", help="flat key=value config file; flags override it")
        p.add_argument("--seed", type=int, help="experiment seed (default 0)")
        p.add_argument("--out", help="CSV path (default stdout)")
        if with_trials:
            p.add_argument("--trials", type=int, help="Monte Carlo trials per point")
            p.add_argument("--jobs", type=int, help="parallel worker processes (default 1)")

    p = sub.add_parser("sweep", help="retrieval error vs theory over one swept variable")
    common(p)
    p.add_argument("--sweep", help="variable to sweep: q, M, a or b")
    p.add_argument("--values", help="comma-separated sweep values")
    p.add_argument("--N", type=int, help="neurons")
    p.add_argument("--q", type=int, help="levels per neuron (default 1)")
    p.add_argument("--M", type=int, help="stored patterns")
    p.add_argument("--load", type=float, help="patterns as a multiple of N (alternative to --M)")
    p.add_argument("--a", type=float, help="sign-flip probability (default 0)")
    p.add_argument("--b", type=float, help="level-change probability (default 0)")
    p.add_argument("--kind", help="pnn2 (signed, default) or pnn3 (unsigned)")
    p.add_argument("--max-sweeps", dest="max_sweeps", type=int, help="retrieval sweep cap (default 20)")

    p = sub.add_parser("dpnn-bench", help="decorrelating pipeline vs raw Hopfield")
    common(p)
    p.add_argument("--N", type=int, help="binary pattern length")
    p.add_argument("--k", type=int, help="mapping parameter (k+1 must divide N)")
    p.add_argument("--M", type=int, help="stored patterns")
    p.add_argument("--load", type=float, help="patterns as a multiple of N")
    p.add_argument("--a", type=float, help="binary noise level (default 0)")
    p.add_argument("--overlap", type=float, help="template overlap fraction c (default 0)")
    p.add_argument("--max-sweeps", dest="max_sweeps", type=int, help="retrieval sweep cap (default 20)")

    p = sub.add_parser("identify-bench", help="pattern-number identification benchmark")
    common(p)
    p.add_argument("--N", type=int, help="true coordinates")
    p.add_argument("--q", type=int, help="levels per coordinate")
    p.add_argument("--M", type=int, help="stored patterns")
    p.add_argument("--load", type=float, help="patterns as a multiple of N")
    p.add_argument("--b", type=float, help="level-change probability (default 0)")

    p = sub.add_parser("theory-table", help="closed-form bounds over a parameter grid")
    common(p, with_trials=False)
    p.add_argument("--N", help="comma-separated sizes (default 1000)")
    p.add_argument("--q", help="comma-separated level counts (default 1)")
    p.add_argument("--M", help="comma-separated pattern counts (default 100)")
    p.add_argument("--a", help="comma-separated sign-noise rates (default 0)")
    p.add_argument("--b", help="comma-separated level-noise rates (default 0)")
    p.add_argument("--k", help="comma-separated mapping parameters (default 1)")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    args.config_values = (
        _read_config_file(args.config) if getattr(args, "config", None) else None
    )
    command = args.command
    cfg = ExperimentConfig(command=command)
    cfg.seed = _resolve(args, "seed", 0)
    cfg.out = _resolve(args, "out", None)

    if command == "theory-table":
        grids = {}
        for key, default, caster in (
            ("N", "1000", int), ("q", "1", int), ("M", "100", int),
            ("a", "0", float), ("b", "0", float), ("k", "1", int),
        ):
            raw = getattr(args, key, None)  # grid keys stay raw comma lists
            if raw is None and args.config_values is not None:
                raw = args.config_values.get(key)
            grids[key] = _parse_list(str(default if raw is None else raw), caster, key)
        rows = cmd_theory_table(cfg, grids)
        _write_csv(cfg.out, PREFIX_COLUMNS + THEORY_EXTRAS, rows)
        return 0

    cfg.trials = _resolve(args, "trials", None)
    if cfg.trials is None:
        raise ConfigError("--trials is required")
    cfg.jobs = _positive(_resolve(args, "jobs", 1), "jobs")
    cfg.N = _resolve(args, "N", None)
    if cfg.N is None:
        raise ConfigError("--N is required")

    if command == "sweep":
        cfg.q = _resolve(args, "q", 1)
        cfg.a = _resolve(args, "a", 0.0)
        cfg.b = _resolve(args, "b", 0.0)
        cfg.kind = _parse_kind(_resolve(args, "kind", "pnn2"))
        cfg.max_sweeps = _resolve(args, "max_sweeps", 20)
        cfg.sweep = _resolve(args, "sweep", None)
        if cfg.sweep is None:
            raise ConfigError("--sweep is required")
        caster = int if cfg.sweep in ("q", "M") else float
        cfg.values = _parse_list(str(_resolve(args, "values", "")), caster, "values")
        if cfg.sweep == "M":
            cfg.M = 1  # every sweep point overrides it
        else:
            cfg.M = _resolve_m(args, cfg)
        rows = cmd_sweep(cfg)
        _write_csv(cfg.out, PREFIX_COLUMNS + SWEEP_EXTRAS, rows)
        return 0

    if command == "dpnn-bench":
        cfg.k = _resolve(args, "k", None)
        if cfg.k is None:
            raise ConfigError("--k is required")
        cfg.a = _resolve(args, "a", 0.0)
        cfg.overlap = _resolve(args, "overlap", 0.0)
        cfg.max_sweeps = _resolve(args, "max_sweeps", 20)
        cfg.M = _resolve_m(args, cfg)
        rows = cmd_dpnn_bench(cfg)
        _write_csv(cfg.out, PREFIX_COLUMNS + DPNN_EXTRAS, rows)
        return 0

    if command == "identify-bench":
        cfg.q = _resolve(args, "q", None)
        if cfg.q is None:
            raise ConfigError("--q is required")
        cfg.b = _resolve(args, "b", 0.0)
        cfg.M = _resolve_m(args, cfg)
        rows = cmd_identify_bench(cfg)
        _write_csv(cfg.out, PREFIX_COLUMNS + IDENTIFY_EXTRAS, rows)
        return 0

    raise ConfigError(f"unknown command {command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except NoFeasibleK as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, PnnError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
