"""Command-line front end: transforms, norms, operators, and experiments.

Every command is deterministic: the same arguments and input files produce
byte-identical outputs.  Randomized experiments draw from seeded ensembles;
the global --seed flag (default 42) threads into every ensemble that does
not carry its own seed.  Exit codes: 0 success, 1 precondition violation
(diagnostic on stderr, no stack trace), 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import io as wio
from .grid import Signal1, gaussian, make_grid
from .norms import NormSpec, ORDER_AMALGAM, Weight, exponent_from_json, mixed_norm
from .quantization import (
    apply as op_apply,
    convert_symbol,
    tau_matrix,
    weyl_matrix,
)
from .transforms import stft1, stft2, tau_wigner, wigner
from .verify import (
    Ensemble,
    ExponentTuple,
    RatioReport,
    canonical_json_text,
    check_exponents,
    lemma_experiment,
    report_to_csv_text,
    report_to_json_text,
    theorem_ratio_experiment,
    trials_to_csv_text,
)

DEFAULT_SEED = 42


def _parse_exponent(text: str) -> float:
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return exponent_from_json(text)


def _weight_from_config(d) -> Weight:
    return Weight.from_json(d) if d else Weight.constant()


def _ensemble_from_config(d: dict, default_seed: int) -> Ensemble:
    return Ensemble(
        seed=int(d.get("seed", default_seed)),
        kind=d["kind"],
        count=int(d.get("count", 50)),
    )


def _load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        config = json.load(handle)
    if config.get("schema", 1) != 1:
        raise ValueError(f"unsupported config schema {config.get('schema')!r}")
    return config


def _report_format(args) -> str:
    if args.format:
        return args.format
    return "csv" if args.out.endswith(".csv") else "json"


def _emit(args, json_text: str, csv_text: str, trials) -> None:
    if _report_format(args) == "csv":
        wio.atomic_write_text(args.out, csv_text)
    else:
        wio.atomic_write_text(args.out, json_text)
    if args.plot:
        from .plots import ratio_figure

        ratio_figure(trials, args.plot)


# -- subcommand handlers -----------------------------------------------------


def _cmd_stft(args) -> int:
    f = wio.read_signal(args.f)
    g = wio.read_signal(args.g)
    wio.write_field(args.out, stft1(f, g))
    return 0


def _cmd_wigner(args) -> int:
    f = wio.read_signal(args.f)
    g = wio.read_signal(args.g)
    wio.write_field(args.out, wigner(f, g))
    return 0


def _cmd_tau_wigner(args) -> int:
    f = wio.read_signal(args.f)
    g = wio.read_signal(args.g)
    wio.write_field(args.out, tau_wigner(f, g, args.tau))
    return 0


def _cmd_norm(args) -> int:
    spec = NormSpec.from_json(json.loads(args.spec))
    try:
        field = wio.read_field(args.input)
        value = mixed_norm(field, spec)
    except ValueError:
        f = wio.read_signal(args.input)
        if args.window:
            window = wio.read_signal(args.window)
        else:
            window = gaussian(f.grid)
        if spec.order == ORDER_AMALGAM and args.window_2d:
            value = _symbol_amalgam(args, spec)
        else:
            value = mixed_norm(stft1(f, window), spec)
    print(repr(value))
    if args.out:
        wio.atomic_write_text(
            args.out, canonical_json_text({"norm": value, "spec": spec.to_json()})
        )
    return 0


def _symbol_amalgam(args, spec: NormSpec) -> float:
    from .norms import stft2_mixed_norm

    a = wio.read_field(args.input)
    window = wio.read_field(args.window_2d)
    return stft2_mixed_norm(stft2(a, window), spec)


def _cmd_weyl(args) -> int:
    a = wio.read_field(args.symbol)
    op = weyl_matrix(a)
    wio.write_operator(args.out, op)
    if args.apply_to:
        f = wio.read_signal(args.apply_to)
        if not args.out_signal:
            raise ValueError("--apply-to requires --out-signal")
        wio.write_signal(args.out_signal, op_apply(op, f))
    return 0


def _cmd_tau_op(args) -> int:
    a = wio.read_field(args.symbol)
    op = tau_matrix(a, args.tau)
    wio.write_operator(args.out, op)
    if args.apply_to:
        f = wio.read_signal(args.apply_to)
        if not args.out_signal:
            raise ValueError("--apply-to requires --out-signal")
        wio.write_signal(args.out_signal, op_apply(op, f))
    return 0


def _cmd_convert_symbol(args) -> int:
    a = wio.read_field(args.symbol)
    wio.write_field(args.out, convert_symbol(a, args.tau_from, args.tau_to))
    return 0


def _cmd_check_exponents(args) -> int:
    t = ExponentTuple(
        _parse_exponent(args.p),
        _parse_exponent(args.q),
        _parse_exponent(args.r1),
        _parse_exponent(args.r2),
    )
    verdict = check_exponents(t)
    if verdict.admissible:
        print("admissible")
    else:
        print("inadmissible: " + "; ".join(verdict.reasons))
    return 0


def _resolve_seed(args, config: dict) -> int:
    if args.seed is not None:
        return args.seed
    return int(config.get("seed", DEFAULT_SEED))


def _cmd_verify_theorem(args) -> int:
    config = _load_config(args.config)
    seed = _resolve_seed(args, config)
    exponents = ExponentTuple.from_json(config["exponents"])
    weights = config.get("weights", {})
    report = theorem_ratio_experiment(
        exponents,
        _weight_from_config(weights.get("m")),
        _weight_from_config(weights.get("v")),
        _ensemble_from_config(config["symbol_ensemble"], seed),
        _ensemble_from_config(config["signal_ensemble"], seed + 1),
        [int(n) for n in config.get("grids", [16, 32])],
        allow_inadmissible=bool(config.get("allow_inadmissible", False)),
    )
    _emit(args, report_to_json_text(report), report_to_csv_text(report), report.trials)
    return 0


def _cmd_verify_lemma(kind: str, args) -> int:
    config = _load_config(args.config)
    seed = _resolve_seed(args, config)
    weights = config.get("weights", {})
    result = lemma_experiment(
        kind,
        _weight_from_config(weights.get("m")),
        _weight_from_config(weights.get("v")),
        _ensemble_from_config(config["ensemble"], seed),
        [int(n) for n in config.get("grids", [16])],
        p1=exponent_from_json(config.get("p1", 2)),
        p2=exponent_from_json(config.get("p2", 2)),
    )
    _emit(
        args,
        canonical_json_text(result),
        trials_to_csv_text(result["trials"]),
        result["trials"],
    )
    return 0


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylkit",
        description="Discrete phase-space transforms, norms, operators, "
        "and boundedness experiments.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"base seed for randomized ensembles (default {DEFAULT_SEED}; "
        "never wall-clock)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("stft", _cmd_stft, "short-time Fourier transform of a signal")
    p.add_argument("--f", required=True, help="input signal (JSON)")
    p.add_argument("--g", required=True, help="window signal (JSON)")
    p.add_argument("--out", required=True, help="output field (JSON)")

    p = add("wigner", _cmd_wigner, "cross-Wigner distribution of two signals")
    p.add_argument("--f", required=True, help="first signal (JSON)")
    p.add_argument("--g", required=True, help="second signal (JSON)")
    p.add_argument("--out", required=True, help="output field (JSON)")

    p = add("tau-wigner", _cmd_tau_wigner, "tau-Wigner distribution")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--tau", type=float, required=True, help="tau in [0, 1]")
    p.add_argument("--out", required=True)

    p = add("norm", _cmd_norm, "weighted mixed norm of a signal or field")
    p.add_argument("--input", required=True, help="signal or field (JSON)")
    p.add_argument("--window", help="1-D window signal (JSON, default Gaussian)")
    p.add_argument("--window-2d", help="2-D window field for symbol amalgam norms")
    p.add_argument(
        "--spec",
        default='{"p": 2, "q": 2, "weight": {"kind": "constant"}, '
        '"order": "modulation"}',
        help="norm spec as inline JSON",
    )
    p.add_argument("--out", help="optional JSON output path")

    p = add("weyl", _cmd_weyl, "Weyl operator matrix of a symbol")
    p.add_argument("--symbol", required=True, help="symbol field (JSON)")
    p.add_argument("--out", required=True, help="output operator (binary)")
    p.add_argument("--apply-to", help="optional signal to apply the operator to")
    p.add_argument("--out-signal", help="output path for the applied signal")

    p = add("tau-op", _cmd_tau_op, "tau-quantized operator matrix of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--apply-to")
    p.add_argument("--out-signal")

    p = add(
        "convert-symbol",
        _cmd_convert_symbol,
        "convert a symbol between quantization parameters",
    )
    p.add_argument("--symbol", required=True)
    p.add_argument("--tau-from", type=float, required=True)
    p.add_argument("--tau-to", type=float, required=True)
    p.add_argument("--out", required=True)

    p = add(
        "check-exponents",
        _cmd_check_exponents,
        "admissibility of a boundedness exponent tuple",
    )
    for name in ("p", "q", "r1", "r2"):
        p.add_argument(
            f"--{name}", required=True, help="exponent in [1, inf]; 'inf' allowed"
        )

    for kind, help_text in (
        ("verify-theorem", "operator-norm boundedness ratio experiment"),
        ("verify-lemma31", "Wigner amalgam estimate, dual modulation norms"),
        ("verify-lemma32", "Wigner amalgam estimate, square-integrable case"),
    ):
        if kind == "verify-theorem":
            p = add(kind, _cmd_verify_theorem, help_text)
        else:
            lemma = "lemma31" if kind.endswith("31") else "lemma32"
            p = add(
                kind,
                (lambda k: lambda a: _cmd_verify_lemma(k, a))(lemma),
                help_text,
            )
        p.add_argument("--config", required=True, help="experiment config (JSON)")
        p.add_argument("--out", required=True, help="report output path")
        p.add_argument(
            "--format", choices=("json", "csv"), help="report format "
            "(default: by extension, .csv -> csv, else json)"
        )
        p.add_argument("--plot", help="optional PNG figure of per-trial ratios")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
