import json
import os
import sys
from pathlib import Path
from typing import Iterable, List, Optional

import typer
from rich.console import Console

from order2phi import config
from order2phi.components.montecarlo import MonteCarloConfig, benchmark, derive_seed, run_montecarlo
from order2phi.core.census import (
    brute_force_census,
    exact_success_probability,
    order_census,
    small_order_mass,
    verify_multiplicativity,
)
from order2phi.core.errors import DomainError, Order2PhiError
from order2phi.core.modulus import ModulusMode, Semiprime, make_semiprime, semiprime_from_modulus
from order2phi.core.recovery import Method, recover
from order2phi.logger import configure_logging

try:
    # typer releases that vendor click raise their own exception classes
    from typer._click.exceptions import Abort, UsageError
except ImportError:
    from click.exceptions import Abort, UsageError

app = typer.Typer(add_completion=False, help="Recover phi(N) of an RSA modulus from the order of a random unit.")
docs_app = typer.Typer()
app.add_typer(docs_app, name="docs")

stderr = Console(stderr=True)


def _emit(lines: Iterable[str], out: Optional[Path]) -> None:
    if out is None:
        for line in lines:
            typer.echo(line)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as handle:
        for line in lines:
            handle.write(line + "\n")


@app.callback()
def callback(
    log_level: str = typer.Option(config.LOG_LEVEL, "--log-level", envvar=config.LOG_LEVEL_ENV),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="shortcut for --log-level DEBUG"),
) -> None:
    configure_logging("DEBUG" if verbose else log_level)


@app.command("gen")
def gen(
    bits: int = typer.Option(..., "--bits", help="bit length of each prime"),
    count: int = typer.Option(1, "--count", min=1),
    seed: int = typer.Option(config.GLOBALSEED, "--seed", envvar=config.SEED_ENV),
    mode: ModulusMode = typer.Option(ModulusMode.GENERATE, "--mode"),
    out: Optional[Path] = typer.Option(None, "--out"),
) -> None:
    """Emit semiprimes as JSON lines; record i uses a seed derived from --seed and i."""
    moduli = (make_semiprime(bits, derive_seed(seed, index), mode) for index in range(count))
    _emit((json.dumps(s.to_dict()) for s in moduli), out)


@app.command("recover")
def recover_command(
    method: Method = typer.Option(Method.ORDER, "--method"),
    n: int = typer.Option(..., "--n", min=1),
    x: Optional[int] = typer.Option(None, "--x", help="order of a unit (method order)"),
    divisor: Optional[int] = typer.Option(None, "--divisor", help="D for the divisor, gcd and boost methods"),
    e: Optional[int] = typer.Option(None, "--e", help="public exponent (method ed)"),
    d: Optional[int] = typer.Option(None, "--d", help="private exponent (method ed)"),
) -> None:
    """Run one recovery; exit 0 on success and 2 on a verified failure."""
    outcome = recover(method, n, x=x, divisor=divisor, e=e, d=d)
    typer.echo(json.dumps(outcome.to_dict()))
    if not outcome.succeeded:
        raise typer.Exit(code=config.EXIT_VERIFIED_FAILURE)


@app.command("montecarlo")
def montecarlo(
    bits: int = typer.Option(..., "--bits"),
    trials: int = typer.Option(..., "--trials", min=1),
    seed: int = typer.Option(config.GLOBALSEED, "--seed", envvar=config.SEED_ENV),
    workers: int = typer.Option(config.WORKERS, "--workers", min=1, envvar=config.WORKERS_ENV),
    fixed: bool = typer.Option(False, "--fixed", help="one modulus from --seed for every trial"),
    mode: ModulusMode = typer.Option(ModulusMode.GENERATE, "--mode"),
    disclose: bool = typer.Option(False, "--disclose", help="write the full semiprime into each record"),
    timings: bool = typer.Option(False, "--timings", help="record per-trial wall time"),
    exact: bool = typer.Option(True, "--exact/--no-exact", help="compare against the exact census probability"),
    out: Optional[Path] = typer.Option(None, "--out", help="JSON lines for the trials; the summary goes to stdout"),
) -> None:
    cfg = MonteCarloConfig(
        bits=bits,
        trials=trials,
        seed=seed,
        mode=mode,
        fixed=fixed,
        disclose=disclose,
        timings=timings,
        exact=exact,
        workers=workers,
    )
    records, summary = run_montecarlo(cfg)
    lines = [record.to_json() for record in records]
    if out is None:
        _emit(lines + [summary.to_json()], None)
    else:
        _emit(lines, out)
        typer.echo(summary.to_json())


@app.command("census")
def census(
    n: Optional[int] = typer.Option(None, "--n", help="modulus to factor at desk scale"),
    p: Optional[int] = typer.Option(None, "--p"),
    q: Optional[int] = typer.Option(None, "--q"),
    brute: bool = typer.Option(False, "--brute", help="also emit the brute force table"),
    check: bool = typer.Option(False, "--check", help="cross-validate formula and brute force"),
) -> None:
    """Order census N(x) over the divisors of lambda(N) and the exact success profile."""
    if p is not None and q is not None:
        s = Semiprime.from_primes(p, q)
    elif n is not None:
        s = semiprime_from_modulus(n)
    else:
        raise typer.BadParameter("pass --n or both --p and --q")
    table = order_census(s)
    document = {
        "census": table.to_dict(),
        "profile": exact_success_probability(s).to_dict(),
        "small_order_mass": str(small_order_mass(s)),
    }
    mismatch = False
    if brute or check:
        oracle = brute_force_census(s.n)
        document["brute_force"] = oracle.to_dict()
        mismatch = oracle.entries != table.entries or table.total != s.phi
    if check:
        report = verify_multiplicativity(s)
        document["multiplicativity"] = report.to_dict()
        document["check"] = "fail" if mismatch or not report.passed else "pass"
        mismatch = mismatch or not report.passed
    typer.echo(json.dumps(document))
    if check and mismatch:
        raise typer.Exit(code=config.EXIT_INTERNAL)


@app.command("bench")
def bench(
    bits: int = typer.Option(2048, "--bits"),
    calls: int = typer.Option(100, "--calls", min=1),
    seed: int = typer.Option(config.GLOBALSEED, "--seed", envvar=config.SEED_ENV),
    sampled: bool = typer.Option(False, "--sampled", help="time with a sampled order instead of lambda(N)"),
) -> None:
    """Median wall time of the order-based recovery on a constructed modulus."""
    typer.echo(json.dumps(benchmark(bits=bits, calls=calls, seed=seed, sampled=sampled)))


@docs_app.command("build")
def build_docs() -> None:
    import shutil

    os.system("mkdocs build")  # nosec B605 B607
    shutil.copyfile(src="README.md", dst="docs/index.md")


@docs_app.command("serve")
def serve_docs() -> None:
    os.system("mkdocs serve")  # nosec B605 B607


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point enforcing the exit codes 0, 2, 64 (usage or domain) and 70 (resource or internal)."""
    try:
        code = app(args=argv, prog_name="order2phi", standalone_mode=False)
    except UsageError as exc:
        exc.show()
        sys.exit(config.EXIT_USAGE)
    except DomainError as exc:
        stderr.print(f"[red]domain error:[/red] {exc}")
        sys.exit(config.EXIT_USAGE)
    except Order2PhiError as exc:
        stderr.print(f"[red]{type(exc).__name__}:[/red] {exc}")
        sys.exit(config.EXIT_INTERNAL)
    except Abort:
        sys.exit(config.EXIT_INTERNAL)
    sys.exit(code if isinstance(code, int) else config.EXIT_OK)
