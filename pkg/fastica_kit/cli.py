# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# CLI Logic for fastica-kit

import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from fastica_kit.core.context import AppContext
from fastica_kit.utils.config import DEFAULT_CONFIG_PATH

# Initialize Typer app
app = typer.Typer(
    name="fastica-kit",
    help="Blind source separation with FastICA and a benchmark harness for its nonlinearities",
    add_completion=True,
)
console = Console()

# Create app context
ctx = AppContext()


def _fail(e: Exception) -> None:
    console.print(f"❌ Error: {e}", style="red")
    raise typer.Exit(code=1)


# Define global options
@app.callback()
def callback(
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="Path to configuration file"
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Show debug logs and progress"
    ),
):
    """
    Global options for the fastica-kit CLI
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
    ctx.verbose = verbose
    try:
        ctx.load(config or DEFAULT_CONFIG_PATH)
    except Exception as e:
        _fail(e)


@app.command("gen")
def gen(
    spec: List[str] = typer.Option(
        ..., "--spec", help="Source spec kind:param, e.g. sine:100 or uniform:42 (repeatable)"
    ),
    samples: int = typer.Option(..., "--samples", help="Samples per source"),
    out: Path = typer.Option(..., "--out", help="Output file (.csv or .wav)"),
):
    """
    Generate unit-variance synthetic sources, one row per --spec.
    """
    from fastica_kit.core.generate import generate_sources_file

    try:
        output_path = generate_sources_file(spec, samples, str(out), ctx.config)
        console.print(f"✅ {len(spec)} sources written to [bold]{output_path}[/bold]", style="green")
    except Exception as e:
        _fail(e)


@app.command("mix")
def mix(
    sources: List[Path] = typer.Option(..., "--sources", help="Source file(s); rows are stacked"),
    out: Path = typer.Option(..., "--out", help="Output mixture file"),
    matrix: Optional[Path] = typer.Option(None, "--matrix", help="Mixing matrix A as CSV"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Draw a random well-conditioned A"),
    reference_matrix: bool = typer.Option(
        False, "--reference-matrix", help="Use the built-in 3x3 example matrix"
    ),
    save_matrix: Optional[Path] = typer.Option(
        None, "--save-matrix", help="Also write the A that was used as CSV"
    ),
):
    """
    Mix sources as X = A·S. Give exactly one of --matrix, --seed or --reference-matrix.
    """
    from fastica_kit.core.generate import mix_sources_file

    try:
        output_path, a = mix_sources_file(
            [str(p) for p in sources],
            str(out),
            matrix_path=str(matrix) if matrix else None,
            seed=seed,
            reference_matrix=reference_matrix,
            save_matrix_path=str(save_matrix) if save_matrix else None,
            config=ctx.config,
        )
        console.print(
            f"✅ {a.shape[0]} mixtures written to [bold]{output_path}[/bold]", style="green"
        )
    except Exception as e:
        _fail(e)


@app.command("separate")
def separate(
    input: List[Path] = typer.Option(..., "--input", help="Mixture file(s): .csv, .wav or .pgm"),
    components: int = typer.Option(..., "--components", help="Number of sources M"),
    out: Path = typer.Option(..., "--out", help="Estimates file; format follows the extension"),
    nonlinearity: Optional[str] = typer.Option(
        None, "--nonlinearity", help="tanh, gauss, pow3 or sin (default from config)"
    ),
    epsilon: Optional[float] = typer.Option(None, "--epsilon", help="Convergence tolerance"),
    max_iter: Optional[int] = typer.Option(
        None, "--max-iter", help="Iteration cap per component"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the initial vectors"),
    sources: Optional[List[Path]] = typer.Option(
        None, "--sources", help="Ground-truth source file(s) to score the estimates against"
    ),
    report: Optional[Path] = typer.Option(None, "--report", help="Write a JSON run report"),
):
    """
    Separate mixtures into independent components.
    """
    from fastica_kit.core.separate import build_fastica_config, process_file

    try:
        fastica_config = build_fastica_config(
            ctx.config, components, nonlinearity, epsilon, max_iter, seed
        )
        with console.status(f"Separating with '{fastica_config.nonlinearity.value}'..."):
            summary = process_file(
                [str(p) for p in input],
                str(out),
                fastica_config,
                config=ctx.config,
                sources_path=[str(p) for p in sources] if sources else None,
                report_path=str(report) if report else None,
            )
    except Exception as e:
        _fail(e)
        return

    converged = sum(summary["converged"])
    console.print(
        f"✅ {converged}/{components} components converged in "
        f"{summary['elapsed_seconds']:.4f}s; estimates written to [bold]{out}[/bold]",
        style="green",
    )
    if "match" in summary:
        console.print(f"C-ave against sources: {summary['match']['c_ave']:.4f}")


@app.command("benchmark")
def benchmark(
    sources: List[Path] = typer.Option(..., "--sources", help="Source file(s); rows are stacked"),
    matrix: Path = typer.Option(..., "--matrix", help="Mixing matrix A as CSV"),
    out: Path = typer.Option(..., "--out", help="Report file (.csv or .json)"),
    repeats: Optional[int] = typer.Option(None, "--repeats", help="Runs per nonlinearity"),
    nonlinearities: Optional[str] = typer.Option(
        None, "--nonlinearities", help="Comma-separated kinds, e.g. tanh,gauss,pow3,sin"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Base seed; repeat r uses seed + r"),
    epsilon: Optional[float] = typer.Option(None, "--epsilon", help="Convergence tolerance"),
    max_iter: Optional[int] = typer.Option(
        None, "--max-iter", help="Iteration cap per component"
    ),
    workers: Optional[int] = typer.Option(None, "--workers", help="Concurrent repeats"),
    label: Optional[str] = typer.Option(None, "--label", help="Experiment label in the report"),
):
    """
    Separate the mixed sources repeatedly per nonlinearity and report C-ave and T-ave.
    """
    from fastica_kit.core.benchmark import benchmark_files

    kinds = None
    if nonlinearities:
        kinds = [kind.strip() for kind in nonlinearities.split(",") if kind.strip()]

    try:
        result = benchmark_files(
            [str(p) for p in sources],
            str(matrix),
            str(out),
            kinds=kinds,
            repeats=repeats,
            base_seed=seed,
            epsilon=epsilon,
            max_iterations=max_iter,
            workers=workers,
            label=label,
            config=ctx.config,
            verbose=ctx.verbose,
        )
    except Exception as e:
        _fail(e)
        return

    table = Table(title=f"{result.experiment_label} ({result.repeats} repeats)")
    table.add_column("Nonlinearity", style="cyan")
    table.add_column("C-ave", justify="right")
    table.add_column("T-ave (s)", justify="right")
    table.add_column("Iterations", justify="right")
    table.add_column("Converged", justify="right")
    for row in result.rows:
        table.add_row(
            row.nonlinearity.value,
            f"{row.c_ave:.4f}",
            f"{row.t_ave_seconds:.4f}",
            f"{row.mean_iterations:.1f}",
            f"{row.convergence_rate:.0%}",
        )
    console.print(table)
    console.print(f"✅ Report written to [bold]{out}[/bold]", style="green")


if __name__ == "__main__":
    app()
