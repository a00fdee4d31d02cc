"""Sous-commandes `solve` (équations de Cauchy) et `heat` (diffusion en temps)"""
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from fracver.numerics.fde import reduce_abc_to_caputo, reduce_cf_to_integer, residual_check, solve
from fracver.numerics.heat1d import solve_heat
from fracver.routers.common import (
    OutputFormat,
    cli_errors,
    make_grid,
    sampled_header,
    sampled_rows,
    summary,
    write_csv,
    write_json,
)
from fracver.schemas.fde import FDEProblem
from fracver.schemas.heat import HeatProblem
from fracver.schemas.operator import OperatorKind
from fracver.testfunctions import named_profile, named_rhs, parse_kernel


def solve_command(
    op: OperatorKind = typer.Option(..., "--op", help="caputo, cf, abc ou dphi"),
    alpha: float = typer.Option(..., "--alpha"),
    rhs: str = typer.Option("const:1", "--rhs", help="const[:c], decay:λ, sin-y, cos"),
    y0: float = typer.Option(0.0, "--y0"),
    kernel: Optional[str] = typer.Option(None, "--kernel", help="Noyau de dphi"),
    T: float = typer.Option(1.0, "--T"),
    N: Optional[int] = typer.Option(None, "--N"),
    M: float = typer.Option(1.0, "--M"),
    B: float = typer.Option(1.0, "--B"),
    reduce: bool = typer.Option(False, "--reduce", help="Passe par la réduction (CF → EDO, ABC → Caputo)"),
    check: bool = typer.Option(False, "--check", help="Ajoute le résidu et le défaut prédit"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
):
    """Résout D y = g(t, y), y(0) = y0"""
    with cli_errors(f"solve {op.value}"):
        g, g_t, g_y = named_rhs(rhs)
        problem = FDEProblem(kind=op, alpha=alpha, kernel=parse_kernel(kernel) if kernel else None,
                             g=g, g_t=g_t, g_y=g_y, y0=y0, grid=make_grid(T, N), M=M, B=B)
        if reduce and op == OperatorKind.CF_DERIVATIVE:
            y = reduce_cf_to_integer(problem)
        elif reduce and op == OperatorKind.ABC_DERIVATIVE:
            y = reduce_abc_to_caputo(problem)
        elif reduce:
            raise typer.BadParameter("--reduce n'existe que pour cf et abc")
        else:
            y = solve(problem)

        report = residual_check(problem, y) if check else None
        if fmt == OutputFormat.JSON:
            payload = {"solution": y.model_dump()}
            if report is not None:
                payload["residual"] = report.model_dump()
            write_json(payload, out)
        elif report is None:
            write_csv(sampled_header(y), sampled_rows(y), out)
        else:
            rows = zip(y.nodes, y.values, report.residual.values, report.predicted_defect.values)
            write_csv(["t", "value", "residual", "predicted_defect"], rows, out)

        message = f"{op.value} : y(T) = {y.values[-1]:.10g}"
        if report is not None:
            message += f", écart résidu/défaut prédit {report.max_mismatch:.3e}"
        summary(message)


def heat(
    kernel: str = typer.Option(..., "--kernel", help="power:μ (Caputo : μ = 1 − α), cf:α, abc:α, ..."),
    v0: str = typer.Option("sin", "--v0", help="sin[:c], bump ou zero"),
    x_nodes: int = typer.Option(64, "--x-nodes", help="Points intérieurs en espace"),
    T: float = typer.Option(1.0, "--T"),
    N: Optional[int] = typer.Option(None, "--N"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
):
    """Diffusion D_t u − Δu = 0 sur (0, 1), bords nuls"""
    with cli_errors("heat"):
        problem = HeatProblem(x_nodes=x_nodes, grid=make_grid(T, N), kernel=parse_kernel(kernel),
                              v0=named_profile(v0))
        solution = solve_heat(problem)
        if fmt == OutputFormat.JSON:
            write_json(solution.model_dump(), out)
        else:
            header = ["t"] + [f"x_{i}" for i in range(1, x_nodes + 1)]
            rows = (np.concatenate(([t], row)) for t, row in zip(solution.grid.nodes, solution.field))
            write_csv(header, rows, out)
        worst = float(np.max(solution.per_level_residuals)) if solution.per_level_residuals.size else 0.0
        summary(f"résidu initial {solution.initial_slice_residual:.4g}, résidu max par niveau {worst:.4g}"
                + ("" if solution.satisfiable else " (équation non satisfiable)"),
                ok=solution.satisfiable)
