"""Sous-commandes `apply` et `ml`"""
from pathlib import Path
from typing import List, Optional

import typer

from fracver.numerics.glcalc import gl_derivative
from fracver.numerics.operators import apply_operator
from fracver.numerics.specfun import mittag_leffler, prabhakar_ml
from fracver.routers.common import OutputFormat, cli_errors, make_grid, summary, write_csv, write_json, write_sampled
from fracver.schemas.glcalc import ExtensionKind
from fracver.schemas.operator import OperatorKind
from fracver.testfunctions import named_function, parse_kernel


def apply(
    op: OperatorKind = typer.Option(..., "--op", help="Opérateur à appliquer"),
    f: str = typer.Option(..., "--f", help="const[:c], linear, power:γ, cos, sin, exp, poly3, csv:CHEMIN"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Ordre α"),
    kernel: Optional[str] = typer.Option(None, "--kernel", help="Noyau pour dphi / prabhakar (ex. prabhakar:0.5:0.5:1:-1)"),
    T: float = typer.Option(1.0, "--T", help="Horizon"),
    N: Optional[int] = typer.Option(None, "--N", help="Nombre de pas (défaut : FRACVER_PRECISION)"),
    M: float = typer.Option(1.0, "--M", help="Normalisation M(α) de CF"),
    B: float = typer.Option(1.0, "--B", help="Normalisation B(α) de ABC"),
    scheme: str = typer.Option("rectangle", "--scheme", help="rectangle ou trapezoid (CF, dphi)"),
    ext: ExtensionKind = typer.Option(ExtensionKind.TAYLOR, "--ext", help="Prolongement pour gl"),
    out: Optional[Path] = typer.Option(None, "--out", help="Fichier de sortie (stdout par défaut)"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
):
    """Applique un opérateur fractionnaire à une fonction nommée ou échantillonnée"""
    with cli_errors(f"apply {op.value}"):
        grid = make_grid(T, N)
        function = named_function(f)
        if op == OperatorKind.GRUNWALD_LETNIKOV:
            if alpha is None:
                raise typer.BadParameter("gl exige --alpha")
            result = gl_derivative(alpha, function, grid, ext)
        else:
            k = parse_kernel(kernel) if kernel is not None else None
            result = apply_operator(op, function, grid, alpha=alpha, kernel=k, M=M, B=B, scheme=scheme)
        write_sampled(result, fmt, out)
        summary(f"{op.value} sur {f} : N={grid.N}, valeur finale {result.values[-1]:.10g}")


def ml(
    alpha: float = typer.Option(..., "--alpha"),
    z: List[float] = typer.Option(..., "--z", help="Argument(s) ; répéter l'option pour plusieurs valeurs"),
    beta: float = typer.Option(1.0, "--beta"),
    gamma_p: Optional[float] = typer.Option(None, "--gamma", help="Paramètre γ (fonction de Prabhakar)"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format"),
):
    """Évalue E_{α,β}(z) ou E^γ_{α,β}(z)"""
    with cli_errors("ml"):
        if gamma_p is None:
            values = [mittag_leffler(alpha, beta, x) for x in z]
        else:
            values = [prabhakar_ml(alpha, beta, gamma_p, x) for x in z]
        if fmt == OutputFormat.CSV:
            write_csv(["z", "value"], zip(z, values), out)
        else:
            write_json({"alpha": alpha, "beta": beta, "gamma": gamma_p, "z": z, "values": values}, out)
        summary(f"{len(values)} valeur(s) de Mittag-Leffler évaluée(s)")
