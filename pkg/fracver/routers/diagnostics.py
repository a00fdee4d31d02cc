"""Sous-commandes `sonine` et `laplace`"""
from pathlib import Path
from typing import List, Optional

import numpy as np
import typer

from fracver.numerics.convquad import kernel_at_zero
from fracver.numerics.diagnostics import final_value_check, psi_hat_probe, sonine_check, sonine_pair_for
from fracver.routers.common import OutputFormat, cli_errors, parse_floats, summary, write_csv, write_json
from fracver.schemas.diagnostics import SonineClassification
from fracver.testfunctions import parse_kernel


def sonine(
    phi: str = typer.Option(..., "--phi", help="Noyau φ (power:μ, cf:α, abc:α, prabhakar:α:β:γ:λ, csv:CHEMIN)"),
    psi: Optional[str] = typer.Option(None, "--psi", help="Noyau ψ (défaut : partenaire de Sonine de φ)"),
    gaps: str = typer.Option("1,0.1,0.01,0.001", "--gaps", help="Écarts t − s décroissants"),
    tolerance: float = typer.Option(1e-6, "--tolerance"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format"),
):
    """Teste l'équation de Sonine φ∗ψ ≡ 1 sur des écarts décroissants"""
    with cli_errors("sonine"):
        k_phi = parse_kernel(phi)
        k_psi = parse_kernel(psi) if psi is not None else sonine_pair_for(k_phi)
        report = sonine_check(k_phi, k_psi, parse_floats(gaps, "--gaps"), tolerance=tolerance)
        if fmt == OutputFormat.CSV:
            write_csv(["gap", "integral"], zip(report.gaps, report.integrals), out)
        else:
            write_json(report.model_dump(mode="json"), out)
        summary(f"classification {report.classification.value}",
                ok=report.classification == SonineClassification.SONINE_PAIR)


def _final_value_fields(k, s_max: float) -> dict:
    """φ(0), s·φ̂(s) et 1/φ(0) ; null pour un noyau singulier"""
    if not k.is_bounded:
        return {"phi0": None, "final_value": None, "inverse_phi0": None}
    phi0 = kernel_at_zero(k)
    return {"phi0": phi0, "final_value": final_value_check(k, s_max), "inverse_phi0": 1.0 / phi0}


def laplace(
    kernel: str = typer.Option(..., "--kernel", help="Noyau (cf:α, abc:α, power:μ, csv:CHEMIN)"),
    s: List[float] = typer.Option([1e2, 1e3, 1e4], "--s", help="Abscisses de Laplace ; répéter l'option"),
    T: Optional[float] = typer.Option(None, "--T", help="Horizon de troncature (défaut adapté à s)"),
    out: Optional[Path] = typer.Option(None, "--out"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format"),
):
    """φ̂(s), ψ̂(s) = 1/(s·φ̂(s)) et limite s·φ̂(s) → φ(0)"""
    with cli_errors("laplace"):
        k = parse_kernel(kernel)
        fields = _final_value_fields(k, max(s))
        probe = psi_hat_probe(k, s, T)
        if fmt == OutputFormat.CSV:
            columns = [probe.s_values, probe.phi_hat, probe.psi_hat]
            header = ["s", "phi_hat", "psi_hat"]
            if probe.psi_hat_star is not None:
                columns.append(probe.psi_hat_star)
                header.append("psi_hat_star")
            write_csv(header, zip(*columns), out)
        else:
            payload = probe.model_dump(mode="json")
            payload.update(fields)
            write_json(payload, out)
        if fields["phi0"] is None:
            summary(f"noyau singulier {k.kind} : φ(0) infini, pas de valeur finale",
                    ok=bool(np.all(np.isfinite(probe.phi_hat))))
            return
        gap = abs(fields["final_value"] - fields["phi0"])
        summary(f"|s·φ̂(s) − φ(0)| = {gap:.3e} à s = {max(s):g} ; ψ̂ → {fields['inverse_phi0']:.6g} ≠ 0",
                ok=bool(np.isfinite(gap)))
