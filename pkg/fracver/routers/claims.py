"""Sous-commandes `verify` et `list-claims`"""
from enum import Enum
from pathlib import Path
from typing import List, Optional

import typer
from rich.table import Table

from fracver.claims import lint_registry, registry, run_all, run_claim, summarize
from fracver.core.logging import console, err_console
from fracver.routers.common import EXIT_NUMERIC, cli_errors, write_json


class ReportFormat(str, Enum):
    TABLE = "table"
    JSON = "json"


def _reports_table(reports) -> Table:
    table = Table(title="Vérifications")
    for column in ("", "id", "valeur", "tolérance", "sens", "ms"):
        table.add_column(column)
    for r in reports:
        table.add_row("✅" if r.passed else "❌", r.id, f"{r.value:.3e}", f"{r.tolerance:.1e}",
                      r.direction.value, str(r.runtime_ms))
    return table


def verify(
    all_claims: bool = typer.Option(False, "--all", help="Toutes les vérifications"),
    claim: List[str] = typer.Option([], "--claim", help="Identifiant ; répéter l'option"),
    tag: Optional[str] = typer.Option(None, "--tag", help="Filtre par tag (ex. §5, Prabhakar)"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Threads (défaut : FRACVER_CLAIM_WORKERS)"),
    fmt: ReportFormat = typer.Option(ReportFormat.TABLE, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", help="Rapport JSON"),
):
    """Exécute les vérifications ; code de sortie 1 si l'une échoue"""
    if not (all_claims or claim or tag):
        raise typer.BadParameter("préciser --all, --claim ou --tag")
    with cli_errors("verify"):
        problems = lint_registry()
        for problem in problems:
            err_console.print(f"[yellow]registre : {problem}[/yellow]")
        if claim:
            reports = sorted((run_claim(i) for i in claim), key=lambda r: r.id)
        else:
            reports = run_all(None if all_claims else tag, workers=workers)
    payload = [r.model_dump(mode="json", by_alias=True) for r in reports]
    if out is not None:
        write_json(payload, out)
    if fmt == ReportFormat.JSON:
        write_json(payload)
    else:
        console.print(_reports_table(reports))
    total = summarize(reports)
    ok = total.failed == 0 and not problems
    err_console.print(f"{'✅' if ok else '❌'} {total.passed}/{total.total} vérifications réussies "
                      f"en {total.runtime_ms} ms")
    if not ok:
        raise typer.Exit(EXIT_NUMERIC)


def list_claims(
    tag: Optional[str] = typer.Option(None, "--tag"),
    fmt: ReportFormat = typer.Option(ReportFormat.TABLE, "--format"),
):
    """Liste les vérifications enregistrées"""
    infos = [registry.get(i).info for i in registry.ids(tag)]
    if fmt == ReportFormat.JSON:
        write_json([info.model_dump(mode="json") for info in infos])
        return
    table = Table(title=f"{len(infos)} vérification(s)")
    for column in ("id", "référence", "tags", "tolérance", "sens"):
        table.add_column(column)
    for info in infos:
        table.add_row(info.id, info.paper_ref, ", ".join(info.tags), f"{info.tolerance:.1e}", info.direction.value)
    console.print(table)
