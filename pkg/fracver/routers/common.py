"""
Outils partagés des sous-commandes : erreurs, sorties CSV / JSON, grilles.
"""
import csv
import io
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence

import orjson
import typer
from pydantic import ValidationError

from fracver.core.config import settings
from fracver.core.errors import (
    ConfigurationError,
    DomainError,
    FracverError,
    NotApplicableError,
    UnknownClaimError,
    UnsupportedKernelError,
)
from fracver.core.logging import err_console
from fracver.schemas.grid import Grid, SampledFunction

# Erreurs d'usage : code de sortie 2 ; les autres erreurs numériques : 1
USAGE_ERRORS = (DomainError, UnknownClaimError, ConfigurationError, UnsupportedKernelError, NotApplicableError)
EXIT_NUMERIC = 1
EXIT_USAGE = 2

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


@contextmanager
def cli_errors(context: str) -> Iterator[None]:
    """Convertit les erreurs de la bibliothèque en message rouge + code de sortie"""
    try:
        yield
    except ValidationError as exc:
        err_console.print(f"[red]❌ {context} : paramètres invalides[/red]")
        for error in exc.errors():
            location = ".".join(str(part) for part in error["loc"]) or "entrée"
            err_console.print(f"   {location} : {error['msg']}")
        raise typer.Exit(EXIT_USAGE)
    except USAGE_ERRORS as exc:
        err_console.print(f"[red]❌ {context} : {exc}[/red]")
        raise typer.Exit(EXIT_USAGE)
    except FracverError as exc:
        err_console.print(f"[red]❌ {context} : échec numérique ({type(exc).__name__}) {exc}[/red]")
        raise typer.Exit(EXIT_NUMERIC)


def make_grid(T: float, N: Optional[int]) -> Grid:
    """Grille [0, T] ; N par défaut selon FRACVER_PRECISION"""
    return Grid(T=T, N=N if N is not None else settings.default_steps)


def dump_json(payload) -> bytes:
    return orjson.dumps(payload, option=JSON_OPTIONS)


def _emit(data: bytes, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        out.write_bytes(data)


def write_json(payload, out: Optional[Path] = None) -> None:
    _emit(dump_json(payload) + b"\n", out)


def _csv_bytes(header: Sequence[str], rows: Iterable[Sequence[float]]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    return buffer.getvalue().encode()


def write_csv(header: Sequence[str], rows: Iterable[Sequence[float]], out: Optional[Path] = None) -> None:
    _emit(_csv_bytes(header, rows), out)


def sampled_rows(f: SampledFunction) -> List[List[float]]:
    """Lignes `t,value[,deriv]`"""
    columns = [f.nodes, f.values] + ([f.deriv_values] if f.deriv_values is not None else [])
    return [list(row) for row in zip(*columns)]


def sampled_header(f: SampledFunction) -> List[str]:
    return ["t", "value", "deriv"] if f.deriv_values is not None else ["t", "value"]


def write_sampled(f: SampledFunction, fmt: OutputFormat, out: Optional[Path]) -> None:
    if fmt == OutputFormat.JSON:
        write_json(f.model_dump(), out)
    else:
        write_csv(sampled_header(f), sampled_rows(f), out)


def summary(message: str, ok: bool = True) -> None:
    """Résumé d'une ligne sur stderr (stdout reste réservé aux données)"""
    err_console.print(f"{'✅' if ok else '❌'} {message}")


def parse_floats(text: str, name: str) -> List[float]:
    """Liste `a,b,c` -> [a, b, c]"""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise DomainError(f"{name} : liste de réels attendue, reçu {text!r}") from None
    if not values:
        raise DomainError(f"{name} : liste vide")
    return values
