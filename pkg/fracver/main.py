"""
CLI fracver 📐
Opérateurs fractionnaires, diagnostics, solveurs et vérification des identités
des dérivées à noyau borné
"""
from typing import Optional

import typer

from fracver import __version__
from fracver.core.logging import console, setup_logging
from fracver.routers import claims, diagnostics, operators, solvers

# Créer l'application
app = typer.Typer(
    name="fracver",
    help="Calcul fractionnaire numérique et vérification des identités CF / ABC",
    no_args_is_help=True,
    add_completion=False,
)


def _version(value: bool) -> None:
    if value:
        console.print(f"fracver {__version__}")
        raise typer.Exit()


@app.callback()
def root(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Logs de niveau DEBUG"),
    version: Optional[bool] = typer.Option(None, "--version", callback=_version, is_eager=True,
                                           help="Affiche la version"),
):
    """Installe les logs avant chaque sous-commande"""
    setup_logging(verbose)


# Inclure les sous-commandes
app.command("apply")(operators.apply)
app.command("ml")(operators.ml)
app.command("sonine")(diagnostics.sonine)
app.command("laplace")(diagnostics.laplace)
app.command("solve")(solvers.solve_command)
app.command("heat")(solvers.heat)
app.command("verify")(claims.verify)
app.command("list-claims")(claims.list_claims)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
