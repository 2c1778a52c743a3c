"""Command-line front end.

Every command maps to one library operation. Output is plain text, or a
single JSON document with --json that validates against schema/verdict.json.
Exit codes are 0 on success, 2 on malformed input and 3 on domain errors.
"""

import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Annotated, Any, Iterator

import typer

from . import brieskorn, farey, fillability, mcg, surgery
from .brieskorn import BrieskornCell, Family
from .farey import Slope
from .fillability import Ambient, FillabilityStatus, FillLevel
from .mcg import Word
from .surgery import FramingKind, MixedTorus
from .utils import (
    AtlasError,
    ParseError,
    console,
    err_console,
    format_fraction,
    parse_rational,
)

__all__ = ["app", "run"]

# Negative numbers such as -1/2 are arguments, not options
_CONTEXT = {"ignore_unknown_options": True}


def _level(text: str) -> FillLevel:
    try:
        return FillLevel[text.strip().upper()]
    except KeyError:
        names = ", ".join(level.name.lower() for level in FillLevel)
        raise ParseError(f"'{text}' is not a filling level ({names}).") from None


# Argument types with their parsers. A ValueError raised while parsing is
# reported by click as a usage error with exit code 2.
SlopeArg = Annotated[Slope, typer.Argument(parser=Slope.parse, metavar="SLOPE")]
RationalArg = Annotated[
    Fraction, typer.Argument(parser=parse_rational, metavar="RATIONAL")
]
WordArg = Annotated[Word, typer.Argument(parser=Word.parse, metavar="WORD")]
JsonOpt = Annotated[
    bool, typer.Option("--json", help="Print a single JSON document.")
]
LevelOpt = Annotated[str, typer.Option(metavar="LEVEL", help="A filling level.")]

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Exact Farey, mapping class and contact surgery computations.",
)
farey_app = typer.Typer(no_args_is_help=True, help="Farey graph arithmetic.")
mcg_app = typer.Typer(no_args_is_help=True, help="Genus one mapping classes.")
surgery_app = typer.Typer(no_args_is_help=True, help="Surgery coefficients.")
fill_app = typer.Typer(no_args_is_help=True, help="Fillability verdicts.")
brieskorn_app = typer.Typer(no_args_is_help=True, help="Brieskorn sphere atlas.")
app.add_typer(farey_app, name="farey")
app.add_typer(mcg_app, name="mcg")
app.add_typer(surgery_app, name="surgery")
app.add_typer(fill_app, name="fill")
app.add_typer(brieskorn_app, name="brieskorn")


@contextmanager
def _domain_errors() -> Iterator[None]:
    """Report library errors as '<ErrorName>: <message>' and exit."""
    try:
        yield
    except AtlasError as exc:
        err_console.print(f"{type(exc).__name__}: {exc}")
        raise typer.Exit(2 if isinstance(exc, ParseError) else 3) from None


def _emit(command: str, result: Any, text: str, as_json: bool) -> None:
    """Print the text rendering, or the JSON document."""
    if as_json:
        console.print(json.dumps({"command": command, "result": result}, indent=2))
    else:
        console.print(text)


def _status_text(status: FillabilityStatus) -> str:
    lines = [str(status)]
    for c in status.citations:
        lines.append(f"  {c}")
    return "\n".join(lines)


def _cell_text(cell: BrieskornCell) -> str:
    cell_status = brieskorn.status(cell)
    params = brieskorn.lr_params(cell)
    lines = [
        f"{cell}: {cell_status.kind.value} (l = {params.l}, r = {params.r}, "
        f"mixed = {params.mixed})"
    ]
    for c in cell_status.citations:
        lines.append(f"  {c}")
    return "\n".join(lines)


def _cell_record(cell: BrieskornCell) -> dict:
    for record in brieskorn.to_records(cell.family, cell.n):
        if (record["i"], record["j"]) == (cell.i, cell.j):
            return record
    raise RuntimeError(f"{cell} missing from its own enumeration!")


# farey


@farey_app.command("sum", context_settings=_CONTEXT)
def farey_sum(r: SlopeArg, s: SlopeArg, as_json: JsonOpt = False) -> None:
    """Farey sum of two slopes."""
    result = str(farey.fsum(r, s))
    _emit("farey sum", result, result, as_json)


@farey_app.command("mult", context_settings=_CONTEXT)
def farey_mult(r: SlopeArg, s: SlopeArg, as_json: JsonOpt = False) -> None:
    """Farey multiplication of two slopes."""
    result = farey.fmult(r, s)
    _emit("farey mult", result, str(result), as_json)


@farey_app.command("edge", context_settings=_CONTEXT)
def farey_edge(r: SlopeArg, s: SlopeArg, as_json: JsonOpt = False) -> None:
    """Whether two slopes are joined by an edge."""
    result = farey.has_edge(r, s)
    _emit("farey edge", result, str(result).lower(), as_json)


@farey_app.command("arc", context_settings=_CONTEXT)
def farey_arc(
    t: SlopeArg, start: SlopeArg, end: SlopeArg, as_json: JsonOpt = False
) -> None:
    """Whether T lies on the open clockwise arc from START to END."""
    with _domain_errors():
        result = farey.in_clockwise_arc(t, start, end)
    _emit("farey arc", result, str(result).lower(), as_json)


@farey_app.command("neighbors", context_settings=_CONTEXT)
def farey_neighbors(
    s0: SlopeArg, start: SlopeArg, end: SlopeArg, as_json: JsonOpt = False
) -> None:
    """Farey neighbors of S0 on the open clockwise arc from START to END."""
    with _domain_errors():
        result = [str(s) for s in farey.neighbors_in_arc(s0, start, end)]
    _emit("farey neighbors", result, " ".join(result), as_json)


# mcg


@mcg_app.command("eval", context_settings=_CONTEXT)
def mcg_eval(w: WordArg, as_json: JsonOpt = False) -> None:
    """Matrix of a word in SL(2, Z)."""
    mat = mcg.evaluate(w)
    result = {"matrix": mat.to_rows(), "trace": mat.trace}
    text = f"{mat.to_rows()} (trace {mat.trace})"
    _emit("mcg eval", result, text, as_json)


@mcg_app.command("classify", context_settings=_CONTEXT)
def mcg_classify(w: WordArg, as_json: JsonOpt = False) -> None:
    """Nielsen-Thurston type of a word."""
    result = mcg.nt_classify(w).value
    _emit("mcg classify", result, result, as_json)


@mcg_app.command("fdtc", context_settings=_CONTEXT)
def mcg_fdtc(w: WordArg, as_json: JsonOpt = False) -> None:
    """Exact fractional Dehn twist coefficient."""
    result = format_fraction(mcg.fdtc(w))
    _emit("mcg fdtc", result, result, as_json)


@mcg_app.command("rv", context_settings=_CONTEXT)
def mcg_rv(w: WordArg, as_json: JsonOpt = False) -> None:
    """Right-veering test."""
    result = mcg.right_veering(w).value
    _emit("mcg rv", result, result, as_json)


@mcg_app.command("nk", context_settings=_CONTEXT)
def mcg_nk(w: WordArg, as_json: JsonOpt = False) -> None:
    """The integer n_K and the set R(1/n_K)."""
    nk = mcg.n_K(w)
    r_set = str(fillability.r_interval(w))
    _emit("mcg nk", {"n_K": nk, "r_set": r_set}, f"{nk} {r_set}", as_json)


@mcg_app.command("normalform", context_settings=_CONTEXT)
def mcg_normalform(w: WordArg, as_json: JsonOpt = False) -> None:
    """Match a word against the six normal-form templates."""
    form = mcg.recognize_normal_form(w)
    if form is None:
        _emit("mcg normalform", None, "none", as_json)
        return
    result = {
        "kind": form.kind,
        "n": form.n,
        "r": list(form.r),
        "m": form.m,
        "type": form.expected_type.value,
    }
    params = f"r = {list(form.r)}" if form.kind in (1, 2) else f"m = {form.m}"
    text = f"type {form.kind}, n = {form.n}, {params} ({form.expected_type.value})"
    _emit("mcg normalform", result, text, as_json)


# surgery


@surgery_app.command("topo", context_settings=_CONTEXT)
def surgery_topo(
    r: RationalArg,
    tb: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Topological coefficient tb + r of contact (r)-surgery."""
    result = format_fraction(surgery.topological_coefficient(r, tb))
    _emit("surgery topo", result, result, as_json)


@surgery_app.command("framing", context_settings=_CONTEXT)
def surgery_framing(
    s: SlopeArg,
    kind: Annotated[FramingKind, typer.Argument()],
    times: Annotated[int, typer.Option(min=0)] = 1,
    as_json: JsonOpt = False,
) -> None:
    """Dividing slope after (in)admissible transverse surgery."""
    with _domain_errors():
        result = str(surgery.transverse_framing_update(s, kind, times))
    _emit("surgery framing", result, result, as_json)


@surgery_app.command("binding-slope", context_settings=_CONTEXT)
def surgery_binding_slope(
    w: WordArg,
    n: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Dividing slope of the binding neighborhood in the n-th structure."""
    with _domain_errors():
        result = str(surgery.binding_neighborhood_slope(w, n))
    _emit("surgery binding-slope", result, result, as_json)


@surgery_app.command("menke", context_settings=_CONTEXT)
def surgery_menke(
    s_minus: SlopeArg,
    s_zero: SlopeArg,
    s_plus: SlopeArg,
    as_json: JsonOpt = False,
) -> None:
    """Candidate splitting slopes of a mixed torus."""
    with _domain_errors():
        torus = MixedTorus(s_minus, s_zero, s_plus)
        result = [str(s) for s in surgery.menke_candidates(torus)]
    _emit("surgery menke", result, " ".join(result), as_json)


@surgery_app.command("lens", context_settings=_CONTEXT)
def surgery_lens(r: RationalArg, as_json: JsonOpt = False) -> None:
    """Lens space split off by a negative mixed surgery."""
    with _domain_errors():
        lens = surgery.lens_from_mixed_surgery(r)
    sphere = surgery.is_three_sphere(lens)
    text = f"{lens}" + (" (three-sphere)" if sphere else "")
    _emit("surgery lens", {"slope": str(lens), "three_sphere": sphere}, text, as_json)


@surgery_app.command("seifert", context_settings=_CONTEXT)
def surgery_seifert(w: WordArg, r: RationalArg, as_json: JsonOpt = False) -> None:
    """Seifert-framed coefficient of a negative mixed surgery."""
    with _domain_errors():
        result = str(surgery.seifert_coefficient(w, r))
    _emit("surgery seifert", result, result, as_json)


# fill


@fill_app.command("rset", context_settings=_CONTEXT)
def fill_rset(s: SlopeArg, r: SlopeArg, as_json: JsonOpt = False) -> None:
    """Whether R lies in R(S)."""
    with _domain_errors():
        result = fillability.r_set_contains(s, r)
    _emit("fill rset", result, str(result).lower(), as_json)


@fill_app.command("mixed", context_settings=_CONTEXT)
def fill_mixed(
    r: RationalArg,
    lower: LevelOpt = "tight",
    upper: LevelOpt = "stein",
    overtwisted: Annotated[
        bool, typer.Option(help="The ambient structure is overtwisted.")
    ] = False,
    as_json: JsonOpt = False,
) -> None:
    """Contact (r)-surgery on a mixed knot in a manifold with the given bounds."""
    with _domain_errors():
        bounds = _level(lower), _level(upper)
        if overtwisted:
            base = FillabilityStatus.overtwisted()
        else:
            base = FillabilityStatus.tight(*bounds)
        status = fillability.mixed_surgery_verdict(base, r)
    _emit("fill mixed", status.to_dict(), _status_text(status), as_json)


@fill_app.command("torsion", context_settings=_CONTEXT)
def fill_torsion(
    k: Annotated[int, typer.Argument()],
    r: RationalArg,
    as_json: JsonOpt = False,
) -> None:
    """Mixed surgery in a manifold with planar k-torsion."""
    with _domain_errors():
        status = fillability.planar_torsion_verdict(k, r)
    _emit("fill torsion", status.to_dict(), _status_text(status), as_json)


@fill_app.command("fibered", context_settings=_CONTEXT)
def fill_fibered(
    w: WordArg,
    r: SlopeArg,
    ambient: Annotated[Ambient, typer.Option()] = Ambient.QHS,
    as_json: JsonOpt = False,
) -> None:
    """Existence of a fillable, non-Liouville structure on Y_r(K)."""
    with _domain_errors():
        verdict = fillability.fibered_surgery_verdict(w, r, ambient)
    text = str(verdict)
    if verdict.status is not None:
        text = "\n".join([text] + _status_text(verdict.status).splitlines()[1:])
    _emit("fill fibered", verdict.to_dict(), text, as_json)


@fill_app.command("rotative", context_settings=_CONTEXT)
def fill_rotative(
    n: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Status of the n-th rotative structure on a torus bundle."""
    with _domain_errors():
        status = fillability.rotative_bundle_status(n)
    _emit("fill rotative", status.to_dict(), _status_text(status), as_json)


# brieskorn


@brieskorn_app.command("list", context_settings=_CONTEXT)
def brieskorn_list(
    family: Annotated[Family, typer.Argument()],
    n: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """All tight structures of one Brieskorn sphere."""
    with _domain_errors():
        records = brieskorn.to_records(family, n)
        text = "\n".join(
            _cell_text(cell) for cell in brieskorn.enumerate_cells(family, n)
        )
    _emit("brieskorn list", records, text, as_json)


@brieskorn_app.command("status", context_settings=_CONTEXT)
def brieskorn_status(
    family: Annotated[Family, typer.Argument()],
    n: Annotated[int, typer.Argument()],
    i: Annotated[int, typer.Argument()],
    j: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Fillability status of one cell."""
    with _domain_errors():
        cell = BrieskornCell(family, n, i, j)
    _emit("brieskorn status", _cell_record(cell), _cell_text(cell), as_json)


@brieskorn_app.command("triangle", context_settings=_CONTEXT)
def brieskorn_triangle(
    family: Annotated[Family, typer.Argument()],
    n: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Render the triangle of one Brieskorn sphere."""
    with _domain_errors():
        text = brieskorn.render_triangle(family, n)
    _emit("brieskorn triangle", text, text, as_json)


@brieskorn_app.command("lr", context_settings=_CONTEXT)
def brieskorn_lr(
    family: Annotated[Family, typer.Argument()],
    n: Annotated[int, typer.Argument()],
    i: Annotated[int, typer.Argument()],
    j: Annotated[int, typer.Argument()],
    as_json: JsonOpt = False,
) -> None:
    """Stabilization counts (l, r) of the surgery knot of one cell."""
    with _domain_errors():
        params = brieskorn.lr_params(BrieskornCell(family, n, i, j))
    result = {"l": params.l, "r": params.r, "mixed": params.mixed}
    text = f"l = {params.l}, r = {params.r}, mixed = {params.mixed}"
    _emit("brieskorn lr", result, text, as_json)


def run(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code.

    Parameters
    ----------
    argv : list of str or None, default=None
        Command-line arguments without the program name. If None,
        sys.argv is used.

    Returns
    -------
    int
        0 on success, 2 on malformed input, 3 on domain errors
    """
    try:
        app(args=argv, prog_name="contact-atlas")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
