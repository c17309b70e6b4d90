"""
Main entry point for tracklab.
Provides the command-line interface over the library operations.
"""

import functools
import sys
from typing import Optional

import click
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .analyzer.corpus_runner import CorpusRunner
from .builder.maximal import build_maximal, seed_from_pattern, seed_vertex_links
from .builder.oracle import certify_maximal
from .config.settings import settings
from .curves.classify import classify_track
from .curves.curve_system import curve_system_from_file
from .curves.tracks import extract_tracks, realize
from .dual_tree.theorem import build_dual_tree, check_tree, region_table
from .errors import TrackLabError, UnknownEdge
from .export.dot_exporter import generate_dot
from .export.report_exporter import ReportExporter
from .models.schemas import MaximalReport, TrackSummary
from .patterns.coords import validate_pattern
from .rewrite.returning_arcs import normalize as normalize_system
from .rewrite.surgery import surgery as surgery_system, surgery_case
from .surface.generators import GeneratorSpec, generate
from .utils.file_utils import FileUtils
from .utils.logger import enable_logging, get_logger

console = Console(stderr=True)
logger = get_logger(__name__)


def library_errors(func):
    """Report library errors in red and exit with status 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except TrackLabError as e:
            console.print(f"[red]{type(e).__name__}: {e}[/red]")
            logger.error(f"{type(e).__name__}: {e}")
            sys.exit(1)
    return wrapper


def emit(ctx: click.Context, report, output: Optional[str]) -> None:
    """Write report to output, or print it on stdout."""
    text = ReportExporter(ctx.obj['format']).write(report, output)
    if not output:
        click.echo(text, nl=False)


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--format', '-f', 'fmt', default='json', type=click.Choice(['json', 'yaml']), help='Report format')
@click.pass_context
def cli(ctx: click.Context, verbose: bool, fmt: str):
    """tracklab - patterns, tracks and dual trees on triangulated 2-spheres"""
    ctx.ensure_object(dict)
    ctx.obj['format'] = fmt
    if verbose:
        enable_logging()


@cli.command()
@click.option('--kind', '-k', required=True, help='tetrahedron, octahedron, icosahedron, bipyramid:N or random:N')
@click.option('--seed', '-s', default=0, show_default=True, help='Seed for random triangulations')
@click.option('--output', '-o', default=None, help='Triangulation file to write')
@library_errors
def gen(kind: str, seed: int, output: Optional[str]):
    """Generate a sphere triangulation."""
    try:
        spec = GeneratorSpec.parse(kind)
    except TrackLabError as e:
        raise click.BadParameter(str(e), param_hint='--kind')
    tri = generate(spec, seed)
    data = FileUtils.triangulation_file(tri)
    if output:
        FileUtils.save_model(data, output)
        console.print(f"[green]{spec.label()}[/green]: v={tri.vertex_count} e={tri.edge_count} "
                      f"f={tri.face_count} -> {output}")
    else:
        click.echo(data.model_dump_json(indent=2))


@cli.command()
@click.argument('triangulation', type=click.Path())
@click.argument('pattern', required=False, type=click.Path())
@click.option('--output', '-o', default=None, help='Validation report file')
@click.pass_context
@library_errors
def validate(ctx: click.Context, triangulation: str, pattern: Optional[str], output: Optional[str]):
    """Check a triangulation, and optionally a pattern's matching conditions."""
    tri = FileUtils.load_triangulation(triangulation)
    table = Table(title="Triangulation")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    for name, value in (("Vertices", tri.vertex_count), ("Edges", tri.edge_count),
                        ("Faces", tri.face_count), ("Euler characteristic", tri.euler_characteristic)):
        table.add_row(name, str(value))
    console.print(table)
    if pattern is None:
        return

    report = validate_pattern(tri, FileUtils.load_pattern(tri, pattern))
    emit(ctx, report, output)
    if not report.valid:
        for violation in report.violations:
            console.print(f"[red]face {violation.face} {violation.vertices}: {', '.join(violation.reasons)}[/red]")
        sys.exit(1)


@cli.command()
@click.argument('triangulation', type=click.Path())
@click.argument('pattern', type=click.Path())
@click.option('--output', '-o', default=None, help='Track list file')
@click.pass_context
@library_errors
def tracks(ctx: click.Context, triangulation: str, pattern: str, output: Optional[str]):
    """Realize a pattern and list its tracks."""
    tri = FileUtils.load_triangulation(triangulation)
    p = FileUtils.load_pattern(tri, pattern)
    summaries = []
    for track in extract_tracks(realize(tri, p)):
        kind = classify_track(tri, track)
        summaries.append(TrackSummary(n=kind.n, kind=kind.kind, weights=track.weights.to_labels()))

    table = Table(title=f"{len(summaries)} track(s)")
    table.add_column("#", style="cyan")
    table.add_column("n", style="green")
    table.add_column("kind")
    table.add_column("weights")
    for i, s in enumerate(summaries):
        table.add_row(str(i), str(s.n), s.kind.value if s.kind else "-",
                      " ".join(f"{k}:{w}" for k, w in s.weights.items()))
    console.print(table)
    emit(ctx, [ReportExporter.to_data(s) for s in summaries], output)


@cli.command()
@click.argument('curves', type=click.Path())
@click.option('--output', '-o', default=None, help='Output file for the normalized system and report')
@click.pass_context
@library_errors
def normalize(ctx: click.Context, curves: str, output: Optional[str]):
    """Remove returning arcs until the curve system is normal."""
    cs = curve_system_from_file(FileUtils.load_curve_file(curves))
    result, report = normalize_system(cs)
    console.print(f"{report.steps} step(s), {report.crossings_removed} crossing(s) removed, "
                  f"{report.annihilated_curves} curve(s) annihilated")
    emit(ctx, {'report': ReportExporter.to_data(report), 'system': ReportExporter.to_data(result.to_file())}, output)


@cli.command()
@click.argument('curves', type=click.Path())
@click.option('--edge', required=True, help='Edge label u-v')
@click.option('--pos', required=True, type=int, help='Position of the first crossing of the adjacent pair')
@click.option('--output', '-o', default=None, help='Output file for the new system')
@click.pass_context
@library_errors
def surgery(ctx: click.Context, curves: str, edge: str, pos: int, output: Optional[str]):
    """Surgery at crossings pos and pos+1 of an edge."""
    cs = curve_system_from_file(FileUtils.load_curve_file(curves))
    try:
        eid = cs.triangulation.parse_edge(edge)
    except UnknownEdge as e:
        raise click.BadParameter(str(e), param_hint='--edge')
    case = surgery_case(cs, eid, pos)
    result, same_track = surgery_system(cs, eid, pos)
    console.print(f"{'same' if same_track else 'distinct'}-track surgery: "
                  f"{len(cs.curves)} -> {len(result.curves)} curve(s), case {case.value}")
    emit(ctx, {
        'same_track': same_track,
        'case': case.value,
        'curves_before': len(cs.curves),
        'curves_after': len(result.curves),
        'system': ReportExporter.to_data(result.to_file()),
    }, output)


@cli.command()
@click.argument('triangulation', type=click.Path())
@click.option('--seed-pattern', default=None, type=click.Path(), help='Start from this pattern instead of vertex links')
@click.option('--dot', default=None, help='Write D_P of the result as DOT')
@click.option('--certify', default=0, type=int, help='Also check no oracle track of this weight bound extends it')
@click.option('--output', '-o', default=None, help='Report file')
@click.pass_context
@library_errors
def maximal(ctx: click.Context, triangulation: str, seed_pattern: Optional[str], dot: Optional[str],
            certify: int, output: Optional[str]):
    """Complete a pattern to a maximal set of non-parallel tracks."""
    tri = FileUtils.load_triangulation(triangulation)
    if seed_pattern:
        seed = seed_from_pattern(tri, FileUtils.load_pattern(tri, seed_pattern))
    else:
        seed = seed_vertex_links(tri)

    with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"),
                  console=console, transient=True) as progress:
        task = progress.add_task("Building maximal pattern...", total=None)
        state = build_maximal(tri, seed)
        tree = build_dual_tree(tri, state.combined)
        theorem = check_tree(tri, tree)
        extensions = certify_maximal(state, certify) if certify else []
        progress.update(task, description="Done")

    report = MaximalReport(
        tracks=state.track_labels(),
        e_P=state.size,
        v=tri.vertex_count,
        f=tri.face_count,
        trace=list(state.trace),
        theorem=theorem,
    )
    if dot:
        generate_dot(tree, dot)
    console.print(f"e_P = [bold]{state.size}[/bold] (v={tri.vertex_count}, f={tri.face_count}), "
                  f"theorem checks {'[green]passed' if theorem.passed else '[red]failed'}[/]")
    emit(ctx, report, output)
    if extensions:
        console.print(f"[red]{len(extensions)} oracle track(s) of bound {certify} still extend the pattern[/red]")
    if not theorem.passed or extensions:
        sys.exit(1)


@cli.command()
@click.argument('triangulation', type=click.Path())
@click.argument('pattern', type=click.Path())
@click.option('--output', '-o', default=None, help='Theorem report file')
@click.pass_context
@library_errors
def verify(ctx: click.Context, triangulation: str, pattern: str, output: Optional[str]):
    """Check degrees, region shapes and counts of a pattern's D_P."""
    tri = FileUtils.load_triangulation(triangulation)
    tree = build_dual_tree(tri, FileUtils.load_pattern(tri, pattern))
    report = check_tree(tri, tree)
    emit(ctx, report, output)
    if report.passed:
        console.print(f"[green]All checks passed[/green], e_P = {report.e_p}")
    else:
        for failure in report.failures:
            console.print(f"[red]{failure}[/red]")
        console.print(f"witness region(s): {report.witness_regions}")
        sys.exit(1)


@cli.command()
@click.argument('triangulation', type=click.Path())
@click.argument('pattern', type=click.Path())
@click.option('--dot', default=None, help='Write D_P as DOT')
@click.option('--output', '-o', default=None, help='Region table file')
@click.pass_context
@library_errors
def dptree(ctx: click.Context, triangulation: str, pattern: str, dot: Optional[str], output: Optional[str]):
    """Show the regions and tracks of D_P."""
    tri = FileUtils.load_triangulation(triangulation)
    tree = build_dual_tree(tri, FileUtils.load_pattern(tri, pattern))

    table = Table(title=f"D_P: {tree.v_p} vertices, {tree.e_p} edges")
    for column in ("region", "degree", "vertices", "chi", "shape"):
        table.add_column(column)
    for row in region_table(tree):
        table.add_row(*(str(x) for x in row))
    console.print(table)

    if dot:
        generate_dot(tree, dot)
    emit(ctx, {
        'regions': [ReportExporter.to_data(tree.graph.nodes[n]['profile']) for n in sorted(tree.graph.nodes)],
        'edges': [{'track': key, 'regions': [r1, r2], 'n': data['n']}
                  for r1, r2, key, data in sorted(tree.graph.edges(keys=True, data=True), key=lambda e: e[2])],
    }, output)


@cli.command()
@click.option('--trials', default=100, show_default=True, type=click.IntRange(min=0))
@click.option('--min-v', default=5, show_default=True, type=click.IntRange(min=4))
@click.option('--max-v', default=30, show_default=True, type=int)
@click.option('--seed', default=0, show_default=True, type=int, help='Master seed')
@click.option('--jobs', default=None, type=click.IntRange(min=1), help='Worker processes (default TRACKLAB_CORPUS_JOBS)')
@click.option('--output', '-o', default=None, help='Corpus report file')
@click.pass_context
@library_errors
def corpus(ctx: click.Context, trials: int, min_v: int, max_v: int, seed: int, jobs: Optional[int],
           output: Optional[str]):
    """Build and check maximal patterns on random triangulations."""
    if max_v < min_v:
        raise click.BadParameter(f"must be >= --min-v ({min_v}), got {max_v}", param_hint='--max-v')
    runner = CorpusRunner(jobs if jobs is not None else settings.CORPUS_JOBS)
    report = runner.run(trials, min_v, max_v, seed)

    table = Table(title="Corpus Summary")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Trials", str(report.total))
    table.add_row("Passed", str(report.passed))
    table.add_row("Failed", str(report.failed))
    table.add_row("e_P = 2v - 3", str(report.count_law_holds))
    console.print(table)

    emit(ctx, report, output)
    if report.failed:
        sys.exit(1)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
