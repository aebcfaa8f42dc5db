"""The ``starfact`` command group.

Each ``cmd_*`` function takes a :class:`RunConfig` and returns an ordered
payload dictionary; the click wrappers format it on stdout and map the outcome
to the exit status. Keys starting with an underscore never reach JSON or text
output (``_dot`` carries the DOT rendering for ``--format dot``).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

# Third-party imports
import click

# Internal imports
from .output import get_formatter
from .rich_formatter import CLIFormatter
from ..characterization.checks import characterize, is_minimal_transitive, minimal_transitive_length
from ..characterization.oracle import DEFAULT_CANDIDATE_GUARD, brute_force_enumerate
from ..core.factorization import evaluate, format_factors, parse_factors
from ..core.permutation import CycleDecomposition, Permutation, cycle_decomposition, format_cycles, parse_cycles
from ..counting.cycle_type import CycleType, cycle_type_of, parse_lengths
from ..counting.formulas import count_minimal, count_minimal_transitive, count_words_closed_form
from ..trees.dot import to_dot
from ..trees.encoding import tree_to_word, word_to_tree
from ..trees.model import validate_tree
from ..utils.errors import GuardExceededError, ParseError, StarfactError
from ..utils.logger import get_logger, setup_logger
from ..utils.session_logger import CommandSessionLogger
from ..verification.base_check import CheckContext
from ..verification.check_registry import CheckRegistry
from ..words.bijection import (
    format_anchors,
    format_word,
    infer_decomposition,
    parse_anchors,
    parse_word,
    phi,
    phi_inverse,
)
from ..words.enumeration import DEFAULT_WORD_GUARD, enumerate_factorizations
from ..words.sampler import FactorizationSampler

COMMANDS = ("count", "enumerate", "verify", "map", "invert", "tree", "sample", "selftest")
DOT_COMMANDS = ("map", "invert", "tree")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_GUARD = 3

logger = get_logger("starfact.cli")


@dataclass
class RunConfig:
    """Everything one command invocation needs, after config and flags are merged."""

    command: str
    perm_text: Optional[str] = None
    n: Optional[int] = None
    lengths_text: Optional[str] = None
    word_text: Optional[str] = None
    anchors_text: Optional[str] = None
    factors_text: Optional[str] = None
    guard: Optional[int] = None
    candidate_guard: int = DEFAULT_CANDIDATE_GUARD
    word_guard: int = DEFAULT_WORD_GUARD
    prune: bool = True
    seed: int = 0
    output_format: str = "json"
    method: str = "words"
    n_max: int = 5
    sample_draws: int = 100_000
    fault: bool = False
    checks: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise click.UsageError(f"Unknown command {self.command!r}")
        for name in ("guard", "candidate_guard", "word_guard"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise click.UsageError(f"{name} must be positive, got {value}")
        if self.output_format == "dot" and self.command not in DOT_COMMANDS:
            raise click.UsageError(f"--format dot is only available for {', '.join(DOT_COMMANDS)}")

    @property
    def search_guard(self) -> int:
        """Candidate budget for exhaustive search; ``--guard`` wins over config."""
        return self.guard or self.candidate_guard

    @property
    def enumeration_guard(self) -> int:
        """Budget for word-based enumeration and sampling; ``--guard`` wins over config."""
        return self.guard or self.word_guard


# ---------------------------------------------------------------------------
# Input resolution
# ---------------------------------------------------------------------------

def _require(value: Optional[str], option: str, command: str) -> str:
    if value is None:
        raise click.UsageError(f"{command} needs {option}")
    return value


def resolve_permutation(cfg: RunConfig) -> Permutation:
    """The target permutation from ``--perm``/``--n`` or, failing that, ``--lengths``."""
    if cfg.perm_text is not None:
        return parse_cycles(cfg.perm_text, cfg.n)
    if cfg.lengths_text is not None:
        return parse_lengths(cfg.lengths_text).representative()
    if cfg.n is not None:
        return parse_cycles("", cfg.n)
    raise click.UsageError(f"{cfg.command} needs --perm (with optional --n) or --lengths")


def resolve_decomposition(cfg: RunConfig, letters: Tuple[int, ...]) -> CycleDecomposition:
    """Cycles for word-based commands; inferred from the word when no permutation is given."""
    if cfg.perm_text is None and cfg.lengths_text is None and cfg.n is None:
        return infer_decomposition(letters)
    return cycle_decomposition(resolve_permutation(cfg))


def _shape(decomp: CycleDecomposition) -> Dict[str, Any]:
    return {"n": decomp.n, "m": decomp.m, "lengths": list(decomp.lengths)}


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_count(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    """Closed-form counts, plus a brute-force count when the candidate guard allows it."""
    p = resolve_permutation(cfg)
    ct: CycleType = cycle_type_of(p)
    payload: Dict[str, Any] = {
        "n": ct.n,
        "m": ct.m,
        "lengths": list(ct.lengths),
        "count_transitive": count_minimal_transitive(ct),
        "count_minimal": count_minimal(ct),
        "count_words": count_words_closed_form(ct),
    }
    try:
        found = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=cfg.search_guard, prune=cfg.prune)
    except GuardExceededError as e:
        logger.debug(f"brute force skipped for {format_cycles(p)}: {e}")
        if formatter:
            formatter.print_warning(f"brute force skipped: guard exceeded ({e.bound} > {e.guard})")
        payload["count_brute"] = None
        payload["_guard_skip"] = ("brute force count", e.bound, e.guard)
        payload["ok"] = True
        return payload
    payload["count_brute"] = len(found)
    payload["ok"] = len(found) == payload["count_transitive"]
    return payload


def cmd_enumerate(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    p = resolve_permutation(cfg)
    decomp = cycle_decomposition(p)
    if cfg.method == "brute":
        found = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=cfg.search_guard, prune=cfg.prune)
    else:
        found = enumerate_factorizations(decomp, guard=cfg.enumeration_guard)
    expected = count_minimal_transitive(cycle_type_of(p))
    payload = _shape(decomp)
    payload["method"] = cfg.method
    payload["count"] = len(found)
    payload["factorizations"] = [{"index": i, "factors": format_factors(f)} for i, f in enumerate(found)]
    payload["ok"] = len(found) == expected
    return payload


def cmd_verify(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    """Characterization report next to the direct definition; both verdicts must agree."""
    p = resolve_permutation(cfg)
    f = parse_factors(_require(cfg.factors_text, "--factors", cfg.command), p.n)
    report = characterize(f, p)
    direct = is_minimal_transitive(f, p)
    payload = _shape(cycle_decomposition(p))
    payload["factors"] = format_factors(f)
    payload["product"] = format_cycles(evaluate(f))
    payload.update(report.as_dict())
    payload["direct_definition"] = direct
    payload["agree"] = report.overall == direct
    payload["ok"] = report.overall and direct
    if report.overall != direct:
        logger.error(f"characterization and definition disagree on {format_factors(f)} for {format_cycles(p)}")
    return payload


def cmd_map(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    p = resolve_permutation(cfg)
    f = parse_factors(_require(cfg.factors_text, "--factors", cfg.command), p.n)
    decomp = cycle_decomposition(p)
    word, anchors = phi(f, p)
    tree = word_to_tree(word, decomp)
    payload = _shape(decomp)
    payload["factors"] = format_factors(f)
    payload["word"] = format_word(word)
    payload["anchors"] = format_anchors(anchors)
    payload["tree_paren"] = tree.to_paren()
    payload["ok"] = phi_inverse(word, anchors, decomp) == f
    payload["_dot"] = to_dot(tree)
    return payload


def cmd_invert(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    word = parse_word(_require(cfg.word_text, "--word", cfg.command))
    anchors = parse_anchors(cfg.anchors_text or "")
    decomp = resolve_decomposition(cfg, tuple(word))
    f = phi_inverse(word, anchors, decomp)
    tree = word_to_tree(word, decomp)
    payload = _shape(decomp)
    payload["word"] = format_word(word)
    payload["anchors"] = format_anchors(anchors)
    payload["factors"] = format_factors(f)
    payload["tree_paren"] = tree.to_paren()
    payload["ok"] = phi(f, decomp.to_permutation()) == (word, anchors)
    payload["_dot"] = to_dot(tree)
    return payload


def cmd_tree(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    word = parse_word(_require(cfg.word_text, "--word", cfg.command))
    decomp = resolve_decomposition(cfg, tuple(word))
    tree = word_to_tree(word, decomp)
    payload = _shape(decomp)
    payload["word"] = format_word(word)
    payload["tree_paren"] = tree.to_paren()
    payload["white_count"] = tree.white_count
    payload["black_count"] = tree.black_count
    payload["ok"] = validate_tree(tree, decomp) and tree_to_word(tree) == word
    payload["_dot"] = to_dot(tree)
    return payload


def cmd_sample(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    p = resolve_permutation(cfg)
    try:
        sampler = FactorizationSampler(p, seed=cfg.seed, guard=cfg.enumeration_guard)
    except GuardExceededError:
        if formatter:
            formatter.print_info("The word class is too large to sample; use `starfact count` for its size")
        raise
    f = sampler.draw()
    payload = _shape(sampler.decomp)
    payload["seed"] = cfg.seed
    payload["factors"] = format_factors(f)
    payload["ok"] = is_minimal_transitive(f, p)
    return payload


def cmd_selftest(cfg: RunConfig, formatter: Optional[CLIFormatter] = None) -> Dict[str, Any]:
    """Run the acceptance checks; ``checks`` restricts the run to the named ones."""
    registry = CheckRegistry()
    context = CheckContext(
        n_max=cfg.n_max,
        guard=cfg.search_guard,
        sample_draws=cfg.sample_draws,
        seed=cfg.seed,
        fault=cfg.fault,
    )
    names = list(cfg.checks) or registry.get_check_names()
    results = []
    for name in names:
        if formatter:
            with formatter.create_loading_indicator(f"Running {name}..."):
                results.append(registry.run_check(name, context))
        else:
            results.append(registry.run_check(name, context))
    if formatter:
        formatter.print_check_summary(results, registry.get_check_descriptions())
    failed = [r.name for r in results if not r.passed]
    return {
        "n_max": cfg.n_max,
        "fault": cfg.fault,
        "checks": [r.as_dict() for r in results],
        "passed": len(results) - len(failed),
        "failed": failed,
        "ok": not failed,
    }


HANDLERS: Dict[str, Callable[..., Dict[str, Any]]] = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "map": cmd_map,
    "invert": cmd_invert,
    "tree": cmd_tree,
    "sample": cmd_sample,
    "selftest": cmd_selftest,
}


# ---------------------------------------------------------------------------
# click wiring
# ---------------------------------------------------------------------------

def exit_code_for(error: Exception) -> int:
    if isinstance(error, ParseError):
        return EXIT_PARSE
    if isinstance(error, GuardExceededError):
        return EXIT_GUARD
    return EXIT_VALIDATION


def run_command(ctx: click.Context, cfg: RunConfig) -> None:
    """Execute one command, print its output and exit with the mapped status."""
    state = ctx.obj
    session: CommandSessionLogger = state["session"]
    formatter: CLIFormatter = state["formatter"]
    session.log_command_start(cfg.command, cfg.perm_text)

    try:
        payload = HANDLERS[cfg.command](cfg, formatter)
        output = get_formatter(cfg.output_format).format(payload)
    except StarfactError as e:
        code = exit_code_for(e)
        position = getattr(e, "position", None)
        formatter.print_error(str(e), f"at character {position}" if position is not None else None)
        session.log_command_error(str(e), code)
        ctx.exit(code)

    click.echo(output)
    for check in payload.get("checks", []):
        session.log_check(check["name"], check["passed"], check["details"])
    if "_guard_skip" in payload:
        session.log_guard_skip(*payload["_guard_skip"])
    if payload.get("ok", True):
        session.log_command_success(f"ok {output}")
        ctx.exit(EXIT_OK)
    session.log_command_error("validation failed", EXIT_VALIDATION)
    ctx.exit(EXIT_VALIDATION)


def _build_config(ctx: click.Context, command: str, **options) -> RunConfig:
    settings = ctx.obj["config"]
    search = settings.get("search", {})
    sampling = settings.get("sampling", {})
    selftest = settings.get("selftest", {})
    seed = options.pop("seed", None)
    n_max = options.pop("n_max", None)
    draws = options.pop("sample_draws", None)
    return RunConfig(
        command=command,
        candidate_guard=int(search.get("candidate_guard", DEFAULT_CANDIDATE_GUARD)),
        word_guard=int(search.get("word_guard", DEFAULT_WORD_GUARD)),
        prune=bool(search.get("prune", True)),
        seed=seed if seed is not None else int(sampling.get("seed", 0)),
        n_max=n_max if n_max is not None else int(selftest.get("n_max", 5)),
        sample_draws=draws if draws is not None else int(selftest.get("sample_draws", 100_000)),
        **options,
    )


def _options(*decorators):
    def apply(func):
        for decorator in reversed(decorators):
            func = decorator(func)
        return func
    return apply


perm_options = _options(
    click.option("--perm", "perm_text", help='Permutation in cycle notation, e.g. "(1 8 2)(4 5 10 7)".'),
    click.option("--n", "n", type=int, help="Degree; defaults to the largest symbol in --perm."),
    click.option("--lengths", "lengths_text", help='Cycle type instead of a permutation, e.g. "3,1,4,1,2".'),
)
guard_option = click.option("--guard", type=int, help="Override the search budget from config.yaml.")


def format_option(choices: List[str]):
    return click.option("--format", "output_format", type=click.Choice(choices), default="json", show_default=True)


@click.group()
@click.option("--verbose", is_flag=True, help="Echo session logs to stderr.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool):
    """Minimal transitive star factorizations: counts, bijections, trees and sampling."""
    # Deferred: main imports this module.
    from ..main import load_config

    config = load_config()
    log_settings = config.get("logging", {})
    log_file = log_settings.get("file", "./logs/starfact.log")
    setup_logger(level=getattr(logging, str(log_settings.get("level", "INFO")).upper()), log_file=log_file)
    ctx.obj = {
        "config": config,
        "session": CommandSessionLogger(log_file, verbose=verbose or bool(log_settings.get("verbose", False))),
        "formatter": CLIFormatter(),
    }


@cli.command()
@perm_options
@guard_option
@format_option(["json", "text"])
@click.pass_context
def count(ctx, **options):
    """Exact counts for a permutation or cycle type."""
    run_command(ctx, _build_config(ctx, "count", **options))


@cli.command(name="enumerate")
@perm_options
@guard_option
@click.option("--method", type=click.Choice(["words", "brute"]), default="words", show_default=True)
@format_option(["json", "text"])
@click.pass_context
def enumerate_command(ctx, **options):
    """List every minimal transitive star factorization."""
    run_command(ctx, _build_config(ctx, "enumerate", **options))


@cli.command()
@perm_options
@click.option("--factors", "factors_text", required=True, help='Non-1 symbols of the factors, e.g. "9 11 9 2".')
@format_option(["json", "text"])
@click.pass_context
def verify(ctx, **options):
    """Check a factorization against the structural characterization."""
    run_command(ctx, _build_config(ctx, "verify", **options))


@cli.command(name="map")
@perm_options
@click.option("--factors", "factors_text", required=True, help="Non-1 symbols of the factors.")
@format_option(["json", "text", "dot"])
@click.pass_context
def map_command(ctx, **options):
    """Factorization to (word, anchors, tree)."""
    run_command(ctx, _build_config(ctx, "map", **options))


@cli.command()
@perm_options
@click.option("--word", "word_text", required=True, help='Space-separated letters, e.g. "5 5 5 1 3 3".')
@click.option("--anchors", "anchors_text", default="", help='Comma-separated anchors k_2..k_m, e.g. "3,10,6,9".')
@format_option(["json", "text", "dot"])
@click.pass_context
def invert(ctx, **options):
    """(word, anchors) back to the factorization."""
    run_command(ctx, _build_config(ctx, "invert", **options))


@cli.command()
@perm_options
@click.option("--word", "word_text", required=True, help="Space-separated letters.")
@format_option(["json", "text", "dot"])
@click.pass_context
def tree(ctx, **options):
    """Word to its bicoloured plane rooted tree."""
    run_command(ctx, _build_config(ctx, "tree", **options))


@cli.command()
@perm_options
@guard_option
@click.option("--seed", type=int, help="Random seed; defaults to sampling.seed in config.yaml.")
@format_option(["json", "text"])
@click.pass_context
def sample(ctx, **options):
    """Draw one factorization uniformly at random."""
    run_command(ctx, _build_config(ctx, "sample", **options))


@cli.command()
@guard_option
@click.option("--nmax", "n_max", type=int, help="Largest degree swept by the exhaustive checks.")
@click.option("--draws", "sample_draws", type=int, help="Draws for the sampling uniformity check.")
@click.option("--seed", type=int, help="Seed for the sampling uniformity check.")
@click.option("--check", "checks", multiple=True, help="Run only the named check (repeatable).")
@click.option("--fault", is_flag=True, hidden=True, help="Perturb one formula constant (negative control).")
@format_option(["json", "text"])
@click.pass_context
def selftest(ctx, **options):
    """Run the acceptance suite; exits 1 on any failed check."""
    options["checks"] = tuple(options["checks"])
    run_command(ctx, _build_config(ctx, "selftest", **options))
