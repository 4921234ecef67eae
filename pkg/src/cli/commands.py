import logging
import sys
from pathlib import Path
from typing import List, Optional

import click

from arithmetic import (
    MplabError,
    IncompleteFactorization,
    abundancy,
    factorize,
    primes_up_to,
    radical,
    sigma,
)
from cli.output import emit_table, emit_value, format_ratio
from factorial import (
    abc_quality,
    factorial_abundancy_increasing,
    factorial_radical_exponent,
    gap_triples,
    homogeneous_radical_scan,
    multiperfect_factorials,
    parse_coefficients,
    poly_radical_scan,
    shifted_factorial_scan,
)
from ingest import load_database, persist_hits
from repdigit import (
    prime_set_identity,
    rank_of_apparition,
    repunit_abundancy_growth,
    scan_multirepdigit_multiperfect,
    sigma_ratio_chain,
)
from search import MultiperfectSearch
from verification import (
    PROOF,
    STATEMENT,
    chain_divisibility_scan,
    classical_perfect_bounds,
    odd_chain_trials,
    product_bound_trials,
    threshold_gap,
    two_adic_identity_scan,
    verify_database,
)


SEED_DATABASE = Path(__file__).resolve().parents[2] / 'data' / 'seed.mpdb'


class DomainFailure(click.ClickException):
    """Toolkit errors surface as exit status 1; click usage errors keep 2"""

    exit_code = 1


class MplabGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except MplabError as exc:
            raise DomainFailure(str(exc)) from exc


def _as_json() -> bool:
    return click.get_current_context().find_root().obj['json']


def _workers() -> Optional[int]:
    return click.get_current_context().find_root().obj['workers']


def _decimal_integer(text: str) -> int:
    """
    Decimal text of any size; used for every number argument.

    Only malformed text is a usage error. Range checks belong to the
    arithmetic layer, so n <= 0 surfaces as a domain error.
    """
    try:
        return int(text)
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a decimal integer") from None


def _range(text: str):
    try:
        lo, hi = (int(part) for part in text.split(':'))
    except ValueError:
        raise click.BadParameter(f"range must look like LO:HI, got {text!r}") from None
    return lo, hi


@click.group(cls=MplabGroup, context_settings={'help_option_names': ['-h', '--help']})
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Process pool size (default: available cores or MPLAB_WORKERS).')
@click.option('--json', 'as_json', is_flag=True, help='Line-delimited JSON instead of TSV.')
@click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG logging on stderr.')
@click.pass_context
def cli(ctx, workers, as_json, verbose):
    """Multiperfect numbers: sigma(m) = k*m, radical bounds and related scans."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s', force=True)
    ctx.obj = {'workers': workers, 'json': as_json}


@cli.command()
@click.argument('n')
@click.option('--effort', type=float, default=None, help='Seconds before giving up (MPLAB_EFFORT_CAP_SECONDS).')
def factor(n, effort):
    """Canonical factorization n = p1^e1 * ... * pr^er."""
    value = _decimal_integer(n)
    try:
        f = factorize(value, effort_seconds=effort)
    except IncompleteFactorization as exc:
        raise DomainFailure(f"{exc}; known part {exc.partial}, cofactor {exc.cofactor}") from exc
    emit_value('factorization', f.format(), _as_json())


@cli.command('sigma')
@click.argument('n')
def sigma_command(n):
    """Sum of divisors sigma(n), from the product over prime powers."""
    emit_value('sigma', sigma(factorize(_decimal_integer(n))), _as_json())


@cli.command('abundancy')
@click.argument('n')
def abundancy_command(n):
    """Abundancy sigma(n)/n in lowest terms, printed as p/q."""
    emit_value('abundancy', format_ratio(abundancy(factorize(_decimal_integer(n)))), _as_json())


@cli.command()
@click.argument('n')
def rad(n):
    """Radical rad(n), the product of the distinct primes dividing n."""
    emit_value('rad', radical(factorize(_decimal_integer(n))), _as_json())


@cli.command()
@click.option('--limit', required=True, help='Search every m <= LIMIT.')
@click.option('--k', 'k_filter', type=click.IntRange(min=2), default=None, help='Only report sigma(m) = k*m.')
@click.option('--segment-size', type=click.IntRange(min=1), default=None, help='Sieve segment length.')
@click.option('--persist', type=click.Path(dir_okay=False), default=None,
              help='Append new hits to this database file.')
@click.option('--progress', is_flag=True, help='Progress bar on stderr.')
def search(limit, k_filter, segment_size, persist, progress):
    """Exhaustive search for m <= LIMIT with m | sigma(m) and sigma(m)/m >= 2."""
    engine = MultiperfectSearch(_decimal_integer(limit), k_filter, _workers(), segment_size)
    hits = engine.run(progress=progress)
    emit_table(({'m': h.m, 'k': h.k, 'label': h.label} for h in hits), ['m', 'k', 'label'], _as_json())
    if persist:
        written = persist_hits(hits, persist)
        click.echo(f"{written} records appended to {persist}", err=True)


@cli.command('verify-bound')
@click.option('--db', 'db_path', type=click.Path(exists=True, dir_okay=False), default=str(SEED_DATABASE),
              show_default=True, help='Record database.')
@click.option('--min-m', type=click.IntRange(min=1), default=1,
              help='Failures below this m are reported as boundary cases.')
@click.option('--classical', is_flag=True,
              help='For perfect m, check rad(m) < 2m^(17/26), 2m^(2/3), 2m^(9/14) instead.')
def verify_bound(db_path, min_m, classical):
    """
    Radical bounds for sigma(m) = k*m with k = 2^n * t:
    rad(m) < m^((2n+2a+1)/(2n+2a+2)) for even m = 2^a * h, and for odd m
    rad(m) <= m^(1/2) (k odd), < m^(9/14) (k = 2 mod 4), < m^((4n+1)/(4n+4)) (4 | k).
    """
    records = load_database(db_path)
    if classical:
        rows = []
        for record in records:
            if record.k != 2:
                continue
            row = {'m': record.value}
            row.update(classical_perfect_bounds(record))
            rows.append(row)
        emit_table(rows, ['m', '17/26', '2/3', '9/14', 'sqrt_ratio'], _as_json())
        return
    reports = verify_database(records, min_m=min_m)
    emit_table(({'k': r.record.k, 'm': r.record.value, 'beta': f"{r.beta_num}/{r.beta_den}",
                 'rad': r.rad_m, 'verdict': r.verdict} for r in reports),
               ['k', 'm', 'beta', 'rad', 'verdict'], _as_json())


@cli.group('lemma-check', cls=MplabGroup)
def lemma_check():
    """Exhaustive and randomized checks of the lemmas behind the radical bounds."""


def _b_variants(variant: str) -> List[str]:
    return [PROOF, STATEMENT] if variant == 'both' else [variant]


@lemma_check.command()
@click.option('--e-max', type=click.IntRange(1, 5), default=3, show_default=True)
@click.option('--k-max', type=click.IntRange(2, 6), default=4, show_default=True)
@click.option('--margin', type=click.IntRange(min=0), default=200, show_default=True)
@click.option('--variant', type=click.Choice([PROOF, STATEMENT, 'both']), default=PROOF, show_default=True,
              help='B with the trailing 1 (proof) or without it (statement).')
@click.option('--gap', is_flag=True, help='Also list hits at p_y = 3*2^e - 2 and 3*2^e - 1.')
def loopy(e_max, k_max, margin, variant, gap):
    """
    A*p_y - B never divides p_y^2 + p_y + 1 for p_y >= 3*2^e,
    where A = k_1...k_e and B/A = sum_i 1/(k_1...k_i).
    """
    as_json = _as_json()
    columns = ['variant', 'e', 'ks', 'p_y']
    total = 0
    for b in _b_variants(variant):
        found = chain_divisibility_scan(e_max, k_max, margin, variant=b, workers=_workers())
        total += len(found)
        if found:
            emit_table(({'variant': b, 'e': i.e, 'ks': ','.join(map(str, i.ks)), 'p_y': i.p_y}
                        for i in found), columns, as_json)
    if gap:
        gap_rows = []
        for b in _b_variants(variant):
            gap_rows.extend({'variant': b, 'e': i.e, 'ks': ','.join(map(str, i.ks)), 'p_y': i.p_y}
                            for i in threshold_gap(e_max, k_max, variant=b, workers=_workers()))
        emit_table(gap_rows, columns, as_json)
    emit_value('counterexamples', total if as_json else f"{total} counterexamples", as_json)


@lemma_check.command()
@click.option('--p-limit', type=click.IntRange(min=3), default=1000, show_default=True)
@click.option('--e-max', type=click.IntRange(min=1), default=15, show_default=True)
def valuation(p_limit, e_max):
    """nu_2(sigma(p^e)) = nu_2(e+1) + nu_2(p+1) - 1 for odd primes p < P_LIMIT and odd e."""
    failures = two_adic_identity_scan(p_limit, e_max)
    emit_table(({'p': p, 'e': e, 'lhs': lhs, 'rhs': rhs} for p, e, lhs, rhs in failures),
               ['p', 'e', 'lhs', 'rhs'], _as_json())
    click.echo(f"{len(failures)} failures", err=True)


@lemma_check.command()
@click.option('--shape', type=click.Choice(['4', '5']), default='4', show_default=True)
@click.option('--trials', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
def product(shape, trials, seed):
    """
    sigma(m)/m < 4 for m = p1*p2*p3^2*p4^2 (*p5^2), below
    (4/3)(6/5)(31/25)(57/49) (*133/121), with distinct odd primes.
    """
    violations = product_bound_trials(int(shape), trials, seed)
    emit_table(({'primes': ','.join(map(str, ps)), 'abundancy': ratio} for ps, ratio in violations),
               ['primes', 'abundancy'], _as_json())
    click.echo(f"{len(violations)} violations in {trials} trials", err=True)


@lemma_check.command('odd-chain')
@click.option('--trials', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
def odd_chain(trials, seed):
    """
    For odd m with r >= 4 primes: sigma(m)/m < (5/4)^(r-3)(3/2)(7/6)(11/10) < (5/4)^r,
    hence nu_2(k) < r/3.
    """
    violations = odd_chain_trials(trials, seed)
    emit_table(({'m': f.format()} for f in violations), ['m'], _as_json())
    click.echo(f"{len(violations)} violations in {trials} trials", err=True)


@lemma_check.command('prime-set')
@click.option('--k', 'k', type=click.IntRange(1, 6), default=4, show_default=True, help='Use the first K primes.')
@click.option('--height', type=click.IntRange(min=1), default=40, show_default=True)
def prime_set(k, height):
    """
    sum over n built from a prime set P of Omega(n)/n
    = (sum_p 1/(p-1)) * prod_p p/(p-1), truncated with a certified tail.
    """
    result = prime_set_identity(k, height)
    emit_table([{
        'primes': ','.join(map(str, result.primes)),
        'height': result.height,
        'box_sum': float(result.box_sum),
        'closed_form': result.closed_form,
        'tail_bound': float(result.tail_bound),
        'holds': result.holds,
        'log_box_sum': result.log_box_sum,
        'log_closed_form': result.log_closed_form,
    }], ['primes', 'height', 'box_sum', 'closed_form', 'tail_bound', 'holds',
         'log_box_sum', 'log_closed_form'], _as_json())


@cli.command()
@click.option('--base', 'g', type=click.IntRange(min=2), default=10, show_default=True)
@click.option('--d-max', type=click.IntRange(min=1), default=100, show_default=True)
@click.option('--s-max', type=click.IntRange(min=1), default=3, show_default=True)
@click.option('--instrument', type=click.IntRange(min=2), default=None,
              help='Growth of sigma(U_m)/U_m for 2 <= m <= INSTRUMENT.')
@click.option('--chain', is_flag=True, help='sigma(U_{2^s})/U_{2^s} for s <= s-max.')
@click.option('--rank', type=click.IntRange(min=2), default=None,
              help='Rank of apparition z(p) for primes p <= RANK not dividing the base.')
def repdigit(g, d_max, s_max, instrument, chain, rank):
    """
    Multiperfect multirepdigits D * U_{2^s}, U_n = (g^n - 1)/(g - 1); finitely
    many when sigma(m)/m is a power of 2.
    """
    as_json = _as_json()
    if chain:
        result = sigma_ratio_chain(g, s_max)
        emit_table(({'s': s, 'ratio': r} for s, r in enumerate(result.ratios)), ['s', 'ratio'], as_json)
        if result.truncated_at is not None:
            click.echo(f"truncated at s={result.truncated_at}", err=True)
    elif instrument:
        rows = []
        for m in range(2, instrument + 1):
            r = repunit_abundancy_growth(g, m)
            rows.append({'m': m, 'log_ratio': r.log_ratio, 'bound_term': r.bound_term,
                         'quotient': r.quotient, 'within_exp_bound': r.within_exp_bound})
        emit_table(rows, ['m', 'log_ratio', 'bound_term', 'quotient', 'within_exp_bound'], as_json)
    elif rank:
        rows = [{'p': int(p), 'z': rank_of_apparition(int(p), g), 'p_divides_g_minus_1': (g - 1) % int(p) == 0}
                for p in primes_up_to(rank) if g % int(p)]
        emit_table(rows, ['p', 'z', 'p_divides_g_minus_1'], as_json)
    else:
        hits = scan_multirepdigit_multiperfect(g, d_max, s_max)
        emit_table(({'D': h.D, 's': h.s, 'k': h.k, 'power_of_two': h.power_of_two, 'status': h.status}
                    for h in hits), ['D', 's', 'k', 'power_of_two', 'status'], as_json)


@cli.command()
@click.option('--scan', type=click.IntRange(min=1), default=None, help='n <= SCAN with n! k-perfect.')
@click.option('--monotonicity', type=click.IntRange(min=2), default=None,
              help='Whether sigma(n!)/n! strictly increases on 2..N.')
@click.option('--rad-ratio', type=click.IntRange(min=2), default=None,
              help='log rad(n!)/log n! for 2 <= n <= N.')
@click.option('--shifted', type=click.IntRange(min=0), default=None, help='Classify n! + 1 for n <= N.')
def factorial(scan, monotonicity, rad_ratio, shifted):
    """
    n! is perfect only for n = 3; sigma(n!)/n! increases so each k has at most one
    k-perfect factorial; rad(n!) < (n!)^eps; finitely many multiperfect n! + 1.
    """
    as_json = _as_json()
    if scan:
        found = multiperfect_factorials(scan)
        emit_table(({'k': k, 'n': n} for k, ns in sorted(found.items()) for n in ns), ['k', 'n'], as_json)
    elif monotonicity:
        emit_value('increasing', factorial_abundancy_increasing(monotonicity), as_json)
    elif rad_ratio:
        emit_table(({'n': n, 'exponent': factorial_radical_exponent(n)} for n in range(2, rad_ratio + 1)),
                   ['n', 'exponent'], as_json)
    elif shifted is not None:
        rows = shifted_factorial_scan(shifted, workers=_workers())
        emit_table(({'n': r.n, 'status': r.status, 'k': r.k,
                     'factorization': r.factorization.format() if r.factorization else None,
                     'cofactor': r.cofactor if r.cofactor != 1 else None} for r in rows),
                   ['n', 'status', 'k', 'factorization', 'cofactor'], as_json)
    else:
        raise click.UsageError("choose one of --scan, --monotonicity, --rad-ratio, --shifted")


@cli.command('abc-quality')
@click.option('--a', 'a', default=None)
@click.option('--b', 'b', default=None)
@click.option('--poly', default=None, help='Coefficients "c_d,...,c_0" of f(x), with --range.')
@click.option('--form', default=None, help='Coefficients of a homogeneous f(x, y), with --max-abs.')
@click.option('--range', 'x_range', default=None, help='LO:HI for --poly.')
@click.option('--max-abs', type=click.IntRange(1, 50), default=50, show_default=True)
@click.option('--gaps', is_flag=True, help='Triples from gaps between perfect and multiperfect numbers.')
@click.option('--db', 'db_path', type=click.Path(exists=True, dir_okay=False), default=str(SEED_DATABASE))
def abc_quality_command(a, b, poly, form, x_range, max_abs, gaps, db_path):
    """
    Quality log c / log rad(abc) of coprime a + b = c; ABC bounds c by
    C_eps * rad(abc)^(1+eps). --poly and --form compare log rad(f)/log|x|
    with deg f - 1 (deg f - 2 for forms).
    """
    as_json = _as_json()
    if a is not None and b is not None:
        t = abc_quality(_decimal_integer(a), _decimal_integer(b))
        emit_table([{'a': t.a, 'b': t.b, 'c': t.c, 'rad': t.rad_abc, 'quality': t.quality}],
                   ['a', 'b', 'c', 'rad', 'quality'], as_json)
    elif poly is not None:
        if x_range is None:
            raise click.UsageError("--poly needs --range LO:HI")
        lo, hi = _range(x_range)
        rows = poly_radical_scan(parse_coefficients(poly), lo, hi)
        emit_table(({'x': r.point[0], 'value': r.value, 'rad': r.rad, 'exponent': r.exponent,
                     'status': r.status} for r in rows), ['x', 'value', 'rad', 'exponent', 'status'], as_json)
    elif form is not None:
        rows = homogeneous_radical_scan(parse_coefficients(form), max_abs)
        emit_table(({'m': r.point[0], 'n': r.point[1], 'value': r.value, 'rad': r.rad,
                     'exponent': r.exponent, 'status': r.status} for r in rows),
                   ['m', 'n', 'value', 'rad', 'exponent', 'status'], as_json)
    elif gaps:
        records = load_database(db_path)
        perfects = [r.value for r in records if r.k == 2]
        multiperfects = [r.value for r in records if r.k > 2]
        emit_table(({'x': g.x, 'y': g.y, 'gap': g.gap, 'odd_gap': g.odd_gap, 'quality': g.triple.quality}
                    for g in gap_triples(perfects, multiperfects)),
                   ['x', 'y', 'gap', 'odd_gap', 'quality'], as_json)
    else:
        raise click.UsageError("give --a and --b, --poly with --range, --form, or --gaps")


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
def ingest(path):
    """Load and validate a record database: every line must satisfy sigma(m) = k*m."""
    records = load_database(path)
    emit_table(({'k': r.k, 'm': r.value, 'factorization': r.m.format(), 'source': r.source} for r in records),
               ['k', 'm', 'factorization', 'source'], _as_json())


def run(argv: Optional[List[str]] = None) -> int:
    """Exit status: 0 success, 1 domain error, 2 usage error"""
    try:
        cli.main(args=argv, prog_name='mplab')
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 1)
    return 0
