"""Command-line front end: compute families, run verification sweeps, list states.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a budget cap
was hit or q = 0 could not be substituted.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import click

from . import identities as ids
from . import lattice, pipedreams
from .algebra import BETA, Q, P, Poly, RatFunc, X, Y, specialize_q_zero
from .errors import BudgetExceeded, ParseError, QPole
from .symgroup import Perm, all_perms, bruhat_leq

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

# default and maximum n per verification, the maximum lifted by --force
CAPS = {
    "base-case": (3, 4),
    "routes": (3, 4),
    "h-routes": (3, 3),
    "biaxial-routes": (3, 3),
    "cauchy": (3, 3),
    "biaxial-cauchy": (3, 3),
    "branching": (3, 4),
    "interleaving": (4, 5),
    "hudson": (3, 4),
    "dual": (3, 3),
    "pipedream-bijection": (3, 4),
    "hecke": (3, 4),
    "vanishing": (3, 3),
    "emptiness": (3, 3),
    "ybe-row": (3, 3),
    "ybe-col": (3, 3),
    "ybe-rhombus": (3, 3),
    "ybe-sstar-row": (3, 3),
    "drinfeld": (0, 0),
}
CHECKS = tuple(CAPS)


def _parse_perm(text: str, n: int | None) -> Perm:
    w = Perm.parse(text)
    if n is not None and w.n != n:
        raise ParseError(f"permutation {text} has size {w.n}, expected {n}")
    return w


def _serialize(f, fmt: str) -> str:
    f = RatFunc.coerce(f)
    out = f.to_poly() if f.is_poly() else f
    if fmt == "json":
        return json.dumps(out.to_json(), sort_keys=True)
    if fmt == "latex":
        return out.to_latex()
    return out.to_text()


def _fail(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _guard(fn):
    """Map library errors onto the documented exit codes."""
    try:
        return fn()
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    except (BudgetExceeded, QPole) as exc:
        _fail(EXIT_BUDGET, str(exc))


@click.group()
def main():
    """Exact computation of (beta, q)-Grothendieck polynomials and checks of
    the identities relating them."""


@main.command()
@click.option("--family", type=click.Choice(["G", "H", "biaxial"]), default="G", show_default=True)
@click.option("--perm", "perm", default=None, help="w in one-line notation (G and H)")
@click.option("--perm-v", default=None, help="v for the biaxial family")
@click.option("--perm-w", default=None, help="w for the biaxial family")
@click.option("--n", type=int, default=None, help="size check for the permutations")
@click.option("--q0", is_flag=True, help="specialize q = 0")
@click.option("--route", type=click.Choice(list(ids.ROUTES)), default="operators", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "latex"]), default="text", show_default=True)
def compute(family, perm, perm_v, perm_w, n, q0, route, fmt):
    """Print one polynomial."""

    def run():
        if family == "biaxial":
            if perm_v is None or perm_w is None:
                raise ParseError("biaxial needs --perm-v and --perm-w")
            v, w = _parse_perm(perm_v, n), _parse_perm(perm_w, n)
            if v.n != w.n:
                raise ParseError("--perm-v and --perm-w differ in size")
            if route == "pipedreams":
                raise ParseError("the pipe-dream route computes G only")
            f = ids.biaxial(v, w, route)
        else:
            text = perm if perm is not None else perm_w
            if text is None:
                raise ParseError("--perm is required")
            w = _parse_perm(text, n)
            if family == "G":
                if route == "pipedreams":
                    if not q0:
                        raise ParseError("the pipe-dream route needs --q0")
                    f = ids.G_q(w, "pipedreams", q0=True)
                else:
                    f = ids.G_q(w, route)
            else:
                if route == "pipedreams":
                    raise ParseError("the pipe-dream route computes G only")
                f = ids.H_q(w, route)
        if q0:
            f = specialize_q_zero(f)
        return _serialize(f, fmt)

    click.echo(_guard(run))


# ------------------------------------------------------------ verify


def _ybe(name: str, n: int) -> list:
    labels = tuple(range(1, n + 1)) + (lattice.PLUS,)
    fn = {
        "ybe-row": lattice.verify_row_ybe,
        "ybe-col": lattice.verify_col_ybe,
        "ybe-rhombus": lattice.verify_rhombus_ybe,
        "ybe-sstar-row": lattice.verify_sstar_row_ybe,
    }[name]
    res = ids.CheckResult(f"{name} over labels {{{', '.join(lattice.label_str(x) for x in labels)}}}")
    ok, detail = fn(labels)
    res.record(ok, **(detail or {}))
    res.checked = len(labels) ** 6
    return [res]


def _random_polys(n: int, count: int, seed: int = 7) -> list:
    rng = random.Random(seed)
    out = []
    gens = [P(X(i)) for i in range(1, n + 1)] + [P(Y(i)) for i in range(1, n + 1)] + [P(BETA), P(Q)]
    for _ in range(count):
        f = Poly()
        for _ in range(rng.randint(1, 4)):
            m = Poly.const(rng.choice([-3, -2, -1, 1, 2, 3]))
            for _ in range(rng.randint(0, 3)):
                m = m * rng.choice(gens)
            f = f + m
        out.append(f)
    return out


def run_check(name: str, n: int) -> list:
    """Run one named verification at size n, returning CheckResults."""
    S = all_perms(n) if n else []
    if name.startswith("ybe-"):
        return _ybe(name, n)
    if name == "drinfeld":
        res = ids.CheckResult("Drinfeld twist")
        ok, problems = lattice.verify_drinfeld_twist()
        res.record(ok, first=problems[0] if problems else None)
        return [res]
    if name == "base-case":
        return [ids.check_base_case(k) for k in range(1, n + 1)]
    if name == "routes":
        return [ids.check_routes(S)]
    if name == "h-routes":
        return [ids.check_H_routes(S)]
    if name == "biaxial-routes":
        return [ids.check_biaxial_routes(n)]
    if name == "cauchy":
        return [ids.check_cauchy(w) for w in S]
    if name == "biaxial-cauchy":
        return [ids.check_biaxial_cauchy(v, w) for v, w in product(S, S) if bruhat_leq(v, w)]
    if name == "branching":
        return [ids.check_branching(w) for w in S] + [ids.check_branching_set(w) for w in S]
    if name == "interleaving":
        return [ids.check_interleaving(n), ids.check_grassmannian_interleaving(n)]
    if name == "hudson":
        return [ids.check_hudson(w) for w in S] + [ids.check_left_action(w) for w in S]
    if name == "dual":
        out = []
        for w in S:
            out += [ids.check_dual_relation(w), ids.check_H_symmetry(w), ids.check_dual_specialization(w)]
        return out
    if name == "pipedream-bijection":
        return [ids.check_pipedream_bijection(w) for w in S]
    if name == "hecke":
        return [ids.check_hecke(_random_polys(n, 50), n)]
    if name == "vanishing":
        return [ids.check_vanishing(n)]
    if name == "emptiness":
        res = ids.CheckResult(f"no admissible states, n<={n}")
        for k in range(1, n + 1):
            for systems in (lattice.modified_rainbow_systems(k), lattice.swapped_rainbow_systems(k)):
                ok, desc = lattice.no_admissible_states_check(systems)
                res.record(ok, n=k, system=desc)
                res.checked += len(systems) - 1
        return [res]
    raise ValueError(f"unknown check {name!r}")


def _run_named(args):
    name, n = args
    try:
        results = run_check(name, n)
    except (BudgetExceeded, QPole) as exc:
        return name, None, str(exc)
    return name, [(r.summary(), r.ok, r.checked, list(r.notes)) for r in results], None


@main.command()
@click.argument("which", type=click.Choice(list(CHECKS) + ["all"]))
@click.option("--n", type=int, default=None, help="size (defaults per check)")
@click.option("--force", is_flag=True, help="allow n above the default cap")
@click.option("--jobs", type=int, default=1, show_default=True, help="worker processes")
def verify(which, n, force, jobs):
    """Run a verification sweep; exit 0 iff everything passes."""
    names = list(CHECKS) if which == "all" else [which]
    tasks = []
    for name in names:
        default, cap = CAPS[name]
        k = default if n is None else n
        if name == "drinfeld":
            k = 0
        elif k > cap and not force:
            _fail(EXIT_PARSE, f"{name} is capped at n={cap}; pass --force to go further")
        elif k < 1:
            _fail(EXIT_PARSE, "--n must be positive")
        tasks.append((name, k))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_named, tasks))
    else:
        outcomes = [_run_named(t) for t in tasks]
    failed = False
    budget = False
    for (name, k), (_, results, err) in zip(tasks, outcomes):
        if err is not None:
            click.echo(f"ABORT {name}: {err}")
            budget = True
            continue
        ok = all(r[1] for r in results)
        failed |= not ok
        total = sum(r[2] for r in results)
        label = f"{name}" + (f" (n={k})" if k else "")
        click.echo(f"{'PASS' if ok else 'FAIL'} {label}: {total} identities checked")
        for summary, rok, _, notes in results:
            if not rok:
                click.echo("  " + summary.replace("\n", "\n  "))
            for note in notes:
                click.echo(f"  note: {note}")
    if budget:
        sys.exit(EXIT_BUDGET)
    sys.exit(EXIT_FAIL if failed else 0)


# ------------------------------------------------------------ states


@main.command()
@click.option("--system", "system", type=click.Choice(["G", "cauchy", "pipedream", "modified-rainbow"]), default="G",
              show_default=True)
@click.option("--perm-v", default=None, help="top boundary (G) or bottom-half left boundary (cauchy)")
@click.option("--perm-w", default=None, help="left boundary (G) or top-half left boundary (cauchy)")
@click.option("--perm", default=None, help="w for the pipe-dream system S_{1,w^-1}(y,x)")
@click.option("--n", type=int, default=None)
@click.option("--q0", is_flag=True, help="drop the vertices whose weight vanishes at q = 0")
@click.option("--dump", is_flag=True, help="print every state")
@click.option("--count", is_flag=True, help="print only the number of states")
def states(system, perm_v, perm_w, perm, n, q0, dump, count):
    """Enumerate the admissible states of a system."""

    def run():
        if system == "modified-rainbow":
            k = n or 2
            total = sum(lattice.count_states(s) for _, s in lattice.modified_rainbow_systems(k))
            total += sum(lattice.count_states(s) for _, s in lattice.swapped_rainbow_systems(k))
            return [], total, None
        if system == "pipedream":
            if perm is None:
                raise ParseError("--perm is required for the pipe-dream system")
            w = _parse_perm(perm, n)
            sys_ = pipedreams.pd_system(w)
        else:
            if perm_w is None:
                raise ParseError("--perm-w is required")
            w = _parse_perm(perm_w, n)
            v = _parse_perm(perm_v, w.n) if perm_v else Perm.identity(w.n)
            if system == "G":
                sys_ = lattice.build_system_G(v, w, q_zero=q0)
            else:
                sys_ = lattice.build_cauchy_system(v, w, q_zero=True)
        found = lattice.enumerate_states(sys_)
        return found, len(found), sys_

    found, total, sys_ = _guard(run)
    if count or not dump:
        click.echo(str(total))
        if count:
            return
    if dump:
        for k, st in enumerate(found, 1):
            click.echo(f"state {k}")
            click.echo(st.dump())
            if system == "pipedream":
                click.echo("pipe dream")
                click.echo(pipedreams.state_to_pd(sys_, st).ascii())
            click.echo()


if __name__ == "__main__":
    main()
