"""Command line entry point: ``qminors <verb> ...``.

Exit status: 0 when everything asked for holds, 1 when some identity fails,
2 for usage or parse errors.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verifiers as vf
from .identities import GP_CONVENTIONS, IdentityError, PF_SYLVESTER_EXPONENTS, SYLVESTER_BORDERS
from .ncalg import PresentationError, basis_enumerate, make_presentation, normal_form
from .parser import ParseError, parse_expression

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# (identity, case, N, params, ambient size) in report order
SUITE = [
    ("rtt", "Mat", 2, {}, 2),
    ("rtt", "Mat", 3, {}, 3),
    ("rtt", "Ext", 4, {}, 4),
    ("reflection", "O", 2, {}, 2),
    ("reflection", "O", 3, {}, 3),
    ("reflection", "Sp", 2, {}, 2),
    ("reflection", "Sp", 4, {}, 4),
    ("basic-r", "Mat", 2, {}, 2),
    ("basic-r", "Mat", 3, {}, 3),
    ("ybe", "Mat", 2, {}, 2),
    ("ybe", "Mat", 3, {}, 3),
    ("braid", "Mat", 2, {}, 2),
    ("braid", "Mat", 3, {}, 3),
    ("embedding", "O", 2, {"symbolic": True}, 2),
    ("embedding", "O", 3, {"symbolic": True}, 3),
    ("embedding", "Sp", 2, {"symbolic": True}, 2),
    ("embedding", "Sp", 4, {"symbolic": True}, 4),
    ("coideal", "O", 2, {}, 2),
    ("coideal", "O", 3, {}, 3),
    ("coideal", "Sp", 4, {}, 4),
    ("sdet-det2", "O", 2, {"symbolic": True}, 2),
    ("sdet-det2", "O", 3, {"symbolic": True}, 3),
    ("sdet-det2", "Sp", 2, {"symbolic": True}, 2),
    ("sdet-det2", "Sp", 4, {"symbolic": True}, 4),
    ("sdet-explicit", "O", 2, {}, 2),
    ("sdet-explicit", "O", 3, {}, 3),
    ("sdet-explicit", "Sp", 2, {}, 2),
    ("sdet-explicit", "Sp", 4, {}, 4),
    ("comatrix", "O", 2, {}, 2),
    ("comatrix", "O", 3, {}, 3),
    ("comatrix", "Sp", 2, {}, 2),
    ("comatrix", "Sp", 4, {}, 4),
    ("y-relations", "O", 2, {}, 2),
    ("y-relations", "O", 3, {}, 3),
    ("y-relations", "Sp", 2, {}, 2),
    ("y-relations", "Sp", 4, {}, 4),
    ("omega", "O", 2, {}, 2),
    ("omega", "O", 3, {}, 3),
    ("omega", "Sp", 2, {}, 2),
    ("jacobi-sdet", "O", 2, {}, 2),
    ("jacobi-sdet", "O", 3, {}, 3),
    ("jacobi-sdet", "Sp", 4, {}, 4),
    ("jacobi-pf", "Sp", 4, {}, 4),
    ("cayley", "O", 3, {"kind": "sdet"}, 3),
    ("cayley", "Sp", 4, {"kind": "pf"}, 4),
    ("muir-law", "O", 4, {"kind": "sdet", "max_N": 4}, 4),
    ("muir-law", "Sp", 6, {"kind": "pf"}, 6),
    ("muir-trace", "O", 2, {}, 2),
    ("muir-trace", "O", 3, {}, 3),
    ("muir-trace", "Sp", 4, {"k": 2}, 4),
    ("sylvester-sdet", "O", 2, {"M": 2}, 4),
    ("sylvester-sdet", "Sp", 2, {"M": 2}, 4),
    ("sylvester-pf", "Sp", 2, {"n": 1, "m": 1}, 4),
    ("sylvester-pf", "Sp", 4, {"n": 2, "m": 1}, 6),
    ("gp", "Sp", 2, {"n": 1, "m": 1}, 2),
    ("gp", "Sp", 4, {"n": 1, "m": 3}, 4),
    ("gp", "Sp", 4, {"n": 3, "m": 1}, 4),
    ("gp", "Sp", 6, {"max_N": 6}, 6),
    ("pf-orthogonality", "Sp", 2, {}, 2),
    ("pf-orthogonality", "Sp", 4, {}, 4),
    ("pf-shuffle-vs-def", "Sp", 4, {}, 4),
    ("pf-shuffle-vs-def", "Sp", 6, {"size": 4}, 6),
    ("plucker", "Sp", 4, {}, 4),
    ("plucker", "Sp", 6, {}, 6),
    ("omega-power", "Sp", 2, {}, 2),
    ("omega-power", "Sp", 4, {}, 4),
    ("sdet-pf", "Sp", 2, {"symbolic": True}, 2),
    ("sdet-pf", "Sp", 4, {"symbolic": True}, 4),
    ("center-sdet", "O", 2, {}, 2),
    ("center-sdet", "O", 3, {}, 3),
    ("center-sdet", "Sp", 2, {}, 2),
    ("center-sdet", "Sp", 4, {}, 4),
    ("center-pf", "Sp", 2, {}, 2),
    ("center-pf", "Sp", 4, {}, 4),
    ("quasidet-sdet", "O", 2, {}, 2),
    ("quasidet-sdet", "O", 3, {}, 3),
    ("quasidet-pf", "Sp", 4, {}, 4),
]

DEFAULT_MAX_N = 4
VERIFY_MAX_N = 6


class UsageError(ValueError):
    pass


def suite_entries(max_N=DEFAULT_MAX_N, only=None):
    return [e for e in SUITE if e[4] <= max_N and (not only or e[0] in only)]


def _run_entry(args):
    name, case, N, params, perturb = args
    return vf.run_verifier(name, case, N, params, perturb)


def worker_count(jobs=None):
    if jobs is None:
        env = os.environ.get("QX_JOBS")
        jobs = int(env) if env else min(4, os.cpu_count() or 1)
    return max(1, int(jobs))


def run_suite(max_N=DEFAULT_MAX_N, jobs=None, perturb=False, only=None):
    """Outcomes of every suite entry within the size cap, in declaration order."""
    tasks = [(n, c, N, p, perturb) for n, c, N, p, _ in suite_entries(max_N, only)]
    jobs = worker_count(jobs)
    if jobs == 1 or len(tasks) <= 1:
        return [_run_entry(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_entry, tasks))


# --- formatting ----------------------------------------------------------------------


def _text_line(o):
    params = " ".join(f"{k}={v}" for k, v in o.params.items())
    line = f"{'PASS' if o.holds else 'FAIL'} {o.name} case={o.case} N={o.N}"
    if params:
        line += " " + params
    line += f" terms={o.terms} {o.elapsed_ms}ms"
    extra = [f"  note: {n}" for n in o.notes]
    extra += [f"  failed: {f}" for f in o.failures[:5]]
    return "\n".join([line] + extra)


def _emit(outcomes, fmt, single, out):
    if fmt == "json":
        data = outcomes[0].report() if single else [o.report() for o in outcomes]
        out.write(json.dumps(data) + "\n")
    else:
        for o in outcomes:
            out.write(_text_line(o) + "\n")
        if not single:
            bad = sum(not o.holds for o in outcomes)
            out.write(f"{len(outcomes) - bad}/{len(outcomes)} identities hold\n")


# --- argument parsing ----------------------------------------------------------------


def _index_list(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated index list, got {text!r}")


def build_parser():
    p = argparse.ArgumentParser(prog="qminors",
                                description="Sklyanin minors, quantum Pfaffians and their identities.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, cases=("O", "Sp", "Mat"), default_case=None):
        sp.add_argument("--case", choices=cases, default=default_case)
        sp.add_argument("--N", type=int, default=None)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("normal-form", help="parse an expression and print its normal form")
    sp.add_argument("expr")
    common(sp, ("O", "Sp", "Mat", "Ext"), "O")

    sp = sub.add_parser("det", help="quantum determinant (or minor) of A_q(Mat_N)")
    common(sp, ("Mat",), "Mat")
    sp.add_argument("--rows", type=_index_list)
    sp.add_argument("--cols", type=_index_list)

    sp = sub.add_parser("sdet", help="Sklyanin determinant (or principal minor on --I)")
    common(sp, ("O", "Sp"), "O")
    sp.add_argument("--I", type=_index_list)

    sp = sub.add_parser("pf", help="quantum Pfaffian (or its principal part on --I)")
    common(sp, ("Sp",), "Sp")
    sp.add_argument("--I", type=_index_list)

    sp = sub.add_parser("minor", help="Sklyanin minor (O, Sp) or quantum minor (Mat)")
    common(sp, ("O", "Sp", "Mat"), "O")
    sp.add_argument("--rows", type=_index_list, required=True)
    sp.add_argument("--cols", type=_index_list, required=True)

    sp = sub.add_parser("basis", help="PBW monomials up to a degree")
    common(sp, ("O", "Sp", "Mat", "Ext"), "O")
    sp.add_argument("--degree", type=int, default=2)

    sp = sub.add_parser("verify", help="check one named identity")
    sp.add_argument("identity", help="one of: " + ", ".join(vf.NAMES))
    common(sp, ("O", "Sp", "Mat", "Ext"))
    sp.add_argument("--I", type=_index_list)
    sp.add_argument("--sigma", type=_index_list)
    sp.add_argument("--k", type=int)
    sp.add_argument("--M", type=int, help="bordering size for sylvester-sdet")
    sp.add_argument("--n", type=int, help="half-sizes n, m for sylvester-pf and gp")
    sp.add_argument("--m", type=int)
    sp.add_argument("--kind", choices=("sdet", "pf"))
    sp.add_argument("--catalog", help="descriptor file for cayley and muir-law, one identity per line")
    sp.add_argument("--size", type=int, help="subset size for pf-shuffle-vs-def")
    sp.add_argument("--degree", type=int, help="monomial degree for the embedding rank test")
    sp.add_argument("--convention", choices=tuple(GP_CONVENTIONS), help="Grassmann-Pluecker exponent")
    sp.add_argument("--border", choices=SYLVESTER_BORDERS, help="Sylvester bordering indices")
    sp.add_argument("--exponent", choices=PF_SYLVESTER_EXPONENTS, help="Pfaffian Sylvester exponent")
    sp.add_argument("--symbolic-a", action="store_true", help="formal parameters a_i instead of 1")
    sp.add_argument("--perturb", action="store_true", help="negative control: corrupt one coefficient")
    sp.add_argument("--max-N", type=int, default=VERIFY_MAX_N)

    sp = sub.add_parser("suite", help="run the whole catalog of checks")
    sp.add_argument("--max-N", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (env QX_JOBS)")
    sp.add_argument("--only", nargs="*", help="restrict to these identity names")
    sp.add_argument("--perturb", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _verify_params(a):
    params = {}
    for key in ("k", "M", "n", "m", "kind", "catalog", "size", "degree", "convention", "border",
                "exponent"):
        val = getattr(a, key)
        if val is not None:
            params[key] = val
    for key in ("I", "sigma"):
        val = getattr(a, key)
        if val is not None:
            params[key] = ",".join(map(str, val))
    if a.symbolic_a:
        params["symbolic"] = True
    return params


def _print_element(e, fmt, out, label):
    if fmt == "json":
        out.write(json.dumps({"expression": label, "value": str(e)}) + "\n")
    else:
        out.write(str(e) + "\n")


def run(argv=None, out=None):
    """Execute one command; returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(a, out)
    except (ParseError, UsageError, vf.VerifierError, PresentationError, IdentityError,
            ValueError, OSError) as exc:
        sys.stderr.write(f"qminors: error: {exc}\n")
        return EXIT_USAGE


def _dispatch(a, out):
    from .matrix_algebra import quantum_minor
    from .pfaffian import pf
    from .sklyanin import generator_matrix, principal_sdet, sdet, sklyanin_minor

    if a.verb == "normal-form":
        pres = make_presentation(a.case, a.N or 2)
        _print_element(normal_form(parse_expression(a.expr, pres)), a.format, out, a.expr)
        return EXIT_OK
    if a.verb == "det":
        N = a.N or 2
        rows = a.rows or tuple(range(1, N + 1))
        cols = a.cols or rows
        _print_element(quantum_minor(rows, cols, N), a.format, out, "det")
        return EXIT_OK
    if a.verb == "sdet":
        N = a.N or 2
        if a.I is None:
            e = sdet(a.case, N)
        else:
            e = principal_sdet(generator_matrix(a.case, N), a.I)
        _print_element(e, a.format, out, "sdet")
        return EXIT_OK
    if a.verb == "pf":
        N = a.N or 2
        if N % 2:
            raise UsageError("Pfaffians need even N")
        if a.I is not None and len(a.I) % 2:
            raise UsageError("Pfaffian index sets must have even size")
        _print_element(pf(N, a.I), a.format, out, "pf")
        return EXIT_OK
    if a.verb == "minor":
        N = a.N or 2
        if len(a.rows) != len(a.cols):
            raise UsageError("--rows and --cols must have the same length")
        if any(not 1 <= i <= N for i in a.rows + a.cols):
            raise UsageError(f"indices must lie in 1..{N}")
        if a.case == "Mat":
            e = quantum_minor(a.rows, a.cols, N)
        else:
            e = sklyanin_minor(generator_matrix(a.case, N), a.rows, a.cols)
        _print_element(e, a.format, out, "minor")
        return EXIT_OK
    if a.verb == "basis":
        pres = make_presentation(a.case, a.N or 2)
        words = [str(m) for m in basis_enumerate(pres, a.degree)]
        if a.format == "json":
            out.write(json.dumps(words) + "\n")
        else:
            out.write("\n".join(words) + "\n")
        return EXIT_OK
    if a.verb == "verify":
        v, case, N = vf.resolve(a.identity, a.case, a.N)
        if N > a.max_N:
            raise UsageError(f"N={N} exceeds the size cap {a.max_N} (raise --max-N)")
        o = vf.run_verifier(a.identity, case, N, _verify_params(a), a.perturb)
        _emit([o], a.format, True, out)
        return EXIT_OK if o.holds else EXIT_FAIL
    if a.verb == "suite":
        if a.only:
            unknown = [n for n in a.only if n not in vf.REGISTRY]
            if unknown:
                raise UsageError(f"unknown identity {unknown[0]!r}")
        outcomes = run_suite(a.max_N, a.jobs, a.perturb, a.only)
        _emit(outcomes, a.format, False, out)
        return EXIT_OK if all(o.holds for o in outcomes) else EXIT_FAIL
    raise UsageError(f"unknown verb {a.verb}")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
