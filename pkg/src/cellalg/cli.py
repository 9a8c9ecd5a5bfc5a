"""Command-line interface: exact reports as text or JSON, plus an on-disk
cache of generator action matrices.

Exit codes: 0 success, 2 input error, 3 pole at the requested specialization.
JSON output is deterministic across runs with equal inputs, except for the
trailing ``timing`` field.
"""

import argparse
import json
import os
import sys
import tempfile
import time

from . import bmw as _bmw
from . import brauer as _brauer
from .combin import check_partition
from .exactring import (
    BMW_VARS,
    BRAUER_VARS,
    PoleError,
    Specialization,
    parse_fraction,
)
from .specsim import (
    _det,
    _layer_shapes,
    certify,
    conjecture_evidence,
    gram_rank_certify,
    hom_obstruction,
)
from .towers import (
    build_path_basis,
    jm_triangularity,
    ordered_paths,
    restriction_filtration_check,
)

CACHE_VERSION = 1

_GEN_KINDS = {"bmw": ("T", "Tinv", "E"), "brauer": ("s", "E")}
_VARS = {"bmw": BMW_VARS, "brauer": BRAUER_VARS}


class CliError(Exception):
    """Invalid input; maps to exit code 2."""


# -- serialization helpers -----------------------------------------------------------

def _parse_shape(text):
    if text is None:
        raise CliError("missing required --lambda")
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
        return check_partition(parts)
    except ValueError as exc:
        raise CliError("malformed partition {!r}: {}".format(text, exc))


def _shape_str(lam):
    return ",".join(str(p) for p in lam) if lam else "()"


def _fmt_matrix(rows):
    return [[str(x) for x in row] for row in rows]


def _text_matrix(rows, indent="  "):
    cells = _fmt_matrix(rows)
    if not cells or not cells[0]:
        return [indent + "(empty)"]
    widths = [max(len(cells[a][b]) for a in range(len(cells)))
              for b in range(len(cells[0]))]
    return [indent + "[" + "  ".join(c.rjust(w) for c, w in zip(row, widths))
            + "]" for row in cells]


def _specialized(matrix, spec):
    if spec is None:
        return [list(row) for row in matrix]
    return [[spec.apply(x) for x in row] for row in matrix]


def _check_shape(lam, n):
    diff = n - sum(lam)
    if diff < 0 or diff % 2:
        raise CliError(
            "shape {} is not reachable at level n={} (parity/size)".format(
                _shape_str(lam), n))
    if len(lam) > n:
        raise CliError("shape has too many rows for n={}".format(n))


# -- structure-constant cache --------------------------------------------------------

def _cache_path(cache_dir, algebra, n):
    return os.path.join(cache_dir,
                        "{}-n{}-v{}.json".format(algebra, n, CACHE_VERSION))


def _matrix_key(lam, kind, i):
    return "{}|{}|{}".format(",".join(str(p) for p in lam), kind, i)


def _parse_matrix_key(key):
    shape, kind, i = key.split("|")
    lam = tuple(int(p) for p in shape.split(",")) if shape else ()
    return lam, kind, int(i)


def _compute_cache_body(algebra, n):
    gen = _bmw.bmw_gen_matrix if algebra == "bmw" else _brauer.br_cell_matrix
    body = {}
    for lam in _layer_shapes(n):
        for kind in _GEN_KINDS[algebra]:
            for i in range(1, n):
                body[_matrix_key(lam, kind, i)] = _fmt_matrix(
                    gen(lam, n, kind, i))
    return body


def _write_cache(path, algebra, n, body):
    data = {
        "version": CACHE_VERSION,
        "algebra": algebra,
        "n": n,
        "vars": list(_VARS[algebra]),
        "matrices": body,
    }
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".",
                               prefix=".cache-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_cache(path, algebra, n):
    """Parsed override dict, or None if the file is missing/stale/corrupt."""
    if not os.path.exists(path):
        return None
    try:
        with open(path) as handle:
            data = json.load(handle)
        if (data.get("version") != CACHE_VERSION
                or data.get("algebra") != algebra
                or data.get("n") != n
                or tuple(data.get("vars", ())) != _VARS[algebra]):
            raise ValueError("header mismatch")
        vars = _VARS[algebra]
        overrides = {}
        for key, rows in data["matrices"].items():
            lam, kind, i = _parse_matrix_key(key)
            parsed = [[parse_fraction(x, vars) for x in row] for row in rows]
            if any(len(row) != len(parsed) for row in parsed):
                raise ValueError("non-square matrix for {}".format(key))
            overrides[(lam, n, kind, i)] = parsed
        return overrides
    except (OSError, ValueError, KeyError, AttributeError,
            json.JSONDecodeError) as exc:
        print("warning: ignoring unusable cache file {}: {}".format(path, exc),
              file=sys.stderr)
        return None


def ensure_cache(cache_dir, algebra, n):
    """Load the cache for (algebra, n), computing and writing it if absent
    or unusable; seeds the in-memory generator-matrix overrides."""
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, algebra, n)
    overrides = _load_cache(path, algebra, n)
    if overrides is None:
        body = _compute_cache_body(algebra, n)
        _write_cache(path, algebra, n, body)
        status = "written"
        overrides = _load_cache(path, algebra, n)
        if overrides is None:
            raise AssertionError("freshly written cache failed to load")
    else:
        status = "reused"
    target = (_bmw._gen_matrix_overrides if algebra == "bmw"
              else _brauer._gen_matrix_overrides)
    target.update(overrides)
    return {"path": path, "status": status, "entries": len(overrides)}


# -- subcommand handlers -------------------------------------------------------------
# each returns (payload dict, list of text lines)

def _double_factorial(n):
    out = 1
    for k in range(2 * n - 1, 0, -2):
        out *= k
    return out


def _cmd_dim(args):
    shapes = []
    total = 0
    for lam in _layer_shapes(args.n):
        count = len(ordered_paths(lam, args.n))
        shapes.append({"shape": list(lam), "paths": count})
        total += count * count
    payload = {
        "total": total,
        "double_factorial": _double_factorial(args.n),
        "shapes": shapes,
    }
    lines = ["dimension of {} algebra at n={}: {}".format(
        args.algebra, args.n, total)]
    for item in shapes:
        lines.append("  shape {:<10} paths {}".format(
            _shape_str(tuple(item["shape"])), item["paths"]))
    return payload, lines


def _cmd_basis(args):
    pb = build_path_basis(args.algebra, args.shape, args.n)
    entries = []
    for t in pb.paths:
        words = sorted(((w.reduced_word(), str(c))
                        for w, c in pb.b_words[t].items()),
                       key=lambda item: item[0])
        entries.append({
            "path": [list(mu) for mu in t],
            "b_element": [{"word": list(word), "coeff": coeff}
                          for word, coeff in words],
        })
    payload = {
        "shape": list(args.shape),
        "dimension": len(pb.paths),
        "basis": entries,
    }
    lines = ["path basis of cell module {} at n={} ({} vectors)".format(
        _shape_str(args.shape), args.n, len(pb.paths))]
    for entry in entries:
        path = " -> ".join(_shape_str(tuple(mu)) for mu in entry["path"])
        lines.append("  " + path)
        for term in entry["b_element"]:
            word = "".join("s{}".format(i) for i in term["word"]) or "1"
            lines.append("    {} * {}".format(term["coeff"], word))
    return payload, lines


def _cmd_gram(args):
    gram = _bmw.bmw_gram if args.algebra == "bmw" else _brauer.br_gram
    g = _specialized(gram(args.shape, args.n), args.spec)
    det = _det(g)
    payload = {
        "shape": list(args.shape),
        "matrix": _fmt_matrix(g),
        "determinant": str(det),
    }
    lines = ["Gram matrix of cell module {} at n={}:".format(
        _shape_str(args.shape), args.n)]
    lines.extend(_text_matrix(g))
    lines.append("determinant: {}".format(det))
    return payload, lines


def _cmd_transition(args):
    pb = build_path_basis(args.algebra, args.shape, args.n)
    matrix = pb.transition_matrix()
    payload = {
        "shape": list(args.shape),
        "paths": [[list(mu) for mu in t] for t in pb.paths],
        "matrix": _fmt_matrix(matrix),
    }
    lines = ["transition matrix (cell basis rows, path columns) for {} "
             "at n={}:".format(_shape_str(args.shape), args.n)]
    lines.extend(_text_matrix(matrix))
    return payload, lines


def _cmd_jm(args):
    report = jm_triangularity(args.algebra, args.shape, args.n)
    payload = {
        "shape": list(args.shape),
        "ok": report["ok"],
        "diagonals": [
            {"path": [list(mu) for mu in t],
             "values": [str(x) for x in values]}
            for t, values in report["diagonals"].items()],
        "failures": [repr(f) for f in report["failures"]],
    }
    lines = ["Jucys-Murphy triangularity on {} at n={}: {}".format(
        _shape_str(args.shape), args.n, "ok" if report["ok"] else "FAILED")]
    for entry in payload["diagonals"]:
        path = " -> ".join(_shape_str(tuple(mu)) for mu in entry["path"])
        lines.append("  {}: {}".format(path, ", ".join(entry["values"])))
    for failure in payload["failures"]:
        lines.append("  failure: " + failure)
    return payload, lines


def _cmd_filtration(args):
    report = restriction_filtration_check(args.algebra, args.shape, args.n)
    payload = {
        "shape": list(args.shape),
        "ok": report["ok"],
        "dimension_match": report["dimension_match"],
        "neighbors": [{"mu": list(item["mu"]), "dim": item["dim"]}
                      for item in report["neighbors"]],
        "failures": [repr(f) for f in report["failures"]],
    }
    lines = ["restriction filtration of {} at n={}: {}".format(
        _shape_str(args.shape), args.n, "ok" if report["ok"] else "FAILED")]
    for item in payload["neighbors"]:
        lines.append("  layer {} of dimension {}".format(
            _shape_str(tuple(item["mu"])), item["dim"]))
    for failure in payload["failures"]:
        lines.append("  failure: " + failure)
    return payload, lines


def _witness_payload(witnesses):
    return [{
        "path_s": [list(mu) for mu in s],
        "path_t": [list(mu) for mu in t],
        "shared_vector": [str(x) for x in vec],
    } for s, t, vec in witnesses]


def _cmd_certify(args):
    verdict = certify(args.algebra, args.n, args.spec)
    payload = {
        "outcome": verdict.outcome,
        "witnesses": _witness_payload(verdict.evidence),
    }
    lines = ["eigenvalue-vector criterion for {} at n={}: {}".format(
        args.algebra, args.n, verdict.outcome)]
    for item in payload["witnesses"]:
        lines.append("  collision: {}  and  {}  share  ({})".format(
            " -> ".join(_shape_str(tuple(mu)) for mu in item["path_s"]),
            " -> ".join(_shape_str(tuple(mu)) for mu in item["path_t"]),
            ", ".join(item["shared_vector"])))
    return payload, lines


def _cmd_gram_certify(args):
    verdict = gram_rank_certify(args.algebra, args.n, args.spec)
    layers = []
    for item in verdict.evidence:
        entry = {"shape": list(item[0]), "rank": item[1],
                 "dimension": item[2]}
        if len(item) > 3:
            entry["radical_dimension"] = item[3]
        layers.append(entry)
    payload = {"outcome": verdict.outcome, "layers": layers}
    lines = ["Gram-rank criterion for {} at n={}: {}".format(
        args.algebra, args.n, verdict.outcome)]
    for entry in layers:
        line = "  shape {:<10} rank {}/{}".format(
            _shape_str(tuple(entry["shape"])), entry["rank"],
            entry["dimension"])
        if "radical_dimension" in entry:
            line += "  radical dimension {}".format(
                entry["radical_dimension"])
        lines.append(line)
    return payload, lines


def _cmd_hom(args):
    if args.mu is None:
        raise CliError("missing required --mu")
    mu = _parse_shape(args.mu)
    try:
        possible = hom_obstruction(args.algebra, args.shape, mu, args.spec)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {
        "shape": list(args.shape),
        "mu": list(mu),
        "obstruction_passes": possible,
        "hom_certified_zero": not possible,
    }
    verdict = ("necessary condition holds (inconclusive)" if possible
               else "obstruction fails: Hom is certified zero")
    lines = ["homomorphism obstruction {} -> {}: {}".format(
        _shape_str(args.shape), _shape_str(mu), verdict)]
    return payload, lines


def _cmd_conjecture(args):
    report = conjecture_evidence(args.n)
    payload = {
        "n": report["n"],
        "k": report["k"],
        "shape": list(report["lam"]),
        "roots": [str(x) for x in report["roots"]],
        "expected_roots": [str(x) for x in report["expected_roots"]],
        "agrees": report["agrees"],
        "nonlinear_remainder_degree": report["nonlinear_remainder_degree"],
    }
    lines = [
        "Gram-determinant root evidence at n={} (shape {}):".format(
            report["n"], _shape_str(report["lam"])),
        "  computed roots: {}".format(
            ", ".join(payload["roots"]) or "(none)"),
        "  expected roots: {}".format(", ".join(payload["expected_roots"])),
        "  agreement: {}".format(report["agrees"]),
    ]
    if report["nonlinear_remainder_degree"] > 0:
        lines.append("  nonlinear remainder of degree {}".format(
            report["nonlinear_remainder_degree"]))
    return payload, lines


def _cmd_cache(args):
    if args.cache_dir is None:
        raise CliError("cache subcommand requires --cache-dir")
    status = ensure_cache(args.cache_dir, args.algebra, args.n)
    payload = dict(status)
    lines = ["cache {}: {} ({} matrices)".format(
        status["status"], status["path"], status["entries"])]
    return payload, lines


_HANDLERS = {
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "gram": _cmd_gram,
    "transition": _cmd_transition,
    "jm": _cmd_jm,
    "filtration": _cmd_filtration,
    "certify": _cmd_certify,
    "gram-certify": _cmd_gram_certify,
    "hom": _cmd_hom,
    "conjecture": _cmd_conjecture,
    "cache": _cmd_cache,
}

_NEEDS_ALGEBRA = {"dim", "basis", "gram", "transition", "jm", "filtration",
                  "certify", "gram-certify", "hom", "cache"}
_NEEDS_N = {"dim", "basis", "gram", "transition", "jm", "filtration",
            "certify", "gram-certify", "conjecture", "cache"}
_NEEDS_SHAPE = {"basis", "gram", "transition", "jm", "filtration", "hom"}
_TAKES_SPEC = {"gram", "certify", "gram-certify", "hom"}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cellalg",
        description="Exact cellular-structure computations for the Brauer "
                    "and Birman-Murakami-Wenzl towers.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--algebra", choices=("bmw", "brauer"))
        p.add_argument("--n", type=int)
        p.add_argument("--lambda", dest="shape_text", metavar="LAMBDA",
                       help="partition as comma-separated parts, e.g. 2,1")
        p.add_argument("--mu", help="target partition (hom only)")
        p.add_argument("--spec", help='specialization, e.g. "z=4" or '
                                      '"r=-q^-3"')
        p.add_argument("--json", action="store_true")
        p.add_argument("--cache-dir")
    return parser


def _validate(args):
    cmd = args.command
    if cmd in _NEEDS_ALGEBRA and args.algebra is None:
        raise CliError("{} requires --algebra".format(cmd))
    if cmd in _NEEDS_N:
        if args.n is None:
            raise CliError("{} requires --n".format(cmd))
        if args.n < 1 or (cmd == "conjecture" and args.n < 2):
            raise CliError("--n out of range")
    args.shape = None
    if cmd in _NEEDS_SHAPE:
        args.shape = _parse_shape(args.shape_text)
        if cmd != "hom":
            _check_shape(args.shape, args.n)
    args.spec = None
    if args.spec_text is not None:
        if cmd not in _TAKES_SPEC:
            raise CliError("{} does not accept --spec".format(cmd))
        try:
            args.spec = Specialization.parse(args.spec_text,
                                             _VARS[args.algebra])
        except ValueError as exc:
            raise CliError("bad specialization: {}".format(exc))


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args.spec_text = args.spec
    start = time.monotonic()
    try:
        _validate(args)
        if args.cache_dir is not None and args.command != "cache" and \
                args.command in _NEEDS_ALGEBRA and args.n is not None:
            ensure_cache(args.cache_dir, args.algebra, args.n)
        payload, lines = _HANDLERS[args.command](args)
    except (CliError, OSError) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 2
    except PoleError as exc:
        print("error: specialization hits a pole: {}".format(exc),
              file=sys.stderr)
        return 3
    if args.json:
        report = {"command": args.command, "parameters": {}}
        for field in ("algebra", "n"):
            value = getattr(args, field)
            if value is not None:
                report["parameters"][field] = value
        if args.shape is not None:
            report["parameters"]["lambda"] = list(args.shape)
        if args.spec_text is not None:
            report["parameters"]["spec"] = args.spec_text
        report["result"] = payload
        report["timing"] = {"seconds": round(time.monotonic() - start, 6)}
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
