"""Command-line interface.

Every invocation runs one job: read the seed from --B (a JSON file or -
for standard input), compute, print a single JSON document on standard
output. Exit codes: 0 success, 1 malformed input, 2 domain errors (the
document then describes the error), 3 when --exhaustive gives up at the
node cap. Directions in --seq and all row/column indices in reports are
1-based. XFAN_THREADS sets the worker count for pattern enumeration and
never changes the output bytes.
"""

import argparse
import json
import os
import sys

from .cones import build_system, classify
from .errors import ExhaustionCapExceeded, NotRepresentationFinite, XfanError
from .fan import assemble_fan, extreme_rays, theta
from .intmat import primitive_vector
from .jsonio import (
    decode_job_input,
    decode_vector,
    dumps,
    encode_cone,
    encode_matrix,
    encode_polynomial,
    encode_vector,
)
from .pattern import DEFAULT_DEPTH, enumerate_pattern, initial_node, mutate_node
from .reptheory import kernel_certificates, knit, normal_vector, path_algebra_data
from .seed import mutate, quiver_of, validate

EXHAUSTIVE_CAP = 10**6


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the contract wants 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_seq(text):
    if not text.strip():
        return ()
    try:
        return tuple(int(tok.strip(), 10) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated 1-based directions, got {text!r}"
        ) from None


def _parse_json_vector(text, flag):
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError(f"{flag} expects a JSON array like [1,0,-1], got {text!r}") from None
    return decode_vector(value)


def _thread_count():
    raw = os.environ.get("XFAN_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw, 10)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"XFAN_THREADS must be a positive integer, got {raw!r}")
    return value


def _load_exchange(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ValueError(f"cannot read {path}: {exc}") from None
    b_rows, d_vec = decode_job_input(text)
    return validate(b_rows, d_vec)


def _walk(em, seq, with_polynomials):
    node = initial_node(em, with_polynomials=with_polynomials)
    for k in seq:
        node = mutate_node(node, k)
    return node


def _enumerate(em, args, threads, with_polynomials):
    if getattr(args, "exhaustive", False):
        return enumerate_pattern(
            em,
            max_depth=None,
            with_polynomials=with_polynomials,
            threads=threads,
            node_cap=EXHAUSTIVE_CAP,
        )
    return enumerate_pattern(
        em,
        max_depth=args.depth,
        with_polynomials=with_polynomials,
        threads=threads,
    )


def _cmd_validate(em, args, threads):
    return {
        "ok": True,
        "n": em.n,
        "d": encode_vector(em.d),
        "skew_symmetric": em.is_skew_symmetric(),
    }


def _cmd_mutate(em, args, threads):
    current = em
    for k in args.seq:
        current = mutate(current, k)
    return {
        "history": list(args.seq),
        "B": encode_matrix(current.B),
        "d": encode_vector(current.d),
    }


def _cmd_cmatrix(em, args, threads):
    node = _walk(em, args.seq, with_polynomials=False)
    return {
        "history": list(node.history),
        "B_t": encode_matrix(node.B_t.B),
        "C_t": encode_matrix(node.C_t),
    }


def _cmd_gmatrix(em, args, threads):
    node = _walk(em, args.seq, with_polynomials=False)
    return {
        "history": list(node.history),
        "G_t": encode_matrix(node.G_t),
        "C_t": encode_matrix(node.C_t),
    }


def _cmd_fpoly(em, args, threads):
    node = _walk(em, args.seq, with_polynomials=True)
    return {
        "history": list(node.history),
        "F_t": [encode_polynomial(f) for f in node.F_t],
    }


def _cmd_cone(em, args, threads):
    node = _walk(em, args.seq, with_polynomials=False)
    description = classify(build_system(node, em))
    doc = encode_cone(description)
    doc["history"] = list(node.history)
    return doc


def _cmd_fan(em, args, threads):
    catalog = _enumerate(em, args, threads, with_polynomials=False)
    report = assemble_fan(catalog)
    cones = []
    for cone in report.cones:
        entry = encode_cone(cone.description)
        entry["witnesses"] = [list(h) for h in cone.witnesses]
        if args.emit_rays:
            entry["rays"] = [encode_vector(r) for r in extreme_rays(cone.description)]
        cones.append(entry)
    return {
        "complete": report.complete,
        "depth": catalog.depth,
        "nodes": len(catalog.nodes),
        "seed_classes": catalog.seed_class_count(),
        "dims": {str(dim): count for dim, count in report.histogram.items()},
        "cones": cones,
    }


def _cmd_theta(em, args, threads):
    beta = _parse_json_vector(args.beta, "--beta")
    catalog = _enumerate(em, args, threads, with_polynomials=True)
    result = theta(beta, catalog)
    return {
        "beta": encode_vector(result.beta),
        "witness": list(result.witness),
        "alpha": encode_vector(result.alpha),
        "value": encode_polynomial(result.value),
    }


def _cmd_ar(em, args, threads):
    data = path_algebra_data(quiver_of(em))
    slice_data = knit(data, window=args.window)
    positions = [
        {
            "slice": m,
            "vertex": v + 1,
            "dim": encode_vector(slice_data.objects[(m, v)].dim),
        }
        for (m, v) in sorted(slice_data.objects)
    ]
    meshes = [
        {
            "source": [mesh.source[0], mesh.source[1] + 1],
            "middles": [[m, v + 1] for (m, v) in mesh.middles],
            "target": [mesh.target[0], mesh.target[1] + 1],
        }
        for mesh in slice_data.meshes
    ]
    return {
        "exhaustive": slice_data.exhaustive,
        "positions": positions,
        "meshes": meshes,
        "modules": [encode_vector(d) for d in slice_data.module_dimension_vectors()],
    }


def _cmd_normals(em, args, threads):
    cvec = _parse_json_vector(args.cvec, "--cvec")
    data = path_algebra_data(quiver_of(em))
    if args.window is not None:
        slice_data = knit(data, window=args.window)
    else:
        try:
            slice_data = knit(data)
        except NotRepresentationFinite:
            slice_data = None
    normal = normal_vector(data, cvec, slice_data)
    checked = slice_data is not None and slice_data.mesh_at(cvec) is not None
    return {
        "cvec": encode_vector(cvec),
        "normal": encode_vector(normal),
        "primitive": encode_vector(primitive_vector(normal)),
        "mesh_checked": checked,
    }


def _cmd_certify(em, args, threads):
    data = path_algebra_data(quiver_of(em))
    node = _walk(em, args.seq, with_polynomials=False)
    cvectors = [node.C_t.col(j) for j in range(em.n)]
    certificates = kernel_certificates(data, cvectors)
    return {
        "history": list(node.history),
        "cvectors": [encode_vector(c) for c in cvectors],
        "certificates": [
            {"columns": [i + 1 for i in subset], "lambda": encode_vector(lam)}
            for subset, lam in certificates
        ],
    }


def _build_parser():
    parser = _Parser(prog="xfan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--B",
            required=True,
            metavar="FILE",
            help='seed input {"B": [[..]], "d": [..]?}; - reads standard input',
        )
        p.set_defaults(handler=handler)
        return p

    def seq_flag(p):
        p.add_argument(
            "--seq",
            type=_parse_seq,
            default=(),
            metavar="K1,K2,..",
            help="1-based mutation directions applied left to right",
        )

    def depth_flags(p):
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="BFS depth bound")
        p.add_argument(
            "--exhaustive",
            action="store_true",
            help=f"ignore --depth, stop only when done; exit 3 past {EXHAUSTIVE_CAP} seeds",
        )

    command("validate", _cmd_validate, "check skew-symmetrizability, report d")
    seq_flag(command("mutate", _cmd_mutate, "mutate the exchange matrix"))
    seq_flag(command("cmatrix", _cmd_cmatrix, "c-matrix of the seed at --seq"))
    seq_flag(command("gmatrix", _cmd_gmatrix, "g-matrix of the seed at --seq"))
    seq_flag(command("fpoly", _cmd_fpoly, "F-polynomials of the seed at --seq"))
    seq_flag(command("cone", _cmd_cone, "inequality system and cone of the seed at --seq"))

    fan_p = command("fan", _cmd_fan, "enumerate seeds, merge equal cones")
    depth_flags(fan_p)
    fan_p.add_argument(
        "--emit-rays",
        action="store_true",
        dest="emit_rays",
        help="include primitive extreme rays per cone for external plotting",
    )

    theta_p = command("theta", _cmd_theta, "theta function at an integral point")
    theta_p.add_argument("--beta", required=True, metavar="[..]", help="integral point, JSON array")
    depth_flags(theta_p)

    ar_p = command("ar", _cmd_ar, "knit the AR quiver of an acyclic skew-symmetric seed")
    ar_p.add_argument(
        "--window",
        type=int,
        default=None,
        help="number of translation steps; omit for exhaustive Dynkin knitting",
    )

    normals_p = command("normals", _cmd_normals, "hyperplane normal of a positive c-vector")
    normals_p.add_argument("--cvec", required=True, metavar="[..]", help="positive c-vector, JSON array")
    normals_p.add_argument(
        "--window",
        type=int,
        default=None,
        help="knitting window for the mesh cross-check on non-Dynkin quivers",
    )

    certify_p = command(
        "certify", _cmd_certify, "kernel certificates among the c-matrix columns at --seq"
    )
    seq_flag(certify_p)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        threads = _thread_count()
        em = _load_exchange(args.B)
        doc = args.handler(em, args, threads)
    except ExhaustionCapExceeded as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 3
    except XfanError as exc:
        doc = {"error": type(exc).__name__, "message": str(exc)}
        reason = getattr(exc, "reason", None)
        if reason is not None:
            doc["reason"] = reason
        print(dumps(doc))
        return 2
    except ValueError as exc:
        print(f"xfan: error: {exc}", file=sys.stderr)
        return 1
    print(dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
