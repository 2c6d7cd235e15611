"""Command-line interface.

Verbs: build, mutate, qpmutate, jacobian, nondegen, rigid, coxeter, qw,
keller, verify-paper, serve. Global flags: --truncation N (default 16),
--lambda (rational or L), --json. The service state directory honors
QPCAT_STATE_DIR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio
from .constructions import (canonical_ct_quiver, five_vertex_qp, genus_and_type,
                            keller_qp, q2222_qp, squid_qp)
from .coxeter import birs_word, gcm_from_quiver, is_reduced, qw, qw_tilde
from .jacobian import is_rigid_up_to_degree, jacobian_dimension
from .mutation import nondegeneracy_explore, qp_mutate
from .potential import QP, Potential
from .quiver import is_acyclic, mutate_sequence
from .verify import VerifyConfig, verify_paper


def _read_json(path):
    with (sys.stdin if path == "-" else open(path)) as fh:
        return json.load(fh)


def _emit(args, payload, text):
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(text)


def _weights(raw):
    return tuple(int(w) for w in raw.split(","))


def _load_qp(args):
    data = _read_json(args.qp)
    return jsonio.qp_from_json(data)


def cmd_build(args):
    kind = args.kind
    if kind == "five-vertex":
        qp = five_vertex_qp()
    elif kind == "q2222":
        qp = q2222_qp(jsonio.parse_scalar(args.lam))
    elif kind == "squid":
        lambdas = [jsonio.parse_scalar(x) for x in args.params.split(",")] \
            if args.params else []
        qp = squid_qp(_weights(args.weights), lambdas)
    elif kind == "ct":
        q = canonical_ct_quiver(*_weights(args.weights))
        qp = QP(q, Potential(q))
    elif kind == "genus":
        data = genus_and_type(_weights(args.weights))
        _emit(args, {"weights": list(data.weights), "p": data.p,
                     "genus": str(data.genus), "kind": data.kind},
              "weights %s: genus %s, %s" % (list(data.weights), data.genus, data.kind))
        return 0
    else:
        raise SystemExit("unknown builder %r" % kind)
    payload = jsonio.qp_to_json(qp)
    text = ("%d vertices, %d arrows, potential %s"
            % (len(qp.quiver.vertices), len(qp.quiver.arrows),
               jsonio.potential_to_text(qp.potential)))
    _emit(args, payload, text)
    return 0


def cmd_mutate(args):
    data = _read_json(args.quiver)
    q = jsonio.quiver_from_json(data.get("quiver", data))
    seq = [v for v in (args.seq.split(",") if args.seq else [args.at]) if v]
    out = mutate_sequence(q, seq)
    payload = {"quiver": jsonio.quiver_to_json(out), "acyclic": is_acyclic(out)}
    _emit(args, payload, "mutated at %s: %d arrows, acyclic=%s"
          % (",".join(seq), len(out.arrows), is_acyclic(out)))
    return 0


def cmd_qpmutate(args):
    qp = _load_qp(args)
    seq = [v for v in (args.seq.split(",") if args.seq else [args.at]) if v]
    for k in seq:
        qp = qp_mutate(qp, k, args.truncation)
    payload = jsonio.qp_to_json(qp)
    payload["two_acyclic"] = qp.two_acyclic()
    _emit(args, payload, "after %s: %d arrows, 2-acyclic=%s, potential %s"
          % (",".join(seq), len(qp.quiver.arrows), qp.two_acyclic(),
             jsonio.potential_to_text(qp.potential)))
    return 0


def cmd_jacobian(args):
    qp = _load_qp(args)
    res = jacobian_dimension(qp, args.truncation)
    _emit(args, res.report(),
          "dims %s stabilized_at=%s total=%s"
          % (list(res.dims), res.stabilized_at, res.dimension))
    return 0


def cmd_nondegen(args):
    qp = _load_qp(args)
    res = nondegeneracy_explore(qp, args.depth, truncation=args.truncation)
    payload = {"passed": res.passed, "complete": res.complete,
               "mutations": res.mutations_done, "depth": res.depth}
    if res.failing_trace is not None:
        payload["failing_trace"] = res.failing_trace.report()
    _emit(args, payload, "non-degenerate to depth %d: %s%s"
          % (res.depth, res.passed, "" if res.complete else " (budget hit)"))
    return 0 if res.passed else 1


def cmd_rigid(args):
    qp = _load_qp(args)
    ok, failing = is_rigid_up_to_degree(qp, args.degree, slack=args.slack)
    payload = {"rigid_up_to_degree": args.degree, "ok": ok,
               "failing_cycle": list(failing) if failing else None}
    _emit(args, payload, "rigid up to degree %d: %s%s"
          % (args.degree, ok, "" if ok else " (cycle %s)" % "*".join(failing)))
    return 0 if ok else 1


def cmd_coxeter(args):
    q = jsonio.quiver_from_json(_read_json(args.quiver))
    gcm = gcm_from_quiver(q)
    word = args.word.split(",")
    rep = is_reduced(gcm, word)
    payload = {"word": word, "reduced": rep.reduced,
               "failing_prefix": rep.failing_prefix}
    _emit(args, payload, "reduced: %s%s"
          % (rep.reduced, "" if rep.reduced else " (fails at prefix %d)" % rep.failing_prefix))
    return 0 if rep.reduced else 1


def cmd_qw(args):
    sw = birs_word(*_weights(args.weights))
    builder = qw_tilde if args.tilde else qw
    out = builder(sw.quiver, sw.word)
    payload = {"word": jsonio.word_to_json(sw.word),
               "star": jsonio.quiver_to_json(sw.quiver),
               "quiver": jsonio.quiver_to_json(out)}
    _emit(args, payload, "word %s -> %d vertices, %d arrows"
          % (",".join(sw.word), len(out.vertices), len(out.arrows)))
    return 0


def cmd_keller(args):
    pres = jsonio.presentation_from_json(_read_json(args.presentation))
    qp = keller_qp(pres)
    payload = jsonio.qp_to_json(qp)
    _emit(args, payload, "%d vertices, %d arrows, potential %s"
          % (len(qp.quiver.vertices), len(qp.quiver.arrows),
             jsonio.potential_to_text(qp.potential)))
    return 0


def cmd_verify(args):
    config = VerifyConfig(truncation=args.truncation if args.truncation != 16 else None,
                          only=args.only,
                          involution_samples=args.samples)
    report = verify_paper(config)
    if args.json:
        json.dump(report.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(report.to_text())
    return report.exit_code


def cmd_serve(args):
    from .service import serve
    state_dir = args.state_dir or os.environ.get("QPCAT_STATE_DIR")
    serve(args.port, state_dir)
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="qpcat",
                                     description="exact quiver-with-potential toolkit")
    parser.add_argument("--truncation", type=int, default=16,
                        help="degree bound for potentials and quotients (default 16)")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value given in the global position
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--truncation", type=int, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("build", help="construct a named object")
    p.add_argument("kind", choices=["five-vertex", "q2222", "squid", "ct", "genus"])
    p.add_argument("--weights", default="2,2,2")
    p.add_argument("--lambda", dest="lam", default="L")
    p.add_argument("--params", default="", help="extra squid parameters, comma separated")
    p.set_defaults(fn=cmd_build)

    p = add_parser("mutate", help="quiver mutation")
    p.add_argument("--quiver", required=True, help="quiver JSON file (- for stdin)")
    p.add_argument("--at", help="vertex to mutate")
    p.add_argument("--seq", help="comma separated mutation sequence")
    p.set_defaults(fn=cmd_mutate)

    p = add_parser("qpmutate", help="QP mutation (premutation + reduction)")
    p.add_argument("--qp", required=True, help="QP JSON file (- for stdin)")
    p.add_argument("--at", help="vertex to mutate")
    p.add_argument("--seq", help="comma separated mutation sequence")
    p.set_defaults(fn=cmd_qpmutate)

    p = add_parser("jacobian", help="truncated Jacobian dimensions")
    p.add_argument("--qp", required=True)
    p.set_defaults(fn=cmd_jacobian)

    p = add_parser("nondegen", help="bounded non-degeneracy exploration")
    p.add_argument("--qp", required=True)
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(fn=cmd_nondegen)

    p = add_parser("rigid", help="bounded rigidity check")
    p.add_argument("--qp", required=True)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--slack", type=int, default=4)
    p.set_defaults(fn=cmd_rigid)

    p = add_parser("coxeter", help="reduced-word checks")
    cox = p.add_subparsers(dest="subcommand", required=True)
    c = cox.add_parser("check", parents=[common],
                       help="root test for a word over a quiver")
    c.add_argument("--quiver", required=True)
    c.add_argument("--word", required=True, help="comma separated letters")
    c.set_defaults(fn=cmd_coxeter)

    p = add_parser("qw", help="word quiver of the star word family")
    p.add_argument("--weights", required=True)
    p.add_argument("--tilde", action="store_true", help="keep last occurrences")
    p.set_defaults(fn=cmd_qw)

    p = add_parser("keller", help="QP of an algebra presentation")
    p.add_argument("--presentation", required=True)
    p.set_defaults(fn=cmd_keller)

    p = add_parser("verify-paper", help="run the verification suite")
    p.add_argument("--only", help="substring filter on check names")
    p.add_argument("--samples", type=int, default=500)
    p.set_defaults(fn=cmd_verify)

    p = add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8420)
    p.add_argument("--state-dir", help="session directory (or QPCAT_STATE_DIR)")
    p.set_defaults(fn=cmd_serve)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
