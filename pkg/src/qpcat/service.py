"""HTTP session API backing the interactive explorer.

Sessions hold a current QP, an undo stack and an operation log, persisted
as one JSON file each under the state directory (restart-safe, replayable).
Mutations are serialized per session by a lock; different sessions proceed
concurrently. All computation below is pure, so the only shared mutable
state is the session table itself.

Routes:
  GET  /builders                -> catalog of constructors
  POST /session                 {"builder": kind, "params": {...}, "truncation": N}
  GET  /session/<id>            -> current state + layout hints
  POST /session/<id>/mutate     {"vertex": v, "mode": "quiver" | "qp"}
  POST /session/<id>/undo
Errors: 400 malformed body, 404 unknown session, 409 illegal mutation.
"""

from __future__ import annotations

import json
import math
import os
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .constructions import canonical_ct_quiver, five_vertex_qp, q2222_qp, squid_qp
from .jacobian import jacobian_dimension
from .jsonio import parse_scalar, potential_to_text, qp_from_json, qp_to_json
from .mutation import MutationError, qp_mutate
from .potential import QP, Potential
from .quiver import QuiverError, is_acyclic, mutate_quiver
from .scalars import RF_LAM


class ServiceError(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status
        self.message = message


BUILDERS = {
    "five-vertex": {"params": []},
    "q2222": {"params": ["lambda"]},
    "squid": {"params": ["weights", "lambdas"]},
    "ct": {"params": ["weights"]},
}


def build_qp(kind, params):
    params = params or {}
    try:
        if kind == "five-vertex":
            return five_vertex_qp()
        if kind == "q2222":
            lam = parse_scalar(params.get("lambda", "L"))
            return q2222_qp(lam)
        if kind == "squid":
            weights = [int(w) for w in params["weights"]]
            lambdas = [parse_scalar(x) for x in params.get("lambdas", [])]
            return squid_qp(weights, lambdas)
        if kind == "ct":
            weights = [int(w) for w in params["weights"]]
            if len(weights) != 3:
                raise ValueError("ct needs exactly three weights")
            q = canonical_ct_quiver(*weights)
            return QP(q, Potential(q))
    except ServiceError:
        raise
    except (KeyError, TypeError):
        raise ServiceError(400, "missing or malformed params for builder %r" % kind)
    except (ValueError, QuiverError) as exc:
        raise ServiceError(400, str(exc))
    raise ServiceError(400, "unknown builder %r (see GET /builders)" % kind)


def layout_hints(quiver):
    """Deterministic circular positions; the client may refine them."""
    n = max(len(quiver.vertices), 1)
    out = {}
    for i, v in enumerate(quiver.vertices):
        angle = 2 * math.pi * i / n
        out[v] = [round(math.cos(angle), 6), round(math.sin(angle), 6)]
    return out


def effective_path(log):
    """Mutation path net of undos; its length equals the undo-stack depth."""
    path = []
    for entry in log:
        if entry["op"] == "mutate":
            path.append(entry["vertex"])
        else:
            path.pop()
    return path


def state_payload(session, verbose=False):
    qp = qp_from_json(session["current"])
    payload = {
        "id": session["id"],
        "qp": session["current"],
        "two_acyclic": qp.quiver.is_two_acyclic(),
        "acyclic": is_acyclic(qp.quiver),
        "truncation": session["truncation"],
        "layout": layout_hints(qp.quiver),
        "history": effective_path(session["log"]),
        "log": session["log"],
        "undo_depth": len(session["undo"]),
    }
    if session.get("last_dims") is not None:
        payload["dims"] = session["last_dims"]
    if verbose:
        payload["potential_text"] = potential_to_text(qp.potential)
    return payload


class SessionStore:
    """File-backed session table with per-session locking."""

    MAX_UNDO = 256

    def __init__(self, state_dir):
        self.state_dir = state_dir
        os.makedirs(state_dir, exist_ok=True)
        self._locks = {}
        self._table_lock = threading.Lock()

    def _lock_for(self, sid):
        with self._table_lock:
            if sid not in self._locks:
                self._locks[sid] = threading.Lock()
            return self._locks[sid]

    def _path(self, sid):
        return os.path.join(self.state_dir, sid + ".json")

    def _save(self, session):
        tmp = self._path(session["id"]) + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(session, fh)
        os.replace(tmp, self._path(session["id"]))

    def load(self, sid):
        path = self._path(sid)
        if not os.path.exists(path):
            raise ServiceError(404, "unknown session %r" % sid)
        with open(path) as fh:
            return json.load(fh)

    def create(self, builder, params, truncation=16):
        qp = build_qp(builder, params)
        session = {
            "id": uuid.uuid4().hex,
            "created": time.time(),
            "truncation": int(truncation),
            "builder": {"kind": builder, "params": params or {}},
            "log": [],
            "undo": [],
            "current": qp_to_json(qp),
            "last_dims": None,
        }
        self._save(session)
        return session

    def mutate(self, sid, vertex, mode):
        with self._lock_for(sid):
            session = self.load(sid)
            qp = qp_from_json(session["current"])
            vertex = str(vertex)
            if mode == "quiver":
                try:
                    new_quiver = mutate_quiver(qp.quiver, vertex)
                except QuiverError as exc:
                    raise ServiceError(409, str(exc))
                # arrow names change under mutation, so the potential does not
                # transport; quiver mode tracks the quiver alone
                new_qp = QP(new_quiver, Potential(new_quiver))
                session["last_dims"] = None
            elif mode == "qp":
                try:
                    new_qp = qp_mutate(qp, vertex, session["truncation"])
                except (MutationError, QuiverError) as exc:
                    raise ServiceError(409, str(exc))
                res = jacobian_dimension(new_qp, min(session["truncation"], 12))
                session["last_dims"] = res.report()
            else:
                raise ServiceError(400, "mode must be 'quiver' or 'qp'")
            session["undo"].append(session["current"])
            if len(session["undo"]) > self.MAX_UNDO:
                session["undo"] = session["undo"][-self.MAX_UNDO:]
            session["current"] = qp_to_json(new_qp)
            session["log"].append({"op": "mutate", "vertex": vertex, "mode": mode})
            self._save(session)
            return session

    def undo(self, sid):
        with self._lock_for(sid):
            session = self.load(sid)
            if not session["undo"]:
                raise ServiceError(409, "nothing to undo")
            session["current"] = session["undo"].pop()
            session["log"].append({"op": "undo"})
            session["last_dims"] = None
            self._save(session)
            return session

    def replay(self, sid):
        """Rebuild the session state from its creation record and log."""
        session = self.load(sid)
        qp = build_qp(session["builder"]["kind"], session["builder"]["params"])
        stack = []
        current = qp_to_json(qp)
        for entry in session["log"]:
            if entry["op"] == "mutate":
                qp = qp_from_json(current)
                if entry["mode"] == "quiver":
                    nq = mutate_quiver(qp.quiver, entry["vertex"])
                    new_qp = QP(nq, Potential(nq))
                else:
                    new_qp = qp_mutate(qp, entry["vertex"], session["truncation"])
                stack.append(current)
                if len(stack) > self.MAX_UNDO:
                    stack = stack[-self.MAX_UNDO:]
                current = qp_to_json(new_qp)
            elif entry["op"] == "undo":
                current = stack.pop()
        return current


def make_handler(store):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # silent by default; tests stay clean
            pass

        def _send(self, status, payload):
            body = json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(body)

        def _body(self):
            length = int(self.headers.get("Content-Length") or 0)
            if length == 0:
                return {}
            try:
                return json.loads(self.rfile.read(length).decode())
            except (ValueError, UnicodeDecodeError):
                raise ServiceError(400, "request body is not valid JSON")

        def do_OPTIONS(self):
            self._send(204, {})

        def do_GET(self):
            try:
                parts = [p for p in self.path.split("?")[0].split("/") if p]
                if parts == ["builders"]:
                    self._send(200, {"builders": [
                        {"kind": k, "params": v["params"]} for k, v in BUILDERS.items()]})
                elif parts == ["health"]:
                    self._send(200, {"ok": True})
                elif len(parts) == 2 and parts[0] == "session":
                    session = store.load(parts[1])
                    verbose = "verbose" in self.path
                    self._send(200, state_payload(session, verbose=verbose))
                else:
                    self._send(404, {"error": "no such route"})
            except ServiceError as exc:
                self._send(exc.status, {"error": exc.message})

        def do_POST(self):
            try:
                parts = [p for p in self.path.split("?")[0].split("/") if p]
                body = self._body()
                if parts == ["session"]:
                    if "builder" not in body:
                        raise ServiceError(400, "body must name a builder")
                    session = store.create(body["builder"], body.get("params"),
                                           body.get("truncation", 16))
                    self._send(200, state_payload(session))
                elif len(parts) == 3 and parts[0] == "session" and parts[2] == "mutate":
                    if "vertex" not in body:
                        raise ServiceError(400, "body must name a vertex")
                    session = store.mutate(parts[1], body["vertex"],
                                           body.get("mode", "quiver"))
                    self._send(200, state_payload(session))
                elif len(parts) == 3 and parts[0] == "session" and parts[2] == "undo":
                    session = store.undo(parts[1])
                    self._send(200, state_payload(session))
                elif len(parts) == 3 and parts[0] == "session" and parts[2] == "replay":
                    current = store.replay(parts[1])
                    self._send(200, {"current": current})
                else:
                    self._send(404, {"error": "no such route"})
            except ServiceError as exc:
                self._send(exc.status, {"error": exc.message})

    return Handler


def make_server(port=0, state_dir=None):
    """Bound but not yet serving; .serve_forever() to run, .server_port to inspect."""
    if state_dir is None:
        state_dir = os.environ.get("QPCAT_STATE_DIR", os.path.join(os.getcwd(), "qpcat-state"))
    store = SessionStore(state_dir)
    server = ThreadingHTTPServer(("127.0.0.1", port), make_handler(store))
    server.qpcat_store = store
    return server


def serve(port, state_dir=None):
    server = make_server(port, state_dir)
    print("qpcat service on http://127.0.0.1:%d (state: %s)"
          % (server.server_port, server.qpcat_store.state_dir))
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
