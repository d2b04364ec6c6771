"""Command-line front end.

    ybx verify SYSTEM --ROLE SPEC ... [--samples N] [--symbolic] [--json]
    ybx solve-z --X SPEC [--emit-ybe] [--json]
    ybx orbit --W SPEC --X SPEC --Z SPEC [--word WORD] [--T SPEC --S SPEC]
              [--omega E --xi E --zeta E] [--check]
    ybx catalog list | show NAME | export --dir DIR

Matrix specs: ``catalog:NAME[param=expr,...]``, ``file:PATH`` or
``random[dim=n,seed=k]``.  Exit codes: 0 success, 1 mathematical failure,
2 usage or specification error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import catalog, solver, systems
from .errors import (ConstraintViolated, DivisionByZero, ExprSyntaxError,
                     NotInvertible, SymbolicInput, UnknownName, YbxError)
from .scalar import scalar_str
from .tensor import matrix_from_text, matrix_to_text, random_matrix
from . import exprparse

DEFAULT_SEED = 20211997


class UsageError(YbxError):
    pass


class _MatrixSpec:
    def __init__(self, text):
        self.text = text
        self.kind = None
        self.name = None
        self.pins = {}
        self.path = None
        self.dim = None
        self.seed = None
        self._parse(text)

    def _parse(self, text):
        if text.startswith("catalog:"):
            self.kind = "catalog"
            body = text[len("catalog:"):]
            if "[" in body:
                if not body.endswith("]"):
                    raise UsageError("malformed catalog spec %r" % text)
                self.name, args = body[:-1].split("[", 1)
                if args:
                    for item in args.split(","):
                        if "=" not in item:
                            raise UsageError("expected param=expr in %r" % text)
                        key, val = item.split("=", 1)
                        self.pins[key.strip()] = val.strip()
            else:
                self.name = body
        elif text.startswith("file:"):
            self.kind = "file"
            self.path = text[len("file:"):]
        elif text.startswith("random[") and text.endswith("]"):
            self.kind = "random"
            for item in text[len("random["):-1].split(","):
                if "=" not in item:
                    raise UsageError("expected dim=/seed= in %r" % text)
                key, val = item.split("=", 1)
                if key.strip() == "dim":
                    self.dim = int(val)
                elif key.strip() == "seed":
                    self.seed = int(val)
                else:
                    raise UsageError("unknown random parameter %r" % key)
            if self.dim is None or self.seed is None:
                raise UsageError("random spec needs dim and seed: %r" % text)
        else:
            raise UsageError("unrecognised matrix spec %r" % text)

    def free_params(self):
        if self.kind != "catalog":
            return []
        return [p for p in catalog.get(self.name).params if p not in self.pins]

    def resolve(self, rng=None, symbolic=False):
        """(matrix, provenance string).  For catalog specs with free
        parameters, a random admissible point is sampled from ``rng``
        unless ``symbolic`` keeps them symbolic."""
        if self.kind == "file":
            with open(self.path) as fh:
                matrix, _ = matrix_from_text(fh.read())
            return matrix, "file:%s" % self.path
        if self.kind == "random":
            return random_matrix(self.dim, self.seed), \
                "random[dim=%d,seed=%d]" % (self.dim, self.seed)
        entry = catalog.get(self.name)
        if symbolic or (not self.free_params()) or rng is None:
            assignment = dict(self.pins)
            matrix = catalog.instantiate(self.name, assignment)
            shown = assignment
        else:
            shown = catalog.sample_assignment(self.name, rng, pins=self.pins)
            matrix = catalog.instantiate(self.name, shown)
        args = ",".join("%s=%s" % (p, shown[p] if isinstance(shown[p], str)
                                   else scalar_str(shown[p]))
                        for p in entry.params if p in shown)
        desc = "catalog:%s[%s]" % (self.name, args) if args else "catalog:%s" % self.name
        return matrix, desc


def _take_role_args(tokens, valid_roles):
    """Extract --ROLE SPEC pairs from leftover argv tokens."""
    roles = {}
    k = 0
    while k < len(tokens):
        tok = tokens[k]
        if not tok.startswith("--"):
            raise UsageError("unexpected argument %r" % tok)
        role = tok[2:]
        if role not in valid_roles:
            raise UsageError("unknown role %r (expected one of %s)"
                             % (role, ", ".join(valid_roles)))
        if k + 1 >= len(tokens):
            raise UsageError("missing matrix spec after --%s" % role)
        roles[role] = _MatrixSpec(tokens[k + 1])
        k += 2
    return roles


# ---------------------------------------------------------------------------
# verify

def render_verify_text(data) -> str:
    lines = ["verify %s" % data["system"]]
    for sample in data["samples"]:
        lines.append("sample %d: %s" % (sample["index"],
                                        "PASS" if sample["verified"] else "FAIL"))
        for role, desc in sample["assignment"].items():
            lines.append("  %s = %s" % (role, desc))
        if not sample["verified"]:
            for eq in sample["report"]["equations"]:
                if not eq["zero"]:
                    lines.append("  equation %s: NONZERO (%d entries)"
                                 % (eq["label"], eq["nonzero_count"]))
                    for w in eq["witnesses"][:4]:
                        lines.append("    (%s|%s) = %s"
                                     % (",".join(map(str, w["row"])),
                                        ",".join(map(str, w["col"])), w["value"]))
    lines.append("overall: %s (%d sample%s)"
                 % ("PASS" if data["verified"] else "FAIL",
                    len(data["samples"]), "" if len(data["samples"]) == 1 else "s"))
    return "\n".join(lines) + "\n"


def cmd_verify(args, extra):
    sysdef = systems.system(args.system)
    roles = _take_role_args(extra, sysdef.roles)
    for role in sysdef.roles:
        if role not in roles:
            raise UsageError("role --%s not supplied" % role)
    sampled = any(spec.kind == "catalog" and spec.free_params()
                  for spec in roles.values())
    runs = 1 if (args.symbolic or not sampled) else args.samples
    rng = random.Random(args.seed)
    samples = []
    all_ok = True
    for run in range(runs):
        assignment = {}
        provenance = {}
        for role, spec in roles.items():
            matrix, desc = spec.resolve(rng=rng, symbolic=args.symbolic)
            assignment[role] = matrix
            provenance[role] = desc
        ok, rep = systems.verify(sysdef, assignment, provenance=provenance)
        all_ok = all_ok and ok
        samples.append({"index": run + 1, "assignment": provenance,
                        "verified": ok, "report": rep.to_dict()})
    data = {"command": "verify", "system": sysdef.name,
            "symbolic": bool(args.symbolic), "samples": samples,
            "verified": all_ok}
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        sys.stdout.write(render_verify_text(data))
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# solve-z

def render_solve_text(data) -> str:
    lines = ["solve-z %s" % data["X"]]
    lines.append("dimension %d (rank %d)" % (data["dimension"], data["rank"]))
    for k, mat in enumerate(data["basis"]):
        lines.append("basis %d:" % (k + 1))
        lines.extend("  " + ln for ln in mat.splitlines())
    if data.get("ybe_system") is not None:
        lines.append("cubic system for the top equation:")
        lines.extend("  " + ln for ln in data["ybe_system"].splitlines())
    return "\n".join(lines) + "\n"


def cmd_solve_z(args, extra):
    if extra:
        raise UsageError("unexpected arguments: %s" % " ".join(extra))
    spec = _MatrixSpec(args.X)
    matrix, desc = spec.resolve(rng=None, symbolic=True)
    space = solver.solve_z_linear(matrix)   # SymbolicInput -> exit 2
    data = {"command": "solve-z", "X": desc, "dimension": space.dim,
            "rank": space.rank,
            "basis": [matrix_to_text(m) for m in space.basis]}
    if args.emit_ybe:
        data["ybe_system"] = solver.filter_ybe(space).to_text()
    else:
        data["ybe_system"] = None
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        sys.stdout.write(render_solve_text(data))
    return 0


# ---------------------------------------------------------------------------
# orbit

def cmd_orbit(args, extra):
    roles = _take_role_args(extra, ("W", "X", "Z", "T", "S"))
    for role in ("W", "X", "Z"):
        if role not in roles:
            raise UsageError("role --%s not supplied" % role)
    triple = []
    for role in ("W", "X", "Z"):
        matrix, _ = roles[role].resolve(rng=None, symbolic=True)
        triple.append(matrix)
    t_mat = s_mat = None
    if "T" in roles:
        t_mat, _ = roles["T"].resolve(rng=None, symbolic=True)
    if "S" in roles:
        s_mat, _ = roles["S"].resolve(rng=None, symbolic=True)
    def scale(text):
        return exprparse.parse_scalar(text) if text else None
    spec = solver.TransformSpec(
        t_mat=t_mat, s_mat=s_mat, omega=scale(args.omega), xi=scale(args.xi),
        zeta=scale(args.zeta), word=solver.parse_word(args.word or ""))
    W, X, Z = solver.apply_transform(tuple(triple), spec)
    for label, mat in (("W", W), ("X", X), ("Z", Z)):
        print("%s:" % label)
        sys.stdout.write(matrix_to_text(mat))
    if args.check:
        ok, rep = systems.verify("QDOUBLE", {"W": W, "X": X, "Z": Z})
        print("check: %s" % ("PASS" if ok else "FAIL"))
        return 0 if ok else 1
    return 0


# ---------------------------------------------------------------------------
# catalog

def cmd_catalog(args, extra):
    if extra:
        raise UsageError("unexpected arguments: %s" % " ".join(extra))
    if args.action == "list":
        for item in catalog.list_catalog():
            cons = "; ".join(item["constraints"]) or "-"
            colour = " colour(%s)" % ",".join(item["colour"]) if item["colour"] else ""
            print("%-6s params=%s%s  constraints: %s"
                  % (item["name"], ",".join(item["params"]) or "-", colour, cons))
            print("       %s" % item["note"])
        return 0
    if args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs an entry name")
        entry = catalog.get(args.name)
        matrix = catalog.instantiate(args.name)
        base = matrix.base if hasattr(matrix, "base") else matrix
        var_names = list(entry.params) + (list(entry.colour) if entry.colour else [])
        sys.stdout.write(matrix_to_text(base, var_names=var_names))
        for label in entry.constraints.describe():
            print("constraint: %s" % label)
        if entry.witness:
            print("witness: " + ", ".join("%s=%s" % (p, e) for p, e in entry.witness))
        if entry.note:
            print("note: %s" % entry.note)
        return 0
    if args.action == "export":
        if not args.dir:
            raise UsageError("catalog export needs --dir")
        os.makedirs(args.dir, exist_ok=True)
        for name in catalog.names():
            entry = catalog.get(name)
            matrix = catalog.instantiate(name)
            base = matrix.base if hasattr(matrix, "base") else matrix
            var_names = list(entry.params) + (list(entry.colour) if entry.colour else [])
            path = os.path.join(args.dir, "%s.mat" % name)
            with open(path, "w") as fh:
                fh.write(matrix_to_text(base, var_names=var_names))
            print("wrote %s" % path)
        return 0
    raise UsageError("unknown catalog action %r" % args.action)


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ybx",
        description="exact Yang-Baxter system toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a system on matrix assignments")
    p.add_argument("system")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("solve-z", help="nullspace of the linear Z equation")
    p.add_argument("--X", dest="X", required=True)
    p.add_argument("--emit-ybe", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("orbit", help="apply a symmetry transformation")
    p.add_argument("--word", default="")
    p.add_argument("--omega", default=None)
    p.add_argument("--xi", default=None)
    p.add_argument("--zeta", default=None)
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("catalog", help="browse or export the catalog")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("--dir", default=None)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit:
        return 2
    try:
        if args.command == "verify":
            return cmd_verify(args, extra)
        if args.command == "solve-z":
            return cmd_solve_z(args, extra)
        if args.command == "orbit":
            return cmd_orbit(args, extra)
        if args.command == "catalog":
            return cmd_catalog(args, extra)
        raise UsageError("unknown command %r" % args.command)
    except (UsageError, UnknownName, ConstraintViolated, SymbolicInput,
            ExprSyntaxError, DivisionByZero, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except NotInvertible as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
