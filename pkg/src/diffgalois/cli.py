"""Command line front end.

    diffgalois check-flat CONN        exit 0 if flat, 10 if not
    diffgalois closure INPUT          Lie algebra generated by the matrices
    diffgalois envelope INPUT         algebraic hull of that Lie algebra
    diffgalois galois CONN            differential Galois group (flat CONN)
    diffgalois graded-dims ...        dimensions of L_beta by degree
    diffgalois forge --target sl3 --genus 2 [--out conn.json]

INPUT is a connection file or a bare JSON array of matrices.  Reports go
to stdout as JSON; a one-line human summary goes to stderr.

Exit codes: 0 success, 10 mathematically negative answer (not flat),
64 usage error, 65 malformed input, 70 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import connection as conn_mod
from .envelope import galois_group_of, group_envelope
from .errors import (DiffGaloisError, GenusTooSmall, InvariantBreach, MalformedInput, NotFlat,
                     ResourceCapExceeded, UnknownTarget)
from .forge import SUPPORTED_TARGETS, builtin_pair, forge_connection
from .formats import (beta_from_json, connection_from_json, connection_to_json, dumps, load,
                      matrix_list_from_json)
from .freelie import DEFAULT_MAX_COORDS, DEFAULT_MAX_DEGREE, graded_dims
from .geometry import abelian_model, curve_model
from .liealg import generated, report as lie_report

EXIT_OK = 0
EXIT_NOT_FLAT = 10
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_SOFTWARE = 70

COMMANDS = ("check-flat", "closure", "envelope", "galois", "graded-dims", "forge")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    out: str | None = None
    max_degree: int = DEFAULT_MAX_DEGREE
    max_coords: int = DEFAULT_MAX_COORDS
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.max_degree < 1 or self.max_coords < 1:
            raise UsageError("caps must be positive")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diffgalois", description="Differential Galois groups of connections on trivial bundles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("check-flat", help="curvature and flatness of a connection").add_argument("input")
    sub.add_parser("closure", help="Lie algebra generated by the matrices").add_argument("input")
    sub.add_parser("envelope", help="algebraic hull of the generated Lie algebra").add_argument("input")
    sub.add_parser("galois", help="differential Galois group of a flat connection").add_argument("input")
    gd = sub.add_parser("graded-dims", help="graded dimensions of L_beta")
    src = gd.add_mutually_exclusive_group(required=True)
    src.add_argument("--model", choices=("curve", "abelian"))
    src.add_argument("--beta", help="wedge data JSON file")
    gd.add_argument("--genus", type=int)
    gd.add_argument("--dim", type=int)
    gd.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    gd.add_argument("--max-coords", type=int, default=DEFAULT_MAX_COORDS)
    fg = sub.add_parser("forge", help="connection on a curve with a prescribed Galois group")
    fg.add_argument("--target", required=True, help=f"one of {', '.join(SUPPORTED_TARGETS)}")
    fg.add_argument("--genus", type=int, required=True)
    fg.add_argument("--out")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command,
                    inputs=[ns.input] if getattr(ns, "input", None) else [],
                    out=getattr(ns, "out", None),
                    max_degree=getattr(ns, "max_degree", DEFAULT_MAX_DEGREE),
                    max_coords=getattr(ns, "max_coords", DEFAULT_MAX_COORDS))
    for key in ("model", "beta", "genus", "dim", "target"):
        if getattr(ns, key, None) is not None:
            cfg.options[key] = getattr(ns, key)
    return cfg


def _load_matrices(path):
    obj = load(path)
    if isinstance(obj, list):
        return matrix_list_from_json(obj), None
    c = connection_from_json(obj)
    return list(c.matrices), c.rank


def _cmd_check_flat(cfg, out, err):
    c = connection_from_json(load(cfg.inputs[0]))
    rep = conn_mod.curvature(c)
    out.write(dumps({"flat": rep.flat, "components": list(rep.components)}))
    nonzero = sum(not r.is_zero() for r in rep.components)
    err.write(f"rank {c.rank}, g={c.beta.g}, h={c.beta.h}: "
              f"{'flat' if rep.flat else f'NOT flat ({nonzero} nonzero component(s))'}\n")
    return EXIT_OK if rep.flat else EXIT_NOT_FLAT


def _cmd_closure(cfg, out, err):
    mats, rank = _load_matrices(cfg.inputs[0])
    L = generated(mats, rank)
    rep = lie_report(L)
    out.write(dumps(rep))
    err.write(f"generated Lie algebra: dim {L.dim} in gl_{L.ambient}\n")
    return EXIT_OK


def _cmd_envelope(cfg, out, err):
    mats, rank = _load_matrices(cfg.inputs[0])
    rep = group_envelope(generated(mats, rank))
    out.write(dumps(rep.to_dict()))
    err.write(f"hull dim {rep.hull.dim} (input dim {rep.input.dim}), exact={rep.exact}\n")
    return EXIT_OK


def _cmd_galois(cfg, out, err):
    c = connection_from_json(load(cfg.inputs[0]))
    rep = galois_group_of(c)
    d = rep.to_dict()
    d["kind"] = rep.kind
    out.write(dumps(d))
    inv = rep.invariants_of_hull
    err.write(f"differential Galois group: Lie algebra of dim {rep.hull.dim} in gl_{c.rank}, "
              f"semisimple={inv['semisimple']}, exact={rep.exact}\n")
    return EXIT_OK


def _cmd_graded_dims(cfg, out, err):
    opts = cfg.options
    if "beta" in opts:
        beta = beta_from_json(load(opts["beta"]))
    elif opts.get("model") == "curve":
        if "genus" not in opts:
            raise UsageError("--model curve needs --genus")
        beta = curve_model(opts["genus"])
    else:
        if "dim" not in opts:
            raise UsageError("--model abelian needs --dim")
        beta = abelian_model(opts["dim"])
    q = graded_dims(beta, cfg.max_degree, cfg.max_coords)
    out.write(dumps({"g": beta.g, "h": beta.h, "dims": q.dims}))
    err.write(f"g={beta.g}, h={beta.h}: dims {q.dims}\n")
    return EXIT_OK


def _cmd_forge(cfg, out, err):
    pair = builtin_pair(cfg.options["target"])
    c = forge_connection(pair, cfg.options["genus"])
    text = dumps(connection_to_json(c))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        err.write(f"wrote {cfg.out}: rank {c.rank} connection over a genus-{cfg.options['genus']} curve\n")
    else:
        out.write(text)
    return EXIT_OK


_DISPATCH = {
    "check-flat": _cmd_check_flat,
    "closure": _cmd_closure,
    "envelope": _cmd_envelope,
    "galois": _cmd_galois,
    "graded-dims": _cmd_graded_dims,
    "forge": _cmd_forge,
}


def run(config: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        return _DISPATCH[config.command](config, out, err)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except (UnknownTarget, GenusTooSmall, ResourceCapExceeded) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except NotFlat as e:
        err.write(f"not flat: {e}\n")
        return EXIT_NOT_FLAT
    except MalformedInput as e:
        err.write(f"malformed input: {e}\n")
        return EXIT_DATAERR
    except InvariantBreach as e:
        err.write(f"internal invariant breach: {e}\n")
        return EXIT_SOFTWARE
    except DiffGaloisError as e:
        err.write(f"malformed input: {e}\n")
        return EXIT_DATAERR


def main(argv=None, out=None, err=None) -> int:
    err_stream = sys.stderr if err is None else err
    try:
        cfg = config_from_args(build_parser().parse_args(argv))
    except UsageError as e:
        err_stream.write(f"usage error: {e}\n")
        return EXIT_USAGE
    return run(cfg, out, err)


if __name__ == "__main__":
    sys.exit(main())
