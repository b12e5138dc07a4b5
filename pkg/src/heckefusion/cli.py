"""Command-line front end.

    heckefusion fusion --shape 2,1 --tableau row --kind G
    heckefusion verify --suite fusion --lmax 4
    heckefusion hook --lambda 2,1 --mu 1 --t 5
    heckefusion eigen --lambda 2 --mu 1 --z 1 --w 5
    heckefusion rep --shape 2,1 --emit json

Exit status: 0 on success, 1 if a verification fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path

from . import combinatorics as C
from . import fusion as FU
from . import intertwiner as IT
from . import seminormal as SN
from . import verify as V
from .scalars import RationalFunction, parse_rf

log = logging.getLogger("heckefusion")

HARD_CAP = 6
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str = ""
    shape: str | None = None
    tableau: str = "column"
    kind: str = "F"
    suite: str = "all"
    lam: str | None = None
    mu: str | None = None
    t: str | None = None
    q: str | None = None
    z: str = "1"
    w: str = "3"
    iseq: str | None = None
    jseq: str | None = None
    lmax: int | None = None
    allow_large: bool = False
    jobs: int = 1
    emit: str = "text"
    seed: int = 0
    timings: bool = False

    def effective_lmax(self, default: int) -> int:
        cap = HARD_CAP
        value = self.lmax
        if value is None and os.environ.get("HECKE_LMAX"):
            value = int(os.environ["HECKE_LMAX"])
        if value is None:
            value = default
        if value > cap:
            if not self.allow_large:
                raise UsageError(f"lmax {value} exceeds the cap {cap}; pass --allow-large to override")
            log.warning("lmax %d exceeds the cap %d; this may take a long time", value, cap)
        return value


_KEYS = {f.name for f in fields(RunConfig)} - {"command"}


def read_config(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment; keys as the long flags."""
    out = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        key = "lam" if key == "lambda" else key
        if key not in _KEYS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = value
    return out


def _coerce(key: str, value):
    kind = {f.name: f.type for f in fields(RunConfig)}[key]
    if "bool" in str(kind):
        return value if isinstance(value, bool) else str(value).lower() in ("1", "true", "yes", "on")
    if "int" in str(kind) and value is not None:
        return int(value)
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("text", "json"))
    common.add_argument("--config", help="key = value file with the same keys as the flags")
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int, help="worker processes for independent suites")
    common.add_argument("--lmax", type=int)
    common.add_argument("--allow-large", action="store_true", default=None, help="permit lmax above the cap")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="heckefusion", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fusion", parents=[common], help="print F, G or E for a tableau")
    f.add_argument("--shape")
    f.add_argument("--tableau", help="column | row | #index | rows:[[1,2],[3]] | 1,2/3")
    f.add_argument("--kind", choices=("F", "G", "E"))

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=V.SUITES + ("all",))
    v.add_argument("--timings", action="store_true", default=None, help="include timings in JSON output")

    h = sub.add_parser("hook", parents=[common], help="hook scalars and the mixed hook ratio")
    h.add_argument("--lambda", dest="lam")
    h.add_argument("--mu")
    h.add_argument("--t")
    h.add_argument("--q", help="specialize q to this rational number")

    e = sub.add_parser("eigen", parents=[common], help="check predicted eigenvalues of J")
    e.add_argument("--lambda", dest="lam")
    e.add_argument("--mu")
    e.add_argument("--z")
    e.add_argument("--w")
    e.add_argument("--iseq")
    e.add_argument("--jseq")

    r = sub.add_parser("rep", parents=[common], help="generator matrices of an irreducible module")
    r.add_argument("--shape")
    return p


def make_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    values = {}
    if args.config:
        values.update(read_config(args.config))
    for key, value in vars(args).items():
        if key in _KEYS and value is not None:
            values[key] = value
    cfg = RunConfig(command=args.command)
    for key, value in values.items():
        setattr(cfg, key, _coerce(key, value))
    return cfg


# --- parsing helpers --------------------------------------------------------

def _partition(text: str | None, what: str) -> C.Partition:
    if not text:
        raise UsageError(f"missing {what}")
    try:
        lam = C.Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}") from exc
    if lam.size < 1:
        raise UsageError(f"{what} must be non-empty")
    return lam


def _scalar(text: str, what: str) -> RationalFunction:
    try:
        return parse_rf(str(text))
    except Exception as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}") from exc


def _rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}") from exc


def _seq(text: str | None):
    return None if text is None else [tuple(int(x) for x in text.split(","))]


def select_tableau(lam: C.Partition, sel: str) -> C.StandardTableau:
    sel = (sel or "column").strip()
    if sel == "column":
        return C.column_tableau(lam)
    if sel == "row":
        return C.row_tableau(lam)
    if sel.startswith("#"):
        tabs = C.standard_tableaux(lam)
        k = int(sel[1:])
        if not 0 <= k < len(tabs):
            raise UsageError(f"tableau index {k} out of range 0..{len(tabs) - 1}")
        return tabs[k]
    try:
        if sel.startswith("rows:"):
            rows = json.loads(sel[5:])
        else:
            rows = [[int(x) for x in r.split(",")] for r in sel.split("/")]
        tab = C.StandardTableau(tuple(tuple(r) for r in rows))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad tableau {sel!r}: {exc}") from exc
    if tab.shape != lam:
        raise UsageError(f"tableau {sel} does not have shape {lam}")
    return tab


# --- commands ---------------------------------------------------------------

def cmd_fusion(cfg: RunConfig):
    lam = _partition(cfg.shape, "--shape")
    tab = select_tableau(lam, cfg.tableau)
    kind = cfg.kind.upper()
    elem = {"F": FU.fuse_F, "G": FU.fuse_G, "E": FU.diagonal_element}[kind](tab)
    payload = {"shape": list(lam.parts), "tableau": tab.to_json(), "kind": kind, "element": elem.to_json()}
    return EXIT_OK, payload, str(elem)


def _suite_names(cfg: RunConfig):
    return list(V.SUITES) if cfg.suite == "all" else [cfg.suite]


def cmd_verify(cfg: RunConfig):
    names = _suite_names(cfg)
    lmax = None
    if cfg.lmax is not None or os.environ.get("HECKE_LMAX"):
        lmax = cfg.effective_lmax(5)
    reports = V.run_suites(names, lmax, cfg.jobs)
    if cfg.seed is not None:
        reports.append(V.random_spot_checks(cfg.seed))
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "seed": cfg.seed, "suites": [r.to_json(timings=cfg.timings) for r in reports]}
    text = "\n".join(r.to_text() for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), payload, text


def cmd_hook(cfg: RunConfig):
    lam = _partition(cfg.lam, "--lambda")
    hff, hf = C.hook_scalar_hff(lam), C.hook_scalar_hf(lam)
    ok = hff == hf
    payload = {"lambda": list(lam.parts), "h": str(hff), "h_json": hff.to_json(), "forms_agree": ok}
    lines = [f"h_{lam}(q) = {hff}", f"product forms agree: {ok}"]
    if cfg.q is not None:
        q0 = _rational(cfg.q, "--q")
        val = hff.at(q0)
        payload["h_at_q"] = str(val)
        lines.append(f"h_{lam}({q0}) = {val}")
    if cfg.mu:
        mu = _partition(cfg.mu, "--mu")
        t = _scalar(cfg.t if cfg.t is not None else "q", "--t")
        closed = C.mixed_hook_ratio(lam, mu, t)
        rep = IT.corollary11_report(lam, mu, t)
        ok = ok and rep["ok"]
        payload.update({"mu": list(mu.parts), "t": str(t), "mixed_ratio": str(closed),
                        "eigenvalue_ratio": str(rep["ratio"]), "ratio_agrees": rep["ok"]})
        lines.append(f"h_({lam}),({mu})(t={t}) = {closed}")
        lines.append(f"eigenvalue ratio agrees: {rep['ok']}")
        if cfg.q is not None:
            payload["mixed_at_q"] = str(closed.at(_rational(cfg.q, "--q")))
            lines.append(f"  at q={cfg.q}: {payload['mixed_at_q']}")
    payload["ok"] = ok
    return (EXIT_OK if ok else EXIT_FAIL), payload, "\n".join(lines)


def cmd_eigen(cfg: RunConfig):
    lam, mu = _partition(cfg.lam, "--lambda"), _partition(cfg.mu, "--mu")
    lmax = cfg.effective_lmax(HARD_CAP)
    if lam.size + mu.size > lmax:
        raise UsageError(f"|lambda| + |mu| = {lam.size + mu.size} exceeds lmax {lmax}")
    z, w = _scalar(cfg.z, "--z"), _scalar(cfg.w, "--w")
    try:
        setup = IT.induced_setup(lam, mu, z=z, w=w)
        report = IT.eigen_report(setup, _seq(cfg.iseq), _seq(cfg.jseq))
    except (IT.NotGeneric, C.InvalidInsertion) as exc:
        raise UsageError(str(exc)) from exc
    payload = report.to_json()
    payload["predicted"] = {k: str(v) for k, v in report.predicted.items()}
    lines = [f"J on the induced ideal for lambda={lam}, mu={mu}, z={z}, w={w}"]
    for key, r in report.predicted.items():
        checks = report.verified[key]
        flags = ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items())
        lines.append(f"  {key}: r = {r}  [{flags}]")
    return (EXIT_OK if report.ok else EXIT_FAIL), payload, "\n".join(lines)


def cmd_rep(cfg: RunConfig):
    lam = _partition(cfg.shape, "--shape")
    if lam.size > cfg.effective_lmax(HARD_CAP):
        raise UsageError(f"|lambda| = {lam.size} exceeds lmax")
    rep = SN.build_rep(lam)
    lines = [f"V_{lam}: dimension {rep.dimension}, basis " + " ".join(str(t) for t in rep.basis)]
    for k in range(1, lam.size):
        lines.append(f"T_{k}:")
        for row in rep.matrix(k):
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
    return EXIT_OK, rep.to_json(), "\n".join(lines)


COMMANDS = {"fusion": cmd_fusion, "verify": cmd_verify, "hook": cmd_hook, "eigen": cmd_eigen, "rep": cmd_rep}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.emit not in ("text", "json"):
        raise UsageError("--emit must be text or json")
    random.seed(cfg.seed)
    code, payload, text = COMMANDS[cfg.command](cfg)
    if cfg.emit == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + "\n")
    return code


def main(argv=None) -> int:
    try:
        cfg = make_config(argv)
        return run(cfg)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except (UsageError, C.InvalidInsertion, FileNotFoundError) as exc:
        print(f"heckefusion: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
