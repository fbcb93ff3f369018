"""Command line front end.

Every command resolves its request fully (normalized generators, explicit
window), computes, and renders either text, JSON or LaTeX.  JSON is the
source of truth: the text and LaTeX views are derived from the same result
dictionary, and the emitted JSON embeds the resolved request so the exact
invocation can be replayed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .ext import ext_graded, ext_map_parts
from .ideals import (
    IdealSpec,
    normalize,
    power_gens,
    radical_index,
    saturate,
    symbolic_gens,
)
from .kodaira import kodaira_check, sing_codim
from .partitions import Partition
from .regularity import (
    NEG_INF,
    has_linear_resolution,
    reg_power_details,
    reg_quotient,
)
from .schur import graded_table_to_json, quotient_graded_dim
from .zset import zset_general, zset_power

SCHEMA = "detthick/1"


class IdealSpecSyntaxError(ValueError):
    """Bad ideal grammar; carries the offending position in the input string."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ParsedIdeal:
    """An ideal together with how it was named on the command line."""

    def __init__(self, ideal: IdealSpec, kind: str, p: Optional[int], d: Optional[int]):
        self.ideal = ideal
        self.kind = kind
        self.p = p
        self.d = d


def _int_at(text: str, token: str, pos: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise IdealSpecSyntaxError(f"expected an integer {what}, got {token!r}", pos) from None


def parse_ideal_spec(text: str, n: int) -> ParsedIdeal:
    """Parse the ideal grammar.

    power:p:d | symbolic:p:d | satpower:p:d | minors:p | gens:z1;z2;...
    where each z is a comma form like 2,1,1 and the empty partition is ""
    or "0".
    """
    head, sep, rest = text.partition(":")
    if not sep:
        raise IdealSpecSyntaxError(f"missing ':' after ideal kind {text!r}", len(text))
    base = len(head) + 1
    if head in ("power", "symbolic", "satpower"):
        tokens = rest.split(":")
        if len(tokens) != 2:
            raise IdealSpecSyntaxError(f"{head} needs p:d", base)
        p = _int_at(text, tokens[0], base, "p")
        d = _int_at(text, tokens[1], base + len(tokens[0]) + 1, "d")
        if not 1 <= p <= n:
            raise IdealSpecSyntaxError(f"need 1 <= p <= n={n}, got p={p}", base)
        if d < 1:
            raise IdealSpecSyntaxError(f"need d >= 1, got d={d}", base + len(tokens[0]) + 1)
        if head == "power":
            return ParsedIdeal(power_gens(p, d, n), head, p, d)
        if head == "symbolic":
            return ParsedIdeal(symbolic_gens(p, d, n), head, p, d)
        return ParsedIdeal(saturate(power_gens(p, d, n), 1), head, p, d)
    if head == "minors":
        p = _int_at(text, rest, base, "p")
        if not 1 <= p <= n:
            raise IdealSpecSyntaxError(f"need 1 <= p <= n={n}, got p={p}", base)
        return ParsedIdeal(IdealSpec(n, frozenset([Partition([1] * p)])), head, p, 1)
    if head == "gens":
        gens = []
        pos = base
        for tok in rest.split(";"):
            try:
                gens.append(Partition.from_text(tok))
            except ValueError as exc:
                raise IdealSpecSyntaxError(str(exc), pos) from None
            pos += len(tok) + 1
        return ParsedIdeal(normalize(n, gens), head, None, None)
    raise IdealSpecSyntaxError(f"unknown ideal kind {head!r}", 0)


def _gens_text(X: IdealSpec) -> str:
    return "gens:" + ";".join(str(g) for g in X.sorted_gens())


def _reg_json(v) -> Optional[int]:
    return None if v == NEG_INF else int(v)


# ---------------------------------------------------------------- rendering


def _render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _fmt_partition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")" if parts else "(0)"


def _fmt_reg(v: Optional[int]) -> str:
    return "-inf" if v is None else str(v)


def _latex_table(header: list[str], rows: list[list[str]]) -> str:
    cols = "l" * len(header)
    lines = ["\\begin{tabular}{" + cols + "}", " & ".join(header) + " \\\\ \\hline"]
    for row in rows:
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return _render_json(doc)
    cmd = doc["command"]
    req, res = doc["request"], doc["result"]
    if fmt == "latex":
        return _RENDER_LATEX[cmd](req, res)
    return _RENDER_TEXT[cmd](req, res)


def _text_zset(req, res) -> str:
    lines = [f"factor labels for {req['ideal']['gens']} (n={req['n']}): {res['count']}"]
    for pair in res["pairs"]:
        lines.append(f"  z={_fmt_partition(pair['z'])}  l={pair['l']}")
    return "\n".join(lines) + "\n"


def _latex_zset(req, res) -> str:
    rows = [[f"${_fmt_partition(p['z'])}$", str(p["l"])] for p in res["pairs"]]
    return _latex_table(["$z$", "$l$"], rows)


def _text_table_block(table: dict) -> list[str]:
    return [f"  degree {r}: dim {v}" for r, v in sorted(table.items(), key=lambda kv: int(kv[0]))]


def _text_ext(req, res) -> str:
    win = res["window"]
    lines = [
        f"Ext^{req['cohdeg']} of the quotient, m={req['m']} n={req['n']}, "
        f"window {win if win else 'empty'}"
    ]
    for c in res["components"]:
        lines.append(
            f"  z={_fmt_partition(c['z'])} l={c['l']} s={c['s']} t={tuple(c['t'])}"
            f" lambda={tuple(c['lambda'])} degree={c['degree']} dim={c['dim']}"
        )
    lines.extend(_text_table_block(res["table"]))
    lines.append(f"  total dim in window: {res['total']}")
    return "\n".join(lines) + "\n"


def _latex_ext(req, res) -> str:
    rows = [
        [
            f"${_fmt_partition(c['z'])}$",
            str(c["l"]),
            str(c["s"]),
            f"${tuple(c['t'])}$",
            f"${tuple(c['lambda'])}$",
            str(c["degree"]),
            c["dim"],
        ]
        for c in res["components"]
    ]
    return _latex_table(["$z$", "$l$", "$s$", "$t$", "$\\lambda$", "deg", "dim"], rows)


def _text_ext_map(req, res) -> str:
    lines = [
        f"Ext^{req['cohdeg']} map parts for the inclusion, m={req['m']} n={req['n']}, "
        f"window {res['window'] if res['window'] else 'empty'}"
    ]
    for name in ("kernel", "image", "cokernel"):
        part = res[name]
        labels = " ".join(
            f"({_fmt_partition(p['z'])},{p['l']})" for p in part["pairs"]
        )
        lines.append(f"{name}: labels [{labels}]")
        lines.extend(_text_table_block(part["table"]))
    return "\n".join(lines) + "\n"


def _latex_ext_map(req, res) -> str:
    rows = []
    for name in ("kernel", "image", "cokernel"):
        part = res[name]
        for r, v in sorted(part["table"].items(), key=lambda kv: int(kv[0])):
            rows.append([name, r, v])
    return _latex_table(["part", "deg", "dim"], rows)


def _text_reg(req, res) -> str:
    return (
        f"reg(S/I) = {_fmt_reg(res['reg_quotient'])}\n"
        f"reg(I)   = {_fmt_reg(res['reg_ideal'])}\n"
    )


def _latex_reg(req, res) -> str:
    return _latex_table(
        ["$\\operatorname{reg}(S/I)$", "$\\operatorname{reg}(I)$"],
        [[_fmt_reg(res["reg_quotient"]), _fmt_reg(res["reg_ideal"])]],
    )


def _text_reg_powers(req, res) -> str:
    lines = [f"regularity of {req['kind']} of {req['p']}x{req['p']} minors, n={req['n']}"]
    for row in res["rows"]:
        per = " ".join(
            f"R[{l}]={_fmt_reg(v)}" for l, v in sorted(row["per_level"].items(), key=lambda kv: int(kv[0]))
        )
        lines.append(f"  d={row['d']}: reg={_fmt_reg(row['reg'])}  ({per})")
    return "\n".join(lines) + "\n"


def _latex_reg_powers(req, res) -> str:
    rows = [[str(r["d"]), _fmt_reg(r["reg"])] for r in res["rows"]]
    return _latex_table(["$d$", "$\\operatorname{reg}$"], rows)


def _text_hilbert(req, res) -> str:
    lines = [f"graded dimensions of the quotient, m={req['m']} n={req['n']}"]
    lines.extend(_text_table_block(res["table"]))
    return "\n".join(lines) + "\n"


def _latex_hilbert(req, res) -> str:
    rows = [[r, v] for r, v in sorted(res["table"].items(), key=lambda kv: int(kv[0]))]
    return _latex_table(["deg", "dim"], rows)


def _text_kodaira(req, res) -> str:
    lines = [
        f"vanishing scan m={req['m']} n={req['n']} twists 1..{req['jmax']}"
        f" at k in {res['k_checked']}: {'PASS' if res['passed'] else 'FAIL'}"
    ]
    if res["sing_codim"] is not None:
        lines.append(f"  singular locus codimension: {res['sing_codim']}")
    lines.append(f"  mechanism (s=0 throughout the range): {res['mechanism_ok']}")
    lines.append(f"  violations: {len(res['violations'])}")
    return "\n".join(lines) + "\n"


def _latex_kodaira(req, res) -> str:
    return _latex_table(
        ["$k$ range", "violations", "passed"],
        [[str(tuple(res["k_checked"])), str(len(res["violations"])), str(res["passed"])]],
    )


def _text_linear_res(req, res) -> str:
    lines = [f"linear resolution scan for {req['p']}x{req['p']} minors, n={req['n']}"]
    for row in res["rows"]:
        lines.append(
            f"  d={row['d']}: reg={_fmt_reg(row['reg'])}  linear={'yes' if row['linear'] else 'no'}"
        )
    return "\n".join(lines) + "\n"


def _latex_linear_res(req, res) -> str:
    rows = [[str(r["d"]), _fmt_reg(r["reg"]), "yes" if r["linear"] else "no"] for r in res["rows"]]
    return _latex_table(["$d$", "$\\operatorname{reg}$", "linear"], rows)


def _text_bblsz(req, res) -> str:
    lines = [f"level-0 factor labels of powers of 2x2 minors, m=n=3, d=1..{req['dmax']}"]
    for row in res["rows"]:
        groups = " || ".join(
            " ".join(_fmt_partition(z) for z in grp) for grp in row["groups"]
        )
        lines.append(f"  d={row['d']}: {groups if groups else '(none)'}")
    return "\n".join(lines) + "\n"


def _latex_bblsz(req, res) -> str:
    rows = []
    for row in res["rows"]:
        groups = " \\;\\|\\;\\; ".join(
            ", ".join(f"${_fmt_partition(z)}$" for z in grp) for grp in row["groups"]
        )
        rows.append([str(row["d"]), groups])
    return _latex_table(["$d$", "$z$ by size"], rows)


_RENDER_TEXT = {
    "zset": _text_zset,
    "ext": _text_ext,
    "ext-map": _text_ext_map,
    "reg": _text_reg,
    "reg-powers": _text_reg_powers,
    "hilbert": _text_hilbert,
    "kodaira": _text_kodaira,
    "linear-res": _text_linear_res,
    "bblsz-table": _text_bblsz,
}

_RENDER_LATEX = {
    "zset": _latex_zset,
    "ext": _latex_ext,
    "ext-map": _latex_ext_map,
    "reg": _latex_reg,
    "reg-powers": _latex_reg_powers,
    "hilbert": _latex_hilbert,
    "kodaira": _latex_kodaira,
    "linear-res": _latex_linear_res,
    "bblsz-table": _latex_bblsz,
}


# ---------------------------------------------------------------- macaulay2


_M2_KINDS = ("power", "symbolic", "satpower", "minors")


def emit_m2(parsed: ParsedIdeal, m: int, n: int, what: str, path: str, **kw) -> None:
    """Write a Macaulay2 cross-check script for a named determinantal family.

    Arbitrary gens ideals are rejected: their polynomial generators are out
    of scope here.  The engine never runs the script.
    """
    if parsed.kind not in _M2_KINDS:
        raise ValueError(
            "emit-m2 supports power/symbolic/satpower/minors ideals only"
        )
    p, d = parsed.p, parsed.d
    lines = [
        "-- cross-check script, written by detthick; run with Macaulay2",
        f"R = QQ[x_(1,1)..x_({m},{n})];",
        f"M = genericMatrix(R, x_(1,1), {m}, {n});",
        f"I = minors({p}, M);",
    ]
    if parsed.kind == "minors":
        lines.append("J = I;")
    elif parsed.kind == "power":
        lines.append(f"J = I^{d};")
    elif parsed.kind == "satpower":
        lines.append(f"J = saturate(I^{d});")
    else:
        if p == 1:
            lines.append(f"J = I^{d};")
        else:
            lines.append(f"J = saturate(I^{d}, minors({p - 1}, M));")
    if what == "reg":
        lines += [
            "r = regularity(R^1/J);",
            '<< "reg(S/I) = " << r << endl;',
            '<< "reg(I)   = " << r + 1 << endl;',
        ]
    else:
        j, lo, hi = kw["cohdeg"], kw["lo"], kw["hi"]
        lines += [
            f"E = Ext^{j}(R^1/J, R^1);",
            f"for r from {lo} to {hi} do << r << \" \" << hilbertFunction(r, E) << endl;",
        ]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------- commands


def _window_from_args(args) -> Optional[tuple[int, int]]:
    if getattr(args, "deg", None) is not None and getattr(args, "window", None) is not None:
        raise ValueError("give either --deg or --window, not both")
    if getattr(args, "deg", None) is not None:
        return (args.deg, args.deg)
    if getattr(args, "window", None) is not None:
        lo, hi = args.window
        if lo > hi:
            raise ValueError(f"empty degree window [{lo}, {hi}]")
        return (lo, hi)
    return None


def _cmd_zset(args) -> dict:
    parsed = parse_ideal_spec(args.ideal, args.n)
    zs = zset_general(parsed.ideal)
    return {
        "request": {"m": args.m, "n": args.n, "ideal": parsed.ideal.to_json()},
        "result": {
            "count": len(zs.pairs),
            "pairs": [p.to_json() for p in zs.sorted_pairs()],
        },
    }


def _cmd_ext(args) -> dict:
    parsed = parse_ideal_spec(args.ideal, args.n)
    window = _window_from_args(args)
    res = ext_graded(parsed.ideal, args.cohdeg, args.m, args.n, window)
    if args.emit_m2:
        if res.window is None:
            raise ValueError("no contributing chain at this cohomological degree; nothing to emit")
        emit_m2(parsed, args.m, args.n, "ext", args.emit_m2,
                cohdeg=args.cohdeg, lo=res.window[0], hi=res.window[1])
    return {
        "request": {
            "m": args.m,
            "n": args.n,
            "ideal": parsed.ideal.to_json(),
            "cohdeg": args.cohdeg,
            "window": list(res.window) if res.window else None,
        },
        "result": {
            "window": list(res.window) if res.window else None,
            "components": [c.to_json() for c in res.components],
            "table": graded_table_to_json(res.graded()),
            "total": str(sum(c.dim for c in res.components)),
        },
    }


def _cmd_ext_map(args) -> dict:
    sub = parse_ideal_spec(args.sub, args.n)
    sup = parse_ideal_spec(getattr(args, "super"), args.n)
    window = _window_from_args(args)
    res = ext_map_parts(sub.ideal, sup.ideal, args.cohdeg, args.m, args.n, window)
    parts = {}
    for name, part in (("kernel", res.kernel), ("image", res.image), ("cokernel", res.cokernel)):
        parts[name] = {
            "pairs": [p.to_json() for p in part.pairs],
            "components": [c.to_json() for c in part.components],
            "table": graded_table_to_json(part.graded()),
        }
    return {
        "request": {
            "m": args.m,
            "n": args.n,
            "sub": sub.ideal.to_json(),
            "super": sup.ideal.to_json(),
            "cohdeg": args.cohdeg,
            "window": list(res.window) if res.window else None,
        },
        "result": {"window": list(res.window) if res.window else None, **parts},
    }


def _cmd_reg(args) -> dict:
    parsed = parse_ideal_spec(args.ideal, args.n)
    if parsed.ideal.is_zero:
        raise ValueError("zero ideal: S has regularity 0, no factor labels")
    rq = reg_quotient(parsed.ideal, args.m, args.n)
    if args.emit_m2:
        emit_m2(parsed, args.m, args.n, "reg", args.emit_m2)
    return {
        "request": {"m": args.m, "n": args.n, "ideal": parsed.ideal.to_json()},
        "result": {
            "reg_quotient": _reg_json(rq),
            "reg_ideal": _reg_json(rq + 1),
        },
    }


def _cmd_reg_powers(args) -> dict:
    rows = []
    for d in range(1, args.dmax + 1):
        reg, per = reg_power_details(args.p, d, args.m, args.n, args.kind)
        rows.append(
            {
                "d": d,
                "reg": _reg_json(reg),
                "per_level": {str(l): _reg_json(v) for l, v in sorted(per.items())},
            }
        )
    return {
        "request": {
            "m": args.m,
            "n": args.n,
            "p": args.p,
            "dmax": args.dmax,
            "kind": args.kind,
        },
        "result": {"rows": rows},
    }


def _cmd_hilbert(args) -> dict:
    parsed = parse_ideal_spec(args.ideal, args.n)
    table = {
        r: quotient_graded_dim(parsed.ideal, r, args.m, args.n)
        for r in range(args.rmax + 1)
    }
    return {
        "request": {"m": args.m, "n": args.n, "ideal": parsed.ideal.to_json(), "rmax": args.rmax},
        "result": {"table": graded_table_to_json(table)},
    }


def _cmd_kodaira(args) -> dict:
    parsed = parse_ideal_spec(args.ideal, args.n)
    report = kodaira_check(parsed.ideal, args.m, args.n, args.jmax)
    codim = None
    if not parsed.ideal.is_zero and not parsed.ideal.is_unit:
        p = radical_index(parsed.ideal)
        if p >= 2:
            codim = sing_codim(p, args.m, args.n)
    doc = report.to_json()
    doc["sing_codim"] = codim
    return {
        "request": {
            "m": args.m,
            "n": args.n,
            "ideal": parsed.ideal.to_json(),
            "jmax": args.jmax,
        },
        "result": doc,
    }


def _cmd_linear_res(args) -> dict:
    rows = []
    for d in range(1, args.dmax + 1):
        reg, _ = reg_power_details(args.p, d, args.n, args.n, "power")
        rows.append({"d": d, "reg": _reg_json(reg), "linear": reg == args.p * d})
    return {
        "request": {"m": args.m, "n": args.n, "p": args.p, "dmax": args.dmax},
        "result": {"rows": rows},
    }


def _bblsz_key(z: Partition) -> tuple:
    return (z.size, z.part(1), tuple(-q for q in z.parts))


def _cmd_bblsz(args) -> dict:
    rows = []
    for d in range(1, args.dmax + 1):
        zs = sorted(
            (pair.z for pair in zset_power(2, d, 3).pairs if pair.l == 0),
            key=_bblsz_key,
        )
        groups: list[list[list[int]]] = []
        for z in zs:
            if not groups or sum(groups[-1][-1]) != z.size:
                groups.append([])
            groups[-1].append(z.to_json())
        rows.append({"d": d, "z": [z.to_json() for z in zs], "groups": groups})
    return {
        "request": {"m": 3, "n": 3, "p": 2, "dmax": args.dmax},
        "result": {"rows": rows},
    }


_COMMANDS = {
    "zset": _cmd_zset,
    "ext": _cmd_ext,
    "ext-map": _cmd_ext_map,
    "reg": _cmd_reg,
    "reg-powers": _cmd_reg_powers,
    "hilbert": _cmd_hilbert,
    "kodaira": _cmd_kodaira,
    "linear-res": _cmd_linear_res,
    "bblsz-table": _cmd_bblsz,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="detthick",
        description="Exact Ext, regularity and vanishing computations for "
        "invariant determinantal thickenings.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, m_default_n=False):
        sp.add_argument("--m", type=int, default=None, help="matrix rows (default: n)")
        sp.add_argument("--n", type=int, required=True, help="matrix columns")
        _output_flags(sp)

    def _output_flags(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--latex", action="store_true", help="emit a LaTeX table")

    sp = sub.add_parser("zset", help="factor labels of the quotient")
    common(sp)
    sp.add_argument("--ideal", required=True)

    sp = sub.add_parser("ext", help="one Ext module in a degree window")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--cohdeg", type=int, required=True)
    sp.add_argument("--deg", type=int, default=None, help="single internal degree")
    sp.add_argument("--window", type=int, nargs=2, default=None, metavar=("LO", "HI"))
    sp.add_argument("--emit-m2", default=None, metavar="PATH")

    sp = sub.add_parser("ext-map", help="kernel/image/cokernel of an induced Ext map")
    common(sp)
    sp.add_argument("--sub", required=True, help="the smaller ideal")
    sp.add_argument("--super", required=True, help="the bigger ideal")
    sp.add_argument("--cohdeg", type=int, required=True)
    sp.add_argument("--deg", type=int, default=None)
    sp.add_argument("--window", type=int, nargs=2, default=None, metavar=("LO", "HI"))

    sp = sub.add_parser("reg", help="regularity of the quotient and the ideal")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--emit-m2", default=None, metavar="PATH")

    sp = sub.add_parser("reg-powers", help="regularity along a power family")
    common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dmax", type=int, required=True)
    sp.add_argument("--kind", choices=("power", "satpower", "symbolic"), default="power")

    sp = sub.add_parser("hilbert", help="graded dimensions of the quotient")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--rmax", type=int, required=True)

    sp = sub.add_parser("kodaira", help="vanishing scan in the smooth range")
    common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--jmax", type=int, default=15)

    sp = sub.add_parser("linear-res", help="linear resolution scan for powers of minors")
    common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dmax", type=int, required=True)

    sp = sub.add_parser("bblsz-table", help="level-0 labels of powers of 2x2 minors, m=n=3")
    sp.add_argument("--dmax", type=int, required=True)
    _output_flags(sp)
    return top


def _threads_cap() -> int:
    raw = os.environ.get("DETTHICK_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"DETTHICK_THREADS must be an integer >= 1, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"DETTHICK_THREADS must be an integer >= 1, got {raw!r}")
    return cap


def run(argv: Sequence[str]) -> str:
    """Parse argv, compute, and return the rendered output."""
    args = build_parser().parse_args(argv)
    _threads_cap()  # the engine is serial, which respects any cap
    if args.command != "bblsz-table":
        if args.m is None:
            args.m = args.n
        if args.n < 1:
            raise ValueError(f"need n >= 1, got n={args.n}")
        if args.m < args.n:
            raise ValueError(f"need m >= n, got m={args.m}, n={args.n}")
    doc = {"schema": SCHEMA, "command": args.command}
    doc.update(_COMMANDS[args.command](args))
    if args.json and args.latex:
        raise ValueError("give at most one of --json and --latex")
    fmt = "json" if args.json else ("latex" if args.latex else "text")
    return _render(doc, fmt)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        out = run(sys.argv[1:] if argv is None else list(argv))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
