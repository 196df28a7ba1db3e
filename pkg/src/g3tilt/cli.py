"""Command-line front end: classify weights, enumerate block members, print
closed-form tilting characters, derive them independently by translation,
verify tables against the derivation engine, and export family tables.

Exit codes: 0 success; 1 verification failure (or a derivation that cannot be
completed); 2 argument/parse error; 3 when the requested tilting character is
only available as an external label and explicit terms were demanded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction as Q
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import tables
from .blocks import block_members, classify
from .characters import VermaSum, flags_certificates, height
from .translation import (OspVermaSum, UnderdeterminedError, derive_tilting,
                          osp_derive_tilting, osp_flags_certificates)
from .weights import (OspWeight, Weight, format_osp_weight, format_weight,
                      parse_osp_weight, parse_weight)
from .weyl import S3_GROUP, W_G2, Z2_S3, orbit_antidominant

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_EXTERNAL = 3

FORMATS = ("json", "csv", "latex", "text")


class CommandError(Exception):
    """Bad arguments or unparsable input (exit code 2)."""


# -- small parsers ----------------------------------------------------------

def _parse_int_range(text: str) -> range:
    """Parse "a..b" (inclusive) into a range."""
    parts = text.split("..")
    if len(parts) != 2:
        raise CommandError(f"expected a..b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise CommandError(f"expected integer bounds in {text!r}") from exc
    if lo > hi:
        raise CommandError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_ells(text: str) -> List[Q]:
    """Parse "a..b" (integers, inclusive) or a comma-separated rational list."""
    if ".." in text:
        return [Q(k) for k in _parse_int_range(text)]
    try:
        return [Q(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise CommandError(f"expected rationals in {text!r}") from exc


def _parse_g3_weight(text: str) -> Weight:
    try:
        return parse_weight(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CommandError(str(exc)) from exc


def _parse_osp_weight(text: str) -> OspWeight:
    try:
        return parse_osp_weight(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CommandError(str(exc)) from exc


# -- rendering --------------------------------------------------------------

def _fmt_weight(mu: Union[Weight, OspWeight]) -> str:
    return format_osp_weight(mu) if isinstance(mu, OspWeight) else format_weight(mu)


def _sorted_terms(t: Union[VermaSum, OspVermaSum]):
    return sorted(t.terms.items(), key=lambda kv: _fmt_weight(kv[0]))


def render_verma_sum(t: Union[VermaSum, OspVermaSum], fmt: str,
                     label: Optional[str] = None) -> str:
    if fmt == "json":
        return t.to_json()
    if fmt == "text":
        head = f"T_{label} = " if label else ""
        return head + repr(t)
    if fmt == "csv":
        lines = ["weight,mult"]
        lines += [f"\"{_fmt_weight(mu)}\",{c}" for mu, c in _sorted_terms(t)]
        return "\n".join(lines)
    if fmt == "latex":
        return tables.latex_verma_sum(t)   # the helper typesets T_{top} itself
    raise CommandError(f"unknown format {fmt!r}")


def render_weights(ws: Sequence[Weight], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"weights": [format_weight(w) for w in ws]})
    if fmt == "csv":
        return "\n".join(["weight"] + [f"\"{format_weight(w)}\"" for w in ws])
    if fmt == "latex":
        return "\n".join(tables.latex_weight(w) for w in ws)
    return "\n".join(format_weight(w) for w in ws)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- family enumeration (shared by verify/export and the acceptance tests) --

def _orbit_members(base_fn: Callable[[int], Weight], group) -> Callable[[int], List[Weight]]:
    def members(k: int) -> List[Weight]:
        _, reps = orbit_antidominant(base_fn(k), group)
        return sorted(set(reps.values()), key=lambda w: (w.d, w.x, w.y, w.z))
    return members


#: family name -> (default ells, k-range builder, members builder)
def _v_lambda_spec(ell: Q):
    group = tables._V_GROUP_S0
    if ell == 0:
        return _orbit_members(lambda k: tables._v_lambda_base(Q(0), k), group), -4, 0
    hi = int(abs(ell))
    return _orbit_members(lambda k, e=ell: tables._v_lambda_base(e, k), group), -3, hi


def _v_mu_spec(ell: Q):
    lo = min(int(-4 * ell) - 4, -4)
    return _orbit_members(lambda k, e=ell: tables._v_mu_base(e, k), tables._V_GROUP), lo, 6


def _v_nu_spec(ell: Q):
    hi_ell = int(ell) if ell >= 0 else int(-ell - 1)
    return _orbit_members(lambda k, e=ell: tables._v_nu_base(e, k), tables._V_GROUP), -hi_ell - 4, 4


def _s3_spec(ell: Q):
    n = int(ell)
    if n % 2 == 1:
        return _orbit_members(lambda k, e=n: tables._s3_base(e, k), Z2_S3), -4, (n - 1) // 2
    return _orbit_members(lambda k, e=n: tables._s3_base(e, k), S3_GROUP), -3, n + 4


def _wg2_spec(ell: Q):
    n = int(ell)
    return _orbit_members(lambda k, e=n: tables._wg2_base(e, k), W_G2), -8, 3 * n + 8


FAMILY_SPECS: Dict[str, Tuple[Tuple[Q, ...], Callable]] = {
    "v-lambda": ((Q(-6), Q(-3), Q(0), Q(3), Q(6)), _v_lambda_spec),
    "v-mu": ((Q(1, 4), Q(-1, 4), Q(3, 4), Q(-3, 4), Q(5, 4)), _v_mu_spec),
    "v-nu": ((Q(1), Q(4), Q(-2)), _v_nu_spec),
    "s3": ((Q(1), Q(2), Q(4), Q(5)), _s3_spec),
    "wg2": ((Q(0), Q(1), Q(2), Q(3)), _wg2_spec),
}

G3_FAMILIES = tuple(FAMILY_SPECS)


# -- verification sweep ------------------------------------------------------

class SweepEntry:
    """One (family, ell, k, weight) verification record."""

    __slots__ = ("name", "k", "weight", "ok", "detail")

    def __init__(self, name: str, k: int, weight, ok: bool, detail: str = ""):
        self.name = name
        self.k = k
        self.weight = weight
        self.ok = ok
        self.detail = detail

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail and not self.ok else ""
        return f"{status} {self.name} k={self.k} T_{_fmt_weight(self.weight)}{tail}"


def _certificate_detail(lam: Weight, T: VermaSum) -> str:
    """Empty string when the flag certificate sits inside T with top term 1."""
    cert = flags_certificates(lam)
    missing = [mu for mu in cert.terms if T[mu] < 1]
    if missing:
        return "certificate weights missing: " + ", ".join(
            format_weight(mu) for mu in missing)
    if T[lam] != 1:
        return f"top coefficient {T[lam]} != 1"
    return ""


def sweep_family(name: str, members: Callable[[int], List[Weight]],
                 k_lo: int, k_hi: int, margin: int = 4,
                 known: Optional[Dict[Weight, VermaSum]] = None
                 ) -> List[SweepEntry]:
    """Derive every orbit member from the bottom of the window up and compare
    against the closed-form table, recording certificate containment too."""
    known = known if known is not None else {}
    all_ws: List[Tuple[int, Weight]] = []
    for k in range(k_lo - margin, k_hi + 1):
        all_ws.extend((k, w) for w in members(k))
    ref = all_ws[0][1]
    all_ws.sort(key=lambda kw: (kw[0], height(kw[1] - ref)))

    derived: Dict[Weight, VermaSum] = {}
    pending = list(all_ws)
    stuck: Dict[Tuple[int, Weight], str] = {}
    while pending:
        nxt = []
        for k, lam in pending:
            if lam in known:
                derived[lam] = known[lam]
                continue
            try:
                T, _info = derive_tilting(lam, known=known)
            except UnderdeterminedError as exc:
                nxt.append((k, lam))
                stuck[(k, lam)] = str(exc)
                continue
            known[lam] = T
            derived[lam] = T
        if len(nxt) == len(pending):
            break
        pending = nxt

    entries: List[SweepEntry] = []
    for k, lam in all_ws:
        if k < k_lo:
            continue
        if lam not in derived:
            entries.append(SweepEntry(name, k, lam, False,
                                      "underdetermined: " + stuck.get((k, lam), "")))
            continue
        T = derived[lam]
        tab = tables.tilting_character(lam)
        if isinstance(tab, str):
            entries.append(SweepEntry(name, k, lam, False, f"table label {tab!r}"))
            continue
        if tab.terms != T.terms:
            entries.append(SweepEntry(name, k, lam, False,
                                      f"table {tab!r} != derived {T!r}"))
            continue
        detail = _certificate_detail(lam, T)
        entries.append(SweepEntry(name, k, lam, detail == "", detail))
    return entries


def sweep_g3(families: Sequence[str], ells: Optional[Sequence[Q]] = None,
             k_range: Optional[range] = None,
             report: Optional[Callable[[str], None]] = None) -> List[SweepEntry]:
    """Run table-vs-derivation sweeps for the named G(3) families."""
    out: List[SweepEntry] = []
    for fam in families:
        default_ells, spec = FAMILY_SPECS[fam]
        for ell in (ells if ells is not None else default_ells):
            members, k_lo, k_hi = spec(ell)
            if k_range is not None:
                k_lo, k_hi = k_range.start, k_range[-1]
            entries = sweep_family(f"{fam} ell={ell}", members, k_lo, k_hi)
            if report:
                for e in entries:
                    report(e.line())
            out.extend(entries)
    return out


# -- osp(3|2) verification ---------------------------------------------------

def osp_case_weights(jmax: int = 10) -> List[OspWeight]:
    """Block representatives of the three atypical osp(3|2) cases up to jmax."""
    ws: List[OspWeight] = [OspWeight(Q(1, 3), Q(1, 3)), OspWeight(Q(2, 7), Q(-2, 7))]
    ws.append(OspWeight(0, 0))
    for k in range(1, jmax + 1):
        ws += [OspWeight(k, k), OspWeight(k, -k), OspWeight(-k, k), OspWeight(-k, -k)]
    j = Q(1, 2)
    while j <= jmax + Q(1, 2):
        ws += [OspWeight(j, j), OspWeight(j, -j), OspWeight(-j, j), OspWeight(-j, -j)]
        j += 1
    return ws


def sweep_osp(jmax: int = 10,
              report: Optional[Callable[[str], None]] = None) -> List[SweepEntry]:
    """Compare the osp(3|2) derivation against the closed-form table."""
    known: Dict[OspWeight, OspVermaSum] = {}
    entries: List[SweepEntry] = []
    pending = sorted(osp_case_weights(jmax), key=lambda w: (w.a, w.b))
    stuck: Dict[OspWeight, str] = {}
    derived: Dict[OspWeight, OspVermaSum] = {}
    while pending:
        nxt = []
        for lam in pending:
            try:
                T, _info = osp_derive_tilting(lam, known=known)
            except UnderdeterminedError as exc:
                nxt.append(lam)
                stuck[lam] = str(exc)
                continue
            known[lam] = T
            derived[lam] = T
        if len(nxt) == len(pending):
            break
        pending = nxt
    for lam in sorted(osp_case_weights(jmax), key=lambda w: (w.a, w.b)):
        if lam not in derived:
            entries.append(SweepEntry("osp32", 0, lam, False,
                                      "underdetermined: " + stuck.get(lam, "")))
            continue
        T = derived[lam]
        tab = tables.table_osp32(lam)
        if tab.terms != T.terms:
            entries.append(SweepEntry("osp32", 0, lam, False,
                                      f"table {tab!r} != derived {T!r}"))
            continue
        cert = osp_flags_certificates(lam)
        detail = ""
        missing = [mu for mu in cert.terms if T[mu] < 1]
        if missing:
            detail = "certificate weights missing: " + ", ".join(
                format_osp_weight(mu) for mu in missing)
        elif T[lam] != 1:
            detail = f"top coefficient {T[lam]} != 1"
        entries.append(SweepEntry("osp32", 0, lam, detail == "", detail))
    if report:
        for e in entries:
            report(e.line())
    return entries


# -- commands -----------------------------------------------------------------

def _cmd_classify(args) -> int:
    lam = _parse_g3_weight(args.weight)
    bid = classify(lam)
    if args.format == "json":
        _emit(bid.to_json(), args.out)
    else:
        ell = "" if bid.ell is None else f" ell={bid.ell}"
        _emit(f"family={bid.family} case={bid.case}{ell} "
              f"canonical_rep={format_weight(bid.canonical_rep)} "
              f"label={bid.equivalence_label}", args.out)
    return EXIT_OK


def _cmd_block(args) -> int:
    if args.system == "osp32":
        raise CommandError("block enumeration is only implemented for --system g3")
    lam = _parse_g3_weight(args.weight)
    k_range = _parse_int_range(args.k_range) if args.k_range else range(-10, 11)
    try:
        ws = block_members(lam, k_range=k_range)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    _emit(render_weights(ws, args.format), args.out)
    return EXIT_OK


def _cmd_tilting(args) -> int:
    if args.system == "osp32":
        lam = _parse_osp_weight(args.weight)
        t = tables.table_osp32(lam)
        _emit(render_verma_sum(t, args.format, label=format_osp_weight(lam)), args.out)
        return EXIT_OK
    lam = _parse_g3_weight(args.weight)
    t = tables.tilting_character(lam)
    if isinstance(t, str):
        if args.explicit:
            print(f"no explicit character stored: {t}", file=sys.stderr)
            return EXIT_EXTERNAL
        payload = json.dumps({"label": t}) if args.format == "json" else t
        _emit(payload, args.out)
        return EXIT_OK
    _emit(render_verma_sum(t, args.format, label=format_weight(lam)), args.out)
    return EXIT_OK


def _cmd_derive(args) -> int:
    if args.system == "osp32":
        lam = _parse_osp_weight(args.weight)
        try:
            T, info = osp_derive_tilting(lam)
        except UnderdeterminedError as exc:
            print(f"underdetermined: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        label = format_osp_weight(lam)
    else:
        glam = _parse_g3_weight(args.weight)
        try:
            T, info = _derive_with_context(glam, args.k_range)
        except UnderdeterminedError as exc:
            print(f"underdetermined: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        label = format_weight(glam)
    path = {k: (_fmt_weight(v) if isinstance(v, (Weight, OspWeight)) else str(v))
            for k, v in info.items() if k in ("start", "start_kind")}
    if args.format == "json":
        body = json.loads(T.to_json())
        body["derivation"] = path
        _emit(json.dumps(body), args.out)
    else:
        text = render_verma_sum(T, args.format, label=label)
        if args.format == "text":
            text += "\n" + "\n".join(f"# {k}: {v}" for k, v in sorted(path.items()))
        _emit(text, args.out)
    return EXIT_OK


def _derive_with_context(lam: Weight, k_range: Optional[str]
                         ) -> Tuple[VermaSum, Dict[str, object]]:
    """Derive T_lam, bootstrapping lower block members when a cold start fails."""
    try:
        return derive_tilting(lam)
    except UnderdeterminedError:
        pass
    window = _parse_int_range(k_range) if k_range else range(-12, 1)
    known: Dict[Weight, VermaSum] = {}
    pending = sorted(block_members(lam, k_range=window) + [lam],
                     key=lambda w: height(w - lam))
    last: Optional[Tuple[VermaSum, Dict[str, object]]] = None
    while pending:
        nxt = []
        for mu in pending:
            try:
                T, info = derive_tilting(mu, known=known)
            except UnderdeterminedError:
                nxt.append(mu)
                continue
            known[mu] = T
            if mu == lam:
                last = (T, info)
        if last is not None:
            return last
        if len(nxt) == len(pending):
            break
        pending = nxt
    return derive_tilting(lam, known=known)   # raises with the full context


def _cmd_verify(args) -> int:
    families = G3_FAMILIES if args.family in ("all", None) else (args.family,)
    ells = _parse_ells(args.ell) if args.ell else None
    k_range = _parse_int_range(args.k_range) if args.k_range else None
    lines: List[str] = []
    entries: List[SweepEntry] = []
    if args.family == "osp32":
        entries = sweep_osp(report=lines.append)
    else:
        if args.family in ("all", None):
            entries += sweep_osp(report=lines.append)
            entries += sweep_g3(families, report=lines.append)
        else:
            entries += sweep_g3(families, ells=ells, k_range=k_range,
                                report=lines.append)
    fails = [e for e in entries if not e.ok]
    lines.append(f"{len(entries) - len(fails)}/{len(entries)} entries pass")
    _emit("\n".join(lines), args.out)
    return EXIT_OK if not fails else EXIT_VERIFY


def _cmd_export(args) -> int:
    if args.system == "osp32":
        rows = [(f"osp32", "", 0, format_osp_weight(lam), tables.table_osp32(lam))
                for lam in sorted(osp_case_weights(), key=lambda w: (w.a, w.b))]
    else:
        fam = args.family
        if fam in ("all", None):
            raise CommandError("export requires a single --family")
        default_ells, spec = FAMILY_SPECS[fam]
        ells = _parse_ells(args.ell) if args.ell else default_ells
        rows = []
        for ell in ells:
            members, k_lo, k_hi = spec(ell)
            if args.k_range:
                rng = _parse_int_range(args.k_range)
                k_lo, k_hi = rng.start, rng[-1]
            for k in range(k_lo, k_hi + 1):
                for lam in members(k):
                    t = tables.tilting_character(lam)
                    rows.append((fam, str(ell), k, format_weight(lam), t))
    text = _render_export(rows, args.format)
    _emit(text, args.out)
    return EXIT_OK


def _render_export(rows, fmt: str) -> str:
    if fmt == "json":
        body = []
        for fam, ell, k, label, t in rows:
            entry = {"family": fam, "ell": ell, "k": k, "weight": label}
            if isinstance(t, str):
                entry["label"] = t
            else:
                entry["character"] = json.loads(t.to_json())
            body.append(entry)
        return json.dumps(body)
    if fmt == "csv":
        lines = ["family,ell,k,weight,term,mult"]
        for fam, ell, k, label, t in rows:
            if isinstance(t, str):
                lines.append(f"{fam},{ell},{k},\"{label}\",\"{t}\",")
            else:
                for mu, c in _sorted_terms(t):
                    lines.append(f"{fam},{ell},{k},\"{label}\",\"{_fmt_weight(mu)}\",{c}")
        return "\n".join(lines)
    if fmt == "latex":
        lines = []
        for fam, ell, k, label, t in rows:
            if isinstance(t, str):
                lines.append(f"% T at {label}: {t}")
            else:
                lines.append(tables.latex_verma_sum(t) + r" \\")
        return "\n".join(lines)
    lines = []
    for fam, ell, k, label, t in rows:
        body = t if isinstance(t, str) else repr(t)
        lines.append(f"{fam} ell={ell} k={k} T_{label} = {body}")
    return "\n".join(lines)


# -- argument parser -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):   # exit 2 with a parse-style message
        raise CommandError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="g3tilt",
                description="Blocks and tilting characters for category O "
                            "of the exceptional Lie superalgebra G(3).")
    default_fmt = os.environ.get("G3TILT_FORMAT", "text")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, weight=True):
        if weight:
            sp.add_argument("weight",
                            help='weight: "d|x,y,z", "F:d;a;b", or "a|b" for osp32')
        sp.add_argument("--system", choices=("g3", "osp32"), default="g3")
        sp.add_argument("--depth", type=int, default=6,
                        help="character truncation depth (default 6)")
        sp.add_argument("--format", choices=FORMATS, default=default_fmt)
        sp.add_argument("--out", metavar="FILE", default=None)

    sp = sub.add_parser("classify", help="print the block identifier of a weight")
    common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("block", help="enumerate block members in a level window")
    common(sp)
    sp.add_argument("--k-range", metavar="a..b", default=None)
    sp.set_defaults(func=_cmd_block)

    sp = sub.add_parser("tilting", help="print the closed-form tilting character")
    common(sp)
    sp.add_argument("--explicit", action="store_true",
                    help="demand explicit Verma terms (exit 3 on external labels)")
    sp.set_defaults(func=_cmd_tilting)

    sp = sub.add_parser("derive", help="derive the tilting character by translation")
    common(sp)
    sp.add_argument("--k-range", metavar="a..b", default=None,
                    help="block window used to bootstrap lower characters")
    sp.set_defaults(func=_cmd_derive)

    sp = sub.add_parser("verify",
                        help="compare tables, derivation, and certificates")
    common(sp, weight=False)
    sp.add_argument("--family", choices=G3_FAMILIES + ("osp32", "all"),
                    default="all")
    sp.add_argument("--ell", default=None,
                    help="family parameters: a..b or comma-separated rationals")
    sp.add_argument("--k-range", metavar="a..b", default=None)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("export", help="write a family table over a parameter range")
    common(sp, weight=False)
    sp.add_argument("--family", choices=G3_FAMILIES + ("all",), default=None)
    sp.add_argument("--ell", default=None)
    sp.add_argument("--k-range", metavar="a..b", default=None)
    sp.set_defaults(func=_cmd_export)
    return p


def execute(argv: Sequence[str]) -> int:
    parser = build_parser()
    # values like "-7/2|1/4,13/4,-7/2" or "-1..0" must not be mistaken for
    # options (all real options are --long); a leading space defuses argparse
    # and the value parsers strip it
    argv = [" " + a if a.startswith("-") and not a.startswith("--") else a
            for a in argv]
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
