"""Command-line front end. Every command prints one JSON report (or a TSV table).

Exit codes: 0 ok, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence

from . import bottsam, bundle, cohom, lattice, weyl
from .diagrams import DynkinDiagram, cartan_matrix, parse_diagram
from .errors import FlagBundleError
from .rootsys import b_coefficients, generate
from .verify import VerifyConfig, corrupt, run_checks, seeded_corruption

SCHEMA = 1
_NEGATIVE_VECTOR = re.compile(r"^-\d+(,-?\d+)*$")


class UsageError(Exception):
    pass


class _HelpShown(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status == 0:
            raise _HelpShown()
        raise UsageError(message or "")


def parse_vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed integer vector {text!r}") from None


def parse_subset(text: str) -> tuple[int, ...]:
    vals = parse_vector(text)
    if any(v < 1 for v in vals) or len(set(vals)) != len(vals):
        raise UsageError(f"malformed subset {text!r}")
    return tuple(sorted(vals))


def parse_lattice(d: DynkinDiagram, text: str) -> lattice.IsogenyLattice:
    if text.strip().startswith("["):
        try:
            basis = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed lattice basis: {exc}") from None
        return lattice.lattice(d, basis)
    return lattice.lattice(d, text)


def _diagram(args) -> DynkinDiagram:
    return parse_diagram(args.diagram)


def _rows(header, rows):
    return {"header": list(header), "rows": [list(r) for r in rows]}


# --- handlers: return (inputs, outputs, table) -----------------------------

def cmd_table1(args):
    d = _diagram(args)
    b = b_coefficients(d)
    out = {"b": list(b), "n_positive": generate(d).n_positive}
    return {}, out, _rows(["node", "b"], enumerate(b, start=1))


def cmd_roots(args):
    d = _diagram(args)
    rs = generate(d)
    roots = [{"root": list(r), "coroot": list(c), "height": sum(r)} for r, c in zip(rs.positive_roots, rs.positive_coroots)]
    out = {"cartan": [list(r) for r in rs.cartan], "n_positive": rs.n_positive, "positive_roots": roots}
    table = _rows(["root", "coroot", "height"],
                  ((",".join(map(str, r)), ",".join(map(str, c)), sum(r)) for r, c in zip(rs.positive_roots, rs.positive_coroots)))
    return {}, out, table


def cmd_weyl(args):
    d = _diagram(args)
    rs = generate(d)
    w0, word = weyl.longest_element(rs, range(1, d.rank + 1))
    out = {"longest_length": w0.length, "longest_word": list(word), "n_positive": rs.n_positive}
    inputs = {}
    table = None
    if args.enumerate is not None:
        inputs["enumerate"] = args.enumerate
        if args.list:
            elements = weyl.enumerate_elements(rs, args.enumerate)
            out["elements"] = [list(w.word) for w in elements]
            dist = [0] * (w0.length + 1)
            for w in elements:
                dist[w.length] += 1
        else:
            dist = weyl.length_distribution(rs, args.enumerate)
        out["order"] = sum(dist)
        out["length_distribution"] = dist
        table = _rows(["length", "count"], enumerate(dist))
    return inputs, out, table


def _model(args):
    d = _diagram(args)
    lat = parse_lattice(d, args.lattice)
    raw = parse_vector(args.cocycle)
    dominant, w = bundle.normalize_to_dominant(d, raw)
    return d, lat, raw, bundle.FlagBundleModel(d, lat, dominant), w


def cmd_tag(args):
    d, lat, raw, model, w = _model(args)
    inputs = {"lattice": lat.name, "cocycle": list(raw)}
    out = {"tag": list(bundle.tag(model)), "normalizing_word": list(w.word), "lattice_index": lat.index}
    return inputs, out, _rows(["node", "tag"], enumerate(bundle.tag(model), start=1))


def cmd_admissible(args):
    d = _diagram(args)
    lat = parse_lattice(d, args.lattice)
    t = parse_vector(args.tag)
    witness = lattice.is_admissible(t, lat)
    out = {
        "admissible": witness is not None,
        "witness": None if witness is None else {"coweight": list(witness.coords), "basis": list(witness.basis_coords)},
        "index": lattice.admissible_index(lat),
    }
    note = lattice.sl_index_note(d, lat)
    if note is not None:
        out["discrepancy"] = note
    return {"lattice": lat.name, "tag": list(t)}, out, _rows(["admissible", "index"], [[witness is not None, out["index"]]])


def cmd_sections(args):
    d, lat, raw, model, _ = _model(args)
    sections = bundle.fundamental_sections(model, args.limit)
    rows = [{"word": list(sd.w.word), "degrees": list(sd.degrees), "minimal": bundle.is_minimal_section(sd)}
            for sd in sections]
    out = {"tag": list(model.theta), "count": len(rows), "minimal": [r["word"] for r in rows if r["minimal"]],
           "sections": rows}
    table = _rows(["word", "degrees", "minimal"],
                  ((",".join(map(str, r["word"])), ",".join(map(str, r["degrees"])), r["minimal"]) for r in rows))
    return {"lattice": lat.name, "cocycle": list(raw)}, out, table


def cmd_cohom(args):
    d = _diagram(args)
    rs = generate(d)
    lam = parse_vector(args.lam)
    r = cohom.cohomology(rs, lam)
    out = dict(r.to_dict(), euler_characteristic=cohom.euler_characteristic(rs, lam))
    return {"lambda": list(lam)}, out, _rows(["degree", "dimension"], [[r.degree, r.dimension]])


def cmd_euler(args):
    d = _diagram(args)
    lam = parse_vector(args.lam)
    chi = cohom.euler_characteristic(generate(d), lam)
    return {"lambda": list(lam)}, {"euler_characteristic": chi}, _rows(["euler_characteristic"], [[chi]])


def cmd_bott(args):
    d = _diagram(args)
    rs = generate(d)
    word = parse_vector(args.word)
    dem = weyl.demazure_product(rs, word)
    out = {
        "word_length": len(word),
        "is_reduced": weyl.is_reduced(rs, word),
        "image_dimension": bottsam.image_dimension(rs, word),
        "demazure_word": list(dem.word),
    }
    return {"word": list(word)}, out, _rows(list(out), [[out[k] if not isinstance(out[k], list) else ",".join(map(str, out[k])) for k in out]])


def cmd_faces(args):
    d = _diagram(args)
    rows = bottsam.simplicial_face_report(generate(d))
    out = {"rows": [{"I": list(r.I), "dimension": r.dimension, "longest_word": list(r.longest_word)} for r in rows]}
    table = _rows(["I", "dimension", "longest_word"],
                  ((",".join(map(str, r.I)), r.dimension, ",".join(map(str, r.longest_word))) for r in rows))
    return {}, out, table


def cmd_homog(args):
    d = _diagram(args)
    I = parse_subset(args.I)
    b = b_coefficients(d)
    bc = bundle.rel_canonical_decomposition(d, I)
    out = {
        "b": list(b),
        "c": [x - y for x, y in zip(b, bc)],
        "b_minus_c": list(bc),
        "dim_GP": bundle.dim_GP(d, I),
        "inequality_1": bundle.homogeneity_inequality_1(d, I),
        "inequality_2": bundle.homogeneity_inequality_2(d, I),
        "unsplit_tags": [list(t) for t in bundle.unsplit_tag_solutions(d, I)],
    }
    return {"I": list(I)}, out, _rows(["node", "b", "c", "b_minus_c"],
                                      ((t + 1, b[t], out["c"][t], bc[t]) for t in range(d.rank)))


def cmd_verify(args):
    cfg = VerifyConfig(rank_max=args.rank_max)
    inputs = {"rank_max": args.rank_max}
    if args.corrupt_seed is not None:
        spec, m = seeded_corruption(args.corrupt_seed, args.rank_max)
        cfg.cartan_overrides[spec] = m
        inputs["corrupt_seed"] = args.corrupt_seed
    if args.corrupt is not None:
        try:
            spec, rest = args.corrupt.split(":")
            i, j, bit = parse_vector(rest)
            d = parse_diagram(spec)
        except ValueError:
            raise UsageError("--corrupt expects DIAGRAM:I,J,BIT") from None
        if not (1 <= i <= d.rank and 1 <= j <= d.rank):
            raise UsageError("--corrupt entry outside the matrix")
        cfg.cartan_overrides[d.spec] = corrupt(cartan_matrix(d), i - 1, j - 1, bit)
        inputs["corrupt"] = args.corrupt
    if cfg.cartan_overrides:
        inputs["cartan_overrides"] = {k: [list(r) for r in v] for k, v in cfg.cartan_overrides.items()}
    results = run_checks(cfg)
    out = {"checks": [r.to_dict() for r in results], "all_passed": all(r.passed for r in results)}
    table = _rows(["check", "passed", "checked"], ((r.name, r.passed, r.checked) for r in results))
    return inputs, out, table


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="emit a flat TSV table instead of JSON")
    p = _Parser(prog="flagbundle", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, *positionals):
        sp = sub.add_parser(name, parents=[common])
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(func=fn)
        return sp

    add("table1", cmd_table1, "diagram")
    add("roots", cmd_roots, "diagram")
    sp = add("weyl", cmd_weyl, "diagram")
    sp.add_argument("--enumerate", type=int, metavar="N")
    sp.add_argument("--list", action="store_true", help="include every element's reduced word")
    add("tag", cmd_tag, "diagram", "lattice", "cocycle")
    add("admissible", cmd_admissible, "diagram", "lattice", "tag")
    sp = add("sections", cmd_sections, "diagram", "lattice", "cocycle")
    sp.add_argument("--limit", type=int, default=None)
    sp = sub.add_parser("cohom", parents=[common])
    sp.add_argument("diagram")
    sp.add_argument("lam", metavar="lambda")
    sp.set_defaults(func=cmd_cohom)
    sp = sub.add_parser("euler", parents=[common])
    sp.add_argument("diagram")
    sp.add_argument("lam", metavar="lambda")
    sp.set_defaults(func=cmd_euler)
    add("bott", cmd_bott, "diagram", "word")
    add("faces", cmd_faces, "diagram")
    sp = add("homog", cmd_homog, "diagram")
    sp.add_argument("--I", dest="I", required=True, metavar="SUBSET")
    sp = add("verify", cmd_verify)
    sp.add_argument("--rank-max", type=int, default=4)
    sp.add_argument("--corrupt-seed", type=int, default=None)
    sp.add_argument("--corrupt", default=None, metavar="DIAGRAM:I,J,BIT")
    return p


def _tsv(table) -> str:
    lines = ["\t".join(table["header"])]
    for row in table["rows"]:
        lines.append("\t".join("" if x is None else str(x).lower() if isinstance(x, bool) else str(x) for x in row))
    return "\n".join(lines) + "\n"


def _normalize(argv: Sequence[str]) -> list[str]:
    # a leading space keeps argparse from reading "-1,3" as an option;
    # --tsv is accepted anywhere and handed to the subcommand
    out = [" " + a if _NEGATIVE_VECTOR.match(a) else a for a in argv if a != "--tsv"]
    return out + ["--tsv"] if "--tsv" in argv else out


def run(argv: Sequence[str]) -> tuple[int, str]:
    argv = list(argv)
    report = {"schema": SCHEMA, "argv": argv, "command": None, "diagram": None, "inputs": {}, "outputs": {},
              "status": "ok", "error": None}
    tsv = False
    try:
        args = build_parser().parse_args(_normalize(argv))
        tsv = args.tsv
        report["command"] = args.command
        report["diagram"] = getattr(args, "diagram", None)
        inputs, outputs, table = args.func(args)
        report["inputs"], report["outputs"] = inputs, outputs
        code = 0
        if args.command == "verify" and not outputs["all_passed"]:
            report["status"] = "error"
            report["error"] = {"type": "VerificationFailed",
                               "message": ", ".join(c["name"] for c in outputs["checks"] if not c["passed"])}
            code = 1
        if tsv and table is not None:
            return code, _tsv(table)
    except _HelpShown:
        return 0, ""
    except UsageError as exc:
        report["status"] = "error"
        report["error"] = {"type": "UsageError", "message": str(exc).strip()}
        code = 2
    except FlagBundleError as exc:
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = 1
    return code, json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
