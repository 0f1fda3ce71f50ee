"""Command line interface: ``polyembed <command> ...``.

Every command writes tab separated text with a fixed header to stdout
(``construct`` and ``generate`` write graph6 or .rot instead).  Problems
with individual input lines go to stderr with their line or block number.
Exit status is 0 for a clean run, 1 for malformed input or a reported
DIFF, 2 for a failed internal check and 3 for a refused size guard.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from dataclasses import astuple, dataclass, fields
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional, Sequence, TextIO

from .constructions import (NAMED_GRAPHS, StarSpec, hex_torus, hex_torus_classes, max_genus_bound,
                            named_graph, star_product, star_product_embedded)
from .embedding import (RotFormatError, RotationSystem, dual_is_simple, find_obstruction, genus,
                        is_polyhedral, iter_rot_blocks, petrie_switch, small_cycle_violations,
                        trace_faces, write_rot)
from .graph import (CubicGraph, GraphFormatError, NotCubicError, parse_graph6, read_graph6_lines,
                    write_graph6)
from .iso import canon_embedded
from .reference import brute_force_polyhedral, gen_cubic, genus_profile, min_genus
from .search import EmbeddingSummary, SearchConfig, enumerate_polyhedral

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2
EXIT_GUARD = 3

GUARDS = {
    "tables": 16,
    "generate": 16,
    "oracle": 20,
    "mingen": 28,
}


class GuardError(Exception):
    pass


@dataclass(frozen=True)
class TableRow:
    """One row of the census tables.

    ``embedding_total`` counts embedded graphs up to isomorphism, mirror
    images identified.  The last two columns give the same count with
    orientation kept, and the number of labelled embeddings up to mirror.
    """

    n: int
    graph_count: int
    with_embedding_count: int
    multi_embedding_count: int
    multi_genus_count: int
    embedding_total: int
    min_genus_embedding_count: int
    not_min_genus_embedding_count: int
    oriented_embedding_total: int
    labelled_embedding_total: int

    @classmethod
    def header(cls) -> str:
        return "\t".join(f.name for f in fields(cls))

    def tsv(self) -> str:
        return "\t".join(str(x) for x in astuple(self))


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _open_text(path: str):
    if path == "-":
        return nullcontext(sys.stdin)
    return open(path, encoding="ascii", errors="replace")


def _guard(name: str, n: int, override: bool) -> None:
    limit = GUARDS[name]
    if n > limit and not override:
        raise GuardError(f"{name}: n={n} exceeds the guard of {limit}; pass --override-guards to run anyway")


def _map(func: Callable, items: Iterable, jobs: int) -> Iterator:
    """Ordered map, over a process pool when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(func, items)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(func, items, chunksize=4)


def _validate(r: RotationSystem) -> list[str]:
    problems = []
    if not is_polyhedral(r):
        problems.append("not polyhedral")
    if not dual_is_simple(r):
        problems.append("dual not simple")
    problems.extend(small_cycle_violations(r))
    if genus(r) > max_genus_bound(r.n):
        problems.append("genus above bound")
    return problems


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _graph_records(path: str, err: TextIO) -> tuple[list[tuple[int, str, Optional[CubicGraph], str]], bool]:
    """``(lineno, text, graph or None, status)`` per input line, plus a malformed flag."""
    out = []
    bad = False
    with _open_text(path) as fh:
        for lineno, text in read_graph6_lines(fh):
            try:
                out.append((lineno, text, parse_graph6(text), "ok"))
            except NotCubicError as exc:
                out.append((lineno, text, None, "not-cubic"))
                print(f"line {lineno}: {exc}", file=err)
            except GraphFormatError as exc:
                bad = True
                print(f"line {lineno}: malformed graph6: {exc}", file=err)
    return out, bad


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

ENUMERATE_HEADER = "line\tgraph6\tn\tstatus\ttotal\tgenus_counts\tmulti_embedding\tmulti_genus"


def _enumerate_one(job):
    g, cfg, verify = job
    embs, summary = enumerate_polyhedral(g, cfg)
    problems = []
    if verify:
        for i, r in enumerate(embs):
            problems.extend(f"embedding {i}: {p}" for p in _validate(r))
    return embs, summary, problems


def _summary_cells(s: EmbeddingSummary) -> str:
    return f"{s.total}\t{s.genus_string() or '-'}\t{_yn(s.multi_embedding)}\t{_yn(s.multi_genus)}"


def cmd_enumerate(args, out: TextIO, err: TextIO) -> int:
    cfg = SearchConfig(count_only=args.count_only, max_genus=args.max_genus, emit_mirrors=args.mirrors)
    records, bad = _graph_records(args.input, err)
    rot_fh = None
    if args.rot is not None and not args.count_only:
        rot_fh = sys.stdout if args.rot == "-" else open(args.rot, "w")
    status = EXIT_INPUT if bad else EXIT_OK
    jobs = [(g, cfg, args.verify) for _, _, g, _ in records if g is not None]
    results = _map(_enumerate_one, jobs, args.jobs)
    print(ENUMERATE_HEADER, file=out)
    try:
        for lineno, text, g, st in records:
            if g is None:
                print(f"{lineno}\t{text}\t-\t{st}\t0\t-\tno\tno", file=out)
                continue
            embs, summary, problems = next(results)
            for p in problems:
                print(f"line {lineno}: check failed: {p}", file=err)
                status = EXIT_CHECK
            print(f"{lineno}\t{text}\t{g.n}\t{summary.reason}\t{_summary_cells(summary)}", file=out)
            if rot_fh is not None:
                for i, r in enumerate(embs):
                    rot_fh.write(write_rot(r, f"line {lineno} embedding {i} {text}") + "\n")
    finally:
        if rot_fh is not None and rot_fh is not sys.stdout:
            rot_fh.close()
    return status


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def _table_job(g: CubicGraph):
    embs, summary = enumerate_polyhedral(g)
    if not embs:
        return summary, [], [], None
    classes = {}
    for r in embs:
        classes.setdefault(canon_embedded(r, True), genus(r))
    oriented = {canon_embedded(r, False) for r in embs}
    oriented |= {canon_embedded(RotationSystem(g, [1 - f for f in r.flips]), False) for r in embs}
    return summary, list(classes.values()), sorted(oriented), min_genus(g)


def table_row(n: int, jobs: int = 1) -> TableRow:
    """Census of all connected cubic graphs on ``n`` vertices."""
    graphs = list(gen_cubic(n))
    with_emb = multi = multi_g = total = min_ok = oriented = labelled = 0
    for summary, class_genera, oriented_codes, mg in _map(_table_job, graphs, jobs):
        if not summary.has_any:
            continue
        with_emb += 1
        multi += summary.multi_embedding
        multi_g += summary.multi_genus
        labelled += summary.total
        total += len(class_genera)
        min_ok += sum(1 for x in class_genera if x == mg)
        oriented += len(oriented_codes)
    return TableRow(n, len(graphs), with_emb, multi, multi_g, total, min_ok, total - min_ok,
                    oriented, labelled)


def cmd_tables(args, out: TextIO, err: TextIO) -> int:
    _guard("tables", args.max_n, args.override_guards)
    print(TableRow.header(), file=out)
    for n in range(4, args.max_n + 1, 2):
        print(table_row(n, args.jobs).tsv(), file=out, flush=True)
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _graph_arg(text: str) -> CubicGraph:
    if text.lower() in NAMED_GRAPHS:
        return named_graph(text)
    return parse_graph6(text)


def _embedded_arg(text: str) -> RotationSystem:
    """Named graphs and graph6 strings get their first polyhedral embedding."""
    g = _graph_arg(text)
    embs, summary = enumerate_polyhedral(g)
    if not embs:
        raise GraphFormatError(f"{text} has no polyhedral embedding ({summary.reason})")
    return embs[0]


def cmd_construct(args, out: TextIO, err: TextIO) -> int:
    kind = args.kind
    p = args.params
    problems: list[str] = []
    try:
        if kind == "named":
            if len(p) != 1:
                raise ValueError("usage: construct named NAME")
            g = named_graph(p[0])
            print(write_graph6(g), file=out)
            return EXIT_OK
        if kind == "hextorus":
            if len(p) != 1:
                raise ValueError("usage: construct hextorus K")
            r = hex_torus(int(p[0]))
        elif kind == "petrie":
            if len(p) != 2 or p[0] != "hextorus":
                raise ValueError("usage: construct petrie hextorus K")
            k = int(p[1])
            black, _ = hex_torus_classes(k)
            r = petrie_switch(hex_torus(k), black)
        elif kind == "star":
            if len(p) != 2:
                raise ValueError("usage: construct star HOST GUEST [--at V W] [--matching a,b,c,a',b',c']")
            v, w = args.at
            matching = tuple(int(x) for x in args.matching.split(",")) if args.matching else None
            if matching is not None and len(matching) != 6:
                raise ValueError("--matching needs six comma separated ids")
            if args.embedded:
                r = star_product_embedded(_embedded_arg(p[0]), v, _embedded_arg(p[1]), w, matching)
            else:
                g = star_product(StarSpec(_graph_arg(p[0]), v, _graph_arg(p[1]), w, matching))
                print(write_graph6(g), file=out)
                return EXIT_OK
        else:
            raise ValueError(f"unknown construction {kind!r}")
    except (ValueError, KeyError, IndexError) as exc:
        print(f"construct: {exc}", file=err)
        return EXIT_INPUT
    if args.verify:
        problems = _validate(r)
        for msg in problems:
            print(f"construct: check failed: {msg}", file=err)
    out.write(write_rot(r, f"{kind} {' '.join(p)}"))
    return EXIT_CHECK if problems else EXIT_OK


# ---------------------------------------------------------------------------
# check and iso (.rot input)
# ---------------------------------------------------------------------------

CHECK_HEADER = ("block\tn\tfaces\tgenus\tpolyhedral\tobstruction\tdual_simple"
                "\tsmall_cycles_facial\thexagon_rule")


def _rot_blocks(path: str, err: TextIO) -> tuple[list[tuple[int, RotationSystem]], bool]:
    with _open_text(path) as fh:
        text = fh.read()
    good = []
    bad = False
    for i, item in iter_rot_blocks(text):
        if isinstance(item, RotFormatError):
            bad = True
            print(f"rot parse error: {item}", file=err)
        else:
            good.append((i, item))
    return good, bad


def cmd_check(args, out: TextIO, err: TextIO) -> int:
    blocks, bad = _rot_blocks(args.input, err)
    print(CHECK_HEADER, file=out)
    for i, r in blocks:
        fs = trace_faces(r)
        ob = find_obstruction(r)
        if ob is None:
            obs = "-"
        else:
            obs = f"{ob.kind}:{','.join(map(str, ob.sorted_vertices()))}"
        violations = small_cycle_violations(r)
        facial = not any(v.startswith("non-facial") for v in violations)
        hexes = not any(v.startswith("hexagon") for v in violations)
        print(f"{i}\t{r.n}\t{len(fs)}\t{fs.genus}\t{_yn(ob is None)}\t{obs}\t{_yn(dual_is_simple(r))}"
              f"\t{_yn(facial)}\t{_yn(hexes)}", file=out)
    return EXIT_INPUT if bad else EXIT_OK


def cmd_iso(args, out: TextIO, err: TextIO) -> int:
    blocks, bad = _rot_blocks(args.input, err)
    print("block\tn\tgenus\tcode\tgroup", file=out)
    first: dict[bytes, int] = {}
    for i, r in blocks:
        code = canon_embedded(r, not args.oriented)
        group = first.setdefault(code, i)
        print(f"{i}\t{r.n}\t{genus(r)}\t{code.hex()}\t{group}", file=out)
    print(f"{len(first)} isomorphism classes among {len(blocks)} blocks", file=err)
    return EXIT_INPUT if bad else EXIT_OK


# ---------------------------------------------------------------------------
# oracle, mingen, generate
# ---------------------------------------------------------------------------

def _oracle_job(job):
    g, cross = job
    found = brute_force_polyhedral(g)
    brute = EmbeddingSummary()
    for r in found:
        brute.add(genus(r))
    diff = None
    if cross:
        embs, _ = enumerate_polyhedral(g)
        a = {min(r.mask, _complement(r)) for r in found}
        b = {min(r.mask, _complement(r)) for r in embs}
        diff = a != b
    return brute, diff


def _complement(r: RotationSystem) -> int:
    return r.mask ^ ((1 << r.n) - 1)


def cmd_oracle(args, out: TextIO, err: TextIO) -> int:
    records, bad = _graph_records(args.input, err)
    for _, _, g, _ in records:
        if g is not None:
            _guard("oracle", g.n, args.override_guards)
    cross = args.cross_check
    print("line\tgraph6\tn\ttotal\tgenus_counts" + ("\tsearch" if cross else ""), file=out)
    status = EXIT_INPUT if bad else EXIT_OK
    jobs = [(g, cross) for _, _, g, _ in records if g is not None]
    results = _map(_oracle_job, jobs, args.jobs)
    for lineno, text, g, st in records:
        if g is None:
            print(f"{lineno}\t{text}\t-\t0\t-" + ("\t-" if cross else ""), file=out)
            continue
        brute, diff = next(results)
        line = f"{lineno}\t{text}\t{g.n}\t{brute.total}\t{brute.genus_string() or '-'}"
        if cross:
            line += "\tDIFF" if diff else "\tsame"
            if diff:
                status = EXIT_INPUT
        print(line, file=out)
    return status


def _mingen_job(job):
    g, profile = job
    if profile:
        return genus_profile(g)
    return min_genus(g)


def cmd_mingen(args, out: TextIO, err: TextIO) -> int:
    if args.input.lower() in NAMED_GRAPHS:
        records, bad = [(0, args.input, named_graph(args.input), "ok")], False
    else:
        records, bad = _graph_records(args.input, err)
    for _, _, g, _ in records:
        if g is not None:
            _guard("mingen", g.n, args.override_guards)
    jobs = [(g, args.profile) for _, _, g, _ in records if g is not None]
    results = _map(_mingen_job, jobs, args.jobs)
    print("line\tgraph6\tn\tmin_genus" if not args.profile
          else "line\tgraph6\tn\tgenus\tcount\tpolyhedral_count", file=out)
    for lineno, text, g, _ in records:
        if g is None:
            continue
        res = next(results)
        if args.profile:
            for row in res.tsv().splitlines()[1:]:
                print(f"{lineno}\t{text}\t{g.n}\t{row}", file=out)
        else:
            print(f"{lineno}\t{text}\t{g.n}\t{res}", file=out)
    return EXIT_INPUT if bad else EXIT_OK


def cmd_generate(args, out: TextIO, err: TextIO) -> int:
    _guard("generate", args.n, args.override_guards)
    for g in gen_cubic(args.n):
        print(write_graph6(g), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes (output order is unchanged)")
    common.add_argument("--override-guards", action="store_true", help="run past the default size limits")

    parser = argparse.ArgumentParser(prog="polyembed", description="Polyhedral embeddings of cubic graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="all polyhedral embeddings of graph6 input")
    p.add_argument("input", help='graph6 file, "-" for stdin')
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--mirrors", action="store_true", help="list both members of each mirror pair")
    p.add_argument("--max-genus", type=int, default=None, metavar="G")
    p.add_argument("--verify", action="store_true", help="run the validators on every embedding")
    p.add_argument("--rot", metavar="PATH", default=None, help='write .rot blocks here ("-" for stdout)')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", parents=[common], help="census rows for n = 4 .. MAX_N")
    p.add_argument("max_n", type=int)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("construct", parents=[common], help="named graphs, hexagonal tori, Petrie switches, star products")
    p.add_argument("kind", choices=["named", "hextorus", "petrie", "star"])
    p.add_argument("params", nargs="*")
    p.add_argument("--at", type=int, nargs=2, default=(0, 0), metavar=("V", "W"),
                   help="star product vertices in host and guest")
    p.add_argument("--matching", default=None, help="a,b,c,a',b',c' neighbour identification")
    p.add_argument("--embedded", action="store_true", help="star product of embeddings, written as .rot")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="verdicts for .rot blocks")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="brute-force polyhedral counts")
    p.add_argument("input")
    p.add_argument("--cross-check", action="store_true", help="compare with the search and report DIFF")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mingen", parents=[common], help="exhaustive minimum genus")
    p.add_argument("input", help='graph6 file, "-" for stdin, or a graph name')
    p.add_argument("--profile", action="store_true", help="full genus profile instead of the minimum")
    p.set_defaults(func=cmd_mingen)

    p = sub.add_parser("iso", parents=[common], help="canonical codes of .rot blocks")
    p.add_argument("input")
    p.add_argument("--oriented", action="store_true", help="do not identify mirror images")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("generate", parents=[common], help="connected cubic graphs as graph6")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except GuardError as exc:
        print(str(exc), file=err)
        return EXIT_GUARD
    except OSError as exc:
        print(f"{args.command}: {exc}", file=err)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"{args.command}: internal check failed: {exc}", file=err)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
