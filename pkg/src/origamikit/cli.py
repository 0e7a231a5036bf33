"""
Command line front end.

    origamikit info mucube
    origamikit veech surface.txt --format json
    origamikit closed mucube --partition fiber --assert-none
    origamikit enumerate mucube --radius 100
    origamikit reproduce

A target is a corpus name or a path to an origami file.  Exit status is 0
on success, 2 when a requested check fails, and 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from math import gcd
from pathlib import Path

from . import corpus
from .counting import constants_from_spectra, cusp_spectra, format_table
from .cylinders import (
    closed_saddle_report,
    direction_decomposition,
    direction_segments,
    fiber_partition,
)
from .enumeration import empirical_constants, enumerate_saddles, vectors_to_csv
from .origami import (
    AffineAutomorphism,
    GluingError,
    Origami,
    OrigamiFormatError,
    RotatedGluingSurface,
    automorphism_group,
    cyclic_cover,
    genus,
    is_isomorphic,
    read_origami,
    rotation_automorphisms,
    singularities,
    stratum,
    vertex_permutation,
)
from .perm import CycleParseError, NotTransitiveError, SizeMismatchError, parse_cycles, print_cycles
from .veech import OrbitTooLarge, cusps, orbit

EXIT_OK, EXIT_ERROR, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


def load_target(target: str) -> Origami:
    if target in corpus.names():
        return corpus.get(target).origami
    path = Path(target)
    if not path.exists():
        if path.suffix or len(path.parts) > 1:
            raise UsageError(f"no such file: {target}")
        raise corpus.UnknownSurfaceError(target)
    try:
        return read_origami(path)
    except OSError as e:
        raise UsageError(f"cannot read {target}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{target}: invalid JSON ({e.msg})") from None


def parse_direction(text: str | None) -> tuple[int, int]:
    """``"p/q"`` or ``"p,q"`` for the vector ``(p, q)``; ``inf`` is horizontal."""
    if text is None or text in ("inf", "oo", "infinity"):
        return (1, 0)
    for sep in ("/", ","):
        if sep in text:
            a, b = text.split(sep, 1)
            try:
                x, y = int(a), int(b)
            except ValueError:
                break
            if gcd(x, y) != 1:
                raise UsageError(f"direction {text!r} is not primitive")
            return (x, y)
    raise UsageError(f"cannot parse direction {text!r}; use p/q, p,q or inf")


def stratum_label(s: tuple[int, ...]) -> str:
    if not s:
        return "H()"
    parts = [f"{k}^{m}" if m > 1 else str(k) for k, m in sorted(Counter(s).items(), reverse=True)]
    return "H(" + ", ".join(parts) + ")"


def multiset_label(xs) -> str:
    return "{" + ", ".join(str(x) for x in sorted(xs)) + "}"


def emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_info(args) -> int:
    o = load_target(args.target)
    sing = singularities(o)
    data = {
        "name": o.name,
        "n": o.n,
        "genus": genus(o),
        "stratum": list(stratum(o)),
        "vertex_cycle_type": list(vertex_permutation(o).cycle_type()),
        "singularities": [{"id": s.id, "cone_multiple": s.cone_multiple, "squares": [x + 1 for x in s.squares]} for s in sing],
        "automorphisms": len(automorphism_group(o)),
    }
    text = "\n".join(
        [
            f"surface      {o.name or args.target}",
            f"squares      {o.n}",
            f"genus        {data['genus']}",
            f"stratum      {stratum_label(stratum(o))}",
            f"zeros        {len(sing)}",
            f"translations {data['automorphisms']}",
        ]
    )
    emit(args, data, text)
    return EXIT_OK


def cmd_veech(args) -> int:
    o = load_target(args.target)
    g = orbit(o, max_nodes=args.max_nodes)
    if args.dot:
        sys.stdout.write(g.to_dot())
        return EXIT_OK
    data = g.to_json()
    lines = [f"index {g.index}", f"-I in Veech group: {'yes' if g.minus_identity_in_veech_group else 'no'}"]
    lines += [f"{k:<3}= {v}" for k, v in data["generators"].items()]
    lines.append("cusp widths " + multiset_label(c["width"] for c in data["cusps"]))
    emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_cusps(args) -> int:
    o = load_target(args.target)
    cs = cusps(orbit(o, max_nodes=args.max_nodes))
    data = {"cusps": [c.to_json() for c in cs]}
    lines = [f"{'id':>3}  {'width':>5}  {'direction':>10}  {'label':>6}  word"]
    for c in cs:
        lines.append(f"{c.id:>3}  {c.width:>5}  {str(c.direction):>10}  {c.label:>6}  {c.word or '1'}")
    emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_cylinders(args) -> int:
    o = load_target(args.target)
    d = parse_direction(args.direction)
    cyl = direction_decomposition(o, d, args.marked)
    data = {"direction": list(d), "cylinders": [c.to_json() for c in cyl]}
    lines = [f"direction {d}: {len(cyl)} cylinders"]
    for (m, h), k in sorted(Counter((c.m, c.h) for c in cyl).items()):
        lines.append(f"  {k:>3} x  m={m} h={h} area={m * h}")
    emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_segments(args) -> int:
    o = load_target(args.target)
    d = parse_direction(args.direction)
    seg = direction_segments(o, d, args.marked)
    if not seg:
        print("warning: surface has no singularities; no saddle connections", file=sys.stderr)
    data = {"direction": list(d), "segments": [s.to_json() for s in seg]}
    lines = [f"direction {d}: {len(seg)} saddle connections"]
    lines += [f"  m={s.m}  {s.start} -> {s.end}" for s in seg]
    emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_constants(args) -> int:
    rows = []
    payload = []
    for target in args.targets:
        o = load_target(target)
        spectra = cusp_spectra(o)
        k = constants_from_spectra(spectra, o.n)
        rows.append((o.name or target, k))
        payload.append({"surface": o.name or target, **k.to_json(), "cusps": [s.to_json() for s in spectra]})
    data = payload[0] if len(payload) == 1 else {"surfaces": payload}
    emit(args, data, format_table(rows))
    return EXIT_OK


def _deck(o: Origami, spec: str):
    if spec == "translations":
        return automorphism_group(o)
    if spec == "half-turns":
        return automorphism_group(o) + rotation_automorphisms(o, 2)
    if spec == "rotations":
        return [f for q in range(4) for f in rotation_automorphisms(o, q)]
    # explicit generators: ';'-separated cycle texts, optionally "q:" prefixed
    out = []
    for part in spec.split(";"):
        part = part.strip()
        q = 0
        if ":" in part:
            head, part = part.split(":", 1)
            q = int(head)
        out.append(AffineAutomorphism(parse_cycles(part, o.n), q))
    return out


def cmd_closed(args) -> int:
    o = load_target(args.target)
    if args.partition == "discrete":
        partition = None
    else:
        partition = fiber_partition(o, _deck(o, args.deck))
    report = closed_saddle_report(o, partition)
    data = report.to_json()
    lines = [f"partition: {' '.join(multiset_label(c) for c in report.partition)}"]
    for c in report.cusps:
        lines.append(
            f"cusp {c.cusp} direction {c.direction} width {c.width}: "
            f"{len(c.segments)} saddle connections, {len(c.violations)} closed"
        )
        for s in c.violations:
            lines.append(f"    m={s.m}  {s.start} -> {s.end}")
    lines.append(f"closed saddle connections: {len(report.violations)}")
    emit(args, data, "\n".join(lines))
    if args.assert_none and report.violations:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_enumerate(args) -> int:
    o = load_target(args.target)
    if args.radius < 1:
        raise UsageError("--radius must be at least 1")
    if args.dump:
        vectors = enumerate_saddles(o, args.radius, jobs=args.jobs)
        path = Path(args.dump)
        if path.suffix == ".json":
            path.write_text(json.dumps([v.to_json() for v in vectors]) + "\n", encoding="utf-8")
        else:
            path.write_text(vectors_to_csv(vectors), encoding="utf-8")
    emp = empirical_constants(o, args.radius, jobs=args.jobs)
    k = constants_from_spectra(cusp_spectra(o), o.n)
    data = emp.to_json(k.c, k.a)
    lines = [
        f"R = {args.radius}   N(R) = {emp.N}   A(R) = {emp.A}",
        f"zeta(2) N / pi R^2 = {emp.ratio_c:.6f}   (c = {k.c}, rel. error {data['rel_error_c']:.4f})",
        f"zeta(2) A / pi R^2 = {emp.ratio_a:.6f}   (a = {k.a}, rel. error {data['rel_error_a']:.4f})",
    ]
    emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = load_target(args.first), load_target(args.second)
    q = is_isomorphic(a, b)
    data = {"isomorphic": q is not None, "relabeling": None if q is None else print_cycles(q)}
    if q is None:
        text = "not isomorphic"
    else:
        text = f"isomorphic\nrelabeling {print_cycles(q) or '()'}"
    emit(args, data, text)
    return EXIT_OK


def cmd_cover(args) -> int:
    if args.gluing == "cube":
        s = corpus.cube_gluing()
    else:
        try:
            s = RotatedGluingSurface.from_json(Path(args.gluing).read_text(encoding="utf-8"))
        except OSError as e:
            raise UsageError(f"cannot read {args.gluing}: {e.strerror}") from None
        except json.JSONDecodeError as e:
            raise UsageError(f"{args.gluing}: invalid JSON ({e.msg})") from None
    o = cyclic_cover(s)
    if args.format == "json":
        sys.stdout.write(json.dumps(o.to_json()) + "\n")
    else:
        sys.stdout.write(o.to_text())
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.name:
        e = corpus.get(args.name)
        if args.format == "json":
            sys.stdout.write(json.dumps(e.origami.to_json()) + "\n")
        else:
            sys.stdout.write(e.origami.to_text())
        return EXIT_OK
    data = {"surfaces": [{"name": e, "n": corpus.get(e).expected["n"], "provenance": corpus.get(e).provenance} for e in corpus.names()]}
    lines = [f"{e['name']:<18} n={e['n']:<4} {e['provenance']}" for e in data["surfaces"]]
    emit(args, data, "\n".join(lines))
    return EXIT_OK


# reproduction of the published tables


def _fmt(key: str, value) -> str:
    if key == "stratum":
        return stratum_label(value)
    if key == "widths":
        return multiset_label(value)
    return str(value)


def compute_invariants(o: Origami) -> dict:
    g = orbit(o)
    k = constants_from_spectra(cusp_spectra(o, g), o.n)
    return {
        "n": o.n,
        "genus": genus(o),
        "stratum": stratum(o),
        "index": g.index,
        "widths": tuple(sorted(c.width for c in cusps(g))),
        "c": k.c,
        "c1": k.c1,
        "a": k.a,
        "a1": k.a1,
    }


def compare_entry(entry, computed: dict) -> list[tuple[str, str, str, str]]:
    """Rows ``(key, published, computed, status)`` with status ok, erratum or MISMATCH."""
    rows = []
    for key, published in entry.expected.items():
        if key not in computed:
            continue
        got = computed[key]
        if got == published:
            status = "ok"
        elif key in entry.errata and entry.errata[key][0] == got:
            status = "erratum"
        else:
            status = "MISMATCH"
        rows.append((key, _fmt(key, published), _fmt(key, got), status))
    return rows


TABLES = [
    ("Strata and genera", ["mucube", "muoctahedron", "mutetrahedron", "octa4", "octa8_cover", "truncated_octa8"], ["stratum", "genus"]),
    ("Veech group indices", list(corpus.PUBLISHED), ["index", "widths"]),
    ("Counting constants", list(corpus.PUBLISHED), ["c", "c1", "a", "a1"]),
    ("Platonic solids", ["tetrahedron_cover", "octa8_cover", "cube_cover", "icosahedron_cover"], ["widths", "c", "a", "a1"]),
]


def reproduce(entries: dict | None = None, out=None) -> int:
    """Print published against computed values; 0 iff everything matches up to errata."""
    out = out or sys.stdout
    entries = entries or {n: corpus.get(n) for n in corpus.names()}
    computed = {name: compute_invariants(e.origami) for name, e in entries.items()}
    failed = False
    notes = {}
    for title, names, keys in TABLES:
        out.write(f"\n{title}\n")
        rows = []
        for name in names:
            if name not in entries:
                continue
            e = entries[name]
            for key, pub, got, status in compare_entry(e, computed[name]):
                if key not in keys:
                    continue
                rows.append((name, key, pub, got, status))
                failed |= status == "MISMATCH"
                if status == "erratum":
                    notes[(name, key)] = e.errata[key][1]
        header = ("surface", "quantity", "published", "computed", "status")
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(5)]
        for r in [header, *rows]:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    if notes:
        out.write("\nErrata\n")
        for (name, key), note in notes.items():
            out.write(f"  {name}.{key}: {note}\n")
        for name, e in entries.items():
            for key, (_, note) in e.errata.items():
                if key not in computed[name]:
                    out.write(f"  {name}.{key}: {note}\n")
    out.write("\n" + ("MISMATCHES FOUND\n" if failed else "all rows match (modulo listed errata)\n"))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_reproduce(args) -> int:
    return reproduce()


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is reserved for failed checks here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="origamikit", description="Square-tiled surface toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, func, help_, target=True):
        sp = sub.add_parser(name, help=help_)
        if target:
            sp.add_argument("target", help="corpus name or origami file")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    add("info", cmd_info, "genus, stratum, singularities")
    sp = add("veech", cmd_veech, "Veech group index and coset permutations")
    sp.add_argument("--dot", action="store_true", help="print the coset graph in DOT")
    sp.add_argument("--max-nodes", type=int, default=10**6)
    sp = add("cusps", cmd_cusps, "cusps and widths")
    sp.add_argument("--max-nodes", type=int, default=10**6)
    for name, func in (("cylinders", cmd_cylinders), ("segments", cmd_segments)):
        sp = add(name, func, f"{name} in a rational direction")
        sp.add_argument("--direction", help="p/q or p,q for the vector (p, q); default horizontal")
        sp.add_argument("--marked", action="store_true", help="treat regular vertices as marked points")
    sp = add("constants", cmd_constants, "exact counting constants", target=False)
    sp.add_argument("targets", nargs="+", metavar="target")
    sp = add("closed", cmd_closed, "closed saddle connection report")
    sp.add_argument("--partition", choices=("discrete", "fiber"), default="discrete")
    sp.add_argument(
        "--deck",
        default="translations",
        help="group for --partition fiber: translations, half-turns, rotations, or "
        "';'-separated cycle texts with optional 'q:' quarter-turn prefix",
    )
    sp.add_argument("--assert-none", action="store_true", help="exit 2 if any closed saddle connection exists")
    sp = add("enumerate", cmd_enumerate, "brute-force saddle connection counts")
    sp.add_argument("--radius", type=float, default=50)
    sp.add_argument("--jobs", "--threads", type=int, default=1, dest="jobs")
    sp.add_argument("--dump", help="write all vectors to this .csv or .json file")
    sp = add("iso", cmd_iso, "isomorphism test", target=False)
    sp.add_argument("first")
    sp.add_argument("second")
    sp = add("cover", cmd_cover, "translation cover of a rotated gluing", target=False)
    sp.add_argument("gluing", help="gluing JSON file, or 'cube'")
    sp = add("corpus", cmd_corpus, "list or export built-in surfaces", target=False)
    sp.add_argument("name", nargs="?")
    add("reproduce", cmd_reproduce, "compare all published tables with computed values", target=False)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except corpus.UnknownSurfaceError as e:
        print(f"error: {e}", file=sys.stderr)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
    except CycleParseError as e:
        print(f"error: malformed permutation: {e}", file=sys.stderr)
    except (OrigamiFormatError, GluingError) as e:
        print(f"error: {e}", file=sys.stderr)
    except NotTransitiveError as e:
        print(f"error: disconnected surface: {e}", file=sys.stderr)
    except SizeMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
    except OrbitTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
