"""Command-line entry point.

Data goes to stdout or to ``--out`` files; logging goes to stderr.
"""

import argparse
import contextlib
import dataclasses as dc
import io
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from wipac_dev_tools import argparse_tools

from ..graph.gadgets import GadgetKind, certificate
from ..graph.hcpfile import read_hcp
from ..graph.solver import HcResult, HcStatus, SearchGraph, SolveMode, solve, verify_cycle
from ..reduction.builder import Instance, build_instance, odd_part_length
from ..reduction.export import export_hcp, load_instance
from ..reduction.peals import CallSequence, decode, expand, verify_peal
from ..ringing.catalog import CATALOG, GROUP_INDICES, get_group
from ..ringing.groups import validate_part_group
from ..ringing.rows import Row
from ..ringing.sixes import Method, partition_extent
from ..utils import json_util
from ..utils.config import DESK_SCALE_VERTICES, SolverConfig
from ..utils.logs import LOG_LEVELS, configure_logging
from .manifest import MANIFEST, ManifestEntry, size_mismatches

LOGGER = logging.getLogger(__name__)

PROG = "peal-hcp"


###############################################################################
# Error Patterns

# peal-hcp build: error: the following arguments are required: --group, --out
ARGUMENTS_REQUIRED_PATTERN = re.compile(r".*(the following arguments are required: .+)")

# peal-hcp: error: unrecognized arguments: --xtra 1
UNRECOGNIZED_ARGUMENTS_PATTERN = re.compile(r".*(unrecognized arguments:) (.+)")

# argument --group: invalid choice: '9.99' (choose from ...)
INVALID_CHOICE_PATTERN = re.compile(r"(argument .+: invalid choice: .+)")

# argument --threads: invalid positive_int value: 'two'
INVALID_VALUE_PATTERN = re.compile(r"(argument .+: invalid) .+ value: ('.+')")

# argument --budget: must be positive: -3
FROM_ARGUMENT_TYPE_ERROR_PATTERN = re.compile(r"(argument .+: .+)")


def _translate_usage_error(captured_stderr: str) -> str:
    """Reduce argparse's usage dump to the one line that matters."""
    if match := ARGUMENTS_REQUIRED_PATTERN.search(captured_stderr):
        return match.group(1)
    elif match := UNRECOGNIZED_ARGUMENTS_PATTERN.search(captured_stderr):
        return f"{match.group(1)} {match.group(2)}"
    elif match := INVALID_CHOICE_PATTERN.search(captured_stderr):
        return match.group(1)
    elif match := INVALID_VALUE_PATTERN.search(captured_stderr):
        return f"{match.group(1)} value: {match.group(2)}"
    elif match := FROM_ARGUMENT_TYPE_ERROR_PATTERN.search(captured_stderr):
        return match.group(1)
    lines = [ln for ln in captured_stderr.splitlines() if ln.strip()]
    return lines[-1] if lines else "invalid arguments"


###############################################################################
# Argument types


def positive_float(arg: str) -> float:
    val = float(arg)
    return argparse_tools.validate_arg(
        val, val > 0, argparse.ArgumentTypeError(f"must be positive: {arg}")
    )


def positive_int(arg: str) -> int:
    val = int(arg)
    return argparse_tools.validate_arg(
        val, val >= 1, argparse.ArgumentTypeError(f"must be at least 1: {arg}")
    )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Bobs-only Stedman and Erin Triples as Hamiltonian cycle problems.",
    )
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="WARNING",
        help="logging threshold (logs go to stderr)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sixes", help="the 840 sixes of the extent")
    p.add_argument("--list", action="store_true", help="print every six and its six-ends")

    p = sub.add_parser("groups", help="part groups in the catalog")
    p.add_argument("--list", action="store_true", help="print one line per group")
    p.add_argument("--group", choices=GROUP_INDICES, help="show one group's elements and checks")

    p = sub.add_parser("gadget", help="verify the in-out property of a gadget")
    p.add_argument("--check", required=True, choices=[k.value for k in GadgetKind])

    p = sub.add_parser("build", help="write the HCP instance for a method and group")
    p.add_argument("--method", required=True, choices=[m.value for m in Method])
    p.add_argument("--group", required=True, choices=GROUP_INDICES)
    p.add_argument(
        "--drop-self-edges",
        action="store_true",
        help="leave out wiring edges from a gadget to itself",
    )
    p.add_argument(
        "--prefer",
        action="append",
        default=[],
        metavar="ROW",
        help="take the six of ROW as its orbit's representative (repeatable)",
    )
    p.add_argument("--out", required=True, type=Path, help="HCP file to write")

    p = sub.add_parser("solve", help="decide or enumerate Hamiltonian cycles of an HCP file")
    p.add_argument("--in", dest="in_path", required=True, type=Path)
    p.add_argument("--enumerate", action="store_true", help="find every cycle")
    p.add_argument("--budget", type=positive_float, default=None, help="seconds")
    p.add_argument("--threads", type=positive_int, default=1)

    p = sub.add_parser("decode", help="turn a solver cycle back into calls")
    p.add_argument("--in", dest="in_path", required=True, type=Path, help="exported HCP file or its .meta")
    p.add_argument("--cycle", required=True, type=Path, help="output of the solve command")
    p.add_argument("--index", type=positive_int, default=1, help="which cycle of the file (1-based)")
    p.add_argument("--out", type=Path, default=None, help="write the call sequence here")

    p = sub.add_parser("verify", help="expand a call sequence and check its rows")
    p.add_argument("--calls", required=True, type=Path)

    p = sub.add_parser("reproduce", help="rebuild the published instances")
    p.add_argument("--table", action="store_true", required=True, help="all 38 manifest instances")
    p.add_argument("--solve", action="store_true", help="also decide the desk-scale instances")
    p.add_argument("--solve-hard", action="store_true", help="also attempt the rest (needs --budget)")
    p.add_argument("--budget", type=positive_float, default=None, help="seconds per instance")
    p.add_argument("--threads", type=positive_int, default=1)
    p.add_argument("--json", action="store_true", help="print a JSON report instead of text")

    return parser


###############################################################################
# Commands


def cmd_sixes(args: argparse.Namespace) -> int:
    extent = partition_extent()
    if args.list:
        for six in extent:
            print(six.format())
    else:
        print(f"{len(extent)} sixes, {sum(len(s.six_ends) for s in extent)} six-ends")
    return 0


def cmd_groups(args: argparse.Namespace) -> int:
    if args.group:
        entry = CATALOG[args.group]
        group = get_group(args.group)
        print(f"group {entry.index_name} order {group.order}")
        print("generators: " + " ".join(entry.generators))
        print("elements: " + " ".join(str(g) for g in group.elements))
        print("checks: " + validate_part_group(group).describe())
        return 0
    for entry in CATALOG.values():
        blocks = "/".join(map(str, entry.round_blocks))
        print(
            f"{entry.index_name}  {','.join(entry.generators):<16} order {entry.order:<3} "
            f"parts {entry.order:<3} sixes/part {entry.sixes_per_part:<3} round blocks {blocks}"
        )
    return 0


def cmd_gadget(args: argparse.Namespace) -> int:
    cert = certificate(GadgetKind(args.check))
    sys.stdout.write(cert.format())
    return 0 if cert.ok else 1


def cmd_build(args: argparse.Namespace) -> int:
    method = Method(args.method)
    prefer = [Row.from_str(r) for r in args.prefer]
    inst = build_instance(method, args.group, args.drop_self_edges, prefer)
    if odd_part_length(method, get_group(args.group).order):
        LOGGER.warning("%s has parts of odd length: no quick/slow alternation is possible", inst.name)
    for path in export_hcp(inst, args.out):
        print(path)
    print(f"{inst.name} DIMENSION {inst.vertex_count} EDGES {inst.edge_count}")
    return 0


def _solve_graph(g: SearchGraph, mode: SolveMode, budget: Optional[float], threads: int) -> HcResult:
    if budget is None and g.n > DESK_SCALE_VERTICES:
        LOGGER.warning(
            "%d vertices and no --budget: this search may not finish", g.n
        )
    result = solve(g, mode, SolverConfig(budget=budget, threads=threads))
    edges = g.edges()
    for c in result.cycles:
        if not verify_cycle(g.n, edges, c):
            raise RuntimeError(f"solver returned a non-Hamiltonian cycle: {c[:8]}...")
    return result


def cmd_solve(args: argparse.Namespace) -> int:
    hcp = read_hcp(args.in_path)
    g = SearchGraph(hcp.dimension, hcp.edges)
    mode = SolveMode.ENUMERATE if args.enumerate else SolveMode.DECIDE
    result = _solve_graph(g, mode, args.budget, args.threads)
    for c in result.cycles:
        print(" ".join(map(str, c)))
    print(result.summary())
    LOGGER.info("%s: %d nodes in %.2fs", hcp.name, result.nodes, result.elapsed)
    return 0


def _read_cycles(path: Path) -> List[List[int]]:
    cycles = []
    with open(path, encoding="ascii") as f:
        for line_no, line in enumerate(f, start=1):
            text = line.strip()
            if not text or text.startswith(("#", "STATUS")):
                continue
            try:
                cycles.append([int(tok) for tok in text.split()])
            except ValueError:
                raise ValueError(f"{path}:{line_no}: not a cycle line") from None
    return cycles


def _instance_paths(path: Path) -> Tuple[Path, Optional[Path]]:
    if path.suffix == ".meta":
        return path.with_suffix(""), path
    return path, None


def cmd_decode(args: argparse.Namespace) -> int:
    hcp_path, meta_path = _instance_paths(args.in_path)
    inst = load_instance(hcp_path, meta_path)
    cycles = _read_cycles(args.cycle)
    if args.index > len(cycles):
        raise ValueError(f"{args.cycle} holds {len(cycles)} cycles, no cycle {args.index}")
    cs = decode(inst, cycles[args.index - 1])
    text = cs.to_text()
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as f:
            f.write(text)
        print(args.out)
    else:
        sys.stdout.write(text)
    print(f"# {cs.concise()}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.calls, encoding="ascii") as f:
        cs = CallSequence.from_text(f.read())
    blocks = expand(cs)
    verdict = verify_peal(blocks, cs.method)
    print(cs.concise())
    print(f"round blocks {blocks.block_count} rows {blocks.row_count}")
    print(f"verdict {verdict.verdict.value}")
    if not verdict.ok:
        LOGGER.error("%s: %s", args.calls, verdict.message)
        return 1
    return 0


###############################################################################
# reproduce


@dc.dataclass
class _Report:
    entry: ManifestEntry
    vertices: int
    edges: int
    status: Optional[str] = None
    count: Optional[int] = None
    authoritative: bool = True

    @property
    def size_ok(self) -> bool:
        return (self.vertices, self.edges) == (self.entry.vertices, self.entry.edges)

    @property
    def status_ok(self) -> bool:
        if self.status is None or self.status == HcStatus.TIMEOUT.value:
            return True
        return not self.entry.known or self.status == self.entry.hamiltonicity.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.entry.method.value,
            "group": self.entry.group_index,
            "vertices": self.vertices,
            "edges": self.edges,
            "expected_vertices": self.entry.vertices,
            "expected_edges": self.entry.edges,
            "size_ok": self.size_ok,
            "expected_status": self.entry.hamiltonicity.value,
            "expected_count": self.entry.count,
            "status": self.status,
            "count": self.count,
            "status_ok": self.status_ok,
        }

    def format(self) -> str:
        line = f"{self.entry.label:<16} {self.vertices:>6} {self.edges:>6}  "
        if self.size_ok:
            line += "size ok"
        else:
            line += f"size MISMATCH (expected {self.entry.vertices} {self.entry.edges})"
        if self.status is not None:
            line += f"  {self.status}"
            if self.count is not None:
                line += f" ({self.count}{'' if self.authoritative else '+'})"
            line += f" expected {self.entry.hamiltonicity.value}"
            if not self.status_ok:
                line += " STATUS MISMATCH"
        return line


def _reproduce_one(entry: ManifestEntry, inst: Instance, args: argparse.Namespace) -> _Report:
    report = _Report(entry, inst.vertex_count, inst.edge_count)
    if not (args.solve or args.solve_hard):
        return report

    if odd_part_length(entry.method, get_group(entry.group_index).order):
        report.status, report.count = HcStatus.NON_HAMILTONIAN.value, 0
        return report

    desk = entry.known and inst.vertex_count <= DESK_SCALE_VERTICES
    if not (desk or args.solve_hard):
        return report

    mode = SolveMode.ENUMERATE if entry.count is not None else SolveMode.DECIDE
    result = _solve_graph(inst.search_graph(), mode, args.budget, args.threads)
    report.status = result.status.value
    report.authoritative = result.authoritative
    if mode is SolveMode.ENUMERATE:
        report.count = result.count
        if result.authoritative and result.count != entry.count:
            LOGGER.warning(
                "%s: %d Hamiltonian cycles, %d published", entry.label, result.count, entry.count
            )
    return report


def cmd_reproduce(args: argparse.Namespace) -> int:
    if args.solve_hard and args.budget is None:
        raise ValueError("--solve-hard needs --budget")

    formula_bad = size_mismatches()
    for line in formula_bad:
        LOGGER.error("manifest disagrees with the closed form: %s", line)

    reports = []
    for entry in MANIFEST:
        inst = build_instance(entry.method, entry.group_index)
        report = _reproduce_one(entry, inst, args)
        if not report.size_ok:
            LOGGER.error("%s: %s", entry.label, report.format())
        reports.append(report)

    size_ok = sum(r.size_ok for r in reports)
    status_bad = [r for r in reports if not r.status_ok]
    summary = f"{size_ok}/{len(reports)} size matches"
    if args.solve or args.solve_hard:
        summary += f", {len(status_bad)} status mismatches"

    if args.json:
        doc = {"instances": [r.to_dict() for r in reports], "summary": summary}
        print(json_util.json_encode(doc, indent=2))
    else:
        for r in reports:
            print(r.format())
        print(summary)
    return 0 if size_ok == len(reports) and not status_bad and not formula_bad else 1


COMMANDS = {
    "sixes": cmd_sixes,
    "groups": cmd_groups,
    "gadget": cmd_gadget,
    "build": cmd_build,
    "solve": cmd_solve,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "reproduce": cmd_reproduce,
}


###############################################################################


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse `argv`, dispatch, and return the exit code (never exits)."""
    parser = make_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stderr(captured):
            args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code in (0, None):  # --help
            return 0
        msg = _translate_usage_error(captured.getvalue())
        sys.stderr.write(f"{PROG}: error: {msg} (see --help)\n")
        return 2

    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except OSError as e:
        LOGGER.error("%s: %s", e.filename or args.command, e.strerror or e)
        return 1
    except ValueError as e:
        LOGGER.error("%s: %s", args.command, e)
        return 2
    except RuntimeError as e:
        LOGGER.error("%s failed: %s", args.command, e)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
