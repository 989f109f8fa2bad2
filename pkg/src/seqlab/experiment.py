"""Experiment runner: load a sequence, check it globally and prime by prime.

Reports follow the asterisk convention: a prime where every check passes over
the prefix is only ever "realizable*" (evidence, not proof), while a failing
prime carries an unequivocal witness.  Any local failure also rules out
realizability by a nilpotent group endomorphism, which the report surfaces as
an annotation.

The report document is a plain JSON-able dict; ``render_report`` serializes
it as JSON, CSV (one row per scanned prime, global columns repeated), or a
human-readable table, all carrying the same information.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .arith import primes_in_range
from .bfile import SHIFT_TO_1, fetch_oeis, parse_bfile, to_sequence
from .classical import derived_bernoulli, sequence_e
from .errors import DepthError
from .realizability import (
    RealizabilityReport,
    Sequence1,
    Verdict,
    check_realizable,
    magical_report,
    p_part_sequence,
    shift as shift_sequence,
)

DEFAULT_DEPTH_CAP = 400
DEFAULT_PRIME_LIMIT = 200

BUILTIN_DEPTH = 200

TABLE = "table"
JSON = "json"
CSV = "csv"


def load_sequence(
    source: str,
    *,
    depth: int | None = None,
    absolute: bool = False,
    offset_policy: str = SHIFT_TO_1,
    scale: int = 1,
    fixtures_dir=None,
    cache_dir=None,
    online: bool = False,
    label: str | None = None,
) -> Sequence1:
    """Resolve a sequence source: builtin name, b-file path, or A-number.

    Builtins (computed exactly): 't' and 'b' (numerator/denominator of
    |B_{2n}/2n|), 'e' (positive Euler numbers), 'd' (von Staudt-Clausen
    denominators).  Anything containing a path separator or ending in .txt is
    read as a local b-file; otherwise the source is treated as an A-number
    and resolved through fixtures/cache/network.
    """
    name = source.strip()
    if name in ("t", "b", "d"):
        n = depth or BUILTIN_DEPTH
        der = derived_bernoulli(n)
        seq = {
            "t": der.numerators,
            "b": der.denominators,
            "d": der.clausen_denominators,
        }[name]
    elif name == "e":
        seq = sequence_e(depth or BUILTIN_DEPTH)
    else:
        if "/" in name or "\\" in name or name.endswith(".txt"):
            with open(name, "r", encoding="utf-8") as fh:
                bf = parse_bfile(fh.read(), source=name)
        else:
            bf = fetch_oeis(
                name,
                online=online,
                fixtures_dir=fixtures_dir,
                cache_dir=cache_dir,
            )
        seq = to_sequence(bf, policy=offset_policy, absolute=absolute)
    if scale != 1:
        if scale < 1:
            raise ValueError("scale must be >= 1")
        seq = Sequence1(tuple(scale * v for v in seq.values), seq.label)
        seq = seq.relabel(f"{scale}x{seq.label}" if seq.label else f"{scale}x")
    if label is not None:
        seq = seq.relabel(label)
    return seq


@dataclass
class ExperimentSpec:
    """What to run: the sequence, the depth, the primes, and optional extras.

    ``local_checks`` selects which checks decide the per-prime partition into
    realizable*/not-realizable; the Dold congruence and the sign condition
    together characterize realizability, but published observation lists for
    the catalogued sequences were computed from the Dold/Arias test alone, so
    the catalog presets restrict to ("dold",).
    """

    source: str
    label: str | None = None
    depth: int | None = None  # default: min(available terms, 400)
    prime_limit: int | None = None  # scan primes <= limit (default 200)
    primes: tuple[int, ...] | None = None  # explicit prime list overrides limit
    include_local: bool = True
    local_checks: tuple[str, ...] = ("dold", "sign")
    include_magical: bool = False
    max_shift: int = 5
    shift: int = 0  # drop this many leading terms before checking
    absolute: bool = False
    offset_policy: str = SHIFT_TO_1
    scale: int = 1
    fixtures_dir: str | None = None
    cache_dir: str | None = None
    online: bool = False


# Catalogued local-realizability surveys over the bundled fixtures.  Depth is
# pinned to the extent of the term lists the observed realizable*/failing
# prime partitions were derived from (more terms reveal strictly more
# failures, so reproducing an observation requires honoring its horizon);
# the prime limit covers the last catalogued failing prime.
OBSERVATION_CATALOG: dict[str, dict] = {
    "A000032": {"label": "lucas", "depth": 38, "prime_limit": 110},
    "A002895": {"label": "domb", "depth": 18, "prime_limit": 180},
    "A005259": {"label": "apery-1", "depth": 18, "prime_limit": 73},
    "A005258": {"label": "apery-2", "depth": 20, "prime_limit": 160},
    "A005725": {"label": "quadrinomial", "depth": 30, "prime_limit": 67},
    "A054783": {"label": "fibonacci-squares", "depth": 15, "prime_limit": 110, "scale": 5},
    "A053175": {"label": "catalan-larcombe-french", "depth": 200, "prime_limit": 100},
    "A001850": {"label": "delannoy", "depth": 26, "prime_limit": 100},
}


def catalog_spec(a_number: str, **overrides) -> ExperimentSpec:
    """ExperimentSpec preset for a catalogued sequence (Dold-partition)."""
    from .bfile import normalize_a_number

    a = normalize_a_number(a_number)
    if a not in OBSERVATION_CATALOG:
        raise ValueError(f"{a} is not in the observation catalog")
    params = dict(OBSERVATION_CATALOG[a])
    params.update(overrides)
    return ExperimentSpec(source=a, local_checks=("dold",), **params)


def _verdict_json(name: str, v: Verdict) -> dict:
    witness = None
    if not v.passed:
        witness = {"n": v.n, "value": v.value}
        witness.update(v.detail)
    return {"type": name, "status": v.status, "witness": witness}


def _report_checks(report: RealizabilityReport) -> list[dict]:
    return [
        _verdict_json("dold", report.dold),
        _verdict_json("sign", report.sign),
        _verdict_json("monotone", report.monotone),
    ]


def _local_failure_witness(
    report: RealizabilityReport, checks: tuple[str, ...] = ("dold", "sign")
) -> dict | None:
    # earliest witness among the selected checks (dold wins ties)
    failing = [
        (v.n, name, v)
        for name, v in (("dold", report.dold), ("sign", report.sign))
        if name in checks and not v.passed
    ]
    if not failing:
        return None
    n, name, v = min(failing, key=lambda item: (item[0], item[1] != "dold"))
    return {"check": name, "n": v.n, "value": v.value}


def run_experiment(spec: ExperimentSpec) -> dict:
    """Execute an experiment spec and return the report document."""
    seq = load_sequence(
        spec.source,
        depth=spec.depth,
        absolute=spec.absolute,
        offset_policy=spec.offset_policy,
        scale=spec.scale,
        fixtures_dir=spec.fixtures_dir,
        cache_dir=spec.cache_dir,
        online=spec.online,
        label=spec.label,
    )
    if spec.shift:
        seq = shift_sequence(seq, spec.shift)
    depth = spec.depth if spec.depth is not None else min(len(seq), DEFAULT_DEPTH_CAP)
    if depth > len(seq):
        raise DepthError(f"depth {depth} requested, only {len(seq)} terms available")
    seq = Sequence1(seq.values[:depth], seq.label)

    doc: dict = {
        "sequence_id": seq.label or spec.source,
        "depth": depth,
        "checks": _report_checks(check_realizable(seq)),
        "local": [],
        "annotations": [],
    }

    if spec.include_local:
        if spec.primes is not None:
            primes = sorted(spec.primes)
        else:
            primes = primes_in_range(2, spec.prime_limit or DEFAULT_PRIME_LIMIT)
        failing = []
        for q in primes:
            report = check_realizable(p_part_sequence(seq, q))
            witness = _local_failure_witness(report, spec.local_checks)
            status = "realizable*" if witness is None else "not-realizable"
            if witness is not None:
                failing.append(q)
            doc["local"].append({"prime": q, "status": status, "witness": witness})
        if failing:
            doc["annotations"].append(
                "not nilpotently realizable: local failure at prime(s) "
                + ", ".join(str(q) for q in failing)
            )

    if spec.include_magical:
        mag = magical_report(seq, spec.max_shift)
        entries = []
        for k, report in mag.entries:
            witness = _local_failure_witness(report)
            entries.append(
                {
                    "shift": k,
                    "status": "pass" if witness is None else "fail",
                    "witness": witness,
                }
            )
        doc["magical"] = {
            "max_shift": spec.max_shift,
            "all_pass": mag.all_pass,
            "entries": entries,
        }

    return doc


def not_realizable_primes(doc: dict) -> list[int]:
    """Primes the report marks as carrying a failure witness."""
    return [row["prime"] for row in doc["local"] if row["status"] == "not-realizable"]


def realizable_star_primes(doc: dict) -> list[int]:
    return [row["prime"] for row in doc["local"] if row["status"] == "realizable*"]


def render_report(doc: dict, fmt: str = TABLE) -> str:
    """Serialize a report document as a table, JSON, or CSV."""
    if fmt == JSON:
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == CSV:
        return _render_csv(doc)
    if fmt == TABLE:
        return _render_table(doc)
    raise ValueError(f"unknown format {fmt!r}")


def _witness_str(witness: dict | None) -> str:
    if witness is None:
        return ""
    parts = [f"{k}={witness[k]}" for k in witness]
    return " ".join(parts)


def _render_table(doc: dict) -> str:
    lines = [f"sequence: {doc['sequence_id']}    depth: {doc['depth']}"]
    for check in doc["checks"]:
        stat = check["status"]
        if check["witness"] is None:
            lines.append(f"  {check['type']:<9} {stat}({doc['depth']})")
        else:
            lines.append(f"  {check['type']:<9} {stat} [{_witness_str(check['witness'])}]")
    if doc["local"]:
        ok = [str(r["prime"]) for r in doc["local"] if r["status"] == "realizable*"]
        bad = [r for r in doc["local"] if r["status"] == "not-realizable"]
        if ok:
            lines.append("  realizable* at: " + " ".join(ok))
        if bad:
            lines.append("  not realizable at:")
            for r in bad:
                lines.append(
                    f"    {r['prime']}: {_witness_str(r['witness'])}"
                )
    if "magical" in doc:
        mag = doc["magical"]
        lines.append(
            f"  magical up to shift {mag['max_shift']}: "
            + ("yes" if mag["all_pass"] else "no")
        )
        for entry in mag["entries"]:
            if entry["status"] == "fail":
                lines.append(
                    f"    shift {entry['shift']} fails [{_witness_str(entry['witness'])}]"
                )
    for note in doc["annotations"]:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


_CSV_GLOBAL = [
    "sequence_id",
    "depth",
    "dold_status",
    "dold_n",
    "dold_value",
    "sign_status",
    "sign_n",
    "sign_value",
    "monotone_status",
    "monotone_n",
    "monotone_value",
]
_CSV_LOCAL = ["prime", "local_status", "witness_check", "witness_n", "witness_value"]


def _render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_GLOBAL + _CSV_LOCAL + ["annotations"])
    prefix = [doc["sequence_id"], doc["depth"]]
    for check in doc["checks"]:
        w = check["witness"]
        prefix += [check["status"], w["n"] if w else "", w["value"] if w else ""]
    notes = "; ".join(doc["annotations"])
    if doc["local"]:
        for row in doc["local"]:
            w = row["witness"]
            writer.writerow(
                prefix
                + [
                    row["prime"],
                    row["status"],
                    w["check"] if w else "",
                    w["n"] if w else "",
                    w["value"] if w else "",
                ]
                + [notes]
            )
    else:
        writer.writerow(prefix + ["", "", "", "", ""] + [notes])
    return buf.getvalue()
