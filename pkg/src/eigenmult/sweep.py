"""The verification sweep engine: run checkers over a corpus, emit reports.

A sweep takes a stream of graphs, an s, a list of eigenvalues and a mode,
applies the matching checker to every in-hypothesis (graph, eigenvalue)
pair, and collects one record per pair.  Every emitted record's
multiplicity is confirmed by both oracles (characteristic-polynomial
factor power and exact rank over Q(lambda)); a mismatch aborts the sweep,
since it would mean the toolkit itself is unsound.

Reports are deterministic: records are sorted, so parallel and serial
runs produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebraic import AlgebraicNumber, rank_multiplicity
from .characterize import (
    ClassificationVerdict,
    check_bound,
    classify_tree,
    classify_unicyclic,
    family_membership,
    is_starlike_exact,
    unicyclic_decompositions,
)
from .enumeration import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    cyclomatic_number,
    is_connected,
    is_in_Gs,
    is_tree,
    pendant_vertices,
    q_s_set,
)
from .polynomials import in_path_spectrum

MODES = ("thm22", "thm23", "thm24", "thm25", "all")

CSV_COLUMNS = [
    "graph6",
    "n",
    "c",
    "q_s",
    "p",
    "lambda",
    "m",
    "bound",
    "optimal",
    "predicted",
    "agree",
    "mode",
    "error",
]


class OracleMismatchError(RuntimeError):
    """The two multiplicity oracles disagreed: abort everything."""


@dataclass(frozen=True)
class SweepRecord:
    graph6: str
    n: int
    c: int
    q_s: Optional[int]
    p: int
    lambda_name: str
    m: int
    bound: Optional[int]
    optimal: Optional[bool]
    predicted: str
    agree: Optional[bool]
    mode: str
    error: Optional[str] = None

    def to_row(self) -> List:
        return [
            self.graph6,
            self.n,
            self.c,
            self.q_s,
            self.p,
            self.lambda_name,
            self.m,
            self.bound,
            self.optimal,
            self.predicted,
            self.agree,
            self.mode,
            self.error or "",
        ]


@dataclass
class SweepReport:
    parameters: Dict
    records: List[SweepRecord]
    skipped: Dict[str, int]

    @property
    def summary(self) -> Dict:
        return {
            "records": len(self.records),
            "equalities": sum(1 for r in self.records if r.bound is not None and r.m == r.bound),
            "optimals": sum(1 for r in self.records if r.optimal),
            "disagreements": sum(1 for r in self.records if r.agree is False),
            "errors": sum(1 for r in self.records if r.error),
            "skipped_pairs": sum(self.skipped.values()),
        }

    def disagreements(self) -> List[SweepRecord]:
        return [r for r in self.records if r.agree is False]

    def to_json_dict(self) -> Dict:
        return {
            "parameters": self.parameters,
            "summary": self.summary,
            "skipped": dict(sorted(self.skipped.items())),
            "records": [asdict(r) for r in self.records],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            w.writerow(r.to_row())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"sweep mode={self.parameters.get('mode')} s={self.parameters.get('s')}"]
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        for r in self.disagreements()[:20]:
            lines.append(f"  DISAGREE {r.graph6} {r.lambda_name} m={r.m} predicted={r.predicted}")
        return "\n".join(lines)


_CHECKERS = {
    "thm22": check_bound,
    "thm23": classify_tree,
    "thm24": classify_unicyclic,
    "thm25": family_membership,
}


def _modes_for(g: Graph, s: int, mode: str) -> Tuple[List[str], Counter]:
    """Cheap structural prefilter: which checkers apply to this graph."""
    skips: Counter = Counter()
    want = [m for m in MODES[:4]] if mode == "all" else [mode]
    out = []
    in_gs = is_in_Gs(g, s)
    if not in_gs:
        skips.update({f"{m}:not_in_G_s": 1 for m in want})
        return out, skips
    c = cyclomatic_number(g)
    qs = len(q_s_set(g, s))
    tree = is_tree(g)
    leaves = bool(pendant_vertices(g))
    for m in want:
        if m == "thm22":
            out.append(m)
        elif m == "thm23":
            if tree and not is_starlike_exact(g, s):
                out.append(m)
            else:
                skips[f"{m}:shape"] += 1
        elif m == "thm24":
            if c == 1 and qs == 1 and unicyclic_decompositions(g, s):
                out.append(m)
            else:
                skips[f"{m}:shape"] += 1
        elif m == "thm25":
            if c >= 1 and leaves and c + qs >= 3:
                out.append(m)
            else:
                skips[f"{m}:shape"] += 1
    return out, skips


def sweep_one_graph(
    g: Graph,
    s: int,
    lambdas: Sequence[AlgebraicNumber],
    mode: str,
    graph6: Optional[str] = None,
) -> Tuple[List[SweepRecord], Counter]:
    """Records for one graph; both oracles confirm every emitted m."""
    skips: Counter = Counter()
    if not is_connected(g):
        skips["disconnected"] += 1
        return [], skips
    g6 = graph6 if graph6 is not None else emit_graph6(g)
    modes, skips = _modes_for(g, s, mode)
    if not modes:
        return [], skips
    records: List[SweepRecord] = []
    confirmed: Dict = {}
    for lam in lambdas:
        if in_path_spectrum(lam, s):
            skips["lambda_in_path_spectrum"] += len(modes)
            continue
        for m_name in modes:
            checker = _CHECKERS[m_name]
            try:
                verdict: ClassificationVerdict = checker(g, s, lam)
            except Exception as exc:  # captured, not fatal: sweeps must finish
                records.append(
                    SweepRecord(
                        g6, g.n, cyclomatic_number(g), None,
                        len(pendant_vertices(g)), lam.name, -1, None, None,
                        "error", None, m_name, f"{type(exc).__name__}: {exc}",
                    )
                )
                continue
            if not verdict.hypothesis_ok:
                skips[f"{m_name}:{verdict.violation}"] += 1
                continue
            mu = lam.minpoly
            if mu not in confirmed:
                rank_m = rank_multiplicity(g, lam)
                confirmed[mu] = rank_m
            if confirmed[mu] != verdict.m:
                raise OracleMismatchError(
                    f"oracle mismatch on {g6} at {lam.name}: "
                    f"factor power {verdict.m} vs rank {confirmed[mu]}"
                )
            records.append(
                SweepRecord(
                    g6,
                    g.n,
                    verdict.c,
                    verdict.q_s,
                    verdict.p,
                    lam.name,
                    verdict.m,
                    verdict.bound,
                    verdict.optimal,
                    verdict.predicted_form,
                    verdict.agree,
                    m_name,
                )
            )
    return records, skips


def _sweep_chunk(args) -> Tuple[List[SweepRecord], Dict[str, int]]:
    chunk, s, lambdas, mode = args
    records: List[SweepRecord] = []
    skips: Counter = Counter()
    for g6 in chunk:
        recs, sk = sweep_one_graph(parse_graph6(g6), s, lambdas, mode, graph6=g6)
        records.extend(recs)
        skips.update(sk)
    return records, dict(skips)


def sweep(
    corpus: Iterable[Graph],
    s: int,
    lambdas: Sequence[AlgebraicNumber],
    mode: str = "thm22",
    jobs: int = 1,
    source: str = "<memory>",
) -> SweepReport:
    """Run one verification sweep over a corpus of graphs."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if s < 1:
        raise ValueError("s must be >= 1")
    g6s = [emit_graph6(g) for g in corpus]
    records: List[SweepRecord] = []
    skips: Counter = Counter()
    if jobs > 1 and len(g6s) > 1:
        import multiprocessing as mp

        chunks = [g6s[i::jobs] for i in range(jobs)]
        with mp.Pool(processes=jobs) as pool:
            for recs, sk in pool.map(
                _sweep_chunk, [(chunk, s, list(lambdas), mode) for chunk in chunks]
            ):
                records.extend(recs)
                skips.update(sk)
    else:
        for g6 in g6s:
            recs, sk = sweep_one_graph(parse_graph6(g6), s, lambdas, mode, graph6=g6)
            records.extend(recs)
            skips.update(sk)
    records.sort(key=lambda r: (r.graph6, r.lambda_name, r.mode))
    ns = sorted({r.n for r in records})
    parameters = {
        "mode": mode,
        "s": s,
        "lambdas": [lam.name for lam in lambdas],
        "corpus_source": source,
        "graphs": len(g6s),
        "n_range": [ns[0], ns[-1]] if ns else None,
    }
    return SweepReport(parameters, records, dict(skips))
