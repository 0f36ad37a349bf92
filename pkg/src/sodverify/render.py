"""Plain-text tables for terminal output.

Each renderer mirrors the numeric content of the corresponding ``to_json``.
"""

from __future__ import annotations

import json

from .bbw import CohomologyResult, PushforwardReport
from .decomposition import GENERATION_NOTE, DiagonalSummary, RankAudit, SemiorthReport
from .flags import FlagBlock, FlagRankAudit, FlagReport
from .koszul import CauchyCheck, KoszulTerm
from .lr import WeightMultiset


def dumps(obj) -> str:
    """Deterministic JSON."""
    return json.dumps(obj, sort_keys=True, indent=2)


def table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))
    return "\n".join(lines)


def _cell(rep: PushforwardReport) -> str:
    if rep.is_acyclic:
        return "."
    return "+".join(f"H{s.result.degree}:{s.mult * s.result.dimension}" for s in rep.nonzero())


def cohomology(res: CohomologyResult) -> str:
    if res.is_acyclic:
        return "acyclic"
    return f"degree {res.degree}  weight {res.weight}  dim {res.dimension}"


def pushforward(rep: PushforwardReport) -> str:
    rows = [
        [str(s.beta), str(s.mult),
         "-" if s.result.is_acyclic else str(s.result.degree),
         "-" if s.result.is_acyclic else str(s.result.dimension)]
        for s in rep.summands
    ]
    head = f"Rq_* Hom(S^{rep.alpha} R, S^{rep.alpha_prime} R): {'acyclic' if rep.is_acyclic else 'NOT acyclic'}"
    return head + "\n" + table(["beta", "mult", "degree", "dim"], rows)


def multiset(ms: WeightMultiset) -> str:
    return table(["weight", "mult"], [[str(w), str(m)] for w, m in ms.items()])


def semiorth(rep: SemiorthReport) -> str:
    out = [f"Gr({rep.k},{rep.n})  order={rep.order}  reverse_hom={rep.reverse_hom}  blocks={len(rep.blocks)}"]
    out.append(table(["pos", "alpha", "twist"], [[str(b.position), str(b.alpha), str(b.twist)] for b in rep.blocks]))
    out.append("")
    out.append("Hom pushforwards (row = source, column = target; '.' = acyclic, Hd:D = degree d, dim D)")
    idx = [str(b.position) for b in rep.blocks]
    rows = [[idx[i]] + [_cell(rep.matrix[(i, j)]) for j in range(len(rep.blocks))] for i in range(len(rep.blocks))]
    out.append(table(["src\\tgt"] + idx, rows))
    out.append("")
    out.append(f"required vanishings: {rep.required_vanishings}  violations: {len(rep.violations)}  "
               f"informational non-vanishings: {len(rep.informational)}  exceptional: {rep.exceptional}")
    for s, t in rep.violations:
        out.append(f"VIOLATION  Hom({s} -> {t}) does not vanish")
    for s, t in rep.informational:
        out.append(f"info       Hom({s} -> {t}) does not vanish (allowed direction)")
    out.append(f"verdict: {rep.verdict}")
    out.append(f"note: {GENERATION_NOTE}")
    return "\n".join(out)


def blocks(bl) -> str:
    return table(["pos", "alpha", "twist"], [[str(b.position), str(b.alpha), str(b.twist)] for b in bl])


def flag_blocks(bl: list[FlagBlock]) -> str:
    return table(["pos", "alphas", "twist"],
                  [[str(b.position), " ".join(str(a) for a in b.alphas), str(b.twist)] for b in bl])


def flag_report(rep: FlagReport) -> str:
    out = [f"Fl({','.join(map(str, rep.ks))}; {rep.n})  blocks={len(rep.blocks)}", flag_blocks(rep.blocks)]
    for i, lvl in enumerate(rep.levels, 1):
        out.append("")
        out.append(f"level {i}: relative Gr({lvl.k},{lvl.n})  verdict={lvl.verdict}  "
                   f"violations={len(lvl.violations)}  exceptional={lvl.exceptional}")
        for s, t in lvl.violations:
            out.append(f"  VIOLATION  Hom({s} -> {t}) does not vanish")
    out.append(f"verdict: {rep.verdict}")
    return "\n".join(out)


def koszul(terms: list[KoszulTerm]) -> str:
    rows = []
    for t in terms:
        pairs = " ".join(f"{a}|{c}" for a, c in t.pairs)
        rows.append([str(t.m), str(t.twist), str(len(t.pairs)), pairs])
    return table(["m", "twist", "size", "alpha|conj"], rows)


def diagonal(s: DiagonalSummary) -> str:
    return (koszul(list(s.terms)) + f"\nlength {s.length}  generator_count {s.generator_count}  "
            f"bijection {s.bijection}\nnote: {GENERATION_NOTE}")


def cauchy(c: CauchyCheck) -> str:
    return f"lhs {c.lhs}  rhs {c.rhs}  equal {c.equal}"


def rank(a: RankAudit | FlagRankAudit) -> str:
    count = a.block_count if isinstance(a, RankAudit) else a.count
    return f"blocks {count}  expected {a.expected}  equal {a.equal}"
