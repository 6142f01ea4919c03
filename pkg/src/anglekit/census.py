"""The distinct-angle census A(P), dispatched by coordinate domain."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .angles import ZERO_ANGLE, Degenerate, Mode
from .config import ConcyclicDomain, Configuration, NumericDomain, QuadraticDomain, to_numeric
from .cyclic import census_cyclic_points
from .errors import BadParameter, NotASubset
from .exact import ExactAngleKey, angle_key
from .numeric import cluster_census, match_expected
from .report import CensusReport, Certification


def exact_census(points, field, mode: Mode = Mode.ExcludeZero) -> CensusReport:
    """Census of quadratic-field points; values are exact angle keys."""
    seen: dict = {}
    zero = None
    for j, b in enumerate(points):
        for i, k in combinations(range(len(points)), 2):
            if j == i or j == k:
                continue
            key = angle_key(points[i], b, points[k], field)
            if key is Degenerate.Pi:
                continue
            if key is Degenerate.Zero:
                zero = zero or (i, j, k)
                continue
            seen.setdefault(key.canonical(), (key, (i, j, k)))
    ordered = sorted(seen.values(), key=lambda kv: kv[0])
    values: list = [kv[0] for kv in ordered]
    witnesses = [kv[1] for kv in ordered]
    if mode is Mode.IncludeZero and zero is not None:
        values.insert(0, ZERO_ANGLE)
        witnesses.insert(0, zero)
    return CensusReport(mode, len(values), values, witnesses, Certification.Exact)


def _numeric(cfg: Configuration, mode: Mode) -> CensusReport:
    rep = cluster_census(to_numeric(cfg), mode)
    if rep.certification is not Certification.Unresolved or not cfg.declared_census:
        return rep
    declared = set(cfg.declared_census)
    tries = [declared]
    if mode is Mode.IncludeZero:
        tries.insert(0, declared | {ZERO_ANGLE})
    for exp in tries:
        m = match_expected(rep, exp)
        if m:
            m.report.detail["matched_declared"] = True
            return m.report
    rep.detail["declared_match"] = m.detail
    return rep


def census(cfg: Configuration, mode: Mode = Mode.ExcludeZero) -> CensusReport:
    """Distinct angles of ``cfg``; pi never counts, 0 only in include-zero mode.

    Numeric configurations that the ladder leaves unresolved are certified
    against their declared census when one is present.
    """
    dom = cfg.domain
    if isinstance(dom, QuadraticDomain):
        return exact_census(cfg.points, dom.field, mode)
    if isinstance(dom, ConcyclicDomain):
        cc = census_cyclic_points(cfg.points, dom.n, mode is Mode.IncludeZero)
        return CensusReport(
            mode, len(cc.values), list(cc.values), [cc.witnesses[v] for v in cc.values], Certification.Exact
        )
    return _numeric(cfg, mode)


def exact_values(report: CensusReport) -> list:
    """Census values as pi-rationals where recognizable, exact keys otherwise."""
    out = []
    for v in report.values:
        if isinstance(v, ExactAngleKey):
            out.append(v.pi_rational() or v)
        else:
            out.append(v)
    return out


def angle_set_subset(small: Configuration, large: Configuration) -> bool:
    """Whether census(small) is contained in census(large)."""
    if small.domain != large.domain and not (
        isinstance(small.domain, NumericDomain) and isinstance(large.domain, NumericDomain)
    ):
        raise NotASubset("configurations live in different domains")
    if not set(small.points) <= set(large.points):
        raise NotASubset("small configuration is not a subset of the large one")
    a, b = census(small), census(large)
    if isinstance(small.domain, QuadraticDomain):
        big = {v.canonical() for v in b.values}
        return all(v.canonical() in big for v in a.values)
    if isinstance(small.domain, ConcyclicDomain):
        return set(a.values) <= set(b.values)
    return all(any(v.overlaps(w) for w in b.values) for v in a.values)


def declared_matches(cfg: Configuration, report: CensusReport) -> bool:
    """Whether a report certifies exactly the declared census of ``cfg``."""
    if cfg.declared_census is None or report.certification is Certification.Unresolved:
        return False
    vals = report.pi_values()
    if vals is None:
        return False
    want = set(cfg.declared_census)
    if report.mode is Mode.IncludeZero:
        got = {v for v in vals if not v.is_zero}
        return got == want
    return set(vals) == want


@dataclass
class CrossCheck:
    exact: CensusReport
    numeric: CensusReport
    # numeric count certified (directly or against the exact values) and equal
    agree: bool


def cross_check(cfg: Configuration, mode: Mode = Mode.ExcludeZero) -> CrossCheck:
    """Run the numeric kernel on an exact configuration and compare with the exact census.

    Ties the interval ladder cannot separate are certified against the exact
    values, the same way declared censuses certify numeric inputs.
    """
    if isinstance(cfg.domain, NumericDomain):
        raise BadParameter("cross_check needs an exact configuration")
    ex = census(cfg, mode)
    rep = cluster_census(to_numeric(cfg), mode)
    if rep.certification is Certification.Unresolved:
        m = match_expected(rep, ex.values)
        if m:
            rep = m.report
    agree = rep.certification is Certification.CertifiedNumeric and rep.count == ex.count
    return CrossCheck(ex, rep, agree)
