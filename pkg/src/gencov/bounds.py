"""Lower bounds on block counts and certified upper bounds.

Lower rules come in two flavors: formula bounds evaluated directly, and
the strength-monotone closure (a strength-t design is also a
strength-(t-1) design, so bounds propagate upward).  Every upper bound is
witnessed by an explicitly stored design that has passed verification;
values are never quoted from external tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import ceil, comb

from .core import Design, PartStructure
from .errors import (
    BudgetExhausted,
    ParameterOrderViolated,
    SinglePart,
    StrengthExceedsParts,
    UnitProfilePart,
)
from .verify import verify

RESTRICTION_SUBSET_CAP = 3
EXHAUSTIVE_CERT_CAP = 4096


@dataclass(frozen=True)
class BoundReport:
    lower: dict[str, int]
    upper: dict[str, tuple[int, Design]] = field(default_factory=dict)
    infeasible: bool = False

    @property
    def best_lower(self) -> int:
        return max(self.lower.values(), default=0)

    @property
    def best_upper(self) -> int | None:
        return min((v for v, _ in self.upper.values()), default=None)


def schonheim(v: int, k: int, t: int) -> int:
    """The nested-ceiling bound ceil(v/k ceil((v-1)/(k-1) ... )).

    Evaluated innermost-out: the innermost factor is
    ceil((v-t+1)/(k-t+1)).
    """
    if not (v >= k >= t >= 1):
        raise ParameterOrderViolated(f"need v >= k >= t >= 1, got ({v},{k},{t})")
    x = 1
    for i in range(t - 1, -1, -1):
        x = -((v - i) * x // -(k - i))
    return x


def lower_t1(s: PartStructure) -> int:
    """max_i ceil(v_i/k_i); exact, not just a bound, at strength 1."""
    return max(-(vi // -ki) for vi, ki in zip(s.v, s.k))


def lower_edges_clique(s: PartStructure) -> int:
    """Edge count of the join graph over edge count of one block clique."""
    edges = comb(s.v_sum, 2) - sum(comb(vi, 2) for vi, ki in zip(s.v, s.k) if ki == 1)
    per_block = comb(s.k_sum, 2)
    return -(edges // -per_block)


def lower_edges_multipartite(s: PartStructure) -> int:
    """Between-part edge count ratio; needs at least two parts."""
    if s.m < 2:
        raise SinglePart("multipartite edge bound needs m >= 2")
    ve = sum(vi * vj for vi, vj in combinations(s.v, 2))
    ke = sum(ki * kj for ki, kj in combinations(s.k, 2))
    return -(ve // -ke)


def lower_nested_ceiling(s: PartStructure, t: int) -> int:
    """Max over ordered t-subsets of parts of the nested ratio ceiling.

    The value depends on the nesting order, so all orderings of each
    subset are tried (t! per subset; fine at small t).
    """
    if t > s.m:
        raise StrengthExceedsParts(f"nested-ceiling bound needs t <= m, got t={t}, m={s.m}")
    best = 0
    for subset in combinations(range(s.m), t):
        for order in permutations(subset):
            x = 1
            for i in reversed(order):
                x = -(s.v[i] * x // -s.k[i])
            best = max(best, x)
    return best


def lower_restriction_single(s: PartStructure) -> int:
    """Strength-2 bound from restricting to one part with profile >= 2."""
    vals = [schonheim(vi, ki, 2) for vi, ki in zip(s.v, s.k) if ki >= 2]
    return max(vals, default=0)


def _restriction_subset_rule(s: PartStructure, max_subset: int) -> int:
    """Best base-rule lower bound over restrictions to small part subsets."""
    best = 0
    for size in range(1, min(max_subset, s.m) + 1):
        for idx in combinations(range(s.m), size):
            kI = tuple(s.k[i] for i in idx)
            if kI == (1,):
                continue
            sub = PartStructure(tuple(s.v[i] for i in idx), kI)
            best = max(best, lower_best(sub, 2).best_lower)
    return best


def lower_best(s: PartStructure, t: int,
               all_restrictions: bool = False,
               max_subset: int = RESTRICTION_SUBSET_CAP) -> BoundReport:
    """Every applicable lower rule plus the strength-monotone closure.

    Strength above the profile sum is impossible and reported as
    infeasible with value 0.  all_restrictions additionally maximizes
    over part subsets up to max_subset (exponential, so capped).
    """
    if t > s.k_sum:
        return BoundReport(lower={}, infeasible=True)
    if t == 0:
        return BoundReport(lower={})
    rules: dict[str, int] = {"t1": lower_t1(s)}
    if t >= 2:
        rules["monotone"] = lower_best(s, t - 1,
                                       all_restrictions=all_restrictions,
                                       max_subset=max_subset).best_lower
    if t == 2:
        rules["edges_clique"] = lower_edges_clique(s)
        if s.m >= 2:
            rules["edges_multipartite"] = lower_edges_multipartite(s)
        rules["restriction_single"] = lower_restriction_single(s)
        if all_restrictions:
            rules["restriction_subsets"] = _restriction_subset_rule(s, max_subset)
    if 1 <= t <= s.m:
        rules["nested_ceiling"] = lower_nested_ceiling(s, t)
    return BoundReport(lower=rules)


def upper_minimax(s: PartStructure, max_nodes: int = 10_000_000,
                  timeout: float = 60.0, strict: bool = False) -> tuple[int, Design]:
    """Certified strength-2 upper bound from one classical base cover.

    Computes w = max_j (v_j - (k_j - k_min)), obtains a (w, k_min, 2)
    cover by exact search, lifts it to the full structure, and verifies
    the result before returning it.  If the search budget runs out the
    greedy incumbent is lifted instead (the bound stays valid, just not
    provably tight at the base); strict=True raises in that case, with
    the fallback certificate attached to the exception.
    """
    from .construct import construct_minimax
    from .search import certify_classical

    if s.k_min < 2:
        raise UnitProfilePart(f"minimax bound needs every k_i >= 2, got {s.k}")
    w = max(vj - (kj - s.k_min) for vj, kj in zip(s.v, s.k))
    base_result = certify_classical(w, s.k_min, 2, max_nodes=max_nodes, timeout=timeout)
    design = construct_minimax(s, base_result.design)
    report = verify(design)
    if not report.valid:
        raise AssertionError(
            f"minimax certificate failed verification: {report.first_uncovered}"
        )
    if strict and base_result.status != "proven":
        raise BudgetExhausted(
            f"base ({w},{s.k_min},2) search stopped at status {base_result.status}",
            certificate=design,
        )
    return len(design.blocks), design


def _exhaustive_upper(s: PartStructure, t: int) -> tuple[int, Design] | None:
    """The all-blocks design, when small enough to enumerate and verify."""
    from itertools import product

    if s.block_count_possible() > EXHAUSTIVE_CERT_CAP:
        return None
    pools = [list(combinations(range(1, vi + 1), ki)) for vi, ki in zip(s.v, s.k)]
    blocks = tuple(product(*pools))
    d = Design(s, t, blocks)
    report = verify(d)
    if not report.valid:
        raise AssertionError(
            f"exhaustive certificate failed verification: {report.first_uncovered}"
        )
    return len(blocks), d


def bound_report(s: PartStructure, t: int,
                 all_restrictions: bool = False,
                 max_subset: int = RESTRICTION_SUBSET_CAP,
                 with_upper: bool = True,
                 max_nodes: int = 10_000_000,
                 timeout: float = 60.0) -> BoundReport:
    """Lower rules plus whatever certified uppers apply at this strength."""
    base = lower_best(s, t, all_restrictions=all_restrictions, max_subset=max_subset)
    if base.infeasible or not with_upper:
        return base
    upper: dict[str, tuple[int, Design]] = {}
    if t == 0:
        return BoundReport(lower=base.lower, upper={"empty": (0, Design(s, 0))})
    if t == 1:
        from .construct import cover_t1

        cert = cover_t1(s)
        if not verify(cert).valid:
            raise AssertionError("strength-1 certificate failed verification")
        upper["t1_formula"] = (len(cert.blocks), cert)
    if t == 2 and s.k_min >= 2:
        upper["minimax"] = upper_minimax(s, max_nodes=max_nodes, timeout=timeout)
    exhaustive = _exhaustive_upper(s, t)
    if exhaustive is not None:
        upper["exhaustive"] = exhaustive
    return BoundReport(lower=base.lower, upper=upper, infeasible=base.infeasible)
