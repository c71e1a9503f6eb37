"""Single-design constructions and transformations.

Includes the greedy base cover, the placeholder lift that copies one
classical cover onto every part, restriction and amalgamation of parts,
point deletion and block expansion, equivalence handling for repeated
parts, and redundancy pruning.  All operations return new immutable
designs; none mutate their input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Block, Design, PartStructure, make_block
from .errors import (
    BasePartTooSmall,
    DegenerateRestriction,
    EmptyIndexSet,
    InvalidInput,
    LabelOutOfRange,
    LengthMismatch,
    NonPositiveEntry,
    ParameterOrderViolated,
    ProfileBelowTwo,
    StrengthNotTwo,
    StructureMismatch,
    TargetBelowProfile,
    TargetExceedsPart,
)
from .verify import verify

# Placeholder marker inside block parts; real labels are always >= 1.
STAR = 0


def _canon_placeholder_parts(s: PartStructure,
                             parts: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    if len(parts) != s.m:
        raise StructureMismatch(f"block has {len(parts)} parts, structure has {s.m}")
    canon = []
    for i, raw in enumerate(parts):
        labels = sorted(x for x in raw if x != STAR)
        stars = len(raw) - len(labels)
        if len(set(labels)) != len(labels) or len(labels) + stars != s.k[i]:
            raise StructureMismatch(
                f"part {i + 1} needs {s.k[i]} entries counting placeholders"
            )
        if labels and not (1 <= labels[0] and labels[-1] <= s.v[i]):
            raise LabelOutOfRange(f"part {i + 1} label outside 1..{s.v[i]}")
        canon.append(tuple(labels) + (STAR,) * stars)
    return tuple(canon)


@dataclass(frozen=True)
class PlaceholderBlock:
    """A block whose parts may contain STAR entries awaiting a label."""

    parts: tuple[tuple[int, ...], ...]

    def filled(self, s: PartStructure) -> Block:
        out = []
        for i, part in enumerate(self.parts):
            labels = [x for x in part if x != STAR]
            stars = len(part) - len(labels)
            have = set(labels)
            fill = 1
            for _ in range(stars):
                while fill in have:
                    fill += 1
                labels.append(fill)
                have.add(fill)
            out.append(tuple(labels))
        return make_block(s, out)


@dataclass(frozen=True)
class PlaceholderDesign:
    """A design whose blocks may retain don't-care placeholder entries."""

    structure: PartStructure
    t: int
    blocks: tuple[PlaceholderBlock, ...] = ()
    lam: int = 1

    def __post_init__(self) -> None:
        canon = tuple(
            PlaceholderBlock(_canon_placeholder_parts(self.structure, b.parts))
            for b in self.blocks
        )
        object.__setattr__(self, "blocks", canon)

    def fill(self) -> Design:
        """Replace each placeholder with the least unused label of its
        part, then drop exact duplicate blocks."""
        filled = [b.filled(self.structure) for b in self.blocks]
        seen: dict[Block, None] = {}
        for b in filled:
            seen.setdefault(b, None)
        return Design(self.structure, self.t, tuple(seen), self.lam)


def cover_t1(s: PartStructure) -> Design:
    """Strength-1 cover of the minimum possible size max_i ceil(v_i/k_i).

    Block r takes the r-th run of k_i consecutive labels in each part,
    padding with the least labels outside the run once the part is used
    up.
    """
    n = max(-(vi // -ki) for vi, ki in zip(s.v, s.k))
    blocks = []
    for r in range(n):
        parts = []
        for vi, ki in zip(s.v, s.k):
            chunk = [x for x in range(r * ki + 1, (r + 1) * ki + 1) if x <= vi]
            have = set(chunk)
            fill = 1
            while len(chunk) < ki:
                while fill in have:
                    fill += 1
                chunk.append(fill)
                have.add(fill)
            parts.append(tuple(chunk))
        blocks.append(tuple(parts))
    return Design(s, 1, tuple(blocks))


def greedy_classical_cover(v: int, k: int, t: int) -> Design:
    """Greedy (v,k,t)-cover: repeatedly add the k-subset covering the
    most uncovered t-subsets, breaking ties lexicographically."""
    if not (v >= k >= t >= 0):
        raise ParameterOrderViolated(f"need v >= k >= t >= 0, got ({v},{k},{t})")
    from .search import greedy_cover

    return greedy_cover(PartStructure((v,), (k,)), t)


def construct_minimax(s: PartStructure, base: Design,
                      keep_placeholders: bool = False) -> Design | PlaceholderDesign:
    """Lift a single-part (w, k_min, 2) cover to a GC(v, k, 2).

    Each part receives a copy of the base blocks.  Parts needing fewer
    points than the base provides have surplus labels turned into
    placeholders; parts with a larger profile gain extra placeholders;
    parts larger than the base keep a fixed tail of their highest
    labels in every block.  Placeholders are then filled with the least
    unused label per part (or retained when keep_placeholders is set)
    and duplicate blocks are dropped.
    """
    if any(ki < 2 for ki in s.k):
        raise ProfileBelowTwo(f"lift needs every k_i >= 2, got {s.k}")
    if base.structure.m != 1 or base.structure.k[0] != s.k_min:
        raise StructureMismatch(
            f"base must be single-part with profile ({s.k_min},), got {base.structure}"
        )
    if base.t != 2:
        raise StrengthNotTwo(f"base must have strength 2, got {base.t}")
    w = base.structure.v[0]
    need = max(vj - (kj - s.k_min) for vj, kj in zip(s.v, s.k))
    if w < need:
        raise BasePartTooSmall(f"base on {w} points, need at least {need}")

    # cut[i]: labels above it are absent from the base copy on part i;
    # the fixed tail cut[i]+1..v_i is appended verbatim to every block.
    cut = [vi if vi <= w else vi - (ki - s.k_min) for vi, ki in zip(s.v, s.k)]
    pblocks = []
    for (bset,) in base.blocks:
        parts = []
        for i, (vi, ki) in enumerate(zip(s.v, s.k)):
            kept = [x for x in bset if x <= cut[i]]
            tail = list(range(cut[i] + 1, vi + 1))
            stars = ki - len(kept) - len(tail)
            parts.append(tuple(kept + tail) + (STAR,) * stars)
        pblocks.append(PlaceholderBlock(tuple(parts)))
    if keep_placeholders:
        seen: dict[PlaceholderBlock, None] = {}
        for b in pblocks:
            seen.setdefault(b, None)
        return PlaceholderDesign(s, 2, tuple(seen))
    return PlaceholderDesign(s, 2, tuple(pblocks)).fill()


def _check_part_index(s: PartStructure, i: int) -> None:
    if not (1 <= i <= s.m):
        raise LabelOutOfRange(f"part index {i} outside 1..{s.m}")


def restrict(d: Design, index_set) -> Design:
    """Project the design onto the parts in index_set (1-based).

    Strength drops to the restricted profile sum when that is smaller.
    """
    idx = sorted(set(index_set))
    if not idx:
        raise EmptyIndexSet("restriction needs at least one part")
    for i in idx:
        _check_part_index(d.structure, i)
    kI = tuple(d.structure.k[i - 1] for i in idx)
    if kI == (1,):
        raise DegenerateRestriction("no design exists on a single unit-profile part")
    vI = tuple(d.structure.v[i - 1] for i in idx)
    sub = PartStructure(vI, kI)
    blocks = tuple(tuple(b[i - 1] for i in idx) for b in d.blocks)
    return Design(sub, min(d.t, sum(kI)), blocks, d.lam)


def drop_full_parts(d: Design) -> Design:
    """Remove every part with v_i = k_i; such parts appear in full in
    every block and impose no constraint."""
    keep = [i + 1 for i in range(d.structure.m) if d.structure.v[i] != d.structure.k[i]]
    if len(keep) == d.structure.m:
        return d
    kI = tuple(d.structure.k[i - 1] for i in keep)
    if kI in ((), (1,)):
        raise DegenerateRestriction(f"surviving profile {kI} is degenerate")
    return restrict(d, keep)


def add_full_parts(d: Design, sizes) -> Design:
    """Append parts with v_i = k_i = size; every block gains the whole
    new point set, so validity is preserved at the same strength."""
    sizes = tuple(int(x) for x in sizes)
    if any(x < 1 for x in sizes):
        raise NonPositiveEntry(f"part sizes must be positive, got {sizes}")
    s = PartStructure(d.structure.v + sizes, d.structure.k + sizes)
    full = tuple(tuple(range(1, x + 1)) for x in sizes)
    blocks = tuple(b + full for b in d.blocks)
    return Design(s, d.t, blocks, d.lam)


def expand_equivalent(d: Design, i: int) -> Design:
    """Append a copy of part i (profile >= 2 required); each block's new
    part repeats its part-i labels.  Valid for strength <= 2: a pair
    split across the twin parts maps to a pair inside part i."""
    _check_part_index(d.structure, i)
    if d.structure.k[i - 1] < 2:
        raise ProfileBelowTwo(f"part {i} has profile {d.structure.k[i - 1]}")
    s = PartStructure(d.structure.v + (d.structure.v[i - 1],),
                      d.structure.k + (d.structure.k[i - 1],))
    blocks = tuple(b + (b[i - 1],) for b in d.blocks)
    return Design(s, d.t, blocks, d.lam)


def reduce_equivalence(s: PartStructure) -> tuple[PartStructure, dict[tuple[int, int], int]]:
    """Keep one representative per (v_i, k_i) class among parts with
    profile >= 2; unit-profile parts are always kept.  The returned map
    counts the parts of each merged class."""
    v_out: list[int] = []
    k_out: list[int] = []
    mult: dict[tuple[int, int], int] = {}
    for vi, ki in zip(s.v, s.k):
        if ki < 2:
            v_out.append(vi)
            k_out.append(ki)
            continue
        key = (vi, ki)
        if key not in mult:
            v_out.append(vi)
            k_out.append(ki)
        mult[key] = mult.get(key, 0) + 1
    return PartStructure(tuple(v_out), tuple(k_out)), mult


def delete_points(d: Design, v_hat) -> Design:
    """Shrink part i to its first v_hat_i labels.  A deleted label in a
    block is replaced by the least surviving label of that part not
    already present (deleted labels processed in ascending order), then
    duplicate blocks are dropped."""
    v_hat = tuple(int(x) for x in v_hat)
    if len(v_hat) != d.structure.m:
        raise LengthMismatch(f"expected {d.structure.m} entries, got {len(v_hat)}")
    for vh, vi, ki in zip(v_hat, d.structure.v, d.structure.k):
        if vh < ki:
            raise TargetBelowProfile(f"target size {vh} below profile {ki}")
        if vh > vi:
            raise TargetExceedsPart(f"target size {vh} above part size {vi}")
    s = PartStructure(v_hat, d.structure.k)
    out: dict[Block, None] = {}
    for b in d.blocks:
        parts = []
        for i, part in enumerate(b):
            have = set(x for x in part if x <= v_hat[i])
            for x in sorted(part):
                if x <= v_hat[i]:
                    continue
                sub = 1
                while sub in have:
                    sub += 1
                have.add(sub)
            parts.append(tuple(sorted(have)))
        out.setdefault(make_block(s, parts), None)
    return Design(s, d.t, tuple(out), d.lam)


def expand_blocks(d: Design, k_hat) -> Design:
    """Grow each block's part i to k_hat_i labels using the least labels
    not already present, then drop duplicates.  Requires every original
    profile >= 2 so the coverage obligations do not change shape."""
    if any(ki < 2 for ki in d.structure.k):
        raise ProfileBelowTwo(f"expansion needs every k_i >= 2, got {d.structure.k}")
    k_hat = tuple(int(x) for x in k_hat)
    if len(k_hat) != d.structure.m:
        raise LengthMismatch(f"expected {d.structure.m} entries, got {len(k_hat)}")
    for kh, vi, ki in zip(k_hat, d.structure.v, d.structure.k):
        if kh < ki:
            raise TargetBelowProfile(f"target profile {kh} below profile {ki}")
        if kh > vi:
            raise TargetExceedsPart(f"target profile {kh} above part size {vi}")
    s = PartStructure(d.structure.v, k_hat)
    out: dict[Block, None] = {}
    for b in d.blocks:
        parts = []
        for i, part in enumerate(b):
            have = set(part)
            fill = 1
            while len(have) < k_hat[i]:
                while fill in have:
                    fill += 1
                have.add(fill)
            parts.append(tuple(sorted(have)))
        out.setdefault(make_block(s, parts), None)
    return Design(s, d.t, tuple(out), d.lam)


def amalgamate(d: Design, i: int, j: int) -> Design:
    """Merge parts i and j (both profiles >= 2) into a single part at
    position i; part-j labels are offset by v_i.  Block count is
    preserved."""
    _check_part_index(d.structure, i)
    _check_part_index(d.structure, j)
    if i == j:
        raise InvalidInput("amalgamation needs two distinct parts")
    if d.structure.k[i - 1] < 2 or d.structure.k[j - 1] < 2:
        raise ProfileBelowTwo("both merged parts need profile >= 2")
    vi = d.structure.v[i - 1]
    v_out: list[int] = []
    k_out: list[int] = []
    for p in range(1, d.structure.m + 1):
        if p == j:
            continue
        if p == i:
            v_out.append(vi + d.structure.v[j - 1])
            k_out.append(d.structure.k[i - 1] + d.structure.k[j - 1])
        else:
            v_out.append(d.structure.v[p - 1])
            k_out.append(d.structure.k[p - 1])
    s = PartStructure(tuple(v_out), tuple(k_out))
    blocks = []
    for b in d.blocks:
        parts = []
        for p in range(1, d.structure.m + 1):
            if p == j:
                continue
            if p == i:
                parts.append(b[i - 1] + tuple(x + vi for x in b[j - 1]))
            else:
                parts.append(b[p - 1])
        blocks.append(tuple(parts))
    return Design(s, d.t, tuple(blocks), d.lam)


def prune_redundant(d: Design, greedy_drop: bool = False) -> Design:
    """Drop exact duplicate blocks (at lambda = 1, where a duplicate can
    never help); with greedy_drop, additionally remove blocks whose
    deletion keeps the design valid, trying lexicographically last
    blocks first."""
    if not verify(d).valid:
        raise InvalidInput("input design fails verification")
    blocks = list(d.blocks)
    if d.lam == 1:
        seen: dict[Block, None] = {}
        for b in blocks:
            seen.setdefault(b, None)
        blocks = list(seen)
    if greedy_drop:
        kept = set(range(len(blocks)))
        for r in sorted(kept, key=lambda q: blocks[q], reverse=True):
            trial = tuple(blocks[q] for q in sorted(kept - {r}))
            if verify(Design(d.structure, d.t, trial, d.lam)).valid:
                kept.discard(r)
        blocks = [blocks[q] for q in sorted(kept)]
    return Design(d.structure, d.t, tuple(blocks), d.lam)
