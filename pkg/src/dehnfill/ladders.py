r"""
Finite ladder models of the leaf-trace train tracks of the branched surface.

A ladder has horizontal lines at levels ``0..n-1`` (the traces of the fiber
levels on a leaf), joined by rungs (the traces of the product disks).  Each
level carries a chosen orientation, positive on even levels, and every rung
end carries a cusp direction along its line.  On geometric ladders the cusp
agrees with the chosen orientation at both ends; the reversal of the
co-orientation by the monodromy is what makes the chosen orientations
alternate.  Maximal carried paths then meet at most one even and at most one
odd line, entering even lines for good and leaving odd lines only once, and
each such path separates the levels far below from the levels far above.
"""

import random as _random
from dataclasses import dataclass
from fractions import Fraction

from . import _ladder

__all__ = [
    "Rung",
    "LadderTrack",
    "OrientedLadder",
    "CarriedPath",
    "random_ladder",
    "orient_ladder",
    "enumerate_carried_paths",
    "check_two_line_property",
    "separation_check",
    "verify_ladders",
    "kernel_backend",
]


def kernel_backend() -> str:
    return _ladder.BACKEND


@dataclass(frozen=True)
class Rung:
    lower_level: int
    low_pos: Fraction
    high_pos: Fraction
    cusp_low: int  # geometric sign along the lower line
    cusp_high: int

    def __post_init__(self):
        if self.cusp_low not in (-1, 1) or self.cusp_high not in (-1, 1):
            raise ValueError("cusp signs must be +1 or -1")


@dataclass(frozen=True)
class LadderTrack:
    n_levels: int
    orientations: tuple  # chosen orientation sign per level
    rungs: tuple

    def __post_init__(self):
        if self.n_levels < 1 or len(self.orientations) != self.n_levels:
            raise ValueError("need one orientation sign per level")
        if any(o not in (-1, 1) for o in self.orientations):
            raise ValueError("orientations must be +1 or -1")
        for r in self.rungs:
            if not 0 <= r.lower_level < self.n_levels - 1:
                raise ValueError("rung joins missing levels")
        for level in range(self.n_levels):
            feet = self._feet(level)
            if len({pos for pos, _, _ in feet}) != len(feet):
                raise ValueError("rung feet on level %d collide" % level)

    def _feet(self, level):
        """Sorted (position, rung_index, end) triples on one level."""
        feet = []
        for i, r in enumerate(self.rungs):
            if r.lower_level == level:
                feet.append((r.low_pos, i, 0))
            if r.lower_level + 1 == level:
                feet.append((r.high_pos, i, 1))
        feet.sort()
        return feet

    def is_leaf_trace_type(self) -> bool:
        """Alternating chosen orientations with cusp agreement at both ends."""
        uniform = {self.orientations[k] * (1 if k % 2 == 0 else -1) for k in range(self.n_levels)}
        if len(uniform) != 1:
            return False
        return all(
            r.cusp_low == self.orientations[r.lower_level]
            and r.cusp_high == self.orientations[r.lower_level + 1]
            for r in self.rungs
        )


def standard_orientations(n_levels):
    return tuple(1 if k % 2 == 0 else -1 for k in range(n_levels))


def random_ladder(
    seed: int,
    max_levels: int = 8,
    max_rungs_per_gap: int = 6,
    alternating: bool = True,
) -> LadderTrack:
    """Seeded random ladder.

    ``alternating=True`` gives the geometric type: alternating chosen
    orientations, cusps agreeing with them at both rung ends.
    ``alternating=False`` is the negative control: uniform orientations with
    the cusp pattern of a co-orientation-preserving return map (agreeing at
    lower ends, opposing at upper ends); carried paths there may cascade
    through many lines.
    """
    rng = _random.Random(seed)
    n_levels = rng.randint(2, max_levels)
    orientations = (
        standard_orientations(n_levels) if alternating else tuple([1] * n_levels)
    )
    counts = [rng.randint(0, max_rungs_per_gap) for _ in range(n_levels - 1)]
    # Distinct base slots globally, so feet on a shared line never collide;
    # the +-1/16 nudges are too small to reorder slots 1/4 apart.
    slots = [Fraction(k, 4) for k in range(1, 4 * (sum(counts) + 2))]
    chosen = rng.sample(slots, sum(counts))
    rng.shuffle(chosen)
    chosen = iter(chosen)
    rungs = []
    for gap, count in enumerate(counts):
        for _ in range(count):
            x = next(chosen)
            nudge = Fraction(rng.randint(-1, 1), 16)
            if alternating:
                c_lo = orientations[gap]
                c_hi = orientations[gap + 1]
            else:
                c_lo, c_hi = 1, -1
            rungs.append(
                Rung(
                    lower_level=gap,
                    low_pos=x,
                    high_pos=x + nudge,
                    cusp_low=c_lo,
                    cusp_high=c_hi,
                )
            )
    return LadderTrack(n_levels, orientations, tuple(rungs))


@dataclass(frozen=True)
class OrientedLadder:
    track: LadderTrack
    forward_dir: int  # the uniform geometric direction of the track orientation
    rung_upward: tuple  # rule: rungs point up from odd levels, down from even


def orient_ladder(track: LadderTrack) -> OrientedLadder:
    """Assign the track orientation: even lines keep their chosen direction,
    odd lines flip, rungs run upward exactly when leaving an odd level.

    Raises unless the cusp data certifies the ladder as leaf-trace type.
    """
    if not track.is_leaf_trace_type():
        raise ValueError("not a leaf-trace-type ladder (cusp/orientation mismatch)")
    forward_dir = track.orientations[0]  # == orientations[k] * parity sign, all k
    rung_upward = tuple(r.lower_level % 2 == 1 for r in track.rungs)
    return OrientedLadder(track=track, forward_dir=forward_dir, rung_upward=rung_upward)


def _encode(track: LadderTrack):
    offsets = [0]
    sw_rung = []
    sw_end = []
    lo_idx = [0] * len(track.rungs)
    hi_idx = [0] * len(track.rungs)
    for level in range(track.n_levels):
        feet = track._feet(level)
        for local, (_, r, end) in enumerate(feet):
            sw_rung.append(r)
            sw_end.append(end)
            if end == 0:
                lo_idx[r] = local
            else:
                hi_idx[r] = local
        offsets.append(len(sw_rung))
    rung_level = [r.lower_level for r in track.rungs]
    cusp_lo = [r.cusp_low for r in track.rungs]
    cusp_hi = [r.cusp_high for r in track.rungs]
    forward = track.orientations[0] if track.is_leaf_trace_type() else 1
    return offsets, sw_rung, sw_end, rung_level, cusp_lo, cusp_hi, lo_idx, hi_idx, forward


@dataclass(frozen=True)
class CarriedPath:
    """A maximal directed path: line runs and rung crossings in order."""

    steps: tuple  # ("line", level, segment, dir) / ("rung", index, dir)
    truncated: bool

    @property
    def levels_met(self):
        return tuple(sorted({s[1] for s in self.steps if s[0] == "line"}))

    @property
    def rungs_used(self):
        return tuple(s[1] for s in self.steps if s[0] == "rung")

    def touches_boundary_level(self, track: LadderTrack) -> bool:
        return bool(
            {0, track.n_levels - 1} & set(self.levels_met)
        )


def _decode_paths(track, raw_paths):
    enc = _encode(track)
    offsets = enc[0]
    n_levels = track.n_levels
    n_line_states = 2 * (offsets[-1] + n_levels)

    def decode(state):
        if state < n_line_states:
            idx, fwd = divmod(state, 2)
            level = 0
            for k in range(n_levels):
                if offsets[k] + k <= idx:
                    level = k
            seg = idx - offsets[level] - level
            return ("line", level, seg, 1 if fwd else -1)
        idx, up = divmod(state - n_line_states, 2)
        return ("rung", idx, 1 if up else -1)

    return [
        CarriedPath(steps=tuple(decode(s) for s in states), truncated=truncated)
        for states, truncated in raw_paths
    ]


def enumerate_carried_paths(track: LadderTrack, step_bound: int = 10**4):
    """All maximal carried paths, one per undirected trace, in a
    deterministic order; truncation at the step bound is flagged."""
    if step_bound > 10**4:
        raise ValueError("step bound above desk scale")
    enc = _encode(track)
    raw, *_ = _ladder.scan_ladder(*enc[:9], step_bound, True)
    return _decode_paths(track, raw)


def check_two_line_property(track: LadderTrack, step_bound: int = 10**4):
    """Every maximal carried path must meet at most one even and at most one
    odd line, entering even lines for good and leaving odd ones only once.

    Returns ``(ok, witnesses)`` with the offending paths, if any.
    """
    enc = _encode(track)
    _, n_paths, n_viol, _, _, witness = _ladder.scan_ladder(*enc[:9], step_bound, False)
    if n_viol == 0:
        return True, []
    witnesses = _decode_paths(track, [(witness, False)])
    return False, witnesses


def separation_check(track: LadderTrack, path: CarriedPath) -> bool:
    """Does deleting the path's trace split the ladder band across its level?

    For each interior line the path meets, removing the path must disconnect
    the strip cells touching levels two or more below from those two or more
    above.  Truncation levels are skipped to avoid edge artifacts.
    """
    if not path.levels_met:
        raise ValueError("path meets no line")
    segments_on = {}
    for step in path.steps:
        if step[0] == "line":
            segments_on.setdefault(step[1], set()).add(step[2])
    rungs_on = set(path.rungs_used)

    # Geometry: cells of the strip between level g and g+1, split by rungs.
    width = max(
        [r.low_pos for r in track.rungs] + [r.high_pos for r in track.rungs],
        default=Fraction(0),
    ) + 1
    gap_rungs = {
        g: sorted(
            (i for i, r in enumerate(track.rungs) if r.lower_level == g),
            key=lambda i: track.rungs[i].low_pos,
        )
        for g in range(track.n_levels - 1)
    }

    def cell_span(g, c):
        """Horizontal extent of cell c in gap g (open interval)."""
        rs = gap_rungs[g]
        left = Fraction(-1) if c == 0 else max(
            track.rungs[rs[c - 1]].low_pos, track.rungs[rs[c - 1]].high_pos
        )
        right = width if c == len(rs) else min(
            track.rungs[rs[c]].low_pos, track.rungs[rs[c]].high_pos
        )
        return left, right

    def free_intervals(level):
        """Sub-intervals of the level line not covered by the path."""
        feet = [pos for pos, _, _ in track._feet(level)]
        cuts = [Fraction(-1)] + feet + [width]
        covered = segments_on.get(level, set())
        return [
            (cuts[i], cuts[i + 1])
            for i in range(len(cuts) - 1)
            if i not in covered
        ]

    def cells_connected(g, c, g2, c2):
        """Adjacent-gap cells joined through an uncovered part of the line."""
        (l1, r1), (l2, r2) = cell_span(g, c), cell_span(g2, c2)
        lo, hi = max(l1, l2), min(r1, r2)
        if lo >= hi:
            return False
        level = max(g, g2)
        return any(max(lo, a) < min(hi, b) for a, b in free_intervals(level))

    ok = True
    interior = [
        j
        for j in path.levels_met
        if j not in (0, track.n_levels - 1)
    ]
    for j in interior:
        below = set()
        above = set()
        nodes = []
        for g in range(track.n_levels - 1):
            for c in range(len(gap_rungs[g]) + 1):
                nodes.append((g, c))
                if g <= j - 2:
                    below.add((g, c))
                if g + 1 >= j + 2:
                    above.add((g, c))
        if not below or not above:
            continue  # vacuous near the boundary
        adj = {node: [] for node in nodes}
        for g in range(track.n_levels - 1):
            rs = gap_rungs[g]
            for c in range(len(rs)):
                if rs[c] not in rungs_on:
                    adj[(g, c)].append((g, c + 1))
                    adj[(g, c + 1)].append((g, c))
            if g + 1 <= track.n_levels - 2:
                for c in range(len(rs) + 1):
                    for c2 in range(len(gap_rungs[g + 1]) + 1):
                        if cells_connected(g, c, g + 1, c2):
                            adj[(g, c)].append((g + 1, c2))
                            adj[(g + 1, c2)].append((g, c))
        seen = set(below)
        stack = list(below)
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if seen & above:
            ok = False
    return ok


def verify_ladders(
    cases: int,
    seed: int = 0,
    max_levels: int = 8,
    max_rungs_per_gap: int = 6,
    step_bound: int = 10**4,
    alternating: bool = True,
):
    """Bulk two-line verification over seeded random ladders.

    Returns a summary dict (JSON-friendly); deterministic for fixed inputs.
    """
    total_paths = 0
    violations = 0
    max_paths = 0
    max_len = 0
    truncated = 0
    first_violation_seed = None
    for i in range(cases):
        track = random_ladder(
            seed + i,
            max_levels=max_levels,
            max_rungs_per_gap=max_rungs_per_gap,
            alternating=alternating,
        )
        enc = _encode(track)
        _, n_paths, n_viol, n_trunc, longest, _ = _ladder.scan_ladder(
            *enc[:9], step_bound, False
        )
        total_paths += n_paths
        violations += n_viol
        truncated += n_trunc
        max_paths = max(max_paths, n_paths)
        max_len = max(max_len, longest)
        if n_viol and first_violation_seed is None:
            first_violation_seed = seed + i
    return {
        "cases": cases,
        "seed": seed,
        "max_levels": max_levels,
        "max_rungs_per_gap": max_rungs_per_gap,
        "alternating": alternating,
        "backend": kernel_backend(),
        "total_paths": total_paths,
        "max_paths_per_ladder": max_paths,
        "max_path_length": max_len,
        "truncated_paths": truncated,
        "violations": violations,
        "first_violation_seed": first_violation_seed,
    }
