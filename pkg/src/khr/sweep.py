"""Sweep-line evaluation over interval colorings of a tilted line.

The state is an ordered family of disjoint intervals carried by a line of
slope just under n/m.  An interval is recorded purely combinatorially: by
the vertical grid line x = start_col holding its lower endpoint and the
horizontal grid line y = end_row holding its upper endpoint.  As the line
moves up it crosses one lattice point at a time; the crossing of p = (x, y)
happens at the scaled height d = m*y - n*x, and for coprime (m, n) no two
points in range share a d, so the event order is fully determined by
integers and the slope never has to be represented.

Crossing a point transforms the family by exactly one local rule:

* Contract  -- p is both endpoints of one interval, which vanishes;
* StartPass -- p is the lower endpoint of an interval, which slides past;
* EndPass   -- p is the upper endpoint of an interval, which slides past;
* Branch    -- p is strictly inside an interval; the evaluation forks into
               a Split state (the interval cut in two at p) and a Keep
               state (unchanged);
* NoOp      -- p touches nothing.

Each branch of the fork tree multiplies weights drawn from a pluggable
profile and ends when the last interval contracts, contributing the
profile's base value.  One leaf arises per (m, n)-Dyck path: the region the
chosen intervals sweep is bounded by that path, and the leaf's rule tags are
reconstructed into the path and validated against its statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .dyck import (
    DyckPath,
    KnotParams,
    Point,
    corners,
    interior_points,
    k_of,
    most_distant_outer,
    pass_through_points,
    rational_catalan,
    vstar,
)
from .laurent import A, Invariant, LaurentPoly, ONE, T, q_power


class UnsupportedConfiguration(RuntimeError):
    """Two intervals claimed the same event point; unreachable from the
    single-interval start state and treated as a hard error."""


class Rule(str, Enum):
    CONTRACT = "Contract"
    START_PASS = "StartPass"
    END_PASS = "EndPass"
    BRANCH = "Branch"
    SPLIT = "Split"
    KEEP = "Keep"
    NOOP = "NoOp"
    TERMINAL = "Terminal"


@dataclass(frozen=True)
class Interval:
    """One interval: start on vertical line x = start_col, end on horizontal
    line y = end_row."""

    start_col: int
    end_row: int


def contract_distance(interval: Interval, params: KnotParams) -> int:
    """Scaled height at which the interval shrinks to a point."""
    return params.m * interval.end_row - params.n * interval.start_col


@dataclass(frozen=True)
class Coloring:
    """Ordered disjoint intervals; starts and ends both strictly increase."""

    params: KnotParams
    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        m, n = self.params.m, self.params.n
        prev: Interval | None = None
        for iv in self.intervals:
            if not 0 <= iv.start_col < m:
                raise ValueError(f"start column {iv.start_col} out of range for m={m}")
            if not (0 < iv.end_row <= n):
                raise ValueError(f"end row {iv.end_row} out of range for n={n}")
            if prev is not None and not (
                prev.start_col < iv.start_col and prev.end_row < iv.end_row
            ):
                raise ValueError("intervals out of order or overlapping")
            prev = iv

    @property
    def k(self) -> int:
        return len(self.intervals)

    @property
    def strand_count(self) -> int:
        """Number of braid strands the start state encodes: the interval
        count plus, per interval, the vertical grid lines it crosses.
        Meaningful for the initial state (line just above the origin)."""
        m, n = self.params.m, self.params.n
        total = self.k
        for iv in self.intervals:
            start_floor = 0 if iv.start_col == 0 else (n * iv.start_col - 1) // m
            total += iv.end_row - 1 - start_floor
        return total


@dataclass(frozen=True)
class Event:
    p: Point
    d: int


def initial_coloring(params: KnotParams) -> Coloring:
    """The single interval from the origin's vertical line to the top row,
    whose sweep computes the (m, n) torus knot."""
    return Coloring(params, (Interval(0, params.n),))


def event_list(params: KnotParams) -> list[Event]:
    """Lattice points with 0 < d <= m*n inside the bounding rectangle,
    ordered by d (no ties occur; the x tie-break is defensive)."""
    m, n = params.m, params.n
    events = [
        Event((x, y), m * y - n * x)
        for x in range(m + 1)
        for y in range(n + 1)
        if 0 < m * y - n * x <= m * n
    ]
    events.sort(key=lambda e: (e.d, e.p[0]))
    assert len({e.d for e in events}) == len(events), "event heights collide"
    return events


def classify(state: Coloring, p: Point) -> tuple[Rule, int | None]:
    """Which rule fires at p, and on which interval (None for NoOp).

    The state must be alive at p's height: every interval's contraction
    must not lie strictly in the past.
    """
    x, y = p
    found: tuple[Rule, int] | None = None
    for i, iv in enumerate(state.intervals):
        a, b = iv.start_col, iv.end_row
        if a == x and b == y:
            rule = Rule.CONTRACT
        elif a == x and b > y:
            rule = Rule.START_PASS
        elif a < x and b == y:
            rule = Rule.END_PASS
        elif a < x and b > y:
            rule = Rule.BRANCH
        else:
            continue  # p lies left or right of this interval
        if found is not None:
            raise UnsupportedConfiguration(
                f"intervals {found[1]} and {i} both meet event {p}"
            )
        found = (rule, i)
    if found is None:
        return Rule.NOOP, None
    return found


@dataclass(frozen=True)
class Transition:
    """One successor state with the weight tag to charge for reaching it."""

    state: Coloring
    tag: Rule
    weight_k: int | None  # argument passed to the profile's weight function


def apply_rule(state: Coloring, p: Point, rule: Rule) -> tuple[Transition, ...]:
    """Successor states for the rule firing at p.

    Contract with one interval left short-circuits to a Terminal transition
    (the base value absorbs the final contraction); Branch returns the Split
    successor then the Keep successor.
    """
    expected, idx = classify(state, p)
    if rule is not expected:
        raise ValueError(f"rule {rule} does not fire at {p}; expected {expected}")
    k = state.k
    if rule is Rule.NOOP:
        return (Transition(state, Rule.NOOP, None),)
    assert idx is not None
    iv = state.intervals[idx]
    if rule is Rule.CONTRACT:
        rest = state.intervals[:idx] + state.intervals[idx + 1 :]
        if k == 1:
            return (Transition(Coloring(state.params, rest), Rule.TERMINAL, None),)
        return (Transition(Coloring(state.params, rest), Rule.CONTRACT, k - 1),)
    if rule in (Rule.START_PASS, Rule.END_PASS):
        return (Transition(state, rule, k),)
    # Branch: cut (a, b) into (a, y) and (x, b), or keep it whole
    x, y = p
    cut = (
        state.intervals[:idx]
        + (Interval(iv.start_col, y), Interval(x, iv.end_row))
        + state.intervals[idx + 1 :]
    )
    return (
        Transition(Coloring(state.params, cut), Rule.SPLIT, k),
        Transition(state, Rule.KEEP, k),
    )


@dataclass(frozen=True)
class WeightProfile:
    """Per-rule weights accumulated along a branch, times a base value at
    the end.  Weight functions receive the interval count recorded in the
    transition: the count after removal for Contract, the unchanged count
    for the other rules."""

    name: str
    contract: Callable[[int], LaurentPoly]
    start_pass: Callable[[int], LaurentPoly]
    end_pass: Callable[[int], LaurentPoly]
    split: Callable[[int], LaurentPoly]
    keep: Callable[[int], LaurentPoly]
    base: Invariant

    def weight(self, tag: Rule, k: int) -> LaurentPoly:
        if tag is Rule.CONTRACT:
            return self.contract(k)
        if tag is Rule.START_PASS:
            return self.start_pass(k)
        if tag is Rule.END_PASS:
            return self.end_pass(k)
        if tag is Rule.SPLIT:
            return self.split(k)
        if tag is Rule.KEEP:
            return self.keep(k)
        raise ValueError(f"no weight attached to {tag}")


HHH_PROFILE = WeightProfile(
    name="HHH",
    contract=lambda k: q_power(k) - A,
    start_pass=lambda k: ONE,
    end_pass=lambda k: ONE,
    split=lambda k: q_power(-k),
    keep=lambda k: T * q_power(-k),
    base=Invariant(ONE, 1),
)

# Scalar evaluation in the toric-braid representation.  The split weight is
# the lone half power q^(-1/2); contract flips sign against HHH and the two
# pass rules acquire +-q^(k-1).
TORIC_PROFILE = WeightProfile(
    name="I",
    contract=lambda k: A - q_power(k),
    start_pass=lambda k: -q_power(k - 1),
    end_pass=lambda k: q_power(k - 1),
    split=lambda k: LaurentPoly.monomial(1, q2=-1),
    keep=lambda k: T,
    base=Invariant(A - ONE, 0),
)


@dataclass
class BranchRecord:
    """Rule tags of one finished branch, keyed by event point.

    tags holds every non-NoOp, non-terminal outcome; kvals holds the weight
    argument used at Split, Keep and Contract events; terminal is the point
    whose contraction ended the branch.  Events after the terminal never
    interact with anything and are omitted.
    """

    tags: dict[Point, Rule]
    kvals: dict[Point, int]
    terminal: Point


@dataclass
class Leaf:
    record: BranchRecord
    path: DyckPath
    value: Invariant


@dataclass
class SweepResult:
    params: KnotParams
    profile: str
    total: Invariant
    leaves: list[Leaf]


def reconstruct_path(record: BranchRecord, params: KnotParams) -> DyckPath:
    """The Dyck path bounding the region this branch's intervals swept.

    The Keep points are exactly the lattice points strictly between the
    path and the diagonal, which pins down the vertical step of every row;
    every other tag is then validated against the path's statistics:
    Split points must be its inner corners, Contract points the outer
    corners short of the most distant one, the terminal the most distant
    outer corner, and the pass tags the straight-through vertices.
    """
    m, n = params.m, params.n
    by_rule: dict[Rule, set[Point]] = {}
    for p, rule in record.tags.items():
        by_rule.setdefault(rule, set()).add(p)
    keeps = by_rule.get(Rule.KEEP, set())

    cols = []
    for y in range(n):
        row = [x for (x, yy) in keeps if yy == y]
        if row:
            col = min(row) - 1
        else:
            col = (m * y) // n
        cols.append(col)
    steps: list[str] = []
    prev = 0
    for y in range(n):
        if cols[y] < prev:
            raise RuntimeError(f"keep set {sorted(keeps)} yields no monotone path")
        steps.extend("E" * (cols[y] - prev))
        steps.append("N")
        prev = cols[y]
    steps.extend("E" * (m - prev))
    path = DyckPath(params, tuple(steps))

    outer, inner = corners(path)
    top = most_distant_outer(path)
    vertical_pass, horizontal_pass = pass_through_points(path)
    expected = {
        Rule.KEEP: set(interior_points(path)),
        Rule.SPLIT: set(inner),
        Rule.CONTRACT: set(vstar(path)),
        Rule.START_PASS: set(vertical_pass),
        Rule.END_PASS: set(horizontal_pass),
    }
    for rule, points in expected.items():
        got = by_rule.get(rule, set())
        if got != points:
            raise RuntimeError(
                f"{rule.value} tags {sorted(got)} do not match the path "
                f"{path}: expected {sorted(points)}"
            )
    if record.terminal != top:
        raise RuntimeError(
            f"terminal {record.terminal} is not the most distant corner {top} of {path}"
        )
    for p, rule in record.tags.items():
        if rule in (Rule.SPLIT, Rule.KEEP, Rule.CONTRACT):
            expected_k = k_of(path, p)
            if record.kvals[p] != expected_k:
                raise RuntimeError(
                    f"{rule.value} at {p} used k={record.kvals[p]} but the "
                    f"path {path} has k={expected_k}"
                )
    return path


def evaluate(params: KnotParams, profile: WeightProfile) -> SweepResult:
    """Explore every branch of the sweep and accumulate the profile's weights.

    Each leaf is reconstructed into its Dyck path and validated on the fly;
    the leaf list comes back sorted by path (N before E), and the leaf count
    is checked against the rational Catalan number.
    """
    events = event_list(params)
    leaves: list[Leaf] = []
    stack: list[tuple[int, Coloring, LaurentPoly, dict, dict]] = [
        (0, initial_coloring(params), ONE, {}, {})
    ]
    while stack:
        i, state, weight, tags, kvals = stack.pop()
        finished = False
        while i < len(events):
            ev = events[i]
            for iv in state.intervals:
                assert contract_distance(iv, params) >= ev.d, "dead interval survived"
            rule, _ = classify(state, ev.p)
            if rule is Rule.NOOP:
                i += 1
                continue
            successors = apply_rule(state, ev.p, rule)
            if len(successors) == 2:
                cut, keep = successors
                k = state.k
                keep_tags = dict(tags)
                keep_tags[ev.p] = Rule.KEEP
                keep_kvals = dict(kvals)
                keep_kvals[ev.p] = k
                stack.append(
                    (i + 1, keep.state, weight * profile.weight(Rule.KEEP, k), keep_tags, keep_kvals)
                )
                tags[ev.p] = Rule.SPLIT
                kvals[ev.p] = k
                weight = weight * profile.weight(Rule.SPLIT, k)
                state = cut.state
                i += 1
                continue
            step = successors[0]
            if step.tag is Rule.TERMINAL:
                record = BranchRecord(tags, kvals, ev.p)
                value = Invariant(weight * profile.base.num, profile.base.dpow)
                path = reconstruct_path(record, params)
                leaves.append(Leaf(record, path, value))
                finished = True
                break
            tags[ev.p] = step.tag
            if step.tag is Rule.CONTRACT:
                kvals[ev.p] = step.weight_k
            weight = weight * profile.weight(step.tag, step.weight_k)
            state = step.state
            i += 1
        if not finished:
            raise RuntimeError("sweep exhausted its events with intervals still alive")

    leaves.sort(key=lambda leaf: leaf.path.sort_key)
    expected = rational_catalan(params)
    assert len(leaves) == expected, f"{len(leaves)} leaves, expected {expected}"
    assert len({str(leaf.path) for leaf in leaves}) == len(leaves), "duplicate leaf paths"
    total = Invariant(LaurentPoly.zero(), 0)
    for leaf in leaves:
        total = total + leaf.value
    return SweepResult(params, profile.name, total, leaves)


def leaf_table_json(result: SweepResult) -> list[dict]:
    """Leaf table: path word, rule tags keyed by "(x,y)", and the leaf value."""
    from .laurent import invariant_to_json

    table = []
    for leaf in result.leaves:
        tags = {f"({x},{y})": rule.value for (x, y), rule in leaf.record.tags.items()}
        tx, ty = leaf.record.terminal
        tags[f"({tx},{ty})"] = Rule.TERMINAL.value
        table.append(
            {
                "path": str(leaf.path),
                "rule_tags": dict(sorted(tags.items())),
                "value": invariant_to_json(leaf.value),
            }
        )
    return table
