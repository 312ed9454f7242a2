"""Stage-based models of c.e. sets, Dedekind cuts, and real-sequence compression.

An enumeration here is a pure function of a stage index, so every search in a
semi-decision procedure is a bounded, replayable loop.  Dedekind cuts of reals
are enumerations of rationals on one side of the target; enumeration operators
are monotone maps from input snapshots to output lists; the compression
machinery packs a uniformly right-c.e. (or left-c.e.) sequence of reals into a
single real and hands back explicit reduction witnesses in both directions.

Operator outputs are anchored to input arrival positions, never to wall-clock
stages: an axiom that fired on a snapshot prefix fires identically on every
extension, which is exactly the monotonicity enumeration reducibility needs.
"""

from __future__ import annotations

import bisect
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Generic, Iterable, List, Optional, Sequence, Tuple, TypeVar

from .exactnum import arctan_interval, format_fraction

T = TypeVar("T")

LEFT = "left"
RIGHT = "right"

HALF = Fraction(1, 2)


class SoundnessViolation(Exception):
    """A checked cut emitted a rational on the wrong side of its target."""

    def __init__(self, value: Fraction, stage: int, message: str):
        super().__init__(message)
        self.value = value
        self.stage = stage


class BoundViolation(Exception):
    """A compression input revealed a value at or beyond the declared bound."""


class StageBudgetExceeded(Exception):
    """A stage-driven search ran out of budget before certifying an answer."""

    def __init__(self, message: str, best_upper: Optional[Fraction] = None):
        super().__init__(message)
        self.best_upper = best_upper


class DuplicateEnumeration(Exception):
    """A supposedly one-to-one enumeration emitted the same element twice."""


# ---------------------------------------------------------------------------
# stage enumerations
# ---------------------------------------------------------------------------

class StageEnumeration(Generic[T]):
    """A deterministic stage-indexed stream.

    ``at(s)`` lists the items first appearing at stage s (duplicates against
    earlier stages are dropped); ``upto(s)`` is the snapshot through stage s in
    first-appearance order.  Memoization is locked so concurrent readers see a
    consistent prefix.
    """

    def __init__(self, emit: Callable[[int], Iterable[T]]):
        self._emit = emit
        self._stages: List[Tuple[T, ...]] = []
        self._seen = set()
        self._lock = threading.Lock()

    def _advance(self, stage: int) -> None:
        with self._lock:
            while len(self._stages) <= stage:
                s = len(self._stages)
                fresh = []
                for item in self._emit(s):
                    if item not in self._seen:
                        self._seen.add(item)
                        fresh.append(item)
                self._stages.append(tuple(fresh))

    def at(self, stage: int) -> Tuple[T, ...]:
        self._advance(stage)
        return self._stages[stage]

    def upto(self, stage: int) -> List[T]:
        self._advance(stage)
        return [item for chunk in self._stages[: stage + 1] for item in chunk]

    def set_upto(self, stage: int) -> frozenset:
        self._advance(stage)
        return frozenset(self.upto(stage))

    @staticmethod
    def from_stage_map(stage_map: dict) -> "StageEnumeration[T]":
        mapping = {s: tuple(items) for s, items in stage_map.items()}
        return StageEnumeration(lambda s: mapping.get(s, ()))

    @staticmethod
    def constant(items: Sequence[T]) -> "StageEnumeration[T]":
        items = tuple(items)
        return StageEnumeration(lambda s: items if s == 0 else ())

    @staticmethod
    def empty() -> "StageEnumeration[T]":
        return StageEnumeration(lambda s: ())


# ---------------------------------------------------------------------------
# a canonical enumeration of the rationals
# ---------------------------------------------------------------------------

def _fusc_pair(n: int) -> Tuple[int, int]:
    """(fusc(n), fusc(n+1)) along the Stern-Brocot diagonal."""
    if n == 0:
        return (0, 1)
    a, b = _fusc_pair(n >> 1)
    if n & 1:
        return (a + b, b)
    return (a, a + b)


def _calkin_wilf(n: int) -> Fraction:
    a, b = _fusc_pair(n)
    return Fraction(a, b)


def _dyadic_block(index: int) -> Tuple[int, int]:
    # block t holds numerators m with |m| <= 4^t: 2*4^t + 1 items
    t = 0
    start = 0
    while True:
        size = 2 * (1 << (2 * t)) + 1
        if index < start + size:
            return t, index - start
        start += size
        t += 1


@lru_cache(maxsize=1 << 18)
def canonical_rational(i: int) -> Fraction:
    """A fixed surjective enumeration of the rationals.

    Even indices walk the signed Calkin-Wilf sequence (covers every rational);
    odd indices sweep dyadic grids m/2^t with |m| <= 4^t, which keeps the
    enumeration polynomially dense at moderate resolutions.
    """
    if i == 0:
        return Fraction(0)
    if i % 2 == 0:
        j = i // 2
        q = _calkin_wilf((j + 1) // 2)
        return q if j % 2 == 1 else -q
    t, offset = _dyadic_block((i - 1) // 2)
    m = (offset + 1) // 2 if offset % 2 == 1 else -(offset // 2)
    return Fraction(m, 1 << t)


# ---------------------------------------------------------------------------
# cut enumerators
# ---------------------------------------------------------------------------

class CutEnumerator:
    """One side of a Dedekind cut as a stage enumeration of rationals."""

    def __init__(self, side: str, stream: StageEnumeration[Fraction]):
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        self.side = side
        self.stream = stream

    def at(self, stage: int) -> Tuple[Fraction, ...]:
        return self.stream.at(stage)

    def upto(self, stage: int) -> List[Fraction]:
        return self.stream.upto(stage)

    @staticmethod
    def left_of_rational(x: Fraction) -> "CutEnumerator":
        """The full left cut of a rational target, geometrically accelerated."""
        x = Fraction(x)

        def emit(s):
            out = [x - HALF**s]
            q = canonical_rational(s)
            if q < x:
                out.append(q)
            return out

        return CutEnumerator(LEFT, StageEnumeration(emit))

    @staticmethod
    def right_of_rational(x: Fraction) -> "CutEnumerator":
        x = Fraction(x)

        def emit(s):
            out = [x + HALF**s]
            q = canonical_rational(s)
            if q > x:
                out.append(q)
            return out

        return CutEnumerator(RIGHT, StageEnumeration(emit))


def attach_target(cut: CutEnumerator, target: Fraction) -> CutEnumerator:
    """Wrap a cut so every emission is checked strictly against the target."""
    target = Fraction(target)
    side = cut.side

    def emit(s):
        items = cut.at(s)
        for q in items:
            if (side == LEFT and not q < target) or (side == RIGHT and not q > target):
                raise SoundnessViolation(
                    q, s, f"{side} cut of {target} emitted {q} at stage {s}"
                )
        return items

    return CutEnumerator(side, StageEnumeration(emit))


# ---------------------------------------------------------------------------
# enumeration operators
# ---------------------------------------------------------------------------

class EnumerationOperator:
    """A monotone effective map from enumerations to enumerations.

    ``step(stage, snapshot)`` is pure: it sees the stage index and a finite
    prefix snapshot of the input and lists outputs.  Monotonicity contract:
    step(s, A) is a subset of step(s', B) whenever s <= s' and A is a prefix
    of B.  ``apply`` runs the operator against a live enumeration; subclasses
    override ``_apply_emit`` with an incremental schedule that emits a subset
    of the pure step's outputs per stage while enumerating the same set in the
    limit.
    """

    def step(self, stage: int, snapshot: Sequence) -> List:
        raise NotImplementedError

    def apply(self, enum: StageEnumeration) -> StageEnumeration:
        return StageEnumeration(self._apply_emit(enum))

    def _apply_emit(self, enum: StageEnumeration) -> Callable[[int], Iterable]:
        return lambda s: self.step(s, enum.upto(s))


class FunctionOperator(EnumerationOperator):
    def __init__(self, step: Callable[[int, Sequence], List]):
        self._step = step

    def step(self, stage, snapshot):
        return self._step(stage, snapshot)


# ---------------------------------------------------------------------------
# join
# ---------------------------------------------------------------------------

def join_family(family: Callable[[int], CutEnumerator]) -> StageEnumeration[Tuple[int, Fraction]]:
    """Dovetail a family of cuts into one enumeration of (index, rational) pairs.

    Stage s advances members 0..s to their stage-s snapshots.
    """

    def emit(s):
        out = []
        for n in range(s):
            out.extend((n, q) for q in family(n).at(s))
        out.extend((s, q) for q in family(s).upto(s))
        return out

    return StageEnumeration(emit)


# ---------------------------------------------------------------------------
# summable sequences and the sum reduction
# ---------------------------------------------------------------------------

class SummableSequence:
    """A sequence of reals given by cuts, with a modulus of summability.

    The modulus contract: |sum_{n >= N0} r_n| < 2^-k whenever N0 >= modulus(k).
    """

    def __init__(self, terms: Callable[[int], CutEnumerator], modulus: Callable[[int], int]):
        self.terms = terms
        self.modulus = modulus


class _ModulusIndex:
    """best_k(n0, t): the largest k <= t with modulus(k) <= n0."""

    def __init__(self, modulus: Callable[[int], int]):
        self._modulus = modulus
        self._values: List[int] = []
        self._best: dict[int, Tuple[int, Optional[int]]] = {}  # n0 -> (scanned, best)

    def best_k(self, n0: int, t: int) -> Optional[int]:
        while len(self._values) <= t:
            self._values.append(self._modulus(len(self._values)))
        scanned, best = self._best.get(n0, (-1, None))
        for k in range(scanned + 1, t + 1):
            if self._values[k] <= n0:
                best = k
        self._best[n0] = (max(scanned, t), best)
        return best


class _SumBoundState:
    """Monotone bound on sum r'_n from per-term witnesses.

    orient=+1 tracks per-term maxima of left-cut witnesses and a rising lower
    bound for the sum; orient=-1 is the mirror.  Internal refinement is keyed
    to the arrival count, so replaying a prefix reproduces the same bounds.
    """

    def __init__(self, modulus: Callable[[int], int], orient: int, nonneg: bool):
        self.orient = orient
        self.nonneg = nonneg
        self._index = _ModulusIndex(modulus)
        self.best: dict[int, Fraction] = {}
        self._prefix_len = 0
        self._prefix_sum = Fraction(0)  # sum of best over the witnessed prefix
        self.bound: Optional[Fraction] = None

    def offer(self, n: int, value: Fraction) -> bool:
        cur = self.best.get(n)
        if cur is not None and self.orient * (value - cur) <= 0:
            return False
        self.best[n] = value
        if n < self._prefix_len:
            self._prefix_sum += value - cur
        while self._prefix_len in self.best:
            self._prefix_sum += self.best[self._prefix_len]
            self._prefix_len += 1
        return True

    def refresh(self, code: int) -> Optional[Fraction]:
        """Fold in bound candidates available after `code` arrivals."""
        w = self._prefix_len
        if w == 0:
            return self.bound
        if self.nonneg:
            k = self._index.best_k(w - 1, code)
            if k is not None:
                cand = self._prefix_sum - self.orient * HALF**k
                if self.bound is None or self.orient * (cand - self.bound) > 0:
                    self.bound = cand
            return self.bound
        prefix = Fraction(0)
        for n0 in range(w):
            prefix += self.best[n0]
            k = self._index.best_k(n0, code)
            if k is None:
                continue
            cand = prefix - self.orient * HALF**k
            if self.bound is None or self.orient * (cand - self.bound) > 0:
                self.bound = cand
        return self.bound


class _FrontierEmitter:
    """Emit all rationals strictly on one side of a monotone bound, stagewise.

    Canonical rationals give full coverage of Q; ladder values bound -/+ 2^-j
    give geometric density at the target.  Pending canonical values wait in a
    sorted list until the bound passes them.
    """

    def __init__(self, orient: int):
        self.orient = orient
        self._pending: List[Fraction] = []  # sorted keys: -orient * value
        self._next_index = 0

    def emit(self, stage: int, bound: Optional[Fraction]) -> List[Fraction]:
        while self._next_index <= stage:
            bisect.insort(self._pending, -self.orient * canonical_rational(self._next_index))
            self._next_index += 1
        if bound is None:
            return []
        out = [bound - self.orient * HALF**stage]
        cutoff = -self.orient * bound
        while self._pending and self._pending[-1] > cutoff:
            out.append(-self.orient * self._pending.pop())
        return out


class SumReduction(EnumerationOperator):
    """The cut of sum r'_n from an enumeration of the join of the terms' cuts.

    side=LEFT consumes left cuts ((n, q) with q < r_n) and emits the left cut
    of the sum; side=RIGHT is the mirror.  ``transform`` maps each witnessed
    rational into the summed scale, keyed by its arrival position so replays
    are exact.
    """

    def __init__(
        self,
        modulus: Callable[[int], int],
        side: str,
        transform: Optional[Callable[[int, Fraction, int], Fraction]] = None,
        guard: Optional[Callable[[int, Fraction], None]] = None,
        nonneg: bool = False,
    ):
        if side not in (LEFT, RIGHT):
            raise ValueError("side must be left or right")
        self.side = side
        self.orient = 1 if side == LEFT else -1
        self.modulus = modulus
        self.transform = transform or (lambda n, q, code: q)
        self.guard = guard
        self.nonneg = nonneg

    def _fresh_state(self) -> _SumBoundState:
        return _SumBoundState(self.modulus, self.orient, self.nonneg)

    def step(self, stage: int, snapshot: Sequence[Tuple[int, Fraction]]) -> List[Fraction]:
        state = self._fresh_state()
        bounds: List[Fraction] = []
        for code, (n, q) in enumerate(snapshot):
            if self.guard is not None:
                self.guard(n, q)
            if state.offer(n, self.transform(n, q, code)):
                b = state.refresh(code)
                if b is not None and (not bounds or b != bounds[-1]):
                    bounds.append(b)
        out: List[Fraction] = []
        for b in bounds:
            out.extend(b - self.orient * HALF**j for j in range(stage + 1))
        if bounds:
            final = bounds[-1]
            out.extend(
                q
                for q in (canonical_rational(i) for i in range(stage + 1))
                if self.orient * (q - final) < 0
            )
        return out

    def _apply_emit(self, enum: StageEnumeration) -> Callable[[int], Iterable]:
        state = self._fresh_state()
        emitter = _FrontierEmitter(self.orient)
        counter = {"code": 0}

        def emit(s):
            changed = False
            for n, q in enum.at(s):
                if self.guard is not None:
                    self.guard(n, q)
                code = counter["code"]
                counter["code"] += 1
                if state.offer(n, self.transform(n, q, code)):
                    changed = True
            if changed:
                state.refresh(max(0, counter["code"] - 1))
            return emitter.emit(s, state.bound)

        return emit


class SumWithModulusResult:
    def __init__(self, cut: CutEnumerator, witness: EnumerationOperator):
        self.cut = cut
        self.witness = witness


def sum_with_modulus(seq: SummableSequence, side: str) -> SumWithModulusResult:
    """Enumerate the chosen cut of sum r_n, with the reduction as a witness.

    The witness consumes any enumeration of the join of the terms' cuts (on
    the same side) and produces the corresponding cut of the sum; the returned
    cut is the witness applied to the canonical join of ``seq.terms``.
    """
    witness = SumReduction(seq.modulus, side)
    return SumWithModulusResult(
        CutEnumerator(side, witness.apply(join_family(seq.terms))), witness
    )


# ---------------------------------------------------------------------------
# c.e.-presented reals (preserved cut + convergent bound stream)
# ---------------------------------------------------------------------------

class RightCeReal:
    """A real with computably enumerable upper approximations.

    ``upper_bounds`` is the free side: a stream of rationals >= x converging
    to x (the strict right cut is derived from it).  ``left_cut`` is the
    information side that compression preserves.
    """

    def __init__(self, left_cut: CutEnumerator, upper_bounds: StageEnumeration[Fraction]):
        if left_cut.side != LEFT:
            raise ValueError("left_cut must be a left cut")
        self.left_cut = left_cut
        self.upper_bounds = upper_bounds

    @staticmethod
    def of_rational(x: Fraction) -> "RightCeReal":
        x = Fraction(x)
        return RightCeReal(
            CutEnumerator.left_of_rational(x), StageEnumeration.constant([x])
        )


class LeftCeReal:
    """Mirror: c.e. lower approximations, right cut preserved."""

    def __init__(self, right_cut: CutEnumerator, lower_bounds: StageEnumeration[Fraction]):
        if right_cut.side != RIGHT:
            raise ValueError("right_cut must be a right cut")
        self.right_cut = right_cut
        self.lower_bounds = lower_bounds

    @staticmethod
    def of_rational(x: Fraction) -> "LeftCeReal":
        x = Fraction(x)
        return LeftCeReal(
            CutEnumerator.right_of_rational(x), StageEnumeration.constant([x])
        )


# ---------------------------------------------------------------------------
# compression
# ---------------------------------------------------------------------------

def _compression_modulus(k: int) -> int:
    return k + 2


class _CompressionEngine:
    """Shared state for one compression instance (one orientation).

    Terms are assumed nonnegative; bounded instances rescale by 2^-n M^-1,
    unbounded ones route values through arctan first (arctan < 2 serves as the
    bound).  All interval precisions are keyed to arrival codes.
    """

    def __init__(self, family, bound: Optional[Fraction], orient: int):
        self.family = family
        self.orient = orient
        self.bounded = bound is not None
        if self.bounded:
            bound = Fraction(bound)
            if bound <= 0:
                raise ValueError("bound must be positive")
        self.bound = bound if self.bounded else Fraction(2)
        self._streams: dict[int, StageEnumeration[Fraction]] = {}
        self._best: dict[int, Fraction] = {}
        self._done_stage: dict[int, int] = {}
        self._lock = threading.Lock()

    def transform(self, n: int, q: Fraction, code: int) -> Fraction:
        """Witnessed cut element of r_n -> element for r'_n = 2^-n M^-1 r_n."""
        if not self.bounded:
            q = self._arctan_value(q, code)
        return HALF**n * q / self.bound

    def guard(self, n: int, q: Fraction) -> None:
        if self.bounded and self.orient * (q - self.bound) >= 0:
            raise BoundViolation(
                f"term {n}: witnessed {q} at or beyond declared bound {self.bound}"
            )

    def _arctan_value(self, q: Fraction, code: int) -> Fraction:
        prec = min(max(8, code), 64)
        lo, hi = arctan_interval(q, prec).to_fractions()
        return lo if self.orient > 0 else hi

    def free_bound(self, m: int, t: int) -> Optional[Fraction]:
        """Best bound on r'_m from the family's convergent free side, t stages in."""
        with self._lock:
            stream = self._streams.get(m)
            if stream is None:
                member = self.family(m)
                stream = member.upper_bounds if self.orient > 0 else member.lower_bounds
                self._streams[m] = stream
            done = self._done_stage.get(m, -1)
            best = self._best.get(m)
            for s in range(done + 1, t + 1):
                for raw in stream.at(s):
                    if not self.bounded:
                        prec = min(max(8, t), 64)
                        lo, hi = arctan_interval(raw, prec).to_fractions()
                        raw = hi if self.orient > 0 else lo
                    val = HALF**m * raw / self.bound
                    if best is None or self.orient * (val - best) < 0:
                        best = val
            self._done_stage[m] = max(done, t)
            if best is not None:
                self._best[m] = best
            return best

    def remainder_bound(self, term: int, t: int) -> Optional[Fraction]:
        """Strict bound (over for orient=+1) on sum_{m != term} r'_m after t arrivals."""
        n0 = min(t, 12 + t // 32)
        k = n0 - 2
        if k < 0:
            return None
        total = Fraction(0)
        for m in range(n0 + 1):
            if m == term:
                continue
            b = self.free_bound(m, t)
            if b is None:
                return None
            total += b
        return total + self.orient * HALF**k

    def unscale_term(self, n: int, scaled: Fraction, t: int) -> Optional[Fraction]:
        """Map a bound on r'_n back to a bound on r_n."""
        value = scaled * self.bound * (1 << n)
        if self.bounded:
            return value
        return self._invert_arctan(value, t)

    def _invert_arctan(self, target: Fraction, t: int) -> Optional[Fraction]:
        """A rational q with arctan(q) certified on the preserved side of target."""
        prec = min(max(8, t), 64)
        orient = self.orient

        def certified(q: Fraction) -> bool:
            lo, hi = arctan_interval(q, prec).to_fractions()
            return hi < target if orient > 0 else lo > target

        anchor = Fraction(-1) if orient > 0 else Fraction(1)
        for _ in range(80):
            if certified(anchor):
                break
            anchor *= 2
            if abs(anchor) > 1 << 60:
                return None
        else:
            return None
        probe = -anchor if anchor != 0 else Fraction(1)
        for _ in range(60):
            if certified(probe):
                anchor = probe
                probe *= 2
            else:
                break
        lo_q, hi_q = (anchor, probe) if orient > 0 else (probe, anchor)
        best = anchor
        for _ in range(min(max(4, t // 2), 48)):
            mid = (lo_q + hi_q) / 2
            if certified(mid):
                best = mid
                if orient > 0:
                    lo_q = mid
                else:
                    hi_q = mid
            else:
                if orient > 0:
                    hi_q = mid
                else:
                    lo_q = mid
        return best


class BackReduction(EnumerationOperator):
    """Recovers one term's preserved cut from the compressed real's cut.

    For the right-c.e. case: a witnessed q < r combines with a strict
    overestimate U of sum_{m != n} r'_m (from the family's free side plus the
    modulus tail) into q - U < r'_n, rescaled back to the term's own scale.
    """

    def __init__(self, term: int, engine: _CompressionEngine):
        self.term = term
        self.engine = engine
        self.orient = engine.orient

    def _term_bound(self, best_q: Fraction, t: int) -> Optional[Fraction]:
        rem = self.engine.remainder_bound(self.term, t)
        if rem is None:
            return None
        return self.engine.unscale_term(self.term, best_q - rem, t)

    def step(self, stage: int, snapshot: Sequence[Fraction]) -> List[Fraction]:
        bounds: List[Fraction] = []
        best: Optional[Fraction] = None
        for code, q in enumerate(snapshot):
            if best is None or self.orient * (q - best) > 0:
                best = q
                b = self._term_bound(best, code)
                if b is not None and (not bounds or b != bounds[-1]):
                    bounds.append(b)
        out: List[Fraction] = []
        for b in bounds:
            out.extend(b - self.orient * HALF**j for j in range(stage + 1))
        if bounds:
            final = max(bounds) if self.orient > 0 else min(bounds)
            out.extend(
                q
                for q in (canonical_rational(i) for i in range(stage + 1))
                if self.orient * (q - final) < 0
            )
        return out

    def _apply_emit(self, enum: StageEnumeration) -> Callable[[int], Iterable]:
        emitter = _FrontierEmitter(self.orient)
        state = {"best": None, "bound": None, "code": 0}

        def emit(s):
            changed = False
            for q in enum.at(s):
                code = state["code"]
                state["code"] += 1
                if state["best"] is None or self.orient * (q - state["best"]) > 0:
                    state["best"] = q
                    changed = True
            if state["best"] is not None and (changed or (s & (s - 1)) == 0):
                b = self._term_bound(state["best"], max(0, state["code"] - 1))
                if b is not None and (
                    state["bound"] is None
                    or self.orient * (b - state["bound"]) > 0
                ):
                    state["bound"] = b
            return emitter.emit(s, state["bound"])

        return emit


class CompressionResult:
    """The compressed real's preserved cut plus both reduction witnesses."""

    def __init__(
        self,
        real_cut: CutEnumerator,
        forward: EnumerationOperator,
        back: Callable[[int], EnumerationOperator],
        joined: StageEnumeration,
    ):
        self.real_cut = real_cut
        self.forward = forward
        self.back = back
        self.joined = joined


def _compress(family, bound: Optional[Fraction], orient: int) -> CompressionResult:
    engine = _CompressionEngine(family, bound, orient)
    side = LEFT if orient > 0 else RIGHT
    forward = SumReduction(
        _compression_modulus,
        side,
        transform=engine.transform,
        guard=engine.guard,
        nonneg=True,
    )

    def cuts(n: int) -> CutEnumerator:
        member = family(n)
        return member.left_cut if orient > 0 else member.right_cut

    joined = join_family(cuts)
    real_cut = CutEnumerator(side, forward.apply(joined))
    return CompressionResult(real_cut, forward, lambda n: BackReduction(n, engine), joined)


def compress_right_ce(
    family: Callable[[int], RightCeReal], bound: Optional[Fraction] = None
) -> CompressionResult:
    """Compress a uniformly right-c.e. sequence into one right-c.e. real.

    Terms must be nonnegative; with ``bound`` M they must satisfy r_n < M and
    r'_n = 2^-n M^-1 r_n is summed with modulus k -> k+2; without a bound the
    terms are routed through arctan first.  Returns the left cut of the
    compressed real r, the forward reduction (any enumeration of the join of
    the left cuts -> left cut of r), and per-term back reductions (left cut
    of r -> left cut of r_n).
    """
    return _compress(family, bound, orient=1)


def compress_left_ce(
    family: Callable[[int], LeftCeReal], bound: Optional[Fraction] = None
) -> CompressionResult:
    """Mirror image of :func:`compress_right_ce` (right cuts preserved)."""
    return _compress(family, bound, orient=-1)


# ---------------------------------------------------------------------------
# real oracles
# ---------------------------------------------------------------------------

class RealOracle:
    """A real given by arbitrarily good rational approximations."""

    def __init__(self, approx: Callable[[int], Fraction]):
        self._approx = approx

    def approx(self, k: int) -> Fraction:
        """A rational within 2^-k of the value."""
        return self._approx(k)

    @staticmethod
    def from_rational(x: Fraction) -> "RealOracle":
        x = Fraction(x)
        return RealOracle(lambda k: x)

    @staticmethod
    def from_cuts(
        left: CutEnumerator, right: CutEnumerator, stage_budget: int = 10_000
    ) -> "RealOracle":
        """A computable real from enumerations of both of its cuts."""

        def approx(k: int) -> Fraction:
            best_lo: Optional[Fraction] = None
            best_hi: Optional[Fraction] = None
            for s in range(stage_budget):
                for q in left.at(s):
                    if best_lo is None or q > best_lo:
                        best_lo = q
                for q in right.at(s):
                    if best_hi is None or q < best_hi:
                        best_hi = q
                if (
                    best_lo is not None
                    and best_hi is not None
                    and best_hi - best_lo <= HALF**k
                ):
                    return (best_lo + best_hi) / 2
            raise StageBudgetExceeded(
                f"cut gap did not close to 2^-{k} within {stage_budget} stages",
                best_upper=best_hi,
            )

        return RealOracle(approx)


# ---------------------------------------------------------------------------
# stream serialization ("s <TAB> item" lines)
# ---------------------------------------------------------------------------

def format_stream_item(item) -> str:
    if isinstance(item, tuple):
        n, q = item
        return f"({n},{format_fraction(q)})"
    return format_fraction(item)


def stream_lines(enum: StageEnumeration, stages: int) -> List[str]:
    lines = []
    for s in range(stages):
        for item in enum.at(s):
            lines.append(f"{s}\t{format_stream_item(item)}")
    return lines


def parse_stream_lines(lines: Iterable[str]) -> StageEnumeration:
    stage_map: dict[int, list] = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            stage_str, item_str = line.split("\t")
            stage = int(stage_str)
            if item_str.startswith("("):
                n_str, q_str = item_str.strip("()").split(",")
                item = (int(n_str), Fraction(q_str))
            else:
                item = Fraction(item_str)
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: cannot parse {line!r}") from exc
        stage_map.setdefault(stage, []).append(item)
    return StageEnumeration.from_stage_map(stage_map)
