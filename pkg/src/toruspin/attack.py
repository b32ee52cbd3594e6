"""Observer and mouse-logger attack analysis: brute-force candidate
enumeration over recorded sessions, multi-session intersection, and Monte
Carlo sessions-to-break estimates."""

from __future__ import annotations

import json
import random
import statistics
from dataclasses import dataclass
from math import prod
from typing import Sequence

from . import board as board_mod
from .board import BoardSpec, BoardState, Cell, Offset, torus_wrap
from .session import Credentials, LoginSession, StepRecord, expected_pair_sequence

Pair = tuple[str, str]

TRANSCRIPT_VERSION = 1


@dataclass(frozen=True)
class ObservedStep:
    """Everything an omniscient passive observer records at one step."""

    board_state: BoardState
    committed_offset: Offset
    visible: frozenset[str]


@dataclass(frozen=True)
class SessionTranscript:
    spec: BoardSpec
    steps: tuple[ObservedStep, ...]

    @property
    def k(self) -> int:
        return len(self.steps)

    def to_json(self) -> str:
        return json.dumps(
            {
                "version": TRANSCRIPT_VERSION,
                "spec": json.loads(self.spec.to_json()),
                "steps": [
                    {
                        "fixed": list(s.board_state.fixed_perm),
                        "cursor": list(s.board_state.cursor_perm),
                        "pointer_origin": list(s.board_state.pointer_origin),
                        "offset": list(s.committed_offset),
                        "visible": sorted(s.visible),
                    }
                    for s in self.steps
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SessionTranscript":
        data = json.loads(text)
        if data.get("version") != TRANSCRIPT_VERSION:
            raise ValueError(f"unsupported transcript version: {data.get('version')!r}")
        spec = BoardSpec.from_json(json.dumps(data["spec"]))
        steps = []
        for s in data["steps"]:
            state = BoardState(
                spec,
                tuple(s["fixed"]),
                tuple(s["cursor"]),
                tuple(s["offset"]),
                tuple(s["pointer_origin"]),
            )
            steps.append(
                ObservedStep(state, tuple(s["offset"]), frozenset(s["visible"]))
            )
        return cls(spec, tuple(steps))


@dataclass(frozen=True)
class CandidateSet:
    """Per-position sets of (fixed, cursor) pairs still consistent with the
    observations."""

    per_position: tuple[frozenset[Pair], ...]

    def position_counts(self) -> list[int]:
        return [len(s) for s in self.per_position]

    def sequence_count(self) -> int:
        """Number of consistent pair sequences."""
        return prod(self.position_counts()) if self.per_position else 0

    def id_sequence_count(self) -> int:
        """Number of consistent ID passwords (projection onto fixed symbols)."""
        counts = [len({f for f, _ in s}) for s in self.per_position]
        return prod(counts) if counts else 0

    def contains(self, pairs: Sequence[Pair]) -> bool:
        return len(pairs) == len(self.per_position) and all(
            p in s for p, s in zip(pairs, self.per_position)
        )


def observe(session: LoginSession) -> SessionTranscript:
    """Extract what was on screen from a completed session: board states,
    committed offsets, visible symbols. Never match bits or credentials."""
    if session.step_index != session.k:
        raise ValueError("session is incomplete")
    steps = tuple(
        ObservedStep(rec.board_state, rec.committed_offset, rec.visible)
        for rec in session.steps
    )
    return SessionTranscript(session.spec, steps)


def _step_pairs(step: ObservedStep) -> frozenset[Pair]:
    state = board_mod.move_cursor(
        step.board_state,
        (
            step.committed_offset[0] - step.board_state.offset[0],
            step.committed_offset[1] - step.board_state.offset[1],
        ),
    )
    return frozenset(
        p for p in board_mod.aligned_pairs(state) if p[1] in step.visible
    )


def candidates_single_session(t: SessionTranscript) -> CandidateSet:
    """All pair sequences a single-session observer cannot rule out:
    n^k under full display, l^k under partial display."""
    return CandidateSet(tuple(_step_pairs(s) for s in t.steps))


def intersect_sessions(transcripts: Sequence[SessionTranscript]) -> CandidateSet:
    """Positionwise intersection of the per-session candidate pair sets."""
    if not transcripts:
        raise ValueError("need at least one transcript")
    k = transcripts[0].k
    spec = transcripts[0].spec
    for t in transcripts:
        if t.k != k or t.spec != spec:
            raise ValueError("transcripts disagree on board spec or length")
    sets = [candidates_single_session(t).per_position for t in transcripts]
    merged = tuple(
        frozenset.intersection(*(s[i] for s in sets)) for i in range(k)
    )
    return CandidateSet(merged)


def simulate_session(
    spec: BoardSpec,
    creds: Credentials,
    seed: random.Random | int | None = None,
    *,
    display_l: int | None = None,
) -> LoginSession:
    """Run one honest login: at each step commit the offset aligning the
    expected (ID, UI) pair."""
    session = LoginSession(
        spec, creds.k, credentials=creds, display_l=display_l, seed=seed
    )
    for f, m in expected_pair_sequence(creds):
        offset = board_mod.offset_aligning(session.board, f, m)
        session.commit_step(offset)
    return session


@dataclass
class BreakDistribution:
    """Empirical distribution of sessions needed until the intersection is a
    singleton at every position. ``counts`` holds per-trial session numbers;
    censored trials (cap reached without a singleton) are recorded as None."""

    counts: list[int | None]
    max_sessions: int

    def completed(self) -> list[int]:
        return [c for c in self.counts if c is not None]

    def summary(self) -> dict:
        done = self.completed()
        out: dict = {
            "trials": len(self.counts),
            "censored": self.counts.count(None),
            "max_sessions": self.max_sessions,
        }
        if done:
            qs = statistics.quantiles(done, n=100, method="inclusive") if len(done) > 1 else [done[0]] * 99
            out.update(
                mean=statistics.fmean(done),
                p50=qs[49],
                p90=qs[89],
                min=min(done),
                max=max(done),
            )
        return out


def sessions_to_break(
    spec: BoardSpec,
    k: int,
    trials: int,
    seed: int | None = None,
    *,
    display_l: int | None = None,
    max_sessions: int = 64,
) -> BreakDistribution:
    """Monte Carlo: with the same credentials reused, how many observed
    sessions until the intersected candidate set pins every position."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    counts: list[int | None] = []
    for trial in range(trials):
        # independent per-trial stream derived from (seed, trial index)
        rng = random.Random(None if seed is None else seed * 1_000_003 + trial)
        creds = _random_credentials(spec, k, rng)
        current: list[frozenset[Pair]] | None = None
        found: int | None = None
        for s in range(1, max_sessions + 1):
            session = simulate_session(spec, creds, rng, display_l=display_l)
            t = observe(session)
            step_sets = [_step_pairs(st) for st in t.steps]
            if current is None:
                current = step_sets
            else:
                nxt = [a & b for a, b in zip(current, step_sets)]
                # intersection never enlarges a position
                assert all(len(a) <= len(b) for a, b in zip(nxt, current))
                current = nxt
            if all(len(c) == 1 for c in current):
                found = s
                break
        counts.append(found)
    return BreakDistribution(counts, max_sessions)


def _random_credentials(spec: BoardSpec, k: int, rng: random.Random) -> Credentials:
    id_pw = tuple(rng.choice(spec.fixed_symbols) for _ in range(k))
    ui_pw = tuple(rng.choice(spec.cursor_symbols) for _ in range(k))
    return Credentials(id_pw, ui_pw)


def pointer_trace(session: LoginSession) -> list[Cell]:
    """What a mouse logger captures per step: the absolute pointer cell at
    commit time. The random per-step origin is not part of the trace."""
    return [rec.commit_cell for rec in session.steps]


def mouse_log_inference(
    traces: Sequence[Sequence[Cell]],
    transcripts: Sequence[SessionTranscript],
    *,
    origins_disclosed: bool = False,
) -> CandidateSet:
    """Candidate pairs inferable from pointer traces plus the visible board
    permutations, without the committed offsets.

    The committed offset relates to the trace by offset = wrap(cell - origin)
    with the origin drawn uniformly per step. Without the origins every
    offset is equally consistent, so per position the union over origin
    hypotheses covers every (fixed, cursor) pairing: the ID password is not
    narrowed below the full n^k set. The ablation flag reads the origins out
    of the board states and recovers the offsets exactly, which collapses the
    analysis to the single-session observer's candidate set.
    """
    if len(traces) != len(transcripts):
        raise ValueError("one trace per transcript required")
    if not transcripts:
        return CandidateSet(())
    k = transcripts[0].k
    per_session: list[list[frozenset[Pair]]] = []
    for trace, t in zip(traces, transcripts):
        if len(trace) != t.k or t.k != k:
            raise ValueError("trace/transcript length mismatch")
        sets: list[frozenset[Pair]] = []
        for cell, step in zip(trace, t.steps):
            dims = t.spec.dims
            if origins_disclosed:
                o = step.board_state.pointer_origin
                offsets = [torus_wrap((cell[0] - o[0], cell[1] - o[1]), dims)]
            else:
                offsets = [(r, c) for r in range(dims[0]) for c in range(dims[1])]
            pairs: set[Pair] = set()
            for off in offsets:
                shifted = ObservedStep(step.board_state, off, step.visible)
                pairs |= _step_pairs(shifted)
            sets.append(frozenset(pairs))
        per_session.append(sets)
    merged = tuple(
        frozenset.intersection(*(s[i] for s in per_session)) for i in range(k)
    )
    return CandidateSet(merged)
