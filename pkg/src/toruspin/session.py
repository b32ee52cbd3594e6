"""Login lifecycle: credentials, legacy PIN decomposition, per-step
commit/reset, validation (plaintext and hash-only), and the salted iterated
credential hash.

Per-step acknowledgments carry only the count of entered keys; match bits
never leave the engine before validation.
"""

from __future__ import annotations

import hashlib
import json
import random
import secrets
from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Sequence

from cryptography.fernet import Fernet

from . import board as board_mod
from .board import BoardSpec, BoardState, Cell, Offset, torus_wrap

PLAINTEXT = "plaintext-recoverable"
HASH_ONLY = "hash-only"

DEFAULT_ITERATIONS = 25
DEFAULT_CANDIDATE_CEILING = 10_000_000


class SessionError(RuntimeError):
    """Lifecycle violation: wrong state for the requested operation."""


class CandidateCeilingError(RuntimeError):
    """Hash-only validation refused: candidate count exceeds the ceiling."""


@dataclass(frozen=True)
class Credentials:
    """ID password over the fixed symbols plus the associated UI password
    over the cursor symbols; the UI password may be shorter and is applied
    with the modulo rule."""

    id_password: tuple[str, ...]
    ui_password: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "id_password", tuple(self.id_password))
        object.__setattr__(self, "ui_password", tuple(self.ui_password))
        if len(self.id_password) < 1:
            raise ValueError("ID password must be non-empty")
        if not 1 <= len(self.ui_password) <= len(self.id_password):
            raise ValueError("UI password length must be in [1, len(ID password)]")

    @property
    def k(self) -> int:
        return len(self.id_password)

    @property
    def m(self) -> int:
        return len(self.ui_password)

    def check_against(self, spec: BoardSpec) -> None:
        for s in self.id_password:
            spec.fixed_index(s)
        for s in self.ui_password:
            spec.cursor_index(s)


def split_legacy_pin(
    pin: Sequence[str], ui_length: int, spec: BoardSpec
) -> Credentials:
    """Decompose a single legacy PIN into the two passwords.

    The last ``ui_length`` symbols form the UI password; when they are fixed
    symbols (digits), they are carried to the cursor alphabet through the
    universal numbering (digit with index i -> cursor symbol with index i).
    """
    symbols = tuple(pin)
    if ui_length < 1:
        raise ValueError("ui_length must be >= 1")
    k = len(symbols) - ui_length
    if ui_length > k:
        raise ValueError("UI part may not be longer than the ID part")
    id_part = symbols[:k]
    ui_part = []
    for s in symbols[k:]:
        if s in spec.cursor_symbols:
            ui_part.append(s)
        else:
            ui_part.append(spec.cursor_symbols[spec.fixed_index(s)])
    creds = Credentials(id_part, tuple(ui_part))
    creds.check_against(spec)
    return creds


def expected_pair_sequence(creds: Credentials) -> tuple[tuple[str, str], ...]:
    """Pair i = (id[i], ui[i mod m]): the alignment the user must enter at
    each step."""
    m = creds.m
    return tuple(
        (creds.id_password[i], creds.ui_password[i % m]) for i in range(creds.k)
    )


_FIELD_SEP = b"\x1f"
_PART_SEP = b"\x00"


def iterated_hash(
    salt: str,
    id_password: Sequence[str],
    ui_password: Sequence[str],
    iterations: int = DEFAULT_ITERATIONS,
) -> str:
    """Salted iterated SHA-256 digest of the credential pair.

    Byte encoding: UTF-8 symbols joined by 0x1f within each password, the
    three parts (salt, ID, UI) joined by 0x00; SHA-256 applied ``iterations``
    times to that payload. Returns the hex digest.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    payload = _PART_SEP.join(
        (
            salt.encode("utf-8"),
            _FIELD_SEP.join(s.encode("utf-8") for s in id_password),
            _FIELD_SEP.join(s.encode("utf-8") for s in ui_password),
        )
    )
    digest = payload
    for _ in range(iterations):
        digest = hashlib.sha256(digest).digest()
    return digest.hex()


@dataclass
class StoredCredential:
    """What the server keeps for one user. ``sealed`` is a Fernet token of
    the credentials JSON, present only in plaintext-recoverable mode."""

    user_id: str
    salt: str
    iterations: int
    digest: str
    mode: str
    ui_length: int
    sealed: str | None = None

    @classmethod
    def create(
        cls,
        user_id: str,
        creds: Credentials,
        mode: str = PLAINTEXT,
        *,
        fernet_key: bytes | None = None,
        salt: str | None = None,
        iterations: int = DEFAULT_ITERATIONS,
    ) -> "StoredCredential":
        if mode not in (PLAINTEXT, HASH_ONLY):
            raise ValueError(f"unknown mode: {mode!r}")
        if salt is None:
            salt = secrets.token_hex(16)
        if len(salt) < 2:
            raise ValueError("salt must be at least 2 characters")
        digest = iterated_hash(salt, creds.id_password, creds.ui_password, iterations)
        sealed = None
        if mode == PLAINTEXT:
            if fernet_key is None:
                raise ValueError("plaintext-recoverable mode needs a fernet_key")
            blob = json.dumps(
                {"id": list(creds.id_password), "ui": list(creds.ui_password)}
            ).encode()
            sealed = Fernet(fernet_key).encrypt(blob).decode("ascii")
        return cls(user_id, salt, iterations, digest, mode, creds.m, sealed)

    def recover(self, fernet_key: bytes) -> Credentials:
        if self.mode != PLAINTEXT or self.sealed is None:
            raise SessionError("credentials are not recoverable in hash-only mode")
        data = json.loads(Fernet(fernet_key).decrypt(self.sealed.encode("ascii")))
        return Credentials(tuple(data["id"]), tuple(data["ui"]))

    def to_json(self) -> str:
        return json.dumps(
            {
                "user_id": self.user_id,
                "salt": self.salt,
                "iterations": self.iterations,
                "digest": self.digest,
                "mode": self.mode,
                "ui_length": self.ui_length,
                "sealed": self.sealed,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "StoredCredential":
        d = json.loads(text)
        return cls(
            d["user_id"], d["salt"], d["iterations"], d["digest"],
            d["mode"], d["ui_length"], d.get("sealed"),
        )


@dataclass
class StepRecord:
    board_state: BoardState
    committed_offset: Offset
    visible: frozenset[str]
    match: bool | None  # None in hash-only mode (deferred to validation)
    commit_cell: Cell  # absolute pointer cell at commit: wrap(origin + offset)


IN_PROGRESS = "in-progress"
VALIDATED_SUCCESS = "validated-success"
VALIDATED_FAILURE = "validated-failure"
ABORTED = "aborted"


class LoginSession:
    """One login attempt. Owned by a single caller at a time; the auth
    service serializes operations per session."""

    def __init__(
        self,
        spec: BoardSpec,
        k: int,
        *,
        credentials: Credentials | None = None,
        display_l: int | None = None,
        seed: random.Random | int | None = None,
        shuffle_fixed: bool = True,
        shuffle_cursor: bool = True,
        session_id: str | None = None,
    ) -> None:
        if k < 1:
            raise ValueError("k must be >= 1")
        if credentials is not None:
            credentials.check_against(spec)
            if credentials.k != k:
                raise ValueError("k must equal the ID password length")
        if display_l is not None and display_l < spec.n and credentials is None:
            raise ValueError("partial display requires recoverable credentials")
        self.session_id = session_id or secrets.token_urlsafe(16)
        self.spec = spec
        self.k = k
        self.credentials = credentials
        self.display_l = display_l if display_l is not None else spec.n
        self.status = IN_PROGRESS
        self.steps: list[StepRecord] = []
        self._rng = board_mod._as_rng(seed)
        self._shuffle_fixed = shuffle_fixed
        self._shuffle_cursor = shuffle_cursor
        self._expected = (
            expected_pair_sequence(credentials) if credentials is not None else None
        )
        self.board = board_mod.identity_state(spec)
        self.visible: frozenset[str] = frozenset()
        self._fresh_board()

    # -- board lifecycle ---------------------------------------------------

    def _fresh_board(self) -> None:
        self.board = board_mod.shuffle(
            self.board,
            self._rng,
            shuffle_fixed=self._shuffle_fixed,
            shuffle_cursor=self._shuffle_cursor,
        )
        self.visible = self._visible_for_step(self.step_index)

    def _visible_for_step(self, index: int) -> frozenset[str]:
        if self.display_l >= self.spec.n or index >= self.k:
            return frozenset(self.spec.cursor_symbols)
        assert self._expected is not None
        correct = self._expected[index][1]
        return board_mod.visible_subset(self.board, correct, self.display_l, self._rng)

    @property
    def step_index(self) -> int:
        return len(self.steps)

    # -- cursor movement ---------------------------------------------------

    def move(self, delta: Sequence[int]) -> None:
        self._require_in_progress()
        self.board = board_mod.move_cursor(self.board, delta)

    def move_to_cell(self, cell: Cell) -> None:
        """Absolute order: set the offset so the pointer-origin cell lands
        on ``cell``."""
        self._require_in_progress()
        o = self.board.pointer_origin
        offset = torus_wrap((cell[0] - o[0], cell[1] - o[1]), self.spec.dims)
        self.board = board_mod.move_cursor(
            board_mod.move_cursor(self.board, (-self.board.offset[0], -self.board.offset[1])),
            offset,
        )

    # -- step lifecycle ----------------------------------------------------

    def commit_step(self, offset: Sequence[int] | None = None) -> dict:
        """Record the current (or given) offset as one entry step.

        Returns only the asterisk count; the acknowledgment is byte-identical
        for matching and non-matching commits.
        """
        self._require_in_progress()
        if self.step_index >= self.k:
            raise SessionError("all steps already entered")
        committed = (
            self.board.offset
            if offset is None
            else torus_wrap(offset, self.spec.dims)
        )
        state = self.board if offset is None else board_mod.move_cursor(
            self.board, (committed[0] - self.board.offset[0], committed[1] - self.board.offset[1])
        )
        match: bool | None = None
        if self._expected is not None:
            f, m = self._expected[self.step_index]
            aligned = state.cursor_symbol_over(state.fixed_cell_of(f))
            match = aligned == m and m in self.visible
        origin = state.pointer_origin
        commit_cell = torus_wrap(
            (origin[0] + committed[0], origin[1] + committed[1]), self.spec.dims
        )
        self.steps.append(StepRecord(state, committed, self.visible, match, commit_cell))
        self._fresh_board()
        return {"entered": self.step_index}

    def reset_last(self) -> dict:
        self._require_in_progress()
        if not self.steps:
            raise SessionError("nothing to reset")
        self.steps.pop()
        self._fresh_board()
        return {"entered": self.step_index}

    def _require_in_progress(self) -> None:
        if self.status != IN_PROGRESS:
            raise SessionError(f"session is {self.status}")

    # -- validation ----------------------------------------------------------

    def validate(
        self,
        stored: StoredCredential,
        *,
        candidate_ceiling: int = DEFAULT_CANDIDATE_CEILING,
    ) -> bool:
        """Final verdict. Plaintext mode checks the recorded match bits;
        hash-only mode brute-forces every transcript-consistent candidate
        against the stored digest."""
        self._require_in_progress()
        if self.step_index != self.k:
            raise SessionError(f"entered {self.step_index} of {self.k} steps")
        if self._expected is not None:
            ok = all(rec.match for rec in self.steps)
        else:
            ok, _ = hash_only_validate(
                self.steps, stored, self.spec, candidate_ceiling=candidate_ceiling
            )
        self.status = VALIDATED_SUCCESS if ok else VALIDATED_FAILURE
        return ok

    def abort(self) -> None:
        self.status = ABORTED


def step_pair_sets(
    steps: Sequence[StepRecord], spec: BoardSpec
) -> list[frozenset[tuple[str, str]]]:
    """Per step: the aligned (fixed, cursor) pairs actually displayable,
    i.e. restricted to the visible cursor symbols."""
    out = []
    for rec in steps:
        state = board_mod.move_cursor(
            rec.board_state,
            (
                rec.committed_offset[0] - rec.board_state.offset[0],
                rec.committed_offset[1] - rec.board_state.offset[1],
            ),
        )
        pairs = board_mod.aligned_pairs(state)
        out.append(frozenset(p for p in pairs if p[1] in rec.visible))
    return out


def _consistent_sequences(
    pair_sets: Sequence[frozenset[tuple[str, str]]], m: int
) -> Iterator[tuple[Credentials, tuple[tuple[str, str], ...]]]:
    """Enumerate pair sequences consistent with the transcript and the
    modulo rule for a UI password of length m."""
    k = len(pair_sets)
    ordered = [sorted(s) for s in pair_sets]

    def rec(i: int, chosen: list[tuple[str, str]], ui: list[str | None]):
        if i == k:
            creds = Credentials(
                tuple(p[0] for p in chosen), tuple(ui[r] for r in range(m))
            )
            yield creds, tuple(chosen)
            return
        r = i % m
        for f, c in ordered[i]:
            if ui[r] is not None and ui[r] != c:
                continue
            prev = ui[r]
            ui[r] = c
            chosen.append((f, c))
            yield from rec(i + 1, chosen, ui)
            chosen.pop()
            ui[r] = prev

    yield from rec(0, [], [None] * m)


def hash_only_validate(
    steps: Sequence[StepRecord],
    stored: StoredCredential,
    spec: BoardSpec,
    *,
    candidate_ceiling: int = DEFAULT_CANDIDATE_CEILING,
    count_all: bool = False,
) -> tuple[bool, int]:
    """Brute-force the transcript: hash every consistent candidate and compare
    against the stored digest. Returns (verdict, hashes_computed).

    With ``count_all`` the enumeration runs to completion even after a match,
    so the hash count equals the full candidate count.
    """
    pair_sets = step_pair_sets(steps, spec)
    upper = prod(len(s) for s in pair_sets)
    if upper > candidate_ceiling:
        raise CandidateCeilingError(
            f"candidate count {upper} exceeds ceiling {candidate_ceiling}"
        )
    m = stored.ui_length
    hashes = 0
    found = False
    for creds, _ in _consistent_sequences(pair_sets, m):
        digest = iterated_hash(
            stored.salt, creds.id_password, creds.ui_password, stored.iterations
        )
        hashes += 1
        if digest == stored.digest:
            found = True
            if not count_all:
                return True, hashes
    return found, hashes
