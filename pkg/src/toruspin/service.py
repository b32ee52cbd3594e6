"""HTTP authentication service: user registration, session lifecycle, and
the remote cursor-control channel (absolute or relative move orders).

Session state lives in memory keyed by single-use expiring tokens; users
persist in a JSON-lines file next to a Fernet key file used for
plaintext-recoverable credential storage.
"""

from __future__ import annotations

import json
import random
import threading
import time
from pathlib import Path
from typing import Optional

from cryptography.fernet import Fernet
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import board as board_mod
from . import profilegen
from .board import BoardSpec, color_2x5, default_3x3
from .session import (
    HASH_ONLY,
    PLAINTEXT,
    Credentials,
    LoginSession,
    SessionError,
    StoredCredential,
)

DEFAULT_LOCKOUT_THRESHOLD = 5
DEFAULT_SESSION_TTL = 120.0

BOARD_PRESETS = {"3x3": default_3x3, "2x5": color_2x5}


class UserStore:
    """Append-capable single-file user store. Concurrent reads, exclusive
    writes, guarded by one process-wide lock."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._lock = threading.Lock()
        self._users: dict[str, dict] = {}
        key_path = self.path.with_suffix(self.path.suffix + ".key")
        if key_path.exists():
            self.fernet_key = key_path.read_bytes().strip()
        else:
            self.fernet_key = Fernet.generate_key()
            key_path.parent.mkdir(parents=True, exist_ok=True)
            key_path.write_bytes(self.fernet_key)
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rec = json.loads(line)
                        self._users[rec["user_id"]] = rec

    def get(self, user_id: str) -> Optional[dict]:
        return self._users.get(user_id)

    def add(self, record: dict) -> None:
        with self._lock:
            if record["user_id"] in self._users:
                raise KeyError(record["user_id"])
            self._users[record["user_id"]] = record
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")

    def update(self, record: dict) -> None:
        with self._lock:
            self._users[record["user_id"]] = record
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            with tmp.open("w", encoding="utf-8") as fh:
                for rec in self._users.values():
                    fh.write(json.dumps(rec) + "\n")
            tmp.replace(self.path)


class CredentialsBody(BaseModel):
    id_password: list[str]
    ui_password: list[str]


class ProfileBody(BaseModel):
    bank: dict
    answers: list[int]


class CreateUserBody(BaseModel):
    user_id: str = Field(min_length=1)
    mode: str = PLAINTEXT
    board: str = "3x3"
    credentials: Optional[CredentialsBody] = None
    profile: Optional[ProfileBody] = None

    @model_validator(mode="after")
    def _exactly_one_secret(self):
        if (self.credentials is None) == (self.profile is None):
            raise ValueError("provide exactly one of credentials or profile")
        return self


class OpenSessionBody(BaseModel):
    user_id: str


class MoveOrderBody(BaseModel):
    kind: str
    delta: Optional[list[int]] = None
    position: Optional[list[float]] = None

    @model_validator(mode="after")
    def _payload_matches_kind(self):
        if self.kind not in ("relative", "absolute"):
            raise ValueError("kind must be 'relative' or 'absolute'")
        if (self.delta is None) == (self.position is None):
            raise ValueError("exactly one payload required")
        if self.kind == "relative" and (self.delta is None or len(self.delta) != 2):
            raise ValueError("relative order needs delta [drow, dcol]")
        if self.kind == "absolute" and (
            self.position is None
            or len(self.position) != 2
            or not all(0.0 <= v <= 1.0 for v in self.position)
        ):
            raise ValueError("absolute order needs position [x, y] in [0,1]^2")
        return self


class _LiveSession:
    def __init__(self, session: LoginSession, user_id: str, skins: list[str]):
        self.session = session
        self.user_id = user_id
        self.skins = skins
        self.last_access = time.monotonic()
        self.lock = threading.Lock()


def absolute_to_cell(position: list[float], rows: int, cols: int) -> tuple[int, int]:
    """Map normalized [0,1]^2 coordinates to a board cell: floor(coord * dim)
    clamped to the last cell. position is [x, y] = [col frac, row frac]."""
    col = min(int(position[0] * cols), cols - 1)
    row = min(int(position[1] * rows), rows - 1)
    return (row, col)


def create_app(
    store: UserStore,
    *,
    lockout_threshold: int = DEFAULT_LOCKOUT_THRESHOLD,
    session_ttl: float = DEFAULT_SESSION_TTL,
    seed: int | None = None,
    display_l: int | None = None,
) -> FastAPI:
    """Build the service. ``seed`` makes every session's board stream
    deterministic and is for test mode only."""
    app = FastAPI(title="toruspin auth service")
    # mutable so test harnesses can vary the deterministic stream per run
    app.state.session_seed = seed
    sessions: dict[str, _LiveSession] = {}
    sessions_lock = threading.Lock()

    def board_view(live: _LiveSession) -> dict:
        s = live.session
        spec = s.spec
        visible = s.visible
        cursor = [
            idx if spec.cursor_symbols[idx] in visible else None
            for idx in s.board.cursor_perm
        ]
        step = s.step_index
        skin = live.skins[step] if step < len(live.skins) else spec.skin
        return {
            "rows": spec.rows,
            "cols": spec.cols,
            "fixed": list(s.board.fixed_perm),
            "cursor": cursor,
            "fixed_symbols": list(spec.fixed_symbols),
            "cursor_symbols": list(spec.cursor_symbols),
            "offset": list(s.board.offset),
            "skin": skin,
            "entered": step,
            "l": s.display_l,
        }

    def get_live(token: str) -> _LiveSession:
        now = time.monotonic()
        with sessions_lock:
            expired = [
                t for t, lv in sessions.items() if now - lv.last_access > session_ttl
            ]
            for t in expired:
                del sessions[t]
            live = sessions.get(token)
        if live is None:
            raise HTTPException(status_code=404, detail="unknown or expired session")
        live.last_access = now
        return live

    @app.post("/users", status_code=201)
    def create_user(body: CreateUserBody):
        if body.mode not in (PLAINTEXT, HASH_ONLY):
            raise HTTPException(status_code=422, detail="unknown mode")
        if body.board not in BOARD_PRESETS:
            raise HTTPException(status_code=422, detail="unknown board preset")
        spec = BOARD_PRESETS[body.board]()
        profile_json = None
        try:
            if body.credentials is not None:
                creds = Credentials(
                    tuple(body.credentials.id_password),
                    tuple(body.credentials.ui_password),
                )
                creds.check_against(spec)
            else:
                assert body.profile is not None
                if body.mode != PLAINTEXT:
                    raise ValueError(
                        "profile-based users need plaintext-recoverable mode"
                    )
                bank = profilegen.ProfileQuestionBank.from_json(
                    json.dumps(body.profile.bank)
                )
                profilegen._check_answers(bank, body.profile.answers)
                # canonical (identity-order) UI password backs the stored digest
                ui = tuple(
                    spec.cursor_symbols[a - 1] for a in body.profile.answers
                )
                id_pw = tuple(spec.fixed_symbols[a - 1] for a in body.profile.answers)
                creds = Credentials(id_pw, ui)
                profile_json = {
                    "bank": json.loads(bank.to_json()),
                    "answers": list(body.profile.answers),
                }
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        stored = StoredCredential.create(
            body.user_id, creds, body.mode, fernet_key=store.fernet_key
        )
        record = {
            "user_id": body.user_id,
            "board": body.board,
            "k": creds.k,
            "credential": json.loads(stored.to_json()),
            "profile": profile_json,
            "created_at": time.time(),
            "failed_attempts": 0,
        }
        try:
            store.add(record)
        except KeyError:
            raise HTTPException(status_code=409, detail="user already exists")
        return {"user_id": body.user_id, "board": body.board, "mode": body.mode}

    @app.post("/sessions")
    def open_login(body: OpenSessionBody):
        record = store.get(body.user_id)
        if record is None:
            raise HTTPException(status_code=403, detail="login denied")
        if record["failed_attempts"] >= lockout_threshold:
            raise HTTPException(status_code=423, detail="account locked")
        stored = StoredCredential.from_json(json.dumps(record["credential"]))
        spec = BOARD_PRESETS[record["board"]]()
        creds = None
        skins: list[str] = []
        session_seed: int | None = app.state.session_seed
        rng = random.Random(session_seed)
        if stored.mode == PLAINTEXT:
            creds = stored.recover(store.fernet_key)
        if record.get("profile"):
            bank = profilegen.ProfileQuestionBank.from_json(
                json.dumps(record["profile"]["bank"])
            )
            # question order redrawn per login
            ui, order = profilegen.generate_ui_password(
                bank, record["profile"]["answers"], spec.cursor_symbols, rng
            )
            assert creds is not None
            creds = Credentials(creds.id_password, ui)
            skins = [
                profilegen.skin_for_step(bank, order, i) for i in range(bank.k)
            ]
        k = record["k"]
        session = LoginSession(
            spec,
            k,
            credentials=creds,
            display_l=display_l if creds is not None else None,
            seed=session_seed,
        )
        live = _LiveSession(session, body.user_id, skins)
        with sessions_lock:
            sessions[session.session_id] = live
        return {"token": session.session_id, "k": k, "board_view": board_view(live)}

    @app.post("/sessions/{token}/move")
    def apply_move(token: str, order: MoveOrderBody):
        live = get_live(token)
        with live.lock:
            try:
                if order.kind == "relative":
                    assert order.delta is not None
                    live.session.move(tuple(order.delta))
                else:
                    assert order.position is not None
                    spec = live.session.spec
                    cell = absolute_to_cell(order.position, spec.rows, spec.cols)
                    live.session.move_to_cell(cell)
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return {"board_view": board_view(live)}

    @app.post("/sessions/{token}/commit")
    def commit(token: str):
        live = get_live(token)
        with live.lock:
            try:
                ack = live.session.commit_step()
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return {"entered": ack["entered"], "board_view": board_view(live)}

    @app.post("/sessions/{token}/reset")
    def reset(token: str):
        live = get_live(token)
        with live.lock:
            try:
                ack = live.session.reset_last()
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return {"entered": ack["entered"], "board_view": board_view(live)}

    @app.post("/sessions/{token}/finalize")
    def finalize(token: str):
        live = get_live(token)
        with live.lock:
            record = store.get(live.user_id)
            assert record is not None
            stored = StoredCredential.from_json(json.dumps(record["credential"]))
            try:
                ok = live.session.validate(stored)
            except SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
        with sessions_lock:
            sessions.pop(token, None)  # tokens are single-use
        if not ok:
            record["failed_attempts"] += 1
            store.update(record)
        elif record["failed_attempts"]:
            record["failed_attempts"] = 0
            store.update(record)
        return {"result": "success" if ok else "failure"}

    return app
