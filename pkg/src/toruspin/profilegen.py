"""UI-password generation from a user profile: k questions with n choices
each, a seeded permutation of question order, and per-step skin cycling."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Question:
    label: str
    skin: str
    choices: tuple[str, ...]


@dataclass(frozen=True)
class ProfileQuestionBank:
    """k questions, each with exactly n choices mapped to cursor symbol
    indices 1..n by position."""

    n: int
    questions: tuple[Question, ...]

    def __post_init__(self) -> None:
        if not self.questions:
            raise ValueError("bank needs at least one question")
        for q in self.questions:
            if len(q.choices) != self.n:
                raise ValueError(
                    f"question {q.label!r} has {len(q.choices)} choices, expected {self.n}"
                )
        skins = [q.skin for q in self.questions]
        if len(set(skins)) != len(skins):
            raise ValueError("skin identifiers must be distinct per question")

    @property
    def k(self) -> int:
        return len(self.questions)

    def to_json(self) -> str:
        return json.dumps(
            {
                "version": 1,
                "n": self.n,
                "questions": [
                    {"label": q.label, "skin": q.skin, "choices": list(q.choices)}
                    for q in self.questions
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ProfileQuestionBank":
        data = json.loads(text)
        if data.get("version") != 1:
            raise ValueError(f"unsupported question bank version: {data.get('version')!r}")
        return cls(
            n=data["n"],
            questions=tuple(
                Question(q["label"], q["skin"], tuple(q["choices"]))
                for q in data["questions"]
            ),
        )


def load_bank(path: str) -> ProfileQuestionBank:
    with open(path, "r", encoding="utf-8") as fh:
        return ProfileQuestionBank.from_json(fh.read())


def _check_answers(bank: ProfileQuestionBank, answers: Sequence[int]) -> None:
    if len(answers) != bank.k:
        raise ValueError(f"expected {bank.k} answers, got {len(answers)}")
    for a in answers:
        if not 1 <= a <= bank.n:
            raise ValueError(f"answer {a} out of range [1, {bank.n}]")


def generate_ui_password(
    bank: ProfileQuestionBank,
    answers: Sequence[int],
    cursor_symbols: Sequence[str],
    seed: random.Random | int | None = None,
) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Draw a uniform question order and derive the UI password from the
    permuted answers. Answers and the returned order are 1-based.

    Returns (ui_password, question_order).
    """
    _check_answers(bank, answers)
    if len(cursor_symbols) != bank.n:
        raise ValueError("cursor symbol list must have n entries")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(range(1, bank.k + 1))
    rng.shuffle(order)
    ui = tuple(cursor_symbols[answers[q - 1] - 1] for q in order)
    return ui, tuple(order)


def skin_for_step(
    bank: ProfileQuestionBank, question_order: Sequence[int], step_index: int
) -> str:
    """Skin shown at one entry step: the skin of the question asked there."""
    if not 0 <= step_index < len(question_order):
        raise IndexError(f"step index {step_index} out of range")
    return bank.questions[question_order[step_index] - 1].skin


def default_bank_3x3() -> ProfileQuestionBank:
    """A small demonstration bank for the 3x3 board."""
    return ProfileQuestionBank(
        n=9,
        questions=(
            Question(
                "Favorite food?",
                "food",
                ("pizza", "sushi", "curry", "tacos", "pasta", "ramen", "salad", "steak", "soup"),
            ),
            Question(
                "Favorite place?",
                "place",
                ("beach", "forest", "city", "desert", "lake", "island", "cabin", "park", "cafe"),
            ),
            Question(
                "Favorite color?",
                "color",
                ("red", "orange", "yellow", "green", "blue", "purple", "black", "white", "gray"),
            ),
        ),
    )
