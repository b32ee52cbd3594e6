"""Two-password PIN entry on a toroidal two-layer board.

A fixed symbol board is overlaid by a moveable cursor board translated on a
2D torus; the user proves knowledge of an ID password by aligning each of
its symbols with the matching symbol of an associated UI password. The
package provides the board model, the login session engine, profile-based
UI-password generation, an observer/mouse-logger attack simulator, and an
HTTP authentication service.
"""

from .board import (
    BoardSpec,
    BoardState,
    alignment_map,
    color_2x5,
    default_3x3,
    move_cursor,
    shuffle,
    torus_wrap,
    visible_subset,
)
from .session import (
    Credentials,
    LoginSession,
    StoredCredential,
    expected_pair_sequence,
    iterated_hash,
    split_legacy_pin,
)

__version__ = "0.1.0"

__all__ = [
    "BoardSpec",
    "BoardState",
    "Credentials",
    "LoginSession",
    "StoredCredential",
    "alignment_map",
    "color_2x5",
    "default_3x3",
    "expected_pair_sequence",
    "iterated_hash",
    "move_cursor",
    "shuffle",
    "split_legacy_pin",
    "torus_wrap",
    "visible_subset",
]
