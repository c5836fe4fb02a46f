"""Canonical encoding, enumeration, and bounded simulation of 2-symbol Turing machines.

A machine has ``n`` working states (state 1 is the start state) over the tape
alphabet {0, 1}, with a two-way unbounded tape that starts all blank
(blank = 0).  Each of the ``2n`` table entries (state, read symbol) holds one
of ``4n + 2`` actions: write a bit, move left or right, and switch to one of
the ``n`` states (``4n`` combinations), or write a bit and halt without
moving (2 more).  The whole space of ``(4n + 2)**(2n)`` machines is therefore
addressable by a mixed-radix integer, which is how sweeps enumerate it
without ever materializing the tables.
"""

from __future__ import annotations

from dataclasses import dataclass

MOVE_LEFT = "L"
MOVE_RIGHT = "R"

_COMPLEMENT_TABLE = str.maketrans("01", "10")


def complement_string(s: str) -> str:
    """Bitwise complement of a binary string ("0110" -> "1001")."""
    return s.translate(_COMPLEMENT_TABLE)


@dataclass(frozen=True)
class Action:
    """One table entry: write ``write``, then move and switch state, or halt.

    Halting actions write but do not move, so ``move`` is None exactly when
    ``next_state`` is None.
    """

    write: int
    move: str | None
    next_state: int | None

    def __post_init__(self) -> None:
        if self.write not in (0, 1):
            raise ValueError(f"write symbol must be 0 or 1, got {self.write!r}")
        if (self.move is None) != (self.next_state is None):
            raise ValueError("halting actions have no move; moving actions need a next state")
        if self.move is not None and self.move not in (MOVE_LEFT, MOVE_RIGHT):
            raise ValueError(f"move must be {MOVE_LEFT!r} or {MOVE_RIGHT!r}, got {self.move!r}")
        if self.next_state is not None and self.next_state < 1:
            raise ValueError(f"states are numbered from 1, got {self.next_state}")

    @property
    def halts(self) -> bool:
        return self.next_state is None


@dataclass(frozen=True)
class TransitionTable:
    """A complete n-state program.

    ``actions`` is a total mapping over the 2n (state, read symbol) pairs;
    the entry for state ``q`` reading ``s`` lives at index ``2*(q-1) + s``.
    """

    n: int
    actions: tuple[Action, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"state count must be >= 1, got {self.n}")
        if len(self.actions) != 2 * self.n:
            raise ValueError(f"{self.n}-state table needs {2 * self.n} entries, got {len(self.actions)}")
        for act in self.actions:
            if act.next_state is not None and act.next_state > self.n:
                raise ValueError(f"next state {act.next_state} out of range for {self.n} states")

    def action(self, state: int, symbol: int) -> Action:
        return self.actions[2 * (state - 1) + symbol]


@dataclass(frozen=True)
class RunOutcome:
    """Result of one bounded run.

    Either the machine halted, with ``output`` holding the tape between the
    leftmost and rightmost head positions of the run and ``steps`` counting
    executed steps (the halting write included), or it was still running
    after ``bound`` steps and ``output``/``steps`` are None.
    """

    halted: bool
    output: str | None
    steps: int | None
    bound: int


def machine_count(n: int) -> int:
    """Size of the n-state machine space: (4n + 2) ** (2n).

    Each table entry picks a written bit, and then either one of the 2n
    (move, next state) pairs or the bare halt, hence 2 * (2n + 1) options.
    """
    if n < 1:
        raise ValueError(f"state count must be >= 1, got {n}")
    return (4 * n + 2) ** (2 * n)


def _action_from_digit(digit: int, n: int) -> Action:
    if digit < 2:
        return Action(write=digit, move=None, next_state=None)
    e = digit - 2
    move = MOVE_LEFT if (e >> 1) & 1 == 0 else MOVE_RIGHT
    return Action(write=e & 1, move=move, next_state=1 + (e >> 2))


def _digit_from_action(action: Action) -> int:
    if action.halts:
        return action.write
    e = action.write
    if action.move == MOVE_RIGHT:
        e |= 2
    e |= (action.next_state - 1) << 2
    return e + 2


def decode_machine(n: int, index: int) -> TransitionTable:
    """Decode a machine index into its transition table.

    The index is read as 2n mixed-radix digits in base 4n + 2, one per table
    entry in the order (state 1, read 0), (state 1, read 1), (state 2,
    read 0), ...; the entry for (state 1, read 0) is the least significant
    digit.  Digit values 0 and 1 are the two halting writes; digit d >= 2
    encodes e = d - 2 as write ``e & 1``, move left if ``(e >> 1) & 1 == 0``
    else right, and next state ``1 + (e >> 2)``.  This is a bijection with
    ``range(machine_count(n))``.
    """
    total = machine_count(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} out of range for {n}-state space of {total}")
    base = 4 * n + 2
    digits = []
    x = index
    for _ in range(2 * n):
        digits.append(x % base)
        x //= base
    return TransitionTable(n=n, actions=tuple(_action_from_digit(d, n) for d in digits))


def encode_machine(table: TransitionTable) -> int:
    """Exact inverse of :func:`decode_machine`."""
    base = 4 * table.n + 2
    index = 0
    for entry in reversed(table.actions):
        index = index * base + _digit_from_action(entry)
    return index


def simulate(table: TransitionTable, bound: int) -> RunOutcome:
    """Run a machine from a blank tape for at most ``bound`` steps.

    The head starts at position 0 in state 1.  Each step reads the current
    cell, writes the entry's symbol, and then either moves and switches
    state or (halting entry) stops; the halting step counts as one step.  On
    halting, the output is the tape between the minimum and maximum head
    positions of the run, inclusive, read left to right; it is always
    nonempty because the start cell is visited.  A machine still running
    after ``bound`` steps yields a bound-exceeded outcome.
    """
    if bound < 1:
        raise ValueError(f"step bound must be >= 1, got {bound}")
    tape: dict[int, int] = {}
    head = 0
    state = 1
    low = high = 0
    for step in range(1, bound + 1):
        entry = table.action(state, tape.get(head, 0))
        tape[head] = entry.write
        if entry.halts:
            output = "".join(str(tape.get(pos, 0)) for pos in range(low, high + 1))
            return RunOutcome(halted=True, output=output, steps=step, bound=bound)
        head += -1 if entry.move == MOVE_LEFT else 1
        if head < low:
            low = head
        elif head > high:
            high = head
        state = entry.next_state
    return RunOutcome(halted=False, output=None, steps=None, bound=bound)


def complement_machine(table: TransitionTable) -> TransitionTable:
    """Swap the roles of the two symbols: flip every written bit and exchange
    each state's read-0/read-1 entries.

    This is the table-level half of the polarity symmetry: a machine started
    on an all-ones tape behaves exactly like its complement started on the
    all-zeros tape with every cell inverted.  Because the blank is 0, the
    complement of a machine does *not* in general produce the complement of
    its blank-tape output; distribution builders instead record each output
    under both polarities (see :mod:`ctm.sweep`).
    """
    swapped = []
    for q in range(table.n):
        for symbol in (0, 1):
            src = table.actions[2 * q + (1 - symbol)]
            swapped.append(Action(write=1 - src.write, move=src.move, next_state=src.next_state))
    return TransitionTable(n=table.n, actions=tuple(swapped))


def mirror_machine(table: TransitionTable) -> TransitionTable:
    """Swap every left move for a right move and vice versa.

    Mirroring reflects the whole run through the start cell: the mirrored
    machine halts in the same number of steps with the reversed output.
    """
    flipped = tuple(
        act if act.halts else Action(
            write=act.write,
            move=MOVE_RIGHT if act.move == MOVE_LEFT else MOVE_LEFT,
            next_state=act.next_state,
        )
        for act in table.actions
    )
    return TransitionTable(n=table.n, actions=flipped)
