"""Collision schedules for N solitons in front of a reflecting boundary.

A schedule is a sequence of moves on N slots arranged by position (position 0
is next to the boundary):

* ``("B",)``     reflect the slot at position 0;
* ``("S", a)``   let the slots at positions a and a+1 pass through each other.

Encoding the arrangement as a signed permutation (a negative entry is a
reflected slot), a full reflection schedule is a reduced word for the longest
element [-1, ..., -N] of the hyperoctahedral group, so it has exactly N^2 moves.
Pure reorderings without reflections (free-space scattering) are reduced words
for the reversal permutation.
"""

import numpy as np


def signed_length(w):
    """Coxeter length of a signed permutation given as a sequence of nonzero ints."""
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    neg = sum(1 for x in w if x < 0)
    return inv + nsp + neg


def apply_move(w, move):
    w = list(w)
    if move[0] == "B":
        w[0] = -w[0]
    else:
        a = move[1]
        w[a], w[a + 1] = w[a + 1], w[a]
    return w


def sweep(N):
    """Default schedule: for j = N..1, slot j walks to the wall past the unreflected
    slots 1..j-1, reflects, and walks back to position j."""
    moves = []
    for j in range(N - 1, -1, -1):
        moves += [("S", a) for a in range(j - 1, -1, -1)]
        moves.append(("B",))
        moves += [("S", a) for a in range(j)]
    return moves


def bubble(N):
    """Alternate schedule: reflect slot 1, then each next slot walks to the wall
    past all reflected ones and reflects; finally the reflected slots are
    re-sorted into slot order."""
    moves = [("B",)]
    for j in range(1, N):
        moves += [("S", a) for a in range(j - 1, -1, -1)]
        moves.append(("B",))
    moves += reversal(N)
    return moves


def reversal(N, key=None):
    """Reduced word reversing N slots. ``key(slot_i, slot_j)`` ranks candidate
    swaps (highest first); by default the leftmost available swap is used."""
    order = list(range(N))
    moves = []
    while True:
        cands = [a for a in range(N - 1) if order[a] < order[a + 1]]
        if not cands:
            return moves
        if key is not None:
            a = max(cands, key=lambda a: (key(order[a], order[a + 1]), -a))
        else:
            a = cands[0]
        order[a], order[a + 1] = order[a + 1], order[a]
        moves.append(("S", a))


def random_reflection(N, rng):
    """Uniformly chosen length-increasing walk from the identity to [-1..-N]."""
    w = list(range(1, N + 1))
    moves = []
    length = 0
    while length < N * N:
        cands = [("B",)] + [("S", a) for a in range(N - 1)]
        up = [m for m in cands if signed_length(apply_move(w, m)) == length + 1]
        m = up[int(rng.integers(len(up)))]
        w = apply_move(w, m)
        moves.append(m)
        length += 1
    return moves


def is_reflection_schedule(N, moves):
    w = list(range(1, N + 1))
    for m in moves:
        w = apply_move(w, m)
    return w == [-(i + 1) for i in range(N)] and len(moves) == N * N


def run(moves, values, swap, reflect):
    """Execute a schedule on per-slot values.

    ``swap(left, right)`` receives the values of the left and right slot of a
    passing pair and returns their new values ``(left', right')``; afterwards the
    two slots exchange positions. ``reflect(value)`` updates the slot at the wall.
    Returns the final per-slot values (indexed by slot, not position).
    """
    values = list(values)
    order = list(range(len(values)))
    for m in moves:
        if m[0] == "B":
            s = order[0]
            values[s] = reflect(values[s])
        else:
            a = m[1]
            l, r = order[a], order[a + 1]
            values[l], values[r] = swap(values[l], values[r])
            order[a], order[a + 1] = r, l
    return values


def trace(moves, N):
    """Human-readable event list: ('B', slot) and ('S', left_slot, right_slot)."""
    order = list(range(N))
    events = []
    for m in moves:
        if m[0] == "B":
            events.append(("B", order[0]))
        else:
            a = m[1]
            events.append(("S", order[a], order[a + 1]))
            order[a], order[a + 1] = order[a + 1], order[a]
    return events


def by_velocity(alphas):
    """Swap-ranking key for ``reversal``: the pair containing the fastest soliton
    (largest |Re alpha|) collides first."""
    speeds = np.abs(np.real(np.asarray(alphas, dtype=complex)))
    return lambda i, j: max(speeds[i], speeds[j])
