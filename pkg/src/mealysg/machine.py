"""Mealy machines and canonical finite-state transformations.

A Mealy machine here is a complete, input-deterministic letter-to-letter
transducer: states are integers ``0..n-1``, letters are integers ``1..k``,
and every state maps each input letter to one output letter and one
successor state.  Each state of such a machine induces a length- and
prefix-preserving transformation of the set of words over ``1..k``.

:class:`Transformation` is the unit of semigroup arithmetic: a machine
together with a distinguished root state, stored in canonical form
(minimized, restricted to the reachable part, states renumbered by
breadth-first discovery from the root with letters taken in increasing
order).  Two transformations act identically on all words if and only if
their canonical serializations are byte-identical, which makes equality,
hashing and deduplication cheap.

Canonical serialization format (also used by :meth:`Transformation.serialize`):

    k=<alphabet_size>
    state <i>: out=[y1,...,yk] to=[q1,...,qk]

with one ``state`` line per canonical state in canonical order, ``yj`` the
output letter and ``qj`` the successor on input letter ``j``.
"""

from __future__ import annotations

from collections import deque

from .errors import AlphabetMismatch, InvalidStateIndex, LetterOutOfRange

__all__ = [
    "MealyMachine",
    "Transformation",
    "canonicalize",
    "identity",
    "apply",
    "section",
    "compose",
    "power",
    "equal",
    "is_identity",
]


class MealyMachine:
    """Complete deterministic letter-to-letter transducer.

    `delta[q][x-1]` is the successor state and `rho[q][x-1]` the output
    letter when state `q` reads input letter `x`.  `state_names` is
    optional presentation metadata; it never takes part in equality.
    """

    __slots__ = ("alphabet_size", "delta", "rho", "state_names")

    def __init__(self, alphabet_size, delta, rho, state_names=None):
        if alphabet_size < 1:
            raise ValueError("alphabet size must be at least 1")
        n = len(delta)
        if n == 0:
            raise ValueError("a Mealy machine needs at least one state")
        if len(rho) != n:
            raise ValueError("delta and rho must have one row per state")
        for q in range(n):
            if len(delta[q]) != alphabet_size or len(rho[q]) != alphabet_size:
                raise ValueError("state %d: rows must have length k=%d" % (q, alphabet_size))
            for x in range(alphabet_size):
                target = delta[q][x]
                if not 0 <= target < n:
                    raise InvalidStateIndex("state %d, letter %d: target %r" % (q, x + 1, target))
                out = rho[q][x]
                if not 1 <= out <= alphabet_size:
                    raise LetterOutOfRange("state %d, letter %d: output %r" % (q, x + 1, out))
        if state_names is not None and len(state_names) != n:
            raise ValueError("state_names must have one entry per state")
        self.alphabet_size = alphabet_size
        self.delta = [list(row) for row in delta]
        self.rho = [list(row) for row in rho]
        self.state_names = list(state_names) if state_names is not None else None

    @property
    def n_states(self):
        return len(self.delta)

    def __repr__(self):
        return "<MealyMachine k=%d states=%d>" % (self.alphabet_size, self.n_states)


def _serialize(k, delta, rho):
    lines = ["k=%d" % k]
    for q in range(len(delta)):
        out = ",".join(str(y) for y in rho[q])
        to = ",".join(str(p) for p in delta[q])
        lines.append("state %d: out=[%s] to=[%s]" % (q, out, to))
    return "\n".join(lines)


def _bfs_tables(k, delta, rho, names, root):
    """Restrict to the part reachable from `root` and renumber by BFS.

    Assumes the states are already pairwise distinct as transformations,
    so no refinement is needed.
    """
    number = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        q = queue.popleft()
        for x in range(k):
            target = delta[q][x]
            if target not in number:
                number[target] = len(order)
                order.append(target)
                queue.append(target)
    new_delta = [[number[delta[q][x]] for x in range(k)] for q in order]
    new_rho = [list(rho[q]) for q in order]
    new_names = [names[q] for q in order] if names is not None else None
    return new_delta, new_rho, new_names


def _canonical_tables(machine, root):
    """Moore partition refinement followed by BFS renumbering from `root`."""
    k = machine.alphabet_size
    n = machine.n_states
    delta, rho = machine.delta, machine.rho
    # Initial partition: states with identical output rows.
    sig_ids = {}
    block = [0] * n
    for q in range(n):
        block[q] = sig_ids.setdefault(tuple(rho[q]), len(sig_ids))
    nblocks = len(sig_ids)
    # Refine by successor blocks until stable.
    while True:
        sig_ids = {}
        new_block = [0] * n
        for q in range(n):
            sig = (block[q],) + tuple(block[delta[q][x]] for x in range(k))
            new_block[q] = sig_ids.setdefault(sig, len(sig_ids))
        if len(sig_ids) == nblocks:
            break
        block, nblocks = new_block, len(sig_ids)
    # Quotient tables, using the first member of each block as representative.
    rep = {}
    for q in range(n):
        rep.setdefault(block[q], q)
    qdelta = {}
    qrho = {}
    for b, q in rep.items():
        qdelta[b] = [block[delta[q][x]] for x in range(k)]
        qrho[b] = list(rho[q])
    qnames = None
    if machine.state_names is not None:
        members = {}
        for q in range(n):
            members.setdefault(block[q], []).append(machine.state_names[q])
        qnames = {b: min(ns) for b, ns in members.items()}
    # BFS renumber block graph from the root's block.
    block_ids = sorted(qdelta)
    remap = {b: i for i, b in enumerate(block_ids)}
    flat_delta = [[remap[t] for t in qdelta[b]] for b in block_ids]
    flat_rho = [qrho[b] for b in block_ids]
    flat_names = [qnames[b] for b in block_ids] if qnames is not None else None
    return _bfs_tables(k, flat_delta, flat_rho, flat_names, remap[block[root]])


class Transformation:
    """A finite-state transformation in canonical form.

    Construct via :func:`canonicalize`, :func:`identity`, or the wreath
    parser; the root state is always state 0.  Instances are immutable,
    hashable, and safe to share between threads.
    """

    __slots__ = ("machine", "serialization", "_hash")

    def __init__(self, machine, root=0, _minimal=False):
        if not 0 <= root < machine.n_states:
            raise InvalidStateIndex("root %r not a state of %r" % (root, machine))
        if _minimal and root == 0:
            tables = machine.delta, machine.rho, machine.state_names
        else:
            tables = _canonical_tables(machine, root)
        delta, rho, names = tables
        object.__setattr__(self, "machine", MealyMachine(machine.alphabet_size, delta, rho, names))
        object.__setattr__(
            self, "serialization", _serialize(machine.alphabet_size, delta, rho)
        )
        object.__setattr__(self, "_hash", hash(self.serialization))

    def __setattr__(self, name, value):
        raise AttributeError("Transformation objects are immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def alphabet_size(self):
        return self.machine.alphabet_size

    @property
    def n_states(self):
        return self.machine.n_states

    @property
    def root(self):
        return 0

    @property
    def state_names(self):
        return self.machine.state_names

    def serialize(self):
        """Canonical byte format; equal iff the transformations act alike."""
        return self.serialization

    def identity_state(self):
        """Index of the state acting as the identity, or None if absent."""
        k = self.alphabet_size
        ident_row = list(range(1, k + 1))
        for q in range(self.n_states):
            if self.machine.rho[q] == ident_row and all(
                self.machine.delta[q][x] == q for x in range(k)
            ):
                return q
        return None

    def is_identity(self):
        return self.n_states == 1 and self.identity_state() == 0

    def letter_map(self):
        """The induced map on single letters, as a tuple indexed by x-1."""
        return tuple(self.machine.rho[0])

    # -- the action on words -----------------------------------------------

    def _check_word(self, word):
        k = self.alphabet_size
        word = tuple(word)
        for x in word:
            if not 1 <= x <= k:
                raise LetterOutOfRange("letter %r outside 1..%d" % (x, k))
        return word

    def apply(self, word):
        """Image of `word` under the transformation."""
        word = self._check_word(word)
        delta, rho = self.machine.delta, self.machine.rho
        q = 0
        out = []
        for x in word:
            out.append(rho[q][x - 1])
            q = delta[q][x - 1]
        return tuple(out)

    def section(self, word):
        """The transformation acting on suffixes after `word` is read."""
        word = self._check_word(word)
        delta = self.machine.delta
        q = 0
        for x in word:
            q = delta[q][x - 1]
        if q == 0:
            return self
        new = _bfs_tables(
            self.alphabet_size, delta, self.machine.rho, self.machine.state_names, q
        )
        return Transformation(
            MealyMachine(self.alphabet_size, new[0], new[1], new[2]), 0, _minimal=True
        )

    # -- semigroup arithmetic ----------------------------------------------

    def compose(self, other):
        """Product applying `self` first, then `other`."""
        return compose(self, other)

    def power(self, n):
        return power(self, n)

    def __mul__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, n):
        return power(self, n)

    # -- identity protocol ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return (
            self.alphabet_size == other.alphabet_size
            and self.serialization == other.serialization
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<Transformation k=%d states=%d%s>" % (
            self.alphabet_size,
            self.n_states,
            " identity" if self.is_identity() else "",
        )


def canonicalize(machine, root=0):
    """Canonical transformation induced by `root` in `machine`.

    Runs Moore-style partition refinement (states grouped by output rows,
    refined by successor classes until stable), quotients, restricts to the
    part reachable from the root's class, and renumbers states by BFS from
    the root with letters in increasing order.  The result acts exactly as
    `(machine, root)` on every word; canonicalizing again is a no-op.
    """
    return Transformation(machine, root)


def identity(alphabet_size):
    """The identity transformation over letters 1..alphabet_size."""
    k = alphabet_size
    return Transformation(
        MealyMachine(k, [[0] * k], [list(range(1, k + 1))]), 0, _minimal=True
    )


def apply(t, word):
    """Image of `word` under `t`; length- and prefix-preserving."""
    return t.apply(word)


def section(t, word):
    """Section (restriction) of `t` at `word`, in canonical form."""
    return t.section(word)


def compose(s, t):
    """Canonical product: apply `s` first, then `t`.

    Built on reachable state pairs; on input x the pair (p, q) outputs
    t's answer to s's output and moves to the pair of successors, then the
    product machine is minimized.
    """
    if not isinstance(s, Transformation) or not isinstance(t, Transformation):
        raise TypeError("compose expects two Transformations")
    if s.alphabet_size != t.alphabet_size:
        raise AlphabetMismatch(
            "cannot compose k=%d with k=%d" % (s.alphabet_size, t.alphabet_size)
        )
    k = s.alphabet_size
    ds, rs = s.machine.delta, s.machine.rho
    dt, rt = t.machine.delta, t.machine.rho
    index = {(0, 0): 0}
    pairs = [(0, 0)]
    delta = []
    rho = []
    i = 0
    while i < len(pairs):
        a, b = pairs[i]
        drow = []
        rrow = []
        for x in range(k):
            y = rs[a][x]
            rrow.append(rt[b][y - 1])
            target = (ds[a][x], dt[b][y - 1])
            j = index.get(target)
            if j is None:
                j = len(pairs)
                index[target] = j
                pairs.append(target)
            drow.append(j)
        delta.append(drow)
        rho.append(rrow)
        i += 1
    return Transformation(MealyMachine(k, delta, rho), 0)


def power(t, n):
    """n-th power of `t` (n >= 1), minimized after every multiplication."""
    if n < 1:
        raise ValueError("power expects n >= 1")
    result = t
    for _ in range(n - 1):
        result = compose(result, t)
    return result


def equal(s, t):
    """Structural equality of canonical forms; the word problem."""
    if s.alphabet_size != t.alphabet_size:
        raise AlphabetMismatch(
            "cannot compare k=%d with k=%d" % (s.alphabet_size, t.alphabet_size)
        )
    return s.serialization == t.serialization


def is_identity(t):
    """True iff `t` fixes every word."""
    return t.is_identity()
