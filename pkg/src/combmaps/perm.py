r"""
Permutations on a finite set of corners ``1..n``.

Conventions used throughout the package:

* the action is written on the right, ``c^P``, and ``P(c)`` evaluates it;
* products are read left to right: ``c^(P*Q) = (c^P)^Q``;
* ``P ^ Q`` is the conjugate ``Q^{-1} * P * Q``; a cycle ``(c1 c2 ...)`` of
  ``P`` becomes the cycle ``(c1^Q c2^Q ...)`` of ``P ^ Q``.

Worked example::

    >>> from combmaps.perm import parse_cycles, compose, format_cycles
    >>> P = parse_cycles("(1 3)", 4)
    >>> Q = parse_cycles("(1 2)(3 4)", 4)
    >>> format_cycles(compose(P, Q))
    '(1 4 3 2)'

Corners are 1-based at every interface; the images are stored 0-based.
"""

import re
from itertools import permutations

__all__ = [
    "Permutation",
    "identity",
    "transposition",
    "from_cycles",
    "compose",
    "inverse",
    "conjugate",
    "cycles",
    "cycle_type",
    "format_cycles",
    "parse_cycles",
    "is_involution",
    "is_matching",
    "cycle_to_transpositions",
    "all_permutations",
]


class Permutation:
    """
    Immutable bijection of ``{1, ..., n}``.

    ``images`` lists ``1^P, 2^P, ..., n^P``.

    >>> P = Permutation([2, 3, 1])
    >>> P(1), P(3)
    (2, 1)
    >>> P * P == ~P
    True
    """

    __slots__ = ("_img",)

    def __init__(self, images, check=True):
        img = tuple(int(x) - 1 for x in images)
        if check:
            n = len(img)
            seen = [False] * n
            for i, j in enumerate(img):
                if not 0 <= j < n:
                    raise ValueError(f"image {j + 1} of corner {i + 1} out of range 1..{n}")
                if seen[j]:
                    raise ValueError(f"corner {j + 1} appears twice as an image")
                seen[j] = True
        self._img = img

    @classmethod
    def _from_zero(cls, img):
        # trusted constructor, img is a 0-based tuple
        P = cls.__new__(cls)
        P._img = img
        return P

    @property
    def degree(self):
        """Number of corners ``n``."""
        return len(self._img)

    def __len__(self):
        return len(self._img)

    @property
    def images(self):
        """The 1-based image sequence."""
        return tuple(j + 1 for j in self._img)

    def __call__(self, c):
        return self._img[c - 1] + 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other):
        return (len(self._img), self._img) < (len(other._img), other._img)

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __xor__(self, other):
        return conjugate(self, other)

    def __repr__(self):
        return f"Permutation.from_cycles({format_cycles(self)!r}, {len(self)})"

    def __str__(self):
        return format_cycles(self)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self._img))


def _check_same(P, Q):
    if len(P._img) != len(Q._img):
        raise ValueError(f"permutations of different orders {len(P)} and {len(Q)}")


def identity(n):
    """The identity on ``n`` corners."""
    return Permutation._from_zero(tuple(range(n)))


def transposition(a, b, n):
    """The transposition ``(a b)`` on ``n`` corners."""
    if a == b:
        raise ValueError(f"degenerate transposition ({a} {b})")
    return from_cycles([(a, b)], n)


def from_cycles(cyc, n):
    """
    Build a permutation of order ``n`` from disjoint cycles.
    Corners not listed are fixed.

    >>> from_cycles([(1, 2), (3, 4)], 4).images
    (2, 1, 4, 3)
    """
    img = list(range(n))
    seen = set()
    for c in cyc:
        for x in c:
            if not 1 <= x <= n:
                raise ValueError(f"corner {x} out of range 1..{n}")
            if x in seen:
                raise ValueError(f"repeated corner {x}")
            seen.add(x)
        k = len(c)
        for i in range(k):
            img[c[i] - 1] = c[(i + 1) % k] - 1
    return Permutation._from_zero(tuple(img))


def compose(P, Q):
    """
    Left-to-right product ``P*Q``: first ``P``, then ``Q``.

    >>> format_cycles(compose(from_cycles([(1, 3)], 4), from_cycles([(1, 2), (3, 4)], 4)))
    '(1 4 3 2)'
    """
    _check_same(P, Q)
    q = Q._img
    return Permutation._from_zero(tuple(q[j] for j in P._img))


def inverse(P):
    inv = [0] * len(P._img)
    for i, j in enumerate(P._img):
        inv[j] = i
    return Permutation._from_zero(tuple(inv))


def conjugate(P, Q):
    """
    Return ``P^Q = Q^{-1} * P * Q``.

    This relabels each cycle of ``P`` through ``Q``.

    >>> P = parse_cycles("(1 2)(3 4)", 4)
    >>> format_cycles(conjugate(P, parse_cycles("(1 2 3 4)", 4)))
    '(1 4)(2 3)'
    """
    _check_same(P, Q)
    p, q = P._img, Q._img
    img = [0] * len(p)
    for i, j in enumerate(p):
        img[q[i]] = q[j]
    return Permutation._from_zero(tuple(img))


def _cycles0(img):
    n = len(img)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = img[i]
        out.append(cyc)
    return out


def cycles(P):
    """
    Disjoint cycle decomposition, fixed points included.

    Each cycle starts at its smallest corner; cycles are sorted by it.

    >>> cycles(identity(3))
    ((1,), (2,), (3,))
    >>> cycles(parse_cycles("(4 3 2 1)", 4))
    ((1, 4, 3, 2),)
    """
    return tuple(tuple(i + 1 for i in c) for c in _cycles0(P._img))


def cycle_type(P):
    """Sorted tuple of cycle lengths (descending)."""
    return tuple(sorted((len(c) for c in _cycles0(P._img)), reverse=True))


def format_cycles(P):
    """Canonical cycle string; fixed points omitted, identity is ``()``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(P) if len(c) > 1]
    return "".join(parts) if parts else "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEP_RE = re.compile(r"\s*,\s*|\s+")


def parse_cycles(text, n):
    """
    Parse cycle notation such as ``"(1 2)(3,4)"`` into a permutation of
    order ``n``. The empty string and ``"()"`` give the identity.

    >>> parse_cycles("(1 2)(2 3)", 4)
    Traceback (most recent call last):
    ...
    ValueError: repeated corner 2
    """
    if n < 0:
        raise ValueError(f"negative order {n}")
    text = text.strip()
    pos = 0
    cyc = []
    for mo in _CYCLE_RE.finditer(text):
        if text[pos:mo.start()].strip():
            raise ValueError(f"malformed cycle notation near {text[pos:mo.start()]!r}")
        pos = mo.end()
        body = mo.group(1).strip()
        if not body:
            continue
        try:
            cyc.append(tuple(int(tok) for tok in _SEP_RE.split(body)))
        except ValueError:
            raise ValueError(f"malformed cycle {mo.group(0)!r}") from None
    if text[pos:].strip():
        raise ValueError(f"malformed cycle notation near {text[pos:]!r}")
    return from_cycles(cyc, n)


def is_involution(P):
    p = P._img
    return all(p[j] == i for i, j in enumerate(p))


def is_matching(P):
    """True iff every cycle of ``P`` is a transposition."""
    p = P._img
    return all(j != i and p[j] == i for i, j in enumerate(p))


def cycle_to_transpositions(cycle):
    """
    Factor a cycle ``(c1 c2 ... ck)`` as ``(ck ck-1) ... (c2 c1)``.

    The factors are listed left to right; their left-to-right product is
    the cycle again.

    >>> cycle_to_transpositions((1, 2, 3))
    [(3, 2), (2, 1)]
    """
    c = list(cycle)
    return [(c[i], c[i - 1]) for i in range(len(c) - 1, 0, -1)]


def all_permutations(n):
    """Iterate over the whole symmetric group on ``n`` corners."""
    for img in permutations(range(n)):
        yield Permutation._from_zero(img)
