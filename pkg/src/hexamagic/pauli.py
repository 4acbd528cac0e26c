"""Exact arithmetic for the 63 three-qubit Pauli observables.

An observable is a nonzero 6-bit integer: bits 0..2 hold the X part
(bit q for qubit q, qubit 0 being the leftmost letter of the label),
bits 3..5 the Z part.  Letter of qubit q is (x_q, z_q) with
I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).  The identity (code 0) is never a
valid observable; it only appears as the body of a ``PhasedPauli``.

Products track phases exactly: a ``PhasedPauli`` is ``i**k * body``
with the literal single-qubit matrices X, Y=[[0,-i],[i,0]], Z.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

OBSERVABLES = tuple(range(1, 64))

_LETTERS = "IXZY"  # index = x_bit | z_bit << 1

# i-exponent of the product of two single-qubit letters, indexed by letter
# codes: X*Y=iZ, Y*X=-iZ, Y*Z=iX, Z*Y=-iX, Z*X=iY, X*Z=-iY.
_PHASE_EXP = (
    (0, 0, 0, 0),
    (0, 0, 3, 1),
    (0, 1, 0, 3),
    (0, 3, 1, 0),
)

_MATS = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
)


class PhasedPauli(NamedTuple):
    """i**phase_exp times a Pauli body (0 denotes the identity body)."""

    phase_exp: int
    body: int

    @property
    def sign(self) -> int:
        """Return +1/-1 for real phases; raise for imaginary ones."""
        if self.phase_exp == 0:
            return 1
        if self.phase_exp == 2:
            return -1
        raise ValueError(f"phase i**{self.phase_exp} is not real")


IDENTITY = PhasedPauli(0, 0)


def letter_code(a: int, q: int) -> int:
    """2-bit letter code of qubit q (0 = leftmost) in observable a."""
    return ((a >> q) & 1) | (((a >> (q + 3)) & 1) << 1)


def parse_label(s: str) -> int:
    """Parse a 3-letter label such as "XIY" into an observable.

    The identity "III" is rejected: it is not one of the 63 observables.
    """
    if len(s) != 3:
        raise ValueError(f"label must have exactly 3 letters, got {s!r}")
    a = 0
    for q, ch in enumerate(s):
        code = _LETTERS.find(ch)
        if code < 0:
            raise ValueError(f"invalid letter {ch!r} in label {s!r}")
        a |= (code & 1) << q
        a |= (code >> 1) << (q + 3)
    if a == 0:
        raise ValueError('"III" is the identity, not an observable')
    return a


def format_label(a: int) -> str:
    """Inverse of parse_label; also accepts 0 (identity body)."""
    return "".join(_LETTERS[letter_code(a, q)] for q in range(3))


def signed_label(p: PhasedPauli) -> str:
    """Label with a +/- prefix; the phase must be real."""
    return ("+" if p.sign > 0 else "-") + format_label(p.body)


def x_part(a: int) -> int:
    return a & 7


def z_part(a: int) -> int:
    return a >> 3


def symplectic_form(a: int, b: int) -> int:
    """a.x*b.z + a.z*b.x over GF(2)."""
    v = (x_part(a) & z_part(b)) ^ (z_part(a) & x_part(b))
    return bin(v).count("1") & 1


def commutes(a: int, b: int) -> bool:
    return symplectic_form(a, b) == 0


def mul(p: PhasedPauli, q: PhasedPauli) -> PhasedPauli:
    """Product of two phased Paulis with exact per-qubit phase tracking."""
    k = p.phase_exp + q.phase_exp
    a, b = p.body, q.body
    for qu in range(3):
        k += _PHASE_EXP[letter_code(a, qu)][letter_code(b, qu)]
    return PhasedPauli(k & 3, a ^ b)


def product(ops: Iterable[int]) -> PhasedPauli:
    """Product of bare observables taken in ascending canonical order."""
    acc = IDENTITY
    for o in sorted(ops):
        acc = mul(acc, PhasedPauli(0, o))
    return acc


def is_symmetric(a: int) -> bool:
    """True iff the tensor equals its transpose, i.e. the Y count is even."""
    y = x_part(a) & z_part(a)
    return bin(y).count("1") % 2 == 0


def dense_matrix(p: PhasedPauli) -> np.ndarray:
    """8x8 complex matrix of a phased Pauli; the test oracle for mul/commutes."""
    m = np.eye(1, dtype=complex)
    for q in range(3):
        m = np.kron(m, _MATS[letter_code(p.body, q)])
    return (1j ** p.phase_exp) * m


def dense_observable(a: int) -> np.ndarray:
    return dense_matrix(PhasedPauli(0, a))
