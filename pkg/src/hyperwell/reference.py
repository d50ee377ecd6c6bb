"""Embedded benchmark energies and spectroscopic state labels.

The benchmark covers the well at D = 10 in atomic units (hbar = mu = 1)
for sigma0 in {0.1, 0.2} and a ladder of 28 (state, alpha) combinations.
Each entry carries three published reference energies: ``e_present``
(closed-form route), ``e_dong`` (an earlier closed-form route) and
``e_lucha`` (an independent numerical integration).  The values are
transcribed literally and never recomputed here, so regressions of our
own solvers diff against a fixed surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StateLabelError

TABLE1_D = 10.0
TABLE1_MU = 1.0
TABLE1_HBAR = 1.0
TABLE1_SIGMA0 = (0.1, 0.2)

_LETTER_TO_L = {"s": 0, "p": 1, "d": 2, "f": 3, "g": 4}


@dataclass(frozen=True)
class StateLabel:
    """Spectroscopic label 'Nx' with N >= l+1, letter x in s,p,d,f,g."""

    text: str
    n: int
    l: int


def parse_state_label(text: str) -> StateLabel:
    """Parse '2p' -> (n=0, l=1), '6g' -> (n=1, l=4), etc.

    The radial quantum number is n = N - l - 1.

    Raises
    ------
    StateLabelError
        On an unknown letter, malformed integer part, or N <= l.
    """
    if not text:
        raise StateLabelError("empty state label")
    letter = text[-1].lower()
    if letter not in _LETTER_TO_L:
        raise StateLabelError(f"unknown orbital letter {letter!r} in {text!r}")
    try:
        big_n = int(text[:-1])
    except ValueError:
        raise StateLabelError(f"malformed principal number in {text!r}") from None
    l = _LETTER_TO_L[letter]
    if big_n <= l:
        raise StateLabelError(f"no such state {text!r}: need N >= l+1 = {l + 1}")
    return StateLabel(text=text.lower(), n=big_n - l - 1, l=l)


@dataclass(frozen=True)
class ReferenceRow:
    """One benchmark entry: a state at one (alpha, sigma0) with 3 references."""

    label: StateLabel
    alpha: float
    sigma0: float
    e_present: float
    e_dong: float
    e_lucha: float


# label, alpha, (present, dong, lucha) at sigma0=0.1, same at sigma0=0.2
_RAW: tuple = (
    ("2p", 0.10, (2.61874, 2.61556, 2.61935), (1.20876, 1.20559, 1.20903)),
    ("2p", 0.15, (3.90544, 3.89830, 3.90645), (1.86636, 1.85922, 1.86689)),
    ("2p", 0.20, (5.00331, 4.99062, 5.00457), (2.52000, 2.50731, 2.52080)),
    ("2p", 0.25, (5.88594, 5.86611, 5.88725), (3.14666, 3.12683, 3.14766)),
    ("3p", 0.10, (4.73540, 4.73223, 4.73638), (2.68308, 2.67990, 2.68358)),
    ("3p", 0.15, (6.04543, 6.03829, 6.04649), (3.67127, 3.66413, 3.67198)),
    ("3p", 0.20, (6.91663, 6.90394, 6.91733), (4.46516, 4.45247, 4.46579)),
    ("3p", 0.25, (7.48400, 7.46417, 7.48358), (5.09231, 5.07247, 5.09235)),
    ("3d", 0.10, (3.62699, 3.61747, 3.62769), (1.57873, 1.56921, 1.57920)),
    ("3d", 0.15, (5.29404, 5.27263, 5.29510), (2.54773, 2.52631, 2.54859)),
    ("3d", 0.20, (6.47492, 6.43684, 6.47598), (3.48119, 3.44311, 3.48228)),
    ("4p", 0.10, (6.00287, 5.99969, 6.00390), (3.75692, 3.75375, 3.75758)),
    ("4p", 0.15, (7.11526, 7.10812, 7.11589), (4.81215, 4.80501, 4.81274)),
    ("4p", 0.20, (7.71903, 7.70634, 7.71826), (5.53111, 5.51842, 5.53087)),
    ("4d", 0.10, (5.33129, 5.32177, 5.33216), (2.95257, 2.94305, 2.95317)),
    ("4d", 0.15, (6.73583, 6.71441, 6.73642), (4.10410, 4.08268, 4.10470)),
    ("4d", 0.20, (7.54480, 7.50672, 7.54331), (5.00179, 4.96371, 5.00137)),
    ("4f", 0.10, (4.68965, 4.67061, 4.69058), (2.07342, 2.05438, 2.07417)),
    ("4f", 0.15, (6.42992, 6.38708, 6.43112), (3.35622, 3.31338, 3.35742)),
    ("4f", 0.20, (7.43397, 7.35782, 7.43334), (4.47408, 4.39793, 4.47486)),
    ("5p", 0.10, (6.80345, 6.80027, 6.80432), (4.54946, 4.54628, 4.55015)),
    ("5d", 0.10, (6.37762, 6.36810, 6.37842), (3.95677, 3.94725, 3.95740)),
    ("5f", 0.10, (5.98063, 5.96159, 5.98147), (3.31497, 3.29593, 3.31567)),
    ("5g", 0.10, (5.62805, 5.59631, 5.62926), (2.64017, 2.60844, 2.64124)),
    ("6p", 0.10, (7.32416, 7.32099, 7.32476), (5.13763, 5.13446, 5.13824)),
    ("6d", 0.10, (7.04824, 7.03872, 7.04873), (4.69929, 4.68977, 4.69979)),
    ("6f", 0.10, (6.79479, 6.77575, 6.79528), (4.22654, 4.20751, 4.22706)),
    ("6g", 0.10, (6.57377, 6.54204, 6.57452), (3.73301, 3.70128, 3.73378)),
)


def reference_rows() -> tuple[ReferenceRow, ...]:
    """All 56 benchmark entries, sigma0 = 0.1 block first, table order."""
    rows: list[ReferenceRow] = []
    for sigma0, slot in zip(TABLE1_SIGMA0, (2, 3)):
        for entry in _RAW:
            label = parse_state_label(entry[0])
            present, dong, lucha = entry[slot]
            rows.append(ReferenceRow(label=label, alpha=entry[1], sigma0=sigma0,
                                     e_present=present, e_dong=dong, e_lucha=lucha))
    return tuple(rows)
