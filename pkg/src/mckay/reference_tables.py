"""Published product tables for n = 2, 3, 4, kept as LaTeX cell strings.

Rows and columns follow the display order of :mod:`mckay.emit`.  The
parser accepts the loose spelling of the source (``p_2`` and ``p_{2}``,
terms in any order).
"""

import re
from fractions import Fraction

from .emit import display_order
from .partitions import Partition
from .symfunc import SymFunc

TABLES = {
    (2, "p"): [
        ["2p_{1,1}-2p_2", "2p_2"],
        ["2p_2", "0"],
    ],
    (2, "s"): [
        ["s_{2}", "s_{1,1}"],
        ["s_{1,1}", "-s_2+2s_{1,1}"],
    ],
    (3, "p"): [
        ["6p_{1,1,1}-18p_{2,1}+15p_3", "6p_{2,1}-9p_3", "6p_3"],
        ["6p_{2,1}-9p_3", "3p_3", "0"],
        ["6p_3", "0", "0"],
    ],
    (3, "s"): [
        ["s_{3}", "s_{2,1}", "s_{1,1,1}"],
        ["s_{2,1}", "-s_3+s_{2,1}+3s_{1,1,1}", "s_{3}-2s_{2,1}+5s_{1,1,1}"],
        ["s_{1,1,1}", "s_{3}-2s_{2,1}+5s_{1,1,1}", "2s_3-3s_{2,1}+5s_{1,1,1}"],
    ],
    (4, "p"): [
        [
            "24p_{1,1,1,1}-144p_{2,1,1}+72p_{2,2}+240p_{3,1}-240p_4",
            "24p_{2,1,1}-24p_{2,2}-72p_{3,1}+104p_4",
            "24p_{2,2}-48p_4",
            "24p_{3,1}-48p_4",
            "24p_4",
        ],
        [
            "24p_{2,1,1}-24p_{2,2}-72p_{3,1}+104p_4",
            "4p_{2,2}+12p_{3,1}-32p_4",
            "8p_4",
            "8p_4",
            "0",
        ],
        ["24p_{2,2}-48p_4", "8p_4", "8p_4", "0", "0"],
        ["24p_{3,1}-48p_4", "8p_4", "0", "0", "0"],
        ["24p_4", "0", "0", "0", "0"],
    ],
    (4, "s"): [
        ["s_4", "s_{3,1}", "s_{2,2}", "s_{2,1,1}", "s_{1,1,1,1}"],
        [
            "s_{3,1}",
            "-s_{4}+s_{3,1}-s_{2,2}+3s_{2,1,1}",
            "-s_{3,1}+2s_{2,2}+s_{2,1,1}+2s_{1,1,1,1}",
            "s_4-s_{3,1}-2s_{2,2}+3s_{2,1,1}+6s_{1,1,1,1}",
            "-s_4+2s_{3,1}-s_{2,2}-3s_{2,1,1}+9s_{1,1,1,1}",
        ],
        [
            "s_{2,2}",
            "-s_{3,1}+2s_{2,2}+s_{2,1,1}+2s_{1,1,1,1}",
            "-s_{3,1}+3s_{2,2}-s_{2,1,1}+4s_{1,1,1,1}",
            "s_{2,2}-2s_{2,1,1}+10s_{1,1,1,1}",
            "-2s_4+3s_{3,1}-5s_{2,1,1}+10s_{1,1,1,1}",
        ],
        [
            "s_{2,1,1}",
            "s_4-s_{3,1}-2s_{2,2}+3s_{2,1,1}+6s_{1,1,1,1}",
            "s_{2,2}-2s_{2,1,1}+10s_{1,1,1,1}",
            "-s_4+4s_{3,1}-4s_{2,2}-6s_{2,1,1}+24s_{1,1,1,1}",
            "-5s_4+8s_{3,1}-2s_{2,2}-11s_{2,1,1}+21s_{1,1,1,1}",
        ],
        [
            "s_{1,1,1,1}",
            "-s_4+2s_{3,1}-s_{2,2}-3s_{2,1,1}+9s_{1,1,1,1}",
            "-2s_4+3s_{3,1}-5s_{2,1,1}+10s_{1,1,1,1}",
            "-5s_4+8s_{3,1}-2s_{2,2}-11s_{2,1,1}+21s_{1,1,1,1}",
            "-5s_4+7s_{3,1}-s_{2,2}-9s_{2,1,1}+14s_{1,1,1,1}",
        ],
    ],
}

_TERM = re.compile(
    r"([+-]?)\s*(\\frac\{(\d+)\}\{(\d+)\}|\d+)?\s*([ps])_(?:\{([\d,\s]+)\}|(\d))"
)


def parse_latex_symfunc(text, n, basis):
    """Parse ``2p_{1,1}-2p_2`` style strings into a :class:`SymFunc`."""
    text = text.replace(" ", "")
    if text == "0":
        return SymFunc.zero(n, basis)
    out = {}
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        pos = m.end()
        sign, coeff, num, den, b, parts, single = m.groups()
        if b != basis:
            raise ValueError(f"basis {b!r} in a {basis!r} expression")
        if num:
            c = Fraction(int(num), int(den))
        else:
            c = Fraction(int(coeff)) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        lam = Partition([int(x) for x in (parts or single).split(",")])
        out[lam] = out.get(lam, 0) + c
    if pos != len(text):
        raise ValueError(f"trailing text in {text!r}")
    return SymFunc(n, basis, out)


def reference_table(n, basis):
    """``{(lam, mu): SymFunc}`` for the published table."""
    rows = TABLES[(n, basis)]
    order = display_order(n, basis)
    return {
        (lam, mu): parse_latex_symfunc(rows[i][j], n, basis)
        for i, lam in enumerate(order)
        for j, mu in enumerate(order)
    }


def table_mismatches(table):
    """Cells where a computed table differs from the published one."""
    ref = reference_table(table.n, table.basis)
    return [(lam, mu) for (lam, mu), v in ref.items() if table[lam, mu] != v]
