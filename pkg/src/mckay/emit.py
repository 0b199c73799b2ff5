"""Text renderings of operators and product tables (LaTeX, JSON, CSV).

Internally every matrix is indexed in reverse lexicographic order.  For
display the power sums are listed from ``1^n`` upwards and the Schur
functions from ``(n)`` downwards, which is how such tables are usually laid
out.
"""

import csv
import io
import json
from fractions import Fraction

from .exactring import rat_str
from .partitions import Partition, partitions_of


def display_order(n, basis):
    parts = list(partitions_of(n))
    return parts[::-1] if basis == "p" else parts


def latex_label(basis, lam):
    lam = Partition(lam)
    if len(lam) == 1 and lam[0] < 10:
        return f"{basis}_{lam[0]}"
    return f"{basis}_{{{','.join(map(str, lam))}}}"


def _latex_coeff(c, first):
    c = Fraction(c)
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if a == 1:
        body = ""
    elif a.denominator == 1:
        body = str(a.numerator)
    else:
        body = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
    return sign + body


def latex_symfunc(f, basis=None):
    basis = basis or f.basis
    f = f.to_basis(basis)
    terms = []
    for lam in display_order(f.n, basis):
        c = f[lam]
        if c:
            terms.append(_latex_coeff(c, not terms) + latex_label(basis, lam))
    return "".join(terms) or "0"


def latex_table(table):
    order = display_order(table.n, table.basis)
    cols = "|c||" + "|".join("c" for _ in order) + "|"
    lines = [f"\\begin{{array}}{{{cols}}}", "\\hline"]
    lines.append("\\odot & " + " & ".join(latex_label(table.basis, m) for m in order) + " \\\\")
    lines.append("\\hline\\hline")
    for lam in order:
        cells = [latex_symfunc(table[lam, mu]) for mu in order]
        lines.append(latex_label(table.basis, lam) + " & " + " & ".join(cells) + " \\\\")
        lines.append("\\hline")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"


def _coeff_str(c):
    return rat_str(c) if isinstance(c, (int, Fraction)) else str(c)


def table_json(table):
    order = display_order(table.n, table.basis)
    return {
        "n": table.n,
        "basis": table.basis,
        "A": table.A,
        "cells": [
            {"row": list(lam), "col": list(mu), "value": table[lam, mu].to_json()}
            for lam in order
            for mu in order
        ],
    }


def table_csv(table):
    order = display_order(table.n, table.basis)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "value"])
    for lam in order:
        for mu in order:
            w.writerow([lam.label(), mu.label(), latex_symfunc(table[lam, mu])])
    return buf.getvalue()


def operator_rows(op):
    """Entries reordered to display order (columns are still images)."""
    order = display_order(op.n, op.basis)
    idx = {lam: i for i, lam in enumerate(partitions_of(op.n))}
    return order, [[op.entries[idx[a]][idx[b]] for b in order] for a in order]


def operator_json(op, name=None):
    order, rows = operator_rows(op)
    out = {"n": op.n, "basis": op.basis, "order": [list(lam) for lam in order]}
    if name:
        out["name"] = name
    out["matrix"] = [[_coeff_str(x) for x in r] for r in rows]
    return out


def operator_latex(op):
    order, rows = operator_rows(op)

    def cell(x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        sign = "-" if x < 0 else ""
        return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"

    lines = ["\\begin{pmatrix}"]
    lines += [" & ".join(cell(x) for x in r) + " \\\\" for r in rows]
    lines.append("\\end{pmatrix}")
    return "\n".join(lines) + "\n"


def operator_csv(op):
    order, rows = operator_rows(op)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [latex_label(op.basis, m) for m in order])
    for lam, r in zip(order, rows):
        w.writerow([latex_label(op.basis, lam)] + [_coeff_str(x) for x in r])
    return buf.getvalue()


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
