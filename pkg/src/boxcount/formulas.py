"""Closed product formulas for the coloured box-counting series.

Everything is assembled from the two MacMahon-type products in
boxcount.series; the enumeration and transfer modules compute the same
series by entirely different means, and the tests compare them exactly.
"""

from __future__ import annotations

from boxcount.colouring import Group, klein_group, zn_group
from boxcount.pyramid import KLEIN_VARS
from boxcount.series import Monomial, Series, macmahon, macmahon_tilde


def regular_monomial(group):
    """The product of all colour variables (one full orbit of boxes)."""
    return Monomial.from_exponents(group.variables, {v: 1 for v in group.variables})


def euler_number(group):
    """Topological Euler number of the crepant resolution: the group order."""
    if group.kind not in ("zn", "klein"):
        raise ValueError(f"no resolution data for group {group}")
    return group.order


def _interval(vars, a, b):
    return Monomial.from_exponents(vars, {vars[i]: 1 for i in range(a, b + 1)})


def _curve_classes(group):
    """(beta monomial on the colour variables, multiplicity) pairs."""
    vars = group.variables
    if group.kind == "zn":
        return [(_interval(vars, a, b), 1) for a in range(1, group.order) for b in range(a, group.order)]
    if group.kind == "klein":
        qa = Monomial.var(vars, "qa")
        qb = Monomial.var(vars, "qb")
        qc = Monomial.var(vars, "qc")
        return [
            (qa * qb, 1),
            (qa * qc, 1),
            (qb * qc, 1),
            (qa, -1),
            (qb, -1),
            (qc, -1),
            (qa * qb * qc, -1),
        ]
    raise ValueError(f"no resolution data for group {group}")


def closed_orbifold(group, trunc):
    """Closed form of the coloured box-counting series of the group action."""
    vars = group.variables
    q = regular_monomial(group)
    one = Monomial.one(vars)
    if group.kind == "zn":
        n = group.order
        result = macmahon(one, q, trunc) ** n
        for a in range(1, n):
            for b in range(a, n):
                result = result * macmahon_tilde(_interval(vars, a, b), q, trunc)
        return result
    if group.kind == "klein":
        qa = Monomial.var(vars, "qa")
        qb = Monomial.var(vars, "qb")
        qc = Monomial.var(vars, "qc")
        num = macmahon(one, q, trunc) ** 4
        num = num * macmahon_tilde(qa * qb, q, trunc)
        num = num * macmahon_tilde(qa * qc, q, trunc)
        num = num * macmahon_tilde(qb * qc, q, trunc)
        den = macmahon_tilde(-qa, q, trunc) * macmahon_tilde(-qb, q, trunc)
        den = den * macmahon_tilde(-qc, q, trunc) * macmahon_tilde(-(qa * qb * qc), q, trunc)
        return num * den.inverse()
    raise ValueError(f"no closed orbifold formula for group {group}")


def closed_zn(n, trunc):
    return closed_orbifold(zn_group(n), trunc)


def closed_klein(trunc):
    return closed_orbifold(klein_group(), trunc)


def closed_pyramid(trunc):
    """Closed form of the pyramid series on the variables (q0, qa, qb, qc)."""
    vars = KLEIN_VARS
    q = Monomial.from_exponents(vars, {v: 1 for v in vars})
    one = Monomial.one(vars)
    qa = Monomial.var(vars, "qa")
    qb = Monomial.var(vars, "qb")
    qc = Monomial.var(vars, "qc")
    num = macmahon(one, q, trunc) ** 4
    num = num * macmahon_tilde(qa * qc, q, trunc)
    num = num * macmahon_tilde(qb * qc, q, trunc)
    den = macmahon_tilde(-qa, q, trunc) * macmahon_tilde(-qb, q, trunc)
    den = den * macmahon_tilde(-qc, q, trunc) * macmahon_tilde(-(qa * qb * qc), q, trunc)
    return num * den.inverse()


def dt_sign_variables(group):
    """Variables whose sign flip turns box counting into its signed version."""
    if group.kind == "zn":
        return ("q0",)
    if group.kind == "klein":
        return ("qa", "qb", "qc")
    raise ValueError(f"no sign convention for group {group}")


def dt_orbifold(group, trunc):
    """The signed orbifold series: the closed form with flipped variables."""
    return closed_orbifold(group, trunc).substitute_signs(dt_sign_variables(group))


def resolution_variables(group):
    if group.kind == "zn":
        return ("q",) + tuple(f"v{i}" for i in range(1, group.order))
    if group.kind == "klein":
        return ("q", "va", "vb", "vc")
    raise ValueError(f"no resolution data for group {group}")


def dt_resolution(group, trunc):
    """Signed box counting on the resolved space, in box and curve variables.

    The curve classes carry the variables v; the box class carries q with
    alternating signs.
    """
    vars = resolution_variables(group)
    e = euler_number(group)
    q = Monomial.var(vars, "q")
    result = macmahon(Monomial.one(vars), -q, trunc) ** e
    inverse_part = Series.one(vars, trunc)
    for beta, mult in _curve_classes(group):
        # transcribe the colour monomial onto the matching v variables
        v_beta = Monomial(
            vars, tuple([0] + list(beta.halves[1:])), beta.sign
        )
        factor = macmahon(v_beta, -q, trunc)
        if mult > 0:
            result = result * factor
        else:
            inverse_part = inverse_part * factor
    if not inverse_part.is_one():
        result = result * inverse_part.inverse()
    return result


def dt_resolution_paired(group, trunc):
    """The resolution series paired with its curve-inverted mirror.

    Each curve factor and its mirror combine into a two-sided product in the
    colour variables (under the dictionary matching the i-th curve variable
    with the i-th colour variable), and the pairing absorbs one copy of the
    degree-zero normalization, leaving a single signed MacMahon prefactor.
    """
    vars = group.variables
    q = regular_monomial(group)
    e = euler_number(group)
    num = macmahon(Monomial.one(vars), -q, trunc) ** e
    den = Series.one(vars, trunc)
    for beta, mult in _curve_classes(group):
        factor = macmahon_tilde(beta, -q, trunc)
        if mult > 0:
            num = num * factor
        else:
            den = den * factor
    if den.is_one():
        return num
    return num * den.inverse()


def dt_pairing_holds(group, trunc):
    """Exact equality of the signed orbifold series and the paired resolution."""
    return dt_orbifold(group, trunc) == dt_resolution_paired(group, trunc)
