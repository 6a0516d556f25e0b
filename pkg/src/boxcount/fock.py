"""Half-infinite wedge calculus on partitions, with exact series amplitudes.

A state assigns each partition an amplitude in the truncated series ring.
The operators here act slice-wise: the raising and lowering operators move
between interlacing partitions (their primed variants conjugate first),
weight operators read off a partition's size or its checkerboard split, and
the mode operators add or remove border strips with alternating signs.

Composing weight and raising/lowering operators across a window of slices
evaluates the coloured generating series of box piles and pyramid piles;
those transfer evaluations are independent of both the direct enumeration
and the closed product formulas.
"""

from __future__ import annotations

from functools import lru_cache

from boxcount import _kernels, young
from boxcount.series import Monomial, Series, _pack


class FockState:
    """Finitely many partitions with series-valued amplitudes."""

    __slots__ = ("vars", "trunc", "amps")

    def __init__(self, vars, trunc, amps):
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "amps", amps)

    def __setattr__(self, name, value):
        raise AttributeError("FockState is immutable")

    @classmethod
    def vacuum(cls, vars, trunc):
        return cls.basis((), vars, trunc)

    @classmethod
    def basis(cls, lam, vars, trunc):
        young.check_partition(lam)
        return cls(vars, trunc, {lam: {0: 1}})

    def amplitude(self, lam):
        return Series(self.vars, self.trunc, dict(self.amps.get(lam, {})), _trusted=True)

    def scale(self, series):
        """Multiply every amplitude by a series (or monomial) factor."""
        if isinstance(series, Monomial):
            series = Series.from_monomial(series, self.trunc)
        if series.vars != self.vars:
            raise ValueError("variable sets differ")
        cap = 2 * self.trunc
        shift = 8 * len(self.vars)
        out = {}
        for lam, amp in self.amps.items():
            prod = _kernels.mul_terms(amp, series._terms, cap, shift)
            if prod:
                out[lam] = prod
        return FockState(self.vars, self.trunc, out)

    def __add__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        if other.vars != self.vars or other.trunc != self.trunc:
            raise ValueError("states live in different rings")
        out = {lam: dict(amp) for lam, amp in self.amps.items()}
        for lam, amp in other.amps.items():
            dst = out.setdefault(lam, {})
            for k, c in amp.items():
                nc = dst.get(k, 0) + c
                if nc:
                    dst[k] = nc
                elif k in dst:
                    del dst[k]
        return FockState(self.vars, self.trunc, {l: a for l, a in out.items() if a})

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        if self.vars != other.vars or self.trunc != other.trunc:
            return False
        a = {l: amp for l, amp in self.amps.items() if amp}
        b = {l: amp for l, amp in other.amps.items() if amp}
        return a == b

    def is_zero(self):
        return all(not amp for amp in self.amps.values())

    def __repr__(self):
        return f"FockState({len(self.amps)} partitions; N={self.trunc})"


# -- operators ---------------------------------------------------------------
#
# An operator is a small tuple:
#   ("gamma", grow, primed, arg)   raising (grow=True) / lowering, arg a Monomial
#   ("weight", g)                  multiply by q_g ** |lam|
#   ("weight2", g, h)              q_g ** (same-parity cells) * q_h ** (rest)
#   ("alpha", n)                   n < 0 adds |n|-strips, n > 0 removes, signed
#   ("even", grow, arg)            the even part: gamma(arg) o gamma(-arg)


def gamma_minus(arg, primed=False):
    return ("gamma", True, primed, arg)


def gamma_plus(arg, primed=False):
    return ("gamma", False, primed, arg)


def weight_op(g):
    return ("weight", int(g))


def weight2_op(g, h):
    return ("weight2", int(g), int(h))


def alpha_op(n):
    if n == 0:
        raise ValueError("mode index must be non-zero")
    return ("alpha", int(n))


def even_minus(arg):
    return ("even", True, arg)


def even_plus(arg):
    return ("even", False, arg)


@lru_cache(maxsize=None)
def _partners_above(mu, max_size, primed):
    if primed:
        return tuple(
            (young.conjugate(lam), d)
            for lam, d in _partners_above(young.conjugate(mu), max_size, False)
        )
    return tuple(
        (lam, sum(lam) - sum(mu)) for lam in young.interlacing_above(mu, max_size)
    )


@lru_cache(maxsize=None)
def _partners_below(mu, primed):
    if primed:
        return tuple(
            (young.conjugate(lam), d)
            for lam, d in _partners_below(young.conjugate(mu), False)
        )
    return tuple(
        (lam, sum(mu) - sum(lam)) for lam in young.interlacing_below(mu)
    )


def _apply_gamma(state, grow, primed, arg, size_cap):
    if arg.vars != state.vars:
        raise ValueError("argument variables differ from the state's")
    cap = 2 * state.trunc
    shift = 8 * len(state.vars)
    key_arg = arg.packed()
    deg_arg = arg.degree_halves
    out = {}
    for mu, amp in state.amps.items():
        if not amp:
            continue
        mindeg = min(k >> shift for k in amp)
        room = cap - mindeg
        if grow:
            if deg_arg > 0:
                limit = sum(mu) + room // deg_arg
                if size_cap is not None:
                    limit = min(limit, size_cap)
            elif size_cap is not None:
                limit = size_cap
            else:
                raise ValueError("raising with a degree-0 argument needs a size cap")
            partners = _partners_above(mu, limit, primed)
        else:
            partners = _partners_below(mu, primed)
        for lam, delta in partners:
            if deg_arg * delta > room:
                continue
            coef = -1 if (arg.sign < 0 and delta % 2) else 1
            dst = out.setdefault(lam, {})
            _kernels.scale_accumulate(dst, amp, delta * key_arg, coef, cap, shift)
    return FockState(state.vars, state.trunc, {l: a for l, a in out.items() if a})


def _apply_weight_key(state, key_of):
    cap = 2 * state.trunc
    shift = 8 * len(state.vars)
    out = {}
    for lam, amp in state.amps.items():
        dst = {}
        _kernels.scale_accumulate(dst, amp, key_of(lam), 1, cap, shift)
        if dst:
            out[lam] = dst
    return FockState(state.vars, state.trunc, out)


def _apply_alpha(state, n):
    out = {}
    for mu, amp in state.amps.items():
        if not amp:
            continue
        if n < 0:
            moves = young.add_border_strip(mu, -n)
        else:
            moves = young.remove_border_strip(mu, n)
        for lam, height in moves:
            coef = 1 if height % 2 == 1 else -1
            dst = out.setdefault(lam, {})
            for k, c in amp.items():
                nc = dst.get(k, 0) + coef * c
                if nc:
                    dst[k] = nc
                elif k in dst:
                    del dst[k]
    return FockState(state.vars, state.trunc, {l: a for l, a in out.items() if a})


def apply_op(state, op, size_cap=None):
    kind = op[0]
    if kind == "gamma":
        _, grow, primed, arg = op
        return _apply_gamma(state, grow, primed, arg, size_cap)
    if kind == "weight":
        g = op[1]
        m = len(state.vars)

        def key_of(lam, g=g, m=m):
            halves = [0] * m
            halves[g] = 2 * sum(lam)
            return _pack(halves)

        return _apply_weight_key(state, key_of)
    if kind == "weight2":
        _, g, h = op
        m = len(state.vars)

        def key_of(lam, g=g, h=h, m=m):
            same, rest = young.checkerboard_counts(lam)
            halves = [0] * m
            halves[g] += 2 * same
            halves[h] += 2 * rest
            return _pack(halves)

        return _apply_weight_key(state, key_of)
    if kind == "alpha":
        return _apply_alpha(state, op[1])
    if kind == "even":
        _, grow, arg = op
        state = _apply_gamma(state, grow, False, -arg, size_cap)
        return _apply_gamma(state, grow, False, arg, size_cap)
    raise ValueError(f"unknown operator {op!r}")


def apply_ops(state, ops, size_cap=None):
    """Apply a left-to-right operator word: the rightmost acts first."""
    for op in reversed(list(ops)):
        state = apply_op(state, op, size_cap)
    return state


def bracket(lam, ops, mu, vars, trunc, size_cap=None):
    """The lam-amplitude of the operator word applied to the basis state mu."""
    return apply_ops(FockState.basis(mu, vars, trunc), ops, size_cap).amplitude(lam)


def check_relation(vars, trunc, left_ops, right_ops, scalar=None, max_basis=6):
    """Exact equality of two operator words on all partitions up to max_basis.

    The right word may carry a scalar series factor.  Returns (ok, witness):
    the first failing basis partition, or None.
    """
    for mu in young.partitions_up_to(max_basis):
        left = apply_ops(FockState.basis(mu, vars, trunc), left_ops)
        right = apply_ops(FockState.basis(mu, vars, trunc), right_ops)
        if scalar is not None:
            right = right.scale(scalar)
        if left != right:
            return False, mu
    return True, None


# -- transfer machines -------------------------------------------------------


def _machine(vars, trunc, weight_for, creator_for):
    """Evaluate a slice machine over the window [-trunc-1, trunc].

    Each slice s contributes its weight right after its creator; the extra
    leftmost step closes the walk so the last weighted slice may be
    non-empty.  Any pile with a non-empty slice outside the window has more
    than `trunc` boxes, so the window is exhaustive at this truncation.
    """
    ops = []
    for s in range(-trunc - 1, trunc + 1):
        ops.append(weight_for(s))
        ops.append(creator_for(s))
    state = apply_ops(FockState.vacuum(vars, trunc), ops, size_cap=trunc)
    return state.amplitude(())


def transfer_zn(n, trunc):
    """Slice-machine evaluation of the cyclic-coloured box series."""
    from boxcount.colouring import zn_group

    group = zn_group(n)
    one = Monomial.one(group.variables)

    def weight_for(s):
        return weight_op(s % n)

    def creator_for(s):
        return gamma_minus(one) if s >= 0 else gamma_plus(one)

    return _machine(group.variables, trunc, weight_for, creator_for)


def transfer_pyramid(trunc):
    """Slice machine for pyramid piles: diagonal slices, 4-periodic colours."""
    from boxcount.pyramid import KLEIN_VARS, SLICE_COLOUR

    one = Monomial.one(KLEIN_VARS)

    def weight_for(s):
        return weight_op(SLICE_COLOUR[s % 4])

    def creator_for(s):
        primed = s % 2 != 0
        return gamma_minus(one, primed) if s >= 0 else gamma_plus(one, primed)

    return _machine(KLEIN_VARS, trunc, weight_for, creator_for)


def transfer_pyramid_checkerboard(trunc):
    """Slice machine for pyramid piles on the transverse diagonal.

    Slicing by x + z leaves two colours per slice, split by the cell
    checkerboard; creators still conjugate on odd slices.
    """
    from boxcount.pyramid import KLEIN_VARS

    one = Monomial.one(KLEIN_VARS)

    def weight_for(s):
        if s % 2 == 0:
            return weight2_op(0, 3)
        return weight2_op(1, 2) if s > 0 else weight2_op(2, 1)

    def creator_for(s):
        primed = s % 2 != 0
        return gamma_minus(one, primed) if s >= 0 else gamma_plus(one, primed)

    return _machine(KLEIN_VARS, trunc, weight_for, creator_for)


def transfer_klein(trunc):
    """Slice machine for the parity-coloured box series.

    Box piles slice like plane partitions (all creators unprimed); the
    parity colouring splits each slice by the cell checkerboard.
    """
    from boxcount.pyramid import KLEIN_VARS

    one = Monomial.one(KLEIN_VARS)

    def weight_for(s):
        if s % 2 == 0:
            return weight2_op(0, 3)
        return weight2_op(1, 2) if s > 0 else weight2_op(2, 1)

    def creator_for(s):
        return gamma_minus(one) if s >= 0 else gamma_plus(one)

    return _machine(KLEIN_VARS, trunc, weight_for, creator_for)
