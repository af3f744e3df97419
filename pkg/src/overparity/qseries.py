"""Truncated power series in q with exact integer coefficients.

A :class:`Series` of order N holds c_0..c_N and arithmetic never looks past
index N.  Division is only allowed by series whose constant term is a unit
(+1 or -1), so every result stays integral.

The builders at the bottom expand each generating function as a finite
computation.  Sums over n >= 1 stop once q**n exceeds the order, and running
q-Pochhammer products are updated one binomial factor at a time, so each
builder costs O(N^2) apart from the ``RAW_*`` forms, which do a full series
division per summand on purpose.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Sequence

from .errors import DivergentProduct, NonUnitDivisor, OddCoefficient, OrderMismatch

DEFAULT_ORDER = 200


class Series:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = tuple(int(x) for x in c)

    # construction

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: int = 1) -> Series:
        c = [0] * (order + 1)
        if k <= order:
            c[k] = coeff
        return cls(c)

    # access

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, n: int) -> int:
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        head = ", ".join(map(str, self._c[:8]))
        more = ", ..." if len(self._c) > 8 else ""
        return f"Series([{head}{more}], order={self.order})"

    # arithmetic

    def _check(self, other: Series) -> None:
        if other.order != self.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: Series | int) -> Series:
        if isinstance(other, int):
            other = Series.monomial(0, self.order, other)
        self._check(other)
        return Series([a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __sub__(self, other: Series | int) -> Series:
        if isinstance(other, int):
            other = Series.monomial(0, self.order, other)
        self._check(other)
        return Series([a - b for a, b in zip(self._c, other._c)])

    def __rsub__(self, other: int) -> Series:
        return (-self) + other

    def __neg__(self) -> Series:
        return Series([-a for a in self._c])

    def __mul__(self, other: Series | int) -> Series:
        if isinstance(other, int):
            return Series([other * a for a in self._c])
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        b = other._c
        for i, a in enumerate(self._c):
            if a:
                for j in range(n - i + 1):
                    if b[j]:
                        out[i + j] += a * b[j]
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Series) -> Series:
        self._check(other)
        b0 = other._c[0]
        if b0 not in (1, -1):
            raise NonUnitDivisor(f"constant term {b0} is not a unit")
        b = other._c
        nz = [(k, b[k]) for k in range(1, len(b)) if b[k]]
        out: list[int] = []
        for m, a in enumerate(self._c):
            acc = a
            for k, bk in nz:
                if k > m:
                    break
                acc -= bk * out[m - k]
            out.append(acc * b0)
        return Series(out)

    def shift(self, k: int) -> Series:
        """Multiply by q**k, dropping whatever falls past the order."""
        if k < 0:
            raise ValueError("negative shift")
        n = self.order
        return Series([0] * min(k, n + 1) + list(self._c[: max(n + 1 - k, 0)]))

    def mul_binomial(self, a: int, k: int) -> Series:
        """Multiply by (1 + a q**k), k >= 0."""
        c = list(self._c)
        if k == 0:
            return Series([(1 + a) * x for x in c])
        for m in range(len(c) - 1, k - 1, -1):
            c[m] += a * c[m - k]
        return Series(c)

    def div_binomial(self, a: int, k: int) -> Series:
        """Divide by (1 + a q**k), k >= 1."""
        if k < 1:
            raise NonUnitDivisor("binomial divisor needs k >= 1")
        c = list(self._c)
        for m in range(k, len(c)):
            c[m] -= a * c[m - k]
        return Series(c)

    def halve(self) -> Series:
        odd = [i for i, x in enumerate(self._c) if x % 2]
        if odd:
            raise OddCoefficient(f"coefficient of q^{odd[0]} is odd ({self._c[odd[0]]})")
        return Series([x // 2 for x in self._c])

    def truncate(self, order: int) -> Series:
        """Drop coefficients above ``order`` (or pad with zeros up to it)."""
        return Series(self._c, order)


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_sub(a: Series, b: Series) -> Series:
    return a - b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_div(a: Series, b: Series) -> Series:
    return a / b


def pochhammer(a: int, shift: int, length: int | None, order: int) -> Series:
    """(a q**shift; q)_length, i.e. the product of (1 - a q**(shift+i)) for 0 <= i < length.

    ``length=None`` means the infinite product, which needs ``shift >= 1``.
    The sign and any integer scale t are folded into ``a``: (-tq; q) is
    ``pochhammer(-t, 1, None, order)``.
    """
    if length is None:
        if shift < 1:
            raise DivergentProduct("infinite product needs shift >= 1")
        length = max(order - shift + 1, 0)
    s = Series.one(order)
    for i in range(length):
        s = s.mul_binomial(-a, shift + i)
    return s


# -- generating-function builders ---------------------------------------------


class ExprId(str, Enum):
    GEN_P = "GEN_P"
    GEN_D = "GEN_D"
    GEN_P1 = "GEN_P1"
    GEN_D1 = "GEN_D1"
    GEN_Pm1 = "GEN_Pm1"
    GEN_Dm1 = "GEN_Dm1"
    SUM_PO_MINUS_PE = "SUM_PO_MINUS_PE"
    SUM_BAR_NGTO = "SUM_BAR_NGTO"
    SUM_BAR_OGEN = "SUM_BAR_OGEN"
    SUM_BAR_OGTN = "SUM_BAR_OGTN"
    SUM_H_ON_O = "SUM_H_ON_O"
    SUM_OLEN = "SUM_OLEN"
    SUM_H_NLTO = "SUM_H_NLTO"
    SUM_H_NLTO_O = "SUM_H_NLTO_O"
    SUM_P1_DIFF = "SUM_P1_DIFF"
    SUM_P2_DIFF = "SUM_P2_DIFF"
    SUM_NLTO = "SUM_NLTO"
    PHAT = "PHAT"
    OP_TOTAL = "OP_TOTAL"
    # sums as they first appear when splitting on an extreme part,
    # before any cancellation
    RAW_BAR_NGEO = "RAW_BAR_NGEO"
    RAW_BAR_NGTO = "RAW_BAR_NGTO"
    RAW_BAR_OGEN = "RAW_BAR_OGEN"
    RAW_BAR_OGTN = "RAW_BAR_OGTN"
    RAW_TILDE_OLEN = "RAW_TILDE_OLEN"
    RAW_TILDE_OLTN = "RAW_TILDE_OLTN"
    RAW_TILDE_NLEO = "RAW_TILDE_NLEO"
    RAW_TILDE_NLTO = "RAW_TILDE_NLTO"


#: Human-readable formula of every expression, in ASCII q-notation.
FORMULAS: dict[ExprId, str] = {
    ExprId.GEN_P: "1/(tq;q)_inf = sum_{n>=0} t^n q^n/(q;q)_n = 1 + sum_{n>=1} t q^n/(tq^n;q)_inf",
    ExprId.GEN_D: "(-tq;q)_inf = 1 + sum_{n>=1} t q^n (-tq;q)_{n-1} = 1 + sum_{n>=1} t q^n (-tq^{n+1};q)_inf",
    ExprId.GEN_P1: "GEN_P at t=1",
    ExprId.GEN_D1: "GEN_D at t=1",
    ExprId.GEN_Pm1: "GEN_P at t=-1",
    ExprId.GEN_Dm1: "GEN_D at t=-1",
    ExprId.SUM_PO_MINUS_PE: "sum_{n>=1} q^n / ((q;q)_{n-1} (1+q^n))",
    ExprId.SUM_BAR_NGTO: "sum_{n>=1} q^n/(q;q)_n",
    ExprId.SUM_BAR_OGEN: "(q;q)_inf + sum_{n>=1} q^n (-q;q)_{n-1}",
    ExprId.SUM_BAR_OGTN: "(q;q)_inf + sum_{n>=1} q^n (-q;q)_n/(1-q^n)",
    ExprId.SUM_H_ON_O: "1/2 sum_{n>=1} q^n [(-q;q)_n - (q;q)_n]/(1-q^n)",
    ExprId.SUM_OLEN: "sum_{n>=1} q^n (-q^{n+1};q)_inf",
    ExprId.SUM_H_NLTO: "sum_{n>=1} q^n (-q^n;q)_inf/(1-q^n)",
    ExprId.SUM_H_NLTO_O: "1/2 sum_{n>=1} q^n [(-q^n;q)_inf - (q^n;q)_inf]/(1-q^n)",
    ExprId.SUM_P1_DIFF: "sum_{n>=1} q^n / ((1+q^n) (q^{n+1};q)_inf)",
    ExprId.SUM_P2_DIFF: "1/2 sum_{n>=1} q^n/(1+q^n) [1/(q^{n+1};q)_inf - 1/(-q^{n+1};q)_inf]",
    ExprId.SUM_NLTO: "sum_{n>=1} q^n/(q^n;q)_inf",
    ExprId.PHAT: "sum_{n>=1} q^{2n} / ((1-q^{2n}) (q;q)_{n-1})",
    ExprId.OP_TOTAL: "(-q;q)_inf/(q;q)_inf",
    ExprId.RAW_BAR_NGEO: "sum_{n>=1} q^n (-q^{n+1};q)_inf / ((q;q)_{n-1} (-q^n;q)_inf)",
    ExprId.RAW_BAR_NGTO: "sum_{n>=1} q^n (-q^{n+1};q)_inf / ((q;q)_n (-q^{n+1};q)_inf)",
    ExprId.RAW_BAR_OGEN: "(q;q)_inf + sum_{n>=1} q^n (-q;q)_{n-1} (q^n;q)_inf / (q^n;q)_inf",
    ExprId.RAW_BAR_OGTN: "(q;q)_inf + sum_{n>=1} q^n (-q;q)_n (q^{n+1};q)_inf / (q^n;q)_inf",
    ExprId.RAW_TILDE_OLEN: "sum_{n>=1} q^n (-q^{n+1};q)_inf (q;q)_n / (q;q)_n",
    ExprId.RAW_TILDE_OLTN: "sum_{n>=1} q^n (-q^n;q)_inf (q;q)_{n-1} / (q;q)_n",
    ExprId.RAW_TILDE_NLEO: "sum_{n>=1} q^n (-q;q)_{n-1} / ((-q;q)_n (q^{n+1};q)_inf)",
    ExprId.RAW_TILDE_NLTO: "sum_{n>=1} q^n (-q;q)_{n-1} / ((-q;q)_{n-1} (q^n;q)_inf)",
}

#: Expressions with more than one equivalent form; ``form`` selects among them.
FORM_COUNT = {e: 3 for e in (ExprId.GEN_P, ExprId.GEN_D, ExprId.GEN_P1, ExprId.GEN_D1,
                             ExprId.GEN_Pm1, ExprId.GEN_Dm1)}
FORM_COUNT[ExprId.SUM_BAR_OGTN] = 2


def _tails(order: int, a: int) -> list[Series]:
    """T[n] = (a q^n; q)_inf for n = 1..order+1, built from the top down."""
    tails = [Series.one(order)] * (order + 2)
    for n in range(order, 0, -1):
        tails[n] = tails[n + 1].mul_binomial(-a, n)
    return tails


def _inverse_tails(order: int, a: int) -> list[Series]:
    """1/(a q^n; q)_inf for n = 1..order+1."""
    inv = [Series.one(order)] * (order + 2)
    for n in range(order, 0, -1):
        inv[n] = inv[n + 1].div_binomial(-a, n)
    return inv


def _gen_p(order: int, t: int, form: int) -> Series:
    if form == 0:
        s = Series.one(order)
        for i in range(1, order + 1):
            s = s.div_binomial(-t, i)
        return s
    if form == 1:
        total = Series.one(order)
        inv = Series.one(order)
        for n in range(1, order + 1):
            inv = inv.div_binomial(-1, n)
            total = total + inv.shift(n) * (t ** n)
        return total
    inv = _inverse_tails(order, t)
    total = Series.one(order)
    for n in range(1, order + 1):
        total = total + inv[n].shift(n) * t
    return total


def _gen_d(order: int, t: int, form: int) -> Series:
    if form == 0:
        return pochhammer(-t, 1, None, order)
    total = Series.one(order)
    if form == 1:
        run = Series.one(order)  # (-tq;q)_{n-1}
        for n in range(1, order + 1):
            total = total + run.shift(n) * t
            run = run.mul_binomial(t, n)
        return total
    tails = _tails(order, -t)
    for n in range(1, order + 1):
        total = total + tails[n + 1].shift(n) * t
    return total


def _qq_inf(order: int) -> Series:
    return pochhammer(1, 1, None, order)


def _sum_po_minus_pe(order: int) -> Series:
    total = Series.zero(order)
    inv = Series.one(order)  # 1/(q;q)_{n-1}
    for n in range(1, order + 1):
        total = total + inv.div_binomial(1, n).shift(n)
        inv = inv.div_binomial(-1, n)
    return total


def _sum_bar_ngto(order: int) -> Series:
    total = Series.zero(order)
    inv = Series.one(order)
    for n in range(1, order + 1):
        inv = inv.div_binomial(-1, n)
        total = total + inv.shift(n)
    return total


def _sum_bar_ogen(order: int) -> Series:
    total = _qq_inf(order)
    run = Series.one(order)  # (-q;q)_{n-1}
    for n in range(1, order + 1):
        total = total + run.shift(n)
        run = run.mul_binomial(1, n)
    return total


def _sum_bar_ogtn(order: int, form: int = 0) -> Series:
    plus = Series.one(order)
    minus = Series.one(order)
    total = _qq_inf(order) if form == 0 else Series.one(order)
    for n in range(1, order + 1):
        plus = plus.mul_binomial(1, n)
        minus = minus.mul_binomial(-1, n)
        body = plus if form == 0 else plus - minus
        total = total + body.div_binomial(-1, n).shift(n)
    return total


def _sum_h_on_o(order: int) -> Series:
    return (_sum_bar_ogtn(order, form=1) - 1).halve()


def _sum_olen(order: int) -> Series:
    tails = _tails(order, -1)
    total = Series.zero(order)
    for n in range(1, order + 1):
        total = total + tails[n + 1].shift(n)
    return total


def _sum_h_nlto_bracket(order: int, with_minus: bool) -> Series:
    plus = _tails(order, -1)
    minus = _tails(order, 1) if with_minus else None
    total = Series.zero(order)
    for n in range(1, order + 1):
        body = plus[n] - minus[n] if with_minus else plus[n]
        total = total + body.div_binomial(-1, n).shift(n)
    return total


def _sum_p_diff(order: int, with_minus: bool) -> Series:
    inv_minus = _inverse_tails(order, 1)   # 1/(q^n;q)_inf
    inv_plus = _inverse_tails(order, -1)   # 1/(-q^n;q)_inf
    total = Series.zero(order)
    for n in range(1, order + 1):
        body = inv_minus[n + 1] - inv_plus[n + 1] if with_minus else inv_minus[n + 1]
        total = total + body.div_binomial(1, n).shift(n)
    return total


def _sum_nlto(order: int) -> Series:
    inv = _inverse_tails(order, 1)
    total = Series.zero(order)
    for n in range(1, order + 1):
        total = total + inv[n].shift(n)
    return total


def _phat(order: int) -> Series:
    total = Series.zero(order)
    inv = Series.one(order)  # 1/(q;q)_{n-1}
    for n in range(1, order // 2 + 1):
        total = total + inv.div_binomial(-1, 2 * n).shift(2 * n)
        inv = inv.div_binomial(-1, n)
    return total


def _op_total(order: int) -> Series:
    return pochhammer(-1, 1, None, order) / _qq_inf(order)


def _term(order: int, n: int, body: Callable[[int], Series]) -> Series:
    """q**n * body, evaluating ``body`` only to the order that survives the shift."""
    return body(order - n).truncate(order).shift(n)


def _raw_bar_ngeo(order: int) -> Series:
    plus = _tails(order, -1)
    total = Series.zero(order)
    qq = Series.one(order)  # (q;q)_{n-1}
    for n in range(1, order + 1):
        total = total + _term(order, n, lambda m: plus[n + 1].truncate(m)
                              / (qq.truncate(m) * plus[n].truncate(m)))
        qq = qq.mul_binomial(-1, n)
    return total


def _raw_bar_ngto(order: int) -> Series:
    plus = _tails(order, -1)
    total = Series.zero(order)
    qq = Series.one(order)
    for n in range(1, order + 1):
        qq = qq.mul_binomial(-1, n)  # (q;q)_n
        total = total + _term(order, n, lambda m: plus[n + 1].truncate(m)
                              / (qq.truncate(m) * plus[n + 1].truncate(m)))
    return total


def _raw_bar_og(order: int, strict: bool) -> Series:
    minus = _tails(order, 1)  # (q^n;q)_inf
    total = _qq_inf(order)
    run = Series.one(order)  # (-q;q)_{n-1}, or (-q;q)_n when strict
    for n in range(1, order + 1):
        if strict:
            run = run.mul_binomial(1, n)
        tail = minus[n + 1] if strict else minus[n]
        total = total + _term(order, n, lambda m: run.truncate(m) * tail.truncate(m)
                              / minus[n].truncate(m))
        if not strict:
            run = run.mul_binomial(1, n)
    return total


def _raw_tilde_olen(order: int) -> Series:
    plus = _tails(order, -1)
    total = Series.zero(order)
    qq = Series.one(order)
    for n in range(1, order + 1):
        qq = qq.mul_binomial(-1, n)
        total = total + _term(order, n, lambda m: plus[n + 1].truncate(m) * qq.truncate(m)
                              / qq.truncate(m))
    return total


def _raw_tilde_oltn(order: int) -> Series:
    plus = _tails(order, -1)
    total = Series.zero(order)
    prev = Series.one(order)  # (q;q)_{n-1}
    for n in range(1, order + 1):
        cur = prev.mul_binomial(-1, n)
        total = total + _term(order, n, lambda m: plus[n].truncate(m) * prev.truncate(m)
                              / cur.truncate(m))
        prev = cur
    return total


def _raw_tilde_nleo(order: int) -> Series:
    minus = _tails(order, 1)
    total = Series.zero(order)
    prev = Series.one(order)  # (-q;q)_{n-1}
    for n in range(1, order + 1):
        cur = prev.mul_binomial(1, n)
        total = total + _term(order, n, lambda m: prev.truncate(m)
                              / (cur.truncate(m) * minus[n + 1].truncate(m)))
        prev = cur
    return total


def _raw_tilde_nlto(order: int) -> Series:
    minus = _tails(order, 1)
    total = Series.zero(order)
    run = Series.one(order)
    for n in range(1, order + 1):
        total = total + _term(order, n, lambda m: run.truncate(m)
                              / (run.truncate(m) * minus[n].truncate(m)))
        run = run.mul_binomial(1, n)
    return total


_BUILDERS: dict[ExprId, Callable[..., Series]] = {
    ExprId.SUM_PO_MINUS_PE: _sum_po_minus_pe,
    ExprId.SUM_BAR_NGTO: _sum_bar_ngto,
    ExprId.SUM_BAR_OGEN: _sum_bar_ogen,
    ExprId.SUM_BAR_OGTN: _sum_bar_ogtn,
    ExprId.SUM_H_ON_O: _sum_h_on_o,
    ExprId.SUM_OLEN: _sum_olen,
    ExprId.SUM_H_NLTO: lambda order: _sum_h_nlto_bracket(order, False),
    ExprId.SUM_H_NLTO_O: lambda order: _sum_h_nlto_bracket(order, True).halve(),
    ExprId.SUM_P1_DIFF: lambda order: _sum_p_diff(order, False),
    ExprId.SUM_P2_DIFF: lambda order: _sum_p_diff(order, True).halve(),
    ExprId.SUM_NLTO: _sum_nlto,
    ExprId.PHAT: _phat,
    ExprId.OP_TOTAL: _op_total,
    ExprId.RAW_BAR_NGEO: _raw_bar_ngeo,
    ExprId.RAW_BAR_NGTO: _raw_bar_ngto,
    ExprId.RAW_BAR_OGEN: lambda order: _raw_bar_og(order, strict=False),
    ExprId.RAW_BAR_OGTN: lambda order: _raw_bar_og(order, strict=True),
    ExprId.RAW_TILDE_OLEN: _raw_tilde_olen,
    ExprId.RAW_TILDE_OLTN: _raw_tilde_oltn,
    ExprId.RAW_TILDE_NLEO: _raw_tilde_nleo,
    ExprId.RAW_TILDE_NLTO: _raw_tilde_nlto,
}

_FIXED_T = {ExprId.GEN_P1: (ExprId.GEN_P, 1), ExprId.GEN_Pm1: (ExprId.GEN_P, -1),
            ExprId.GEN_D1: (ExprId.GEN_D, 1), ExprId.GEN_Dm1: (ExprId.GEN_D, -1)}


def build(expr: ExprId | str, order: int = DEFAULT_ORDER, t: int | None = None,
          form: int = 0) -> Series:
    """Truncated expansion of a named generating function.

    ``t`` is only read by GEN_P and GEN_D (default 1).  ``form`` picks one of
    the equivalent forms for expressions that have several
    (see ``FORM_COUNT``); all forms must agree, which is what the verifier
    checks.
    """
    expr = ExprId(expr)
    if order < 1:
        raise ValueError("order must be at least 1")
    if not 0 <= form < FORM_COUNT.get(expr, 1):
        raise ValueError(f"{expr.value} has no form {form}")
    if expr in _FIXED_T:
        expr, t = _FIXED_T[expr]
    if expr is ExprId.GEN_P:
        return _gen_p(order, 1 if t is None else t, form)
    if expr is ExprId.GEN_D:
        return _gen_d(order, 1 if t is None else t, form)
    if expr is ExprId.SUM_BAR_OGTN:
        return _sum_bar_ogtn(order, form)
    return _BUILDERS[expr](order)
