"""Exact sparse arithmetic for Laurent polynomials in a, q, t.

Exponents of q and t are stored doubled (fields q2, t2), so q2 = -1 encodes
q^(-1/2) and every stored exponent is a plain int.  Half powers only ever
enter through (qt)^(1/2) pairs and isolated q^(1/2) factors, so halves are
the finest granularity needed; exponents of a are stored as-is.

A polynomial maps exponent triples (ea, q2, t2) to nonzero integer
coefficients; the zero polynomial has no terms.  Coefficients are Python
ints, hence exact at any size.  Values of the shape num / (1-t)^d live in
:class:`Invariant`, which cancels every (1-t) factor out of num on
construction, so equality of invariants is structural equality.

Term order everywhere (serialization, rendering) is lexicographic on
(ea, q2, t2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Union


class ExponentTriple(NamedTuple):
    """Exponent key of one term: a-power and doubled q-, t-powers."""

    ea: int
    q2: int
    t2: int


_TripleLike = Union[ExponentTriple, tuple]


class LaurentPoly:
    """Sparse Laurent polynomial in a, q^(1/2), t^(1/2) over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[_TripleLike, int] | None = None):
        clean: dict[ExponentTriple, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff != 0:
                    clean[ExponentTriple(*exp)] = coeff
        self._terms = clean

    # -- construction helpers -------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def monomial(coeff: int = 1, ea: int = 0, q2: int = 0, t2: int = 0) -> "LaurentPoly":
        return LaurentPoly({ExponentTriple(ea, q2, t2): coeff})

    # -- inspection ------------------------------------------------------

    def items(self) -> Iterator[tuple[ExponentTriple, int]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[ExponentTriple, int]]:
        return sorted(self._terms.items())

    def coeff(self, exp: _TripleLike) -> int:
        return self._terms.get(ExponentTriple(*exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other) if other else LaurentPoly()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(value: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.monomial(value) if value else LaurentPoly()
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        result = LaurentPoly()
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        result = LaurentPoly()
        result._terms = {exp: -c for exp, c in self._terms.items()}
        return result

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[ExponentTriple, int] = {}
        for (ea1, q1, t1), c1 in self._terms.items():
            for (ea2, q2, t2), c2 in other._terms.items():
                exp = ExponentTriple(ea1 + ea2, q1 + q2, t1 + t2)
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        result = LaurentPoly()
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("negative powers are supported only for monomials; invert exponents instead")
        result = ONE
        for _ in range(power):
            result = result * self
        return result

    # -- structure maps ----------------------------------------------------

    def swap_qt(self) -> "LaurentPoly":
        """Exchange the q- and t-exponents of every term."""
        result = LaurentPoly()
        result._terms = {ExponentTriple(e.ea, e.t2, e.q2): c for e, c in self._terms.items()}
        return result

    def euler_sign(self) -> "LaurentPoly":
        """Substitute (qt)^(1/2) -> -(qt)^(1/2), negating the odd terms.

        Every term must have q2 and t2 of equal parity; mixed-parity terms
        cannot be written with a (qt)^(1/2) factor and are rejected.
        """
        out: dict[ExponentTriple, int] = {}
        for exp, c in self._terms.items():
            if (exp.q2 - exp.t2) % 2 != 0:
                raise ValueError(
                    f"term a^{exp.ea} q2={exp.q2} t2={exp.t2} mixes half-integer parities"
                )
            out[exp] = -c if exp.q2 % 2 else c
        result = LaurentPoly()
        result._terms = out
        return result

    def is_even_series(self) -> bool:
        """True iff every term involves only integer powers of q and t."""
        return all(e.q2 % 2 == 0 and e.t2 % 2 == 0 for e in self._terms)

    # -- rendering ----------------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, c in self.sorted_items():
            factors: list[str] = []
            for sym, e in (("a", 2 * exp.ea), ("q", exp.q2), ("t", exp.t2)):
                if e == 0:
                    continue
                if e % 2 == 0:
                    k = e // 2
                    factors.append(sym if k == 1 else f"{sym}^{k}")
                else:
                    factors.append(f"{sym}^({e}/2)")
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, c in self.sorted_items():
            factors: list[str] = []
            if exp.ea:
                factors.append("a" if exp.ea == 1 else f"a^{{{exp.ea}}}")
            q2, t2 = exp.q2, exp.t2
            if q2 % 2 and t2 % 2:
                # factor one (qt)^(1/2), signed to keep the leftovers small
                if q2 > 0:
                    factors.append("(qt)^{1/2}")
                    q2, t2 = q2 - 1, t2 - 1
                else:
                    factors.append("(qt)^{-1/2}")
                    q2, t2 = q2 + 1, t2 + 1
            for sym, e in (("q", q2), ("t", t2)):
                if e == 0:
                    continue
                if e % 2 == 0:
                    k = e // 2
                    factors.append(sym if k == 1 else f"{sym}^{{{k}}}")
                else:
                    factors.append(f"{sym}^{{{e}/2}}")
            mag = abs(c)
            body = " ".join(factors) if factors else str(mag)
            if factors and mag != 1:
                body = f"{mag} {body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.text()}')"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.monomial(1)
A = LaurentPoly.monomial(1, ea=1)
Q = LaurentPoly.monomial(1, q2=2)
T = LaurentPoly.monomial(1, t2=2)


def q_power(k: int) -> LaurentPoly:
    """q^k as a polynomial (k may be negative)."""
    return LaurentPoly.monomial(1, q2=2 * k)


def t_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, t2=2 * k)


def monomial_ratio(
    p: LaurentPoly, r: LaurentPoly
) -> Optional[tuple[int, ExponentTriple, int]]:
    """If p = c * x^e * r for a single signed monomial c * x^e, return it.

    Returns (sign(c), e, |c|), or None when p is not a scalar-monomial
    multiple of r (including p = 0).  r must be nonzero.
    """
    if not r:
        raise ValueError("reference polynomial must be nonzero")
    if not p or len(p) != len(r):
        return None
    ep, cp = min(p.sorted_items())
    er, cr = min(r.sorted_items())
    if cp % cr != 0:
        return None
    ratio = cp // cr
    if ratio == 0:
        return None
    shift = ExponentTriple(ep.ea - er.ea, ep.q2 - er.q2, ep.t2 - er.t2)
    for exp, c in r.items():
        target = ExponentTriple(exp.ea + shift.ea, exp.q2 + shift.q2, exp.t2 + shift.t2)
        if p.coeff(target) != ratio * c:
            return None
    sign = 1 if ratio > 0 else -1
    return sign, shift, abs(ratio)


def divide_exact_by_one_minus_t(p: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / (1 - t); raises ValueError when not divisible.

    Works per (ea, q2, t2-parity) slice: within a slice, u_j = c_j + u_{j-2}
    solves (1 - t) u = c from the bottom exponent up, and divisibility is
    equivalent to the recursion closing with u = 0 at the top.
    """
    if not p:
        return ZERO
    slices: dict[tuple[int, int, int], dict[int, int]] = {}
    for exp, c in p.items():
        slices.setdefault((exp.ea, exp.q2, exp.t2 % 2), {})[exp.t2] = c
    out: dict[ExponentTriple, int] = {}
    for (ea, q2, _), coeffs in slices.items():
        lo, hi = min(coeffs), max(coeffs)
        prev = 0
        for t2 in range(lo, hi + 1, 2):
            u = coeffs.get(t2, 0) + prev
            if t2 == hi:
                if u != 0:
                    raise ValueError("polynomial is not divisible by 1 - t")
            elif u:
                out[ExponentTriple(ea, q2, t2)] = u
            prev = u
    result = LaurentPoly()
    result._terms = out
    return result


@dataclass(frozen=True)
class Invariant:
    """A Laurent polynomial divided by (1 - t)^dpow, kept in lowest terms."""

    num: LaurentPoly
    dpow: int = 0

    def __post_init__(self) -> None:
        if self.dpow < 0:
            raise ValueError("denominator power must be nonnegative")
        num, dpow = self.num, self.dpow
        if not num:
            dpow = 0
        while dpow > 0:
            try:
                num = divide_exact_by_one_minus_t(num)
            except ValueError:
                break
            dpow -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "dpow", dpow)

    def __add__(self, other: "Invariant") -> "Invariant":
        d = max(self.dpow, other.dpow)
        scale1 = (ONE - T) ** (d - self.dpow)
        scale2 = (ONE - T) ** (d - other.dpow)
        return Invariant(self.num * scale1 + other.num * scale2, d)

    def __neg__(self) -> "Invariant":
        return Invariant(-self.num, self.dpow)

    def __sub__(self, other: "Invariant") -> "Invariant":
        return self + (-other)

    def __mul__(self, other: Union[LaurentPoly, int]) -> "Invariant":
        return Invariant(self.num * other, self.dpow)

    __rmul__ = __mul__

    def text(self) -> str:
        if self.dpow == 0:
            return self.num.text()
        denom = "(1-t)" if self.dpow == 1 else f"(1-t)^{self.dpow}"
        return f"({self.num.text()}) / {denom}"

    def latex(self) -> str:
        if self.dpow == 0:
            return self.num.latex()
        denom = "1-t" if self.dpow == 1 else f"(1-t)^{{{self.dpow}}}"
        return f"\\frac{{{self.num.latex()}}}{{{denom}}}"

    def __str__(self) -> str:
        return self.text()


def specialize_count(v: Invariant) -> int:
    """Numerator of v at a = 0, q = t = 1 (the denominator is ignored)."""
    return sum(c for exp, c in v.num.items() if exp.ea == 0)


# -- JSON forms -----------------------------------------------------------
#
# Term: {"a": int, "q2": int, "t2": int, "c": "<decimal int>"}; coefficients
# travel as strings so arbitrary-precision values survive any JSON reader.


def poly_to_json(p: LaurentPoly) -> list[dict]:
    return [
        {"a": exp.ea, "q2": exp.q2, "t2": exp.t2, "c": str(c)}
        for exp, c in p.sorted_items()
    ]


def poly_from_json(items: Iterable[Mapping]) -> LaurentPoly:
    terms: dict[ExponentTriple, int] = {}
    for item in items:
        exp = ExponentTriple(int(item["a"]), int(item["q2"]), int(item["t2"]))
        if exp in terms:
            raise ValueError(f"duplicate term {exp} in serialized polynomial")
        terms[exp] = int(item["c"])
    return LaurentPoly(terms)


def invariant_to_json(v: Invariant) -> dict:
    return {"num": poly_to_json(v.num), "one_minus_t_pow": v.dpow}


def invariant_from_json(obj: Mapping) -> Invariant:
    return Invariant(poly_from_json(obj["num"]), int(obj["one_minus_t_pow"]))
