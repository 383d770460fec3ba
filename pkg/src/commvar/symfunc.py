"""Symmetric functions with rational-function coefficients.

Everything is stored in the power-sum basis, where the two pairings we
need are diagonal: the Hall inner product satisfies
``<p_lam, p_mu> = delta * z_lam`` and the principal specialization acts
by ``p_k -> 1/(1 - x^k)``.  The complete homogeneous and Schur bases
exist as conversion views; the change of basis to Schur functions goes
through symmetric-group character values computed by the
Murnaghan-Nakayama border-strip recursion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import Poly, RatFunc
from .partitions import Partition, partitions_of


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam at cycle type mu.

    Both partitions must have the same size.  Values are computed by
    peeling border strips of length mu_1, with the sign given by the
    strip height; results are memoized on (lam, mu).
    """
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n} but |{mu}| = {mu.n}")
    return _mn(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    m = len(lam)
    betas = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        newbetas = sorted((bset - {b}) | {nb}, reverse=True)
        newparts = tuple(
            p for p in (newbetas[i] - (m - 1 - i) for i in range(m)) if p > 0
        )
        value = _mn(newparts, rest)
        total += -value if height % 2 else value
    return total


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    # h_n = sum over mu of p_mu / z_mu
    return tuple(
        (mu, Fraction(1, mu.centralizer_order())) for mu in partitions_of(n)
    )


@lru_cache(maxsize=None)
def _schur_in_p(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    # s_lam = sum over mu of chi^lam(mu) p_mu / z_mu
    out = []
    for mu in partitions_of(lam.n):
        chi = mn_character(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, mu.centralizer_order())))
    return tuple(out)


def _concat(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a.parts + b.parts, reverse=True))


class SymFunc:
    """Homogeneous symmetric function of a fixed degree, in the p-basis.

    ``terms`` maps partitions of ``degree`` to RatFunc coefficients;
    zero coefficients are never stored.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Partition, RatFunc] = {}
        for key, value in (terms or {}).items():
            if not isinstance(key, Partition):
                key = Partition(key)
            if key.n != degree:
                raise ValueError(f"key {key} is not a partition of {degree}")
            value = RatFunc.of(value)
            if value:
                clean[key] = value
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def unit(cls) -> "SymFunc":
        return cls(0, {Partition(): RatFunc(1)})

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree)

    @classmethod
    def from_p(cls, lam: Partition) -> "SymFunc":
        return cls(lam.n, {lam: RatFunc(1)})

    @classmethod
    def from_h(cls, lam: Partition) -> "SymFunc":
        result = cls.unit()
        for part in lam.parts:
            result = result * cls(part, dict(_h_in_p(part)))
        return result

    @classmethod
    def schur(cls, lam: Partition) -> "SymFunc":
        return cls(lam.n, dict(_schur_in_p(lam)))

    # -- basic algebra ----------------------------------------------------

    def coeff(self, lam: Partition) -> RatFunc:
        return self.terms.get(lam, RatFunc(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.degree == other.degree and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.terms.items(), key=lambda kv: kv[0].parts))))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = dict(self.terms)
        for key, value in other.terms.items():
            out[key] = out.get(key, RatFunc(0)) + value
        return SymFunc(self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = RatFunc.of(c)
        if not c:
            return SymFunc(self.degree)
        return SymFunc(
            self.degree, {key: value * c for key, value in self.terms.items()}
        )

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        """Product in the ring of symmetric functions; degrees add."""
        out: dict[Partition, RatFunc] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = _concat(ka, kb)
                prod = va * vb
                out[key] = out.get(key, RatFunc(0)) + prod
        return SymFunc(self.degree + other.degree, out)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, {k: fn(v) for k, v in self.terms.items()})

    # -- pairings and specializations --------------------------------------

    def hall(self, other: "SymFunc") -> RatFunc:
        """Hall inner product, bilinear over the coefficient field.

        Components of different degrees pair to zero by convention, so
        graded characters can be paired degreewise.
        """
        if self.degree != other.degree:
            return RatFunc(0)
        acc = RatFunc(0)
        for lam in partitions_of(self.degree):
            a = self.terms.get(lam)
            if a is None:
                continue
            b = other.terms.get(lam)
            if b is None:
                continue
            acc = acc + a * b * lam.centralizer_order()
        return acc

    def to_schur(self) -> dict[Partition, RatFunc]:
        """Schur expansion coefficients c_lam with f = sum c_lam s_lam."""
        out: dict[Partition, RatFunc] = {}
        for lam in partitions_of(self.degree):
            acc = RatFunc(0)
            for mu, coeff in self.terms.items():
                chi = mn_character(lam, mu)
                if chi:
                    acc = acc + coeff * chi
            if acc:
                out[lam] = acc
        return out

    def principal_spec(self, power: int = 1) -> RatFunc:
        """Principal specialization, p_k -> 1/(1 - x^(power*k)).

        With power=1 the ambient variable is read as the specialization
        variable itself; power=2 realizes the square-variable
        specialization used for Poincare polynomials, where the
        coefficients already live in the same variable.
        """
        acc = RatFunc(0)
        for lam in partitions_of(self.degree):
            coeff = self.terms.get(lam)
            if coeff is None:
                continue
            den = Poly.constant(1)
            for part in lam.parts:
                den = den * (Poly.constant(1) - Poly.monomial(power * part))
            acc = acc + coeff * RatFunc(1, den)
        return acc

    def principal_spec_at(self, value: Fraction) -> Fraction:
        """Principal specialization evaluated at an exact scalar.

        Coefficients must be constants (specialize the grading variable
        first).  Requires value**k != 1 for every part size k.
        """
        acc = Fraction(0)
        for lam, coeff in self.terms.items():
            if not coeff.is_polynomial() or coeff.num.degree() > 0:
                raise ValueError("principal_spec_at needs constant coefficients")
            term = coeff.num.constant_term()
            for part in lam.parts:
                d = 1 - value**part
                if d == 0:
                    raise ZeroDivisionError(
                        f"specialization pole: 1 - ({value})^{part} = 0"
                    )
                term /= d
            acc += term
        return acc

    # -- rendering -----------------------------------------------------------

    def render(self, var: str = "u") -> str:
        return _render_basis(
            ((lam, self.terms[lam]) for lam in partitions_of(self.degree) if lam in self.terms),
            "p",
            var,
        )

    def render_schur(self, var: str = "u") -> str:
        schur = self.to_schur()
        return _render_basis(
            ((lam, schur[lam]) for lam in partitions_of(self.degree) if lam in schur),
            "s",
            var,
        )

    def __repr__(self):
        return f"SymFunc({self.render()})"


def _render_basis(items, symbol: str, var: str) -> str:
    pieces = []
    for lam, coeff in items:
        label = f"{symbol}[{','.join(str(p) for p in lam.parts)}]"
        rendered = coeff.render(var)
        if rendered == "1":
            sign, body = "+", label
        elif rendered == "-1":
            sign, body = "-", label
        elif " " in rendered or "/" in rendered:
            sign, body = "+", f"({rendered})*{label}"
        elif rendered.startswith("-"):
            sign, body = "-", f"{rendered[1:]}*{label}"
        else:
            sign, body = "+", f"{rendered}*{label}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    if not pieces:
        return "0"
    return " ".join(pieces)


def hall_inner(f: SymFunc, g: SymFunc) -> RatFunc:
    return f.hall(g)


def to_schur(f: SymFunc) -> dict[Partition, RatFunc]:
    return f.to_schur()


def principal_spec(f: SymFunc, power: int = 1) -> RatFunc:
    return f.principal_spec(power)


def q_pochhammer(n: int, power: int = 1) -> Poly:
    """The product (1 - x^power)(1 - x^(2*power)) ... (1 - x^(n*power))."""
    acc = Poly.constant(1)
    for i in range(1, n + 1):
        acc = acc * (Poly.constant(1) - Poly.monomial(power * i))
    return acc
