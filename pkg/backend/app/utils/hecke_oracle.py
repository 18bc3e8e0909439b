# app/utils/hecke_oracle.py
"""
Exact word-problem oracle for Γn.

Γn / <Δ> is the Hecke group H(n+1) = <f, h : f^(n+1) = h^2 = 1> with f = a and
h = b^-1 a. It is realised inside PSL(2, R) by matrices over Z[λ], λ = 2cos(π/(n+1)):

    a -> [[λ, -1], [1, 0]]    (elliptic, order n+1 up to sign)
    b -> [[1,  λ], [0, 1]]    (parabolic)

The kernel of Γn -> PSL(2, R) is the centre <Δ>, Δ = a^(n+1), and the exponent
functional phi is nonzero on every nontrivial power of Δ. So w = id in Γn exactly
when rho(w) = ±I and phi(w) = 0. Every decision here is a ring equality; no real
numbers are ever compared.

For n = 1 (λ = 0) the uniform images collapse (b -> I), so Γ1 / <Δ>, the infinite
dihedral group, is realised by the affine maps x -> -x, x -> x + 1 instead.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import sympy

from app.exceptions import ScopeError
from app.utils.words import Generator, GroupContext, Word


logger = logging.getLogger(__name__)

_x, _z = sympy.symbols("x z")


def min_poly_of_2cos_pi_over(q, max_q=64):
    """
    Monic minimal polynomial of 2cos(π/q) as integer coefficients, constant term first.

    Φ_2q(z) is palindromic of degree 2d, so z^-d Φ_2q(z) = p_0 + Σ p_k (z^k + z^-k),
    and z^k + z^-k = D_k(z + 1/z) with D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
    """
    if q < 2:
        raise ScopeError(f"q must be >= 2, got {q}")
    if q > max_q:
        raise ScopeError(f"q = {q} exceeds the supported bound {max_q}")

    cyclotomic = sympy.Poly(sympy.cyclotomic_poly(2 * q, _z), _z)
    coeffs = [int(c) for c in reversed(cyclotomic.all_coeffs())]
    half = (len(coeffs) - 1) // 2

    chebyshev = [sympy.Poly(2, _x), sympy.Poly(_x, _x)]
    while len(chebyshev) <= half:
        chebyshev.append(sympy.Poly(_x, _x) * chebyshev[-1] - chebyshev[-2])

    psi = sympy.Poly(coeffs[half], _x)
    for k in range(1, half + 1):
        psi += coeffs[half + k] * chebyshev[k]

    if psi.degree() != sympy.totient(2 * q) // 2 or psi.LC() != 1:
        raise ScopeError(f"unexpected minimal polynomial {psi.as_expr()} for q = {q}")
    return tuple(int(c) for c in reversed(psi.all_coeffs()))


@dataclass(frozen=True)
class AlgInt:
    """
    Element of Z[λ] as the residue polynomial in λ modulo the monic minimal polynomial.
    coeffs has exactly deg(modulus) entries, so equality is coefficient equality.
    """

    coeffs: tuple
    modulus: tuple

    @classmethod
    def of(cls, value, modulus):
        degree = len(modulus) - 1
        return cls((value,) + (0,) * (degree - 1), modulus)

    @classmethod
    def lam(cls, modulus):
        degree = len(modulus) - 1
        if degree == 1:
            # λ is rational: λ + m0 = 0
            return cls.of(-modulus[0], modulus)
        return cls((0, 1) + (0,) * (degree - 2), modulus)

    def _reduce(self, raw):
        degree = len(self.modulus) - 1
        raw = list(raw)
        for top in range(len(raw) - 1, degree - 1, -1):
            c = raw[top]
            if c:
                raw[top] = 0
                for j in range(degree):
                    raw[top - degree + j] -= c * self.modulus[j]
        return AlgInt(tuple(raw[:degree]), self.modulus)

    def __add__(self, other):
        return AlgInt(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.modulus)

    def __sub__(self, other):
        return AlgInt(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)), self.modulus)

    def __neg__(self):
        return AlgInt(tuple(-x for x in self.coeffs), self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgInt(tuple(other * x for x in self.coeffs), self.modulus)
        product = [0] * (2 * len(self.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    product[i + j] += x * y
        return self._reduce(product)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def is_unit_sign(self):
        """True for 1 or -1."""
        head, tail = self.coeffs[0], self.coeffs[1:]
        return head in (1, -1) and not any(tail)


@dataclass(frozen=True)
class ProjMatrix:
    """2x2 matrix over Z[λ], compared up to a global sign."""

    a: AlgInt
    b: AlgInt
    c: AlgInt
    d: AlgInt

    @classmethod
    def identity(cls, modulus):
        one, zero = AlgInt.of(1, modulus), AlgInt.of(0, modulus)
        return cls(one, zero, zero, one)

    @classmethod
    def from_ints(cls, rows, modulus):
        (a, b), (c, d) = rows
        return cls(*(AlgInt.of(v, modulus) for v in (a, b, c, d)))

    def __matmul__(self, other):
        return ProjMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return ProjMatrix(-self.a, -self.b, -self.c, -self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def proj_eq(self, other):
        return self == other or self == -other

    def is_identity(self):
        return self.proj_eq(ProjMatrix.identity(self.a.modulus))

    def power(self, k):
        result = ProjMatrix.identity(self.a.modulus)
        for _ in range(k):
            result = result @ self
        return result

    def sign_normalized(self):
        """Representative of ±M whose first nonzero coefficient is positive."""
        for entry in self.entries():
            for coeff in entry.coeffs:
                if coeff:
                    return self if coeff > 0 else -self
        return self

    def key(self):
        normal = self.sign_normalized()
        return tuple(coeff for entry in normal.entries() for coeff in entry.coeffs)


@dataclass(frozen=True)
class GeneratorImages:
    a_powers: tuple
    b: ProjMatrix
    b_step: ProjMatrix


@lru_cache(maxsize=None)
def generator_images(ctx: GroupContext) -> GeneratorImages:
    modulus = ctx.min_poly
    one, zero = AlgInt.of(1, modulus), AlgInt.of(0, modulus)
    if ctx.q == 2:
        a_image = ProjMatrix.from_ints(((-1, 0), (0, 1)), modulus)
        b_image = ProjMatrix.from_ints(((1, 1), (0, 1)), modulus)
    else:
        lam = AlgInt.lam(modulus)
        a_image = ProjMatrix(lam, -one, one, zero)
        b_image = ProjMatrix(one, lam, zero, one)

    # a^q = ±I, so the exponent only matters modulo q
    a_powers = tuple(a_image.power(r) for r in range(ctx.q))
    b_step = ProjMatrix(zero, b_image.b, zero, zero)
    return GeneratorImages(a_powers=a_powers, b=b_image, b_step=b_step)


def _b_power_matrix(images, k):
    # rho(b)^k = I + kN since N^2 = 0
    step = images.b_step
    modulus = step.b.modulus
    return ProjMatrix(
        AlgInt.of(1, modulus), step.b * k, AlgInt.of(0, modulus), AlgInt.of(1, modulus)
    )


def rho(w: Word, ctx: GroupContext) -> ProjMatrix:
    images = generator_images(ctx)
    result = ProjMatrix.identity(ctx.min_poly)
    for gen, exp in w.syllables:
        if gen == Generator.A:
            factor = images.a_powers[exp % ctx.q]
        elif gen == Generator.B:
            factor = _b_power_matrix(images, exp)
        else:
            raise ValueError(f"rho is defined on the a, b alphabet only, got {gen!r}")
        result = result @ factor
    return result


def phi(w: Word, ctx: GroupContext) -> int:
    return ctx.phi_a * w.exponent_sum(Generator.A) + ctx.phi_b * w.exponent_sum(Generator.B)


def oracle_is_identity(w: Word, ctx: GroupContext) -> bool:
    if phi(w, ctx) != 0:
        return False
    return rho(w, ctx).is_identity()


def oracle_equal(u: Word, v: Word, ctx: GroupContext) -> bool:
    return element_key(u, ctx) == element_key(v, ctx)


def element_key(w: Word, ctx: GroupContext):
    """Hashable invariant of the group element: equal keys iff equal elements of Γn."""
    return rho(w, ctx).key(), phi(w, ctx)


def b_power_of(w: Word, ctx: GroupContext):
    """Return k when w = b^k in Γn, otherwise None."""
    images = generator_images(ctx)
    step = images.b_step.b
    pivot = next(i for i, coeff in enumerate(step.coeffs) if coeff)
    matrix = rho(w, ctx)
    for candidate in (matrix, -matrix):
        offset = candidate.b.coeffs[pivot]
        if offset % step.coeffs[pivot]:
            continue
        k = offset // step.coeffs[pivot]
        if candidate == _b_power_matrix(images, k) and phi(w, ctx) == k * ctx.phi_b:
            return k
    return None
