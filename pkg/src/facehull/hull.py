"""Exact membership tests for the hull spanned by the origin and all truncations of g.

Two independent oracles decide whether a nonnegative vector f lies in C_g,
the convex hull of the origin and the truncations g^1..g^d:

* ``membership_inequalities`` checks f_1 <= g_1 and the cross-multiplied
  pair inequalities f_i*g_j <= f_j*g_i for all j < i.
* ``membership_coefficients`` solves the triangular system expressing f over
  the truncation basis and checks sign and mass of the coefficients.

Generators g must be in zero-tail normal form: once an entry is zero, all
later entries are zero.  A vector with an internal zero (zero entry followed
by a positive one) is rejected as malformed, since no clique vector or face
vector ever has that shape.  f may have positive entries only where g does;
support beyond g puts f outside C_g by definition.  All arithmetic is exact
(integers and fractions); there are no tolerances anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .vectors import IntVector, as_vector

INSIDE = "inside"
OUTSIDE = "outside"


class HullInstance(NamedTuple):
    """A validated generator vector together with its support length."""

    g: IntVector
    support: int

    @classmethod
    def from_vector(cls, g: "IntVector | Iterable[int]") -> "HullInstance":
        gv = as_vector(g)
        s = gv.support()
        for k in range(1, s):
            if gv[k] == 0:
                raise ValueError(
                    f"generator has an internal zero at position {k} "
                    "(zero entry followed by a positive one)"
                )
        return cls(gv, s)


@dataclass(frozen=True)
class HullViolation:
    """The exact inequality a rejected vector fails.

    kind "pair": f_i*g_j > f_j*g_i for the recorded (i, j) with j < i;
    kind "first_coordinate": f_1 > g_1;
    kind "support": f_i > 0 beyond the support of g (j is the support).
    lhs/rhs are the two exact integers whose comparison fails (lhs > rhs).
    """

    kind: str
    i: int
    j: int
    lhs: int
    rhs: int

    def holds(self, f: IntVector, g: IntVector) -> bool:
        """Re-derive the violation from f and g; True iff it really fails."""
        if self.kind == "pair":
            return f[self.i] * g[self.j] > f[self.j] * g[self.i]
        if self.kind == "first_coordinate":
            return f[1] > g[1]
        if self.kind == "support":
            return f[self.i] > 0 and g[self.i] == 0 and self.i > self.j
        return False

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class HullCertificate:
    """Machine-checkable outcome of a membership test.

    Inside: ``coefficients`` are exact rationals c_1..c_d with c >= 0,
    sum(c) <= 1 and sum_j c_j * g^j = f entrywise.  Outside: ``violation``
    names one exactly-failing inequality.
    """

    verdict: str
    method: str
    d: int
    coefficients: Optional[tuple[Fraction, ...]] = None
    violation: Optional[HullViolation] = None

    @property
    def is_inside(self) -> bool:
        return self.verdict == INSIDE

    def to_json_dict(self) -> dict:
        out = {"verdict": self.verdict, "method": self.method, "d": self.d}
        if self.coefficients is not None:
            out["coefficients"] = [
                {"num": c.numerator, "den": c.denominator} for c in self.coefficients
            ]
        if self.violation is not None:
            out["violation"] = self.violation.to_json_dict()
        return out


def truncation(g: "IntVector | Iterable[int]", k: int) -> IntVector:
    """Copy of g with every coordinate beyond the k-th zeroed."""
    gv = as_vector(g)
    if not (1 <= k <= len(gv)):
        raise IndexError(f"truncation index {k} out of range [1, {len(gv)}]")
    return IntVector(tuple(gv)[:k] + (0,) * (len(gv) - k))


def _prepare(f, g) -> tuple[IntVector, IntVector, int, int, Optional[HullViolation]]:
    """Validate both vectors, compute dimensions and the support violation, if any.

    Vectors of different lengths are zero-extended to a common effective
    length; this is exact, since count vectors conceptually carry infinite
    zero tails.
    """
    fv = as_vector(f)
    inst = HullInstance.from_vector(g)
    d = max(len(fv), len(inst.g))
    s = inst.support
    for k in range(s + 1, d + 1):
        if fv[k] > 0:
            return fv, inst.g, d, s, HullViolation("support", k, s, fv[k], 0)
    return fv, inst.g, d, s, None


def membership_inequalities(f, g) -> HullCertificate:
    """Decide f in C_g by the pairwise cross-multiplication criterion.

    Outside verdicts name the lexicographically first violated inequality
    (the f_1 > g_1 flag first, then pairs ordered by smallest j, then
    smallest i).  Inside verdicts are completed with the coefficient vector,
    which is a construction; the verdict itself only uses the inequalities.
    """
    fv, gv, d, s, bad = _prepare(f, g)
    if bad is not None:
        return HullCertificate(OUTSIDE, "inequalities", d, violation=bad)
    if fv[1] > gv[1]:
        return HullCertificate(
            OUTSIDE, "inequalities", d,
            violation=HullViolation("first_coordinate", 1, 1, fv[1], gv[1]),
        )
    for j in range(1, s + 1):
        for i in range(j + 1, s + 1):
            if fv[i] * gv[j] > fv[j] * gv[i]:
                return HullCertificate(
                    OUTSIDE, "inequalities", d,
                    violation=HullViolation("pair", i, j, fv[i] * gv[j], fv[j] * gv[i]),
                )
    return HullCertificate(
        INSIDE, "inequalities", d, coefficients=_coefficients(fv, gv, d, s)
    )


def membership_coefficients(f, g) -> HullCertificate:
    """Decide f in C_g by solving the triangular truncation-basis system.

    With s_k = f_k/g_k on the support of g and s_{sup+1} = 0, the basis
    coefficients are c_k = s_k - s_{k+1}; f lies in C_g iff every c_k >= 0
    and s_1 <= 1.  The full coefficient vector is emitted either way the
    verdict falls, padded with zeros beyond the support.
    """
    fv, gv, d, s, bad = _prepare(f, g)
    if bad is not None:
        return HullCertificate(OUTSIDE, "coefficients", d, violation=bad)
    ratios = [Fraction(fv[k], gv[k]) for k in range(1, s + 1)]
    coeffs = _coefficients(fv, gv, d, s, ratios)
    if s and ratios[0] > 1:
        return HullCertificate(
            OUTSIDE, "coefficients", d, coefficients=coeffs,
            violation=HullViolation("first_coordinate", 1, 1, fv[1], gv[1]),
        )
    for k in range(1, s + 1):
        if coeffs[k - 1] < 0:
            # c_k < 0 is exactly the adjacent pair (k+1, k) failing
            return HullCertificate(
                OUTSIDE, "coefficients", d, coefficients=coeffs,
                violation=HullViolation(
                    "pair", k + 1, k, fv[k + 1] * gv[k], fv[k] * gv[k + 1]
                ),
            )
    return HullCertificate(INSIDE, "coefficients", d, coefficients=coeffs)


def _coefficients(
    fv: IntVector, gv: IntVector, d: int, s: int,
    ratios: Optional[list[Fraction]] = None,
) -> tuple[Fraction, ...]:
    if ratios is None:
        ratios = [Fraction(fv[k], gv[k]) for k in range(1, s + 1)]
    zero = Fraction(0)
    out = []
    for k in range(1, d + 1):
        if k > s:
            out.append(zero)
        else:
            nxt = ratios[k] if k < s else zero
            out.append(ratios[k - 1] - nxt)
    return tuple(out)


def verify_certificate(cert: HullCertificate, f, g) -> bool:
    """Soundness check: re-derive what the certificate claims, exactly.

    Inside: coefficients are nonnegative, total mass <= 1, and the convex
    combination of truncations reproduces f entrywise.  Outside: the named
    inequality fails under exact integer arithmetic.
    """
    fv = as_vector(f)
    gv = as_vector(g)
    if cert.is_inside:
        c = cert.coefficients
        if c is None or any(x < 0 for x in c):
            return False
        if sum(c) > 1:
            return False
        suffix = Fraction(0)  # mass of c_j..c_d, accumulated downward
        for j in range(max(len(fv), len(gv), len(c)), 0, -1):
            if j <= len(c):
                suffix += c[j - 1]
            if suffix * gv[j] != fv[j]:
                return False
        return True
    return cert.violation is not None and cert.violation.holds(fv, gv)
