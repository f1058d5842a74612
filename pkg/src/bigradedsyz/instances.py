"""Named fixtures, seeded instance generation and the instance file format.

An instance file holds three rows ``[a, b, c, d, e, f]``, one per form
``a x^2z + b xyz + c y^2z + d x^2w + e xyw + f y^2w``.  Entries are integers
or ``num/den`` in lowest terms.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from math import gcd

from .bipoly import BiHomPoly, InputTriple, W, X, Y, Z
from .classify import classify, resultant_21
from .errors import GenerationExhausted, ParseError
from .exactnum import ExactMatrix, rank, rational
from .hilbert import InstanceClass

MAX_REDRAWS = 1000

# ---------------------------------------------------------------------------
# fixtures


def monomial_nongeneric() -> InputTriple:
    """``x^2 z, y^2 w, x^2 w + y^2 z``, non-generic with resultant 1."""
    return InputTriple(X * X * Z, Y * Y * W, X * X * W + Y * Y * Z)


def three_point(A, B, C) -> InputTriple:
    """``x(x - Ay)z, y(y - Bx)w, (x + y)(x - Cy)(z + w)``."""
    A, B, C = rational(A), rational(B), rational(C)
    return InputTriple(
        X * (X - Y.scale(A)) * Z,
        Y * (Y - X.scale(B)) * W,
        (X + Y) * (X - Y.scale(C)) * (Z + W),
    )


def double_point(A, B, C) -> InputTriple:
    """``x(x - Ay)z, y(y - Bx)z + x(x - Ay)w, (x + y)(x - Cy)(z + w)``."""
    A, B, C = rational(A), rational(B), rational(C)
    return InputTriple(
        X * (X - Y.scale(A)) * Z,
        Y * (Y - X.scale(B)) * Z + X * (X - Y.scale(A)) * W,
        (X + Y) * (X - Y.scale(C)) * (Z + W),
    )


def generic_fixture() -> InputTriple:
    return three_point(3, 2, 1)


def nongeneric_three_point() -> InputTriple:
    """A member of the three-point family with a (2,3) syzygy (A = BC + C - 1)."""
    return three_point(2, 2, 1)


def degenerate_fixture() -> InputTriple:
    """Every form vanishes at ``x = 0, z = 0`` (no ``y^2 w`` term)."""
    return InputTriple.from_rows([
        [1, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 0],
        [1, 1, 0, 0, 0, 0],
    ])


FIXTURES = {
    "monomial_ng": monomial_nongeneric,
    "generic": generic_fixture,
    "three_point_ng": nongeneric_three_point,
    "double_point": lambda: double_point(3, 2, 1),
}

# ---------------------------------------------------------------------------
# generation


def _generic_draw(rng: random.Random, bound: int) -> InputTriple:
    return InputTriple.from_rows(
        [[rng.randint(-bound, bound) for _ in range(6)] for _ in range(3)])


def phi_triple(r) -> InputTriple:
    """Triple from three linear forms ``r_k(s, t) = r[k][0] s + r[k][1] t``.

    ``phi(s, t) = (r_0 x^2 + r_1 xy + r_2 y^2)(tz - sw)`` evaluated at
    ``(0,1), (-1,0), (-1,1)``.
    """
    out = []
    for s, t in ((0, 1), (-1, 0), (-1, 1)):
        c = [rk[0] * s + rk[1] * t for rk in r]
        g = BiHomPoly(((2, 0)), ((c[0],), (c[1],), (c[2],)))
        out.append(g * (Z.scale(t) - W.scale(s)))
    return InputTriple(*out)


def _nongeneric_draw(rng: random.Random, bound: int) -> InputTriple | None:
    r = [[rng.randint(-bound, bound) for _ in range(2)] for _ in range(3)]
    if rank(ExactMatrix.from_rows(r)) != 2:
        return None
    return phi_triple(r)


def gen_instance(cls: str, seed: int, bound: int = 5) -> InputTriple:
    """Deterministic seeded instance of the requested class."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if cls not in ("generic", "nongeneric"):
        raise ValueError(f"unknown class {cls!r}")
    rng = random.Random(f"{cls}:{seed}:{bound}")
    for _ in range(MAX_REDRAWS):
        if cls == "generic":
            p = _generic_draw(rng, bound)
            if not resultant_21(p).is_zero and classify(p) is InstanceClass.Generic:
                return p
        else:
            p = _nongeneric_draw(rng, bound)
            if p is not None and not resultant_21(p).is_zero:
                return p
    raise GenerationExhausted(f"no {cls} instance after {MAX_REDRAWS} draws")


def random_basis_change(p: InputTriple, seed: int, bound: int = 3) -> InputTriple:
    """``M p`` for a seeded invertible integer ``M``."""
    from .resolution import _random_invertible

    return p.transform(_random_invertible(random.Random(seed), bound))


def planted_zero(seed: int, bound: int = 5) -> InputTriple:
    """A triple with a common zero at a seeded rational point of P1 x P1.

    Each form is drawn at random and then corrected in one coefficient so
    that it vanishes at the point.
    """
    rng = random.Random(f"planted:{seed}")
    pt = [Fraction(rng.randint(-3, 3)) for _ in range(2)]
    x0, z0 = pt  # point (x0 : 1) x (z0 : 1)
    rows = []
    for _ in range(3):
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(6)]
        p = InputTriple.from_rows([coeffs, coeffs, coeffs])[0]
        v = p(x0, 1, z0, 1)
        coeffs[5] -= v  # the y^2 w coefficient has weight 1 at (x0, 1, z0, 1)
        rows.append(coeffs)
    return InputTriple.from_rows(rows)


# ---------------------------------------------------------------------------
# file format

_NUM = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_scalar(tok: str):
    m = _NUM.match(tok)
    if not m:
        raise ParseError(f"not a rational number: {tok!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise ParseError(f"zero denominator in {tok!r}")
    if den == 1 or gcd(num, den) != 1:
        raise ParseError(f"{tok!r} is not in lowest terms")
    return Fraction(num, den)


def parse_instance(text: str) -> InputTriple:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") != line.endswith("]"):
            raise ParseError(f"line {lineno}: unbalanced brackets")
        body = line.strip("[]")
        toks = [t for t in re.split(r"[,\s]+", body) if t]
        if len(toks) != 6:
            raise ParseError(f"line {lineno}: expected 6 coefficients, found {len(toks)}")
        rows.append([parse_scalar(t) for t in toks])
    if len(rows) != 3:
        raise ParseError(f"expected 3 rows, found {len(rows)}")
    return InputTriple.from_rows(rows)


def format_instance(p: InputTriple) -> str:
    lines = ["# rows [a, b, c, d, e, f]: a x^2z + b xyz + c y^2z + d x^2w + e xyw + f y^2w"]
    for row in p.rows():
        lines.append("[" + ", ".join(str(c) for c in row) + "]")
    return "\n".join(lines) + "\n"


def read_instance(path) -> InputTriple:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(str(exc)) from exc
