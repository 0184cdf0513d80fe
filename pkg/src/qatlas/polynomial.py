"""Exact integer polynomials in one variable."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest


def _trim(coeffs) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients in ascending degree; trailing zeros are stripped."""

    coeffs: tuple[int, ...]
    var: str = "t"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self.coeff(i) for i in range(n))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)), self.var)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)), self.var)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out), self.var)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                mono = str(mag)
            else:
                power = self.var if i == 1 else f"{self.var}^{i}"
                mono = power if mag == 1 else f"{mag}{power}"
            parts.append(("-" if c < 0 else "+", mono))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    def ascending_str(self) -> str:
        """Low-to-high rendering, as Poincare polynomials are usually written."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            mag = abs(c)
            mono = str(mag) if i == 0 else (power if mag == 1 else f"{mag}{power}")
            terms.append(("-" if c < 0 else "+", mono))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            text += f" {sign} {mono}"
        return text
