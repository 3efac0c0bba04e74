"""Exact value types for the boolean engine."""

from __future__ import annotations

from dataclasses import dataclass

from qnl.errors import QnlError

_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class MaskError(QnlError):
    """Raised when a mask violates an operation's precondition."""

    def __init__(self, message: str, *, mask_name: str) -> None:
        super().__init__(message)
        self.mask_name = mask_name


class NotQuadraticError(QnlError):
    """Raised when the quadratic shortcut is forced on a non-quadratic table."""


@dataclass(frozen=True)
class GaussianInt:
    """Exact complex integer re + i·im."""

    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: "GaussianInt | int") -> "GaussianInt":
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    @property
    def norm2(self) -> int:
        return self.re * self.re + self.im * self.im

    @classmethod
    def i_power(cls, k: int) -> "GaussianInt":
        """i**k for any integer k."""
        return cls(*_I_POWERS[k % 4])

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class Mask:
    """An n-bit coordinate mask; coordinate ``i`` (1-based) is bit ``i - 1``."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise MaskError(f"mask {self.bits:#x} has bits beyond n={self.n}", mask_name="mask")

    @classmethod
    def parse(cls, text: str, *, name: str = "mask") -> "Mask":
        """Parse a 0/1 string, coordinate 1 leftmost."""
        if not text or set(text) - {"0", "1"}:
            raise MaskError(f"{name} must be a non-empty 0/1 string, got {text!r}", mask_name=name)
        return cls(len(text), sum(1 << i for i, ch in enumerate(text) if ch == "1"))

    def precedes(self, other: "Mask") -> bool:
        return self.bits & ~other.bits == 0

    def complement(self) -> "Mask":
        return Mask(self.n, ~self.bits & ((1 << self.n) - 1))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


def require_precedes(x: int, y: int, *, name: str, bound: str) -> None:
    """Raise MaskError naming *name* unless x ⪯ y."""
    if x & ~y:
        raise MaskError(f"mask {name} must satisfy {name} ⪯ {bound}", mask_name=name)


def check_mask(value: int, n: int, name: str) -> None:
    if value < 0 or value >> n:
        raise MaskError(f"mask {name} has bits beyond n={n}", mask_name=name)
