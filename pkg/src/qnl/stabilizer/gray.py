"""Gray map between GF(4) strings and binary (alpha, beta) pairs.

    0 <-> (0,0)   1 <-> (1,1)   w <-> (1,0)   W <-> (0,1)

``w`` is omega and ``W`` its conjugate. Character ``i`` of a string is qubit
``i + 1``.
"""

from __future__ import annotations

from qnl.errors import FormatError
from qnl.stabilizer.models import PauliVector

_ENCODE: dict[str, tuple[int, int]] = {
    "0": (0, 0),
    "1": (1, 1),
    "w": (1, 0),
    "W": (0, 1),
}
_DECODE: dict[tuple[int, int], str] = {pair: sym for sym, pair in _ENCODE.items()}

GF4_SYMBOLS = frozenset(_ENCODE)


def gray_encode(symbols: str) -> PauliVector:
    """Map a GF(4) string to its PauliVector."""
    if not symbols:
        raise FormatError("empty GF(4) string", index=0)
    alpha = beta = 0
    for i, ch in enumerate(symbols):
        try:
            a, b = _ENCODE[ch]
        except KeyError:
            raise FormatError(
                f"invalid GF(4) symbol {ch!r} at index {i}; expected one of 0, 1, w, W",
                index=i,
            ) from None
        alpha |= a << i
        beta |= b << i
    return PauliVector(len(symbols), alpha, beta)


def gray_decode(p: PauliVector) -> str:
    """Inverse of :func:`gray_encode`."""
    return "".join(_DECODE[((p.alpha >> i) & 1, (p.beta >> i) & 1)] for i in range(p.n))
