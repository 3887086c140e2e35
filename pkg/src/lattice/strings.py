"""
Construction, rendering and parsing of lattice strings

Two text forms are used. The compact form writes one digit per symbol
("4310|013") and is chosen when every index fits in a single digit. The
general form separates symbols with commas ("12,3,0,0|0,1,10"). In both,
0 stands for the padding symbol, the positive side is descending with
trailing padding and the negative side is ascending with leading padding.
"""
from typing import Iterable, List

from ..errors import ShapeMismatchError, StringParseError
from .types import LatticeString, Shape


def _mask(indices: Iterable[int], bound: int, side: str) -> int:
    mask = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= bound:
            raise ShapeMismatchError(f"{side} index {i!r} outside 1..{bound}")
        mask |= 1 << (i - 1)
    return mask


def make_string(shape: Shape, pos_set: Iterable[int], neg_set: Iterable[int]) -> LatticeString:
    """Canonical constructor from the tilde and bar index sets"""
    return LatticeString(
        shape=shape,
        pos=_mask(pos_set, shape.r, "Positive"),
        neg=_mask(neg_set, shape.m, "Negative"),
    )


def positive_symbols(w: LatticeString) -> List[int]:
    """Positive side as written: descending indices, then padding zeros"""
    present = sorted(w.pos_set, reverse=True)
    return present + [0] * (w.shape.r - len(present))


def negative_symbols(w: LatticeString) -> List[int]:
    """Negative side as written: padding zeros, then ascending indices"""
    present = sorted(w.neg_set)
    return [0] * (w.shape.m - len(present)) + present


def render_string(w: LatticeString) -> str:
    left = positive_symbols(w)
    right = negative_symbols(w)
    if w.shape.compact:
        return "".join(map(str, left)) + "|" + "".join(map(str, right))
    return ",".join(map(str, left)) + "|" + ",".join(map(str, right))


def _tokens(side: str, general: bool) -> List[str]:
    if side == "":
        return []
    if general:
        return side.split(",")
    return list(side)


def _parse_side(tokens: List[str], bound: int, descending: bool, text: str) -> List[int]:
    values = []
    for token in tokens:
        token = token.strip()
        if not (token.isascii() and token.isdigit()):
            raise StringParseError(f"Malformed symbol {token!r} in {text!r}")
        value = int(token)
        if value > bound:
            raise StringParseError(f"Symbol {value} out of range 0..{bound} in {text!r}")
        values.append(value)

    present = [v for v in values if v != 0]
    if len(set(present)) != len(present):
        raise StringParseError(f"Repeated nonzero symbol in {text!r}")

    if descending:
        expected = sorted(present, reverse=True) + [0] * (len(values) - len(present))
    else:
        expected = [0] * (len(values) - len(present)) + sorted(present)
    if values != expected:
        raise StringParseError(f"Symbols out of order in {text!r}")
    return present


def parse_string(shape: Shape, text: str) -> LatticeString:
    """Inverse of render_string; accepts either text form"""
    if text.count("|") != 1:
        raise StringParseError(f"Expected exactly one '|' in {text!r}")
    left, right = text.strip().split("|")
    general = "," in text or not shape.compact

    left_tokens = _tokens(left, general)
    right_tokens = _tokens(right, general)
    if len(left_tokens) != shape.r or len(right_tokens) != shape.m:
        raise StringParseError(
            f"{text!r} has sides of length {len(left_tokens)} and {len(right_tokens)}; "
            f"shape {shape} needs {shape.r} and {shape.m}"
        )

    pos = _parse_side(left_tokens, shape.r, descending=True, text=text)
    neg = _parse_side(right_tokens, shape.m, descending=False, text=text)
    return make_string(shape, pos, neg)
