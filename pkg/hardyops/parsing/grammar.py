'''
Mini-grammar for symbols and inner functions on the command line.

    laurent: lo:c_lo,c_lo+1,...      exact Laurent polynomial
    rational: (num)/(den)            polynomials in z with complex literals a+bi
    kronecker: pole                  conj(eta) theta / (z - pole), evaluated pointwise
    blaschke: a1,a2,... atom@angle:mass
'''

from __future__ import annotations

import re

from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import CoeffSeries
from hardyops.inner.functions import InnerFunction, SingularAtom, blaschke
from hardyops.operators.symbols import SymbolSource
from hardyops.verify.rank import kronecker_symbol

_RATIONAL = re.compile(r"^\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)$")
_TERM = re.compile(
    r"^(?P<coef>\([^()]*\)|(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?i?|i)?"
    r"\*?(?P<z>z(?:\^(?P<power>\d+))?)?$"
)
_ATOM = re.compile(r"^atom@(?P<angle>[^:]+):(?P<mass>.+)$")


class SpecParseError(ValueError):
    """
    Raised when a symbol or inner-function spec does not follow the grammar.
    """


def _split_prefix(text: str, allowed: tuple[str, ...]) -> tuple[str, str]:
    head, separator, body = text.partition(":")
    kind = head.strip().lower()
    if not separator or kind not in allowed:
        raise SpecParseError(f"spec must start with one of {', '.join(p + ':' for p in allowed)} got {text!r}")
    return kind, body.strip()


def parse_complex(text: str) -> complex:
    '''
    Parse a complex literal such as 1, -0.5, 2i, 1+2i or (1-3i).

    Raises:
        SpecParseError: If the text is not a complex literal.
    '''
    literal = text.strip().replace(" ", "")
    if literal.startswith("(") and literal.endswith(")"):
        literal = literal[1:-1]
    if not literal:
        raise SpecParseError("empty complex literal")
    try:
        return complex(literal.replace("i", "j"))
    except ValueError as exc:
        raise SpecParseError(f"invalid complex literal: {text!r}") from exc


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms: list[tuple[int, str]] = []
    depth, sign, current = 0, 1, ""
    for position, char in enumerate(text):
        exponent = char in "+-" and position > 0 and text[position - 1] in "eE" and current[:-1].replace(".", "").isdigit()
        if char in "+-" and depth == 0 and not exponent:
            if current:
                terms.append((sign, current))
            elif position > 0:
                raise SpecParseError(f"dangling sign in polynomial: {text!r}")
            sign, current = (1 if char == "+" else -1), ""
            continue
        depth += (char == "(") - (char == ")")
        if depth < 0:
            raise SpecParseError(f"unbalanced parentheses in polynomial: {text!r}")
        current += char
    if depth != 0 or not current:
        raise SpecParseError(f"malformed polynomial: {text!r}")
    terms.append((sign, current))
    return terms


def parse_polynomial(text: str) -> list[complex]:
    """
    Ascending coefficients of a polynomial in z, e.g. '(1+2i)z^2 - 3z + 0.5'.
    """
    coefficients: dict[int, complex] = {}
    for sign, body in _split_terms(text.replace(" ", "")):
        match = _TERM.match(body)
        if match is None or not (match["coef"] or match["z"]):
            raise SpecParseError(f"invalid polynomial term: {body!r}")

        coef = match["coef"]
        if not coef:
            value = 1.0 + 0j
        else:
            value = parse_complex(coef)

        power = 0 if not match["z"] else int(match["power"] or 1)
        coefficients[power] = coefficients.get(power, 0j) + sign * value

    return [coefficients.get(k, 0j) for k in range(max(coefficients) + 1)]


def parse_inner(text: str) -> InnerFunction:
    '''
    Parse 'blaschke: a1,a2,... atom@angle:mass'.

    Zeros are separated by commas and may contain spaces, as in 0.3 + 0.1i.
    Atoms may share a comma-separated entry with a zero. An empty list gives
    the constant inner function 1.

    Raises:
        SpecParseError: On malformed tokens.
        InvalidInnerFunction: If a zero or atom is out of range.
    '''
    _, body = _split_prefix(text, ("blaschke",))
    zeros: list[complex] = []
    atoms: list[SingularAtom] = []

    for entry in filter(None, (part.strip() for part in body.split(","))):
        literal = []
        for word in entry.split():
            atom = _ATOM.match(word)
            if atom is None:
                literal.append(word)
                continue
            try:
                atoms.append(SingularAtom(float(atom["angle"]), float(atom["mass"])))
            except ValueError as exc:
                raise SpecParseError(f"invalid atom: {word!r}") from exc
        if literal:
            zeros.append(parse_complex(" ".join(literal)))

    if not atoms:
        return blaschke(*zeros)
    return InnerFunction(1.0, tuple(zeros), tuple(atoms))


def parse_symbol(
    text: str,
    *,
    eta: InnerFunction | None = None,
    theta: InnerFunction | None = None,
) -> SymbolSource:
    '''
    Parse a symbol spec.

    Args:
        text (str): laurent:, rational: or kronecker: spec.
        eta (InnerFunction | None): Needed by kronecker: specs.
        theta (InnerFunction | None): Needed by kronecker: specs.

    Returns:
        SymbolSource: CoeffSeries, RationalSymbol or evaluator.

    Raises:
        SpecParseError: On malformed specs.
    '''
    kind, body = _split_prefix(text, ("laurent", "rational", "kronecker"))

    if kind == "laurent":
        lo, separator, values = body.partition(":")
        if not separator:
            raise SpecParseError(f"laurent spec needs lo:c_lo,... got {body!r}")
        try:
            start = int(lo.strip())
        except ValueError as exc:
            raise SpecParseError(f"invalid lowest index: {lo!r}") from exc
        coeffs = [parse_complex(token) for token in values.split(",") if token.strip()]
        if not coeffs:
            raise SpecParseError("laurent spec needs at least one coefficient")
        return CoeffSeries.from_dense(start, coeffs)

    if kind == "rational":
        match = _RATIONAL.match(body)
        if match is None:
            numerator, denominator = parse_polynomial(body), [1.0]
        else:
            numerator, denominator = parse_polynomial(match["num"]), parse_polynomial(match["den"])
        return RationalSymbol.from_coefficients(numerator, denominator)

    if eta is None or theta is None:
        raise SpecParseError("kronecker: symbols need both eta and theta")
    return kronecker_symbol(eta, theta, parse_complex(body) if body else 0.4)
