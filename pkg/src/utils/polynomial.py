"""
Exact sparse integer polynomials.

Two immutable value types:

- UnivariatePolynomial in t: exponent -> coefficient
- BivariatePolynomial in x, y: (x-exponent, y-exponent) -> coefficient

Zero coefficients are never stored, so equality is term-wise and instances
hash consistently. Coefficients are Python ints (arbitrary precision) and are
serialized as strings.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

Number = int


def _clean(terms: Iterable[Tuple[object, int]]) -> Dict:
    out: Dict = {}
    for key, c in terms:
        if type(c) is not int:
            raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        if c:
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
    return out


def _format_coefficient(c: int, monomial: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    magnitude = abs(c)
    if monomial:
        body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
    else:
        body = str(magnitude)
    if first:
        return f"-{body}" if c < 0 else body
    return f" {sign} {body}"


def _power(symbol: str, e: int) -> str:
    if e == 0:
        return ""
    return symbol if e == 1 else f"{symbol}^{e}"


class UnivariatePolynomial:
    """
    Polynomial in t with nonnegative exponents.

    Examples:
        >>> p = UnivariatePolynomial({2: 1, 4: 1})
        >>> str(p)
        't^2 + t^4'
        >>> p.substitute_t_squared().degree
        8
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        terms = terms or {}
        for e in terms:
            if type(e) is not int or e < 0:
                raise ValueError(f"exponents must be nonnegative ints, got {e!r}")
        self._terms: Dict[int, int] = _clean(terms.items())

    @classmethod
    def zero(cls) -> "UnivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "UnivariatePolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "UnivariatePolynomial":
        return cls({exponent: coefficient})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def degree(self) -> Optional[int]:
        """Highest exponent; None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def evaluate(self, t: Number) -> Number:
        return sum(c * t ** e for e, c in self._terms.items())

    def shift(self, k: int) -> "UnivariatePolynomial":
        """
        Multiply by t^k; k may be negative as long as no exponent drops below 0.

        Raises:
            ValueError: when the result would be a genuine Laurent polynomial.
        """
        if self._terms and min(self._terms) + k < 0:
            raise ValueError(f"t^{k} * ({self}) has a negative exponent")
        return UnivariatePolynomial({e + k: c for e, c in self._terms.items()})

    def substitute_t_squared(self) -> "UnivariatePolynomial":
        """p(t) -> p(t^2)."""
        return UnivariatePolynomial({2 * e: c for e, c in self._terms.items()})

    def _coerce(self, other) -> Optional["UnivariatePolynomial"]:
        if isinstance(other, UnivariatePolynomial):
            return other
        if type(other) is int:
            return UnivariatePolynomial({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UnivariatePolynomial(_clean(list(self._terms.items()) + list(other._terms.items())))

    __radd__ = __add__

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        products = ((e1 + e2, c1 * c2)
                    for e1, c1 in self._terms.items()
                    for e2, c2 in other._terms.items())
        return UnivariatePolynomial(_clean(products))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(("t", frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.items())

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "".join(_format_coefficient(c, _power("t", e), i == 0)
                       for i, (e, c) in enumerate(self.items()))

    def to_json(self) -> dict:
        return {"terms": [{"e": e, "c": str(c)} for e, c in self.items()]}

    @classmethod
    def from_json(cls, payload: dict) -> "UnivariatePolynomial":
        return cls({int(term["e"]): int(term["c"]) for term in payload["terms"]})


class BivariatePolynomial:
    """
    Polynomial in x and y with nonnegative exponents.

    Examples:
        >>> x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
        >>> str(x * x + x + y)
        'x^2 + x + y'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], int]] = None):
        terms = terms or {}
        for i, j in terms:
            if type(i) is not int or type(j) is not int or i < 0 or j < 0:
                raise ValueError(f"exponents must be nonnegative ints, got {(i, j)!r}")
        self._terms: Dict[Tuple[int, int], int] = _clean(terms.items())

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls, power: int = 1) -> "BivariatePolynomial":
        return cls({(power, 0): 1})

    @classmethod
    def y(cls, power: int = 1) -> "BivariatePolynomial":
        return cls({(0, power): 1})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        """Terms ordered by descending x-exponent, then ascending y-exponent."""
        return sorted(self._terms.items(), key=lambda item: (-item[0][0], item[0][1]))

    def coefficient(self, x_exponent: int, y_exponent: int) -> int:
        return self._terms.get((x_exponent, y_exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def evaluate(self, x0: Number, y0: Number) -> Number:
        return sum(c * x0 ** i * y0 ** j for (i, j), c in self._terms.items())

    def at_x(self, x0: int) -> UnivariatePolynomial:
        """Substitute x := x0; the result is a polynomial in y (named t)."""
        out: Dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[j] = out.get(j, 0) + c * x0 ** i
        return UnivariatePolynomial(out)

    def _coerce(self, other) -> Optional["BivariatePolynomial"]:
        if isinstance(other, BivariatePolynomial):
            return other
        if type(other) is int:
            return BivariatePolynomial({(0, 0): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BivariatePolynomial(_clean(list(self._terms.items()) + list(other._terms.items())))

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        products = (((i1 + i2, j1 + j2), c1 * c2)
                    for (i1, j1), c1 in self._terms.items()
                    for (i2, j2), c2 in other._terms.items())
        return BivariatePolynomial(_clean(products))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivariatePolynomial":
        if type(k) is not int or k < 0:
            return NotImplemented
        result = BivariatePolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(("xy", frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "".join(_format_coefficient(c, _power("x", i) + _power("y", j), n == 0)
                       for n, ((i, j), c) in enumerate(self.items()))

    def to_json(self) -> dict:
        return {"terms": [{"x": i, "y": j, "c": str(c)} for (i, j), c in sorted(self._terms.items())]}

    @classmethod
    def from_json(cls, payload: dict) -> "BivariatePolynomial":
        return cls({(int(t["x"]), int(t["y"])): int(t["c"]) for t in payload["terms"]})


