"""Exact two-variable Laurent polynomials in ``a`` and ``z`` over the integers."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPoly2:
    """Sparse map ``(a_exp, z_exp) -> coeff``; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            c = int(c)
            if c:
                key = (int(i), int(j))
                v = acc.get(key, 0) + c
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        self._terms = acc
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, a_exp: int = 0, z_exp: int = 0, coeff: int = 1) -> LaurentPoly2:
        return cls({(a_exp, z_exp): coeff})

    @classmethod
    def zero(cls) -> LaurentPoly2:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly2:
        return cls.monomial()

    @classmethod
    def _raw(cls, terms: dict) -> LaurentPoly2:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.monomial(coeff=other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations
    def __add__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        if isinstance(other, int):
            other = LaurentPoly2.monomial(coeff=other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        if isinstance(other, int):
            other = LaurentPoly2.monomial(coeff=other)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly2:
        return LaurentPoly2.monomial(coeff=other) - self

    def __mul__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly2()
            return LaurentPoly2._raw({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return LaurentPoly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly2:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use scale_by_monomial")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_by_monomial(self, a_exp: int = 0, z_exp: int = 0, coeff: int = 1) -> LaurentPoly2:
        if coeff == 0:
            return LaurentPoly2()
        return LaurentPoly2._raw({(i + a_exp, j + z_exp): c * coeff for (i, j), c in self._terms.items()})

    # degree functionals
    def degrees(self) -> dict[str, int]:
        if not self._terms:
            raise ValueError("degrees undefined for the zero polynomial")
        a = [i for i, _ in self._terms]
        z = [j for _, j in self._terms]
        return {"deg_a_max": max(a), "deg_a_min": min(a), "deg_z_max": max(z), "deg_z_min": min(z)}

    def a_coefficient(self, a_exp: int) -> dict[int, int]:
        """Coefficient of ``a**a_exp`` as a map ``z_exp -> coeff``."""
        return {j: c for (i, j), c in self._terms.items() if i == a_exp}

    # substitutions
    def substitute_mirror(self) -> LaurentPoly2:
        """Apply ``a -> -1/a``."""
        return LaurentPoly2._raw({(-i, j): (-c if i % 2 else c) for (i, j), c in self._terms.items()})

    def substitute_a_one(self) -> LaurentPoly2:
        """Set ``a = 1``; the result only has ``a``-exponent zero."""
        return LaurentPoly2((((0, j), c) for (_, j), c in self._terms.items()))

    # serialization
    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPoly2:
        terms = []
        for row in data:
            i, j, c = row
            terms.append(((i, j), c))
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            mono = []
            if i:
                mono.append("a" if i == 1 else f"a^{i}")
            if j:
                mono.append("z" if j == 1 else f"z^{j}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


A = LaurentPoly2.monomial(1, 0)
A_INV = LaurentPoly2.monomial(-1, 0)
Z = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.one()

# value of a split trivial circle: (a^-1 - a) z^-1
SPLIT_FACTOR = LaurentPoly2({(-1, -1): 1, (1, -1): -1})


def unlink(n: int) -> LaurentPoly2:
    """HOMFLY-PT value of the ``n``-component zero-crossing diagram."""
    if n < 1:
        raise ValueError("an unlink needs at least one component")
    return SPLIT_FACTOR ** (n - 1)
