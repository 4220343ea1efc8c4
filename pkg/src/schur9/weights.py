"""Exact sparse multivariate polynomials over the weight variables.

Variables are encoded as small tuples so monomials sort canonically:

* ``("x", k, c)`` / ``("y", k, c)`` -- ninth-variation weights x_{k,c}, y_{k,c}
* ``("X", k)`` / ``("Y", k)``       -- classical single-level variables
* ``("a", j)``                      -- factorial parameters a_j
* ``("p", k, i, j)``                -- tenth-variation positional weights
* ``("t", name)``                   -- ad-hoc symbols (e.g. the cancellation t)

Coefficients are arbitrary-precision signed integers; no zero coefficient is
ever stored, so equality is structural on the canonical form.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

Atom = tuple
Monomial = tuple  # sorted tuple of atoms


class UnboundVariable(KeyError):
    """A specialization scheme does not cover a variable of the target."""


def xvar(k: int, c: int) -> Atom:
    return ("x", k, c)


def yvar(k: int, c: int) -> Atom:
    return ("y", k, c)


def xlevel(k: int) -> Atom:
    return ("X", k)


def ylevel(k: int) -> Atom:
    return ("Y", k)


def aparam(j: int) -> Atom:
    return ("a", j)


def posvar(k: int, i: int, j: int) -> Atom:
    return ("p", k, i, j)


def symbol(name: str) -> Atom:
    return ("t", name)


class WeightPolynomial:
    """Immutable-by-convention sparse polynomial ``{monomial: coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = dict(terms) if terms else {}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightPolynomial) and self.terms == other.terms

    def __hash__(self):  # pragma: no cover - polynomials are not hashed
        raise TypeError("WeightPolynomial is unhashable")

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return poly_add(self, poly_neg(other))

    def __mul__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return poly_mul(self, other)

    def __neg__(self) -> "WeightPolynomial":
        return poly_neg(self)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"WeightPolynomial({poly_str(self)})"


ZERO = WeightPolynomial()
ONE = WeightPolynomial({(): 1})


def const(n: int) -> WeightPolynomial:
    return WeightPolynomial({(): n}) if n else WeightPolynomial()


def monomial(atoms: Iterable[Atom], coeff: int = 1) -> WeightPolynomial:
    if coeff == 0:
        return WeightPolynomial()
    return WeightPolynomial({tuple(sorted(atoms)): coeff})


def variable(atom: Atom) -> WeightPolynomial:
    return WeightPolynomial({(atom,): 1})


def poly_add(a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
    terms = dict(a.terms)
    for mono, coeff in b.terms.items():
        new = terms.get(mono, 0) + coeff
        if new:
            terms[mono] = new
        else:
            terms.pop(mono, None)
    return WeightPolynomial(terms)


def poly_neg(a: WeightPolynomial) -> WeightPolynomial:
    return WeightPolynomial({mono: -coeff for mono, coeff in a.terms.items()})


def poly_scale(a: WeightPolynomial, n: int) -> WeightPolynomial:
    if n == 0:
        return WeightPolynomial()
    return WeightPolynomial({mono: n * coeff for mono, coeff in a.terms.items()})


def poly_mul(a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
    if not a.terms or not b.terms:
        return WeightPolynomial()
    # Multiply the smaller polynomial into the larger one.
    if len(a.terms) < len(b.terms):
        a, b = b, a
    terms: dict[Monomial, int] = {}
    for mono_b, coeff_b in b.terms.items():
        for mono_a, coeff_a in a.terms.items():
            mono = tuple(sorted(mono_a + mono_b))
            new = terms.get(mono, 0) + coeff_a * coeff_b
            if new:
                terms[mono] = new
            else:
                del terms[mono]
    return WeightPolynomial(terms)


def poly_eq(a: WeightPolynomial, b: WeightPolynomial) -> bool:
    return a.terms == b.terms


def shift(p: WeightPolynomial, m: int) -> WeightPolynomial:
    """The tau^m operator: every x/y content c becomes m + c."""
    if m == 0:
        return p
    terms: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        shifted = tuple(
            sorted((kind, *rest[:-1], rest[-1] + m) if kind in ("x", "y") else (kind, *rest) for kind, *rest in mono)
        )
        terms[shifted] = terms.get(shifted, 0) + coeff
    return WeightPolynomial({m: c for m, c in terms.items() if c})


def map_atoms(p: WeightPolynomial, fn: Callable[[Atom], Atom]) -> WeightPolynomial:
    """Apply an atom relabeling (must stay multiplicative, i.e. a bijection)."""
    terms: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        new = tuple(sorted(fn(atom) for atom in mono))
        terms[new] = terms.get(new, 0) + coeff
    return WeightPolynomial({m: c for m, c in terms.items() if c})


def swap_xy_reverse_levels(p: WeightPolynomial, n: int) -> WeightPolynomial:
    """Relabel x_{k,c} -> y_{n-k+1,c} and y_{k,c} -> x_{n-k+1,c}.

    Realizes evaluation at the reflected argument pair used by the
    anti-diagonal reflection identity.
    """

    def fn(atom: Atom) -> Atom:
        kind = atom[0]
        if kind == "x":
            return ("y", n - atom[1] + 1, atom[2])
        if kind == "y":
            return ("x", n - atom[1] + 1, atom[2])
        return atom

    return map_atoms(p, fn)


class SpecScheme:
    """A substitution scheme mapping ninth-variation variables to polynomials.

    ``image`` must return a polynomial for every x/y atom it is applied to;
    atoms of other kinds pass through unchanged.
    """

    def __init__(self, image: Callable[[Atom], WeightPolynomial | None], name: str = "custom"):
        self._image = image
        self.name = name

    def image(self, atom: Atom) -> WeightPolynomial:
        if atom[0] not in ("x", "y"):
            return variable(atom)
        result = self._image(atom)
        if result is None:
            raise UnboundVariable(f"scheme {self.name!r} does not bind {atom}")
        return result

    def __repr__(self) -> str:
        return f"SpecScheme({self.name})"


def classical() -> SpecScheme:
    """x_{k,c} -> x_k and y_{k,c} -> x_k (contents erased)."""

    def image(atom: Atom) -> WeightPolynomial:
        return variable(xlevel(atom[1]))

    return SpecScheme(image, "classical")


def generalised_q() -> SpecScheme:
    """x_{k,c} -> x_k, y_{k,c} -> y_k."""

    def image(atom: Atom) -> WeightPolynomial:
        return variable(xlevel(atom[1]) if atom[0] == "x" else ylevel(atom[1]))

    return SpecScheme(image, "generalised-q")


def content_factorial(params: Mapping[int, int] | None = None) -> SpecScheme:
    """Factorial Schur weights: x_{k,c} -> x_k + a_{k+c}.

    ``params`` optionally fixes integer values for the a_j; otherwise the a_j
    stay symbolic so results remain exact polynomials.
    """

    def a_poly(j: int) -> WeightPolynomial:
        if params is not None:
            return const(params.get(j, 0))
        return variable(aparam(j))

    def image(atom: Atom) -> WeightPolynomial:
        kind, k, c = atom
        if kind != "x":
            raise UnboundVariable("content-factorial scheme binds x variables only")
        return poly_add(variable(xlevel(k)), a_poly(k + c))

    return SpecScheme(image, "content-factorial")


def content_factorial_q(params: Mapping[int, int] | None = None) -> SpecScheme:
    """Factorial Q weights: x_{k,c} -> x_k - a_{c+1}, y_{k,c} -> x_k + a_{c+1}."""

    def a_poly(j: int) -> WeightPolynomial:
        if params is not None:
            return const(params.get(j, 0))
        return variable(aparam(j))

    def image(atom: Atom) -> WeightPolynomial:
        kind, k, c = atom
        sign = -1 if kind == "x" else 1
        return poly_add(variable(xlevel(k)), poly_scale(a_poly(c + 1), sign))

    return SpecScheme(image, "content-factorial-q")


def substitution(mapping: Mapping[Atom, WeightPolynomial]) -> SpecScheme:
    """A custom substitution hook; unmapped x/y atoms raise UnboundVariable."""
    return SpecScheme(lambda atom: mapping.get(atom), "custom")


def specialize(p: WeightPolynomial, scheme: SpecScheme) -> WeightPolynomial:
    """Apply the scheme as a ring homomorphism, term by term."""
    result = WeightPolynomial()
    image_cache: dict[Atom, WeightPolynomial] = {}
    for mono, coeff in p.terms.items():
        term = const(coeff)
        for atom in mono:
            img = image_cache.get(atom)
            if img is None:
                img = scheme.image(atom)
                image_cache[atom] = img
            term = poly_mul(term, img)
        result = poly_add(result, term)
    return result


def atom_str(atom: Atom) -> str:
    kind = atom[0]
    if kind in ("x", "y"):
        return f"{kind}[{atom[1]},{atom[2]}]"
    if kind in ("X", "Y"):
        return f"{kind.lower()}{atom[1]}"
    if kind == "a":
        return f"a[{atom[1]}]"
    if kind == "p":
        return f"x[{atom[1]},({atom[2]},{atom[3]})]"
    return str(atom[1])


def poly_str(p: WeightPolynomial) -> str:
    """Deterministic text rendering with terms in canonical monomial order."""
    if not p.terms:
        return "0"
    pieces = []
    for mono in sorted(p.terms):
        coeff = p.terms[mono]
        body = "*".join(atom_str(a) for a in mono)
        if not body:
            text = str(coeff)
        elif coeff == 1:
            text = body
        elif coeff == -1:
            text = f"-{body}"
        else:
            text = f"{coeff}*{body}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return out


def poly_json(p: WeightPolynomial) -> list:
    """JSON rendering: a list of ``{coeff, vars: [[kind, ...], ...]}``."""
    return [
        {"coeff": p.terms[mono], "vars": [list(atom) for atom in mono]}
        for mono in sorted(p.terms)
    ]
