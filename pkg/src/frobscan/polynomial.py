"""Sparse multivariate polynomials over F_p or Z, with exact arithmetic.

A polynomial is a map from exponent tuples to nonzero coefficients; the
coefficient domain is F_p (canonical residues in [0, p)) when ``p`` is set and
Z when it is None.  Homogeneous polynomials additionally get a dense
degree-indexed path used by `poly_power`, where large-power kernels dominate
runtime (see `_backend`).

Text grammar shared by the whole package::

    poly := term (('+'|'-') term)*
    term := [integer]['*'] (var['^' integer])*

with variables named x0..xN and whitespace ignored.  `str()` prints in the
same grammar and round-trips exactly through `parse_polynomial`.
"""

import re
from functools import lru_cache

import numpy as np

from ._backend import get_kernels
from .errors import (
    DimensionMismatchError,
    MixedDomainError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)

# Caps chosen for desk scale; every cap is a per-call parameter upstream.
DEFAULT_MAX_TERMS = 4_000_000
DEFAULT_MAX_DENSE = 1 << 24


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, d):
    """All degree-d exponent tuples in `nvars` variables, descending lex."""
    if nvars < 1 or d < 0:
        raise ValidationError("need nvars >= 1 and d >= 0")
    if nvars == 1:
        return ((d,),)
    out = []
    for e0 in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars, d):
    """Map each degree-d exponent tuple to its position in the fixed order."""
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


class Polynomial:
    """Immutable sparse polynomial over F_p (p set) or Z (p is None)."""

    __slots__ = ("nvars", "p", "terms", "_hash")

    def __init__(self, nvars, p, terms):
        if nvars < 1:
            raise ValidationError("need at least one variable")
        if p is not None and p < 2:
            raise ValidationError("modulus must be a prime >= 2")
        clean = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise DimensionMismatchError(
                    f"exponent tuple {exps} does not match nvars={nvars}")
            if any(e < 0 for e in exps):
                raise ValidationError("negative exponent")
            c = c % p if p is not None else int(c)
            if c:
                clean[tuple(exps)] = c
        self.nvars = nvars
        self.p = p
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars, p=None):
        return cls(nvars, p, {})

    @classmethod
    def constant(cls, nvars, c, p=None):
        return cls(nvars, p, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars, p=None):
        return cls.constant(nvars, 1, p)

    @classmethod
    def variable(cls, nvars, i, p=None):
        if not 0 <= i < nvars:
            raise ValidationError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, p, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, c=1, p=None):
        return cls(len(exps), p, {tuple(exps): c})

    @classmethod
    def from_arrays(cls, nvars, p, exps, coeffs):
        terms = {}
        for row, c in zip(exps.tolist(), coeffs.tolist()):
            key = tuple(row)
            terms[key] = terms.get(key, 0) + c
        return cls(nvars, p, terms)

    @classmethod
    def _from_canonical(cls, nvars, p, exps, coeffs):
        """Trusted fast path: rows already unique, coefficients already
        canonical nonzero residues.  Skips per-term validation."""
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.p = p
        obj.terms = dict(zip(map(tuple, exps.tolist()), coeffs.tolist()))
        obj._hash = None
        return obj

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    @property
    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    @property
    def homogeneous_degree(self):
        """The common term degree, or None if zero or inhomogeneous."""
        if not self.terms:
            return None
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def coefficient_of(self, exps):
        if len(exps) != self.nvars:
            raise DimensionMismatchError(
                f"monomial has {len(exps)} exponents, polynomial has {self.nvars}")
        return self.terms.get(tuple(exps), 0)

    def terms_arrays(self):
        """Deterministically ordered (exponent matrix, coefficient vector)."""
        keys = sorted(self.terms, reverse=True)
        exps = np.array(keys, dtype=np.int64).reshape(len(keys), self.nvars)
        coeffs = np.array([self.terms[k] for k in keys], dtype=np.int64)
        return exps, coeffs

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"variable counts differ: {self.nvars} vs {other.nvars}")
        if self.p != other.p:
            raise MixedDomainError(f"domains differ: p={self.p} vs p={other.p}")

    def __add__(self, other):
        self._check_compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, self.p, out)

    def __neg__(self):
        return Polynomial(self.nvars, self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compat(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial(self.nvars, self.p, out)

    def scale(self, c):
        return Polynomial(self.nvars, self.p, {e: c * v for e, v in self.terms.items()})

    def frobenius_scale(self, q):
        """The q-th power for q a power of the characteristic (term-wise)."""
        if self.p is None:
            raise MixedDomainError("frobenius_scale needs a prime-field polynomial")
        return Polynomial(self.nvars, self.p,
                          {tuple(q * x for x in e): c for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.nvars, self.p, self.terms) == (other.nvars, other.p, other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.p, frozenset(self.terms.items())))
        return self._hash

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = [f"x{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(exps) if e]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        dom = f"F{self.p}" if self.p is not None else "Z"
        return f"Polynomial({self!s} over {dom}[{self.nvars} vars])"


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|([*^+\-])|(\S))")


def parse_polynomial(text, nvars=None, p=None):
    """Parse the shared polynomial grammar; infers nvars when not given."""
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(4):
            raise ParseError(f"unexpected character {m.group(4)!r}", column=m.start())
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(2))))
        else:
            tokens.append(("op", m.group(3)))
    if not tokens:
        raise ParseError("empty polynomial")

    terms = []
    pos = 0
    max_var = -1
    sign = 1
    if tokens[0] == ("op", "-"):
        sign, pos = -1, 1
    elif tokens[0] == ("op", "+"):
        pos = 1
    while pos < len(tokens):
        coeff = 1
        exps = {}
        saw_factor = False
        if tokens[pos][0] == "int":
            coeff = tokens[pos][1]
            saw_factor = True
            pos += 1
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
        while pos < len(tokens) and tokens[pos][0] == "var":
            v = tokens[pos][1]
            pos += 1
            e = 1
            if pos < len(tokens) and tokens[pos] == ("op", "^"):
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "int":
                    raise ParseError("expected integer exponent after '^'")
                e = tokens[pos][1]
                pos += 1
            exps[v] = exps.get(v, 0) + e
            max_var = max(max_var, v)
            saw_factor = True
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
        if not saw_factor:
            raise ParseError(f"expected a term at token {pos}")
        terms.append((sign * coeff, exps))
        if pos == len(tokens):
            break
        kind, val = tokens[pos]
        if kind != "op" or val not in "+-":
            raise ParseError(f"expected '+' or '-' at token {pos}")
        sign = 1 if val == "+" else -1
        pos += 1
        if pos == len(tokens):
            raise ParseError(f"dangling {val!r} at end of input")

    if not terms:
        raise ParseError("no terms found")
    if nvars is None:
        nvars = max_var + 1 if max_var >= 0 else 1
    elif max_var >= nvars:
        raise ParseError(f"variable x{max_var} out of range for {nvars} variables")

    out = {}
    for coeff, exps in terms:
        key = tuple(exps.get(i, 0) for i in range(nvars))
        out[key] = out.get(key, 0) + coeff
    return Polynomial(nvars, p, out)


def reduce_mod_p(f, p):
    """Reduce an integer polynomial mod p (zero terms dropped)."""
    if f.p is not None:
        raise MixedDomainError("reduce_mod_p expects an integer polynomial")
    return Polynomial(f.nvars, p, dict(f.terms))


def coefficient_of(f, exps):
    return f.coefficient_of(exps)


# -- dense homogeneous representation -------------------------------------
#
# A homogeneous polynomial of degree <= Dmax in v variables is stored as the
# flat array over the exponent cube of x1..x_{v-1} with side Dmax+1; x0's
# exponent is implied by the degree.  Shifted adds on the flat array implement
# multiplication by a sparse term without ever leaving the cube.


def _flat_strides(v, side):
    return np.array([side ** (v - 2 - i) for i in range(v - 1)], dtype=np.int64)


def _to_dense(f, side):
    v = f.nvars
    size = side ** (v - 1)
    arr = np.zeros(size, dtype=np.int64)
    exps, coeffs = f.terms_arrays()
    if exps.shape[0]:
        idx = exps[:, 1:] @ _flat_strides(v, side) if v > 1 else np.zeros(
            exps.shape[0], dtype=np.int64)
        arr[idx] = coeffs
    return arr


def _from_dense(arr, deg, v, side, p):
    nz = np.nonzero(arr)[0]
    coeffs = arr[nz]
    if v > 1:
        rest = np.empty((nz.shape[0], v - 1), dtype=np.int64)
        tmp = nz.copy()
        for i in range(v - 2, -1, -1):
            rest[:, i] = tmp % side
            tmp //= side
        e0 = deg - rest.sum(axis=1)
        exps = np.concatenate([e0[:, None], rest], axis=1)
    else:
        exps = np.full((nz.shape[0], 1), deg, dtype=np.int64)
    return Polynomial._from_canonical(v, p, exps, coeffs)


def _flat_limit(deg, v, side):
    return 1 if v == 1 else deg * side ** (v - 2) + 1


def _dense_mul_sparse(arr, dega, g, side):
    """Multiply the dense poly (degree dega) by sparse homogeneous g, in cube."""
    v, p = g.nvars, g.p
    exps, coeffs = g.terms_arrays()
    offsets = exps[:, 1:] @ _flat_strides(v, side) if v > 1 else np.zeros(
        exps.shape[0], dtype=np.int64)
    out = np.zeros_like(arr)
    get_kernels().shifted_axpy(out, arr, _flat_limit(dega, v, side), offsets, coeffs, p)
    return out


def _dense_power(f, n):
    """f**n for homogeneous f over F_p, by repeated dense shifted adds."""
    d = f.homogeneous_degree
    deg = d * n
    side = deg + 1
    arr = _to_dense(f, side)
    dega = d
    for _ in range(n - 1):
        arr = _dense_mul_sparse(arr, dega, f, side)
        dega += d
    return arr, deg, side


def poly_power(f, n, max_terms=DEFAULT_MAX_TERMS, max_dense=DEFAULT_MAX_DENSE):
    """Exact f**n with f**0 = 1.

    Over F_p on homogeneous input this runs base-p digit splitting (the p^k-th
    powers are term-wise Frobenius scalings) with dense degree-indexed
    accumulation for the digit powers; everywhere else, sparse binary
    exponentiation.  Raises ResourceLimitError beyond the configured caps.
    """
    if n < 0:
        raise ValidationError("exponent must be nonnegative")
    if n == 0:
        return Polynomial.one(f.nvars, f.p)
    if f.is_zero or n == 1:
        return f
    if len(f.terms) == 1:
        (exps, c), = f.terms.items()
        coeff = pow(c, n, f.p) if f.p is not None else c ** n
        return Polynomial.monomial(tuple(n * e for e in exps), coeff, f.p)

    if f.p is not None and f.is_homogeneous:
        d = f.homogeneous_degree
        side = d * n + 1
        if side ** (f.nvars - 1) <= max_dense:
            return _poly_power_dense(f, n, max_terms)
    return _poly_power_sparse(f, n, max_terms)


def _poly_power_dense(f, n, max_terms):
    p = f.p
    d = f.homogeneous_degree
    digits = []
    m = n
    while m:
        m, rem = divmod(m, p)
        digits.append(rem)
    pieces = []
    for k, dk in enumerate(digits):
        if dk == 0:
            continue
        if dk == 1:
            fk = f
        else:
            arr, deg, side = _dense_power(f, dk)
            fk = _from_dense(arr, deg, f.nvars, side, p)
        pieces.append(fk.frobenius_scale(p ** k))
    pieces.sort(key=lambda g: len(g.terms), reverse=True)
    deg_total = d * n
    side = deg_total + 1
    arr = _to_dense(pieces[0], side)
    dega = pieces[0].homogeneous_degree
    for g in pieces[1:]:
        arr = _dense_mul_sparse(arr, dega, g, side)
        dega += g.homogeneous_degree
    result = _from_dense(arr, deg_total, f.nvars, side, p)
    if len(result.terms) > max_terms:
        raise ResourceLimitError(
            f"power has {len(result.terms)} terms (cap {max_terms})")
    return result


def _mul_capped(a, b, max_terms):
    out = a * b
    if len(out.terms) > max_terms:
        raise ResourceLimitError(
            f"product has {len(out.terms)} terms (cap {max_terms})")
    return out


def _poly_power_sparse(f, n, max_terms):
    result = None
    base = f
    m = n
    while m:
        if m & 1:
            result = base if result is None else _mul_capped(result, base, max_terms)
        m >>= 1
        if m:
            base = _mul_capped(base, base, max_terms)
    return result
