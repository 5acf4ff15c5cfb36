"""Integer models of quadric-cut projective schemes and good-prime filtering.

Model file format (line oriented, '#' comments allowed)::

    vars: x0 x1 ... xN
    n: <dimension of X>
    gen: <quadric over Z>          # repeatable
    exclude: p1 p2 ...             # optional
    seed: <u64>                    # optional
    oracle: plane-cubic <poly>     # optional point-count companion

A prime is good when no generator (nor any derived product datum)
degenerates mod p and the Hilbert function of the reduction matches the
characteristic-zero one on a fixed window.  The criterion is a checkable
proxy for flatness of the reduction; fixtures document their exclusion
lists explicitly.
"""

import math
from dataclasses import dataclass, field

from .charzero import GeneralCombinationConfig, general_product
from .errors import ParseError, ValidationError
from .ideals import HomogeneousIdeal, hilbert_function
from .polynomial import Polynomial, parse_polynomial, reduce_mod_p

HF_WINDOW_EXTRA = 2


@dataclass
class IntegerModel:
    """Quadric generators over Z plus the derived general product data."""

    nvars: int
    n: int
    generators: tuple
    excluded_primes: tuple
    config: GeneralCombinationConfig
    combinations: tuple = field(repr=False, default=())
    product: Polynomial = field(repr=False, default=None)
    oracle_cubic: Polynomial = field(repr=False, default=None)

    @property
    def N(self):
        return self.nvars - 1

    @property
    def r(self):
        return self.N - self.n

    def ideal(self):
        return HomogeneousIdeal(self.nvars, None, list(self.generators))

    def combination_ideal(self):
        return HomogeneousIdeal(self.nvars, None, list(self.combinations))


def _content(f):
    return math.gcd(*(abs(c) for c in f.terms.values()))


def build_model(generators, n, excluded=(), config=None, oracle_cubic=None):
    """Validate and complete a model: degree checks, r >= n+1, general product."""
    if not generators:
        raise ValidationError("a model needs at least one generator")
    nvars = generators[0].nvars
    N = nvars - 1
    for g in generators:
        if g.p is not None:
            raise ValidationError("model generators must be over Z")
        if g.homogeneous_degree != 2:
            raise ValidationError(f"generator {g} is not a homogeneous quadric")
    r = N - n
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if r < n + 1:
        raise ValidationError(f"need r = N - n >= n + 1; got N={N}, n={n}, r={r}")
    config = config or GeneralCombinationConfig()
    gs, h = general_product(list(generators), r, config)
    c = _content(h)
    if c > 1:
        h = Polynomial(nvars, None, {e: v // c for e, v in h.terms.items()})
    if oracle_cubic is not None:
        if oracle_cubic.nvars != 3 or oracle_cubic.homogeneous_degree != 3:
            raise ValidationError("oracle must be a plane cubic in x0 x1 x2")
    return IntegerModel(nvars, n, tuple(generators), tuple(sorted(excluded)),
                        config, tuple(gs), h, oracle_cubic)


def parse_model(text):
    """Parse the model file format; raises ParseError with a line number."""
    nvars = None
    n = None
    gens = []
    excluded = []
    seed = 0
    oracle = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", line=lineno)
        key, value = (part.strip() for part in line.split(":", 1))
        try:
            if key == "vars":
                names = value.split()
                if names != [f"x{i}" for i in range(len(names))] or not names:
                    raise ParseError("vars must be x0 x1 ... xN in order", line=lineno)
                nvars = len(names)
            elif key == "n":
                n = int(value)
            elif key == "gen":
                if nvars is None:
                    raise ParseError("'vars:' must precede 'gen:'", line=lineno)
                gens.append(parse_polynomial(value, nvars=nvars))
            elif key == "exclude":
                excluded.extend(int(v) for v in value.split())
            elif key == "seed":
                seed = int(value)
            elif key == "oracle":
                kind, _, poly = value.partition(" ")
                if kind != "plane-cubic":
                    raise ParseError(f"unknown oracle kind {kind!r}", line=lineno)
                oracle = parse_polynomial(poly, nvars=3)
            else:
                raise ParseError(f"unknown key {key!r}", line=lineno)
        except ParseError:
            raise
        except (ValueError, ValidationError) as exc:
            raise ParseError(str(exc), line=lineno) from exc
    if nvars is None or n is None or not gens:
        raise ParseError("model needs 'vars:', 'n:' and at least one 'gen:'")
    try:
        return build_model(gens, n, excluded,
                           GeneralCombinationConfig(seed=seed), oracle)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def _degenerates(f, p):
    fp = reduce_mod_p(f, p)
    return fp.is_zero or fp.degree() != f.degree()


def good_prime(model, p, hf_cache=None):
    """(good, reason) for one prime; excluded primes are bad by fiat."""
    if p in model.excluded_primes:
        return False, "excluded"
    for f in list(model.generators) + list(model.combinations) + [model.product]:
        if _degenerates(f, p):
            return False, f"generator degenerates mod {p}: {f}"
    d_max = 2 * max(g.homogeneous_degree for g in model.generators) + HF_WINDOW_EXTRA
    if hf_cache is None:
        hf_cache = {}
    for label, I_int in (("model", model.ideal()),
                         ("combinations", model.combination_ideal())):
        if label not in hf_cache:
            hf_cache[label] = hilbert_function(I_int, d_max)
        gens_p = [reduce_mod_p(g, p) for g in I_int.generators]
        hf_p = hilbert_function(HomogeneousIdeal(model.nvars, p, gens_p), d_max)
        if hf_p != hf_cache[label]:
            return False, f"Hilbert function of {label} ideal changes mod {p}"
    return True, "good"
