# src/tightness_mcp/generators.py
"""Constructors for the example families, plus seeded random complexes.

Seeded families draw from ``random.Random(seed)`` (Mersenne Twister, MT19937);
every choice is made from a list in canonical order, so a GeneratorSpec always
reproduces the same facet list.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from importlib import resources
from itertools import combinations
from typing import Any, Callable, Dict, Optional, Tuple

from .complex import (
    EMPTY,
    MAX_VERTEX_LABEL,
    SimplicialComplex,
    boundary_complex,
    from_facets,
    join,
    relabel,
)
from .engine import InvariantViolation, PreconditionError
from .linalg import RATIONALS, parse_rational
from .models import GeneratorSpec, ManifoldStatus

logger = logging.getLogger(__name__)

RNG_NAME = "mt19937"


def simplex_ball(d: int) -> SimplicialComplex:
    """The full d-simplex on {0..d}."""
    if d < 0:
        raise PreconditionError(f"Simplex dimension must be at least 0, got {d}")
    return from_facets([range(d + 1)])


def boundary_simplex(d: int) -> SimplicialComplex:
    """∂Δ^{d+1}: all proper nonempty subsets of {0..d+1}."""
    if d < 1:
        raise PreconditionError(f"Boundary sphere dimension must be at least 1, got {d}")
    return from_facets(combinations(range(d + 2), d + 1))


def kuehnel_handle(d: int) -> SimplicialComplex:
    """H(d): facets are the (d+1)-vertex paths in the cycle on 2d+1 vertices."""
    if d < 2:
        raise PreconditionError(f"Handle body dimension must be at least 2, got {d}")
    n = 2 * d + 1
    return from_facets([(i + j) % n for j in range(d + 1)] for i in range(n))


def stacked_ball(D: int, n_facets: int, seed: int = 0) -> SimplicialComplex:
    """A tree of D-simplices: each step cones a fresh vertex over a random free ridge."""
    if D < 2 or n_facets < 1:
        raise PreconditionError(f"stacked_ball needs D >= 2 and n_facets >= 1, got ({D}, {n_facets})")
    if D + n_facets - 1 > MAX_VERTEX_LABEL:
        raise PreconditionError(f"stacked_ball({D}, {n_facets}) needs labels above {MAX_VERTEX_LABEL}")
    rng = random.Random(seed)
    first = tuple(range(D + 1))
    facets = [first]
    ridge_count: Dict[Tuple[int, ...], int] = {r: 1 for r in combinations(first, D)}
    for fresh in range(D + 1, D + n_facets):
        free = sorted(r for r, n in ridge_count.items() if n == 1)
        ridge = rng.choice(free)
        facet = ridge + (fresh,)
        facets.append(facet)
        for r in combinations(facet, D):
            ridge_count[r] = ridge_count.get(r, 0) + 1
    return from_facets(facets)


def join_ball(a: int, b: int) -> SimplicialComplex:
    """Δ^a ∗ ∂Δ^b with the simplex on {0..a} and the sphere on {a+1..a+b+1}."""
    if a < 1 or b < 2:
        raise PreconditionError(f"join_ball needs a >= 1 and b >= 2, got ({a}, {b})")
    core = simplex_ball(a)
    shell = relabel(boundary_simplex(b - 1), a + 1)
    return join(core, shell)


def _gale_even(S: Tuple[int, ...], n: int) -> bool:
    inside = set(S)
    outside = [v for v in range(n) if v not in inside]
    for lo, hi in zip(outside, outside[1:]):
        if sum(1 for v in S if lo < v < hi) % 2:
            return False
    return True


def cyclic_sphere(n: int, D: int) -> SimplicialComplex:
    """∂C(n, D+1) by Gale evenness."""
    if D < 1 or n < D + 2:
        raise PreconditionError(f"cyclic_sphere needs D >= 1 and n >= D + 2, got ({n}, {D})")
    if n > MAX_VERTEX_LABEL + 1:
        raise PreconditionError(f"cyclic_sphere needs at most {MAX_VERTEX_LABEL + 1} vertices")
    return from_facets(S for S in combinations(range(n), D + 1) if _gale_even(S, n))


def random_complex(n: int, D: int, density: Any, seed: int = 0) -> SimplicialComplex:
    """Closure of the (D+1)-subsets of {0..n−1} kept independently with the given density."""
    if isinstance(density, str):
        density = parse_rational(density)
    density = Fraction(density)
    if not 1 <= n <= 16:
        raise PreconditionError(f"random_complex needs 1 <= n <= 16, got {n}")
    if not 0 <= D < n:
        raise PreconditionError(f"random_complex needs 0 <= D < n, got D={D}")
    if not 0 <= density <= 1:
        raise PreconditionError(f"Density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    kept = [
        S for S in combinations(range(n), D + 1)
        if rng.randrange(density.denominator) < density.numerator
    ]
    return from_facets(kept) if kept else EMPTY


def csaszar_torus() -> SimplicialComplex:
    """The 7-vertex torus from the bundled data file, validated on load."""
    from .cli import parse_complex_text
    from .homology import betti_vector
    from .invariants import manifold_status

    text = resources.files("tightness_mcp").joinpath("data/csaszar_torus.cplx").read_text("utf-8")
    torus = parse_complex_text(text)
    status = manifold_status(torus, RATIONALS)
    betti = betti_vector(torus, RATIONALS).values
    if status is not ManifoldStatus.CLOSED or betti != (1, 2, 1):
        raise InvariantViolation(f"Bundled torus failed validation: {status.value}, beta={betti}")
    return torus


_FAMILIES: Dict[str, Tuple[Callable[..., SimplicialComplex], Tuple[str, ...], bool]] = {
    "simplex": (simplex_ball, ("d",), False),
    "boundary-simplex": (boundary_simplex, ("d",), False),
    "handle": (kuehnel_handle, ("d",), False),
    "handle-boundary": (lambda d: boundary_complex(kuehnel_handle(d)), ("d",), False),
    "stacked-ball": (stacked_ball, ("D", "n_facets"), True),
    "join-ball": (join_ball, ("a", "b"), False),
    "cyclic": (cyclic_sphere, ("n", "D"), False),
    "random": (random_complex, ("n", "D", "density"), True),
    "csaszar": (csaszar_torus, (), False),
}


def family_names() -> Tuple[str, ...]:
    return tuple(_FAMILIES)


def family_parameters(family: str) -> Tuple[str, ...]:
    if family not in _FAMILIES:
        raise PreconditionError(f"Unknown generator family {family!r}; choose from {', '.join(_FAMILIES)}")
    return _FAMILIES[family][1]


def generate(
    family: str,
    params: Dict[str, Any],
    seed: Optional[int] = None,
) -> Tuple[SimplicialComplex, GeneratorSpec]:
    """Build a complex of the named family and the GeneratorSpec that reproduces it."""
    names = family_parameters(family)
    builder, _, seeded = _FAMILIES[family]
    missing = [name for name in names if name not in params]
    if missing:
        raise PreconditionError(f"Family {family!r} needs parameters {', '.join(missing)}")
    args = [params[name] for name in names]
    if seeded:
        seed = 0 if seed is None else seed
        args.append(seed)
    X = builder(*args)
    spec = GeneratorSpec(
        family=family,
        params={name: str(params[name]) if name == "density" else params[name] for name in names},
        seed=seed if seeded else None,
        rng=RNG_NAME if seeded else None,
    )
    logger.debug("generated %s %s: %r", family, spec.params, X)
    return X, spec
