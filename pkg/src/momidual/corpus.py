"""Named fixture ideals and seeded random families."""

from __future__ import annotations

import random
from importlib import resources
from itertools import combinations, permutations

from .documents import IdealDocument, document_to_ideal, parse_ideal_document
from .errors import PreconditionError
from .ideals import MonomialIdeal, minimalize

FIXTURE_NAMES = ("fig1", "permut3", "tree3", "twistedcubic", "tighten", "lastexample")

RANDOM_KINDS = ("random", "random_generic", "random_cogeneric")


def fixture_document(name: str) -> IdealDocument:
    if name not in FIXTURE_NAMES:
        raise PreconditionError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    text = resources.files(__package__).joinpath(f"fixtures/{name}.json").read_text("utf-8")
    return parse_ideal_document(text)


def load_fixture(name: str) -> MonomialIdeal:
    return document_to_ideal(fixture_document(name))


def permutahedron_ideal(n: int) -> MonomialIdeal:
    """Generators x^{sigma(1,...,n)} over all permutations sigma."""
    if n < 1:
        raise PreconditionError("permutahedron ideal needs n >= 1")
    base = tuple(range(1, n + 1))
    return minimalize(n, set(permutations(base)))


def tree_ideal(n: int) -> MonomialIdeal:
    """Generators (x^F)^{n-|F|+1} over nonempty subsets F; 2^n - 1 of them."""
    if n < 1:
        raise PreconditionError("tree ideal needs n >= 1")
    gens = []
    for k in range(1, n + 1):
        power = n - k + 1
        for combo in combinations(range(n), k):
            gens.append(tuple(power if i in combo else 0 for i in range(n)))
    return minimalize(n, gens)


def _nonzero_vector(rng: random.Random, n: int, max_exp: int) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(v):
            return v


def random_ideal(n: int, size: int, seed: int, max_exp: int = 5) -> MonomialIdeal:
    if n < 1 or size < 1:
        raise PreconditionError("random ideal needs n >= 1 and size >= 1")
    rng = random.Random(f"random:{n}:{size}:{seed}")
    return minimalize(n, [_nonzero_vector(rng, n, max_exp) for _ in range(size)])


def random_generic_ideal(n: int, size: int, seed: int) -> MonomialIdeal:
    """Seeded ideal whose generators share no positive exponent coordinatewise."""
    if n < 1 or size < 1:
        raise PreconditionError("random generic ideal needs n >= 1 and size >= 1")
    rng = random.Random(f"random_generic:{n}:{size}:{seed}")
    for _ in range(200):
        columns = [rng.sample(range(1, 2 * size + 3), size) for _ in range(n)]
        rows = []
        for j in range(size):
            keep = rng.randrange(n)
            rows.append(
                tuple(
                    columns[i][j] if i == keep or rng.random() > 0.35 else 0 for i in range(n)
                )
            )
        ideal = minimalize(n, rows)
        if len(ideal.gens) >= min(2, size) and ideal.is_generic():
            return ideal
    raise PreconditionError(f"no generic ideal found for n={n}, size={size}, seed={seed}")


def random_cogeneric_ideal(n: int, size: int, seed: int) -> MonomialIdeal:
    """Alexander dual of a seeded generic ideal; its components are generic."""
    return random_generic_ideal(n, size, seed).alexander_dual()


def make_corpus(kind: str, n: int = 3, seed: int = 0, size: int = 6) -> MonomialIdeal:
    """Deterministic corpus ideal for a kind tag, fixed n, seed and size."""
    if kind.startswith("paper:"):
        return load_fixture(kind[len("paper:"):])
    if kind == "permutahedron":
        return permutahedron_ideal(n)
    if kind == "tree":
        return tree_ideal(n)
    if kind == "random":
        return random_ideal(n, size, seed)
    if kind == "random_generic":
        return random_generic_ideal(n, size, seed)
    if kind == "random_cogeneric":
        return random_cogeneric_ideal(n, size, seed)
    raise PreconditionError(
        f"unknown corpus kind {kind!r}; expected permutahedron, tree, "
        "random, random_generic, random_cogeneric or paper:<name>"
    )
