"""Named instances and a seeded sampler of modules with planted structure.

Bundled fixtures live in ``modrank/data/*.json``; ``regular_<group>_<q>``
names are built on demand for any group understood by ``named_group``.

The sampler glues together pieces whose structure is known in advance
(simple modules cut out of a regular module, cyclic submodules and
quotients of a regular module) and hides the block structure behind a
random change of basis.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from . import linalg as la
from .chop import chop
from .errors import UnknownFixture
from .fgmod import conjugate, direct_sum_all, is_isomorphic_simple, quotient_module, restrict, spin
from .field import FiniteField, field_of_order, ff_make
from .group import GroupTable, direct_product_cyclic, named_group
from .grpalg import FGModule, regular_module
from .instance import Instance, instance_from_module, parse_instance
from .linalg import Subspace

BUNDLED = ("intro_p2", "intro_p3", "intro_p5", "regular_C3_2", "regular_S4_2", "s3_gf7_SS", "sylow_s3_gf3")

_REGULAR = re.compile(r"^regular_(?P<group>[A-Za-z0-9x]+)_(?P<q>\d+)$")


def intro_module(p: int) -> tuple[FGModule, Subspace]:
    """C_p x C_p on span{b, c, d}: g sends b to b + c, h sends b to b + d.

    Returns the module together with H = span{c, d}.
    """
    F = ff_make(p)
    G = direct_product_cyclic(p, p)
    g = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    h = [[1, 0, 1], [0, 1, 0], [0, 0, 1]]
    M = FGModule(F, G, [g, h], name=f"intro_p{p}")
    H = Subspace.span(F, [[0, 1, 0], [0, 0, 1]], 3)
    return M, H


def regular_instance(group: str, q: int) -> Instance:
    F = field_of_order(q)
    G = named_group(group)
    return instance_from_module(regular_module(F, G), name=f"regular_{group}_{q}")


def s3_gf7_simple() -> FGModule:
    """The 2-dimensional simple GF(7)S3-module, as produced by chopping the regular module."""
    F = ff_make(7)
    rep = chop(regular_module(F, named_group("S3")), seed=0)
    return next(c.module for c in rep.classes if c.dim == 2)


def build_bundled(name: str) -> Instance:
    """Recompute a bundled fixture from scratch (used to write the JSON files)."""
    m = re.fullmatch(r"intro_p(\d+)", name)
    if m:
        M, H = intro_module(int(m.group(1)))
        return instance_from_module(M, {"H": H}, name)
    if name == "s3_gf7_SS":
        S = s3_gf7_simple()
        return instance_from_module(direct_sum_all([S, S]), name=name)
    if name == "sylow_s3_gf3":
        inst = regular_instance("S3", 3)
        inst.name = name
        return inst
    m = _REGULAR.match(name)
    if m:
        return regular_instance(m.group("group"), int(m.group("q")))
    raise UnknownFixture(name)


def write_bundled(directory) -> list[str]:
    from pathlib import Path

    out = []
    for name in BUNDLED:
        path = Path(directory) / f"{name}.json"
        path.write_text(build_bundled(name).dumps(), encoding="utf-8")
        out.append(str(path))
    return out


def fixture_names() -> list[str]:
    return list(BUNDLED)


def fixture(name: str) -> Instance:
    """Load a bundled fixture or build ``regular_<group>_<q>``."""
    if name in BUNDLED:
        text = resources.files("modrank").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
        return parse_instance(text)
    m = _REGULAR.match(name)
    if m:
        try:
            return regular_instance(m.group("group"), int(m.group("q")))
        except ValueError as exc:
            raise UnknownFixture(f"{name}: {exc}") from exc
    raise UnknownFixture(name)


# ----------------------------------------------------------------------
# planted sampler

BATTERY_GROUPS = ("C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4", "C2xC2xC2", "S3", "D4", "Q8")
BATTERY_FIELDS = (2, 3)
MAX_PIECE_DIM = 5


@dataclass
class Piece:
    module: FGModule
    kind: str  # "simple" | "cyclic" | "quotient"


@dataclass
class Planted:
    """A sampled module with its construction recorded.

    ``planted`` lists (simple module, multiplicity) pairs when the composition
    factors are known from the construction alone, otherwise None.
    """

    module: FGModule
    pieces: list[Piece]
    basis_change: np.ndarray
    planted: list[tuple[FGModule, int]] | None
    group: str
    q: int
    seed: int

    @property
    def label(self) -> str:
        dims = "+".join(f"{p.kind[0]}{p.module.dim}" for p in self.pieces)
        return f"{self.group}/GF({self.q})[{dims}]#{self.seed}"


def _random_vector(F: FiniteField, n: int, rng: random.Random) -> np.ndarray:
    while True:
        v = np.array([rng.randrange(F.q) for _ in range(n)], dtype=la.DTYPE)
        if v.any():
            return v


def random_invertible(F: FiniteField, n: int, rng: random.Random) -> np.ndarray:
    while True:
        T = np.array([[rng.randrange(F.q) for _ in range(n)] for _ in range(n)], dtype=la.DTYPE).reshape(n, n)
        if la.is_invertible(F, T):
            return T


@lru_cache(maxsize=None)
def _simple_pool(group: str, q: int) -> tuple[FGModule, ...]:
    F = field_of_order(q)
    rep = chop(regular_module(F, named_group(group)), seed=0)
    return tuple(c.module for c in rep.classes)


@lru_cache(maxsize=None)
def _structured_pool(group: str, q: int, size: int = 12) -> tuple[Piece, ...]:
    """Cyclic submodules and cyclic quotients of the regular module, dim 2..5."""
    F = field_of_order(q)
    R = regular_module(F, named_group(group))
    rng = random.Random(f"{group}/{q}")
    seen: set = set()
    out: list[Piece] = []
    for _ in range(40 * size):
        if len(out) >= size:
            break
        U = spin(R, _random_vector(F, R.dim, rng)[None, :]).space
        for kind, dim in (("cyclic", U.dim), ("quotient", R.dim - U.dim)):
            if not 2 <= dim <= MAX_PIECE_DIM or (kind, U.key) in seen:
                continue
            seen.add((kind, U.key))
            mod = restrict(R, U) if kind == "cyclic" else quotient_module(R, U)[0]
            out.append(Piece(mod, kind))
    return tuple(out)


def _is_p_group(G: GroupTable, p: int) -> bool:
    n = G.order
    while n % p == 0:
        n //= p
    return n == 1


def sample_planted(seed: int, groups=BATTERY_GROUPS, fields=BATTERY_FIELDS, max_dim: int = MAX_PIECE_DIM) -> Planted:
    """One planted module, fully determined by ``seed``."""
    rng = random.Random(seed)
    group = groups[rng.randrange(len(groups))]
    q = fields[rng.randrange(len(fields))]
    F = field_of_order(q)
    G = named_group(group)
    simples = [S for S in _simple_pool(group, q) if S.dim <= max_dim]
    structured = [P for P in _structured_pool(group, q) if P.module.dim <= max_dim]
    pieces: list[Piece] = []
    budget = rng.randint(1, max_dim)
    while True:
        room = budget - sum(p.module.dim for p in pieces)
        options = [Piece(S, "simple") for S in simples if S.dim <= room]
        options += [P for P in structured if P.module.dim <= room]
        if not options or (pieces and rng.random() < 0.3):
            break
        pieces.append(options[rng.randrange(len(options))])
    M0 = direct_sum_all([p.module for p in pieces])
    T = random_invertible(F, M0.dim, rng)
    M = conjugate(M0, T)
    M.name = f"planted#{seed}"

    planted = None
    if all(p.kind == "simple" for p in pieces):
        planted = []
        for p in pieces:
            for i, (S, k) in enumerate(planted):
                if S is p.module:
                    planted[i] = (S, k + 1)
                    break
            else:
                planted.append((p.module, 1))
    elif _is_p_group(G, F.p):
        planted = [(simples[0], M.dim)]  # the trivial module is the only simple
    return Planted(M, pieces, T, planted, group, q, seed)


def battery(count: int = 200, seed: int = 0, **kwargs) -> list[Planted]:
    """``count`` planted modules from consecutive sub-seeds of ``seed``."""
    return [sample_planted(seed * 100_003 + i, **kwargs) for i in range(count)]


def planted_matches(p: Planted, composition) -> bool:
    """True when a composition report reproduces the planted factor multiset."""
    if p.planted is None:
        raise ValueError("no planted multiset for this instance")
    if len(composition.classes) != len(p.planted):
        return False
    remaining = list(composition.classes)
    for S, k in p.planted:
        for c in remaining:
            if c.dim == S.dim and c.multiplicity == k and is_isomorphic_simple(S, c.module)[0]:
                remaining.remove(c)
                break
        else:
            return False
    return True
