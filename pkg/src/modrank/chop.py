"""MeatAxe-style structure analysis.

Irreducibility uses the Holt-Rees form of Norton's test: for a random
algebra element theta and an irreducible factor f of its characteristic
polynomial, any nonzero vector of ker f(theta) either spins to a proper
submodule, or (via the transposed action) exposes one, or, when
dim ker f(theta) == deg f, proves irreducibility.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from . import poly
from .errors import NotSemisimple, ZeroModule
from .fgmod import (
    Submodule,
    annihilator_pairing,
    dual,
    hom_space,
    is_isomorphic_simple,
    quotient_module,
    restrict,
    spin,
    spin_space,
    submodule,
)
from .grpalg import FGModule
from .linalg import Subspace

MAX_NORTON_TRIES = 500


@dataclass(frozen=True)
class NortonCertificate:
    theta: np.ndarray
    factor: tuple[int, ...]
    nullity: int
    spin_dim: int
    dual_spin_dim: int
    seed: int | None = None


@dataclass
class IrreducibilityResult:
    irreducible: bool
    witness: Submodule | None = None
    certificate: NortonCertificate | None = None

    def __bool__(self) -> bool:
        return self.irreducible


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def is_irreducible(M: FGModule, seed=0) -> IrreducibilityResult:
    """Norton irreducibility test; ``seed`` may be an int or a random.Random."""
    if M.dim == 0:
        raise ZeroModule("the zero module is neither reducible nor irreducible")
    F, n = M.field, M.dim
    rng = _rng(seed)
    seed_label = seed if isinstance(seed, int) else None
    if n == 1:
        cert = NortonCertificate(la.identity(1), (0, 1), 1, 1, 1, seed_label)
        M._certificate = cert
        return IrreducibilityResult(True, certificate=cert)
    gens = list(M.gen_action)
    gens_t = [np.ascontiguousarray(g.T) for g in gens]
    words = list(gens)
    for _ in range(MAX_NORTON_TRIES):
        a, b = rng.randrange(len(words)), rng.randrange(len(words))
        words.append(la.matmul(F, words[a], words[b]))
        if len(words) > 16:
            del words[len(gens)]
        theta = la.zeros(n, n)
        for w in rng.sample(words, min(len(words), 3)):
            c = rng.randrange(1, F.q)
            theta = la.add(F, theta, la.scale(F, w, c))
        cp = la.charpoly(F, theta)
        for f, _ in poly.poly_factor(F, cp):
            ft = la.mat_poly(F, f, theta)
            ker = la.kernel(F, ft)
            v = ker.basis[0]
            S = spin_space(F, gens, v[None, :], n)
            if S.dim < n:
                return IrreducibilityResult(False, witness=Submodule(M, S, True))
            ker_t = la.kernel(F, np.ascontiguousarray(ft.T))
            St = spin_space(F, gens_t, ker_t.basis[:1], n)
            if St.dim < n:
                W = annihilator_pairing(St)
                return IrreducibilityResult(False, witness=submodule(M, W))
            if ker.dim == poly.degree(f):
                cert = NortonCertificate(theta, tuple(f), ker.dim, S.dim, St.dim, seed_label)
                M._certificate = cert
                return IrreducibilityResult(True, certificate=cert)
    raise RuntimeError(f"Norton test inconclusive after {MAX_NORTON_TRIES} algebra elements")


@dataclass
class SimpleClass:
    """One isomorphism class of composition factors."""

    module: FGModule
    multiplicity: int
    end_basis: tuple[np.ndarray, ...] = ()
    traces: tuple[int, ...] = ()

    @property
    def end_dim(self) -> int:
        return len(self.end_basis)

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def division_dim(self) -> int:
        """Dimension over the endomorphism division ring."""
        return self.dim // self.end_dim


@dataclass
class CompositionReport:
    classes: list[SimpleClass]
    seed: int | None = None

    @property
    def length(self) -> int:
        return sum(c.multiplicity for c in self.classes)

    def signature(self) -> list[tuple[int, tuple[int, ...], int]]:
        """Seed-independent summary: (dim, traces, multiplicity) per class."""
        return [(c.dim, c.traces, c.multiplicity) for c in self.classes]

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "classes": [
                {
                    "dim": c.dim,
                    "multiplicity": c.multiplicity,
                    "end_dim": c.end_dim,
                    "action": [m.tolist() for m in c.module.gen_action],
                }
                for c in self.classes
            ],
        }


def _composition_factors(M: FGModule, rng: random.Random) -> list[FGModule]:
    out = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.dim == 0:
            continue
        res = is_irreducible(X, rng)
        if res.irreducible:
            out.append(X)
            continue
        U = res.witness.space
        quot, _, _ = quotient_module(X, U)
        stack.append(quot)
        stack.append(restrict(X, U))
    return out


def classify(factors, classes: list[SimpleClass] | None = None) -> list[SimpleClass]:
    """Group certified simple modules into isomorphism classes."""
    classes = [] if classes is None else classes
    for S in factors:
        for c in classes:
            if is_isomorphic_simple(c.module, S)[0]:
                c.multiplicity += 1
                break
        else:
            classes.append(SimpleClass(S, 1, (), S.traces()))
    return classes


def chop(M: FGModule, seed=0) -> CompositionReport:
    """Composition factors of M grouped into isomorphism classes.

    Classes are ordered by (dimension, trace vector), both isomorphism
    invariants, so the report does not depend on the seed.
    """
    rng = _rng(seed)
    classes = classify(_composition_factors(M, rng))
    classes.sort(key=lambda c: (c.dim, c.traces))
    for c in classes:
        c.end_basis = hom_space(c.module, c.module).basis
    return CompositionReport(classes, seed if isinstance(seed, int) else None)


@dataclass
class SocleReport:
    submodule: Submodule
    components: list[tuple[int, Subspace]]


def _isotypic_images(M: FGModule, simples) -> list[tuple[int, Subspace]]:
    F = M.field
    out = []
    for i, S in enumerate(simples):
        H = hom_space(S, M)
        if H.dim:
            out.append((i, Subspace.span(F, np.vstack(H.basis), M.dim)))
    return out


def socle(M: FGModule, seed=0, composition: CompositionReport | None = None) -> SocleReport:
    """Sum of the images of Hom(S, M) over the composition-factor classes S."""
    comp = composition if composition is not None else chop(M, seed)
    parts = _isotypic_images(M, [c.module for c in comp.classes])
    total = M.zero()
    for _, W in parts:
        total = la.subspace_sum(total, W)
    return SocleReport(Submodule(M, total, True), parts)


def dual_classes(comp: CompositionReport) -> list[FGModule]:
    out = []
    for c in comp.classes:
        D = dual(c.module)
        # the dual of a simple module is simple
        D._certificate = c.module._certificate
        out.append(D)
    return out


def frattini(M: FGModule, seed=0, composition: CompositionReport | None = None) -> Submodule:
    """Intersection of the maximal submodules, as the annihilator of Soc(M*)."""
    if M.dim == 0:
        return Submodule(M, M.zero(), True)
    comp = composition if composition is not None else chop(M, seed)
    D = dual(M)
    soc = D.zero()
    for _, W in _isotypic_images(D, dual_classes(comp)):
        soc = la.subspace_sum(soc, W)
    return submodule(M, annihilator_pairing(soc))


@dataclass
class Component:
    """Homogeneous component: ``width`` copies of ``simple``."""

    simple: FGModule
    width: int
    end_basis: tuple[np.ndarray, ...]
    homs: list[np.ndarray]
    summands: list[Subspace]
    space: Subspace
    class_index: int = -1

    @property
    def end_dim(self) -> int:
        return len(self.end_basis)

    @property
    def division_dim(self) -> int:
        return self.simple.dim // self.end_dim


@dataclass
class DecompositionReport:
    components: list[Component]
    dim: int
    seed: int | None = None

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def widths(self) -> list[int]:
        return [c.width for c in self.components]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "n": self.n,
            "components": [
                {
                    "simple_dim": c.simple.dim,
                    "end_dim": c.end_dim,
                    "width": c.width,
                    "simple_action": [m.tolist() for m in c.simple.gen_action],
                    "summands": [s.basis.tolist() for s in c.summands],
                }
                for c in self.components
            ],
        }


def semisimple_decompose(
    N: FGModule,
    seed=0,
    composition: CompositionReport | None = None,
    *,
    check: bool = True,
) -> DecompositionReport:
    """Split a semisimple module into homogeneous components with explicit summands.

    ``composition`` may list simple classes of a larger module; classes that
    do not occur in N are skipped.
    """
    comp = composition if composition is not None else chop(N, seed)
    if check and frattini(N, seed, composition=comp).dim:
        raise NotSemisimple("module has a nonzero Frattini submodule")
    F = N.field
    components = []
    total = 0
    for idx, c in enumerate(comp.classes):
        H = hom_space(c.module, N)
        if H.dim == 0:
            continue
        end = c.end_basis or hom_space(c.module, c.module).basis
        e = len(end)
        assert H.dim % e == 0, "Hom dimension must be a multiple of the End dimension"
        width = H.dim // e
        acc = N.zero()
        summands, homs = [], []
        for X in H.basis:
            img = Subspace.span(F, X, N.dim)
            if la.subspace_intersect(acc, img).dim == 0:
                acc = la.subspace_sum(acc, img)
                summands.append(img)
                homs.append(X)
        assert len(summands) == width, "peeled summands disagree with the Hom/End width"
        components.append(Component(c.module, width, end, homs, summands, acc, idx))
        total += width * c.dim
    if total != N.dim:
        raise NotSemisimple(f"homogeneous components cover {total} of {N.dim} dimensions")
    return DecompositionReport(components, N.dim, seed if isinstance(seed, int) else None)
