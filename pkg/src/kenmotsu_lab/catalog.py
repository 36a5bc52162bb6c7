"""Built-in frame models.

``kenmotsu5``   five-dimensional Kenmotsu model, ``[e_i, e_5] = e_i``
``hyperbolic3`` three-dimensional Kenmotsu model, ``[e_i, e_3] = e_i``
``flat3``       abelian frame carrying the same contact data (not Kenmotsu)
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import exact
from .contact import AlmostContactStructure
from .document import ManifoldDocument, parse_manifold
from .frame import LieFrameManifold

DESCRIPTIONS = {
    "kenmotsu5": "5-dim Kenmotsu frame [e_i,e_5]=e_i, g=I, xi=e_5; conformal eta-Ricci soliton with V=xi",
    "hyperbolic3": "3-dim Kenmotsu frame [e_1,e_3]=e_1, [e_2,e_3]=e_2, g=I, xi=e_3",
    "flat3": "abelian 3-dim frame with phi e_1=e_2, phi e_2=-e_1, xi=e_3 (not Kenmotsu)",
}


def standard_phi(dim: int):
    """``phi e_{2k-1} = e_{2k}``, ``phi e_{2k} = -e_{2k-1}``, ``phi e_dim = 0``."""
    phi = exact.zeros((dim, dim))
    for k in range(0, dim - 1, 2):
        phi[k + 1, k] = Fraction(1)
        phi[k, k + 1] = Fraction(-1)
    return phi


def hyperbolic_kenmotsu(n: int, twist=0) -> tuple[LieFrameManifold, AlmostContactStructure]:
    """Kenmotsu frame of dimension ``2n+1`` with ``xi = e_{2n+1}``.

    ``[X, xi] = X + twist * phi X`` on the contact distribution. Any rational
    twist gives a different Lie algebra, all with the same local geometry.
    """
    dim = 2 * n + 1
    t = Fraction(twist)
    brackets = {}
    for k in range(1, dim, 2):
        brackets[(k, dim)] = {k: 1, k + 1: t}
        brackets[(k + 1, dim)] = {k + 1: 1, k: -t}
    m = LieFrameManifold.from_brackets(dim, brackets)
    return m, AlmostContactStructure.build(m, standard_phi(dim), exact.unit_vector(dim, dim - 1))


def flat(dim: int = 3) -> tuple[LieFrameManifold, AlmostContactStructure]:
    m = LieFrameManifold.from_brackets(dim, {})
    return m, AlmostContactStructure.build(m, standard_phi(dim), exact.unit_vector(dim, dim - 1))


def build(name: str) -> ManifoldDocument:
    if name == "kenmotsu5":
        m, acs = hyperbolic_kenmotsu(2)
    elif name == "hyperbolic3":
        m, acs = hyperbolic_kenmotsu(1)
    elif name == "flat3":
        m, acs = flat(3)
    else:
        raise KeyError(name)
    return ManifoldDocument.from_structures(name, m, acs, catalog_tag=name)


def names() -> list[str]:
    return list(DESCRIPTIONS)


def _resource(name: str):
    return resources.files("kenmotsu_lab").joinpath("catalog").joinpath(f"{name}.json")


def text(name: str) -> str:
    if name not in DESCRIPTIONS:
        raise KeyError(name)
    return _resource(name).read_text(encoding="utf-8")


def load(name: str) -> ManifoldDocument:
    return parse_manifold(text(name))


def resolve(arg: str) -> tuple[str, str]:
    """Document text for a file path, falling back to catalog names.

    ``kenmotsu5`` and ``kenmotsu5.json`` both resolve to the built-in entry
    when no such file exists.
    """
    path = Path(arg)
    if path.is_file():
        return str(path), path.read_text(encoding="utf-8")
    stem = path.name[:-5] if path.name.endswith(".json") else path.name
    if stem in DESCRIPTIONS:
        return f"catalog:{stem}", text(stem)
    raise FileNotFoundError(f"no such file or catalog entry: {arg}")
