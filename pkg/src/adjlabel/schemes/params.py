from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..combinat import FAMILIES
from .base import Engine, SchemeError
from .bipartite import BipartiteEngine, near_balanced_fits
from .directed import DirectedEngine
from .naive import NaiveEngine
from .undirected import TournamentEngine, UndirectedEngine

MODES = ("standard", "tight", "naive")
MODE_CHOICES = ("auto",) + MODES


@dataclass(frozen=True)
class SchemeParams:
    """Every layout constant of one scheme instance, derived from (family, n, mode)."""

    family: str
    n: int
    mode: str
    L: int
    n_u: int = 0
    k: int = 0
    ell: tuple[int, ...] = ()
    ell_prime: tuple[int, ...] = ()
    delta: int = 0
    regions: tuple[tuple[str, int, int], ...] = ()
    index_code: str = "fixed"
    content_max: int = 0
    # bipartite only
    regime: str = ""
    big_split: int = 0
    a: int = 0
    b: int = 0
    extra_bits: int = 0
    constant: int = 0
    engine: Engine = field(default=None, compare=False, repr=False, hash=False)

    @property
    def family_code(self) -> int:
        return FAMILIES.index(self.family)

    @property
    def mode_code(self) -> int:
        return MODES.index(self.mode)


def _build(family: str, n: int, mode: str, n_u: int, regime: str | None) -> Engine:
    if mode == "naive":
        return NaiveEngine(family, n, n_u)
    if family == "directed":
        return DirectedEngine(n, tight=(mode == "tight"))
    if family == "undirected":
        return UndirectedEngine(n, tight=(mode == "tight"))
    if family == "tournament":
        return TournamentEngine(UndirectedEngine(n, tight=(mode == "tight")))
    if mode == "tight":
        raise SchemeError("bipartite graphs have no tight mode")
    if regime is None and not near_balanced_fits(n):
        raise SchemeError(f"bipartite standard mode does not fit n={n}")
    return BipartiteEngine(n, n_u, regime)


def _describe(family: str, n: int, mode: str, n_u: int, engine: Engine) -> SchemeParams:
    extra = {}
    if isinstance(engine, DirectedEngine):
        extra = dict(k=engine.k, ell=engine.ell, ell_prime=engine.ell_prime)
    elif isinstance(engine, (UndirectedEngine, TournamentEngine)):
        extra = dict(k=engine.k, ell=engine.ell0, ell_prime=engine.ell_prime0)
    elif isinstance(engine, BipartiteEngine):
        extra = dict(k=engine.k, regime=engine.regime, big_split=engine.R, a=engine.a, b=engine.b,
                     extra_bits=engine.g, constant=engine.constant)
    if not isinstance(engine, NaiveEngine):
        extra.update(delta=engine.delta, regions=engine.regions(), content_max=engine.content_max)
    else:
        extra.update(content_max=engine.L)
    return SchemeParams(
        family=family, n=n, mode=mode, L=engine.L, n_u=n_u,
        index_code="economical" if engine.economical else "fixed",
        engine=engine, **extra,
    )


@lru_cache(maxsize=256)
def params_for(family: str, n: int, mode: str = "auto", n_u: int | None = None,
               regime: str | None = None) -> SchemeParams:
    """Resolve (family, n, mode) to a concrete scheme.

    ``auto`` picks the shortest of tight, standard and naive that is valid
    for n.  ``n_u`` is the U-side size of a bipartite graph (default n // 2);
    ``regime`` forces a bipartite regime.
    """
    if family not in FAMILIES:
        raise SchemeError(f"unknown family {family!r}")
    if n < 1:
        raise SchemeError("n must be >= 1")
    if mode not in MODE_CHOICES:
        raise SchemeError(f"unknown mode {mode!r}")
    if family == "bipartite":
        n_u = n // 2 if n_u is None else n_u
    else:
        n_u = 0
    if mode != "auto":
        return _describe(family, n, mode, n_u, _build(family, n, mode, n_u, regime))
    best = None
    for cand in ("tight", "standard", "naive"):
        try:
            engine = _build(family, n, cand, n_u, regime)
        except SchemeError:
            continue
        if best is None or engine.L < best[1].L:
            best = (cand, engine)
    return _describe(family, n, best[0], n_u, best[1])
