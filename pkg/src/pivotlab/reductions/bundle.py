"""The package a reduction hands to the verifiers and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..core import LocalSearchInstance, Solution


@dataclass
class ReductionBundle:
    """Target instance plus the maps that make a (tight) reduction checkable.

    ``tightness`` is the declared distance bound between R members whose
    images are equal or adjacent, or None when only tightness is claimed.
    ``metric`` says how that distance is measured: ``transition`` walks
    improving moves, ``neighborhood`` walks the undirected neighbor graph.
    """

    name: str
    source: LocalSearchInstance
    target: LocalSearchInstance
    psi: Callable[[Solution], Solution]
    embed: Callable[[Solution], Solution]
    r_member: Callable[[Solution], bool]
    tightness: int | None
    tightness_expr: str
    metric: str = "transition"
    r_nodes: Callable[[], Iterable[Solution]] | None = None
    meta: dict = field(default_factory=dict)

    def members_of_r(self) -> list[Solution]:
        if self.r_nodes is not None:
            return sorted(set(self.r_nodes()))
        return sorted({self.embed(s) for s in self.source.solutions()})


def identity_bundle(instance: LocalSearchInstance) -> ReductionBundle:
    """Source equals target, psi and embed are the identity and R is everything."""
    return ReductionBundle(
        name="identity",
        source=instance,
        target=instance,
        psi=lambda s: s,
        embed=lambda s: s,
        r_member=instance.is_valid,
        tightness=1,
        tightness_expr="1",
        r_nodes=instance.solutions,
    )
