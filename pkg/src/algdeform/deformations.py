"""Deformation checker: perturbing a structure by a degree-1 direction.

The sum pi + pi' is again a valid structure exactly when pi' satisfies the
Maurer-Cartan equation in the differential graded Lie algebra induced by
pi.  Both routes are always computed; a disagreement means a bug in a
bracket or a coboundary formula and raises instead of returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brackets import mc_check
from .cochains import Cochain, structure_element
from .structures import Algebra, ValidationReport, Witness, validate_structure


@dataclass(frozen=True)
class DeformationReport:
    mc_verdict: bool
    direct_verdict: bool
    mc_defect: Cochain
    witnesses: tuple[Witness, ...]

    @property
    def verdict(self) -> bool:
        return self.mc_verdict


def deformation_check(base: Algebra, direction: Algebra) -> DeformationReport:
    """Check a deformation both ways: Maurer-Cartan and direct validation.

    ``direction`` carries the perturbation as a constants tensor of the same
    kind and dimension as ``base`` (skew storage enforced by the Algebra
    type for lie/threelie); its own axioms are irrelevant.
    """
    if base.kind is not direction.kind or base.dim != direction.dim:
        raise ValueError("base and direction must share kind and dimension")
    if not validate_structure(base).valid:
        raise ValueError("deformation_check requires a valid base structure")
    mc = mc_check(structure_element(direction), base=base, check=False)
    direct: ValidationReport = validate_structure(base.plus(direction))
    if mc.ok != direct.valid:
        raise RuntimeError(
            "Maurer-Cartan and direct deformation verdicts disagree; "
            "this indicates an internal bracket/coboundary bug"
        )
    return DeformationReport(mc.ok, direct.valid, mc.defect, direct.witnesses)
