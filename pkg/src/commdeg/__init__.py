"""commdeg: exact and Monte Carlo commuting-pair probabilities.

Finite groups are explicit multiplication tables; every exact quantity is
an arbitrary-precision Fraction. Profinite groups appear as truncated
towers of finite quotients, compact Lie groups as certificate presets for
the power-map singularity criteria, and a counter-based sampler estimates
the same probabilities on continuous presets.
"""
from commdeg import errors
from commdeg.actions import (
    FiniteAction,
    conjugation_action,
    equalizer_prob_via_group,
    equalizer_prob_via_points,
    finite_orbit_set,
    fixed_set,
    isotropy,
    orbits,
)
from commdeg.degrees import (
    DegreeReport,
    Distribution,
    Rational,
    degree_bruteforce,
    degree_centralizer_sum,
    degree_mn,
    degree_mn_pushforward,
    degree_of_product,
    degree_structural,
    haar,
    pushforward_power,
    sign_flip_audit,
)
from commdeg.groups import (
    GroupTable,
    Homomorphism,
    Subgroup,
    center,
    centralizer,
    characteristic_abelian_subgroup,
    commutator_subgroup,
    conjugacy_classes,
    direct_product,
    power_map,
    quotient,
    semidirect_product,
)
from commdeg.lie import (
    LieElement,
    LiePreset,
    StraightnessVerdict,
    adjoint_eigenvalues,
    alpha_matrix,
    build_lie_preset,
    is_singular,
    is_totally_singular,
    singular_via_alpha,
    straightness_verdict,
)
from commdeg.sampler import (
    Estimate,
    SampledElement,
    commutes,
    estimate_degree_mn,
    estimate_finite,
    get_sampler_preset,
    sample,
)
from commdeg.specs import build_group
from commdeg.towers import (
    Tower,
    TowerReport,
    cyclic_tower,
    elementary_tower,
    fc_class_growth,
    heisenberg_tower,
    product_degree_partials,
    straightness_fraction,
    tower_degrees,
)

__version__ = "0.1.0"
