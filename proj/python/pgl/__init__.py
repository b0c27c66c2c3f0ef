"""Pandemic location game: final sizes, equilibria and price of anarchy."""

from ._pgl import (  # noqa: F401
    Allocation,
    AltruisticRatio,
    DomainError,
    EssRecord,
    EssReport,
    Error,
    FinalSizeSolution,
    GameParams,
    LocationCost,
    OptimumBounds,
    PoaReport,
    Population,
    SingularityError,
    SirTrajectory,
    SolverError,
    altruistic_cost,
    altruistic_poa_growth,
    altruistic_stability_interval,
    attack_probability,
    attack_probability_derivative,
    check_ess,
    enumerate_uniform_ess,
    final_size,
    final_size_derivative,
    final_size_second_derivative,
    isolation_cost,
    max_selfish_support,
    optimal_social_cost,
    selfish_cost,
    selfish_cost_derivative,
    selfish_poa,
    simulate_sir,
    social_cost,
)

__version__ = "1.0.0"
