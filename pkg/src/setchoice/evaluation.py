"""Individual profiles, social aggregation, and ranking.

A profile is one individual's utility vector over the environment's
alternatives, in environment order.  A process bundles environment,
society, all profiles, and the aggregator; evaluating it applies the
aggregator column-wise (one social utility per alternative).  Batch
profile construction runs through the integer kernel; the per-pair
functions in :mod:`setchoice.measures` are the semantic reference and the
two are held equal by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import _core
from .errors import LengthMismatch, MeasureError, ScenarioError
from .measures import (
    Environment,
    Individual,
    Society,
    UtilityMeasure,
    utility,
)
from .universe import Universe

#: Grouping tolerance when ranking float-valued profiles; exact values
#: (int/Fraction) are grouped by equality.
FLOAT_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class IndividualProfile:
    individual_id: str
    values: tuple[int | Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SocialProfile:
    values: tuple[Fraction, ...]
    measure: UtilityMeasure
    aggregator: str
    out_of_domain: bool = False

    def __len__(self) -> int:
        return len(self.values)


def _mean(values: Sequence[int | Fraction]) -> Fraction:
    return Fraction(sum(values)) / len(values)


@dataclass(frozen=True)
class Aggregator:
    """A named reduction of N individual utilities to one social utility.

    Only the arithmetic mean ships; the registry is the extension point.
    """

    name: str
    fn: Callable[[Sequence[int | Fraction]], Fraction]

    def __call__(self, values: Sequence[int | Fraction]) -> Fraction:
        return self.fn(values)


AGGREGATORS: dict[str, Aggregator] = {
    "mean": Aggregator("mean", _mean),
}


def get_aggregator(name: str | Aggregator) -> Aggregator:
    if isinstance(name, Aggregator):
        return name
    try:
        return AGGREGATORS[name]
    except KeyError:
        known = ", ".join(sorted(AGGREGATORS))
        raise ScenarioError(f"unknown aggregator '{name}' (known: {known})") from None


@dataclass(frozen=True)
class EvaluationProcess:
    environment: Environment
    society: Society
    profiles: tuple[IndividualProfile, ...]
    aggregator: Aggregator
    measure: UtilityMeasure

    def __post_init__(self):
        if len(self.profiles) != self.society.size:
            raise LengthMismatch("one profile per individual is required")
        for profile, individual in zip(self.profiles, self.society.individuals):
            if profile.individual_id != individual.id:
                raise ScenarioError(
                    f"profile order disagrees with society order at "
                    f"'{profile.individual_id}'")
            if len(profile) != self.environment.size:
                raise LengthMismatch(
                    f"profile of '{profile.individual_id}' has "
                    f"{len(profile)} values for {self.environment.size} "
                    "alternatives")


@dataclass(frozen=True)
class RankingTier:
    value: object
    ids: tuple[str, ...]


@dataclass(frozen=True)
class Ranking:
    tiers: tuple[RankingTier, ...]

    def __iter__(self):
        return iter(self.tiers)

    @property
    def ordered_ids(self) -> tuple[str, ...]:
        return tuple(i for tier in self.tiers for i in tier.ids)


def individual_profile(measure: UtilityMeasure | str, environment: Environment,
                       individual: Individual,
                       universe: Universe) -> IndividualProfile:
    """One individual's utilities over all alternatives, per-pair reference
    path (no kernel)."""
    measure = UtilityMeasure(measure)
    values = []
    for alternative in environment.alternatives:
        try:
            values.append(utility(measure, alternative, individual, universe))
        except MeasureError as err:
            raise err.with_context(individual_id=individual.id,
                                   alternative_id=alternative.id) from None
    return IndividualProfile(individual.id, tuple(values))


def _precheck(measure: UtilityMeasure, society: Society,
              environment: Environment) -> None:
    # Surface per-individual failures exactly where the sequential
    # per-pair path would: at the first alternative.
    first = environment.alternatives[0].id
    for individual in society.individuals:
        try:
            utility(measure, environment.alternatives[0], individual,
                    environment.universe)
        except MeasureError as err:
            raise err.with_context(individual_id=individual.id,
                                   alternative_id=first) from None


def build_process(measure: UtilityMeasure | str, aggregator: str | Aggregator,
                  environment: Environment, society: Society,
                  universe: Universe) -> EvaluationProcess:
    """Compute every individual's profile (via the kernel) and bundle the
    evaluation quadruple."""
    measure = UtilityMeasure(measure)
    aggregator = get_aggregator(aggregator)
    if environment.universe != universe or society.universe != universe:
        raise ScenarioError("environment and society must share the given universe")
    _precheck(measure, society, environment)

    enc = _core.encode(universe, environment, society)
    nums, dens = _core.utility_matrix(enc, measure.value)
    profiles = []
    for individual, num_row, den in zip(society.individuals, nums, dens):
        if measure is UtilityMeasure.CARDINAL:
            values: tuple[int | Fraction, ...] = tuple(num_row)
        else:
            values = tuple(Fraction(num, den) for num in num_row)
        profiles.append(IndividualProfile(individual.id, values))
    return EvaluationProcess(environment, society, tuple(profiles),
                             aggregator, measure)


def evaluate(process: EvaluationProcess) -> SocialProfile:
    """Apply the aggregator per alternative across all individual profiles."""
    columns = zip(*(profile.values for profile in process.profiles))
    values = tuple(process.aggregator(column) for column in columns)
    out_of_domain = any(v < 0 or v > 1
                        for profile in process.profiles
                        for v in profile.values)
    return SocialProfile(values=values, measure=process.measure,
                         aggregator=process.aggregator.name,
                         out_of_domain=out_of_domain)


def rank(profile: SocialProfile, environment: Environment) -> Ranking:
    """Order alternatives by decreasing social utility, grouping ties.

    Exact values group by equality; if any value is a float, values within
    FLOAT_TIE_TOLERANCE of a tier's leading value join that tier.  Ids
    inside a tier are sorted lexicographically.
    """
    if len(profile.values) != environment.size:
        raise LengthMismatch(
            f"social profile has {len(profile.values)} values for "
            f"{environment.size} alternatives")
    approximate = any(isinstance(v, float) for v in profile.values)
    pairs = sorted(zip(profile.values, environment.ids),
                   key=lambda pair: (-pair[0], pair[1]))
    tiers: list[RankingTier] = []
    current_value = None
    current_ids: list[str] = []
    for value, alt_id in pairs:
        if current_ids and (
            value == current_value
            or (approximate and abs(current_value - value) <= FLOAT_TIE_TOLERANCE)
        ):
            current_ids.append(alt_id)
        else:
            if current_ids:
                tiers.append(RankingTier(current_value, tuple(sorted(current_ids))))
            current_value = value
            current_ids = [alt_id]
    if current_ids:
        tiers.append(RankingTier(current_value, tuple(sorted(current_ids))))
    return Ranking(tuple(tiers))
