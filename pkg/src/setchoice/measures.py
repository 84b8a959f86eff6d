"""Utility measures over objective sets.

Three measures are provided:

* ``cardinal`` — how many of the individual's required objectives the
  alternative offers (a non-negative integer).
* ``normalized`` — the same overlap divided by the number of required
  objectives, so every fully satisfied individual scores 1 regardless of
  how demanding it is.
* ``fuzzy`` — for weighted requirements, the share of the individual's
  total objective weight that falls on offered objectives.  The divisor is
  the weight summed over the whole declared universe, so declaring extra
  positive-weight objectives that nothing offers lowers the score; this is
  intentional and documented behaviour, not a bug.

All arithmetic is exact: weights are stored as :class:`fractions.Fraction`
and results are ``int`` or ``Fraction``.  Rendering to fixed-precision
decimal happens only at the output layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import (
    EmptyIndividual,
    NonCrispIndividual,
    ScenarioError,
    ZeroMembershipMass,
)
from .universe import ObjectiveSet, Universe, check_token

ONE = Fraction(1)
ZERO = Fraction(0)


class UtilityMeasure(str, Enum):
    CARDINAL = "cardinal"
    NORMALIZED = "normalized"
    FUZZY = "fuzzy"


def to_fraction(value: object, where: str = "membership value") -> Fraction:
    """Convert a numeric literal to an exact Fraction.

    Strings and Decimals convert exactly.  Floats are read as the decimal
    literal they print as (``0.4`` means 4/10, not its binary expansion),
    matching the scenario-file semantics.  Booleans are rejected (JSON
    ``true`` is not a weight).
    """
    if isinstance(value, bool):
        raise ScenarioError(f"{where} must be a number, got {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    try:
        return Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError, OverflowError):
        raise ScenarioError(f"{where} must be a number, got {value!r}") from None


@dataclass(frozen=True)
class Alternative:
    """An alternative, identified by name, offering a non-empty set of
    objectives."""

    id: str
    offers: ObjectiveSet

    def __post_init__(self):
        check_token(self.id, "alternative id")
        if not self.offers.members:
            raise ScenarioError(f"alternative '{self.id}' offers no objectives")

    @property
    def universe(self) -> Universe:
        return self.offers.universe


class Individual:
    """An individual characterised by objective weights in [0, 1].

    ``membership`` maps objective tokens to weights; objectives of the
    universe that are absent weigh 0.  Explicit zero entries are dropped on
    construction, so two individuals that differ only in spelled-out zeros
    compare equal.  An individual is *crisp* when every stored weight is 1.
    """

    __slots__ = ("id", "universe", "_mu")

    def __init__(self, id: str, universe: Universe,
                 membership: Mapping[str, object]):
        check_token(id, "individual id")
        mu: dict[str, Fraction] = {}
        for token in universe.objectives:
            if token not in membership:
                continue
            value = to_fraction(membership[token],
                                f"membership of {token!r}")
            if value < 0 or value > 1:
                raise ScenarioError(
                    f"membership out of range: {token!r} has value {value}")
            if value > 0:
                mu[token] = value
        for token in membership:
            if token not in universe:
                raise ScenarioError(f"unknown objective {token!r}")
        if not mu:
            raise ScenarioError(
                f"individual '{id}' requires no objectives (empty support)")
        self.id = id
        self.universe = universe
        self._mu = mu

    @classmethod
    def crisp(cls, id: str, universe: Universe,
              requires: Iterable[str]) -> "Individual":
        """Build an individual that requires exactly the given objectives."""
        return cls(id, universe, {token: 1 for token in requires})

    @property
    def membership(self) -> dict[str, Fraction]:
        """Positive weights only, keyed by objective token."""
        return dict(self._mu)

    def mu(self, token: str) -> Fraction:
        if token not in self.universe:
            raise ScenarioError(f"unknown objective {token!r}")
        return self._mu.get(token, ZERO)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._mu)

    @property
    def support_set(self) -> ObjectiveSet:
        return ObjectiveSet(self.universe, self.support)

    @property
    def mass(self) -> Fraction:
        """Total weight over the universe (zeros contribute nothing)."""
        return sum(self._mu.values(), ZERO)

    @property
    def is_crisp(self) -> bool:
        return all(v == 1 for v in self._mu.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Individual):
            return NotImplemented
        return (self.id == other.id and self.universe == other.universe
                and self._mu == other._mu)

    def __hash__(self) -> int:
        return hash((self.id, self.universe, frozenset(self._mu.items())))

    def __repr__(self) -> str:
        weights = {t: str(v) for t, v in sorted(self._mu.items())}
        return f"Individual({self.id!r}, {weights})"


def _unique_ids(items, what: str) -> None:
    seen = set()
    for item in items:
        if item.id in seen:
            raise ScenarioError(f"duplicate {what} id '{item.id}'")
        seen.add(item.id)


def _shared_universe(items, what: str) -> Universe:
    universe = items[0].universe
    for item in items[1:]:
        if item.universe != universe:
            raise ScenarioError(f"{what} '{item.id}' uses a different universe")
    return universe


@dataclass(frozen=True)
class Environment:
    """The non-empty, ordered collection of alternatives under evaluation."""

    alternatives: tuple[Alternative, ...]

    def __post_init__(self):
        if not isinstance(self.alternatives, tuple):
            object.__setattr__(self, "alternatives", tuple(self.alternatives))
        if not self.alternatives:
            raise ScenarioError("environment must contain at least one alternative")
        _unique_ids(self.alternatives, "alternative")
        _shared_universe(self.alternatives, "alternative")

    @property
    def universe(self) -> Universe:
        return self.alternatives[0].universe

    @property
    def size(self) -> int:
        return len(self.alternatives)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.alternatives)

    def __len__(self) -> int:
        return len(self.alternatives)

    def __iter__(self):
        return iter(self.alternatives)


@dataclass(frozen=True)
class Society:
    """The non-empty, ordered collection of individuals doing the judging."""

    individuals: tuple[Individual, ...]

    def __post_init__(self):
        if not isinstance(self.individuals, tuple):
            object.__setattr__(self, "individuals", tuple(self.individuals))
        if not self.individuals:
            raise ScenarioError("society must contain at least one individual")
        _unique_ids(self.individuals, "individual")
        _shared_universe(self.individuals, "individual")

    @property
    def universe(self) -> Universe:
        return self.individuals[0].universe

    @property
    def size(self) -> int:
        return len(self.individuals)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.individuals)

    def __len__(self) -> int:
        return len(self.individuals)

    def __iter__(self):
        return iter(self.individuals)


def _check_pair(alternative: Alternative, individual: Individual) -> None:
    if alternative.universe != individual.universe:
        raise ScenarioError(
            f"alternative '{alternative.id}' and individual "
            f"'{individual.id}' use different universes")


def _require_crisp(individual: Individual, measure: str) -> frozenset[str]:
    if not individual.is_crisp:
        raise NonCrispIndividual(
            f"{measure} utility is defined only for crisp individuals "
            "(all weights 0 or 1)",
            individual_id=individual.id)
    support = individual.support
    if not support:
        raise EmptyIndividual("individual requires no objectives",
                              individual_id=individual.id)
    return support


def cardinal_utility(alternative: Alternative, individual: Individual) -> int:
    """Count of required objectives the alternative offers.

    Defined only for crisp individuals; weighted individuals are rejected
    rather than silently thresholded.
    """
    _check_pair(alternative, individual)
    support = _require_crisp(individual, "cardinal")
    return len(alternative.offers.members & support)


def normalized_cardinal_utility(alternative: Alternative,
                                individual: Individual) -> Fraction:
    """Offered-required overlap divided by the number of required
    objectives; 1 means every requirement is met, 0 means none is."""
    _check_pair(alternative, individual)
    support = _require_crisp(individual, "normalized cardinal")
    return Fraction(len(alternative.offers.members & support), len(support))


def fuzzy_utility(alternative: Alternative, individual: Individual,
                  universe: Universe) -> Fraction:
    """Weight the alternative's offer carries, as a share of the
    individual's total weight over the whole universe."""
    _check_pair(alternative, individual)
    if alternative.universe != universe:
        raise ScenarioError("alternative does not belong to the given universe")
    total = individual.mass
    if total == 0:
        raise ZeroMembershipMass("membership weights sum to zero",
                                 individual_id=individual.id)
    covered = sum((individual.mu(t) for t in alternative.offers.members), ZERO)
    return covered / total


def utility(measure: UtilityMeasure | str, alternative: Alternative,
            individual: Individual, universe: Universe) -> int | Fraction:
    """Dispatch to the requested measure."""
    measure = UtilityMeasure(measure)
    if measure is UtilityMeasure.CARDINAL:
        return cardinal_utility(alternative, individual)
    if measure is UtilityMeasure.NORMALIZED:
        return normalized_cardinal_utility(alternative, individual)
    return fuzzy_utility(alternative, individual, universe)
