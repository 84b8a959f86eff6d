"""Pure-Python utility-matrix kernel.

Works on arbitrary-precision integers, so it has no overflow limit; it is
also the fallback when the compiled kernel is unavailable.  Returns the
utility matrix as integer numerators (one row per individual) plus one
denominator per individual.
"""

from __future__ import annotations

from .encode import EncodedScenario

MEASURE_CODES = {"cardinal": 0, "normalized": 1, "fuzzy": 2}


def utility_matrix(enc: EncodedScenario,
                   measure: str) -> tuple[list[list[int]], list[int]]:
    code = MEASURE_CODES[measure]
    nums: list[list[int]] = []
    dens: list[int] = []
    if code <= 1:
        for support in enc.support_masks:
            nums.append([(support & offer).bit_count()
                         for offer in enc.offer_masks])
            dens.append(1 if code == 0 else support.bit_count())
    else:
        for row, total in zip(enc.weights, enc.totals):
            nums.append([sum(row[p] for p in positions)
                         for positions in enc.offer_positions])
            dens.append(total)
    return nums, dens
