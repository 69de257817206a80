"""Majority-vote amplification under the two-sided Hoeffding bound."""

from __future__ import annotations

import logging
import math

from scipy.stats import binom

from lhcert.errors import ValidationError
from lhcert.models import AmplificationPlan

logger = logging.getLogger(__name__)


def hoeffding_error(repetitions: int, c: float, s: float) -> float:
    """2 exp(-m (c - s)^2 / 2)."""
    return 2 * math.exp(-repetitions * (c - s) ** 2 / 2)


def plan_amplification(c: float, s: float, delta: float) -> AmplificationPlan:
    """Smallest m with 2 exp(-m (c - s)^2 / 2) <= delta; accept when more than (c+s)/2 * m runs accept."""
    if not 0.0 <= s < c <= 1.0:
        raise ValidationError(f"Need 0 <= s < c <= 1, got c={c}, s={s}")
    if delta <= 0.0:
        raise ValidationError(f"Target error must be positive, got {delta}")

    if delta >= 1.0:
        repetitions = 1
    else:
        repetitions = max(1, math.ceil(2 * math.log(2 / delta) / (c - s) ** 2))
        while repetitions > 1 and hoeffding_error(repetitions - 1, c, s) <= delta:
            repetitions -= 1

    plan = AmplificationPlan(
        c=c,
        s=s,
        target_error=delta,
        repetitions=repetitions,
        decision_threshold=(c + s) / 2 * repetitions,
    )
    logger.debug(f"Amplification plan: m={repetitions}, threshold={plan.decision_threshold:.6g}")
    return plan


def amplified_accept_probability(plan: AmplificationPlan, p: float) -> float:
    """Probability that the majority rule accepts when each run accepts with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Probability {p} outside [0, 1]")
    return float(binom.sf(math.floor(plan.decision_threshold), plan.repetitions, p))
