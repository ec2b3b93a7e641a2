"""Integer arithmetic for block times and power-of-two time steps.

All scheduling times are counted in integer ticks, with one N-body time
unit equal to 2**52 ticks.  A step "level" k denotes a step of 2**-k time
units, i.e. 2**(52-k) ticks; levels run from 3 (the largest permitted
step, 1/8) to 52 (one tick).  Keeping times integral makes "these two
particles are due at the same moment" an exact integer equality instead
of a floating-point comparison, and keeps every particle time exactly
commensurate with its step (t mod dt == 0), which is what aligns
particles into shared blocks in the first place.

Tick counts stay below 2**63, which leaves headroom for t + dt on runs
up to 2048 time units.
"""

from __future__ import annotations

import math

from .errors import TimestepUnderflow

TICK_BITS = 52
TICKS_PER_UNIT = 1 << TICK_BITS

COARSEST_LEVEL = 3
FINEST_LEVEL = 52

DT_MAX_TICKS = 1 << (TICK_BITS - COARSEST_LEVEL)
DT_MAX_UNITS = 2.0**-COARSEST_LEVEL

MAX_TICKS = 1 << 63


def step_ticks(level: int) -> int:
    """Tick count of a level-k step (2**(52-k) ticks)."""
    if not COARSEST_LEVEL <= level <= FINEST_LEVEL:
        raise ValueError(f"step level {level} outside [{COARSEST_LEVEL}, {FINEST_LEVEL}]")
    return 1 << (TICK_BITS - level)


def step_units(level: int) -> float:
    """Step size of level k in time units (2**-k, exact)."""
    return math.ldexp(1.0, -level)


def ticks_to_units(ticks: int) -> float:
    """Convert ticks to time units; exact for tick counts below 2**53."""
    if ticks < 0:
        raise ValueError("tick count must be non-negative")
    return math.ldexp(float(ticks), -TICK_BITS)


def units_to_ticks(units: float) -> int:
    """Convert a time-unit value to ticks; the value must be tick-aligned."""
    scaled = math.ldexp(units, TICK_BITS)
    if not (scaled >= 0 and scaled.is_integer()):
        raise ValueError(f"{units!r} time units is not a whole number of ticks")
    ticks = int(scaled)
    if ticks >= MAX_TICKS:
        raise ValueError(f"{units!r} time units exceeds the representable range")
    return ticks


def is_commensurate(ticks: int, level: int) -> bool:
    """True if a time is an exact multiple of the level-k step."""
    return ticks & (step_ticks(level) - 1) == 0


def active_time(ticks: int, level: int) -> int:
    """Next due time t + dt for a particle at time t with step level k."""
    return ticks + step_ticks(level)


def quantize_dt(dt_raw: float, t: int) -> int:
    """Quantize a raw step to the largest commensurate power-of-two level.

    Returns the smallest level k >= 3 with 2**-k <= dt_raw, then increases
    k until the step divides t exactly.  Raises TimestepUnderflow when the
    commensurate step would need k > 52.
    """
    if math.isnan(dt_raw) or not dt_raw > 0.0:
        raise ValueError(f"raw time step must be positive, got {dt_raw!r}")
    if not 0 <= t < MAX_TICKS:
        raise ValueError(f"tick time {t} outside [0, 2**63)")

    if math.isinf(dt_raw):
        level = COARSEST_LEVEL
    else:
        # frexp gives dt_raw = m * 2**e with m in [0.5, 1), so 2**(e-1) is
        # the largest power of two <= dt_raw.
        _, exp = math.frexp(dt_raw)
        level = max(1 - exp, COARSEST_LEVEL)

    if t:
        trailing = (t & -t).bit_length() - 1
        if trailing < TICK_BITS:
            level = max(level, TICK_BITS - trailing)

    if level > FINEST_LEVEL:
        raise TimestepUnderflow(
            f"step {dt_raw:g} at t={t} ticks needs level {level} > {FINEST_LEVEL}"
        )
    return level
