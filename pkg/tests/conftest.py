import math

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("suite")


def ulp_steps(a: float, b: float, limit: int = 8) -> int:
    """Representable values strictly between a and b, plus one if they differ.

    Returns ``limit`` when the gap is at least that big (or either value
    is NaN); 0 means equality, 1 means adjacent floats.
    """
    if math.isnan(a) or math.isnan(b):
        return limit
    if a == b:
        return 0
    lo, hi = (a, b) if a < b else (b, a)
    steps = 0
    v = lo
    while v < hi:
        v = math.nextafter(v, math.inf)
        steps += 1
        if steps >= limit:
            return limit
    return steps
