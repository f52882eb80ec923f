"""Compensated (Kahan-Neumaier) summation for complex series.

Series coefficients in this package range over many orders of magnitude,
so plain accumulation can lose digits; all series sums go through this.
"""

__all__ = ["CompensatedSum", "kahan_sum"]


class CompensatedSum:
    """Running Neumaier sum over complex values."""

    def __init__(self):
        self._s = 0.0 + 0.0j
        self._c = 0.0 + 0.0j

    def add(self, x):
        x = complex(x)
        t = self._s + x
        if abs(self._s) >= abs(x):
            self._c += (self._s - t) + x
        else:
            self._c += (x - t) + self._s
        self._s = t

    @property
    def value(self) -> complex:
        return self._s + self._c


def kahan_sum(values) -> complex:
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.value
