from fractions import Fraction

from .models import GravityRow, GravityTable
from .rules import argmax_indices


def constant_sum_product_table(total, step, g_constant, distance):
    """
    Split a fixed total mass m1 + m2 in steps and tabulate m1*m2 and the
    attraction g*m1*m2/distance^2. The product peaks at the even split.
    """
    total, step = Fraction(total), Fraction(step)
    g_constant, distance = Fraction(g_constant), Fraction(distance)
    for name, value in (('total', total), ('step', step), ('g_constant', g_constant), ('distance', distance)):
        if value <= 0:
            raise ValueError(f"{name} must be positive, got {value}.")
    if total % step:
        raise ValueError(f"step {step} does not divide total {total}.")

    rows = []
    for k in range(int(total / step) + 1):
        m1 = k * step
        m2 = total - m1
        rows.append(GravityRow(m1, m2, m1 * m2, g_constant * m1 * m2 / distance ** 2))
    best = tuple(rows[i] for i in argmax_indices(row.product for row in rows))
    return GravityTable(total, step, g_constant, distance, tuple(rows), best)
