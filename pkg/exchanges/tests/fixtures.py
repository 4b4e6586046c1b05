"""
Shared instances for the barter test suites.

Values are written the way a user would type them in an instance file; the
builders return validated Instance objects.
"""
import json
from fractions import Fraction

from exchanges.models import Instance, Item, OutcomePoint, PlayerId
from exchanges.serializers import parse_instance


def make_instance(x_items=(), y_items=()):
    """Build an instance from (name, value_to_x, value_to_y) triples per owner."""
    items = [Item(name, PlayerId.X, Fraction(str(vx)), Fraction(str(vy))) for name, vx, vy in x_items]
    items += [Item(name, PlayerId.Y, Fraction(str(vx)), Fraction(str(vy))) for name, vx, vy in y_items]
    return Instance(tuple(items))


# Every item is worth more to its owner than to the other player.
MUTUAL_DOMINANCE_TEXT = json.dumps({
    'items': [
        {'name': 'radio', 'owner': 'X', 'value_to_x': 11, 'value_to_y': 4},
        {'name': 'laptop', 'owner': 'X', 'value_to_x': 8, 'value_to_y': 3},
        {'name': 'book', 'owner': 'X', 'value_to_x': 5, 'value_to_y': 1},
        {'name': 'watch', 'owner': 'X', 'value_to_x': 6, 'value_to_y': 1},
        {'name': 'pen', 'owner': 'X', 'value_to_x': 4, 'value_to_y': 3},
        {'name': 'bike', 'owner': 'Y', 'value_to_x': 4, 'value_to_y': 7},
        {'name': 'TV', 'owner': 'Y', 'value_to_x': 2, 'value_to_y': 3},
        {'name': 'cell', 'owner': 'Y', 'value_to_x': 10, 'value_to_y': 11},
        {'name': 'chair', 'owner': 'Y', 'value_to_x': 5, 'value_to_y': 6},
    ]
}, indent=2)


def mutual_dominance_instance():
    return parse_instance(MUTUAL_DOMINANCE_TEXT)


# X values everything Y owns at 3 + 1 + 4 + 3 = 11, below its cheapest own item (12).
def insufficient_compensation_instance():
    return make_instance(
        x_items=[('radio', 14, 10), ('laptop', 12, 16), ('book', 13, 7), ('watch', 12, 17), ('pen', 13, 5)],
        y_items=[('bike', 3, 2), ('TV', 1, 8), ('cell', 4, 13), ('chair', 3, 2)],
    )


# Both players value every item identically: all outcomes lie on u_x + u_y = 0.
def zero_sum_instance():
    return make_instance(
        x_items=[('a', 10, 10), ('b', 10, 10), ('c', 10, 10)],
        y_items=[('d', 17, 17), ('e', 17, 17)],
    )


CENTRALIZED_ROWS = [
    (0, 32), (1, '31.5'), (3, 31), (5, '30.5'), (6, 30), (7, '29.5'), (9, 28),
    (11, 27), (16, 24), (21, 21), (27, 17), (34, 9), (39, 0),
]


def centralized_points():
    return [OutcomePoint(Fraction(str(x)), Fraction(str(y))) for x, y in CENTRALIZED_ROWS]


def centralized_instance():
    """
    Instance whose first-quadrant outcomes are exactly the 13 centralized rows.

    X owns a single pivot item; Y owns one item per row. Giving the pivot for
    row k's item lands on (a_k, b_k); any other exchange leaves a coordinate
    nonpositive because the pivot is worth 100 to Y and row values stay below 64.
    """
    pivot = 100
    y_items = [
        (f"row{k}", pivot + Fraction(str(x)), pivot - Fraction(str(y)))
        for k, (x, y) in enumerate(CENTRALIZED_ROWS)
    ]
    return make_instance(x_items=[('pivot', pivot, pivot)], y_items=y_items)


def row_exchange(instance, k):
    from exchanges.models import Exchange
    return Exchange.from_names(instance, give_x=['pivot'], give_y=[f"row{k}"])


# X's one item needs both of Y's items in return; no one-for-one swap helps X.
def greedy_trap_instance():
    return make_instance(
        x_items=[('house', 10, 12)],
        y_items=[('bread', 6, 5), ('coat', 6, 5)],
    )


# X gives two items (4 + 5) for one worth 10: accepted, but X receives fewer than it gives.
def translation_flip_instance():
    return make_instance(
        x_items=[('a', 4, 3), ('b', 5, 3)],
        y_items=[('c', 10, 1)],
    )


def one_for_one_instance():
    return make_instance(x_items=[('apple', 1, 5)], y_items=[('pear', 4, 2)])
