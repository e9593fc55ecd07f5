"""Hand-checked reference listings used by ``verify`` and the test-suite.

Each entry is ``(X, X^perp[-1])`` in label notation; ``None`` stands for the
whole category.  Coloured diameters are written ``g``/``r``.
"""

from __future__ import annotations

A22_PAIRS = [
    ([], None),
    (["(1,3)"], ["(1,3)", "(1,4)", "(1,6)", "(1,7)", "(1,9)", "(3,6)", "(3,7)", "(3,9)"]),
    (["(2,4)"], ["(1,4)", "(1,5)", "(1,7)", "(1,8)", "(2,4)", "(2,5)", "(2,7)", "(2,8)"]),
    (["(3,5)"], ["(2,5)", "(2,6)", "(2,8)", "(2,9)", "(3,5)", "(3,6)", "(3,8)", "(3,9)"]),
    (["(1,4)"], ["(1,3)", "(1,4)", "(1,7)", "(2,4)"]),
    (["(2,5)"], ["(2,4)", "(2,5)", "(2,8)", "(3,5)"]),
    (["(3,6)"], ["(1,3)", "(3,5)", "(3,6)", "(3,9)"]),
    (["(1,3)", "(1,4)"], ["(1,3)", "(1,4)", "(1,7)"]),
    (["(2,4)", "(2,5)"], ["(2,4)", "(2,5)", "(2,8)"]),
    (["(3,5)", "(3,6)"], ["(3,5)", "(3,6)", "(3,9)"]),
    (["(1,4)", "(2,4)"], ["(1,4)", "(1,7)", "(2,4)"]),
    (["(2,5)", "(3,5)"], ["(2,5)", "(2,8)", "(3,5)"]),
    (["(1,3)", "(3,6)"], ["(1,3)", "(3,6)", "(3,9)"]),
    (["(1,3)", "(1,4)", "(2,4)"], ["(1,4)", "(1,7)"]),
    (["(2,4)", "(2,5)", "(3,5)"], ["(2,5)", "(2,8)"]),
    (["(1,3)", "(3,5)", "(3,6)"], ["(3,6)", "(3,9)"]),
]

# (apex, members) for the rigid halves of A(2,2), in the order of A22_PAIRS.
A22_WINGS = [
    [],
    [("(1,3)", ["(1,3)"])],
    [("(2,4)", ["(2,4)"])],
    [("(3,5)", ["(3,5)"])],
    [("(1,4)", ["(1,4)"])],
    [("(2,5)", ["(2,5)"])],
    [("(3,6)", ["(3,6)"])],
    [("(1,4)", ["(1,3)", "(1,4)"])],
    [("(2,5)", ["(2,4)", "(2,5)"])],
    [("(3,6)", ["(3,5)", "(3,6)"])],
    [("(1,4)", ["(2,4)", "(1,4)"])],
    [("(2,5)", ["(2,5)", "(3,5)"])],
    [("(3,6)", ["(1,3)", "(3,6)"])],
    [("(1,4)", ["(1,3)", "(1,4)", "(2,4)"])],
    [("(2,5)", ["(2,5)", "(3,5)", "(2,4)"])],
    [("(3,6)", ["(1,3)", "(3,5)", "(3,6)"])],
]

A21_PAIRS = [
    ([], None),
    (["(1,3)"], ["(1,3)", "(1,4)", "(1,6)", "(3,6)"]),
    (["(2,4)"], ["(1,4)", "(1,5)", "(2,4)", "(2,5)"]),
    (["(3,5)"], ["(2,5)", "(2,6)", "(3,5)", "(3,6)"]),
    (["(1,4)"], ["(1,3)", "(1,4)", "(2,4)"]),
    (["(2,5)"], ["(2,4)", "(2,5)", "(3,5)"]),
    (["(3,6)"], ["(1,3)", "(3,5)", "(3,6)"]),
    (["(1,3)", "(1,4)"], ["(1,3)", "(1,4)"]),
    (["(2,4)", "(2,5)"], ["(2,4)", "(2,5)"]),
    (["(3,5)", "(3,6)"], ["(3,5)", "(3,6)"]),
    (["(1,4)", "(2,4)"], ["(1,4)", "(2,4)"]),
    (["(2,5)", "(3,5)"], ["(2,5)", "(3,5)"]),
    (["(1,3)", "(3,6)"], ["(1,3)", "(3,6)"]),
]

# "+" is read as green and "-" as red.
D11_PAIRS = [
    ([], None),
    (["(1,3)"], ["(1,3)", "(1,5)g", "(1,5)r"]),
    (["(2,4)"], ["(2,4)", "(2,6)g", "(2,6)r"]),
    (["(1,3)", "(1,5)g"], ["(1,3)", "(1,5)r"]),
    (["(2,4)", "(2,6)g"], ["(2,4)", "(2,6)r"]),
]

D12_PAIRS = [
    ([], None),
    (["(1,3)"], ["(1,3)", "(1,5)", "(1,7)", "(1,9)g", "(1,9)r"]),
    (["(2,4)"], ["(2,4)", "(2,6)", "(2,8)", "(2,10)g", "(2,10)r"]),
]
