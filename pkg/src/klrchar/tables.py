"""Reference tables used by the self-verification suite and golden tests.

Expected good Lyndon words (exceptional types frozen, classical types in
closed form) and the expected dual canonical basis table for G2 under the
ordering with the short simple root first.
"""

from __future__ import annotations

from .laurent import LaurentPoly

E6_LYNDON = (
    '1', '12', '123', '1234', '12345', '1236',
    '12364', '123643', '1236432', '123645', '1236453', '12364532',
    '12364534', '123645342', '1236453423', '12364534236', '2', '23',
    '234', '2345', '236', '2364', '23643', '23645',
    '236453', '2364534', '3', '34', '345', '36',
    '364', '3645', '4', '45', '5', '6',
)

E7_LYNDON = (
    '1', '12', '123', '1234', '12345', '123456',
    '12347', '123475', '1234754', '12347543', '123475432', '1234756',
    '12347564', '123475643', '1234756432', '123475645', '1234756453', '12347564532',
    '12347564534', '123475645342', '1234756453423', '123475645347', '1234756453472', '12347564534723',
    '123475645347234', '1234756453472345', '12347564534723456', '2', '23', '234',
    '2345', '23456', '2347', '23475', '234754', '2347543',
    '234756', '2347564', '23475643', '23475645', '234756453', '2347564534',
    '23475645347', '3', '34', '345', '3456', '347',
    '3475', '34754', '34756', '347564', '3475645', '4',
    '45', '456', '47', '475', '4756', '5',
    '56', '6', '7',
)

E8_LYNDON = (
    '1', '12', '123', '1234', '12345', '123456',
    '1234567', '123458', '1234586', '12345865', '123458654', '1234586543',
    '12345865432', '12345867', '123458675', '1234586754', '12345867543', '123458675432',
    '1234586756', '12345867564', '123458675643', '1234586756432', '123458675645', '1234586756453',
    '12345867564532', '12345867564534', '123458675645342', '1234586756453423', '12345867564534231234586756458', '1234586756458',
    '12345867564583', '123458675645832', '123458675645834', '1234586756458342', '12345867564583423', '1234586756458345',
    '12345867564583452', '123458675645834523', '1234586756458345234', '12345867564583456', '123458675645834562', '1234586756458345623',
    '12345867564583456234', '123458675645834562345', '1234586756458345623458', '123458675645834567', '1234586756458345672', '12345867564583456723',
    '123458675645834567234', '1234586756458345672345', '12345867564583456723456', '12345867564583456723458', '123458675645834567234586', '1234586756458345672345865',
    '12345867564583456723458654', '123458675645834567234586543', '1234586756458345672345865432', '2', '23', '234',
    '2345', '23456', '234567', '23458', '234586', '2345865',
    '23458654', '234586543', '2345867', '23458675', '234586754', '2345867543',
    '234586756', '2345867564', '23458675643', '23458675645', '234586756453', '2345867564534',
    '234586756458', '2345867564583', '23458675645834', '234586756458345', '2345867564583456', '23458675645834567',
    '3', '34', '345', '3456', '34567', '3458',
    '34586', '345865', '3458654', '345867', '3458675', '34586754',
    '34586756', '345867564', '3458675645', '34586756458', '4', '45',
    '456', '4567', '458', '4586', '45865', '45867',
    '458675', '4586756', '5', '56', '567', '58',
    '586', '5867', '6', '67', '7', '8',
)

def a_series_lyndon(rank: int) -> list[str]:
    """Increasing segments i..j."""
    out = []
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            out.append("".join(str(t) for t in range(i, j + 1)))
    return sorted(out)


def d_series_lyndon(rank: int) -> list[str]:
    """Segments in 1..r-1, plus i..(r-2) followed by the drop r..j."""
    out = []
    for i in range(1, rank):
        for j in range(i, rank):
            out.append("".join(str(t) for t in range(i, j + 1)))
    for i in range(1, rank + 1):
        for j in range(i + 1, rank + 1):
            head = "".join(str(t) for t in range(i, rank - 1))
            tail = "".join(str(t) for t in range(rank, j - 1, -1))
            out.append(head + tail)
    return sorted(out)


# Dual canonical table for G2, short node 1, long node 2, ordering with
# alpha_1 first.  Parts are coefficient vectors (c1, c2); characters are
# strings "[n]_d...[m]_e word + ..." parsed by parse_bracket_expr.
G2_CANONICAL_TABLE = [
    (((1, 0),), "1"),
    (((3, 1),), "[2]_1[3]_1 1112"),
    (((2, 1), (1, 0)), "[2]_1 1121"),
    (((1, 1), (1, 0), (1, 0)), "[2]_1 1211"),
    (((0, 1), (1, 0), (1, 0), (1, 0)), "[2]_1[3]_1 2111"),
    (((2, 1),), "[2]_1 112"),
    (((1, 1), (1, 0)), "121"),
    (((0, 1), (1, 0), (1, 0)), "[2]_1 211"),
    (((3, 2),), "[2]_2[2]_1[3]_1 11122 + [2]_1[3]_1 11212"),
    (((1, 1), (2, 1)), "[2]_1 12112"),
    (((1, 1), (1, 1), (1, 0)), "[2]_1 11212 + [2]_2[2]_1 11221 + [2]_1 12121"),
    (((0, 1), (3, 1)), "[2]_1[3]_1 21112"),
    (((0, 1), (2, 1), (1, 0)), "[2]_1 21121"),
    (((0, 1), (1, 1), (1, 0), (1, 0)), "[2]_1 12121 + [2]_2[2]_1 12211 + [2]_1 21211"),
    (((0, 1), (0, 1), (1, 0), (1, 0), (1, 0)), "[2]_1[3]_1 21211 + [2]_2[2]_1[3]_1 22111"),
    (((1, 1),), "12"),
    (((0, 1), (1, 0)), "21"),
    (((0, 1),), "2"),
]


def parse_bracket_expr(expr: str, d_by_node: tuple[int, ...]) -> dict[tuple[int, ...], LaurentPoly]:
    """Parse "[2]_1[3]_1 1112 + ..." into a word -> LaurentPoly dict.

    The bracket subscript is a node label; [n]_i is the quantum integer in
    q^{d_i} for the node's symmetrizer entry.
    """
    out: dict[tuple[int, ...], LaurentPoly] = {}
    for chunk in expr.split("+"):
        chunk = chunk.strip()
        coeff = LaurentPoly.one()
        rest = chunk
        while rest.startswith("["):
            close = rest.index("]")
            n = int(rest[1:close])
            assert rest[close + 1] == "_"
            t = close + 2
            node = ""
            while t < len(rest) and rest[t].isdigit():
                node += rest[t]
                t += 1
            coeff = coeff * LaurentPoly.qint(n, d_by_node[int(node) - 1])
            rest = rest[t:].lstrip()
        word = tuple(int(ch) for ch in rest.strip())
        out[word] = out.get(word, LaurentPoly.zero()) + coeff
    return out
