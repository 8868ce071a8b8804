from ferminal._util import EnumShowNameOnly, EnumValueEquals


class Variant(EnumShowNameOnly):
    """
    Which algebra a :class:`ferminal.ops.operator.TermOperator` lives in.
    """

    FERMION = "fermion"
    BOSON = "boson"
    QUBIT = "qubit"
    QUAD = "quad"


class Action(EnumShowNameOnly, EnumValueEquals):
    """
    Ladder operator action. Compares equal to 0/1 so that
    ``(3, 1)`` and ``(3, Action.RAISE)`` name the same factor.
    """

    LOWER = 0
    RAISE = 1

    def flipped(self) -> "Action":
        return Action.RAISE if self is Action.LOWER else Action.LOWER


class PauliAxis(EnumShowNameOnly, EnumValueEquals):
    """
    Single-qubit Pauli matrix.
    """

    X = "X"
    Y = "Y"
    Z = "Z"


class QuadKind(EnumShowNameOnly, EnumValueEquals):
    """
    Canonical quadrature: position-like q or momentum-like p.
    """

    Q = "q"
    P = "p"
