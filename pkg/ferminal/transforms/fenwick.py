"""
Fenwick tree over fermionic modes, the index structure behind the
Bravyi-Kitaev encoding. Works for any mode count, not just powers of two.
"""

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass(eq=False)
class FenwickNode:
    """
    One mode in the tree.
    """

    index: int
    parent: Optional["FenwickNode"] = None
    children: List["FenwickNode"] = field(default_factory=list)

    def ancestors(self) -> List["FenwickNode"]:
        """
        :return: parent, grandparent, ... up to the root.
        """
        result = []
        node = self.parent
        while node is not None:
            result.append(node)
            node = node.parent
        return result


class FenwickTree:
    """
    Binary partition of ``n_modes`` modes. The last mode is the root;
    each range ``[left, right]`` hangs its midpoint under the current
    parent and recurses on both halves.
    """

    def __init__(self, n_modes: int) -> None:
        if n_modes < 1:
            raise ValueError("a Fenwick tree needs at least one mode, got %d" % n_modes)
        self.n_modes: int = n_modes
        self.nodes: List[FenwickNode] = [FenwickNode(i) for i in range(n_modes)]
        self.root: FenwickNode = self.nodes[-1]
        self.__build(0, n_modes - 1, self.root)

    def __build(self, left: int, right: int, parent: FenwickNode) -> None:
        if left >= right:
            return
        pivot = (left + right) >> 1
        child = self.nodes[pivot]
        child.parent = parent
        parent.children.append(child)
        self.__build(left, pivot, child)
        self.__build(pivot + 1, right, parent)

    def update_set(self, j: int) -> List[int]:
        """
        Modes whose stored parity includes mode j (its ancestors).
        """
        return [node.index for node in self.nodes[j].ancestors()]

    def children_set(self, j: int) -> List[int]:
        return [node.index for node in self.nodes[j].children]

    def remainder_set(self, j: int) -> List[int]:
        """
        Children of j's ancestors that come before j.
        """
        return [
            child.index
            for ancestor in self.nodes[j].ancestors()
            for child in ancestor.children
            if child.index < j
        ]

    def parity_set(self, j: int) -> List[int]:
        """
        Modes whose combined value is the occupation parity of modes below j.
        """
        return self.remainder_set(j) + self.children_set(j)

    def flip_set(self, j: int) -> List[int]:
        """
        Modes that together with j decide whether j is occupied.
        """
        return self.children_set(j)
