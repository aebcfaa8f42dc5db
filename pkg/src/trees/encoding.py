"""Word <-> bicoloured tree encoding.

Parsing a word left to right with an active vertex: the first occurrence of
j != 1 opens a new rightmost white child labelled j and activates it, the last
occurrence of j != 1 re-activates the parent, and any other letter adds a
rightmost black leaf under the active vertex.
"""

from typing import List, Optional

from .model import BicolouredTree, Colour, TreeNode, tree_violations
from ..core.permutation import CycleDecomposition
from ..words.bijection import CanonicalWord, format_word, word_violation
from ..utils.errors import InvalidWordError, TreeError


class _Vertex:
    """Mutable vertex used while parsing."""

    def __init__(self, colour: Colour, label: Optional[int] = None):
        self.colour = colour
        self.label = label
        self.children: List["_Vertex"] = []

    def freeze(self) -> TreeNode:
        return TreeNode(self.colour, self.label, tuple(c.freeze() for c in self.children))


def word_to_tree(w: CanonicalWord, decomp: CycleDecomposition) -> BicolouredTree:
    """Build the tree of a word in the word class of ``decomp``.

    Raises:
        InvalidWordError: If the word is outside the class
        TreeError: If the parse reaches a state the pattern rules exclude
    """
    letters = tuple(w)
    problem = word_violation(letters, decomp)
    if problem:
        raise InvalidWordError(f"Word {format_word(letters)!r} rejected: {problem}")

    first = {}
    last = {}
    for i, letter in enumerate(letters):
        first.setdefault(letter, i)
        last[letter] = i

    root = _Vertex(Colour.WHITE, 1)
    active = [root]
    for i, letter in enumerate(letters):
        if letter != 1 and i == first[letter]:
            child = _Vertex(Colour.WHITE, letter)
            active[-1].children.append(child)
            active.append(child)
            continue
        if active[-1].label != letter:
            raise TreeError(f"letter {letter} at position {i} met active vertex {active[-1].label}")
        if letter != 1 and i == last[letter]:
            active.pop()
        else:
            active[-1].children.append(_Vertex(Colour.BLACK))
    if len(active) != 1:
        raise TreeError("parse ended away from the root")
    return BicolouredTree(root.freeze())


def tree_to_word(t: BicolouredTree) -> CanonicalWord:
    """Depth-first left-to-right traversal inverting ``word_to_tree``.

    Raises:
        TreeError: Naming the first violated structural rule
    """
    violations = tree_violations(t)
    if violations:
        raise TreeError(violations[0])

    letters: List[int] = []

    def visit(vertex: TreeNode) -> None:
        is_root = vertex is t.root
        if not is_root:
            letters.append(vertex.label)
        for child in vertex.children:
            if child.is_white:
                visit(child)
            else:
                letters.append(vertex.label)
        if not is_root:
            letters.append(vertex.label)

    visit(t.root)
    return CanonicalWord(tuple(letters))
