"""Bicoloured plane rooted trees and their nested-parenthesis text form.

White vertices carry integer labels; black vertices are unlabelled. Children
are ordered left to right. The text form writes a black vertex as ``*`` and a
white vertex as its label followed by its children in parentheses, e.g.
``1(5(*) * 3(* 2 * * 4) *)``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from ..core.permutation import CycleDecomposition
from ..utils.errors import WordParseError


class Colour(Enum):
    WHITE = "white"
    BLACK = "black"


@dataclass(frozen=True)
class TreeNode:
    colour: Colour
    label: Optional[int] = None
    children: Tuple["TreeNode", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.colour is Colour.WHITE and self.label is None:
            raise ValueError("White vertices carry a label")
        if self.colour is Colour.BLACK and self.label is not None:
            raise ValueError("Black vertices are unlabelled")

    @classmethod
    def white(cls, label: int, *children: "TreeNode") -> "TreeNode":
        return cls(Colour.WHITE, label, children)

    @classmethod
    def black(cls, *children: "TreeNode") -> "TreeNode":
        return cls(Colour.BLACK, None, children)

    @property
    def is_white(self) -> bool:
        return self.colour is Colour.WHITE

    def preorder(self) -> Iterator["TreeNode"]:
        yield self
        for child in self.children:
            yield from child.preorder()

    def to_paren(self) -> str:
        head = str(self.label) if self.is_white else "*"
        if not self.children:
            return head
        return head + "(" + " ".join(child.to_paren() for child in self.children) + ")"


@dataclass(frozen=True)
class BicolouredTree:
    """A plane rooted tree; equality is structural (shape, colours, labels, child order)."""

    root: TreeNode

    def vertices(self) -> List[TreeNode]:
        return list(self.root.preorder())

    @property
    def vertex_count(self) -> int:
        return len(self.vertices())

    @property
    def white_count(self) -> int:
        return sum(1 for v in self.vertices() if v.is_white)

    @property
    def black_count(self) -> int:
        return self.vertex_count - self.white_count

    def to_paren(self) -> str:
        return self.root.to_paren()

    def __str__(self) -> str:
        return self.to_paren()


def tree_violations(t: BicolouredTree, decomp: Optional[CycleDecomposition] = None) -> List[str]:
    """Names of the violated structural rules; empty when the tree is valid.

    Without ``decomp`` only the rules that do not depend on a cycle type are checked.
    """
    violations = []
    root = t.root
    if not (root.is_white and root.label == 1):
        violations.append("root is white with label 1")

    whites = [v for v in t.vertices() if v.is_white]
    m = decomp.m if decomp is not None else len(whites)
    labels = sorted(v.label for v in whites if v is not root)
    if labels != list(range(2, m + 1)):
        violations.append(f"non-root white vertices are distinctly labelled 2..{m}")

    if any(v.children for v in t.vertices() if not v.is_white):
        violations.append("every black vertex is a leaf")

    if decomp is not None:
        for v in whites:
            blacks = sum(1 for c in v.children if not c.is_white)
            if not 1 <= v.label <= m or blacks != decomp.lengths[v.label - 1] - 1:
                violations.append(f"white vertex {v.label} has l_{v.label} - 1 black children")
                break
        if t.vertex_count != decomp.n:
            violations.append(f"total vertex count is {decomp.n}")
    return violations


def validate_tree(t: BicolouredTree, decomp: CycleDecomposition) -> bool:
    return not tree_violations(t, decomp)


def parse_paren(text: str) -> BicolouredTree:
    """Parse the nested-parenthesis form produced by ``BicolouredTree.to_paren``.

    Raises:
        WordParseError: On malformed text, with the character position
    """
    pos = 0
    length = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < length and text[pos].isspace():
            pos += 1

    def node() -> TreeNode:
        nonlocal pos
        skip_ws()
        if pos >= length:
            raise WordParseError("Unexpected end of tree text", pos)
        if text[pos] == "*":
            pos += 1
            colour, label = Colour.BLACK, None
        elif text[pos].isdigit():
            start = pos
            while pos < length and text[pos].isdigit():
                pos += 1
            colour, label = Colour.WHITE, int(text[start:pos])
        else:
            raise WordParseError(f"Expected '*' or a label, found {text[pos]!r}", pos)
        children = []
        if pos < length and text[pos] == "(":
            pos += 1
            skip_ws()
            while pos < length and text[pos] != ")":
                children.append(node())
                skip_ws()
            if pos >= length:
                raise WordParseError("Missing ')'", pos)
            pos += 1
        return TreeNode(colour, label, tuple(children))

    root = node()
    skip_ws()
    if pos != length:
        raise WordParseError(f"Trailing text {text[pos:]!r}", pos)
    return BicolouredTree(root)
