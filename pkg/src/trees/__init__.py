"""Bicoloured plane rooted trees and the word/tree correspondence."""

from .model import Colour, TreeNode, BicolouredTree, tree_violations, validate_tree, parse_paren
from .encoding import word_to_tree, tree_to_word
from .dot import to_dot

__all__ = [
    'Colour', 'TreeNode', 'BicolouredTree', 'tree_violations', 'validate_tree',
    'parse_paren', 'word_to_tree', 'tree_to_word', 'to_dot',
]
