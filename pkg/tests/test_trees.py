"""Tests for bicoloured trees: the word parse, its inverse, validation and DOT export."""

import pytest

from src.core import cycle_decomposition, parse_cycles, symmetric_group
from src.trees import (
    BicolouredTree,
    TreeNode,
    parse_paren,
    to_dot,
    tree_to_word,
    tree_violations,
    validate_tree,
    word_to_tree,
)
from src.utils.errors import InvalidWordError, TreeError, WordParseError
from src.verification.worked_example import WORKED_TREE_PAREN, WORKED_WORD
from src.words import CanonicalWord, enumerate_words, infer_decomposition


@pytest.fixture
def worked_tree(worked_decomposition):
    return word_to_tree(CanonicalWord(WORKED_WORD), worked_decomposition)


class TestWordToTree:
    """Building trees from words."""

    def test_worked_example_shape(self, worked_tree):
        root = worked_tree.root
        assert root.label == 1
        assert [(c.is_white, c.label) for c in root.children] == [
            (True, 5), (False, None), (True, 3), (False, None),
        ]
        white3 = root.children[2]
        assert [(c.is_white, c.label) for c in white3.children] == [
            (False, None), (True, 2), (False, None), (False, None), (True, 4),
        ]
        assert worked_tree.to_paren() == WORKED_TREE_PAREN

    def test_worked_example_counts(self, worked_tree, worked_decomposition):
        assert worked_tree.white_count == 5
        assert worked_tree.black_count == 6
        assert validate_tree(worked_tree, worked_decomposition)

    def test_single_cycle(self):
        word = CanonicalWord((1, 1, 1))
        tree = word_to_tree(word, infer_decomposition(word))
        assert tree.to_paren() == "1(* * *)"

    def test_rejects_invalid_word(self):
        decomp = cycle_decomposition(parse_cycles("", 3))
        with pytest.raises(InvalidWordError):
            word_to_tree(CanonicalWord((2, 3, 2, 3)), decomp)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_round_trips(self, n):
        for p in symmetric_group(n):
            decomp = cycle_decomposition(p)
            for word in enumerate_words(decomp):
                tree = word_to_tree(word, decomp)
                assert validate_tree(tree, decomp), f"{p}: {tree}"
                assert tree_to_word(tree) == word
                assert tree.white_count == decomp.m
                assert tree.black_count == decomp.n - decomp.m


class TestTreeValidation:
    """Structural rules."""

    def test_tree_to_word_worked_example(self, worked_tree):
        assert tree_to_word(worked_tree).letters == WORKED_WORD

    def test_black_vertex_with_children(self):
        tree = BicolouredTree(TreeNode.white(1, TreeNode.black(TreeNode.black())))
        assert "every black vertex is a leaf" in tree_violations(tree)
        with pytest.raises(TreeError) as info:
            tree_to_word(tree)
        assert info.value.violation == "every black vertex is a leaf"

    def test_root_must_be_white_one(self):
        tree = BicolouredTree(TreeNode.white(2, TreeNode.black()))
        assert tree_violations(tree)[0] == "root is white with label 1"

    def test_labels_must_be_distinct(self):
        tree = BicolouredTree(TreeNode.white(1, TreeNode.white(2), TreeNode.white(2)))
        assert tree_violations(tree) == ["non-root white vertices are distinctly labelled 2..3"]

    def test_black_child_count_follows_cycle_type(self, worked_decomposition):
        tree = parse_paren("1(5(* *) 3(* 2 * * 4) *)")
        violations = tree_violations(tree, worked_decomposition)
        assert "white vertex 1 has l_1 - 1 black children" in violations
        assert not validate_tree(tree, worked_decomposition)

    def test_node_colour_rules(self):
        with pytest.raises(ValueError):
            TreeNode(TreeNode.white(1).colour, None)
        with pytest.raises(ValueError):
            TreeNode(TreeNode.black().colour, 3)


class TestParenForm:
    """Nested-parenthesis text."""

    def test_round_trip(self, worked_tree):
        assert parse_paren(WORKED_TREE_PAREN) == worked_tree

    @pytest.mark.parametrize("text", ["1(* 2", "1(*))", "x", "", "1(* ?)"])
    def test_rejects_malformed(self, text):
        with pytest.raises(WordParseError):
            parse_paren(text)


class TestDot:
    """Graphviz export."""

    def test_flat_tree(self):
        dot = to_dot(parse_paren("1(* * *)"))
        assert dot == (
            "digraph tree {\n"
            "  ordering=out;\n"
            "  node [shape=circle];\n"
            '  n0 [label="1"];\n'
            '  n1 [label="", style=filled, fillcolor=black, width=0.2];\n'
            '  n2 [label="", style=filled, fillcolor=black, width=0.2];\n'
            '  n3 [label="", style=filled, fillcolor=black, width=0.2];\n'
            "  n0 -> n1;\n"
            "  n0 -> n2;\n"
            "  n0 -> n3;\n"
            "}\n"
        )

    def test_worked_tree_has_one_edge_per_non_root_vertex(self, worked_tree):
        dot = to_dot(worked_tree, name="worked")
        assert dot.startswith("digraph worked {")
        assert dot.count("->") == worked_tree.vertex_count - 1
        assert dot.count("fillcolor=black") == worked_tree.black_count
