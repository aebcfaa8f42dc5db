"""Self-test checks: closed forms against exhaustive search, bijections, trees, sampling."""

from collections import Counter
from itertools import product

from .base_check import BaseCheck, CheckContext, CheckResult
from .worked_example import (
    WORKED_ANCHORS,
    WORKED_DEGREE,
    WORKED_FACTORS,
    WORKED_LENGTHS,
    WORKED_MINIMAL_COUNT,
    WORKED_PERMUTATION_TEXT,
    WORKED_TRANSITIVE_COUNT,
    WORKED_TREE_PAREN,
    WORKED_WORD,
    WORKED_WORD_COUNT,
)
from ..characterization.checks import characterize, is_minimal_transitive, minimal_transitive_length
from ..characterization.oracle import brute_force_enumerate, has_shorter_transitive, shortest_star_length
from ..core.factorization import StarFactorization, evaluate
from ..core.permutation import (
    Permutation,
    compose,
    cycle_decomposition,
    format_cycles,
    induced_permutation,
    parse_cycles,
    symmetric_group,
)
from ..counting.cycle_type import CycleType, cycle_type_of
from ..counting.formulas import (
    anchor_choices,
    count_minimal,
    count_minimal_transitive,
    count_words_closed_form,
    pak_count,
    pak_cycle_type,
)
from ..trees.encoding import tree_to_word, word_to_tree
from ..trees.model import validate_tree
from ..words.bijection import is_valid_word, phi, phi_inverse
from ..words.enumeration import enumerate_words, iter_anchor_tuples
from ..words.sampler import FactorizationSampler

# Upper 1% point of the chi-square distribution with 23 degrees of freedom.
CHI_SQUARE_23_P01 = 41.638
UNIFORMITY_TARGET = "(2 3)(4 5)"
UNIFORMITY_DEGREE = 5


def _permutations_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from symmetric_group(n)


def _partitions(total: int, largest: int):
    """Non-increasing tuples of positive parts summing to ``total``."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def cycle_types_up_to(n_max: int):
    """Every cycle type with the cycle of 1 distinguished, for degrees 1..n_max."""
    for n in range(1, n_max + 1):
        for first in range(1, n + 1):
            for rest in _partitions(n - first, n - first):
                yield CycleType((first,) + rest)


class PermCoreRoundTripCheck(BaseCheck):
    name = "perm_core_round_trips"
    description = "Cycle decomposition and cycle notation round trips; evaluate is a homomorphism"

    def run(self, context: CheckContext) -> CheckResult:
        for p in _permutations_up_to(min(context.n_max + 1, 6)):
            if cycle_decomposition(p).to_permutation() != p:
                return self.failed(f"decomposition of {p} does not rebuild it")
            if parse_cycles(format_cycles(p), p.n) != p:
                return self.failed(f"cycle notation of {p} does not parse back")
        for n in range(1, min(context.n_max, 4) + 1):
            symbols = range(2, n + 1)
            for left, right in product(product(symbols, repeat=2), product(symbols, repeat=1)):
                f = StarFactorization.from_symbols(left, n)
                g = StarFactorization.from_symbols(right, n)
                if evaluate(f + g) != compose(evaluate(f), evaluate(g)):
                    return self.failed(f"evaluate is not multiplicative on {f} | {g}")
        return self.passed()


class TheoremOracleCheck(BaseCheck):
    name = "theorem_oracle_sweep"
    description = "Brute-force minimal transitive counts equal (n+m-2)! l_1...l_m / n! for n <= n_max"

    def run(self, context: CheckContext) -> CheckResult:
        checked = 0
        for p in _permutations_up_to(context.n_max):
            found = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=context.guard)
            expected = context.theorem_count(cycle_type_of(p))
            if len(found) != expected:
                return self.failed(f"{format_cycles(p)}: brute force {len(found)} != formula {expected}")
            for f in found:
                if not characterize(f, p).overall:
                    return self.failed(f"{format_cycles(p)}: {f} fails the characterization")
            checked += 1
        return self.passed(f"{checked} permutations")


class WorkedExampleCheck(BaseCheck):
    name = "worked_example"
    description = "The Sym(11) example: product, word, anchors, inverse, tree and counts"

    def run(self, context: CheckContext) -> CheckResult:
        p = parse_cycles(WORKED_PERMUTATION_TEXT, WORKED_DEGREE)
        f = StarFactorization.from_symbols(WORKED_FACTORS, WORKED_DEGREE)
        decomp = cycle_decomposition(p)
        if evaluate(f) != p:
            return self.failed(f"product is {format_cycles(evaluate(f))}")
        word, anchors = phi(f, p)
        if word.letters != WORKED_WORD or anchors.anchors != WORKED_ANCHORS:
            return self.failed(f"bijection gave {word} / {anchors}")
        if phi_inverse(word, anchors, decomp) != f:
            return self.failed("inverse bijection does not reproduce the factors")
        tree = word_to_tree(word, decomp)
        if tree.to_paren() != WORKED_TREE_PAREN:
            return self.failed(f"tree is {tree.to_paren()}")
        ct = cycle_type_of(p)
        if ct.lengths != WORKED_LENGTHS:
            return self.failed(f"cycle type {ct.lengths}")
        if context.theorem_count(ct) != WORKED_TRANSITIVE_COUNT:
            return self.failed(f"transitive count {context.theorem_count(ct)}")
        if count_minimal(ct) != WORKED_MINIMAL_COUNT:
            return self.failed(f"minimal count {count_minimal(ct)}")
        if count_words_closed_form(ct) != WORKED_WORD_COUNT:
            return self.failed(f"closed-form word count {count_words_closed_form(ct)}")
        enumerated = len(enumerate_words(decomp, guard=context.guard))
        if enumerated != WORKED_WORD_COUNT:
            return self.failed(f"enumerated {enumerated} words")
        return self.passed()


class CharacterizationEquivalenceCheck(BaseCheck):
    name = "characterization_equivalence"
    description = "Structural characterization agrees with the definition on every sequence, n <= 4"

    def run(self, context: CheckContext) -> CheckResult:
        checked = 0
        for p in _permutations_up_to(min(context.n_max, 4)):
            length = minimal_transitive_length(p)
            for symbols in product(range(2, p.n + 1), repeat=length):
                f = StarFactorization.from_symbols(symbols, p.n)
                if characterize(f, p).overall != is_minimal_transitive(f, p):
                    return self.failed(f"{format_cycles(p)}: disagreement on {f}")
                checked += 1
        return self.passed(f"{checked} sequences")


class BijectionRoundTripCheck(BaseCheck):
    name = "bijection_round_trips"
    description = "Factorizations <-> (word, anchors) round trips and |F| = |W| l_2...l_m"

    def run(self, context: CheckContext) -> CheckResult:
        for p in _permutations_up_to(context.n_max):
            decomp = cycle_decomposition(p)
            ct = cycle_type_of(p)
            found = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=context.guard)
            for f in found:
                word, anchors = phi(f, p)
                if phi_inverse(word, anchors, decomp) != f:
                    return self.failed(f"{format_cycles(p)}: {f} does not round trip")
            words = enumerate_words(decomp, guard=context.guard)
            for word in words:
                for anchors in iter_anchor_tuples(decomp):
                    if phi(phi_inverse(word, anchors, decomp), p) != (word, anchors):
                        return self.failed(f"{format_cycles(p)}: ({word}, {anchors}) does not round trip")
            if len(found) != len(words) * anchor_choices(ct):
                return self.failed(f"{format_cycles(p)}: {len(found)} != {len(words)} x {anchor_choices(ct)}")
            if len(words) != count_words_closed_form(ct):
                return self.failed(f"{format_cycles(p)}: {len(words)} words, closed form {count_words_closed_form(ct)}")
        return self.passed()


class CorollaryCheck(BaseCheck):
    name = "corollary_minimal"
    description = "Minimal (not necessarily transitive) counts in Sym(4) and absence of shorter factorizations"

    def run(self, context: CheckContext) -> CheckResult:
        n = min(context.n_max, 4)
        for p in symmetric_group(n):
            ct = cycle_type_of(p)
            length = ct.n + ct.m - 2 * (ct.fixed_count_k + 1)
            found = brute_force_enumerate(p, False, length, guard=context.guard, prune=False)
            if len(found) != count_minimal(ct):
                return self.failed(f"{format_cycles(p)}: {len(found)} != {count_minimal(ct)}")
            if shortest_star_length(p, length, guard=context.guard) != length:
                return self.failed(f"{format_cycles(p)}: a shorter factorization exists")
            induced, _ = induced_permutation(p)
            if count_minimal(ct) != count_minimal_transitive(cycle_type_of(induced)):
                return self.failed(f"{format_cycles(p)}: induced permutation count differs")
        for p in _permutations_up_to(n):
            if has_shorter_transitive(p, guard=context.guard):
                return self.failed(f"{format_cycles(p)}: transitive factorization below n + m - 2")
        return self.passed()


class ClosedFormCheck(BaseCheck):
    name = "closed_forms"
    description = "Exact division up to n = 30, Pak specialization, and |F| = |T| l_2...l_m up to n = 8"

    def run(self, context: CheckContext) -> CheckResult:
        for ct in cycle_types_up_to(30):
            try:
                count_minimal_transitive(ct)
                count_minimal(ct)
            except ArithmeticError as e:
                return self.failed(str(e))
        for ct in cycle_types_up_to(8):
            if count_minimal_transitive(ct) != count_words_closed_form(ct) * anchor_choices(ct):
                return self.failed(f"tree identity fails for {ct.lengths}")
        for k_len in range(2, 9):
            for m_cycles in range(1, 9):
                if m_cycles * k_len + 1 > 9:
                    continue
                if pak_count(k_len, m_cycles) != count_minimal_transitive(pak_cycle_type(k_len, m_cycles)):
                    return self.failed(f"Pak specialization fails for k={k_len}, m={m_cycles}")
        for k_len, m_cycles, degree in ((2, 1, 3), (2, 2, 5)):
            if degree > context.n_max:
                continue
            p = Permutation.from_cycles(
                [tuple(2 + k_len * i + t for t in range(k_len)) for i in range(m_cycles)], degree
            )
            found = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=context.guard)
            if len(found) != pak_count(k_len, m_cycles):
                return self.failed(f"Pak count k={k_len}, m={m_cycles} disagrees with brute force")
        return self.passed()


class TreeBijectionCheck(BaseCheck):
    name = "tree_bijection"
    description = "Word <-> tree round trips, tree validity and vertex colour counts"

    def run(self, context: CheckContext) -> CheckResult:
        for p in _permutations_up_to(context.n_max):
            decomp = cycle_decomposition(p)
            for word in enumerate_words(decomp, guard=context.guard):
                if not is_valid_word(word, decomp):
                    return self.failed(f"{format_cycles(p)}: enumerated invalid word {word}")
                tree = word_to_tree(word, decomp)
                if not validate_tree(tree, decomp):
                    return self.failed(f"{format_cycles(p)}: invalid tree {tree}")
                if tree_to_word(tree) != word:
                    return self.failed(f"{format_cycles(p)}: {word} does not round trip")
                if tree.white_count != decomp.m or tree.black_count != decomp.n - decomp.m:
                    return self.failed(f"{format_cycles(p)}: colour counts of {tree}")
        return self.passed()


class SamplingUniformityCheck(BaseCheck):
    name = "sampling_uniformity"
    description = "Seeded draws over the 24 factorizations of (2 3)(4 5) are uniform"

    def run(self, context: CheckContext) -> CheckResult:
        p = parse_cycles(UNIFORMITY_TARGET, UNIFORMITY_DEGREE)
        sampler = FactorizationSampler(p, seed=context.seed, guard=context.guard)
        population = brute_force_enumerate(p, True, minimal_transitive_length(p), guard=context.guard)
        draws = context.sample_draws
        tally = Counter(sampler.draw() for _ in range(draws))
        if set(tally) - set(population):
            return self.failed("sampler produced a non-factorization")
        expected = draws / len(population)
        chi_square = sum((tally[f] - expected) ** 2 / expected for f in population)
        if chi_square > CHI_SQUARE_23_P01:
            return self.failed(f"chi-square {chi_square:.2f} > {CHI_SQUARE_23_P01}")
        # The relative bound is only meaningful at full sample size.
        if draws >= 100_000:
            worst = max(abs(tally[f] - expected) / expected for f in population)
            if worst > 0.05:
                return self.failed(f"frequency off by {worst:.1%} relative")
        return self.passed(f"chi-square {chi_square:.2f} over {draws} draws")
