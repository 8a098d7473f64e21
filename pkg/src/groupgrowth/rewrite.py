"""Bounded Knuth-Bendix completion for small group presentations.

Rules are pairs of words oriented so the right side precedes the left in
shortlex order.  Completion interreduces the rule set, resolves critical
pairs from overlapping left sides, and repeats.  It is bounded, not
guaranteed: when the rule count or left-side length limit is hit the partial
system is returned with ``confluent=False`` and ``limit_hit=True``.  Partial
systems still rewrite soundly but give no canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, shortlex_key

DEFAULT_MAX_RULES = 500
DEFAULT_MAX_LEN = 20


@dataclass(frozen=True)
class RewriteSystem:
    rules: tuple[tuple[Word, Word], ...]
    ordering: str = "shortlex"
    confluent: bool = False
    limit_hit: bool = False

    def normalize(self, word) -> Word:
        return rw_normalize(self, word)


def inverse_rules(n_generators: int) -> list[tuple[Word, Word]]:
    """Free cancellation rules x x' -> 1 and x' x -> 1 for each generator."""
    rules = []
    for i in range(1, n_generators + 1):
        rules.append(((i, -i), ()))
        rules.append(((-i, i), ()))
    return rules


def _orient(u: Word, v: Word):
    """Order a pair so the bigger (shortlex) word is the left side; None if equal."""
    ku, kv = shortlex_key(u), shortlex_key(v)
    if ku == kv:
        return None
    return (u, v) if ku > kv else (v, u)


def _rewrite_once(word: Word, rules) -> Word | None:
    for lhs, rhs in rules:
        n = len(lhs)
        for i in range(len(word) - n + 1):
            if word[i : i + n] == lhs:
                return word[:i] + rhs + word[i + n :]
    return None


def rw_normalize(system, word) -> Word:
    """Apply rules until no left side occurs as a subword.

    For a confluent system the result is the unique normal form of the word.
    """
    w = tuple(word)
    rules = system.rules if isinstance(system, RewriteSystem) else tuple(system)
    while True:
        nxt = _rewrite_once(w, rules)
        if nxt is None:
            return w
        w = nxt


def _interreduce(rules: set) -> set:
    """Reduce every rule by the others until stable; drop trivial rules."""
    changed = True
    while changed:
        changed = False
        for rule in sorted(rules, key=lambda r: shortlex_key(r[0]), reverse=True):
            if rule not in rules:
                continue
            lhs, rhs = rule
            others = tuple(r for r in rules if r != rule)
            new_lhs = rw_normalize(others, lhs)
            new_rhs = rw_normalize(others, rhs)
            if (new_lhs, new_rhs) != rule:
                rules.discard(rule)
                oriented = _orient(new_lhs, new_rhs)
                if oriented is not None and oriented not in rules:
                    rules.add(oriented)
                changed = True
    return rules


def _critical_pairs(rules):
    """Yield unresolved overlaps between left sides as candidate new rules."""
    rule_list = sorted(rules, key=lambda r: shortlex_key(r[0]))
    for l1, r1 in rule_list:
        for l2, r2 in rule_list:
            # proper overlap: a nonempty suffix of l1 is a prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k :] == l2[:k]:
                    # word = l1 + l2[k:] rewrites two ways
                    a = rw_normalize(rule_list, r1 + l2[k:])
                    b = rw_normalize(rule_list, l1[: len(l1) - k] + r2)
                    if a != b:
                        yield a, b
            # containment: l2 occurs strictly inside l1
            if (l1, r1) != (l2, r2) and len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i : i + len(l2)] == l2:
                        a = rw_normalize(rule_list, r1)
                        b = rw_normalize(rule_list, l1[:i] + r2 + l1[i + len(l2) :])
                        if a != b:
                            yield a, b


def kb_complete(rules, max_rules: int = DEFAULT_MAX_RULES, max_len: int = DEFAULT_MAX_LEN) -> RewriteSystem:
    """Run Knuth-Bendix completion under shortlex within the given limits.

    Returns a confluent system when completion terminates; otherwise the
    partial, interreduced system with ``confluent=False``.  Pair enumeration
    aborts as soon as a limit is exceeded, so runtime stays bounded even on
    nonterminating presentations.
    """
    rule_set: set[tuple[Word, Word]] = set()
    for u, v in rules:
        oriented = _orient(tuple(u), tuple(v))
        if oriented is not None:
            rule_set.add(oriented)

    limit_hit = False
    while not limit_hit:
        rule_set = _interreduce(rule_set)
        if len(rule_set) > max_rules or any(len(l) > max_len for l, _ in rule_set):
            limit_hit = True
            break
        new_rules: set[tuple[Word, Word]] = set()
        for a, b in _critical_pairs(rule_set):
            oriented = _orient(a, b)
            if oriented is None or oriented in rule_set or oriented in new_rules:
                continue
            new_rules.add(oriented)
            if len(oriented[0]) > max_len or len(rule_set) + len(new_rules) > max_rules:
                limit_hit = True
                break
        if not new_rules:
            break
        rule_set |= new_rules

    rule_set = _interreduce(rule_set)
    ordered = tuple(sorted(rule_set, key=lambda r: (shortlex_key(r[0]), shortlex_key(r[1]))))
    return RewriteSystem(rules=ordered, confluent=not limit_hit, limit_hit=limit_hit)
