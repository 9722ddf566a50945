"""Definitional re-implementations used as an independent route in tests.

Everything here works on plain sets of names and tuples of names with
itertools, deliberately sharing no code (and no bitmask tricks) with the
package under test.
"""

from itertools import combinations


def subsets(args):
    args = sorted(args)
    return [frozenset(c) for r in range(len(args) + 1) for c in combinations(args, r)]


def is_conflict_free(attacks, ext):
    return not any((a, b) in attacks for a in ext for b in ext)


def set_attacks(attacks, ext, target):
    return any((member, target) in attacks for member in ext)


def defends(args, attacks, ext, argument):
    return all(set_attacks(attacks, ext, b) for b in args if (b, argument) in attacks)


def conflict_free(args, attacks):
    return {e for e in subsets(args) if is_conflict_free(attacks, e)}


def admissible(args, attacks):
    return {
        e
        for e in conflict_free(args, attacks)
        if all(defends(args, attacks, e, a) for a in e)
    }


def complete(args, attacks):
    return {
        e
        for e in admissible(args, attacks)
        if all(a in e for a in args if defends(args, attacks, e, a))
    }


def stable(args, attacks):
    return {
        e
        for e in conflict_free(args, attacks)
        if all(set_attacks(attacks, e, a) for a in set(args) - e)
    }


def preferred(args, attacks):
    adm = admissible(args, attacks)
    return {e for e in adm if not any(e < other for other in adm)}


def grounded(args, attacks):
    com = complete(args, attacks)
    minimal = {e for e in com if not any(other < e for other in com)}
    assert len(minimal) == 1, "grounded extension must be unique"
    return minimal


def _undecided(args, attacks, ext):
    attacked = {t for (s, t) in attacks if s in ext}
    return frozenset(args) - ext - attacked


def semi_stable(args, attacks):
    com = complete(args, attacks)
    regions = {e: _undecided(args, attacks, e) for e in com}
    return {e for e in com if not any(u < regions[e] for u in regions.values())}


_BY_NAME = {
    "cf": conflict_free,
    "adm": admissible,
    "com": complete,
    "stb": stable,
    "prf": preferred,
    "gde": grounded,
    "sst": semi_stable,
}


def extensions(args, attacks, semantics):
    return _BY_NAME[semantics](args, attacks)


def odd_walk(attacks, source, target, max_len):
    """Walk enumeration by exact length: True if some walk of odd length
    (between 1 and max_len) leads from source to target."""
    current = {source}
    for length in range(1, max_len + 1):
        current = {t for (s, t) in attacks if s in current}
        if length % 2 == 1 and target in current:
            return True
        if not current:
            return False
    return False
