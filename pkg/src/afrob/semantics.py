"""Extension enumeration for the classical acceptance semantics.

Deliberately exhaustive: every subset of the argument set is tested against
the defining condition of each semantics, using bitmasks indexed by the
canonical argument order.  At desk scale this is fast, and the directness
makes the enumerators trustworthy enough to serve as ground truth for the
attack-classification layer.  Frameworks larger than the guardrail are
rejected instead of silently hanging.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import InternalInvariantViolation, SizeLimit
from .framework import ArgumentationFramework

MAX_ENUMERATION_ARGUMENTS = 24

ExtensionSet = frozenset[frozenset[str]]


class Semantics(str, Enum):
    """The supported acceptance semantics."""

    CONFLICT_FREE = "cf"
    ADMISSIBLE = "adm"
    COMPLETE = "com"
    STABLE = "stb"
    PREFERRED = "prf"
    GROUNDED = "gde"
    SEMI_STABLE = "sst"


def extension_sort_key(extension: frozenset[str]) -> tuple[int, tuple[str, ...]]:
    """Canonical ordering for extensions: by size, then lexicographically."""
    return (len(extension), tuple(sorted(extension)))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class _Enumeration:
    order: tuple[str, ...]
    targets: tuple[int, ...]
    attackers: tuple[int, ...]
    cf: tuple[int, ...]
    adm: tuple[int, ...]
    com: tuple[int, ...]

    def attacked_by(self, mask: int) -> int:
        acc = 0
        for i in _bits(mask):
            acc |= self.targets[i]
        return acc

    def to_extension(self, mask: int) -> frozenset[str]:
        return frozenset(self.order[i] for i in _bits(mask))

    def to_extension_set(self, masks) -> ExtensionSet:
        return frozenset(self.to_extension(m) for m in masks)


@lru_cache(maxsize=32768)
def _enumerate(af: ArgumentationFramework) -> _Enumeration:
    order = af.sorted_arguments
    n = len(order)
    if n > MAX_ENUMERATION_ARGUMENTS:
        raise SizeLimit(f"{n} arguments exceed the enumeration limit of {MAX_ENUMERATION_ARGUMENTS}")
    position = {name: i for i, name in enumerate(order)}
    targets = [0] * n
    attackers = [0] * n
    for source, target in af.attacks:
        targets[position[source]] |= 1 << position[target]
        attackers[position[target]] |= 1 << position[source]

    cf: list[int] = []
    adm: list[int] = []
    com: list[int] = []
    for mask in range(1 << n):
        attacked = 0
        conflict = False
        for i in _bits(mask):
            if targets[i] & mask:
                conflict = True
                break
            attacked |= targets[i]
        if conflict:
            continue
        cf.append(mask)
        if any(attackers[i] & ~attacked for i in _bits(mask)):
            continue
        adm.append(mask)
        # complete: the set already contains every argument it defends
        complete = True
        for j in range(n):
            if attackers[j] & ~attacked == 0 and not (mask >> j) & 1:
                complete = False
                break
        if complete:
            com.append(mask)
    return _Enumeration(order, tuple(targets), tuple(attackers), tuple(cf), tuple(adm), tuple(com))


def conflict_free_sets(af: ArgumentationFramework) -> ExtensionSet:
    """All subsets containing no internal attack.  Always contains the
    empty set."""
    enum = _enumerate(af)
    return enum.to_extension_set(enum.cf)


def admissible_sets(af: ArgumentationFramework) -> ExtensionSet:
    """Conflict-free sets that defend each of their members."""
    enum = _enumerate(af)
    return enum.to_extension_set(enum.adm)


def complete_sets(af: ArgumentationFramework) -> ExtensionSet:
    """Admissible sets containing every argument they defend."""
    enum = _enumerate(af)
    return enum.to_extension_set(enum.com)


def stable_sets(af: ArgumentationFramework) -> ExtensionSet:
    """Conflict-free sets attacking every outside argument.  May be empty."""
    enum = _enumerate(af)
    full = (1 << len(enum.order)) - 1
    return enum.to_extension_set(m for m in enum.cf if m | enum.attacked_by(m) == full)


def preferred_sets(af: ArgumentationFramework) -> ExtensionSet:
    """Inclusion-maximal admissible sets."""
    enum = _enumerate(af)
    masks = [
        m
        for m in enum.adm
        if not any(other != m and other & m == m for other in enum.adm)
    ]
    return enum.to_extension_set(masks)


def grounded_set(af: ArgumentationFramework) -> ExtensionSet:
    """The unique inclusion-minimal complete set, as a one-element family."""
    enum = _enumerate(af)
    minimal = [
        m
        for m in enum.com
        if not any(other != m and other & m == other for other in enum.com)
    ]
    if len(minimal) != 1:
        raise InternalInvariantViolation(
            f"expected exactly one minimal complete set, found {len(minimal)}"
        )
    return enum.to_extension_set(minimal)


def semi_stable_sets(af: ArgumentationFramework) -> ExtensionSet:
    """Complete sets whose undecided region (arguments neither in the set
    nor attacked by it) is inclusion-minimal."""
    enum = _enumerate(af)
    full = (1 << len(enum.order)) - 1
    undec = {m: full & ~(m | enum.attacked_by(m)) for m in enum.com}
    masks = [
        m
        for m in enum.com
        if not any(u != undec[m] and u & undec[m] == u for u in undec.values())
    ]
    return enum.to_extension_set(masks)


_DISPATCH = {
    Semantics.CONFLICT_FREE: conflict_free_sets,
    Semantics.ADMISSIBLE: admissible_sets,
    Semantics.COMPLETE: complete_sets,
    Semantics.STABLE: stable_sets,
    Semantics.PREFERRED: preferred_sets,
    Semantics.GROUNDED: grounded_set,
    Semantics.SEMI_STABLE: semi_stable_sets,
}


def extensions(af: ArgumentationFramework, semantics: Semantics) -> ExtensionSet:
    """Extension set of ``af`` under the given semantics."""
    return _DISPATCH[Semantics(semantics)](af)
