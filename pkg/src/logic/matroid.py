"""
matroid.py

The column matroid M_X of a weight matrix, represented by an integer matrix
that survives deletion and contraction.

Ground-set elements are the original 0-based column labels; minors keep the
labels of the columns they retain, and remember which labels were contracted,
so a minor is identified by (retained labels, contracted labels).

Exponential enumerations (circuits, flats) refuse ground sets larger than
ORACLE_SUBSET_LIMIT unless a larger limit is passed explicitly.
"""

import os
import sys
import logging
import threading
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from src.infra import setup_logging
from src.enums import MatroidMsg
from src.helpers import get_settings, UnknownLabelError, RankDomainError, SubsetLimitError
from src.schema import TorusAction, Flat, FlatLattice
from src.utils import bareiss_rank, reduce_column

logger = setup_logging(name="MATROID")


class RepresentedMatroid:
    """
    Matroid of the columns of an integer matrix over the rationals.

    Instances are immutable; the rank memo is guarded by a lock so one
    instance can be shared between threads.

    Attributes:
        matrix: current representative rows
        labels: ground-set labels, one per matrix column
        contracted: labels contracted so far, in order
    """

    def __init__(self,
                 matrix: Sequence[Sequence[int]],
                 labels: Sequence[int],
                 contracted: Sequence[int] = ()):
        self._matrix: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in matrix)
        self._labels: Tuple[int, ...] = tuple(labels)
        self._contracted: Tuple[int, ...] = tuple(contracted)
        if len(set(self._labels)) != len(self._labels):
            raise ValueError(f"labels must be distinct, got {self._labels}")
        for row in self._matrix:
            if len(row) != len(self._labels):
                raise ValueError(f"matrix rows must have {len(self._labels)} entries")
        self._position: Dict[int, int] = {label: j for j, label in enumerate(self._labels)}
        self._rank_memo: Dict[Tuple[int, ...], int] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_action(cls, action: TorusAction) -> "RepresentedMatroid":
        return cls(action.matrix, range(action.n))

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return self._matrix

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    @property
    def contracted(self) -> Tuple[int, ...]:
        return self._contracted

    @property
    def ground_set(self) -> FrozenSet[int]:
        return frozenset(self._labels)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Identity of the minor: (sorted retained labels, sorted contracted labels)."""
        return tuple(sorted(self._labels)), tuple(sorted(self._contracted))

    def column(self, label: int) -> Tuple[int, ...]:
        j = self._check(label)
        return tuple(row[j] for row in self._matrix)

    def _check(self, label: int) -> int:
        try:
            return self._position[label]
        except KeyError:
            logger.error(MatroidMsg.UNKNOWN_LABEL.value, label, sorted(self._labels))
            raise UnknownLabelError(label) from None

    def _normalize(self, subset: Optional[Iterable[int]]) -> Tuple[int, ...]:
        if subset is None:
            return tuple(sorted(self._labels))
        subset = tuple(sorted(set(subset)))
        for label in subset:
            self._check(label)
        return subset

    def rank(self, subset: Optional[Iterable[int]] = None) -> int:
        """Rank of a label subset (the whole ground set when omitted)."""
        key = self._normalize(subset)
        with self._lock:
            cached = self._rank_memo.get(key)
        if cached is not None:
            return cached
        positions = [self._position[label] for label in key]
        value = bareiss_rank([[row[j] for j in positions] for row in self._matrix]) if positions else 0
        with self._lock:
            self._rank_memo[key] = value
        return value

    def is_independent(self, subset: Iterable[int]) -> bool:
        subset = self._normalize(subset)
        return self.rank(subset) == len(subset)

    def loops(self) -> FrozenSet[int]:
        return frozenset(label for label in self._labels if not any(self.column(label)))

    def coloops(self) -> FrozenSet[int]:
        full = self.rank()
        return frozenset(label for label in self._labels
                         if self.rank(self.ground_set - {label}) == full - 1)

    def basis(self) -> Tuple[int, ...]:
        """Greedy basis in ascending label order."""
        chosen: List[int] = []
        for label in sorted(self._labels):
            if self.rank(chosen + [label]) == len(chosen) + 1:
                chosen.append(label)
        return tuple(chosen)

    # --- minors ---

    def delete(self, label: int) -> "RepresentedMatroid":
        j = self._check(label)
        matrix = [row[:j] + row[j + 1:] for row in self._matrix]
        labels = self._labels[:j] + self._labels[j + 1:]
        return RepresentedMatroid(matrix, labels, self._contracted)

    def contract(self, label: int) -> "RepresentedMatroid":
        """
        Row-reduce so the column of `label` has one nonzero entry, then strike
        that row and column. Contracting a loop deletes it.
        """
        j = self._check(label)
        reduced, pivot = reduce_column(self._matrix, j)
        if pivot is None:
            return self.delete(label)
        logger.debug(MatroidMsg.CONTRACTED.value, label, abs(reduced[pivot][j]))
        matrix = [row[:j] + row[j + 1:] for i, row in enumerate(reduced) if i != pivot]
        labels = self._labels[:j] + self._labels[j + 1:]
        return RepresentedMatroid(matrix, labels, self._contracted + (label,))

    def restrict(self, subset: Iterable[int]) -> "RepresentedMatroid":
        """M|A: keep only the columns in A."""
        keep = set(self._normalize(subset))
        positions = [j for j, label in enumerate(self._labels) if label in keep]
        matrix = [[row[j] for j in positions] for row in self._matrix]
        return RepresentedMatroid(matrix, [self._labels[j] for j in positions], self._contracted)

    def contract_set(self, subset: Iterable[int]) -> "RepresentedMatroid":
        """M/A, contracting the labels of A in ascending order."""
        minor = self
        for label in self._normalize(subset):
            minor = minor.contract(label)
        return minor

    # --- flats ---

    def closure(self, subset: Iterable[int]) -> Flat:
        subset = self._normalize(subset)
        base = self.rank(subset)
        chosen = set(subset)
        elements = [label for label in self._labels
                    if label in chosen or self.rank(subset + (label,)) == base]
        return Flat.of(elements, base)

    def flat_lattice(self, limit: Optional[int] = None) -> FlatLattice:
        """
        All flats, generated rank by rank: the flats covering F are the
        closures of F + e for e outside F.

        Raises:
            SubsetLimitError: ground set larger than the limit.
        """
        self._guard("flat enumeration", limit)
        bottom = self.closure(())
        levels: List[List[Flat]] = [[bottom]]
        cover_pairs = set()
        while levels[-1] and levels[-1][0].rank < self.rank():
            found: Dict[Tuple[int, ...], Flat] = {}
            for flat in levels[-1]:
                members = flat.as_set
                for e in self._labels:
                    if e in members:
                        continue
                    upper = self.closure(flat.elements + (e,))
                    found.setdefault(upper.elements, upper)
                    cover_pairs.add((flat.elements, upper.elements))
            levels.append(sorted(found.values(), key=lambda f: f.elements))

        flats = [flat for level in levels for flat in level]
        index = {flat.elements: i for i, flat in enumerate(flats)}
        covers = tuple(sorted((index[low], index[high]) for low, high in cover_pairs))

        mobius: List[int] = []
        for i, flat in enumerate(flats):
            if i == 0:
                mobius.append(1)
                continue
            mobius.append(-sum(mobius[k] for k in range(i) if flats[k] < flat))
        logger.debug(MatroidMsg.FLATS_ENUMERATED.value, len(flats), len(levels))
        return FlatLattice(flats=tuple(flats), covers=covers, mobius_from_bottom=tuple(mobius))

    def hyperplanes(self, limit: Optional[int] = None) -> Tuple[Flat, ...]:
        return self.flat_lattice(limit).hyperplanes()

    def mobius(self, limit: Optional[int] = None) -> int:
        """mu(bottom, top) of the lattice of flats."""
        lattice = self.flat_lattice(limit)
        return lattice.mobius_of(lattice.top)

    def interval_mobius(self, flat: Flat, limit: Optional[int] = None) -> int:
        """mu(F, top), computed as the Mobius number of M/F."""
        return self.contract_set(flat.elements).mobius(limit)

    def order_complex_euler(self, limit: Optional[int] = None) -> int:
        """
        Reduced Euler characteristic of the order complex of the proper part
        of the lattice of flats, by counting chains.

        Raises:
            RankDomainError: for rank 0, where the proper part is undefined.
        """
        if self.rank() == 0:
            raise RankDomainError("order complex needs a matroid of rank >= 1")
        lattice = self.flat_lattice(limit)
        proper = lattice.flats[1:-1]
        # signed count of chains ending at each flat
        signed: List[int] = []
        for i, flat in enumerate(proper):
            signed.append(1 - sum(signed[k] for k in range(i) if proper[k] < flat))
        return sum(signed) - 1

    # --- circuits and components ---

    def is_circuit(self, subset: Iterable[int]) -> bool:
        subset = self._normalize(subset)
        if not subset or self.rank(subset) != len(subset) - 1:
            return False
        return all(self.is_independent(subset[:i] + subset[i + 1:]) for i in range(len(subset)))

    def circuits(self, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
        """All circuits, by size then labels."""
        self._guard("circuit enumeration", limit)
        labels = sorted(self._labels)
        return [subset for size in range(1, self.n + 1)
                for subset in combinations(labels, size) if self.is_circuit(subset)]

    def fundamental_circuit(self, label: int, basis: Sequence[int]) -> Tuple[int, ...]:
        """The unique circuit inside basis + label, for label outside the basis."""
        full = self.rank()
        members = [b for b in basis
                   if self.rank([x for x in basis if x != b] + [label]) == full]
        return tuple(sorted(members + [label]))

    def components(self) -> List[Tuple[int, ...]]:
        """
        Connected components, as the classes of the union of fundamental
        circuits over a greedy basis. Loops and coloops are singletons.
        """
        parent = {label: label for label in self._labels}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        basis = self.basis()
        in_basis = set(basis)
        for label in self._labels:
            if label in in_basis:
                continue
            circuit = self.fundamental_circuit(label, basis)
            for other in circuit[1:]:
                parent[find(other)] = find(circuit[0])

        groups: Dict[int, List[int]] = {}
        for label in self._labels:
            groups.setdefault(find(label), []).append(label)
        parts = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
        logger.debug(MatroidMsg.COMPONENTS.value, parts)
        return parts

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def _guard(self, what: str, limit: Optional[int]) -> None:
        limit = get_settings().ORACLE_SUBSET_LIMIT if limit is None else limit
        if self.n > limit:
            logger.error(MatroidMsg.LIMIT_EXCEEDED.value, what, self.n, limit)
            raise SubsetLimitError(self.n, limit)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepresentedMatroid):
            return NotImplemented
        return self._matrix == other._matrix and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._matrix, self._labels))

    def __repr__(self) -> str:
        return f"RepresentedMatroid(labels={list(self._labels)}, matrix={[list(r) for r in self._matrix]})"


def matroid_of(action: TorusAction) -> RepresentedMatroid:
    """The column matroid M_X of an action, labels 0..n-1."""
    return RepresentedMatroid.from_action(action)


def flat_lattice_json(lattice: FlatLattice) -> list:
    return lattice.to_json()
