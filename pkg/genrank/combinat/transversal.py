# -*- coding: utf-8 -*-
import logging
from collections import Counter, deque

from ..exceptions import ConstraintError
from .compositions import WeakComposition, enumerate_lambda, multiset_count

logger = logging.getLogger('genrank')


def fiber_map(i, comp):
    """``(i, k) -> k + e_i`` with a 0-based coordinate ``i``."""
    comp = WeakComposition(comp)
    if not 0 <= i < len(comp):
        raise IndexError('Coordinate {} out of range for d={}'.format(i, len(comp)))
    return comp.add_unit(i)


def fiber_images(pairs):
    """Multiset (``Counter``) of fiber images of ``(i, k)`` pairs."""
    return Counter(fiber_map(i, comp) for i, comp in pairs)


class _Assignment:
    """Bipartite b-matching between targets in lambda(k+1) and coordinates,
    where target ``r`` may use coordinate ``i`` iff ``r_i > 0``."""

    def __init__(self, d, cap):
        self.d = d
        self.cap = cap
        self.owner = {}
        self.members = [[] for _ in range(d)]

    def load(self, i):
        return len(self.members[i])

    def assign(self, target, i):
        self.owner[target] = i
        self.members[i].append(target)

    def unassign(self, target):
        i = self.owner.pop(target)
        self.members[i].remove(target)

    def move(self, target, i):
        self.unassign(target)
        self.assign(target, i)

    def augment(self, target):
        """Tries to place an unassigned target by shifting assigned targets
        along a shortest chain of admissible coordinates."""
        parent = {}
        queue = deque()
        for i in target.support:
            if i not in parent:
                parent[i] = None
                queue.append(i)

        while queue:
            i = queue.popleft()
            if self.load(i) < self.cap:
                # Walk back: each hop moves one target forward into i
                while parent[i] is not None:
                    prev, moved = parent[i]
                    self.move(moved, i)
                    i = prev
                self.assign(target, i)
                return True
            for other in sorted(self.members[i]):
                for j in other.support:
                    if j not in parent:
                        parent[j] = (i, other)
                        queue.append(j)
        return False


def balanced_fiber_transversal(d, k, s, cap):
    """Picks ``s`` pairs ``(i, comp)`` with ``comp`` in lambda(k) whose fiber
    images ``comp + e_i`` are pairwise distinct, using every coordinate
    ``i`` at most ``cap`` times.

    Targets of lambda(k+1) are visited by support size (fewest admissible
    coordinates first) and each is given to its least-loaded admissible
    coordinate. Targets left over once every admissible coordinate is full
    are placed through augmenting chains. The assignment is then pruned
    from the most loaded coordinates until ``s`` pairs remain.

    Returns:
        list: Sorted ``(i, WeakComposition)`` pairs with 0-based ``i``.
    """
    if d < 1 or k < 0 or s < 0 or cap < 0:
        raise ValueError('balanced_fiber_transversal: invalid arguments')
    total = multiset_count(d, k + 1)
    if s > min(cap * d, total):
        raise ConstraintError(
            'Cannot place {} pairs: at most min(cap*d={}, {}) available'.format(
                s, cap * d, total))

    targets = sorted(enumerate_lambda(d, k + 1), key=lambda r: (len(r.support), r))
    plan = _Assignment(d, cap)
    leftover = []
    for target in targets:
        free = [i for i in target.support if plan.load(i) < cap]
        if free:
            plan.assign(target, min(free, key=lambda i: (plan.load(i), i)))
        else:
            leftover.append(target)

    for target in leftover:
        if len(plan.owner) >= s:
            break
        plan.augment(target)

    if len(plan.owner) < s:
        raise ConstraintError(
            'Only {} distinct fibers fit under cap={}, asked for {}'.format(
                len(plan.owner), cap, s))

    while len(plan.owner) > s:
        i = max(range(d), key=lambda j: (plan.load(j), -j))
        plan.unassign(max(plan.members[i]))

    pairs = sorted((i, r.sub_unit(i)) for r, i in plan.owner.items())
    logger.debug('transversal d={} k={} s={} cap={} loads={}'.format(
        d, k, s, cap, [plan.load(i) for i in range(d)]))
    return pairs
