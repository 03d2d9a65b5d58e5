import heapq
import logging

from fincat.config import config
from fincat.group._presentation import (
    canonical_relator,
    free_reduce,
    GroupPresentation,
    invert,
)


logger = logging.getLogger(__name__)

# relator-shortening compares every pair, so it only runs on small sets
SHORTEN_LIMIT = 256


class _Relators(object):
    """Canonical relator set with a per-generator occurrence index.

    Changes since the last ``mark`` are journaled so that ``rollback``
    can restore the marked state.
    """

    def __init__(self, words):
        self.words = {}
        self.ids = {}
        self.occurrences = {}
        self.heap = []
        self.length = 0
        self.journal = []
        self._next = 0
        for w in words:
            self.add(w)
        self.mark()

    def _insert(self, rid, word):
        self.words[rid] = word
        self.ids[word] = rid
        self.length += len(word)
        for x in set(abs(x) for x in word):
            self.occurrences.setdefault(x, set()).add(rid)
        heapq.heappush(self.heap, (len(word), word, rid))

    def _delete(self, rid):
        word = self.words.pop(rid)
        del self.ids[word]
        self.length -= len(word)
        for x in set(abs(x) for x in word):
            self.occurrences[x].discard(rid)
        return word

    def add(self, word):
        word = canonical_relator(word)
        if not word or word in self.ids:
            return
        rid = self._next
        self._next += 1
        self._insert(rid, word)
        self.journal.append((rid, None))

    def remove(self, rid):
        word = self._delete(rid)
        self.journal.append((rid, word))
        return word

    def mark(self):
        self.journal = []

    def rollback(self):
        for rid, word in reversed(self.journal):
            if word is None:
                self._delete(rid)
            else:
                self._insert(rid, word)
        self.journal = []

    def total_length(self):
        return self.length

    def sorted_words(self):
        return sorted(self.words.values(), key=lambda w: (len(w), w))

    def elimination_candidate(self):
        """Shortest relator with a generator occurring exactly once.

        Returns ``(rid, generator)`` or None; the highest such generator
        is chosen.
        """
        while self.heap:
            _, word, rid = self.heap[0]
            if self.words.get(rid) != word:
                heapq.heappop(self.heap)
                continue
            counts = {}
            for x in word:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, c in counts.items() if c == 1]
            if once:
                return rid, max(once)
            # unchanged relators never become candidates again
            heapq.heappop(self.heap)
        return None


def _substitute(word, g, value):
    out = []
    for x in word:
        if x == g:
            out.extend(value)
        elif x == -g:
            out.extend(invert(value))
        else:
            out.append(x)
    return free_reduce(out)


def _cyclic_find(word, part):
    n, k = len(word), len(part)
    if k > n:
        return -1
    doubled = word + word[:k - 1]
    for i in range(n):
        if doubled[i:i + k] == part:
            return i
    return -1


def _shorten_once(word, rule):
    """Replace a long cyclic subword of ``word`` using relator ``rule``."""
    half = len(rule) // 2 + 1
    for variant in (rule, invert(rule)):
        for i in range(len(variant)):
            rotated = variant[i:] + variant[:i]
            x, y = rotated[:half], rotated[half:]
            at = _cyclic_find(word, x)
            if at < 0:
                continue
            turned = word[at:] + word[:at]
            return canonical_relator(invert(y) + turned[len(x):])
    return None


def _shorten(relators: _Relators, steps: int, limit: int) -> int:
    changed = True
    while changed and len(relators.words) <= SHORTEN_LIMIT:
        changed = False
        words = relators.sorted_words()
        for rule in words:
            if rule not in relators.ids:
                continue
            for word in words:
                if word == rule or word not in relators.ids or len(word) < len(rule):
                    continue
                shorter = _shorten_once(word, rule)
                if shorter is None:
                    continue
                if steps >= limit:
                    return steps
                steps += 1
                relators.remove(relators.ids[word])
                relators.add(shorter)
                changed = True
    return steps


def tietze_simplify(P: GroupPresentation, max_steps: int = None) -> GroupPresentation:
    """Simplify a presentation by Tietze moves.

    Free and cyclic reduction, removal of empty and duplicate relators,
    elimination of a generator occurring once in a relator (shortest
    relator first), and shortening of relators by long common subwords.

    Parameters
    ----------
    P : GroupPresentation
        input presentation
    max_steps : int, optional
        move budget, by default ``config.tietze_steps``

    Returns
    -------
    GroupPresentation
        presentation of an isomorphic group with no more generators and no
        longer total relator length; ``images`` rewrites the original
        generators, ``exhausted`` is set when the budget ran out
    """
    limit = config.tietze_steps if max_steps is None else max_steps
    if P.images:
        images = dict(P.images)
    else:
        images = {g: (k + 1,) for k, g in enumerate(P.generators)}
    relators = _Relators(P.relators)
    steps = _shorten(relators, 0, limit)
    alive = set(range(1, P.n_generators + 1))
    bound = relators.total_length()
    relators.mark()
    best = (sorted(alive), dict(images))

    exhausted = False
    while True:
        candidate = relators.elimination_candidate()
        if candidate is None:
            break
        if steps >= limit:
            exhausted = True
            break
        steps += 1
        rid, g = candidate
        word = relators.remove(rid)
        at = next(i for i, x in enumerate(word) if abs(x) == g)
        turned = word[at:] + word[:at]
        # g^e . rest = 1
        value = invert(turned[1:]) if turned[0] > 0 else turned[1:]
        for other in sorted(relators.occurrences.get(g, ())):
            relators.add(_substitute(relators.remove(other), g, value))
        images = {
            label: _substitute(w, g, value) for label, w in images.items()}
        alive.discard(g)
        steps = _shorten(relators, steps, limit)
        if relators.total_length() <= bound:
            relators.mark()
            best = (sorted(alive), dict(images))
        if steps >= limit:
            exhausted = relators.elimination_candidate() is not None
            break

    if relators.total_length() > bound:
        relators.rollback()
    kept, images = best
    words = relators.sorted_words()
    renumber = {g: k + 1 for k, g in enumerate(kept)}

    def relabel(w):
        return tuple(renumber[x] if x > 0 else -renumber[-x] for x in w)

    result = GroupPresentation(
        [P.generators[g - 1] for g in kept],
        [relabel(w) for w in words],
        images={label: relabel(w) for label, w in images.items()},
        exhausted=exhausted,
        component=P.component,
    )
    logger.debug(
        "tietze: %d -> %d generators, length %d -> %d in %d moves",
        P.n_generators, result.n_generators,
        P.total_length, result.total_length, steps)
    return result
