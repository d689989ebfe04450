"""Return words and stability of return groups of substitutive shifts."""

import json

from ._core import RetwordError, contains, rank, reduce, subgroup_equal
from ._core import Shift as _Shift

__all__ = ["RetwordError", "Shift", "contains", "rank", "reduce", "subgroup_equal"]


class Shift(_Shift):
    """Shift generated by a primitive substitution such as "a->ab;b->a"."""

    def derive(self, word=None):
        return json.loads(self._derive(word))

    def constants(self):
        return json.loads(self._constants())

    def stability(self, route="auto", morphism=None, word=None):
        return json.loads(self._stability(route, morphism, word))

    def automatic(self, level=1):
        return json.loads(self._automatic(level))
