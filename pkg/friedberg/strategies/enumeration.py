"""
--- Friedberg ---
Enumerations of finite functions: the canonical odd enumeration and explicit lists.
"""
from collections import OrderedDict
from friedberg.exceptions import BadParameters, TraceFormatError
from friedberg.tables import FiniteFun


SEARCH_CACHE_SIZE = 256


def _bounded_functions(bound, required=None):
    """
    Finite functions with keys, values and support size <= bound in lexicographic order
    of their sorted pair tuples, restricted to functions extending required.

    """
    required = {} if required is None else required
    required_keys = sorted(required)

    def extend(prefix, last):
        pending = [k for k in required_keys if k > last]
        if len(prefix) + len(pending) > bound:
            return
        if not pending:
            yield prefix
        if len(prefix) == bound:
            return
        stop = bound if not pending else min(bound, pending[0])
        for key in range(last + 1, stop + 1):
            if key in required:
                yield from extend(prefix + ((key, required[key]),), key)
            else:
                for val in range(bound + 1):
                    yield from extend(prefix + ((key, val),), key)

    yield from extend((), -1)


def iter_odd_functions(start_bound=1, required=None):
    """
    Canonical enumeration of odd finite functions.

    Functions are ordered by bound max(largest key, largest value, support size)
    and then lexicographically on their sorted (key, value) pairs.

    Parameters
    ----------
    start_bound : int
        First bound to enumerate.
    required : dict or None
        Only yield functions extending these cells.

    Yields
    ------
    FiniteFun
        Odd finite functions in canonical order.

    """
    bound = max(start_bound, 1)
    while True:
        for items in _bounded_functions(bound, required):
            if len(items) % 2 == 1:
                fun = FiniteFun(items)
                if fun.bound() == bound:
                    yield fun
        bound += 1


class OddEnumeration:
    """
    The canonical enumeration of all odd finite functions (members cached lazily).

    """
    name = 'odd'

    def __init__(self):
        self._members = []
        self._source = iter_odd_functions()
        self._searches = OrderedDict()

    def __repr__(self):
        return "<OddEnumeration cached: %i>" % len(self._members)

    def __contains__(self, fun):
        return fun.is_odd()

    def __eq__(self, other):
        return isinstance(other, OddEnumeration)

    def is_empty(self):
        return False

    def is_finite(self):
        return False

    def member(self, index):
        """Member at an index (never None: the enumeration is infinite)."""
        while len(self._members) <= index:
            self._members.append(next(self._source))
        return self._members[index]

    def position_key(self, fun):
        """Key ordering functions the way the enumeration lists them."""
        return fun.sort_key()

    def cursor_key(self, index):
        return self.member(index).sort_key()

    def least_unused_extension(self, content, used, limit=None):
        """
        Least member extending content that is not in used.

        The search walks bounds upwards from the bound of content and stays in
        enumeration order inside each bound. Used sets only grow, so the search
        for a given content resumes where its previous call stopped; only the
        SEARCH_CACHE_SIZE most recent searches are kept.

        Returns
        -------
        tuple
            (index or None, FiniteFun); the index is not computed for this enumeration.

        """
        key = (id(used), content)
        search = self._searches.get(key)
        if search is None or search[0] is not used:
            source = iter_odd_functions(start_bound=max(content.bound(), 1), required=content.as_dict())
            search = self._searches[key] = [used, source, next(source)]
            if len(self._searches) > SEARCH_CACHE_SIZE:
                self._searches.popitem(last=False)
        else:
            self._searches.move_to_end(key)
        while search[2] in used:
            search[2] = next(search[1])
        return None, search[2]

    def spec(self):
        return 'odd'


class ListEnumeration:
    """
    Injective enumeration given by an explicit list of finite functions.

    """
    name = 'list'

    def __init__(self, members):
        self.members = [m if isinstance(m, FiniteFun) else FiniteFun(m) for m in members]
        self._index = {}
        for index, member in enumerate(self.members):
            if member in self._index:
                raise BadParameters('Enumeration is not injective: %s listed twice' % member.canonical())
            self._index[member] = index

    def __repr__(self):
        return "<ListEnumeration members: %i>" % len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, fun):
        return fun in self._index

    def __eq__(self, other):
        return isinstance(other, ListEnumeration) and self.members == other.members

    def is_empty(self):
        return not self.members

    def is_finite(self):
        return True

    def member(self, index):
        """Member at an index or None past the end of the list."""
        return self.members[index] if index < len(self.members) else None

    def index(self, fun):
        return self._index.get(fun)

    def position_key(self, fun):
        return self._index.get(fun)

    def cursor_key(self, index):
        return index

    def least_unused_extension(self, content, used, limit=None):
        """
        Least-indexed member extending content and not in used (scanning the first limit members).

        Returns
        -------
        tuple
            (index, FiniteFun) or None when no such member exists.

        """
        for index, member in enumerate(self.members[:limit]):
            if member not in used and member.extends(content):
                return index, member
        return None

    def spec(self):
        return 'list:' + ';'.join(m.canonical() for m in self.members)


def parse_enumeration(text):
    """
    Parse an enumeration spec: 'odd' or 'list:<fun>;<fun>;...'.

    """
    text = text.strip()
    if text == 'odd':
        return OddEnumeration()
    if text.startswith('list:'):
        body = text[len('list:'):]
        members = [FiniteFun.parse(token) for token in body.split(';')] if body else []
        return ListEnumeration(members)
    raise TraceFormatError('Unknown enumeration spec: %r' % text)
