"""
--- Friedberg ---
Finite functions (row snapshots) and total periodic functions used as row limits.
"""
from math import gcd
from friedberg.exceptions import TraceFormatError


class FiniteFun:
    """
    Canonical finite partial function from naturals to naturals.

    Keys are kept sorted so that equality, hashing and the text form are
    extensional.

    """
    __slots__ = ('items', '_map')

    def __init__(self, cells=None):
        """
        Create a finite function.

        Parameters
        ----------
        cells : dict or iterable or None
            Mapping col -> val or iterable of (col, val) pairs.

        """
        if cells is None:
            cells = {}
        mapping = dict(cells)
        self._map = mapping
        self.items = tuple(sorted(mapping.items()))

    def __repr__(self):
        return "<FiniteFun {%s}>" % self.canonical()

    def __str__(self):
        return self.canonical()

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(col for col, _ in self.items)

    def __contains__(self, col):
        return col in self._map

    def __getitem__(self, col):
        return self._map[col]

    def __eq__(self, other):
        return isinstance(other, FiniteFun) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def get(self, col, default=None):
        return self._map.get(col, default)

    def is_odd(self):
        """True iff the support size is odd."""
        return len(self.items) % 2 == 1

    def max_col(self):
        """Largest defined column or -1 for the empty function."""
        return self.items[-1][0] if self.items else -1

    def bound(self):
        """
        Enumeration bound: max(largest key, largest value, support size).

        """
        if not self.items:
            return 0
        return max(self.items[-1][0], max(v for _, v in self.items), len(self.items))

    def sort_key(self):
        """Position key in the canonical enumeration (bound, then lexicographic)."""
        return (self.bound(), self.items)

    def extends(self, other):
        """True iff every cell of other is a cell of self."""
        return all(self._map.get(c) == v for c, v in other.items)

    def union(self, other):
        """Union of two compatible finite functions."""
        cells = dict(self._map)
        cells.update(other._map)
        return FiniteFun(cells)

    def restrict(self, k):
        """Cells with column below k as a tuple of pairs."""
        return tuple((c, v) for c, v in self.items if c < k)

    def as_dict(self):
        return dict(self._map)

    def canonical(self):
        """
        Canonical text form: sorted col:val pairs joined by commas ('-' when empty).

        """
        if not self.items:
            return '-'
        return ','.join('%i:%i' % (c, v) for c, v in self.items)

    @classmethod
    def parse(cls, text):
        """
        Parse the canonical text form.

        Parameters
        ----------
        text : str
            Text such as '0:7,3:1' or '-' for the empty function.

        Returns
        -------
        FiniteFun
            Parsed function.

        """
        text = text.strip()
        if text in ('-', ''):
            return cls()
        cells = {}
        for token in text.split(','):
            try:
                col, val = [int(i) for i in token.split(':')]
            except ValueError:
                raise TraceFormatError('Bad finite function token: %r' % token)
            if col < 0 or val < 0 or col in cells:
                raise TraceFormatError('Bad finite function: %r' % text)
            cells[col] = val
        return cls(cells)


class Periodic:
    """
    Total periodic function x -> values[x % len(values)], kept at its minimal period.
    A constant function m is Periodic((m,)).

    """
    __slots__ = ('values',)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if not values:
            raise ValueError('Periodic function needs at least one value')
        for p in range(1, len(values) + 1):
            if len(values) % p == 0 and values == values[:p] * (len(values) // p):
                values = values[:p]
                break
        self.values = values

    def __repr__(self):
        return "<Periodic %s>" % self.canonical()

    def __eq__(self, other):
        return isinstance(other, Periodic) and self.values == other.values

    def __hash__(self):
        return hash(('periodic', self.values))

    def value_at(self, col):
        return self.values[col % len(self.values)]

    def is_constant(self):
        return len(self.values) == 1

    def canonical(self):
        return ','.join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text):
        try:
            return cls([int(v) for v in text.strip().split(',')])
        except ValueError:
            raise TraceFormatError('Bad periodic function: %r' % text)


def constant(m):
    """Total constant function m."""
    return Periodic((m,))


def limit_value(limit, col):
    """Value of a limit object at a column (None if undefined)."""
    if isinstance(limit, Periodic):
        return limit.value_at(col)
    return limit.get(col)


def limits_equal(first, second):
    """
    Decide equality of two limit objects.

    Returns
    -------
    bool or None
        None when either limit is unknown.

    """
    if first is None or second is None:
        return None
    return first == second


def limit_difference(first, second):
    """
    Least column where two known limit objects differ in definedness or value.

    Returns
    -------
    int or None
        None when the limits are equal or unknown.

    """
    if first is None or second is None or first == second:
        return None
    if isinstance(first, Periodic) and isinstance(second, Periodic):
        span = len(first.values) * len(second.values) // gcd(len(first.values), len(second.values))
    else:
        finite = [i for i in (first, second) if isinstance(i, FiniteFun)]
        span = max(f.max_col() for f in finite) + 2
    for col in range(span):
        if limit_value(first, col) != limit_value(second, col):
            return col
    return None
