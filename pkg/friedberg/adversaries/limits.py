"""
--- Friedberg ---
Declared limits of Alice's rows.
"""
from friedberg.exceptions import TraceFormatError
from friedberg.tables import FiniteFun, Periodic


LIMIT_KINDS = ('finite', 'const', 'pattern', 'undeclared')


class LimitDecl:
    """
    Declared infinite-stage content of one row.

    A declaration is finite(FiniteFun), const(m), pattern(values) (a total
    periodic function) or undeclared.

    """
    __slots__ = ('kind', 'value')

    def __init__(self, kind='undeclared', value=None):
        if kind not in LIMIT_KINDS:
            raise TraceFormatError('Unknown limit kind: %s' % kind)
        if kind == 'const' and isinstance(value, int):
            value = Periodic((value,))
        elif kind == 'pattern' and not isinstance(value, Periodic):
            value = Periodic(value)
        elif kind == 'finite' and not isinstance(value, FiniteFun):
            value = FiniteFun(value)
        self.kind = kind
        self.value = None if kind == 'undeclared' else value

    def __repr__(self):
        return "<LimitDecl %s>" % self.canonical()

    def __eq__(self, other):
        return isinstance(other, LimitDecl) and (self.kind, self.value) == (other.kind, other.value)

    def __hash__(self):
        return hash((self.kind, self.value))

    @classmethod
    def finite(cls, fun=None):
        return cls('finite', FiniteFun() if fun is None else fun)

    @classmethod
    def constant(cls, m):
        return cls('const', m)

    @classmethod
    def pattern(cls, values):
        return cls('pattern', values)

    @classmethod
    def undeclared(cls):
        return cls('undeclared')

    @property
    def limit(self):
        """Limit object (FiniteFun or Periodic) or None when undeclared."""
        return self.value

    @property
    def is_total(self):
        """True for const and pattern, False for finite, None when undeclared."""
        if self.kind == 'undeclared':
            return None
        return self.kind != 'finite'

    def value_at(self, col):
        if self.value is None:
            return None
        if isinstance(self.value, Periodic):
            return self.value.value_at(col)
        return self.value.get(col)

    def consistent_with(self, cells):
        """
        True iff every cell (dict col -> val) agrees with the declaration.

        """
        if self.value is None:
            return True
        return all(self.value_at(col) == val for col, val in cells.items())

    def reached(self, cells):
        """True iff a finite declaration is fully written in cells."""
        return self.kind == 'finite' and len(cells) == len(self.value) and self.consistent_with(cells)

    def canonical(self):
        if self.kind == 'undeclared':
            return 'undeclared'
        if self.kind == 'const':
            return 'const %i' % self.value.values[0]
        return '%s %s' % (self.kind, self.value.canonical())

    @classmethod
    def parse(cls, kind, form=''):
        """
        Parse a declaration from its kind token and canonical form.

        Parameters
        ----------
        kind : str
            finite | const | pattern | undeclared.
        form : str
            Canonical form: FiniteFun text, an integer, or comma-separated period values.

        """
        if kind == 'undeclared':
            return cls()
        if kind == 'finite':
            return cls('finite', FiniteFun.parse(form))
        if kind == 'const':
            try:
                return cls('const', int(form))
            except ValueError:
                raise TraceFormatError('Bad constant limit: %r' % form)
        if kind == 'pattern':
            return cls('pattern', Periodic.parse(form))
        raise TraceFormatError('Unknown limit kind: %s' % kind)


class DeclaredLimits:
    """
    Declared limits of the rows of one of Alice's tables (A or R).

    Rows without an explicit declaration get the default declaration.

    """
    def __init__(self, declarations=None, default=None):
        self.declarations = {} if declarations is None else dict(declarations)
        self.default = LimitDecl.undeclared() if default is None else default

    def __repr__(self):
        return "<DeclaredLimits rows: %i | default: %s>" % (len(self.declarations), self.default.canonical())

    def __getitem__(self, row):
        return self.declarations.get(row, self.default)

    def __eq__(self, other):
        return (isinstance(other, DeclaredLimits) and self.declarations == other.declarations
                and self.default == other.default)

    def items(self):
        return sorted(self.declarations.items())
