"""
--- Friedberg ---
Declared numberings (finite lists of limit objects) and fill functions.
"""
from friedberg.exceptions import BadParameters, TraceFormatError


class DeclaredNumbering:
    """
    A numbering given by the declared limits of its first members.

    """
    def __init__(self, limits=()):
        """
        Parameters
        ----------
        limits : iterable
            Limit objects (FiniteFun or Periodic) in index order.

        """
        self.limits = list(limits)

    def __repr__(self):
        return "<DeclaredNumbering members: %i>" % len(self.limits)

    def __len__(self):
        return len(self.limits)

    def __getitem__(self, index):
        return self.limits[index]

    def __iter__(self):
        return iter(self.limits)

    def __eq__(self, other):
        return isinstance(other, DeclaredNumbering) and self.limits == other.limits

    def is_injective(self):
        return len(set(self.limits)) == len(self.limits)


def split_numbering(nu):
    """
    Split a numbering into its even-index and odd-index parts.

    Returns
    -------
    tuple
        (even part, odd part) with even[i] = nu[2i] and odd[i] = nu[2i + 1].

    """
    return DeclaredNumbering(nu.limits[0::2]), DeclaredNumbering(nu.limits[1::2])


def interleave(even, odd):
    """
    Inverse of split_numbering.

    """
    if len(even) - len(odd) not in (0, 1):
        raise BadParameters('Parts of sizes %i and %i cannot be interleaved' % (len(even), len(odd)))
    limits = []
    for index in range(len(even) + len(odd)):
        limits.append(even[index // 2] if index % 2 == 0 else odd[index // 2])
    return DeclaredNumbering(limits)


class FillFunction:
    """
    Linear function j -> slope * j + intercept on the infinite domain
    {j : j mod modulus = residue}.

    """
    def __init__(self, slope=1, intercept=0, modulus=1, residue=0):
        if min(slope, intercept, residue) < 0 or modulus < 1 or residue >= modulus:
            raise BadParameters('Bad fill function parameters: %s' % ((slope, intercept, modulus, residue),))
        self.slope, self.intercept, self.modulus, self.residue = slope, intercept, modulus, residue

    def __repr__(self):
        return "<FillFunction %s>" % self.spec()

    def __eq__(self, other):
        return isinstance(other, FillFunction) and self.spec() == other.spec()

    def __contains__(self, col):
        return col % self.modulus == self.residue

    def __call__(self, col):
        return self.slope * col + self.intercept if col in self else None

    def columns_from(self, start, count):
        """The first count domain columns at or above start."""
        col = start + (self.residue - start) % self.modulus
        return [col + self.modulus * n for n in range(count)]

    def spec(self):
        return 'linear:%i,%i,%i,%i' % (self.slope, self.intercept, self.modulus, self.residue)

    @classmethod
    def parse(cls, text):
        """
        Parse 'identity' or 'linear:<slope>,<intercept>,<modulus>,<residue>'.

        """
        text = text.strip()
        if text == 'identity':
            return cls()
        if text.startswith('linear:'):
            try:
                return cls(*[int(i) for i in text[len('linear:'):].split(',')])
            except (ValueError, TypeError):
                pass
        raise TraceFormatError('Bad fill function spec: %r' % text)
