"""
--- Friedberg ---
Referee verdicts and reports.
"""
from friedberg.exceptions import TraceFormatError


STATUSES = ('holds', 'violated', 'pending')


class Verdict:
    """
    Status of one winner condition for one subject, with its witness or obligation.

    """
    __slots__ = ('index', 'status', 'subject', 'detail')

    def __init__(self, index, status, subject='*', detail=''):
        if status not in STATUSES:
            raise ValueError('Unknown verdict status: %s' % status)
        self.index, self.status, self.subject, self.detail = str(index), status, subject, detail

    def __repr__(self):
        return "<Verdict %s %s %s>" % (self.index, self.status.upper(), self.subject)

    def __eq__(self, other):
        return isinstance(other, Verdict) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return self.index, self.subject, self.status

    def line(self, game):
        words = ['COND', game, self.index, self.status.upper(), self.subject]
        if self.detail:
            words.append(self.detail)
        return ' '.join(words)


def combine(index, problems, pending, subject='*', holds=''):
    """
    Verdict from a list of violations and a list of open obligations.

    The first violation is the witness; otherwise the first few obligations
    are listed.

    """
    if problems:
        return Verdict(index, 'violated', subject, problems[0])
    if pending:
        shown = '; '.join(pending[:3])
        more = ' (+%i more)' % (len(pending) - 3) if len(pending) > 3 else ''
        return Verdict(index, 'pending', subject, shown + more)
    return Verdict(index, 'holds', subject, holds)


class RefereeReport:
    """
    Verdicts of one referee on one transcript.

    """
    def __init__(self, game, stage=0, mode='symbolic', verdicts=None, referee='incremental', check=''):
        self.game = game
        self.stage = stage
        self.mode = mode
        self.referee = referee
        self.check = check
        self.verdicts = [] if verdicts is None else list(verdicts)

    def __repr__(self):
        counts = ' | '.join('%s: %i' % (s, len(self.with_status(s))) for s in STATUSES)
        return "<RefereeReport %s %s at stage %i | %s>" % (self.game, self.referee, self.stage, counts)

    def __len__(self):
        return len(self.verdicts)

    def __iter__(self):
        return iter(self.verdicts)

    def add(self, verdict):
        self.verdicts.append(verdict)

    def extend(self, verdicts):
        self.verdicts.extend(verdicts)

    def with_status(self, status):
        return [v for v in self.verdicts if v.status == status]

    def get(self, index, subject=None):
        """Verdicts for a condition index (and subject)."""
        return [v for v in self.verdicts if v.index == str(index) and (subject is None or v.subject == subject)]

    def status(self, index, subject=None):
        """
        Combined status of a condition: violated beats pending beats holds.

        """
        statuses = {v.status for v in self.get(index, subject)}
        for status in ('violated', 'pending', 'holds'):
            if status in statuses:
                return status
        return None

    @property
    def ok(self):
        """True iff no verdict is violated."""
        return not self.with_status('violated')

    def lines(self):
        return [v.line(self.game) for v in self.verdicts]

    def text(self):
        header = '# referee %s | mode %s | stage %i' % (self.referee, self.mode, self.stage)
        if self.check:
            header += ' | check %s' % self.check
        return '\n'.join([header] + self.lines()) + '\n'

    def write(self, filename):
        with open(filename, 'w') as report_file:
            report_file.write(self.text())


def parse_report(lines):
    """
    Parse report text written by RefereeReport.text.

    """
    report = None
    for line in lines:
        words = line.split()
        if not words:
            continue
        if words[0] == '#':
            check = words[11] if len(words) > 11 else ''
            report = RefereeReport('', stage=int(words[8]), mode=words[5], referee=words[2], check=check)
        elif words[0] == 'COND' and len(words) >= 5:
            if report is None:
                report = RefereeReport(words[1])
            report.game = words[1]
            report.add(Verdict(words[2], words[3].lower(), words[4], ' '.join(words[5:])))
        else:
            raise TraceFormatError('Bad report line: %r' % line)
    return report


def reports_agree(first, second):
    """True iff both reports give the same status to the same (condition, subject) pairs."""
    return {v.key() for v in first} == {v.key() for v in second}


def report_differences(first, second):
    """(condition, subject, status) keys found in only one of two reports."""
    return sorted({v.key() for v in first} ^ {v.key() for v in second})
