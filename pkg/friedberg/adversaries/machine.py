"""
--- Friedberg ---
Toy register machine: programs of inc, decjz and halt instructions.
"""
from friedberg.exceptions import TraceFormatError


class ToyProgram:
    """
    Register-machine program computing a partial function.

    The input is placed in register 0 and the output is read from register 1.
    Running past the last instruction halts. Every executed instruction counts
    as one step.

    """
    def __init__(self, instructions, number=0, limit=None):
        """
        Create a program.

        Parameters
        ----------
        instructions : list
            Tuples ('inc', r), ('decjz', r, target) or ('halt',).
        number : int
            Program number (the A-row it feeds).
        limit : LimitDecl or None
            Declared limit of the computed function.

        """
        self.instructions = [tuple(i) for i in instructions]
        for instruction in self.instructions:
            if instruction[0] not in ('inc', 'decjz', 'halt'):
                raise TraceFormatError('Unknown instruction: %s' % (instruction,))
        self.number = number
        self.limit = limit

    def __repr__(self):
        return "<ToyProgram %i | instructions: %i>" % (self.number, len(self.instructions))

    def __len__(self):
        return len(self.instructions)

    def start(self, x):
        """Machine run on input x, not stepped yet."""
        return MachineRun(self, x)

    def run(self, x, max_steps):
        """
        Run on input x for at most max_steps steps.

        Returns
        -------
        int or None
            Output, or None if the program did not halt within the bound.

        """
        run = MachineRun(self, x)
        run.advance(max_steps)
        return run.output

    def text(self):
        lines = []
        for instruction in self.instructions:
            lines.append(' '.join(str(i) for i in instruction))
        return lines


class MachineRun:
    """
    Incrementally stepped run of a program on one input.

    """
    def __init__(self, program, x):
        self.program = program
        self.registers = {0: x}
        self.pc = 0
        self.steps = 0
        self.halted = False

    def __repr__(self):
        return "<MachineRun pc: %i | steps: %i | halted: %s>" % (self.pc, self.steps, self.halted)

    @property
    def output(self):
        return self.registers.get(1, 0) if self.halted else None

    def advance(self, max_steps):
        """Step until halted or until max_steps steps were executed in total."""
        instructions = self.program.instructions
        registers = self.registers
        while not self.halted:
            if self.pc >= len(instructions):
                self.halted = True
                break
            if self.steps >= max_steps:
                break
            instruction = instructions[self.pc]
            self.steps += 1
            if instruction[0] == 'halt':
                self.halted = True
            elif instruction[0] == 'inc':
                registers[instruction[1]] = registers.get(instruction[1], 0) + 1
                self.pc += 1
            elif registers.get(instruction[1], 0) == 0:
                self.pc = instruction[2]
            else:
                registers[instruction[1]] -= 1
                self.pc += 1
        return self.halted


def parse_instruction(line):
    """Parse 'inc r', 'decjz r target' or 'halt'."""
    words = line.split()
    try:
        if words[0] == 'inc' and len(words) == 2:
            return 'inc', int(words[1])
        if words[0] == 'decjz' and len(words) == 3:
            return 'decjz', int(words[1]), int(words[2])
        if words == ['halt']:
            return ('halt',)
    except (ValueError, IndexError):
        pass
    raise TraceFormatError('Bad instruction: %r' % line)
