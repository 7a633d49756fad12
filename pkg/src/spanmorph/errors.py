class MorphError(Exception):
    pass


class ParseError(MorphError):
    """A malformed lexicon line. ``lineno`` and ``column`` are 1-based, or None."""

    def __init__(self, message, lineno=None, column=None):
        self.message = message
        self.lineno = lineno
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.lineno is not None:
            where.append(f"line {self.lineno}")
        if self.column is not None:
            where.append(f"field {self.column}")
        return f"{', '.join(where)}: {self.message}" if where else self.message


class UnknownValue(ParseError):
    pass


class UnknownCode(ParseError, ValueError):
    pass


class InvalidCombination(MorphError, ValueError):
    pass


class MixedWildcard(MorphError, ValueError):
    pass


class LexiconError(MorphError):
    """Raised by the loader with every bad line collected in ``errors``."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__(f"{len(self.errors)} bad line(s) in lexicon")

    def report(self):
        return "\n".join(str(e) for e in self.errors)


class UnknownLemma(MorphError, KeyError):
    def __str__(self):
        return f"unknown lemma: {self.args[0]!r}"
