"""Exception types shared across the package."""


class PermstatError(Exception):
    """Base class for all errors raised by permstat."""


class DuplicateLetter(PermstatError):
    def __init__(self, letter: int):
        self.letter = letter
        super().__init__(f"duplicate letter {letter}")


class NotAPermutation(PermstatError):
    pass


class KOutOfRange(PermstatError):
    pass


class EmptyWord(PermstatError):
    pass


class InvalidR(PermstatError):
    pass


class UnknownStatistic(PermstatError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown statistic {name!r}")


class WordNotPermutation(PermstatError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"statistic {name!r} requires a permutation of 1..n")


class LetterCollision(PermstatError):
    def __init__(self, letter: int):
        self.letter = letter
        super().__init__(f"letter {letter} already present in the word")


class SizeCapExceeded(PermstatError):
    pass


class ArityMismatch(PermstatError):
    pass


class ParseError(PermstatError):
    pass


class InvariantViolation(PermstatError):
    """An internal structural contract failed; indicates a defect."""
