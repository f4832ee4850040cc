"""Exception hierarchy shared by every module of the package."""


class MeyerError(ValueError):
    """Base class for all input and precondition errors raised here."""


class NonSymmetricInput(MeyerError):
    pass


class SingularMatrix(MeyerError):
    pass


class DimensionMismatch(MeyerError):
    pass


class NotSymplectic(MeyerError):
    pass


class NotUpperTriangular(MeyerError):
    """The lower-left g x g block of a symplectic matrix is not zero."""


class NotUrSp(MeyerError):
    """Blocks (P, Q, S) violate tP S = I or tQ S = tS Q."""


class GenusMismatch(MeyerError):
    pass


class GenusDecrease(MeyerError):
    pass


class GenusTooSmall(MeyerError):
    pass


class NotInHandlebodyGroup(MeyerError):
    """A word contains a bare t2 or t3 letter."""


class NoSolution(MeyerError):
    pass


class ParseError(MeyerError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position
