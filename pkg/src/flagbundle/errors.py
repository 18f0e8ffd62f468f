"""Exception hierarchy. The CLI reports ``type(exc).__name__`` verbatim."""


class FlagBundleError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidDiagramError(FlagBundleError, ValueError):
    pass


class NotACartanMatrixError(FlagBundleError, ValueError):
    pass


class NotConnectedError(FlagBundleError, ValueError):
    pass


class RankMismatchError(FlagBundleError, ValueError):
    pass


class IndexOutOfRangeError(FlagBundleError, IndexError):
    pass


class GroupTooLargeError(FlagBundleError):
    def __init__(self, reached: int, limit: int):
        super().__init__(f"Weyl group closure exceeded limit {limit} (reached {reached} elements)")
        self.reached = reached
        self.limit = limit


class RootSystemError(FlagBundleError):
    """Closure did not produce a finite root system."""


class LatticeError(FlagBundleError, ValueError):
    pass


class NotDominantError(FlagBundleError, ValueError):
    pass


class DiagramMismatchError(FlagBundleError, ValueError):
    pass


class ComponentMissesIError(FlagBundleError, ValueError):
    pass


class RankTooLargeError(FlagBundleError, ValueError):
    pass
