"""Exception hierarchy shared by every module of the package."""


class TreeAugError(Exception):
    """Base class for all package errors."""


class InvalidVertexError(TreeAugError, ValueError):
    pass


class GraphFormatError(TreeAugError, ValueError):
    """Malformed edge list, self-loop or duplicate edge."""


class PreconditionError(TreeAugError, ValueError):
    """An operation was called on an input outside its domain (e.g. a non-tree)."""


class InvalidSpecError(TreeAugError, ValueError):
    pass


class InvalidTargetError(TreeAugError, ValueError):
    """Target connectivity r is not attainable for the given vertex count."""


class UnsupportedTargetError(TreeAugError, ValueError):
    """Target connectivity outside what the non-path procedure handles (r = 2)."""


class NoSeparatorError(TreeAugError, ValueError):
    """Complete graphs have no vertex separator."""


class InconsistencyError(TreeAugError, ValueError):
    """The leaf chain handed to the block-tree builder does not fit the graph."""


class InvalidCandidateError(TreeAugError, ValueError):
    """A candidate augmentation set reuses an existing edge or has a self-loop."""


class OracleLimitError(TreeAugError):
    """The exhaustive oracle refuses an instance above its configured caps."""


class BudgetExceededError(TreeAugError):
    """The exhaustive oracle ran out of subset budget before finishing.

    ``searched_up_to`` holds the largest subset size that was fully ruled out.
    """

    def __init__(self, message, searched_up_to=None):
        super().__init__(message)
        self.searched_up_to = searched_up_to


class PatternExhaustedError(TreeAugError):
    """No legal non-edge exists for the pattern that was matched.

    ``state`` carries the round snapshot (round number, working graph,
    block tree and edges added so far) for diagnostics.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state
