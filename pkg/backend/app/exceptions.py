class GammaError(Exception):
    """Base class for every error raised by the app."""


class WordSyntaxError(GammaError, ValueError):
    def __init__(self, message, text="", offset=0):
        super().__init__(f"{message} at offset {offset}")
        self.text = text
        self.offset = offset


class ScopeError(GammaError, ValueError):
    """Input is valid but outside what the app supports (q too large, radius too big, ...)."""


class DefectError(GammaError, RuntimeError):
    """
    Internal tripwire. Raising one of these means an invariant that should
    always hold did not, so the result must not be trusted.
    """


class RewriteCapExceeded(DefectError):
    pass


class ReductionStuck(DefectError):
    def __init__(self, state):
        super().__init__(f"cascade stuck at {state}")
        self.state = state
