class TwinWidthError(ValueError):
    """Base class for every error the suite reports."""


class InvalidTrigraph(TwinWidthError):
    pass


class InvalidContraction(TwinWidthError):
    """A contraction pair that cannot be applied; ``step`` is 1-based when known."""

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f'step {step}: {message}'
        super().__init__(message)


class PartitionError(TwinWidthError):
    pass


class InstanceFormatError(TwinWidthError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class SequenceFormatError(InstanceFormatError):
    pass


class OracleCapExceeded(TwinWidthError):
    pass


class SolverFailure(TwinWidthError):
    """The solver stopped without a proven answer."""


class StateBudgetExceeded(SolverFailure):
    def __init__(self, layer, states, cap):
        self.layer = layer
        self.states = states
        self.cap = cap
        super().__init__(f'state cap {cap} exceeded at layer {layer} ({states} live states)')


class BudgetExpired(SolverFailure):
    def __init__(self, stage):
        self.stage = stage
        super().__init__(f'time budget expired during {stage}')
