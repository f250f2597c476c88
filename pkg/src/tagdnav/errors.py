"""Exception types shared across the package."""


class TagdnavError(Exception):
    """Base class for all package-specific errors."""


class InputShapeError(TagdnavError, ValueError):
    """An array input has the wrong length or dimensionality."""


class DegenerateInputError(TagdnavError, ValueError):
    """A geometric solve received too few or rank-deficient inputs."""


class NoPathError(TagdnavError):
    """The grid planner could not connect start and goal."""


class LayoutError(TagdnavError):
    """Layout or obstacle placement failed after bounded retries."""


class EpisodeTerminatedError(TagdnavError, RuntimeError):
    """step() was called on an episode that already terminated."""


class InsufficientBufferError(TagdnavError):
    """The replay buffer holds fewer transitions than the requested batch."""


class ConfigError(TagdnavError, ValueError):
    """A configuration file or value is invalid."""


class CheckpointLoadError(TagdnavError):
    """A checkpoint is missing, malformed, or incompatible with the request."""


class TrainingDivergenceError(TagdnavError):
    """A non-finite loss or parameter was produced during training."""


class VizDataError(TagdnavError, ValueError):
    """An episode record lacks the data required for visualization."""
