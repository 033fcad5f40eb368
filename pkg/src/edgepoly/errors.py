class InputError(ValueError):
    """Malformed graph, weighting, partition or certificate."""


class ResourceError(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""
