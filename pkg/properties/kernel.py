from models.model_set import ModelSet
from models.program import AtomSet


class KernelUndefinedError(Exception):
    """Raised when asking for the kernel of an empty model set."""
    pass


def semantic_kernel(models: ModelSet) -> AtomSet:
    """
    Atoms true in every model.

    Raises:
        KernelUndefinedError: If there are no models
    """
    kernel = models.kernel()
    if kernel is None:
        raise KernelUndefinedError("The semantic kernel is not defined for an empty model set")
    return kernel
