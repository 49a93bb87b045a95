from ._torictool import (
    classification,
    cominimals,
    hilbert_basis,
    paper_minimals,
    resonances,
    run,
    toric_degree,
    torsion,
)

__all__ = [
    "classification",
    "cominimals",
    "hilbert_basis",
    "paper_minimals",
    "resonances",
    "run",
    "toric_degree",
    "torsion",
]
