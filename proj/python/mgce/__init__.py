"""Exact mixed graded Chevalley-Eilenberg calculator (C++ core)."""

try:
    from ._mgce import (  # noqa: F401
        AxiomFailure,
        Manifest,
        ManifestError,
        RepInvalid,
        rank,
        run,
    )
except ImportError:  # in-tree builds put the extension next to the package
    from _mgce import (  # noqa: F401
        AxiomFailure,
        Manifest,
        ManifestError,
        RepInvalid,
        rank,
        run,
    )

__all__ = ["Manifest", "ManifestError", "AxiomFailure", "RepInvalid", "rank", "run"]
