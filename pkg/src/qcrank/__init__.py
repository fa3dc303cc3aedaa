"""qcrank: exact truncated q-series arithmetic, partition-crank oracles,
and an executable catalogue of crank-parity congruence checks."""

__version__ = "0.1.0"

from .series import (Series, SeriesError, ModulusMismatchError,
                     NonInvertibleError, TruncationRangeError)
from .products import (EtaQuotientSpec, PentTriIndex, PENTAGONAL, TRIANGULAR,
                       eta_expand, euler_product, euler_product_dense,
                       pentagonal, pochhammer, theta, triangular,
                       triple_product)
from .partitions import (CrankTally, Partition, a_oracle, a_oracle_literal,
                         crank, crank_tally, nu2, partitions)

__all__ = [
    "__version__",
    "Series",
    "SeriesError",
    "ModulusMismatchError",
    "NonInvertibleError",
    "TruncationRangeError",
    "EtaQuotientSpec",
    "PentTriIndex",
    "PENTAGONAL",
    "TRIANGULAR",
    "eta_expand",
    "euler_product",
    "euler_product_dense",
    "pentagonal",
    "pochhammer",
    "theta",
    "triangular",
    "triple_product",
    "CrankTally",
    "Partition",
    "a_oracle",
    "a_oracle_literal",
    "crank",
    "crank_tally",
    "nu2",
    "partitions",
]
