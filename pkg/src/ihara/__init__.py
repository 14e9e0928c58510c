"""Ihara zeta functions of graphs, Grover walks, and the cycle-to-lattice limit."""

from .algebra import Polynomial, PowerSeries
from .cycles import (
    CycleCounts,
    count_reduced_cycles,
    count_rooted_reduced_cycles,
    hashimoto_trace_counts,
)
from .graph import (
    ArcSet,
    Graph,
    arcs,
    betti,
    build_graph,
    complete_graph,
    cube_graph,
    cycle_graph,
    load_graph,
    matrices,
    path_graph,
    petersen,
)
from .lattice import (
    ConvergenceTable,
    QuadratureSpec,
    laplacian_form_reciprocal,
    limit_reciprocal_closed_form,
    limit_reciprocal_quadrature,
    theorem4_table,
    zeta_cn_reciprocal,
    zeta_lattice,
)
from .walk import (
    EvolutionMatrix,
    SpectrumReport,
    WalkState,
    coin_operator,
    coined_matrix,
    det_I_minus_uU,
    det_I_minus_uU_polynomial,
    evolve,
    grover_char_poly,
    grover_matrix,
    grover_spectrum,
    shift_operator,
)
from .zeta import (
    Route,
    ZetaEvaluation,
    cjk_evaluate,
    generalized_zeta_reciprocal,
    ihara_reciprocal_polynomial,
    rooted_zeta_series,
    zeta_series_truncated,
)

__version__ = "0.1.0"
