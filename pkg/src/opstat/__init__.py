"""opstat: exact statistics, encodings and bijections on ordered set
partitions, with an exact p,q-polynomial layer and exhaustive
equidistribution checks at small sizes."""

from .core import (
    OrderedSetPartition,
    PartitionType,
    Permutation,
    Trace,
    WordStats,
    complement_type,
    d_code,
    decompose_doubleton,
    doubleton_partition,
    from_d_code,
    from_lehmer,
    lehmer_code,
    parse_partition,
    recombine_doubleton,
    standard_form,
    trace,
    type_of,
    word_stats,
)
from .families import (
    DeskScaleError,
    FamilySpec,
    beta,
    beta_inv,
    fubini,
    generate,
    ordered_set_partitions,
    path_diagrams,
    permutations,
    rearrangements,
    set_partitions,
    sigma_partitions,
    stirling2,
    words,
)
from .motzkin import MotzkinDiagram, lambda_map, motzkin_decode, motzkin_encode, motzkin_g
from .paths import (
    LatticePath,
    PathDiagram,
    associated_permutation,
    gamma_sigma,
    g_map,
    heights,
    insertion_labels,
    path_from_type,
    path_type,
    phi,
    phi_inv,
    psi,
    psi_inv,
    reverse_path,
    theta_map,
    upsilon,
    upsilon_inv,
    varphi,
    xi_map,
)
from .qpoly import (
    LaurentPolynomial,
    TruncatedSeries,
    carlitz_aq,
    distribution,
    gauss_binomial,
    pochhammer,
    pq_factorial,
    pq_int,
    q_factorial,
    q_int,
    s_hat_pq,
    stirling_pq,
    stirling_q,
    stirling_tilde,
    verify_q_frobenius,
    verify_zezh,
)
from .statistics import (
    aggregate_profile,
    binv,
    bdes_set,
    bmaj,
    block_relation,
    composite,
    coord_stats,
    coordinate_table,
    stat,
    stat_restricted,
    trace_ros,
    trace_rsb,
)
from .verify import VerificationReport, verify

__version__ = "0.1.0"
