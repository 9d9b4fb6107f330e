"""Graph burning toolkit.

Burning spreads fire one hop per round from everything already burned, with
one fresh source ignited each round; the burning number of a graph is the
fewest rounds needed to burn it entirely.  This package bundles sequence
verification and simulation, exact and approximate burning-number solvers,
polynomial burners for special graph classes, hard-instance generators
driven by distinct 3-partition inputs, and the companion firefighter and
bootstrap-percolation processes, plus a batch CLI.
"""

from .approx import ApproxResult, burn_3approx, next_fire_source
from .burning import BurnOutcome, BurnSchedule, clusters, coverage, covers_all, simulate, verify
from .errors import (
    BudgetError,
    BurnkitError,
    DisconnectedGraphError,
    InvalidSequenceError,
    NodeBudgetError,
    NotBurnableIn3Error,
    ParseError,
    RejectedInputError,
    VertexCapError,
)
from .exact import (
    ExactResult,
    burning_number_bruteforce,
    burning_number_exact,
    lower_bound,
    upper_bound_radius,
)
from .families import (
    SplitPartition,
    burn_cograph,
    burn_cycle,
    burn_interval_approx,
    burn_path,
    burn_split,
    split_partition,
    validate_split,
)
from .graph import (
    DiskArrangement,
    Graph,
    IntervalSet,
    PermutationPair,
    bfs_distances,
    components,
    diameter_path,
    disk_graph,
    from_edge_list,
    interval_graph,
    neighborhood,
    permutation_graph,
)
from .hardness import (
    D3PInstance,
    GadgetCertificate,
    SubpathSpec,
    check_d3p_solution,
    gen_dk_gadget,
    gen_ig_gadget,
    gen_pg_gadget,
    gen_spider,
    gen_spider_forest,
    solve_d3p_bruteforce,
    validate_d3p,
)
from .processes import (
    FirefightRun,
    PercolationRun,
    bootstrap_percolate,
    firefight_bruteforce,
    firefight_pk_free,
    verify_firefighter,
)

__version__ = "0.1.0"
