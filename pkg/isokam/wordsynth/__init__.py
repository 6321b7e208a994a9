from .Word import Word
from .EpsilonNet import EpsilonNet
from .epsilon_net import epsilon_net_bfs, certification_panel
from .power_scan import approximate_inverse, power_distances
from .solovay_kitaev import (
    solovay_kitaev,
    group_commutator_decomposition,
    fit_contraction_constant,
    compile_without_inverses,
    CompiledWord,
    BASIN_RADIUS,
)
from .errors import NotDenseAtBudget, BudgetExceeded, NetTooCoarse, DimUnsupported
