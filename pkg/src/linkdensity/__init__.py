"""Volume and determinant densities of rational (2-bridge) links."""

from .conjectures import ConjectureVerdict, Status, check_stoimenow, check_voldet_conjecture
from .determinant import (
    DeterminantRecord,
    det_density,
    det_density_limit,
    determinant,
    family_det_density,
    family_determinant,
)
from .rational import (
    Family,
    FamilyParams,
    RationalLinkInfo,
    TwistVector,
    classify,
    component_count,
    continued_fraction,
    make_family,
)
from .report import DensityReport, build_report
from .search import SearchResult, SearchStatus, det_density_search, vol_density_search
from .tait import Multigraph, multiedge_expand, spanning_tree_count, tait_graph
from .volume import CONSTANTS, V_OCT, V_TET, VolumeWindow, bipyramid_volume, lobachevsky, volume_window
from .weave import weave_det_bracket, weave_target_m

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS", "V_OCT", "V_TET",
    "ConjectureVerdict", "DensityReport", "DeterminantRecord", "Family", "FamilyParams",
    "Multigraph", "RationalLinkInfo", "SearchResult", "SearchStatus", "Status",
    "TwistVector", "VolumeWindow",
    "bipyramid_volume", "build_report", "check_stoimenow", "check_voldet_conjecture",
    "classify", "component_count", "continued_fraction", "det_density", "det_density_limit",
    "det_density_search", "determinant", "family_det_density", "family_determinant",
    "lobachevsky", "make_family", "multiedge_expand", "spanning_tree_count", "tait_graph",
    "vol_density_search", "volume_window", "weave_det_bracket", "weave_target_m",
]
