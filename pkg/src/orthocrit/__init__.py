"""Type-D Weyl group combinatorics for SO(n,n) inside SO(n+1,n+1), critical
sets of the associated degree-2n L-functions, and an exhaustive checker for
the equivalence of criticality, the integer window on the twist, and the
unique middle-length Kostant representative."""

from .rootdata import (
    RootSystem, Weight, build_root_system, dot_action, is_dominant, is_dominant_by_chain,
)
from .weyl import WeylElement, compose, enumerate_group, group_order, identity, inverse, length
from .parabolic import Parabolic, KostantRepSet, build_parabolic, is_kostant_rep, kostant_reps, reps_of_length
from .critical import (
    SOWeightData, TwistData, cohomological_degree, critical_set_rankin_selberg,
    critical_set_so, is_critical_twisted, ratio_argument_map,
)
from .lemma import LemmaInstance, LemmaReport, SweepReport, SweepSpec, check_instance, verify_equivalence

__version__ = "0.1.0"
