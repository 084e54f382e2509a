from dpcolor.harness.certificates import make_bundle, read_bundle, replay_bundle, write_bundle
from dpcolor.harness.fixtures import FIXTURES, THETA_LIST_SIZES, cycle, cycle_graph, fixture
from dpcolor.harness.fuzz import fuzz_theorem, run_trial, trial_seeds
from dpcolor.harness.generate import generate_class_member, stacked_triangulation
from dpcolor.harness.regress import CASES, RegressionCase, run_regressions

__all__ = [
    "CASES",
    "FIXTURES",
    "RegressionCase",
    "THETA_LIST_SIZES",
    "cycle",
    "cycle_graph",
    "fixture",
    "fuzz_theorem",
    "generate_class_member",
    "make_bundle",
    "read_bundle",
    "replay_bundle",
    "run_regressions",
    "run_trial",
    "stacked_triangulation",
    "trial_seeds",
    "write_bundle",
]
