"""Run all stages that regenerate the worked examples and tables."""

from src import *
from src.utils import ATLAS_MAX_N, Workflow

# Create the workflow
workflow = Workflow()

# Define the paths where I will save things
paths = workflow.paths
paths.data = paths.root / "data"

# Monodromies of the worked examples
words = [
    "a b",  # right-handed trefoil
    "a^-1 b^-1",  # left-handed trefoil
    "a b^-1",  # figure-eight knot
    "d",
    "d^-1",
    "a b^2 a b^2",
    "d^2 a^3 b^-1",
    "b^3",
]

# Add stages to workflow
workflow.add_stage(
    "twist coefficients",
    TabulateTwistCoefficients,
    paths.data / "twist_coefficients.json",
    words=words,
    oracle_iterations=2_000,
    tolerance=2e-3,
)

workflow.add_stage(
    "menke candidates",
    TabulateMenkeCandidates,
    paths.data / "menke_candidates.json",
    tori=[
        ("-1", "0", "1"),
        ("-1/2", "0", "1/2"),
        ("-3", "-2", "-1"),
        ("1/3", "1/2", "1"),
    ],
)

workflow.add_stage(
    "brieskorn atlas",
    CreateBrieskornAtlas,
    [
        paths.data / "brieskorn_eta.json",
        paths.data / "brieskorn_xi.json",
        paths.data / "brieskorn_triangles.txt",
    ],
    max_n=ATLAS_MAX_N,
)

workflow.add_stage(
    "seifert sweep",
    SweepSeifertCoefficients,
    paths.data / "seifert_sweep.json",
    dependencies="twist coefficients",
    words=words,
    n_samples=100,
    max_term=50,
    seed=1,
)

# Command-line interface
if __name__ == "__main__":
    workflow.cli()
