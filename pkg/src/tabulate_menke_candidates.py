"""Tabulate the splitting slopes of mixed tori."""

import json

from rich import print

from .farey import Slope, has_edge, in_clockwise_arc
from .surgery import MixedTorus, menke_candidates
from .utils import Stage


class TabulateMenkeCandidates(Stage):
    """Stage to list the candidate splitting slopes of each mixed torus."""

    def _run(self) -> None:
        """Run the stage."""
        records = []
        for slopes in self.stage_vars.tori:
            torus = MixedTorus(*(Slope.parse(s) for s in slopes))
            candidates = menke_candidates(torus)

            # Every candidate must satisfy both constraints
            for s in candidates:
                if not has_edge(s, torus.s_zero) or not in_clockwise_arc(
                    s, torus.s_plus, torus.s_minus
                ):
                    raise RuntimeError(f"Bad candidate {s} for {torus}!")

            records.append(
                {
                    "s_minus": str(torus.s_minus),
                    "s_zero": str(torus.s_zero),
                    "s_plus": str(torus.s_plus),
                    "candidates": [str(s) for s in candidates],
                }
            )
            print(f"{torus}: {', '.join(str(s) for s in candidates)}")

        with open(self.output, "w") as file:
            json.dump(records, file, indent=2)
