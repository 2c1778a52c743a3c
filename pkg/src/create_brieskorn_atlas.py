"""Create the atlas of tight contact structures on Brieskorn spheres."""

import json

from rich import print

from .brieskorn import (
    Family,
    StatusKind,
    certify_via_mixed_surgery,
    enumerate_cells,
    render_triangle,
    status,
    to_records,
)
from .fillability import FillLevel
from .utils import Stage


class CreateBrieskornAtlas(Stage):
    """Stage to save records and triangles for both families."""

    def _run(self) -> None:
        """Run the stage."""
        max_n = self.stage_vars.max_n
        json_files = {Family.ETA: self.output[0], Family.XI: self.output[1]}
        triangles = []

        for family, file in json_files.items():
            records = []
            for n in range(family.min_n, max_n + 1):
                # Mixed-knot surgery must agree with the cited statuses
                cells = enumerate_cells(family, n)
                for cell in cells:
                    certified = certify_via_mixed_surgery(cell)
                    if certified is None:
                        continue
                    if status(cell).kind is not StatusKind.STRONG_NOT_LIOUVILLE:
                        raise RuntimeError(f"{cell} is mixed but not in the triangle!")
                    if certified.upper != FillLevel.STRONG:
                        raise RuntimeError(f"Mixed surgery misses the cap on {cell}!")

                records.extend(to_records(family, n))
                triangles.append(render_triangle(family, n))
                print(f"{family.value} n={n}: {len(cells)} cells")

            with open(file, "w") as f:
                json.dump(records, f, indent=2)

        with open(self.output[2], "w") as file:
            file.write("\n\n".join(triangles) + "\n")
