"""Tabulate the twist coefficients of the worked monodromies."""

import json

from rich import print

from .fillability import r_interval
from .mcg import (
    Word,
    evaluate,
    fdtc,
    fdtc_estimate,
    n_K,
    nt_classify,
    recognize_normal_form,
    right_veering,
)
from .utils import Stage, format_fraction


class TabulateTwistCoefficients(Stage):
    """Stage to compute type, twist coefficient and n_K of each monodromy."""

    def _run(self) -> None:
        """Run the stage."""
        records = []
        for text in self.stage_vars.words:
            w = Word.parse(text)
            c = fdtc(w)

            # Cross-check the exact value against the circle-map oracle
            estimate = fdtc_estimate(w, self.stage_vars.oracle_iterations)
            if abs(estimate - float(c)) > self.stage_vars.tolerance:
                raise RuntimeError(
                    f"Twist coefficient of '{w}' is {c}, "
                    f"but the oracle gives {estimate:.4f}!"
                )

            normal_form = recognize_normal_form(w)
            records.append(
                {
                    "word": str(w),
                    "matrix": evaluate(w).to_rows(),
                    "type": nt_classify(w).value,
                    "fdtc": format_fraction(c),
                    "fdtc_estimate": estimate,
                    "right_veering": right_veering(w).value,
                    "n_K": n_K(w),
                    "r_set": str(r_interval(w)),
                    "normal_form": None if normal_form is None else normal_form.kind,
                }
            )
            print(f"{w}: c = {format_fraction(c)}, n_K = {n_K(w)}")

        with open(self.output, "w") as file:
            json.dump(records, file, indent=2)
