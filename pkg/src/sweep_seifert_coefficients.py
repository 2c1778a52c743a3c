"""Sweep the Seifert-framed surgery coefficients of genus one fibered knots."""

import json
from fractions import Fraction

import numpy as np
from rich import print

from .fillability import Ambient, fibered_surgery_verdict, r_interval
from .mcg import Word, n_K
from .surgery import seifert_coefficient, seifert_coefficient_matrix
from .utils import Stage, format_fraction, split_seed


class SweepSeifertCoefficients(Stage):
    """Stage to check that negative mixed surgeries realize R(1/n_K)."""

    def _run(self) -> None:
        """Run the stage."""
        n_samples = self.stage_vars.n_samples
        max_term = self.stage_vars.max_term
        seeds = split_seed(self.stage_vars.seed, len(self.stage_vars.words))

        records = []
        for text, seed in zip(self.stage_vars.words, seeds):
            w = Word.parse(text)
            interval = r_interval(w)

            # Draw negative contact coefficients -p/q
            rng = np.random.default_rng(seed)
            ps = rng.integers(1, max_term + 1, size=n_samples)
            qs = rng.integers(1, max_term + 1, size=n_samples)

            samples = []
            for p, q in zip(ps, qs):
                r = -Fraction(int(p), int(q))
                coefficient = seifert_coefficient(w, r)

                # Closed form, matrix computation and membership must agree
                if coefficient != seifert_coefficient_matrix(w, r):
                    raise RuntimeError(f"Seifert coefficients disagree for {w}, {r}!")
                if coefficient not in interval:
                    raise RuntimeError(f"{coefficient} is not in {interval}!")
                if not fibered_surgery_verdict(w, coefficient, Ambient.QHS).exists:
                    raise RuntimeError(f"No verdict for {w} at {coefficient}!")

                samples.append(
                    {"contact": format_fraction(r), "seifert": str(coefficient)}
                )

            records.append(
                {
                    "word": str(w),
                    "n_K": n_K(w),
                    "r_set": str(interval),
                    "samples": samples,
                }
            )
            print(f"{w}: {n_samples} coefficients in {interval}")

        with open(self.output, "w") as file:
            json.dump(records, file, indent=2)
