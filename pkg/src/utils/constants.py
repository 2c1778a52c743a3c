"""Save constants used in other scripts."""

# Generator matrices, rows listed top to bottom. The boundary twist d is
# never given a matrix of its own; it is expanded to (ab)^6.
MATRIX_A = ((1, 1), (0, 1))
MATRIX_B = ((1, 0), (-1, 1))
DELTA_EXPANSION = (("a", 1), ("b", 1)) * 6

# Letters accepted in words (d stands for the boundary twist)
GENERATORS = ("a", "b", "d")

# Iterations of the composite lift used to bracket integer coefficients,
# and the two start directions the brackets are taken from
BRACKET_ITERATIONS = 3
BRACKET_STARTS = ((1, 0), (1, 2))

# Default number of iterations for the floating-point circle-map oracle
ORACLE_ITERATIONS = 10_000

# One-letter status codes used in the rendered triangles
STATUS_CODES = {
    "SteinFillable": "S",
    "StrongNotLiouville": "N",
    "EdgeConjecturedStein": "C",
}

# Citation registry. Each entry is (anchor, statement, state) where the
# statement is quoted from the anchored result and state is one of proved,
# cited, announced, conjectured.
CITATIONS = {
    "mixed-surgery": (
        "Theorem (mixed)",
        "If ξ is not Liouville (resp. weakly) fillable, then ξ_(r) is also not "
        "Liouville (resp. weakly) fillable for any r ∈ Q.",
        "proved",
    ),
    "mixed-overtwisted": (
        "Remark (overtwisted)",
        "In fact, any non-negative contact surgery on a mixed Legendrian knot "
        "produces an overtwisted contact structure.",
        "proved",
    ),
    "negative-surgery-weak": (
        "Theorem (mixed), proof sketch",
        "Since negative contact surgery preserves weak fillability, the "
        "resulting contact structure is also weakly fillable.",
        "cited",
    ),
    "planar-torsion": (
        "Corollary (planar torsion)",
        "Then ξ_(r) is not Liouville fillable for any r ∈ Q.",
        "proved",
    ),
    "fibered-strong": (
        "Theorem (non-Liouville)",
        "Then Y_r(K) admits a strongly fillable contact structure which is not "
        "Liouville fillable for any r ∈ R(1/n_K).",
        "proved",
    ),
    "fibered-weak": (
        "Theorem (weak non-Liouville)",
        "Then Y_r(K) admits a weakly fillable contact structure which is not "
        "Liouville fillable for any r ∈ R(1/n_K).",
        "proved",
    ),
    "weak-to-strong": (
        "Proof of Theorem (non-Liouville)",
        "By the result of Ohta and Ono, we can perturb the symplectic structure "
        "of any weak filling of a rational homology 3-sphere to be a strong "
        "filling.",
        "cited",
    ),
    "rotative-bundle": (
        "Theorem (torus bundle fillability)",
        "ξ_φ^n is weakly fillable but not strongly fillable for n ≥ 1.",
        "cited",
    ),
    "rotative-torsion": (
        "Remark (Giroux torsion)",
        "If n ≥ 1, a rotative contact structure ξ_φ^n contains Giroux torsion, "
        "which is planar 1-torsion.",
        "cited",
    ),
    "eta-classification": (
        "Classification of -Σ(2,3,6n-1)",
        "They showed there exist n(n-1)/2 tight contact structures η^n_{i,j} "
        "and they are all strongly fillable. They also showed that η^n_{0,j} "
        "are Stein fillable for |j| ≤ n-2.",
        "cited",
    ),
    "xi-classification": (
        "Classification of -Σ(2,3,6n+1)",
        "He showed there exist n(n+1)/2 tight contact structures ξ^n_{i,j} and "
        "they are all strongly fillable. He also showed that ξ^n_{0,j} are "
        "Stein fillable for |j| ≤ n-1.",
        "cited",
    ),
    "eta-apex": (
        "Non-fillability of the apex",
        "However, Ghiggini showed η^n_{n-2,0} are not Liouville fillable for "
        "n ≥ 3.",
        "cited",
    ),
    "xi-center": (
        "Non-fillability of the central column",
        "He showed ξ^n_{i,0} are not Liouville fillable for 1 ≤ i ≤ n-1 and "
        "n ≥ 2.",
        "cited",
    ),
    "eta-four-stein": (
        "Forthcoming Stein fillings",
        "We disprove the conjecture by finding Stein fillings of η^4_{1,±1}.",
        "announced",
    ),
    "inner-triangle": (
        "Theorem (triangle)",
        "η^n_{i,j} are strongly fillable but not Liouville fillable for "
        "0 < i < n-3 and |j| < n-i-2. ξ^n_{i,j} are strongly fillable but not "
        "Liouville fillable for 0 < i < n-2 and |j| < n-i-1.",
        "proved",
    ),
    "edge-conjecture": (
        "Conjecture (edges)",
        "η^n_{i,±(n-i-2)} are Stein fillable for 1 ≤ i ≤ n-3. "
        "ξ^n_{i,±(n-i-1)} are Stein fillable for 1 ≤ i ≤ n-2.",
        "conjectured",
    ),
}

# Default range for the Brieskorn atlas stage
ATLAS_MAX_N = 12
