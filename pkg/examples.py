"""
Example usage of the Degree-Sequence Randomizer library
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from evaluation.fidelity import evaluate_report
from experiments.runner import expected_degrees, run_compare, run_sweep
from generators.factory import GeneratorSpec, GraphFamily, generate
from graph.datasets import load_karate_club
from graph.graph import degree_sequence
from probability.graphicality import is_graphical
from probability.kernels import EdgeProbabilityModel, ModelKind, combinatorial_terms
from probability.oracle import oracle_p
from sampling.sampler import SamplerConfig, sample


def pair_probability_example():
    """Closed form against the exact configuration count"""
    print("Example 1: Edge probability of one pair\n")

    n, m, w_i, w_j = 12, 10, 5, 5
    terms = combinatorial_terms(n, m, w_i, w_j)
    exact, counts = oracle_p(n, m, w_i, w_j)

    print(f"m_star={terms.m_star} x={terms.x} y={terms.y}")
    print(f"closed form: {terms.p:.12g}")
    print(f"exact:       {exact} ({counts.c_connected} / {counts.total})")

    chung_lu = EdgeProbabilityModel.from_counts(ModelKind.CHUNG_LU, n, m)
    print(f"Chung-Lu:    {chung_lu.probability(w_i, w_j):.12g}")
    print()


def randomize_example():
    """Randomize the Karate Club under both kernels"""
    print("Example 2: Randomizing a graph\n")

    karate = load_karate_club()
    weights = degree_sequence(karate)
    print(f"Input: {karate.n} nodes, {karate.m} edges, graphical={is_graphical(weights.weights)}")

    for kind in ModelKind:
        randomized, diagnostics = sample(weights, SamplerConfig(kind=kind, seed=42))
        randomized = randomized.with_labels(karate.labels)
        hub = karate.labels.index("34")
        print(
            f"{kind.value:>13}: {randomized.m} edges, hub degree {randomized.degrees()[hub]}, "
            f"{diagnostics.pairs_evaluated} pairs evaluated"
        )
    print()


def expected_degree_example():
    """Noise-free per-node expected degrees"""
    print("Example 3: Expected degrees of the top nodes\n")

    karate = load_karate_club()
    weights = degree_sequence(karate)
    comb = expected_degrees(weights, ModelKind.COMBINATORIAL)
    cl = expected_degrees(weights, ModelKind.CHUNG_LU)

    degrees = karate.degrees()
    for i in degrees.argsort(kind="stable")[::-1][:5]:
        print(f"node {karate.labels[i]:>2}: given {degrees[i]:2d}  combinatorial {comb[i]:6.2f}  Chung-Lu {cl[i]:6.2f}")
    print()


def fidelity_example():
    """Per-node fidelity over repeated trials"""
    print("Example 4: Fidelity on the Karate Club\n")

    report = run_compare(load_karate_club(), trials=100, seed=7)
    for kind, result in evaluate_report(report, top_k=5).items():
        print(f"{kind.value:>13}: {result.to_dict()}")
    print()


def sweep_example():
    """Average degree drift on a dense Barabási–Albert graph"""
    print("Example 5: Density sweep\n")

    g = generate(GeneratorSpec(family=GraphFamily.BA, n=300, seed=3, edge_count=20000))
    print(f"Dense BA graph: {g.m} edges, density {g.density():.3f}")

    for row in run_sweep(GraphFamily.ER_GNM, 200, [0.3, 0.6, 0.9], trials=10, seed=11):
        print(
            f"density {row.density}: Chung-Lu drift {row.signed_diff_cl:+.3f}, "
            f"combinatorial drift {row.signed_diff_comb:+.3f}"
        )
    print()


if __name__ == "__main__":
    print("=" * 70)
    print("Degree-Sequence Randomizer - Examples")
    print("=" * 70)
    print()

    pair_probability_example()
    randomize_example()
    expected_degree_example()
    fidelity_example()
    # sweep_example()
