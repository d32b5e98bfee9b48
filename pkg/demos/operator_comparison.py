"""Compare selection and mutation variants on one small instance.

A miniature version of the full experiment grid: five operator setups, a few
replicates each, medians of the final coverage.  Two findings show up even at
this scale: swapping fair selection for random or tournament selection barely
moves the plateau, while one-bit mutation — which never produces copies of
its parent — covers clearly more of the front.
"""

import argparse
from statistics import median

from nsga2lab import ProblemSpec, RunConfig, VariationConfig, run

SETUPS = {
    "fair + standard-bit": VariationConfig(),
    "random + standard-bit": VariationConfig(selection="random"),
    "tournament + standard-bit": VariationConfig(selection="tournament"),
    "random + crossover": VariationConfig(selection="random", crossover_enabled=True),
    "fair + one-bit": VariationConfig(mutation="one_bit"),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=16)
    parser.add_argument("--iterations", type=int, default=200)
    parser.add_argument("--replicates", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    spec = ProblemSpec(n=args.n, m=4)
    N = 4 * spec.front_size
    print(f"m=4, n={spec.n}: front size M={spec.front_size}, N=4M={N}, "
          f"{args.iterations} iterations, {args.replicates} replicates\n")

    width = max(len(name) for name in SETUPS)
    print(f"{'setup':<{width}}  median final coverage")
    for name, variation in SETUPS.items():
        finals = []
        for r in range(args.replicates):
            config = RunConfig(
                problem=spec,
                population_size=N,
                iterations=args.iterations,
                variation=variation,
                seed=args.seed,
                replicate_id=r,
            )
            finals.append(run(config)[-1].covered_R)
        med = median(finals)
        bar = "#" * round(40 * med / spec.front_size)
        print(f"{name:<{width}}  {med:>5g} / {spec.front_size}  {bar}")

    print("\nselection variants land on similar plateaus; one-bit mutation "
          "stands apart because copies of Pareto-optimal parents are exactly "
          "what erodes coverage")


if __name__ == "__main__":
    main()
