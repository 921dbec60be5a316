"""Small end-to-end pass on the pendulum through the library API.

Trains behaviour policies, collects a medium dataset, fits the dynamics
ensemble, trains the agent with and without the penalty, then compares clean,
attacked and perturbed-physics returns. The defaults finish in a few minutes;
raise ``--iters`` (100k is the full schedule) for meaningful numbers.

    python demos/pendulum_pipeline.py --iters 3000
"""
import argparse
import time

import numpy as np

from microrl.agent import SACConfig, TrainConfig, Trainer
from microrl.dynamics import EnsembleConfig, train_ensemble
from microrl.envs import PendulumEnv, generate_dataset, train_behavior_policies
from microrl.robust_eval import (ScoreRefs, SweepGrid, attack_curve, clean_evaluation,
                                 normalized_score, sweep_env_params)


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=4000, help="dataset transitions")
    p.add_argument("--behavior-steps", type=int, default=6000)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--episodes", type=int, default=3)
    return p.parse_args()


def main():
    args = parse_args()
    t0 = time.perf_counter()
    beh = train_behavior_policies(args.seed, args.behavior_steps)
    data = generate_dataset("medium", args.n, args.seed, behavior=beh)
    # Too few behaviour steps can leave the "expert" no better than random.
    refs = ScoreRefs(beh.random_return, beh.expert_return) \
        if beh.expert_return > beh.random_return else None
    print(f"behaviour: random {beh.random_return:.0f}  medium {beh.medium_return:.0f}  "
          f"expert {beh.expert_return:.0f}  ({time.perf_counter() - t0:.0f} s)")

    ens = train_ensemble(data, args.seed, EnsembleConfig(hidden=64, n_hidden=3))
    print(f"ensemble: elites {ens.elites.tolist()}  holdout nll {np.round(ens.holdout_nll, 2)}")

    env = PendulumEnv()
    agents = {}
    for beta in (0.5, 0.0):
        cfg = TrainConfig(n_iter=args.iters, beta=beta, rollout_batch=1000, rollout_every=250,
                          eval_every=max(args.iters // 4, 1), eval_episodes=args.episodes,
                          seed=args.seed, sac=SACConfig())
        trainer = Trainer(cfg, data, ens, env)
        for rec in trainer.run():
            print(f"  beta {beta:g} step {rec['step']:>6}  return {rec['eval_return_mean']:8.1f}  "
                  f"mean f {rec['mean_f']:.3f}")
        agents[beta] = trainer.agent

    grid = SweepGrid()
    off = grid.off_nominal()
    for beta, agent in agents.items():
        clean = clean_evaluation(agent, env, args.episodes, args.seed)["mean"]
        curve = attack_curve(agent, env, ("RA", "MQ"), (0.0, 0.1, 0.2), args.episodes, args.seed)
        sweep = sweep_env_params(agent, grid, args.episodes, args.seed)
        norm = f" (normalized {normalized_score(clean, refs):.1f})" if refs else ""
        print(f"beta {beta:g}: clean {clean:.1f}{norm}, off-nominal mean {sweep[off].mean():.1f}")
        for r in curve:
            print(f"    {r['kind']} eps {r['eps']:.1f}: {r['mean']:.1f}")
    print(f"total {time.perf_counter() - t0:.0f} s")


if __name__ == "__main__":
    main()
