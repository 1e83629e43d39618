"""
Ranking every four-sensor layout by modal strain energy
=======================================================

Both structures are small enough to enumerate all C(N, 4) layouts. The
ranking is the ground truth that every QAOA ratio is measured against.
"""
from qaoa_osp import OspProblem, exhaustive_search
from qaoa_osp.experiments import reference_diff
from qaoa_osp.io import join_locations

for case in ("shear16", "truss19"):
    problem = OspProblem.from_case(case)
    ranking = exhaustive_search(problem.mse_qubo, 4)
    print(f"{case}: {len(ranking)} layouts")
    for r in ranking[:6]:
        print(f"  {r.rank:>2}  {join_locations(r.locations):<12} ratio {r.ratio:.4f}")

    # side-by-side with the reference top 10
    rows = reference_diff(case, problem)
    hits = sum(r["match"] for r in rows)
    print(f"  reference rows reproduced: {hits}/10")
    for r in rows[:3]:
        print(f"    {join_locations(r['reference_locations']):<12} reference {r['reference_ratio']:.3f}"
              f"  ours {r['our_ratio_for_reference_set']:.3f} (rank {r['our_rank_for_reference_set']})")
