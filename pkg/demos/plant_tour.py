"""
Plant tour
==========

Shows why a controller that works in the standard medium fails in the viscous
one. It prints the settling times of a single-chamber step in both domains,
then replays the standard-domain circle commands on both arms and compares
the tip paths.

    python demos/plant_tour.py
"""

import numpy as np

from viscoshift import data as D
from viscoshift import plant as P


def main():
    std, vis = P.new_domain("standard"), P.new_domain("constrained")
    step = np.array([3.5, 0.0, 0.0])
    t_std, t_vis = P.settling_time(std, step), P.settling_time(vis, step)
    print(f"settling time after a (3.5, 0, 0) bar step: standard {t_std:.2f} s, constrained {t_vis:.2f} s "
          f"(ratio {t_vis / t_std:.1f})")

    cmd = D.shape_signal("circle", duration=60.0)
    ref = P.rollout(std, cmd).pose[:, :3]
    got = P.rollout(vis, cmd).pose[:, :3]
    err = 100 * np.linalg.norm(got - ref, axis=1)
    print(f"circle replayed unchanged on the viscous arm: mean tip error {err.mean():.2f} cm, max {err.max():.2f} cm")
    for t in range(0, len(cmd), 100):
        (xs, ys), (xc, yc) = 100 * ref[t, :2], 100 * got[t, :2]
        print(f"  t={t / 10:5.1f} s  standard ({xs:6.2f}, {ys:6.2f}) cm  constrained ({xc:6.2f}, {yc:6.2f}) cm")


if __name__ == "__main__":
    main()
