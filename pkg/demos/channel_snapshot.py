"""Inspect one drawn channel realization: geometry, path loss, array gains.

Run:  python demos/channel_snapshot.py
"""

import numpy as np

from uavsec.channel import (ArrayGeometry, NodePlacement, draw_realization,
                            path_loss_db, steering_vector)
from uavsec.config import ScenarioConfig
from uavsec.harness import trial_rng


def main():
    cfg = ScenarioConfig()
    rng = trial_rng(cfg.seed, 0)
    real = draw_realization(cfg, rng)

    print(f"scenario: N={cfg.n_bs_antennas} antennas at {cfg.uav_altitude_m:.0f} m, "
          f"K={cfg.n_users} users, M={cfg.n_eve_antennas} eavesdropper antennas, "
          f"{cfg.carrier_ghz:.0f} GHz")

    # path loss across the service area
    for ground in (cfg.d_min_m, 50.0, cfg.d_max_m):
        loss = path_loss_db(ground, cfg.uav_altitude_m, cfg.carrier_ghz)
        print(f"  ground distance {ground:5.1f} m -> path loss {loss:7.3f} dB")

    # a steering vector is unit norm and flat in magnitude
    geometry = ArrayGeometry(cfg.n_bs_antennas, cfg.spacing_over_wavelength)
    a = steering_vector(geometry, np.deg2rad(30.0))
    print(f"steering vector at 30 deg: norm {np.linalg.norm(a):.6f}, "
          f"|entries| all {abs(a[0]):.6f}")

    h = real.user_channels
    he = real.eve_channel
    print(f"user channel matrix {h.shape}, per-user norms "
          + ", ".join(f"{np.linalg.norm(h[:, k]):.3e}" for k in range(h.shape[1])))
    print(f"eavesdropper channel {he.shape}, Frobenius norm {np.linalg.norm(he):.3e}")
    print(f"eavesdropper line of sight at {np.rad2deg(real.eve_los_angle):.2f} deg "
          f"(elevation seen from the array)")

    place = NodePlacement(horizontal_distance_m=60.0, altitude_m=cfg.uav_altitude_m)
    print(f"placement at 60 m ground: slant {place.slant_distance_m:.2f} m, "
          f"LoS angle {np.rad2deg(place.los_angle):.2f} deg")


if __name__ == "__main__":
    main()
