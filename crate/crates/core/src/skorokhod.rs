//! Skorokhod problem solver for occupancy dynamics.
//!
//! The domain constrains every coordinate to stay at or below a cap (1 for
//! occupancy fractions). Given a free path psi, the solver produces a
//! constrained path phi and nondecreasing reflection terms eta with
//!
//! ```text
//! phi_1 = psi_1 - eta_1,      phi_k = psi_k + eta_{k-1} - eta_k  (k >= 2),
//! ```
//!
//! eta_k starting at 0 and increasing only while phi_k sits on the cap.
//! Mass pushed off the cap at level k reappears in level k+1: the reflection
//! cascades downward, which is exactly how arrivals to fully occupied levels
//! spill into longer queues.
//!
//! The solution is built coordinate by coordinate: coordinate k solves a
//! one-dimensional problem for `psi_k + eta_{k-1}`, and the one-dimensional
//! problem has the classical running-maximum closed form. The construction
//! is exact on the mesh and consistent under truncation: solving the first
//! m coordinates alone gives the first m coordinates of any larger solve.

use crate::error::{Error, Result};
use crate::path::GridPath;

/// Constrained path and reflection terms returned by [`solve_sp`].
#[derive(Debug, Clone)]
pub struct SPSolution {
    /// Constrained path, every value at or below the cap.
    pub phi: GridPath,
    /// Per-coordinate reflection terms, nondecreasing from 0.
    pub eta: GridPath,
}

/// Solves the one-dimensional Skorokhod problem on a mesh.
///
/// Returns `(phi, eta)` with `eta[t] = max_{s<=t} (psi[s] - cap)^+` and
/// `phi = psi - eta`, so `phi <= cap` everywhere and `eta` is nondecreasing
/// with `eta[0] = 0`. The running maximum is exact in one pass; no iterative
/// projection is involved.
pub fn reflect_1d(psi: &[f64], cap: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if psi.is_empty() {
        return Err(Error::InvalidPath("empty time mesh".into()));
    }
    if psi[0] > cap {
        return Err(Error::InitialAboveCap {
            coord: 1,
            value: psi[0],
            cap,
        });
    }
    let mut phi = Vec::with_capacity(psi.len());
    let mut eta = Vec::with_capacity(psi.len());
    let mut running = 0.0f64;
    for &value in psi {
        let excess = value - cap;
        if excess > running {
            running = excess;
        }
        eta.push(running);
        phi.push(value - running);
    }
    Ok((phi, eta))
}

/// Solves the multi-coordinate Skorokhod problem for occupancy fractions
/// (cap 1 on every coordinate).
pub fn solve_sp(psi: &GridPath) -> Result<SPSolution> {
    solve_sp_capped(psi, 1.0)
}

/// [`solve_sp`] with an explicit per-coordinate cap. Simulated paths are
/// kept in units of 1/n, where the cap is the server count and all
/// arithmetic stays on integers, making the solve bit-exact.
pub fn solve_sp_capped(psi: &GridPath, cap: f64) -> Result<SPSolution> {
    let len = psi.len();
    let mut phi_rows = Vec::with_capacity(psi.coords());
    let mut eta_rows = Vec::with_capacity(psi.coords());
    let mut eta_prev: Vec<f64> = vec![0.0; len];
    for k in 1..=psi.coords() {
        let input: Vec<f64> = psi
            .coord(k)
            .iter()
            .zip(&eta_prev)
            .map(|(p, e)| p + e)
            .collect();
        let (phi_k, eta_k) = reflect_1d(&input, cap).map_err(|e| match e {
            Error::InitialAboveCap { value, cap, .. } => {
                Error::InitialAboveCap { coord: k, value, cap }
            }
            other => other,
        })?;
        phi_rows.push(phi_k);
        eta_prev.clone_from(&eta_k);
        eta_rows.push(eta_k);
    }
    Ok(SPSolution {
        phi: GridPath::from_parts_unchecked(psi.times().to_vec(), phi_rows),
        eta: GridPath::from_parts_unchecked(psi.times().to_vec(), eta_rows),
    })
}

/// Weighted uniform distance between two paths on the same mesh:
/// `sum_k 2^{-k} * max_t |a_k(t) - b_k(t)|`.
///
/// Coordinates present in only one of the paths carry no weight. Meshes must
/// agree exactly; nothing is resampled.
pub fn sup_distance(a: &GridPath, b: &GridPath) -> Result<f64> {
    if a.times() != b.times() {
        return Err(Error::MeshMismatch(format!(
            "paths have {} and {} mesh points (or differing times)",
            a.len(),
            b.len()
        )));
    }
    let shared = a.coords().min(b.coords());
    let mut total = 0.0;
    for k in 1..=shared {
        let gap = a
            .coord(k)
            .iter()
            .zip(b.coord(k))
            .map(|(x, y)| (x - y).abs())
            .fold(0.0f64, f64::max);
        total += gap / 2.0f64.powi(k as i32);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_mesh(points: usize) -> Vec<f64> {
        (0..points).map(|i| i as f64 / (points - 1) as f64).collect()
    }

    /// Independent oracle: double-loop running maximum.
    fn brute_force_reflect(psi: &[f64], cap: f64) -> (Vec<f64>, Vec<f64>) {
        let eta: Vec<f64> = (0..psi.len())
            .map(|t| {
                (0..=t)
                    .map(|s| (psi[s] - cap).max(0.0))
                    .fold(0.0f64, f64::max)
            })
            .collect();
        let phi = psi.iter().zip(&eta).map(|(p, e)| p - e).collect();
        (phi, eta)
    }

    #[test]
    fn constant_interior_path_is_untouched() {
        let psi = vec![0.5; 11];
        let (phi, eta) = reflect_1d(&psi, 1.0).unwrap();
        assert_eq!(phi, psi);
        assert!(eta.iter().all(|&e| e == 0.0));
    }

    #[test]
    fn ramp_matches_running_max_oracle() {
        let times = uniform_mesh(101);
        let psi: Vec<f64> = times.iter().map(|t| 0.8 + t).collect();
        let (phi, eta) = reflect_1d(&psi, 1.0).unwrap();
        let (phi_oracle, eta_oracle) = brute_force_reflect(&psi, 1.0);
        assert_eq!(phi, phi_oracle);
        assert_eq!(eta, eta_oracle);
        // Closed form: phi(t) = min(0.8 + t, 1), eta(t) = (t - 0.2)^+.
        for (i, &t) in times.iter().enumerate() {
            assert!((phi[i] - (0.8 + t).min(1.0)).abs() < 1e-12);
            assert!((eta[i] - (t - 0.2).max(0.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn boundary_without_overshoot_leaves_eta_zero() {
        let psi = vec![1.0; 20];
        let (phi, eta) = reflect_1d(&psi, 1.0).unwrap();
        assert!(phi.iter().all(|&v| v == 1.0));
        assert!(eta.iter().all(|&e| e == 0.0));
    }

    #[test]
    fn rejects_initial_point_above_cap() {
        let err = reflect_1d(&[1.2, 0.5], 1.0).unwrap_err();
        assert!(matches!(err, Error::InitialAboveCap { value, .. } if value == 1.2));
    }

    #[test]
    fn rejects_empty_mesh() {
        assert!(reflect_1d(&[], 1.0).is_err());
    }

    #[test]
    fn two_coordinate_cascade_matches_sequential_oracle() {
        let times = uniform_mesh(201);
        let psi1: Vec<f64> = times.iter().map(|t| 0.8 + t).collect();
        let psi2 = vec![0.5; times.len()];
        let psi = GridPath::new(times.clone(), vec![psi1.clone(), psi2.clone()]).unwrap();
        let sol = solve_sp(&psi).unwrap();

        // Sequential brute force: reflect coordinate 1, feed its eta into 2.
        let (phi1, eta1) = brute_force_reflect(&psi1, 1.0);
        let input2: Vec<f64> = psi2.iter().zip(&eta1).map(|(p, e)| p + e).collect();
        let (phi2, eta2) = brute_force_reflect(&input2, 1.0);
        assert_eq!(sol.phi.coord(1), &phi1[..]);
        assert_eq!(sol.phi.coord(2), &phi2[..]);
        assert_eq!(sol.eta.coord(1), &eta1[..]);
        assert_eq!(sol.eta.coord(2), &eta2[..]);

        // Closed forms on this instance.
        for (i, &t) in times.iter().enumerate() {
            let e1 = (t - 0.2f64).max(0.0);
            let e2 = (t - 0.7f64).max(0.0);
            assert!((sol.eta.coord(1)[i] - e1).abs() < 1e-12);
            assert!((sol.phi.coord(2)[i] - (0.5 + e1).min(1.0)).abs() < 1e-12);
            assert!((sol.eta.coord(2)[i] - e2).abs() < 1e-12);
        }
    }

    #[test]
    fn interior_paths_pass_through() {
        let times = uniform_mesh(50);
        let rows: Vec<Vec<f64>> = (1..=3)
            .map(|k| times.iter().map(|t| 0.9 - 0.1 * k as f64 * t).collect())
            .collect();
        let psi = GridPath::new(times, rows).unwrap();
        let sol = solve_sp(&psi).unwrap();
        assert_eq!(sol.phi, psi);
        for k in 1..=3 {
            assert!(sol.eta.coord(k).iter().all(|&e| e == 0.0));
        }
    }

    #[test]
    fn error_reports_offending_coordinate() {
        let times = vec![0.0, 1.0];
        let psi = GridPath::new(times, vec![vec![0.5, 0.5], vec![1.5, 0.5]]).unwrap();
        let err = solve_sp(&psi).unwrap_err();
        assert!(matches!(err, Error::InitialAboveCap { coord: 2, .. }));
    }

    #[test]
    fn sup_distance_identity_is_zero() {
        let times = uniform_mesh(10);
        let p = GridPath::new(times, vec![vec![0.3; 10], vec![0.1; 10]]).unwrap();
        assert_eq!(sup_distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn sup_distance_single_coordinate_weight() {
        let times = vec![0.0, 1.0];
        let a = GridPath::new(times.clone(), vec![vec![0.5, 0.5]]).unwrap();
        let b = GridPath::new(times, vec![vec![0.9, 0.9]]).unwrap();
        assert_eq!(sup_distance(&a, &b).unwrap(), 0.2);
    }

    #[test]
    fn sup_distance_matches_direct_summation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let times = uniform_mesh(40);
        for _ in 0..50 {
            let m = rng.random_range(1..=6);
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Vec<f64>> {
                (0..m)
                    .map(|_| (0..40).map(|_| rng.random_range(-1.0..1.0)).collect())
                    .collect()
            };
            let a = GridPath::new(times.clone(), mk(&mut rng)).unwrap();
            let b = GridPath::new(times.clone(), mk(&mut rng)).unwrap();
            let mut expected = 0.0;
            for k in 1..=m {
                let mut gap = 0.0f64;
                for i in 0..40 {
                    gap = gap.max((a.coord(k)[i] - b.coord(k)[i]).abs());
                }
                expected += gap / 2.0f64.powi(k as i32);
            }
            assert!((sup_distance(&a, &b).unwrap() - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn sup_distance_rejects_mesh_mismatch() {
        let a = GridPath::new(vec![0.0, 1.0], vec![vec![0.0, 0.0]]).unwrap();
        let b = GridPath::new(vec![0.0, 2.0], vec![vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            sup_distance(&a, &b),
            Err(Error::MeshMismatch(_))
        ));
    }

    #[test]
    fn extra_coordinates_carry_no_weight() {
        let times = vec![0.0, 1.0];
        let a = GridPath::new(times.clone(), vec![vec![0.5, 0.5], vec![0.0, 0.4]]).unwrap();
        let b = GridPath::new(times, vec![vec![0.5, 0.5]]).unwrap();
        assert_eq!(sup_distance(&a, &b).unwrap(), 0.0);
    }
}
