//! The 4x4 Hopfield problem of one photon mode coupled to one matter mode,
//! basis `[a_k, d_k, a^dag_-k, d^dag_-k]`, metric `diag(1, 1, -1, -1)`.

use faer::{Mat, Side};

use crate::error::{Error, Result};

pub const METRIC: [f64; 4] = [1.0, 1.0, -1.0, -1.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopfieldMatrix {
    pub entries: [[f64; 4]; 4],
}

/// Builds the matrix in its printed sign pattern.
pub fn hopfield_matrix(omega_tilde: f64, energy: f64, lambda: f64) -> HopfieldMatrix {
    let (w, e, l) = (omega_tilde, energy, lambda);
    HopfieldMatrix {
        entries: [
            [w, -l, 0.0, l],
            [-l, e, l, 0.0],
            [0.0, -l, -w, l],
            [-l, 0.0, l, -e],
        ],
    }
}

impl HopfieldMatrix {
    /// `mu M`, symmetric for every input.
    pub fn metric_product(&self) -> [[f64; 4]; 4] {
        let mut out = self.entries;
        for (r, row) in out.iter_mut().enumerate() {
            for v in row.iter_mut() {
                *v *= METRIC[r];
            }
        }
        out
    }

    /// All four eigenvalues, ascending, from the metric (Colpa) route:
    /// with `mu M = L L^T`, the eigenvalues of `M` are those of `L^T mu L`.
    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        let h = self.metric_product();
        let hm = Mat::<f64>::from_fn(4, 4, |i, j| h[i][j]);
        let llt = hm
            .llt(Side::Lower)
            .map_err(|e| Error::Eigensolver(format!("metric form not positive definite: {e:?}")))?;
        let l = llt.L();
        let k = Mat::<f64>::from_fn(4, 4, |i, j| {
            (0..4).map(|r| l[(r, i)] * METRIC[r] * l[(r, j)]).sum()
        });
        let ev = k
            .self_adjoint_eigenvalues(Side::Lower)
            .map_err(|e| Error::Eigensolver(format!("{e:?}")))?;
        Ok([ev[0], ev[1], ev[2], ev[3]])
    }
}

/// `(w^2 - E^2)^2 + 16 L^2 w E`, square-rooted.
fn delta(w: f64, e: f64, l: f64) -> f64 {
    ((w * w - e * e).powi(2) + 16.0 * l * l * w * e).sqrt()
}

/// Closed-form branch energies `(E-, E+)`.
///
/// `E-` is evaluated as `sqrt(2 det / (w^2 + E^2 + Delta))` with
/// `det = w^2 E^2 - 4 L^2 w E`, algebraically equal to the difference form but
/// free of cancellation when the lower branch is soft.
pub fn closed_form_energies(omega_tilde: f64, energy: f64, lambda: f64) -> Result<(f64, f64)> {
    let (w, e, l) = (omega_tilde, energy, lambda);
    let d = delta(w, e, l);
    let sum = w * w + e * e;
    let upper = (0.5 * (sum + d)).sqrt();
    let mut det = w * w * e * e - 4.0 * l * l * w * e;
    if det < 0.0 {
        if det > -1e-13 * sum * sum {
            det = 0.0;
        } else {
            return Err(Error::ComplexPolariton { k: f64::NAN });
        }
    }
    let lower = if sum + d > 0.0 {
        (2.0 * det / (sum + d)).sqrt()
    } else {
        0.0
    };
    Ok((lower, upper))
}

/// One Hopfield eigenvector `(x, y, w, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HopfieldVector {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub z: f64,
}

impl HopfieldVector {
    pub fn as_array(&self) -> [f64; 4] {
        [self.x, self.y, self.w, self.z]
    }

    /// `x^2 + y^2 - w^2 - z^2`.
    pub fn bosonic_norm(&self) -> f64 {
        self.x * self.x + self.y * self.y - self.w * self.w - self.z * self.z
    }

    /// `u^T mu v`.
    pub fn metric_dot(&self, other: &HopfieldVector) -> f64 {
        self.x * other.x + self.y * other.y - self.w * other.w - self.z * other.z
    }

    /// Same vector with the matter operator rephased `d -> -d`. The printed
    /// components are eigenvectors of the matrix with `Lambda -> -Lambda`;
    /// this gauge turns them into eigenvectors of the printed matrix.
    pub fn matrix_gauge(&self) -> HopfieldVector {
        HopfieldVector {
            x: self.x,
            y: -self.y,
            w: self.w,
            z: -self.z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HopfieldCoefficients {
    pub minus: HopfieldVector,
    pub plus: HopfieldVector,
}

/// `E^2 - E_m^2` for a branch, split so that no catastrophic cancellation
/// occurs: `(w^2 - E^2 +/- Delta)/2`, with the cancelling sign rewritten via
/// `(s + Delta)(s - Delta) = -16 L^2 w E`.
fn branch_gap_sq(w: f64, e: f64, l: f64, upper: bool) -> f64 {
    let s = w * w - e * e;
    let d = delta(w, e, l);
    let sign = if upper { 1.0 } else { -1.0 };
    let direct = s + sign * d;
    let other = s - sign * d;
    if direct.abs() >= other.abs() || other == 0.0 {
        0.5 * direct
    } else {
        0.5 * (-16.0 * l * l * w * e) / other
    }
}

fn branch_vector(w: f64, e: f64, l: f64, ep: f64, upper: bool) -> HopfieldVector {
    let gap_sq = branch_gap_sq(w, e, l, upper);
    let gap = gap_sq / (ep + e);
    let norm = (4.0 * ep * w * (1.0 + 4.0 * l * l * e * w / (gap_sq * gap_sq))).sqrt();
    HopfieldVector {
        x: (w + ep) / norm,
        y: 2.0 * l * w / gap / norm,
        w: -(w - ep) / norm,
        z: 2.0 * l * w / (ep + e) / norm,
    }
}

/// Normalized eigenvector components in the printed form.
///
/// With `Lambda = 0` the formula is 0/0; the decoupled assignment is returned
/// instead (lower branch = the softer bare mode).
pub fn hopfield_coefficients(
    omega_tilde: f64,
    energy: f64,
    lambda: f64,
    energies: (f64, f64),
) -> Result<HopfieldCoefficients> {
    let (w, e, l) = (omega_tilde, energy, lambda);
    let (lo, hi) = energies;
    let scale = w.abs().max(e.abs()).max(1.0);
    if l == 0.0 {
        if (w - e).abs() < 1e-12 * scale {
            return Err(Error::DegenerateBranches { k: f64::NAN });
        }
        let photon = HopfieldVector {
            x: 1.0,
            ..Default::default()
        };
        let matter = HopfieldVector {
            y: 1.0,
            ..Default::default()
        };
        return Ok(if e < w {
            HopfieldCoefficients {
                minus: matter,
                plus: photon,
            }
        } else {
            HopfieldCoefficients {
                minus: photon,
                plus: matter,
            }
        });
    }
    if (hi - lo).abs() < 1e-12 * scale {
        return Err(Error::DegenerateBranches { k: f64::NAN });
    }
    Ok(HopfieldCoefficients {
        minus: branch_vector(w, e, l, lo, false),
        plus: branch_vector(w, e, l, hi, true),
    })
}
