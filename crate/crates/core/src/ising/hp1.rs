//! First-order Holstein-Primakoff approximation: second-order closed forms
//! and the self-consistent numeric solution of the pairing condition.
//!
//! After normal ordering, every `k'` sum in the quadratic Hamiltonian reduces
//! to four grid averages of the coefficient table,
//!
//! ```text
//! n = <beta^2>, m = <alpha beta>, p = <beta^2 cos k>, q = <alpha beta cos k>,
//! ```
//!
//! so the N pairing equations collapse to a fixed point in these four numbers.
//! Given them, each mode is a plain Bose problem with frequency
//! `w' = w0 - 2J(p+q)` and pair coupling `G_k = J(1 - 2n - m) cos k - J(p+q)`:
//! `E_k = sqrt(w'^2 + 4 G_k w')` and `(alpha + beta)^2 = w' / E_k`.

use faer::linalg::solvers::Solve;
use faer::Mat;

use crate::chain::{ApproximationTag, BogoliubovPair, ChainParams, ModeSpectrum, Statistics};
use crate::error::{Error, Result};
use crate::ising::kernels::{normal_ordered_kernels, normal_ordered_linear};
use crate::numeric::{kahan_sum, KahanSum};

/// Second-order coefficients. `beta` is the printed series,
/// `alpha = sqrt(1 + beta^2)` so the canonical relation holds exactly.
pub fn hp1_coefficients_perturbative(k: f64, eta: f64) -> BogoliubovPair {
    let c = k.cos();
    let beta = -c * eta + (2.0 * c * c - 0.5) * eta * eta;
    BogoliubovPair {
        k,
        alpha: (1.0 + beta * beta).sqrt(),
        beta,
        statistics: Statistics::Bosonic,
    }
}

/// `w0 (1 + 2 eta cos k + 2 eta^2 sin^2 k)`.
pub fn hp1_perturbative_energy(k: f64, params: &ChainParams) -> f64 {
    let eta = params.eta();
    let s = k.sin();
    params.omega0() * (1.0 + 2.0 * eta * k.cos() + 2.0 * eta * eta * s * s)
}

/// Ground energy as printed: `w0 eta^2 sum_k cos k (1 - cos k)`.
///
/// On the Pekar grid this equals `-(N-1)/2 eta^2 w0`, extensive and
/// negative like the other schemes.
pub fn hp1_ground_energy(params: &ChainParams) -> f64 {
    let eta = params.eta();
    let sum = kahan_sum(params.grid().ks().map(|k| {
        let c = k.cos();
        c * (1.0 - c)
    }));
    params.omega0() * eta * eta * sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hp1Method {
    PerturbativeOrder2,
    Numeric,
}

/// Grid averages entering the normal-ordered quadratic Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MeanFields {
    /// `<beta^2>`, the virtual-excitation density.
    pub density: f64,
    /// `<alpha beta>`.
    pub anomalous: f64,
    /// `<beta^2 cos k>`.
    pub density_cos: f64,
    /// `<alpha beta cos k>`.
    pub anomalous_cos: f64,
}

impl MeanFields {
    pub fn from_pairs(pairs: &[BogoliubovPair]) -> Self {
        let mut acc = [KahanSum::new(); 4];
        for p in pairs {
            let c = p.k.cos();
            let bb = p.beta * p.beta;
            let ab = p.alpha * p.beta;
            acc[0].add(bb);
            acc[1].add(ab);
            acc[2].add(bb * c);
            acc[3].add(ab * c);
        }
        let n = pairs.len() as f64;
        MeanFields {
            density: acc[0].value() / n,
            anomalous: acc[1].value() / n,
            density_cos: acc[2].value() / n,
            anomalous_cos: acc[3].value() / n,
        }
    }

    fn to_array(self) -> [f64; 4] {
        [self.density, self.anomalous, self.density_cos, self.anomalous_cos]
    }

    fn from_array(x: [f64; 4]) -> Self {
        MeanFields {
            density: x[0],
            anomalous: x[1],
            density_cos: x[2],
            anomalous_cos: x[3],
        }
    }

    /// `w' = w0 - 2J(p + q)`.
    pub fn renormalized_frequency(&self, params: &ChainParams) -> f64 {
        params.omega0() - 2.0 * params.coupling() * (self.density_cos + self.anomalous_cos)
    }

    /// `G_k = J (1 - 2n - m) cos k - J (p + q)`.
    pub fn pair_coupling(&self, k: f64, params: &ChainParams) -> f64 {
        let j = params.coupling();
        j * (1.0 - 2.0 * self.density - self.anomalous) * k.cos()
            - j * (self.density_cos + self.anomalous_cos)
    }

    /// Mode energy and the pair that diagonalizes the quadratic form at `k`.
    pub fn mode(&self, k: f64, params: &ChainParams) -> Result<(f64, BogoliubovPair)> {
        let wp = self.renormalized_frequency(params);
        let g = self.pair_coupling(k, params);
        let radicand = wp * wp + 4.0 * g * wp;
        if !(wp > 0.0) || !(radicand > 0.0) {
            return Err(Error::ComplexEnergy { k, radicand });
        }
        let e = radicand.sqrt();
        let u = (wp / e).sqrt();
        let pair = BogoliubovPair {
            k,
            alpha: 0.5 * (u + 1.0 / u),
            beta: 0.5 * (u - 1.0 / u),
            statistics: Statistics::Bosonic,
        };
        Ok((e, pair))
    }
}

/// Pairing-coefficient residual per mode, in units of `w0`, for a given table.
pub fn offdiagonal_residuals(pairs: &[BogoliubovPair], params: &ChainParams) -> Vec<f64> {
    let mf = MeanFields::from_pairs(pairs);
    let wp = mf.renormalized_frequency(params);
    pairs
        .iter()
        .map(|p| {
            let s = p.alpha + p.beta;
            (wp * p.alpha * p.beta + mf.pair_coupling(p.k, params) * s * s) / params.omega0()
        })
        .collect()
}

/// Same residual evaluated term by term as `B_k - (J/2)(1/N) sum_k' g(k,k')`.
/// Quadratic in N; used to cross-check the mean-field reduction.
pub fn offdiagonal_residuals_by_kernels(
    pairs: &[BogoliubovPair],
    params: &ChainParams,
) -> Vec<f64> {
    let n = pairs.len() as f64;
    let j = params.coupling();
    pairs
        .iter()
        .map(|p| {
            let (_, b) = normal_ordered_linear(p, params);
            let g = kahan_sum(pairs.iter().map(|q| normal_ordered_kernels(p, q).1));
            (b - 0.5 * j * g / n) / params.omega0()
        })
        .collect()
}

/// Diagonal coefficient `A_k - (J/2)(1/N) sum_k' f(k,k')`, term by term.
pub fn diagonal_by_kernels(pairs: &[BogoliubovPair], params: &ChainParams) -> Vec<f64> {
    let n = pairs.len() as f64;
    let j = params.coupling();
    pairs
        .iter()
        .map(|p| {
            let (a, _) = normal_ordered_linear(p, params);
            let f = kahan_sum(pairs.iter().map(|q| normal_ordered_kernels(p, q).0));
            a - 0.5 * j * f / n
        })
        .collect()
}

fn max_abs(xs: &[f64]) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hp1Solution {
    pub params: ChainParams,
    pub pairs: Vec<BogoliubovPair>,
    pub method: Hp1Method,
    /// Max over the grid of the pairing residual, in units of `w0`.
    pub residual_norm: f64,
    pub iterations: usize,
    pub mean_fields: MeanFields,
}

impl Hp1Solution {
    /// Single-particle energy at arbitrary `k`.
    pub fn energy_at(&self, k: f64) -> Result<f64> {
        match self.method {
            Hp1Method::PerturbativeOrder2 => Ok(hp1_perturbative_energy(k, &self.params)),
            Hp1Method::Numeric => self.mean_fields.mode(k, &self.params).map(|(e, _)| e),
        }
    }

    /// Coefficients at arbitrary `k`.
    pub fn pair_at(&self, k: f64) -> Result<BogoliubovPair> {
        match self.method {
            Hp1Method::PerturbativeOrder2 => Ok(hp1_coefficients_perturbative(k, self.params.eta())),
            Hp1Method::Numeric => self.mean_fields.mode(k, &self.params).map(|(_, p)| p),
        }
    }

    pub fn energies(&self) -> Result<Vec<f64>> {
        self.pairs.iter().map(|p| self.energy_at(p.k)).collect()
    }

    /// Ground energy of the normal-ordered theory,
    /// `sum_k [w0 beta^2 + 2 J cos k beta (alpha + beta)(1 - 2n - m)]`.
    pub fn normal_ordered_ground_energy(&self) -> f64 {
        let mf = MeanFields::from_pairs(&self.pairs);
        let w0 = self.params.omega0();
        let j = self.params.coupling();
        let factor = 1.0 - 2.0 * mf.density - mf.anomalous;
        kahan_sum(self.pairs.iter().map(|p| {
            w0 * p.beta * p.beta + 2.0 * j * p.k.cos() * p.beta * (p.alpha + p.beta) * factor
        }))
    }

    /// Printed closed form for the perturbative method, normal-ordered sum otherwise.
    pub fn ground_energy(&self) -> f64 {
        match self.method {
            Hp1Method::PerturbativeOrder2 => hp1_ground_energy(&self.params),
            Hp1Method::Numeric => self.normal_ordered_ground_energy(),
        }
    }

    pub fn spectrum(&self) -> ModeSpectrum {
        let energies = match self.method {
            Hp1Method::PerturbativeOrder2 => self
                .pairs
                .iter()
                .map(|p| hp1_perturbative_energy(p.k, &self.params))
                .collect(),
            // Mode energies were already evaluated once during the solve.
            Hp1Method::Numeric => self
                .energies()
                .expect("converged solution has real energies"),
        };
        ModeSpectrum {
            tag: ApproximationTag::HolsteinPrimakoff1,
            params: self.params,
            energies,
            ground_energy: self.ground_energy(),
        }
    }
}

/// Perturbative table on the grid, with its pairing residual.
pub fn hp1_solution_perturbative(params: &ChainParams) -> Hp1Solution {
    let pairs: Vec<_> = params
        .grid()
        .ks()
        .map(|k| hp1_coefficients_perturbative(k, params.eta()))
        .collect();
    let residual_norm = max_abs(&offdiagonal_residuals(&pairs, params));
    Hp1Solution {
        params: *params,
        mean_fields: MeanFields::from_pairs(&pairs),
        pairs,
        method: Hp1Method::PerturbativeOrder2,
        residual_norm,
        iterations: 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Step-shrink factor for the Newton line search and relaxation weight
    /// of the fixed-point fallback.
    pub damping: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tolerance: 1e-10,
            max_iterations: 200,
            damping: 0.5,
        }
    }
}

pub fn hp1_coefficients_numeric(params: &ChainParams) -> Result<Hp1Solution> {
    hp1_coefficients_numeric_with(params, SolverOptions::default())
}

struct Problem<'a> {
    params: &'a ChainParams,
    ks: Vec<f64>,
}

impl Problem<'_> {
    fn table(&self, x: [f64; 4]) -> Result<Vec<BogoliubovPair>> {
        let mf = MeanFields::from_array(x);
        self.ks
            .iter()
            .map(|&k| mf.mode(k, self.params).map(|(_, p)| p))
            .collect()
    }

    /// `Phi(x) - x`, where `Phi` re-averages the table built from `x`.
    fn defect(&self, x: [f64; 4]) -> Result<[f64; 4]> {
        let y = MeanFields::from_pairs(&self.table(x)?).to_array();
        Ok([y[0] - x[0], y[1] - x[1], y[2] - x[2], y[3] - x[3]])
    }

    fn residual(&self, x: [f64; 4]) -> Result<(f64, Vec<BogoliubovPair>)> {
        let pairs = self.table(x)?;
        Ok((max_abs(&offdiagonal_residuals(&pairs, self.params)), pairs))
    }

    fn newton_step(&self, x: [f64; 4], fx: [f64; 4]) -> Option<[f64; 4]> {
        let mut jac = Mat::<f64>::zeros(4, 4);
        for c in 0..4 {
            let h = 1e-7 * x[c].abs().max(1e-3);
            let mut xp = x;
            let mut xm = x;
            xp[c] += h;
            xm[c] -= h;
            let fp = self.defect(xp).ok()?;
            let fm = self.defect(xm).ok()?;
            for r in 0..4 {
                jac[(r, c)] = (fp[r] - fm[r]) / (2.0 * h);
            }
        }
        let rhs = Mat::<f64>::from_fn(4, 1, |r, _| -fx[r]);
        let step = jac.partial_piv_lu().solve(&rhs);
        let s = [step[(0, 0)], step[(1, 0)], step[(2, 0)], step[(3, 0)]];
        s.iter().all(|v| v.is_finite()).then_some(s)
    }
}

fn norm(v: [f64; 4]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Solves the pairing condition on the Pekar grid by Newton iteration on the
/// four mean fields, seeded from the second-order table. Each trial step is
/// shrunk by `damping` until the defect decreases; if that fails, a relaxed
/// fixed-point step is taken instead.
pub fn hp1_coefficients_numeric_with(
    params: &ChainParams,
    opts: SolverOptions,
) -> Result<Hp1Solution> {
    let prob = Problem {
        params,
        ks: params.grid().ks().collect(),
    };
    let seed: Vec<_> = prob
        .ks
        .iter()
        .map(|&k| hp1_coefficients_perturbative(k, params.eta()))
        .collect();
    let mut x = MeanFields::from_pairs(&seed).to_array();
    let (mut res, mut pairs) = prob.residual(x)?;
    let mut iterations = 0;
    while res > opts.tolerance {
        if iterations >= opts.max_iterations {
            return Err(Error::NoConvergence {
                iterations,
                residual: res,
            });
        }
        iterations += 1;
        let fx = prob.defect(x)?;
        let f0 = norm(fx);
        let mut next = None;
        if let Some(step) = prob.newton_step(x, fx) {
            let mut lambda = 1.0;
            while lambda > 1e-4 {
                let trial = [
                    x[0] + lambda * step[0],
                    x[1] + lambda * step[1],
                    x[2] + lambda * step[2],
                    x[3] + lambda * step[3],
                ];
                if let Ok(ft) = prob.defect(trial) {
                    if norm(ft) < f0 {
                        next = Some(trial);
                        break;
                    }
                }
                lambda *= opts.damping;
            }
        }
        x = match next {
            Some(t) => t,
            None => {
                let w = opts.damping;
                [
                    x[0] + w * fx[0],
                    x[1] + w * fx[1],
                    x[2] + w * fx[2],
                    x[3] + w * fx[3],
                ]
            }
        };
        (res, pairs) = prob.residual(x)?;
    }
    Ok(Hp1Solution {
        params: *params,
        mean_fields: MeanFields::from_array(x),
        pairs,
        method: Hp1Method::Numeric,
        residual_norm: res,
        iterations,
    })
}

/// Energy of mode `k` under a solution computed for `params`.
pub fn hp1_energy(k: f64, params: &ChainParams, solution: &Hp1Solution) -> Result<f64> {
    if solution.params != *params {
        return Err(Error::ParamsMismatch);
    }
    solution.energy_at(k)
}
