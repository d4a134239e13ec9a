//! The five sweep commands. Energies are reported in units of `w0`.

use std::f64::consts::PI;

use dicke_ising::cavity::{
    finite_size_correction, fixed_length_delta, photon_frequency, renormalized_cavity,
    saturation_ratio, saturation_ratio_numeric, CavityParams, PolaritonModel,
};
use dicke_ising::ising::{
    bose_energy, fermion_energy, hp1_coefficients_numeric, hp1_perturbative_energy, Hp1Method,
};
use dicke_ising::oracle::{
    bdg_dense, bdg_reduced, bdg_spin_chain, ed_dicke_ising_with, ed_spin_chain_with, DickeMode,
};
use dicke_ising::{ApproximationTag, ChainParams, Error as ModelError};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

type Rows = Vec<Vec<Cell>>;

/// Chain length used for continuous-`k` curves, which do not depend on it.
const NOMINAL_SITES: usize = 2;

/// Evaluates `f` on every point in parallel; rows keep the point order and
/// the first error in that order wins.
fn par_rows<P, F>(points: &[P], f: F) -> Result<Rows, CliError>
where
    P: Sync,
    F: Fn(&P) -> Result<Rows, CliError> + Sync + Send,
{
    let parts: Vec<Result<Rows, CliError>> = points.par_iter().map(f).collect();
    let mut rows = Vec::new();
    for part in parts {
        rows.extend(part?);
    }
    Ok(rows)
}

fn grid<A: Clone, B: Clone>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn chain(cfg: &SweepConfig, n: usize, eta: f64) -> Result<ChainParams, CliError> {
    ChainParams::new(n, cfg.chain.omega0, eta).map_err(|e| CliError::from_model("chain", e))
}

fn domain(e: ModelError) -> CliError {
    CliError::from_model("parameters", e)
}

fn label(tag: ApproximationTag) -> String {
    tag.label().to_lowercase()
}

pub fn ising_spectrum(cfg: &SweepConfig) -> Result<Table, CliError> {
    let tags = cfg.tags();
    if tags.contains(&ApproximationTag::HolsteinPrimakoff1FullLm) {
        return Err(CliError::validation(
            "schemes",
            "Bc differs from Bt only in the cavity sector; use Bt",
        ));
    }
    let mut columns: Vec<String> = ["n", "eta", "l", "k"].map(String::from).into();
    for tag in &tags {
        match tag {
            ApproximationTag::FermionExact => columns.push("e_f".into()),
            ApproximationTag::Bose => columns.push("e_b".into()),
            _ => columns.extend(["e_bt_pert".into(), "e_bt_num".into()]),
        }
    }
    let points = grid(&cfg.chain.n.values(), &cfg.chain.eta.values());
    let w0 = cfg.chain.omega0;
    let rows = par_rows(&points, |&(n, eta)| {
        let p = chain(cfg, n, eta)?;
        let numeric = if tags.contains(&ApproximationTag::HolsteinPrimakoff1) {
            Some(hp1_coefficients_numeric(&p).map_err(domain)?)
        } else {
            None
        };
        let mut rows = Vec::new();
        for &l in &cfg.chain.modes {
            let k = p.grid().k(l).ok_or_else(|| {
                CliError::validation("chain.modes", format!("mode {l} does not exist for N = {n}"))
            })?;
            let mut row: Vec<Cell> = vec![n.into(), eta.into(), l.into(), k.into()];
            for tag in &tags {
                match tag {
                    ApproximationTag::FermionExact => row.push((fermion_energy(k, &p) / w0).into()),
                    ApproximationTag::Bose => {
                        row.push((bose_energy(k, &p).map_err(domain)? / w0).into())
                    }
                    _ => {
                        let num = numeric.as_ref().expect("solved above");
                        row.push((hp1_perturbative_energy(k, &p) / w0).into());
                        row.push((num.energy_at(k).map_err(domain)? / w0).into());
                    }
                }
            }
            rows.push(row);
        }
        Ok(rows)
    })?;
    Ok(Table { columns, rows })
}

pub fn polaritons(cfg: &SweepConfig) -> Result<Table, CliError> {
    let tags = cfg.tags();
    let finite = cfg.cavity.finite_n;
    if tags.contains(&ApproximationTag::FermionExact) {
        return Err(CliError::validation(
            "schemes",
            "F has no bosonic light-matter coupling; use B, Bt or Bc",
        ));
    }
    if !finite && tags.contains(&ApproximationTag::HolsteinPrimakoff1FullLm) {
        return Err(CliError::validation(
            "schemes",
            "Bc needs a finite chain; set cavity.finite_n = true",
        ));
    }
    if let Some(d) = cfg.cavity.delta.values().into_iter().find(|d| *d <= 1.0) {
        return Err(CliError::validation(
            "cavity.delta",
            format!("must exceed 1 for a crossing to exist, got {d}"),
        ));
    }
    let mut columns: Vec<String> = Vec::new();
    if finite {
        columns.push("n".into());
    }
    columns.extend(
        ["eta", "nu", "delta", "k", "k_over_kc", "omega_k", "omega_tilde"].map(String::from),
    );
    for tag in &tags {
        let l = label(*tag);
        columns.extend([format!("e_lower_{l}"), format!("e_upper_{l}"), format!("e_matter_{l}")]);
    }
    let ns = if finite {
        cfg.chain.n.values()
    } else {
        vec![NOMINAL_SITES]
    };
    let mut points = Vec::new();
    for n in &ns {
        for eta in cfg.chain.eta.values() {
            for nu in cfg.cavity.nu.values() {
                for delta in cfg.cavity.delta.values() {
                    points.push((*n, eta, nu, delta));
                }
            }
        }
    }
    let method = if finite {
        Hp1Method::Numeric
    } else {
        Hp1Method::PerturbativeOrder2
    };
    let w0 = cfg.chain.omega0;
    let rows = par_rows(&points, |&(n, eta, nu, delta)| {
        let p = chain(cfg, n, eta)?;
        let models = tags
            .iter()
            .map(|&tag| {
                let cav = CavityParams::new(p, nu, delta, tag)
                    .map_err(|e| CliError::from_model("cavity", e))?
                    .with_hp1_method(method);
                PolaritonModel::new(cav).map_err(domain)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let anchor = tags
            .iter()
            .position(|t| *t == ApproximationTag::HolsteinPrimakoff1)
            .unwrap_or(0);
        let kc = models[anchor].crossing_point().map_err(domain)?;
        let ks: Vec<f64> = if finite {
            p.grid().ks().collect()
        } else {
            let kmax = (cfg.cavity.k_span * kc).min(PI);
            let m = cfg.cavity.k_points;
            (1..=m).map(|i| kmax * i as f64 / m as f64).collect()
        };
        let cav = &models[0].cavity;
        let mut rows = Vec::with_capacity(ks.len());
        for k in ks {
            let mut row: Vec<Cell> = Vec::new();
            if finite {
                row.push(n.into());
            }
            row.extend([
                eta.into(),
                nu.into(),
                delta.into(),
                k.into(),
                (k / kc).into(),
                (photon_frequency(k, cav) / w0).into(),
                (renormalized_cavity(k, cav).0 / w0).into(),
            ]);
            for m in &models {
                let (lo, hi) = m.polariton_energies(k).map_err(domain)?;
                let e = m.matter.energy(k).map_err(domain)?;
                row.extend([(lo / w0).into(), (hi / w0).into(), (e / w0).into()]);
            }
            rows.push(row);
        }
        Ok(rows)
    })?;
    Ok(Table { columns, rows })
}

pub fn saturation(cfg: &SweepConfig) -> Result<Table, CliError> {
    let etas = cfg.chain.eta.values();
    if let Some(e) = etas.iter().find(|e| **e < 0.0) {
        return Err(CliError::validation(
            "chain.eta",
            format!("saturation is tabulated against |eta| in [0, 0.25], got {e}"),
        ));
    }
    let columns = ["n", "abs_eta", "ratio_second_order", "ratio_numeric"].map(String::from).into();
    let points = grid(&cfg.chain.n.values(), &etas);
    let rows = par_rows(&points, |&(n, eta)| {
        let p = chain(cfg, n, eta)?;
        let numeric = saturation_ratio_numeric(&p).map_err(domain)?;
        Ok(vec![vec![n.into(), eta.into(), saturation_ratio(eta).into(), numeric.into()]])
    })?;
    Ok(Table { columns, rows })
}

pub fn fn_correction(cfg: &SweepConfig) -> Result<Table, CliError> {
    let ns = cfg.chain.n.values();
    if ns.contains(&0) {
        return Err(CliError::validation("chain.n", "must be >= 1"));
    }
    let columns = ["n", "delta", "grid_sum", "closed_form", "relative_difference"]
        .map(String::from)
        .into();
    let points = grid(&ns, &cfg.cavity.delta.values());
    let rows = par_rows(&points, |&(n, delta)| {
        let d = match cfg.correction.reference_n {
            Some(r) => fixed_length_delta(delta, r, n),
            None => delta,
        };
        let f = finite_size_correction(n, d);
        Ok(vec![vec![
            n.into(),
            d.into(),
            f.grid_sum.into(),
            f.closed_form.into(),
            f.relative_difference.into(),
        ]])
    })?;
    Ok(Table { columns, rows })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Hard,
    Soft,
}

struct Check {
    name: &'static str,
    kind: Kind,
    n: usize,
    eta: f64,
    analytic: f64,
    oracle: f64,
    delta: f64,
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn chain_checks(cfg: &SweepConfig, n: usize, eta: f64) -> Result<Vec<Check>, CliError> {
    let p = chain(cfg, n, eta)?;
    let w0 = cfg.chain.omega0;
    let ed = ed_spin_chain_with(&p, cfg.oracle.max_sites, true)
        .map_err(|e| CliError::from_model("chain.n", e))?;
    let bdg = bdg_spin_chain(&p).map_err(domain)?;
    let many = bdg.many_body_spectrum().map_err(domain)?;
    let dense = bdg_dense(&p).map_err(domain)?;
    let reduced = bdg_reduced(&p).map_err(domain)?;
    let band = p
        .grid()
        .ks()
        .map(|k| fermion_energy(k, &p))
        .fold(f64::INFINITY, f64::min);
    let population = ed.ground_vector_observables.as_ref().expect("requested")[n / 2];
    let check = |name, kind, analytic: f64, oracle: f64, delta: f64| Check {
        name,
        kind,
        n,
        eta,
        analytic,
        oracle,
        delta,
    };
    Ok(vec![
        check(
            "ed_vs_bdg_many_body",
            Kind::Hard,
            bdg.ground_energy / w0,
            ed.ground_energy() / w0,
            max_dev(&ed.eigenvalues, &many) / w0,
        ),
        check(
            "bdg_dense_vs_reduced",
            Kind::Hard,
            reduced.energies[0] / w0,
            dense.energies[0] / w0,
            max_dev(&dense.energies, &reduced.energies) / w0,
        ),
        check(
            "ed_gap_vs_band_minimum",
            Kind::Soft,
            band / w0,
            ed.gap() / w0,
            (ed.gap() - band).abs() / w0,
        ),
        check(
            "mid_chain_population",
            Kind::Soft,
            0.5 * eta * eta,
            population,
            (population - 0.5 * eta * eta).abs(),
        ),
    ])
}

fn coupling_checks(cfg: &SweepConfig, eta: f64) -> Result<Vec<Check>, CliError> {
    let w0 = cfg.chain.omega0;
    let o = &cfg.oracle;
    let long = chain(cfg, o.long_chain, eta)?;
    let bdg = bdg_spin_chain(&long).map_err(|e| CliError::from_model("oracle.long_chain", e))?;
    let mut standing: Vec<f64> = long.grid().ks().map(|k| fermion_energy(k, &long)).collect();
    standing.sort_by(f64::total_cmp);
    let mut out = vec![Check {
        name: "bdg_vs_standing_waves",
        kind: Kind::Soft,
        n: o.long_chain,
        eta,
        analytic: standing[0] / w0,
        oracle: bdg.energies[0] / w0,
        delta: max_dev(&bdg.energies, &standing) / w0,
    }];

    let small = chain(cfg, o.dicke_sites, eta)?;
    let (gaps, k, photon) = match ed_dicke_ising_with(
        &small,
        o.dicke_nu,
        o.cutoff,
        DickeMode::resonant(1),
        dicke_ising::oracle::dicke::DEFAULT_DIMENSION_CAP,
        true,
    ) {
        Ok(d) => ((d.lower_gap, d.upper_gap), d.k, d.photon),
        Err(ModelError::CutoffUnconverged { .. }) => {
            let k = small.grid().k(1).expect("N >= 2");
            ((f64::NAN, f64::NAN), k, f64::NAN)
        }
        Err(e) => return Err(CliError::from_model("oracle", e)),
    };
    let analytic = if photon.is_finite() {
        let delta = photon * PI / (w0 * k);
        let cav = CavityParams::new(small, o.dicke_nu, delta, ApproximationTag::HolsteinPrimakoff1)
            .map_err(|e| CliError::from_model("oracle", e))?;
        PolaritonModel::new(cav)
            .and_then(|m| m.polariton_energies(k))
            .map_err(domain)?
    } else {
        (f64::NAN, f64::NAN)
    };
    for (name, a, g) in [
        ("dicke_lower_gap", analytic.0, gaps.0),
        ("dicke_upper_gap", analytic.1, gaps.1),
    ] {
        out.push(Check {
            name,
            kind: Kind::Soft,
            n: o.dicke_sites,
            eta,
            analytic: a / w0,
            oracle: g / w0,
            delta: (g - a).abs() / w0,
        });
    }
    Ok(out)
}

/// Oracle comparison report and the number of failed hard checks.
pub fn oracle(cfg: &SweepConfig) -> Result<(Table, usize), CliError> {
    let ns = cfg.chain.n.values();
    if let Some(n) = ns.iter().find(|n| **n > cfg.oracle.max_sites) {
        return Err(CliError::validation(
            "chain.n",
            format!("{n} exceeds oracle.max_sites = {}", cfg.oracle.max_sites),
        ));
    }
    let etas = cfg.chain.eta.values();
    let mut checks: Vec<Check> = Vec::new();
    let per_chain: Vec<Result<Vec<Check>, CliError>> = grid(&ns, &etas)
        .par_iter()
        .map(|&(n, eta)| chain_checks(cfg, n, eta))
        .collect();
    for c in per_chain {
        checks.extend(c?);
    }
    let per_eta: Vec<Result<Vec<Check>, CliError>> =
        etas.par_iter().map(|&eta| coupling_checks(cfg, eta)).collect();
    for c in per_eta {
        checks.extend(c?);
    }
    let columns = [
        "check", "kind", "n", "eta", "analytic", "oracle", "delta", "tolerance", "pass",
    ]
    .map(String::from)
    .into();
    let mut failed = 0;
    let rows = checks
        .into_iter()
        .map(|c| {
            let tol = match c.kind {
                Kind::Hard => cfg.oracle.tolerance,
                Kind::Soft => cfg.oracle.soft_tolerance,
            };
            let pass = c.delta <= tol;
            if c.kind == Kind::Hard && !pass {
                failed += 1;
            }
            vec![
                c.name.into(),
                (if c.kind == Kind::Hard { "hard" } else { "soft" }).into(),
                c.n.into(),
                c.eta.into(),
                c.analytic.into(),
                c.oracle.into(),
                c.delta.into(),
                tol.into(),
                pass.into(),
            ]
        })
        .collect();
    Ok((Table { columns, rows }, failed))
}
