//! Byte-level regression of the figure recipes. Set `UPDATE_GOLDEN=1` to
//! rewrite the files after an intended change.

use std::fs;
use std::path::PathBuf;

use dicke_ising_sweep::{run, Command, FigureRecipe, PartialConfig, SweepConfig};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn resolve(command: Command, recipe: Option<FigureRecipe>, threads: usize) -> SweepConfig {
    let mut flags = PartialConfig::default();
    flags.recipe = recipe;
    flags.threads = Some(threads);
    SweepConfig::resolve(command, None, flags).unwrap()
}

fn render(recipe: FigureRecipe, threads: usize) -> String {
    let cfg = resolve(recipe.command(), Some(recipe), threads);
    run(&cfg).unwrap().table.to_csv(&cfg)
}

fn compare(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    if expected != actual {
        let line = expected
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .map_or("length".to_string(), |i| format!("line {}", i + 1));
        panic!("{name} differs from the golden file at {line}");
    }
}

#[test]
fn fig4_golden() {
    compare("fig4.csv", &render(FigureRecipe::Fig4, 1));
}

#[test]
fn fig5_golden() {
    compare("fig5.csv", &render(FigureRecipe::Fig5, 1));
}

#[test]
fn column_schemas() {
    let mut out = String::new();
    for recipe in FigureRecipe::ALL {
        let cfg = resolve(recipe.command(), Some(recipe), 1);
        let mut cfg = cfg;
        // schema only; keep the sweeps short
        cfg.chain.n = match recipe {
            FigureRecipe::Fig2a | FigureRecipe::Fig2b => dicke_ising_sweep::SizeAxis::Value(10),
            _ => cfg.chain.n,
        };
        cfg.cavity.k_points = 2;
        let t = run(&cfg).unwrap().table;
        out.push_str(&format!("{}: {}\n", recipe.name(), t.columns.join(",")));
    }
    for command in [Command::FnCorrection, Command::Oracle] {
        let mut cfg = resolve(command, None, 1);
        if command == Command::Oracle {
            cfg.chain.n = dicke_ising_sweep::SizeAxis::Value(4);
            cfg.chain.eta = dicke_ising_sweep::Axis::Value(0.0);
            cfg.oracle.long_chain = 10;
        }
        let t = run(&cfg).unwrap().table;
        out.push_str(&format!("{}: {}\n", command.name(), t.columns.join(",")));
    }
    let mut cfg = resolve(Command::Polaritons, None, 1);
    cfg.cavity.finite_n = true;
    cfg.chain.n = dicke_ising_sweep::SizeAxis::Value(10);
    cfg.schemes = vec!["B".into(), "Bt".into(), "Bc".into()];
    let t = run(&cfg).unwrap().table;
    out.push_str(&format!("polaritons finite_n: {}\n", t.columns.join(",")));
    compare("schemas.txt", &out);
}

#[test]
fn thread_count_does_not_change_rows() {
    for recipe in [FigureRecipe::Fig2b, FigureRecipe::Fig5] {
        let one = resolve(recipe.command(), Some(recipe), 1);
        let four = resolve(recipe.command(), Some(recipe), 4);
        assert_eq!(run(&one).unwrap().table, run(&four).unwrap().table);
        assert_eq!(render(recipe, 3), render(recipe, 3));
    }
}
