use std::time::Instant;

use anyhow::Context;
use plmc_core::algos::Algorithm;
use plmc_core::generator::generate_with_budget;
use plmc_core::plg::PowerLawParams;

use crate::cli::{BenchArgs, SolverArgs};
use crate::commands::{emit, run_algorithm};
use crate::table::{Cell, Table};
use crate::values::{floats, integers};

pub const BENCH_COLUMNS: [&str; 9] = [
    "alpha", "beta", "seed", "algorithm", "vertices", "edges", "value", "ub", "wall_ms",
];

struct Row {
    alpha: f64,
    beta: f64,
    seed: u64,
    algorithm: Algorithm,
    vertices: usize,
    edges: u64,
    value: u64,
    ub: Option<f64>,
    wall_ms: f64,
}

pub fn bench(a: BenchArgs) -> anyhow::Result<()> {
    let alphas = floats(&a.alpha)?;
    let betas = floats(&a.beta)?;
    let seeds = integers(&a.seeds)?;
    let algos = a
        .algos
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Algorithm>().with_context(|| format!("--algos: `{s}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for &alpha in &alphas {
        for &beta in &betas {
            let p = PowerLawParams::new(alpha, beta)?;
            for &seed in &seeds {
                let (g, _) = generate_with_budget(&p, seed, a.copy_budget)
                    .with_context(|| format!("instance alpha={alpha} beta={beta} seed={seed}"))?;
                let solver = SolverArgs {
                    seed,
                    restarts: a.restarts,
                    eps: a.eps,
                    oracle_limit: a.oracle_limit,
                };
                for &algo in &algos {
                    let start = Instant::now();
                    let r = run_algorithm(&g, algo, &solver, Some(&p), None)
                        .with_context(|| format!("{algo} on alpha={alpha} beta={beta} seed={seed}"))?;
                    rows.push(Row {
                        alpha,
                        beta,
                        seed,
                        algorithm: algo,
                        vertices: g.vertex_count(),
                        edges: g.total_multiplicity(),
                        value: r.value,
                        ub: r.upper_bound(),
                        wall_ms: start.elapsed().as_secs_f64() * 1e3,
                    });
                }
            }
        }
    }
    rows.sort_by(|x, y| {
        x.alpha
            .total_cmp(&y.alpha)
            .then(x.beta.total_cmp(&y.beta))
            .then(x.seed.cmp(&y.seed))
            .then(x.algorithm.name().cmp(y.algorithm.name()))
    });
    let mut t = Table::new(&BENCH_COLUMNS);
    for r in rows {
        t.push(vec![
            r.alpha.into(),
            r.beta.into(),
            r.seed.into(),
            r.algorithm.name().into(),
            r.vertices.into(),
            r.edges.into(),
            r.value.into(),
            Cell::from(r.ub),
            r.wall_ms.into(),
        ]);
    }
    emit(&t.render(a.out.format)?, a.out.out.as_deref())
}
