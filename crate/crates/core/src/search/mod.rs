//! Exhaustive search for good colorings of a host.
//!
//! The search fixes host edges one at a time, red or blue, and abandons a
//! branch as soon as the red edges hold `n` disjoint edges (checked by one
//! augmenting-path search per red edge) or a new blue edge `uv` closes a
//! blue `C_L` (checked as a blue `u`-`v` path with `L - 2` interior
//! vertices). Optional lex-leader symmetry breaking and maximal-red
//! dominance shrink the tree without changing the verdict.
//!
//! A run that finishes inside its budgets without reaching a good leaf
//! yields an [`ExhaustionCertificate`]. Runs that hit a budget report
//! [`Verdict::BudgetExceeded`] and never a certificate.

mod cnf;
mod engine;
pub mod strategy;
pub mod symmetry;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use cnf::{decode_model, export_cnf, CnfExport, VariableMap, DEFAULT_CLAUSE_CAP};
pub use strategy::{edge_order_by_name, phase_by_name, EdgeOrder, ValuePhase};
pub use symmetry::{LexLeader, DEFAULT_GENERATOR_CAP};

use crate::construct::verify_good;
use crate::formula::{ramsey_value, RamseyValue};
use crate::host::{Coloring, PartiteShape};
use crate::{Error, Result};

use engine::{Engine, Flow, Problem, Shared};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    #[default]
    None,
    #[serde(alias = "lex_leader")]
    LexLeader,
}

impl std::str::FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Symmetry::None),
            "lex-leader" | "lex_leader" => Ok(Symmetry::LexLeader),
            _ => Err(Error::UnknownStrategy {
                kind: "symmetry mode",
                name: s.into(),
                known: "none, lex-leader".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub node_budget: u64,
    #[serde(with = "secs")]
    pub time_budget: Duration,
    pub symmetry: Symmetry,
    pub generator_cap: usize,
    pub dominance: bool,
    pub edge_order: String,
    pub phase: String,
    /// Before the main run, try short runs phased towards red induced
    /// subhosts of every size. Any of them may find a coloring, and one
    /// that completes inside its small budget is itself an exhaustion.
    pub portfolio: bool,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 2_000_000_000,
            time_budget: Duration::from_secs(600),
            symmetry: Symmetry::None,
            generator_cap: DEFAULT_GENERATOR_CAP,
            dominance: false,
            edge_order: "natural".into(),
            phase: "red-first".into(),
            portfolio: true,
            threads: 1,
        }
    }
}

impl SearchOptions {
    /// Symmetry breaking and dominance on, degree-guided order: the setup
    /// used for the larger certified hosts.
    pub fn pruned() -> Self {
        SearchOptions {
            symmetry: Symmetry::LexLeader,
            dominance: true,
            edge_order: "degree-guided".into(),
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == 0 || self.time_budget.is_zero() {
            return Err(Error::InvalidOptions("budgets must be positive".into()));
        }
        if self.threads == 0 {
            return Err(Error::InvalidOptions("at least one worker thread".into()));
        }
        edge_order_by_name(&self.edge_order)?;
        phase_by_name(&self.phase)?;
        Ok(())
    }
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneCounts {
    pub stripe: u64,
    pub cycle: u64,
    pub dominance: u64,
    pub symmetry: u64,
}

impl PruneCounts {
    pub fn add(&mut self, other: &PruneCounts) {
        self.stripe += other.stripe;
        self.cycle += other.cycle;
        self.dominance += other.dominance;
        self.symmetry += other.symmetry;
    }

    pub fn total(&self) -> u64 {
        self.stripe + self.cycle + self.dominance + self.symmetry
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub prunes_by_reason: PruneCounts,
    pub wall_time_secs: f64,
    /// Phase of the run that produced the verdict.
    pub phase: String,
}

/// Record of a complete search that found no good coloring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExhaustionCertificate {
    pub shape: PartiteShape,
    pub n: usize,
    pub cycle_length: usize,
    pub nodes_explored: u64,
    pub prunes_by_reason: PruneCounts,
    pub wall_time_secs: f64,
    pub options: SearchOptions,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Good { coloring: Coloring, stats: SearchStats },
    Exhausted(ExhaustionCertificate),
    BudgetExceeded(SearchStats),
}

impl Verdict {
    pub fn is_good(&self) -> bool {
        matches!(self, Verdict::Good { .. })
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Verdict::Exhausted(_))
    }

    pub fn good_coloring(&self) -> Option<&Coloring> {
        match self {
            Verdict::Good { coloring, .. } => Some(coloring),
            _ => None,
        }
    }
}

enum RunResult {
    Found(Coloring, Shared),
    Complete(Shared),
    OutOfBudget(Shared),
}

fn build_problem(
    shape: &PartiteShape,
    n: usize,
    cycle_length: usize,
    options: &SearchOptions,
    phase: &dyn ValuePhase,
) -> Result<Problem> {
    let order = edge_order_by_name(&options.edge_order)?.order(shape);
    let red_first = order.iter().map(|&(u, v)| phase.prefers_red(shape, u, v)).collect();
    let lex = match options.symmetry {
        Symmetry::None => None,
        Symmetry::LexLeader => {
            let mut position = vec![usize::MAX; shape.host_edge_count()];
            for (depth, &(u, v)) in order.iter().enumerate() {
                position[shape.edge_index(u, v).expect("host edge")] = depth;
            }
            Some(LexLeader::new(
                shape,
                &order,
                |a, b| position[shape.edge_index(a, b).expect("automorphisms keep host edges")],
                options.generator_cap,
            ))
        }
    };
    Ok(Problem {
        shape: shape.clone(),
        n,
        cycle_length,
        order,
        red_first,
        lex,
        dominance: options.dominance,
    })
}

fn run_problem(problem: &Problem, node_budget: u64, deadline: Instant, threads: usize) -> RunResult {
    let shared = Shared::new(node_budget, Some(deadline));
    if threads <= 1 || problem.order.len() < 8 {
        let mut engine = Engine::new(problem, &shared);
        engine.run();
        engine.flush();
    } else {
        run_parallel(problem, &shared, threads);
    }
    let found = shared.found.lock().expect("poisoned").take();
    match found {
        Some(c) => RunResult::Found(c, shared),
        None if shared.budget_hit.load(std::sync::atomic::Ordering::Relaxed) => {
            RunResult::OutOfBudget(shared)
        }
        None => RunResult::Complete(shared),
    }
}

/// Splits the tree at a fixed depth and hands the surviving prefixes to
/// `threads` workers.
fn run_parallel(problem: &Problem, shared: &Shared, threads: usize) {
    use std::sync::atomic::{AtomicUsize, Ordering};

    let split = problem.order.len().min(10 + threads.ilog2() as usize);
    let mut prefixes = Vec::new();
    {
        let mut engine = Engine::new(problem, shared);
        collect_prefixes(&mut engine, problem, split, &mut prefixes);
        engine.flush();
    }
    if shared.stop.load(Ordering::Relaxed) {
        return;
    }
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut engine = Engine::new(problem, shared);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() || shared.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    for &c in &prefixes[i] {
                        engine.push(c).expect("prefix was feasible when collected");
                    }
                    let flow = engine.run();
                    while engine.depth() > 0 {
                        engine.pop();
                    }
                    if flow == Flow::Stop {
                        break;
                    }
                }
                engine.flush();
            });
        }
    });
}

fn collect_prefixes(engine: &mut Engine, problem: &Problem, split: usize, out: &mut Vec<Vec<u8>>) {
    let depth = engine.depth();
    if depth == split {
        out.push(engine.assignment().to_vec());
        return;
    }
    let first = if problem.red_first[depth] { engine::RED } else { engine::BLUE };
    for color in [first, 1 - first] {
        if engine.push(color).is_ok() {
            collect_prefixes(engine, problem, split, out);
            engine.pop();
        }
    }
}

/// Decides whether the host admits a coloring with no red `nK_2` and no
/// blue `C_L`.
pub fn find_good_coloring(
    shape: &PartiteShape,
    n: usize,
    cycle_length: usize,
    options: &SearchOptions,
) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidOptions("n must be positive".into()));
    }
    if cycle_length < 3 {
        return Err(Error::InvalidOptions("cycle length must be at least 3".into()));
    }
    options.validate()?;
    let start = Instant::now();
    let deadline = start + options.time_budget;
    let mut nodes = 0u64;
    let mut prunes = PruneCounts::default();

    let main_phase = phase_by_name(&options.phase)?;
    let mut attempts: Vec<(Box<dyn ValuePhase>, u64, usize)> = Vec::new();
    if options.portfolio {
        let short = 16 * shape.host_edge_count() as u64 + 256;
        attempts.push((phase_by_name("red-first")?, short, 1));
        for size in (2..shape.total_vertices()).rev() {
            attempts.push((Box::new(strategy::InducedSuffix { size }), short, 1));
        }
    }
    attempts.push((main_phase, options.node_budget, options.threads));

    let last = attempts.len() - 1;
    for (i, (phase, budget, threads)) in attempts.into_iter().enumerate() {
        let budget = budget.min(options.node_budget.saturating_sub(nodes)).max(1);
        let problem = build_problem(shape, n, cycle_length, options, phase.as_ref())?;
        let outcome = run_problem(&problem, budget, deadline, threads);
        let shared = match &outcome {
            RunResult::Found(_, s) | RunResult::Complete(s) | RunResult::OutOfBudget(s) => s,
        };
        nodes += shared.nodes.load(std::sync::atomic::Ordering::Relaxed);
        prunes.add(&shared.prunes.lock().expect("poisoned"));
        let stats = |nodes, prunes| SearchStats {
            nodes_explored: nodes,
            prunes_by_reason: prunes,
            wall_time_secs: start.elapsed().as_secs_f64(),
            phase: phase.name(),
        };
        match outcome {
            RunResult::Found(coloring, _) => {
                let report = verify_good(&coloring, n, cycle_length);
                assert!(report.is_good, "search returned a coloring that is not good: {report:?}");
                return Ok(Verdict::Good { coloring, stats: stats(nodes, prunes) });
            }
            RunResult::Complete(_) => {
                return Ok(Verdict::Exhausted(ExhaustionCertificate {
                    shape: shape.clone(),
                    n,
                    cycle_length,
                    nodes_explored: nodes.max(1),
                    prunes_by_reason: prunes,
                    wall_time_secs: start.elapsed().as_secs_f64(),
                    options: SearchOptions { phase: phase.name(), ..options.clone() },
                }));
            }
            RunResult::OutOfBudget(_) => {
                let out_of_time = Instant::now() >= deadline;
                if i == last || out_of_time || nodes >= options.node_budget {
                    return Ok(Verdict::BudgetExceeded(stats(nodes, prunes)));
                }
            }
        }
    }
    unreachable!("the main run always returns")
}

/// Outcome of trying to certify `m_j(nK_2, C_7) ≤ m` by exhaustion on `K_{j×m}`.
#[derive(Clone, Debug)]
pub enum UpperBound {
    Exhausted(ExhaustionCertificate),
    /// A good coloring exists on `K_{j×m}`: the claimed value is too small.
    Refuted(Coloring),
    Unverified { reason: String, stats: Option<SearchStats> },
}

/// Runs the exhaustive search at `t = m` for the formula value `m`.
/// Hosts with more than `max_host_edges` edges are not attempted.
pub fn certify_upper_bound(
    j: usize,
    n: usize,
    options: &SearchOptions,
    max_host_edges: Option<usize>,
) -> Result<UpperBound> {
    let eval = ramsey_value(j, n)?;
    let m = match eval.value {
        RamseyValue::Infinite => return Err(Error::InfiniteValue),
        RamseyValue::Finite(m) => m,
    };
    let shape = match PartiteShape::uniform(j, m) {
        Ok(s) => s,
        Err(Error::HostTooLarge { vertices, cap }) => {
            return Ok(UpperBound::Unverified {
                reason: format!("K_{{{j}x{m}}} has {vertices} vertices, cap is {cap}"),
                stats: None,
            })
        }
        Err(e) => return Err(e),
    };
    if let Some(cap) = max_host_edges {
        if shape.host_edge_count() > cap {
            return Ok(UpperBound::Unverified {
                reason: format!(
                    "{shape} has {} host edges, above the exhaustive-search cap of {cap}",
                    shape.host_edge_count()
                ),
                stats: None,
            });
        }
    }
    Ok(match find_good_coloring(&shape, n, 7, options)? {
        Verdict::Exhausted(cert) => UpperBound::Exhausted(cert),
        Verdict::Good { coloring, .. } => UpperBound::Refuted(coloring),
        Verdict::BudgetExceeded(stats) => UpperBound::Unverified {
            reason: "search budget exhausted".into(),
            stats: Some(stats),
        },
    })
}
