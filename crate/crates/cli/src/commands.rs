use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use proprep_core::generate::{
    random_cubic_vertex_cover, random_election, random_hitting_set, random_prefix_approval, random_rx3c,
    random_single_peaked, seeded,
};
use proprep_core::hardness::{gen_hs_approval, gen_hs_borda, gen_rx3c_monroe, gen_vc_minimax, HittingSetInstance, RX3CInstance};
use proprep_core::solve::check_applicable;
use proprep_core::solution::verify_solution_with;
use proprep_core::{
    applicable_solvers, auto_solver, decide, detect_axis, optimize, Error, MisrepSpec, Mode, Objective, ProblemInstance,
    Rule, Solution, Solver, SolverBudget,
};

use crate::error::CliError;
use crate::format::{parse_instance, render_instance};
use crate::record::ResultRecord;

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, ..Default::default() }
    }
}

pub fn read_instance(path: &Path) -> Result<ProblemInstance, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance(&text).map_err(|e| e.in_file(path))
}

/// Budget caps plus an optional wall-clock limit that starts when a solver
/// is launched.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub budget: SolverBudget,
    pub time_limit: Option<Duration>,
}

impl Limits {
    fn start(&self) -> SolverBudget {
        match self.time_limit {
            Some(t) => self.budget.with_time_limit(t),
            None => self.budget,
        }
    }
}

/// Header values that override the file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub rule: Option<Rule>,
    pub objective: Option<Objective>,
    pub k: Option<usize>,
    pub bound: Option<u64>,
}

impl Overrides {
    pub fn apply(&self, inst: ProblemInstance) -> Result<ProblemInstance, CliError> {
        Ok(ProblemInstance::new(
            inst.election,
            inst.matrix,
            self.rule.unwrap_or(inst.rule),
            self.objective.unwrap_or(inst.objective),
            self.k.unwrap_or(inst.k),
            self.bound.unwrap_or(inst.bound),
        )?)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// `None` means auto.
    pub solver: Option<Solver>,
    pub mode: Mode,
    pub overrides: Overrides,
    pub limits: Limits,
    pub timing: bool,
}

pub fn cmd_solve(path: &Path, opts: &SolveOptions) -> Result<Output, CliError> {
    let inst = opts.overrides.apply(read_instance(path)?)?;
    let budget = opts.limits.start();
    let solver = match opts.solver {
        Some(s) => {
            check_applicable(&inst, s, opts.mode)?;
            s
        }
        None => auto_solver(&inst, opts.mode, &budget),
    };
    let t = Instant::now();
    let (status, bound, sol) = match opts.mode {
        Mode::Optimize => ("optimal", None, Some(optimize(&inst, solver, &budget)?)),
        Mode::Decide => match decide(&inst, solver, &budget)? {
            Some(s) => ("feasible", Some(inst.bound), Some(s)),
            None => ("infeasible", Some(inst.bound), None),
        },
    };
    let ms = t.elapsed().as_secs_f64() * 1e3;

    let mut rec = ResultRecord::new(&inst, solver.name(), status, bound, sol.as_ref());
    if opts.timing {
        rec.wall_ms = Some(ms);
    }
    Ok(Output {
        stdout: rec.to_toml(),
        stderr: vec![format!("{solver}: {ms:.3} ms")],
        code: if sol.is_some() { 0 } else { 1 },
    })
}

pub fn cmd_detect_axis(path: &Path) -> Result<Output, CliError> {
    let inst = read_instance(path)?;
    let e = &inst.election;
    let line = match detect_axis(e) {
        Some(axis) => axis.order().iter().map(|&c| e.name(c)).collect::<Vec<_>>().join(" "),
        None => "not single-peaked".to_string(),
    };
    Ok(Output::ok(line + "\n"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    SinglePeaked,
    HsApproval,
    HsBorda,
    VcMinimax,
    Rx3cMonroe,
}

#[derive(Debug, Clone, Default)]
pub struct GenOptions {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub bound: Option<u64>,
    pub rule: Option<Rule>,
    pub objective: Option<Objective>,
    /// Random prefix approval instead of Borda, for the random families.
    pub approval: bool,
    /// Explicit set family for the hardness families, e.g. `1,2;2,3`.
    pub sets: Option<String>,
    pub seed: u64,
}

fn parse_sets(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';')
        .map(|set| {
            set.split(',')
                .map(|x| match x.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(CliError::Usage(format!("bad set element '{x}' (elements are 1-based integers)"))),
                })
                .collect()
        })
        .collect()
}

fn universe_of(sets: &[Vec<usize>], m: Option<usize>) -> usize {
    let max = sets.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
    m.unwrap_or(max).max(max)
}

pub fn generate(family: Family, o: &GenOptions) -> Result<ProblemInstance, CliError> {
    let mut rng = seeded(o.seed);
    let rule = o.rule.unwrap_or(Rule::Cc);
    let objective = o.objective.unwrap_or(Objective::Sum);
    let hs = |rng: &mut _, default_k: usize| -> Result<HittingSetInstance, CliError> {
        let k = o.k.unwrap_or(default_k);
        Ok(match &o.sets {
            Some(s) => {
                let sets = parse_sets(s)?;
                HittingSetInstance::new(universe_of(&sets, o.m), sets, k)?
            }
            None if family == Family::VcMinimax => {
                random_cubic_vertex_cover(o.m.unwrap_or(6), o.n.unwrap_or(6), k, rng)?
            }
            None => random_hitting_set(o.m.unwrap_or(4), o.n.unwrap_or(3), k, rng)?,
        })
    };
    let inst = match family {
        Family::Random | Family::SinglePeaked => {
            let (n, m) = (o.n.unwrap_or(6), o.m.unwrap_or(5));
            let e = if family == Family::Random {
                random_election(n, m, &mut rng)?
            } else {
                random_single_peaked(n, m, &mut rng)?.0
            };
            let spec = if o.approval {
                random_prefix_approval(&e, &mut rng)
            } else {
                MisrepSpec::Borda
            };
            let k = o.k.unwrap_or(2.min(n).min(m));
            ProblemInstance::from_spec(e, &spec, rule, objective, k, o.bound.unwrap_or(0))?
        }
        Family::HsApproval => gen_hs_approval(&hs(&mut rng, 1)?, rule, objective)?,
        Family::HsBorda => gen_hs_borda(&hs(&mut rng, 1)?, rule, objective)?,
        Family::VcMinimax => gen_vc_minimax(&hs(&mut rng, 3)?, rule, o.bound.unwrap_or(1))?,
        Family::Rx3cMonroe => {
            let x = match &o.sets {
                Some(s) => {
                    let sets = parse_sets(s)?;
                    let triples = sets
                        .iter()
                        .map(|t| {
                            <[usize; 3]>::try_from(t.as_slice())
                                .map_err(|_| CliError::Usage("rx3c sets must be triples".into()))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    RX3CInstance::new(universe_of(&sets, o.n), triples)?
                }
                None => random_rx3c(o.n.unwrap_or(6), &mut rng)?,
            };
            gen_rx3c_monroe(&x)?.0
        }
    };
    Ok(inst)
}

pub fn cmd_gen(family: Family, opts: &GenOptions, out: Option<&Path>) -> Result<Output, CliError> {
    let text = render_instance(&generate(family, opts)?)?;
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            Ok(Output::default())
        }
        None => Ok(Output::ok(text)),
    }
}

/// Checks a result record against an instance. The record's rule,
/// objective and committee size take precedence over the file header; its
/// bound, when present, is checked too.
pub fn cmd_verify(instance: &Path, solution: &Path) -> Result<Output, CliError> {
    let text = fs::read_to_string(solution).map_err(|source| CliError::Io {
        path: solution.to_path_buf(),
        source,
    })?;
    let rec = ResultRecord::from_toml(&text).map_err(|e| e.in_file(solution))?;
    let over = Overrides {
        rule: Some(rec.rule.parse()?),
        objective: Some(rec.objective.parse()?),
        k: Some(rec.k),
        bound: rec.bound,
    };
    let inst = over.apply(read_instance(instance)?)?;
    let sol = rec.solution(&inst)?;
    let report = verify_solution_with(&inst, &sol, rec.bound.is_some())?;
    Ok(Output {
        stdout: report.to_string(),
        stderr: Vec::new(),
        code: if report.passed() { 0 } else { 1 },
    })
}

#[derive(Debug)]
struct BenchRow {
    solver: Solver,
    result: Result<Solution, Error>,
    ms: f64,
}

fn bench_instance(inst: &ProblemInstance, limits: &Limits) -> Vec<BenchRow> {
    applicable_solvers(inst, Mode::Optimize)
        .into_iter()
        .map(|solver| {
            let t = Instant::now();
            let result = optimize(inst, solver, &limits.start());
            BenchRow {
                solver,
                result,
                ms: t.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect()
}

/// Runs every applicable solver on every file of `dir` (in filename order)
/// and cross-checks the optimal values.
pub fn cmd_bench(dir: &Path, limits: &Limits) -> Result<Output, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<PathBuf> = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    let instances = files
        .iter()
        .map(|p| read_instance(p))
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Vec<BenchRow>> = instances.par_iter().map(|i| bench_instance(i, limits)).collect();

    let mut out = Output::default();
    writeln!(out.stdout, "{:<32} {:<15} {:>12} {:>12}", "file", "solver", "value", "ms").unwrap();
    for ((path, inst), rows) in files.iter().zip(&instances).zip(&results) {
        let file = path.file_name().unwrap_or_default().to_string_lossy();
        let mut values: Vec<(Solver, u64)> = Vec::new();
        for row in rows {
            let shown = match &row.result {
                Ok(s) => {
                    let report = verify_solution_with(inst, s, false)?;
                    if !report.passed() {
                        out.stderr.push(format!("{file}: {} returned a bad witness:\n{report}", row.solver));
                    }
                    values.push((row.solver, s.value));
                    s.value.to_string()
                }
                Err(Error::Budget(_)) => "skipped".to_string(),
                Err(e) => {
                    out.stderr.push(format!("{file}: {} failed: {e}", row.solver));
                    "error".to_string()
                }
            };
            writeln!(out.stdout, "{file:<32} {:<15} {shown:>12} {:>12.3}", row.solver.name(), row.ms).unwrap();
        }
        if values.iter().any(|&(_, v)| v != values[0].1) {
            let all: Vec<String> = values.iter().map(|(s, v)| format!("{s}={v}")).collect();
            out.stderr.push(format!("{file}: solvers disagree: {}", all.join(", ")));
        }
    }
    if !out.stderr.is_empty() {
        out.code = 1;
    }
    Ok(out)
}
