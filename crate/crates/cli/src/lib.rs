//! Reproducible verification runs and reports over the core engine.
//!
//! Every command renders deterministically for a fixed configuration: the
//! random seed is part of the configuration and is echoed in reports, and
//! wall-clock timings are kept out of the output unless explicitly requested.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde_json::json;

use gitq_core::deodhar::{
    appendix_identity, build_matrix, common_factor, diagonal_product, factorization_certificate,
    interval_condition, noncommon_factor, plucker_restrict, BlockStructure,
};
use gitq_core::error::Error as CoreError;
use gitq_core::poly::{parse_poly, SparsePoly, VarId, DEFAULT_PRIME};
use gitq_core::quotient::{
    build_coordinates, identify_quotient, independence_check, jacobian_variables,
    modular_jacobian_rank, realize_product, segre_consistency, verify_triangularity,
    QuotientIdentification,
};
use gitq_core::rng::SplitMix64;
use gitq_core::tableau::{
    build_gamma, check_structure_lemmas, enumerate_invariant, extract_degree_one,
    invariant_count_formula, is_invariant_member, sequences_of_gamma, SearchLimits,
    SequenceFamily,
};
use gitq_core::weyl::{
    bruhat_leq, coset_length, descent_hypothesis, v_max, v_of_m, verify_extremality, w_min,
    ExtremalityVerdict, GrassmannianContext, ParamM,
};

pub const REPORT_SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 20240;
pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_KMAX: usize = 3;
pub const DEFAULT_LIMIT: u128 = 1_000_000;

/// Cap on the predicted tableau count before a degree > 1 enumeration runs.
const DEGREE_COUNT_CAP: u128 = 100_000;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or inconsistent parameters; exit code 2.
    Usage(String),
    /// The configured limits reject the whole run; exit code 3.
    Resource(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Resource(msg) => write!(f, "resource limit: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Checks that can be targeted by fault injection; each name is also the
/// check's name in the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Weyl,
    Bijection,
    Structure,
    R1,
    Diag,
    Factorization,
    Appendix,
    Independence,
    Segre,
    Quotient,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::Weyl,
        CheckName::Bijection,
        CheckName::Structure,
        CheckName::R1,
        CheckName::Diag,
        CheckName::Factorization,
        CheckName::Appendix,
        CheckName::Independence,
        CheckName::Segre,
        CheckName::Quotient,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::Weyl => "weyl",
            CheckName::Bijection => "bijection",
            CheckName::Structure => "structure",
            CheckName::R1 => "r1",
            CheckName::Diag => "diag",
            CheckName::Factorization => "factorization",
            CheckName::Appendix => "appendix",
            CheckName::Independence => "independence",
            CheckName::Segre => "segre",
            CheckName::Quotient => "quotient",
        }
    }

    pub fn parse(s: &str) -> CliResult<CheckName> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|c| c.as_str()).collect();
                CliError::Usage(format!(
                    "unknown check `{s}`; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Tuning knobs shared by the verification commands.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub kmax: usize,
    pub trials: u32,
    pub seed: u64,
    pub limit: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            kmax: DEFAULT_KMAX,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            limit: DEFAULT_LIMIT,
        }
    }
}

/// Fully resolved run parameters.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ctx: GrassmannianContext,
    pub m: ParamM,
    pub kmax: usize,
    pub trials: u32,
    pub seed: u64,
    pub limits: SearchLimits,
    pub inject_fault: Option<CheckName>,
}

impl RunConfig {
    /// Resolves (n, r, q): any two determine the third, and all three must
    /// agree when given.
    pub fn resolve_context(
        n: Option<usize>,
        r: Option<usize>,
        q: Option<usize>,
    ) -> CliResult<GrassmannianContext> {
        let (r, q) = match (n, r, q) {
            (_, Some(r), Some(q)) => (r, q),
            (Some(n), Some(r), None) => {
                if r == 0 || (n - 1) % r != 0 {
                    return Err(CliError::Usage(format!(
                        "n-1 = {} is not a multiple of r = {r}",
                        n - 1
                    )));
                }
                (r, (n - 1) / r)
            }
            (Some(n), None, Some(q)) => {
                if q == 0 || (n - 1) % q != 0 {
                    return Err(CliError::Usage(format!(
                        "n-1 = {} is not a multiple of q = {q}",
                        n - 1
                    )));
                }
                ((n - 1) / q, q)
            }
            _ => {
                return Err(CliError::Usage(
                    "need at least two of --n, --r, --q".into(),
                ))
            }
        };
        let ctx = GrassmannianContext::new(r, q)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        if let Some(n) = n {
            if ctx.n != n {
                return Err(CliError::Usage(format!(
                    "inconsistent parameters: n = {n} but q*r + 1 = {}",
                    ctx.n
                )));
            }
        }
        Ok(ctx)
    }

    pub fn new(
        n: Option<usize>,
        r: Option<usize>,
        q: Option<usize>,
        m_values: Vec<usize>,
        opts: VerifyOptions,
        inject_fault: Option<CheckName>,
    ) -> CliResult<RunConfig> {
        let ctx = Self::resolve_context(n, r, q)?;
        let m = ParamM::new(m_values, &ctx).map_err(|e| CliError::Usage(e.to_string()))?;
        if opts.kmax < 1 {
            return Err(CliError::Usage("kmax must be at least 1".into()));
        }
        if opts.trials < 1 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        Ok(RunConfig {
            ctx,
            m,
            kmax: opts.kmax,
            trials: opts.trials,
            seed: opts.seed,
            limits: SearchLimits {
                search_space: opts.limit,
                ..SearchLimits::default()
            },
            inject_fault,
        })
    }
}

pub fn parse_m_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad value `{part}` in m list")))
        })
        .collect()
}

pub fn parse_target_list(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad target `{part}`")))
        })
        .collect()
}

/// Display form of a quotient: dimension-0 factors are elided, a pure point
/// prints as `point`, and the section count is always appended.
pub fn quotient_display(id: &QuotientIdentification) -> String {
    let visible: Vec<_> = id.factors.iter().filter(|f| f.dim > 0).collect();
    let sections = if id.sections == 1 {
        "1 section".to_string()
    } else {
        format!("{} sections", id.sections)
    };
    if visible.is_empty() {
        format!("point, {sections}")
    } else {
        let spaces: Vec<String> = visible.iter().map(|f| format!("P^{}", f.dim)).collect();
        let bundle: Vec<String> = visible.iter().map(|f| format!("O({})", f.degree)).collect();
        format!("{}, {}, {}", spaces.join(" x "), bundle.join(" ⊠ "), sections)
    }
}

pub fn run_describe(cfg: &RunConfig, format: OutputFormat) -> CliResult<String> {
    let ctx = &cfg.ctx;
    let w = w_min(ctx);
    let v = v_max(ctx);
    let vm = v_of_m(&cfg.m, ctx);
    let id = identify_quotient(&cfg.m, ctx);
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "context: n={} r={} q={}", ctx.n, ctx.r, ctx.q).unwrap();
            writeln!(out, "m = {}", cfg.m.render()).unwrap();
            writeln!(out, "w_min = {w}, length {}", coset_length(&w)).unwrap();
            writeln!(out, "v_max = {v}, length {}", coset_length(&v)).unwrap();
            writeln!(out, "v_m = {vm}, length {}", coset_length(&vm)).unwrap();
            writeln!(
                out,
                "weight in root lattice: {}",
                descent_hypothesis(ctx)
            )
            .unwrap();
            writeln!(out, "invariant sections (degree 1): {}", id.sections).unwrap();
            write!(out, "quotient: {}", quotient_display(&id)).unwrap();
            Ok(out)
        }
        OutputFormat::Json => {
            let js = json!({
                "n": ctx.n, "r": ctx.r, "q": ctx.q,
                "m": cfg.m.values(),
                "w_min": w.entries(),
                "v_max": v.entries(),
                "v_m": vm.entries(),
                "lengths": {
                    "w_min": coset_length(&w),
                    "v_max": coset_length(&v),
                    "v_m": coset_length(&vm),
                },
                "weight_in_root_lattice": descent_hypothesis(ctx),
                "quotient": id.to_json(),
                "display": quotient_display(&id),
            });
            Ok(serde_json::to_string_pretty(&js).unwrap())
        }
    }
}

/// One row of the nine-case table over (10, 3, 3).
#[derive(Clone, Debug)]
pub struct ExampleRow {
    pub index: usize,
    pub m: Vec<usize>,
    pub display: String,
    pub sections_formula: u128,
    pub sections_enumerated: usize,
}

/// The nine (10,3,3) cases in Bruhat-lattice order, each with the section
/// count computed both by enumeration and by the binomial product.
pub fn example_table() -> CliResult<Vec<ExampleRow>> {
    let ctx = GrassmannianContext::new(3, 3).expect("(10,3,3) is valid");
    let order: [[usize; 2]; 9] = [
        [3, 3],
        [2, 3],
        [3, 2],
        [1, 3],
        [2, 2],
        [3, 1],
        [1, 2],
        [2, 1],
        [1, 1],
    ];
    let limits = SearchLimits::default();
    let mut rows = Vec::with_capacity(order.len());
    for (i, mv) in order.iter().enumerate() {
        let m = ParamM::new(mv.to_vec(), &ctx).expect("valid m");
        let id = identify_quotient(&m, &ctx);
        let enumerated = enumerate_invariant(&m, &ctx, 1, &limits)
            .map_err(|e| CliError::Resource(e.to_string()))?
            .len();
        rows.push(ExampleRow {
            index: i + 1,
            m: mv.to_vec(),
            display: format!("m=({},{}): {}", mv[0], mv[1], quotient_display(&id)),
            sections_formula: id.sections,
            sections_enumerated: enumerated,
        });
    }
    Ok(rows)
}

pub fn run_example_table(format: OutputFormat) -> CliResult<String> {
    let rows = example_table()?;
    match format {
        OutputFormat::Text => {
            let lines: Vec<String> = rows
                .iter()
                .map(|row| {
                    let agree = row.sections_formula == row.sections_enumerated as u128;
                    format!(
                        "({}) {}{}",
                        row.index,
                        row.display,
                        if agree { "" } else { "  [COUNT MISMATCH]" }
                    )
                })
                .collect();
            Ok(lines.join("\n"))
        }
        OutputFormat::Json => {
            let js: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "index": row.index,
                        "m": row.m,
                        "display": row.display,
                        "sections_formula": row.sections_formula.to_string(),
                        "sections_enumerated": row.sections_enumerated,
                    })
                })
                .collect();
            Ok(serde_json::to_string_pretty(&js).unwrap())
        }
    }
}

pub fn run_matrix(cfg: &RunConfig, format: OutputFormat) -> CliResult<String> {
    let mat = build_matrix(&cfg.m, &cfg.ctx);
    match format {
        OutputFormat::Text => {
            let labels: Vec<String> = mat.column_labels().iter().map(|l| l.to_string()).collect();
            Ok(format!(
                "n={} r={} q={} m={} columns=[{}]\n{}",
                cfg.ctx.n,
                cfg.ctx.r,
                cfg.ctx.q,
                cfg.m.render(),
                labels.join(","),
                mat.to_text()
            ))
        }
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&mat.to_json()).unwrap()),
    }
}

pub fn run_realize(targets: &[i64], format: OutputFormat) -> CliResult<String> {
    let (ctx, m) = realize_product(targets).map_err(|e| CliError::Usage(e.to_string()))?;
    let id = identify_quotient(&m, &ctx);
    let achieved: Vec<i64> = id.factors.iter().map(|f| f.dim as i64).collect();
    let confirmed = achieved == targets;
    match format {
        OutputFormat::Text => {
            let want: Vec<String> = targets.iter().map(|a| format!("P^{a}")).collect();
            let mut out = String::new();
            writeln!(out, "target: {}", want.join(" x ")).unwrap();
            writeln!(out, "context: n={} r={} q={}", ctx.n, ctx.r, ctx.q).unwrap();
            writeln!(out, "m = {}", m.render()).unwrap();
            writeln!(out, "quotient: {}", quotient_display(&id)).unwrap();
            write!(out, "confirmed: {confirmed}").unwrap();
            Ok(out)
        }
        OutputFormat::Json => {
            let js = json!({
                "targets": targets,
                "n": ctx.n, "r": ctx.r, "q": ctx.q,
                "m": m.values(),
                "quotient": id.to_json(),
                "confirmed": confirmed,
            });
            Ok(serde_json::to_string_pretty(&js).unwrap())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: CheckName,
    pub status: CheckStatus,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub schema: u32,
    pub ctx: GrassmannianContext,
    pub m: ParamM,
    pub kmax: usize,
    pub trials: u32,
    pub seed: u64,
    pub limit: u128,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    /// Overall pass: every verdict is a pass or a declared skip.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "verify n={} r={} q={} m={} kmax={} trials={} seed={} limit={}",
            self.ctx.n,
            self.ctx.r,
            self.ctx.q,
            self.m.render(),
            self.kmax,
            self.trials,
            self.seed,
            self.limit
        )
        .unwrap();
        for check in &self.checks {
            let (tag, extra) = match &check.status {
                CheckStatus::Pass => ("PASS", String::new()),
                CheckStatus::Fail(msg) => ("FAIL", format!(" ({msg})")),
                CheckStatus::Skip(msg) => ("SKIP", format!(" ({msg})")),
            };
            let timing = if timings {
                format!(" [{} ms]", check.elapsed_ms)
            } else {
                String::new()
            };
            writeln!(
                out,
                "[{tag}] {}: {}{extra}{timing}",
                check.name.as_str(),
                check.detail
            )
            .unwrap();
        }
        write!(out, "overall: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn render_json(&self, timings: bool) -> String {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                let (status, reason) = match &c.status {
                    CheckStatus::Pass => ("pass", serde_json::Value::Null),
                    CheckStatus::Fail(msg) => ("fail", json!(msg)),
                    CheckStatus::Skip(msg) => ("skip", json!(msg)),
                };
                let mut entry = json!({
                    "name": c.name.as_str(),
                    "status": status,
                    "reason": reason,
                    "detail": c.detail,
                });
                if timings {
                    entry["elapsed_ms"] = json!(c.elapsed_ms as u64);
                }
                entry
            })
            .collect();
        let js = json!({
            "schema": REPORT_SCHEMA,
            "config": {
                "n": self.ctx.n, "r": self.ctx.r, "q": self.ctx.q,
                "m": self.m.values(),
                "kmax": self.kmax,
                "trials": self.trials,
                "seed": self.seed,
                "limit": self.limit.to_string(),
            },
            "seed": self.seed,
            "checks": checks,
            "overall": if self.passed() { "pass" } else { "fail" },
        });
        serde_json::to_string_pretty(&js).unwrap()
    }
}

fn skip_or_fail(e: CoreError) -> CheckStatus {
    match e {
        CoreError::ResourceLimit(msg) => CheckStatus::Skip(msg),
        other => CheckStatus::Fail(other.to_string()),
    }
}

struct CheckContext<'a> {
    cfg: &'a RunConfig,
    /// Degree-1 invariant tableaux, shared by most checks.
    tableaux: Vec<gitq_core::tableau::YoungTableau>,
}

impl CheckContext<'_> {
    fn fault(&self, name: CheckName) -> bool {
        self.cfg.inject_fault == Some(name)
    }
}

/// Runs the full verification suite.
pub fn run_verify_report(cfg: &RunConfig) -> CliResult<VerificationReport> {
    // Pre-flight: the degree-1 enumeration underlies most checks; if even
    // that exceeds the configured limit the run is rejected as a whole.
    let space = cfg.ctx.binomial_n_r();
    if space > cfg.limits.search_space {
        return Err(CliError::Resource(format!(
            "binomial(n, r) = {space} exceeds --limit {}",
            cfg.limits.search_space
        )));
    }
    let tableaux = enumerate_invariant(&cfg.m, &cfg.ctx, 1, &cfg.limits)
        .map_err(|e| CliError::Resource(e.to_string()))?;
    let check_ctx = CheckContext { cfg, tableaux };

    type Runner = fn(&CheckContext) -> (CheckStatus, String);
    let runners: [(CheckName, Runner); 10] = [
        (CheckName::Weyl, check_weyl),
        (CheckName::Bijection, check_bijection),
        (CheckName::Structure, check_structure),
        (CheckName::R1, check_r1),
        (CheckName::Diag, check_diag),
        (CheckName::Factorization, check_factorization),
        (CheckName::Appendix, check_appendix),
        (CheckName::Independence, check_independence),
        (CheckName::Segre, check_segre),
        (CheckName::Quotient, check_quotient),
    ];

    let mut checks = Vec::with_capacity(runners.len());
    for (name, runner) in runners {
        let start = Instant::now();
        let (status, detail) = runner(&check_ctx);
        checks.push(CheckOutcome {
            name,
            status,
            detail,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }

    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        ctx: cfg.ctx,
        m: cfg.m.clone(),
        kmax: cfg.kmax,
        trials: cfg.trials,
        seed: cfg.seed,
        limit: cfg.limits.search_space,
        checks,
    })
}

pub fn run_verify(cfg: &RunConfig, format: OutputFormat, timings: bool) -> CliResult<(String, bool)> {
    let report = run_verify_report(cfg)?;
    let rendered = match format {
        OutputFormat::Text => report.render_text(timings),
        OutputFormat::Json => report.render_json(timings),
    };
    Ok((rendered, report.passed()))
}

fn check_weyl(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    let ctx = &cfg.ctx;
    if cc.fault(CheckName::Weyl) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    let w = w_min(ctx);
    let v = v_max(ctx);
    let lw = coset_length(&w);
    let lv = coset_length(&v);
    if lw != lv + ctx.n - 1 {
        return (
            CheckStatus::Fail(format!("length identity failed: {lw} != {lv} + {}", ctx.n - 1)),
            String::new(),
        );
    }
    if !descent_hypothesis(ctx) {
        return (
            CheckStatus::Fail("weight is not in the root lattice".into()),
            String::new(),
        );
    }
    if !bruhat_leq(&v_of_m(&cfg.m, ctx), &v).unwrap_or(false) {
        return (
            CheckStatus::Fail("v_m is not below v_max".into()),
            String::new(),
        );
    }
    match verify_extremality(ctx, cfg.limits.search_space) {
        Ok(ExtremalityVerdict::Confirmed) => (
            CheckStatus::Pass,
            format!("unique extremal pair {w} / {v}; lengths {lw} = {lv} + {}", ctx.n - 1),
        ),
        Ok(ExtremalityVerdict::Skipped { space, limit }) => (
            CheckStatus::Skip(format!("search space {space} exceeds limit {limit}")),
            format!("length identity and root-lattice check pass; lengths {lw} = {lv} + {}", ctx.n - 1),
        ),
        Err(e) => (CheckStatus::Fail(e.to_string()), String::new()),
    }
}

fn check_bijection(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    let mut tabs: Vec<_> = cc.tableaux.iter().collect();
    if cc.fault(CheckName::Bijection) && !tabs.is_empty() {
        tabs.pop();
    }
    let formula = invariant_count_formula(&cfg.m, &cfg.ctx);
    if tabs.len() as u128 != formula {
        return (
            CheckStatus::Fail(format!("{} tableaux but formula gives {formula}", tabs.len())),
            String::new(),
        );
    }
    let families = SequenceFamily::enumerate_all(&cfg.m, &cfg.ctx);
    if families.len() != tabs.len() {
        return (
            CheckStatus::Fail(format!(
                "{} families vs {} tableaux",
                families.len(),
                tabs.len()
            )),
            String::new(),
        );
    }
    for tab in &tabs {
        let fam = match sequences_of_gamma(tab, &cfg.m, &cfg.ctx) {
            Ok(f) => f,
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        };
        match build_gamma(&fam, &cfg.m, &cfg.ctx) {
            Ok(back) if back == **tab => {}
            Ok(_) => {
                return (
                    CheckStatus::Fail(format!("round trip changed {tab:?}")),
                    String::new(),
                )
            }
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        }
    }
    for fam in &families {
        match build_gamma(fam, &cfg.m, &cfg.ctx) {
            Ok(tab) => match sequences_of_gamma(&tab, &cfg.m, &cfg.ctx) {
                Ok(back) if back == *fam => {}
                Ok(_) => {
                    return (
                        CheckStatus::Fail(format!("family round trip changed {fam:?}")),
                        String::new(),
                    )
                }
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            },
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        }
    }
    (
        CheckStatus::Pass,
        format!("{} tableaux = binomial product; round trips hold", tabs.len()),
    )
}

fn check_structure(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    if cc.fault(CheckName::Structure) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    let mut degrees = Vec::new();
    let mut total = 0usize;
    for k in 1..=cfg.kmax {
        let predicted: u128 = (1..cfg.ctx.r)
            .map(|j| {
                gitq_core::weyl::binomial_usize(
                    cfg.ctx.q - cfg.m.m(j) + k * (cfg.ctx.r - j),
                    k * (cfg.ctx.r - j),
                )
            })
            .product();
        if predicted > DEGREE_COUNT_CAP {
            break;
        }
        let tabs = if k == 1 {
            cc.tableaux.clone()
        } else {
            match enumerate_invariant(&cfg.m, &cfg.ctx, k, &cfg.limits) {
                Ok(t) => t,
                Err(CoreError::ResourceLimit(_)) => break,
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            }
        };
        for tab in &tabs {
            match check_structure_lemmas(tab, &cfg.m, &cfg.ctx) {
                Ok(report) if report.all_hold() => {}
                Ok(report) => {
                    return (
                        CheckStatus::Fail(format!("structure predicates failed: {report:?}")),
                        String::new(),
                    )
                }
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            }
        }
        total += tabs.len();
        degrees.push(k);
    }
    if degrees.is_empty() {
        return (
            CheckStatus::Skip("no degree fits the configured limits".into()),
            String::new(),
        );
    }
    (
        CheckStatus::Pass,
        format!("all predicates hold on {total} tableaux at degrees {degrees:?}"),
    )
}

fn check_r1(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    if cc.fault(CheckName::R1) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    if cfg.kmax < 2 {
        return (CheckStatus::Skip("kmax below 2".into()), String::new());
    }
    let mut per_degree = Vec::new();
    for k in 2..=cfg.kmax {
        let predicted: u128 = (1..cfg.ctx.r)
            .map(|j| {
                gitq_core::weyl::binomial_usize(
                    cfg.ctx.q - cfg.m.m(j) + k * (cfg.ctx.r - j),
                    k * (cfg.ctx.r - j),
                )
            })
            .product();
        if predicted > DEGREE_COUNT_CAP {
            break;
        }
        let tabs = match enumerate_invariant(&cfg.m, &cfg.ctx, k, &cfg.limits) {
            Ok(t) => t,
            Err(CoreError::ResourceLimit(_)) => break,
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        };
        for tab in &tabs {
            let mut rest = tab.clone();
            let mut degree = k;
            while degree >= 2 {
                let (one, remainder) = match extract_degree_one(&rest, &cfg.ctx) {
                    Ok(pair) => pair,
                    Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
                };
                let ok_one = is_invariant_member(&one, &cfg.m, &cfg.ctx).unwrap_or(false);
                let ok_rest = is_invariant_member(&remainder, &cfg.m, &cfg.ctx).unwrap_or(false);
                if !ok_one || !ok_rest {
                    return (
                        CheckStatus::Fail(format!("extraction left invalid factors for {tab:?}")),
                        String::new(),
                    );
                }
                // Row multisets must partition.
                let mut combined: Vec<_> = one.rows().to_vec();
                combined.extend(remainder.rows().iter().cloned());
                combined.sort();
                let mut original = rest.rows().to_vec();
                original.sort();
                if combined != original {
                    return (
                        CheckStatus::Fail(format!("rows not partitioned for {tab:?}")),
                        String::new(),
                    );
                }
                rest = remainder;
                degree -= 1;
            }
        }
        per_degree.push(format!("k={k}: {}", tabs.len()));
    }
    if per_degree.is_empty() {
        return (
            CheckStatus::Skip("no degree >= 2 fits the configured limits".into()),
            String::new(),
        );
    }
    (
        CheckStatus::Pass,
        format!("all tableaux factor into degree-1 members ({})", per_degree.join(", ")),
    )
}

fn check_diag(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    let mat = build_matrix(&cfg.m, &cfg.ctx);
    let tamper = cc.fault(CheckName::Diag);
    let mut rows_checked = 0usize;
    for tab in &cc.tableaux {
        for row in tab.rows() {
            if !interval_condition(row, &cfg.m, &cfg.ctx) {
                return (
                    CheckStatus::Fail(format!("interval condition failed on row {row}")),
                    String::new(),
                );
            }
            let det = match plucker_restrict(&mat, row) {
                Ok(p) => p,
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            };
            let mut diag = match diagonal_product(&mat, row) {
                Ok(p) => p,
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            };
            if tamper {
                diag = diag.mul(&SparsePoly::var(VarId::layer1(1)));
            }
            if det != diag {
                return (
                    CheckStatus::Fail(format!("determinant != diagonal product on row {row}")),
                    String::new(),
                );
            }
            rows_checked += 1;
        }
    }
    (
        CheckStatus::Pass,
        format!("determinant = diagonal product on {rows_checked} rows; interval condition holds"),
    )
}

fn check_factorization(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    let mat = build_matrix(&cfg.m, &cfg.ctx);
    let tamper = cc.fault(CheckName::Factorization);
    for tab in &cc.tableaux {
        if tamper {
            // Perturb the identity the certificate validates.
            let family = match sequences_of_gamma(tab, &cfg.m, &cfg.ctx) {
                Ok(f) => f,
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            };
            let restriction = gitq_core::deodhar::restriction_of_tableau(&mat, tab)
                .unwrap_or_else(|_| SparsePoly::zero())
                .mul(&SparsePoly::var(VarId::layer1(1)));
            let product = common_factor(&cfg.m, &cfg.ctx)
                .mul(&noncommon_factor(&family, &cfg.m, &cfg.ctx));
            if restriction != product {
                return (
                    CheckStatus::Fail("restriction != common * noncommon".into()),
                    String::new(),
                );
            }
            continue;
        }
        if let Err(e) = factorization_certificate(&mat, tab) {
            return (CheckStatus::Fail(e.to_string()), String::new());
        }
    }
    (
        CheckStatus::Pass,
        format!("{} certificates validated", cc.tableaux.len()),
    )
}

fn check_appendix(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    if cc.fault(CheckName::Appendix) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    let mut count = 0usize;
    for tab in &cc.tableaux {
        let fam = match sequences_of_gamma(tab, &cfg.m, &cfg.ctx) {
            Ok(f) => f,
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        };
        for j in 1..cfg.ctx.r {
            let blocks = match BlockStructure::of_sequence(fam.seq(j)) {
                Ok(b) => b,
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            };
            match appendix_identity(&blocks, j, &cfg.m, &cfg.ctx) {
                Ok(true) => count += 1,
                Ok(false) => {
                    return (
                        CheckStatus::Fail(format!("identity failed for blocks {blocks:?}")),
                        String::new(),
                    )
                }
                Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
            }
        }
    }
    (
        CheckStatus::Pass,
        format!("monomial identity verified on {count} block structures"),
    )
}

fn check_independence(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    let sys = build_coordinates(&cfg.m, &cfg.ctx);
    match verify_triangularity(&sys) {
        Ok(true) => {}
        Ok(false) => {
            return (
                CheckStatus::Fail("triangular structure violated".into()),
                String::new(),
            )
        }
        Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
    }
    if cc.fault(CheckName::Independence) {
        // Duplicate one coordinate so the Jacobian must lose rank.
        let mut polys: Vec<SparsePoly> = sys
            .groups()
            .iter()
            .flat_map(|g| g.coords.iter().map(|(_, x)| x.clone()))
            .collect();
        if let Some(first) = polys.first().cloned() {
            polys.push(first);
        }
        let vars = jacobian_variables(&cfg.m, &cfg.ctx);
        let mut rng = SplitMix64::new(cfg.seed);
        let mut point = BTreeMap::new();
        for i in 1..=cfg.ctx.r * cfg.ctx.q {
            point.insert(VarId::layer1(i), rng.below(DEFAULT_PRIME));
            point.insert(VarId::layer2(i), rng.below(DEFAULT_PRIME));
        }
        let rank = match modular_jacobian_rank(&polys, &vars, &point, DEFAULT_PRIME) {
            Ok(rank) => rank,
            Err(e) => return (CheckStatus::Fail(e.to_string()), String::new()),
        };
        if rank < polys.len() {
            return (
                CheckStatus::Fail(format!(
                    "rank {rank} below expected {} (duplicated coordinate)",
                    polys.len()
                )),
                String::new(),
            );
        }
    }
    match independence_check(&sys, cfg.trials, cfg.seed) {
        Ok(report) if report.passed => (
            CheckStatus::Pass,
            format!(
                "modular Jacobian rank {} of {} (seed {})",
                report.rank, report.expected_rank, report.seed
            ),
        ),
        Ok(report) => (
            CheckStatus::Fail(format!(
                "rank {} below expected {}",
                report.rank, report.expected_rank
            )),
            String::new(),
        ),
        Err(e) => (CheckStatus::Fail(e.to_string()), String::new()),
    }
}

fn check_segre(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    if cc.fault(CheckName::Segre) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    match segre_consistency(&cfg.m, &cfg.ctx, &cfg.limits) {
        Ok(report) if report.passed() => (
            CheckStatus::Pass,
            format!(
                "{} sections match the multidegree monomial basis",
                report.sections
            ),
        ),
        Ok(report) => (
            CheckStatus::Fail(format!(
                "cofactors_match={} injective={} basis_complete={}",
                report.cofactors_match, report.injective, report.basis_complete
            )),
            String::new(),
        ),
        Err(e) => (skip_or_fail(e), String::new()),
    }
}

fn check_quotient(cc: &CheckContext) -> (CheckStatus, String) {
    let cfg = cc.cfg;
    if cc.fault(CheckName::Quotient) {
        return (
            CheckStatus::Fail("synthetic fault injected".into()),
            "fault injection".into(),
        );
    }
    let id = identify_quotient(&cfg.m, &cfg.ctx);
    let sys = build_coordinates(&cfg.m, &cfg.ctx);
    if id.sections != cc.tableaux.len() as u128 {
        return (
            CheckStatus::Fail(format!(
                "section count {} differs from enumeration {}",
                id.sections,
                cc.tableaux.len()
            )),
            String::new(),
        );
    }
    if id.dimension != sys.num_coordinates() - (cfg.ctx.r - 1) {
        return (
            CheckStatus::Fail("dimension does not match the coordinate count".into()),
            String::new(),
        );
    }
    (
        CheckStatus::Pass,
        format!("identified as {}", quotient_display(&id)),
    )
}

/// Parses a rendered text matrix back (for round-trip tests): skips the
/// header line and parses each entry.
pub fn parse_matrix_text(text: &str) -> CliResult<Vec<Vec<SparsePoly>>> {
    let mut rows = Vec::new();
    for line in text.lines().skip(1) {
        let row: Result<Vec<SparsePoly>, CoreError> =
            line.split(' ').map(parse_poly).collect();
        rows.push(row.map_err(|e| CliError::Usage(e.to_string()))?);
    }
    Ok(rows)
}
