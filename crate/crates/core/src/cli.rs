//! Command-line surface: one subcommand per experiment.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 an audited invariant was
//! violated (or an `--oracle` re-check disagreed).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::derived_sets::{
    primorial_witness, windowed_replication, SearchLimit, REPLICATION_N_MAX, REPLICATION_WINDOW,
};
use crate::error::{Error, Result};
use crate::oracle::{self, Bounds};
use crate::primes::{is_prime, PrimeTable};
use crate::report::{self, PlotAxis, ReportEnvelope};
use crate::twin_analysis::{
    count_series, pseudo_twin, q_window, recurrence_audit, theorem6_scan, IntervalConvention, Theorem6Reading,
    DEFAULT_GGT_THRESHOLD,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// |Q(M)| for each M in the range
    Table,
    /// Twin pairs of each window Q(M)
    Pairs,
    /// Pseudo twins (q_M, q_M + 2) with certification flags
    Pseudo,
    /// Window-to-window recurrence audit
    Audit,
    /// Primorial witness gcd checks
    Witness,
    /// Windowed cumulative-intersection run (n_max = --m-hi, default 400)
    #[command(name = "replicate-78")]
    Replicate78,
    /// Twin pair inside (x, 2x) for x in [--m-lo, --m-hi]
    Theorem6,
    /// Cross-check optimized paths against brute force
    OracleCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Program,
    Strict,
}

fn parse_search_limit(s: &str) -> std::result::Result<SearchLimit, String> {
    if s == "auto" {
        return Ok(SearchLimit::Auto);
    }
    match s.parse::<u64>() {
        Ok(0) => Err("fixed search limit must be positive".into()),
        Ok(v) => Ok(SearchLimit::Fixed(v)),
        Err(_) => Err(format!("expected `auto` or a positive integer, got `{s}`")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "twinsieve", version, about = "Derived-set sieve experiments on twin primes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    m_lo: Option<usize>,
    #[arg(long, global = true)]
    m_hi: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "program")]
    convention: ConventionArg,
    #[arg(long, global = true)]
    window: Option<u64>,
    #[arg(long, global = true, value_parser = parse_search_limit, default_value = "auto")]
    search_limit: SearchLimit,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    oracle: bool,
}

/// Fully resolved parameters of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub m_lo: usize,
    pub m_hi: usize,
    pub convention: IntervalConvention,
    pub window: u64,
    pub search_limit: SearchLimit,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub oracle: bool,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> std::result::Result<Self, String> {
        let (lo, hi) = match cli.command {
            Command::Table | Command::Pseudo => (2, 2000),
            Command::Pairs => (2, 10),
            Command::Audit => (2, 1999),
            Command::Witness => (2, 25),
            Command::Replicate78 => (2, REPLICATION_N_MAX),
            Command::Theorem6 => (2, 30_000),
            Command::OracleCheck => (2, 500),
        };
        let cfg = RunConfig {
            command: cli.command,
            m_lo: cli.m_lo.unwrap_or(lo),
            m_hi: cli.m_hi.unwrap_or(hi),
            convention: match cli.convention {
                ConventionArg::Program => IntervalConvention::Program,
                ConventionArg::Strict => IntervalConvention::Strict,
            },
            window: cli.window.unwrap_or(REPLICATION_WINDOW),
            search_limit: cli.search_limit,
            format: cli.format,
            out: cli.out,
            threads: cli.threads,
            oracle: cli.oracle,
        };
        if cfg.m_lo < 2 {
            return Err(format!("--m-lo must be >= 2, got {}", cfg.m_lo));
        }
        if cfg.m_hi < cfg.m_lo {
            return Err(format!("--m-hi ({}) must be >= --m-lo ({})", cfg.m_hi, cfg.m_lo));
        }
        if cfg.threads == Some(0) {
            return Err("--threads must be >= 1".into());
        }
        if cfg.format == Format::Plot && cfg.command != Command::Table {
            return Err("--format plot is only available for `table`".into());
        }
        Ok(cfg)
    }
}

/// Product of one run: bytes for the output sink plus any violations found.
struct Outcome {
    output: Vec<u8>,
    violations: Vec<String>,
}

/// Parse `args` (including the program name), execute, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            } else {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    let cfg = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    run_config(&cfg, stdout, stderr)
}

/// Execute an already-validated configuration.
pub fn run_config(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match cfg.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cfg)),
            Err(e) => Err(Error::Domain(e.to_string())),
        },
        None => execute(cfg),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(Error::from),
        None => stdout.write_all(&outcome.output).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.violations.is_empty() {
        EXIT_OK
    } else {
        for v in &outcome.violations {
            let _ = writeln!(stderr, "violation: {v}");
        }
        EXIT_VIOLATION
    }
}

fn render(cfg: &RunConfig, envelope: &ReportEnvelope, text: impl FnOnce() -> String) -> Result<Vec<u8>> {
    Ok(match cfg.format {
        Format::Text => text().into_bytes(),
        Format::Csv => report::to_csv(envelope),
        Format::Json => report::to_json(envelope),
        Format::Plot => {
            let svg = cfg.out.as_ref().and_then(|p| p.extension()).is_some_and(|e| e == "svg");
            if svg {
                report::plot_svg(envelope, PlotAxis::Index)?.into_bytes()
            } else {
                report::plot_series(envelope, PlotAxis::Index)?
            }
        }
    })
}

fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Table => cmd_table(cfg),
        Command::Pairs => cmd_pairs(cfg),
        Command::Pseudo => cmd_pseudo(cfg),
        Command::Audit => cmd_audit(cfg),
        Command::Witness => cmd_witness(cfg),
        Command::Replicate78 => cmd_replicate(cfg),
        Command::Theorem6 => cmd_theorem6(cfg),
        Command::OracleCheck => cmd_oracle_check(cfg),
    }
}

fn naive_window(p_m: u64, convention: IntervalConvention) -> Vec<(u64, u64)> {
    match convention {
        IntervalConvention::Program => oracle::naive_twins_in(p_m, 2 * p_m, Bounds::BothInside),
        IntervalConvention::Strict => oracle::naive_twins_in(p_m + 1, 2 * p_m, Bounds::LowerOnly),
    }
}

fn cmd_table(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let series = count_series(cfg.m_lo, cfg.m_hi, cfg.convention, &table)?;
    let mut violations = Vec::new();
    for s in &series {
        if s.count == 0 {
            violations.push(format!("Q({}) is empty (p_M = {})", s.m, s.p_m));
        }
    }
    for w in series.windows(2) {
        if w[1].count + 1 < w[0].count {
            violations.push(format!("|Q({})| = {} drops by more than 1 from {}", w[1].m, w[1].count, w[0].count));
        }
    }
    if cfg.oracle {
        let ps = oracle::naive_first_primes(cfg.m_hi);
        for s in &series {
            let naive = naive_window(ps[s.m - 1], cfg.convention).len();
            if naive != s.count {
                violations.push(format!("oracle: |Q({})| = {naive}, sieve path gave {}", s.m, s.count));
            }
        }
    }
    let env = ReportEnvelope::count_series(&series, cfg.convention);
    let output = render(cfg, &env, || {
        let mut s = format!("# M\tp_M\t|Q(M)|\t(convention {}; >>1 marks counts above {DEFAULT_GGT_THRESHOLD})\n", cfg.convention);
        for p in &series {
            let mark = if p.count > DEFAULT_GGT_THRESHOLD { "\t>>1" } else { "" };
            let _ = writeln!(s, "{}\t{}\t{}{mark}", p.m, p.p_m, p.count);
        }
        let min = series.iter().map(|p| p.count).min().unwrap_or(0);
        let max = series.iter().map(|p| p.count).max().unwrap_or(0);
        let _ = writeln!(s, "# windows={} min={min} max={max}", series.len());
        s
    })?;
    Ok(Outcome { output, violations })
}

fn cmd_pairs(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let mut windows = Vec::new();
    for m in cfg.m_lo..=cfg.m_hi {
        windows.push(q_window(m, cfg.convention, &table)?);
    }
    let mut violations = Vec::new();
    if cfg.oracle {
        for w in &windows {
            let ours: Vec<(u64, u64)> = w.members.iter().map(|p| (p.lower(), p.upper())).collect();
            if ours != naive_window(w.p_m, cfg.convention) {
                violations.push(format!("oracle: Q({}) differs from brute force", w.m));
            }
        }
    }
    let mut all: Vec<(u64, u64)> =
        windows.iter().flat_map(|w| w.members.iter().map(|p| (p.lower(), p.upper()))).collect();
    all.sort_unstable();
    all.dedup();
    let env = ReportEnvelope::pairs(&all, (cfg.m_lo, cfg.m_hi), cfg.convention.as_str());
    let output = render(cfg, &env, || {
        let mut s = String::new();
        for w in &windows {
            let body = w.members.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            let _ = writeln!(s, "M={} p_M={} {{{body}}}", w.m, w.p_m);
        }
        s
    })?;
    Ok(Outcome { output, violations })
}

fn cmd_pseudo(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let mut records = Vec::new();
    for m in cfg.m_lo..=cfg.m_hi {
        records.push(pseudo_twin(m, &table, cfg.search_limit)?);
    }
    let mut violations = Vec::new();
    for r in &records {
        match r.q_m {
            None => violations.push(format!("q_{} not found below search limit {}", r.m, r.search_limit)),
            Some(q) if r.in_interval && !r.certified_twin => {
                violations.push(format!("q_{} = {q} lies in [p_M, 2p_M] but is not a twin pair", r.m))
            }
            _ => {}
        }
    }
    if cfg.oracle {
        let ps = oracle::naive_first_primes(cfg.m_hi);
        for r in &records {
            if let Some(q) = r.q_m {
                let naive = oracle::naive_q_min_with(&ps[..r.m]);
                if naive != q {
                    violations.push(format!("oracle: q_{} = {naive}, sieve path gave {q}", r.m));
                }
            }
        }
    }
    let env = ReportEnvelope::pseudo(&records);
    let output = render(cfg, &env, || {
        let mut s = String::new();
        for r in &records {
            let q = r.q_m.map_or("not-found".to_string(), |q| q.to_string());
            let _ = writeln!(
                s,
                "M={} p_M={} q_M={q} in_interval={} certified_twin={}",
                r.m, r.p_m, r.in_interval, r.certified_twin
            );
        }
        s
    })?;
    Ok(Outcome { output, violations })
}

fn cmd_audit(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 2)?;
    let records = recurrence_audit(cfg.m_lo, cfg.m_hi, &table)?;
    let mut violations = Vec::new();
    for a in &records {
        if !a.identity_ok {
            violations.push(format!("identity fails at M = {}", a.m));
        }
        if !a.inequality_ok {
            violations.push(format!("|Q(M+1)| >= |Q(M)| - 1 fails at M = {}", a.m));
        }
    }
    if cfg.oracle {
        let ps = oracle::naive_first_primes(cfg.m_hi + 1);
        for a in &records {
            let (p, pn) = (ps[a.m - 1], ps[a.m]);
            let c0 = oracle::naive_window_count(p);
            let c1 = oracle::naive_window_count(pn);
            let gain = oracle::naive_twins_in(2 * p - 1, 2 * pn - 2, Bounds::LowerOnly).len();
            let loss = u8::from(oracle::naive_is_prime(p + 2)?);
            if (c0, c1, gain, loss) != (a.count_m, a.count_m1, a.gain_x, a.loss) {
                violations.push(format!("oracle: audit record for M = {} differs from brute force", a.m));
            }
        }
    }
    let env = ReportEnvelope::audit(&records);
    let output = render(cfg, &env, || {
        let mut s = String::new();
        for a in &records {
            let _ = writeln!(
                s,
                "M={} |Q(M)|={} |Q(M+1)|={} loss={} x(M)={} {} (p_(M+1) keying: {}) identity={} inequality={}",
                a.m,
                a.count_m,
                a.count_m1,
                a.loss,
                a.gain_x,
                a.case_label,
                a.next_prime_case_label,
                ok(a.identity_ok),
                ok(a.inequality_ok)
            );
        }
        for n in &env.notes {
            let _ = writeln!(s, "# {n}");
        }
        let _ = writeln!(s, "# transitions={} violations={}", records.len(), violations.len());
        s
    })?;
    Ok(Outcome { output, violations })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn euclid(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn cmd_witness(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let mut records = Vec::new();
    for m in cfg.m_lo..=cfg.m_hi {
        records.push(primorial_witness(m, &table)?);
    }
    let mut violations = Vec::new();
    for w in &records {
        if !w.all_coprime() || !w.q_is_odd() {
            violations.push(format!("primorial witness fails for M = {}", w.m));
        }
    }
    if cfg.oracle {
        let ps = oracle::naive_first_primes(cfg.m_hi);
        for w in &records {
            let q: BigUint = ps[1..w.m].iter().map(|&p| BigUint::from(p)).product();
            for c in &w.checks {
                let r = u64::try_from(&q % c.p_j).expect("residue below a u64 modulus");
                let g2 = euclid((r + 2) % c.p_j, c.p_j);
                let g4 = euclid((r + 4) % c.p_j, c.p_j);
                if q != w.q || (g2, g4) != (c.gcd_q_plus_2, c.gcd_q_plus_4) {
                    violations.push(format!("oracle: witness check M = {}, j = {} differs", w.m, c.j));
                }
            }
        }
    }
    let env = ReportEnvelope::witness(&records);
    let output = render(cfg, &env, || {
        let mut s = String::new();
        for w in &records {
            let _ = writeln!(s, "M={} q={} checks={} all_gcd_one={}", w.m, w.q, w.checks.len(), w.all_coprime());
        }
        s
    })?;
    Ok(Outcome { output, violations })
}

fn cmd_replicate(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let rep = windowed_replication(cfg.m_hi, cfg.window, &table)?;
    let mut violations = Vec::new();
    for &(a, b) in &rep.pairs {
        if !(is_prime(a) && is_prime(b)) {
            violations.push(format!("pair {{{a}, {b}}} is not a twin pair"));
        }
    }
    if cfg.oracle {
        let ps = oracle::naive_first_primes(cfg.m_hi);
        for w in &rep.minima {
            let naive = oracle::naive_q_min_with(&ps[..w.n]);
            if naive != w.min {
                violations.push(format!("oracle: min gp[{}] = {}, linear scan gives {naive}", w.n, w.min));
            }
        }
        for &(a, b) in &rep.pairs {
            if !(oracle::naive_is_prime(a)? && oracle::naive_is_prime(b)?) {
                violations.push(format!("oracle: {{{a}, {b}}} is not a twin pair"));
            }
        }
    }
    let env = ReportEnvelope::pairs(&rep.pairs, (2, rep.n_max), "windowed");
    let output = render(cfg, &env, || report::pair_list_text(&rep.pairs))?;
    Ok(Outcome { output, violations })
}

fn cmd_theorem6(cfg: &RunConfig) -> Result<Outcome> {
    let (x_lo, x_hi) = (cfg.m_lo as u64, cfg.m_hi as u64);
    let table = PrimeTable::up_to(2 * x_hi + 2)?;
    let reading = Theorem6Reading::Open;
    let results = theorem6_scan(x_lo, x_hi, &table, reading)?;
    let exceptions: Vec<u64> = results.iter().filter(|r| r.1.is_none()).map(|r| r.0).collect();
    let mut violations = Vec::new();
    if cfg.oracle {
        for &x in &exceptions {
            if !oracle::naive_twins_in(x, 2 * x, Bounds::Open).is_empty() {
                violations.push(format!("oracle: x = {x} has a twin pair inside (x, 2x)"));
            }
        }
        for (x, p) in &results {
            if let Some(p) = p {
                let fine = *x < p.lower()
                    && p.upper() < 2 * x
                    && oracle::naive_is_prime(p.lower())?
                    && oracle::naive_is_prime(p.upper())?;
                if !fine {
                    violations.push(format!("oracle: reported pair {p} for x = {x} fails"));
                }
            }
        }
    }
    let env = ReportEnvelope::theorem6(&results, reading);
    let output = render(cfg, &env, || {
        let list = exceptions.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        format!(
            "x in [{x_lo}, {x_hi}], open interval (x, 2x), both members inside\nexceptions ({}): [{list}]\n",
            exceptions.len()
        )
    })?;
    Ok(Outcome { output, violations })
}

fn cmd_oracle_check(cfg: &RunConfig) -> Result<Outcome> {
    let table = PrimeTable::with_count(cfg.m_hi + 1)?;
    let ps = oracle::naive_first_primes(cfg.m_hi);
    let mut violations = Vec::new();
    let mut report = String::new();
    for conv in [IntervalConvention::Program, IntervalConvention::Strict] {
        let mut bad = 0;
        for m in cfg.m_lo..=cfg.m_hi {
            let w = q_window(m, conv, &table)?;
            let ours: Vec<(u64, u64)> = w.members.iter().map(|p| (p.lower(), p.upper())).collect();
            if ours != naive_window(ps[m - 1], conv) {
                bad += 1;
                violations.push(format!("Q({m}) {conv} differs from brute force"));
            }
        }
        let _ = writeln!(report, "q_window vs naive_twins_in ({conv}), M in [{}, {}]: {}", cfg.m_lo, cfg.m_hi, verdict(bad));
    }
    let mut bad = 0;
    for m in cfg.m_lo..=cfg.m_hi {
        let ours = crate::derived_sets::q_min(m, &table, cfg.search_limit)?;
        let naive = oracle::naive_q_min_with(&ps[..m]);
        if ours != Some(naive) {
            bad += 1;
            violations.push(format!("q_min({m}) = {ours:?}, linear scan gives {naive}"));
        }
    }
    let _ = writeln!(report, "q_min vs naive_q_min, M in [{}, {}]: {}", cfg.m_lo, cfg.m_hi, verdict(bad));
    let limit = 1_000_000u64;
    let bad = (2..=limit).filter(|&x| is_prime(x) != oracle::naive_is_prime(x).unwrap_or(false)).count();
    if bad > 0 {
        violations.push(format!("is_prime disagrees with trial division at {bad} points"));
    }
    let _ = writeln!(report, "is_prime vs naive_is_prime on [2, {limit}]: {}", verdict(bad));
    Ok(Outcome { output: report.into_bytes(), violations })
}

fn verdict(bad: usize) -> String {
    if bad == 0 {
        "ok".to_string()
    } else {
        format!("{bad} mismatches")
    }
}
