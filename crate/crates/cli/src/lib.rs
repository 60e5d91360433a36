//! Command-line front end for `hopfwreath`: every command builds objects
//! through the library, runs its checks and collects them into a [`Report`].

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use hopfwreath::group::{find_isomorphism, kk_embed_group, FiniteGroup, GroupAlgebra};
use hopfwreath::hopf::{
    check_algebra, check_axioms, convolution_inverse, group_likes, hopf_kernel, identity_map, primitives_up_to, Algebra,
    AxiomReport, FreeModule, HopfAlgebra, HopfMorphism, Status,
};
use hopfwreath::io;
use hopfwreath::lie::{kk_embed_lie, Envelope, LieAlgebra};
use hopfwreath::linear::{tensor, LinComb, LinMap, Scalar, SpanBasis};
use hopfwreath::smash::{
    basis_group, check_module_axioms, crossed_product, group_hopf_round_trip, group_wreath_comparison,
    lie_cleft_data, lie_hopf_round_trip, linearize_group_extension, smash_product, wreath_hopf_group, wreath_hopf_lie,
    Cocycle, HopfAction, TableAction, LIE_ACTION_WINDOW,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const SEED_ENV: &str = "HOPFWREATH_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckAxioms,
    WreathGroup,
    WreathLie,
    KkEmbedGroup,
    KkEmbedLie,
    Smash,
    Crossed,
    Hker,
    GroupLikes,
    Primitives,
    ConvInverse,
    VerifyTheoremG,
    VerifyTheoremL,
    RoundTrip,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn is_lie(self, config: &RunConfig) -> bool {
        match self {
            Command::WreathLie | Command::KkEmbedLie | Command::VerifyTheoremL => true,
            Command::Hker | Command::RoundTrip => config.family == Family::Lie,
            Command::CheckAxioms | Command::GroupLikes | Command::Primitives | Command::ConvInverse => {
                config.lie.is_some()
            }
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[default]
    Group,
    Lie,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

/// Parsed command line. Inputs are `builtin:NAME` or JSON file paths.
#[derive(Clone, Debug, Parser)]
#[command(name = "hopfwreath", version, about = "Exact checks for wreath products of cocommutative Hopf algebras")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Group for check-axioms, group-likes, primitives, conv-inverse.
    #[arg(long)]
    pub group: Option<String>,
    /// Lie algebra for check-axioms, group-likes, primitives, conv-inverse.
    #[arg(long)]
    pub lie: Option<String>,
    /// Base of a wreath product.
    #[arg(long = "A")]
    pub a: Option<String>,
    /// Top of a wreath product; acting group for smash and crossed.
    #[arg(long = "Q")]
    pub q: Option<String>,
    /// Acted-on group for smash and crossed.
    #[arg(long = "H")]
    pub h: Option<String>,
    /// Extension (group or Lie, per command and --family).
    #[arg(long)]
    pub ext: Option<String>,
    #[arg(long, value_enum, default_value_t = Family::Group)]
    pub family: Family,
    /// Action table JSON for smash and crossed.
    #[arg(long)]
    pub action: Option<String>,
    /// Cocycle JSON for crossed.
    #[arg(long)]
    pub cocycle: Option<String>,
    /// Group the crossed product should be isomorphic to.
    #[arg(long)]
    pub expect: Option<String>,
    /// Truncation degree.
    #[arg(long = "N", default_value_t = 4)]
    pub n: usize,
    /// Override the check window.
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub json: bool,
    /// Include elapsed_ms in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub group: Option<String>,
    pub lie: Option<String>,
    pub a: Option<String>,
    pub q: Option<String>,
    pub h: Option<String>,
    pub ext: Option<String>,
    pub family: Family,
    pub action: Option<String>,
    pub cocycle: Option<String>,
    pub expect: Option<String>,
    pub n: usize,
    pub window: Option<usize>,
    pub mode: OutputMode,
    pub timing: bool,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            group: None,
            lie: None,
            a: None,
            q: None,
            h: None,
            ext: None,
            family: Family::Group,
            action: None,
            cocycle: None,
            expect: None,
            n: 4,
            window: None,
            mode: OutputMode::Text,
            timing: false,
            seed: DEFAULT_SEED,
        }
    }

    /// Build from parsed arguments; the seed comes from `HOPFWREATH_SEED` if set.
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let seed = match std::env::var(SEED_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| CliError::Validation(format!("{SEED_ENV} must be an integer, got {s:?}")))?,
            Err(_) => DEFAULT_SEED,
        };
        Ok(Self {
            command: args.command,
            group: args.group,
            lie: args.lie,
            a: args.a,
            q: args.q,
            h: args.h,
            ext: args.ext,
            family: args.family,
            action: args.action,
            cocycle: args.cocycle,
            expect: args.expect,
            n: args.n,
            window: args.window,
            mode: if args.json { OutputMode::Json } else { OutputMode::Text },
            timing: args.timing,
            seed,
        })
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.command.is_lie(self) && self.n < 2 {
            return Err(CliError::Validation(format!("--N must be at least 2 for Lie commands, got {}", self.n)));
        }
        if let Some(w) = self.window.filter(|&w| w > self.n) {
            return Err(CliError::Validation(format!("--window {w} exceeds --N {}", self.n)));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error(transparent)]
    Domain(hopfwreath::Error),
}

impl From<hopfwreath::Error> for CliError {
    fn from(e: hopfwreath::Error) -> Self {
        match e {
            hopfwreath::Error::Parse { path, message } => CliError::Parse { path, message },
            other => CliError::Domain(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    /// Human-readable facts for text mode; not part of the JSON schema.
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), checks: Vec::new(), elapsed_ms: None, summary: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() { 0 } else { 1 }
    }

    /// Append every family of `report`, names prefixed by `section/` when nonempty.
    pub fn absorb(&mut self, section: &str, report: AxiomReport) {
        for c in report.checks {
            let name = if section.is_empty() { c.axiom } else { format!("{section}/{}", c.axiom) };
            self.checks.push(CheckResult { name, status: c.status, witnesses: c.violations });
        }
    }

    pub fn check(&mut self, name: impl Into<String>, witnesses: Vec<Vec<String>>) {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        self.checks.push(CheckResult { name: name.into(), status, witnesses });
    }

    fn note(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }
}

pub fn emit_report(report: &Report, mode: OutputMode) -> Vec<u8> {
    match mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data");
            s.push('\n');
            s.into_bytes()
        }
        OutputMode::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "command: {}", report.command);
            for line in &report.summary {
                let _ = writeln!(s, "  {line}");
            }
            if !report.checks.is_empty() {
                let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
                let _ = writeln!(s, "{:width$}  STATUS  WITNESSES", "CHECK");
                for c in &report.checks {
                    let status = if c.status == Status::Pass { "pass" } else { "FAIL" };
                    let shown: Vec<String> = c.witnesses.iter().take(5).map(|w| format!("({})", w.join(", "))).collect();
                    let more = c.witnesses.len().saturating_sub(5);
                    let tail = if more > 0 { format!(" … {more} more") } else { String::new() };
                    let _ = writeln!(s, "{:width$}  {status:6}  {}{tail}", c.name, shown.join(" "));
                }
            }
            if let Some(ms) = report.elapsed_ms {
                let _ = writeln!(s, "elapsed: {ms} ms");
            }
            let _ = writeln!(s, "result: {}", if report.passed() { "pass" } else { "FAIL" });
            s.into_bytes()
        }
    }
}

fn need<'a>(value: &'a Option<String>, flag: &str, command: Command) -> Result<&'a str, CliError> {
    value.as_deref().ok_or_else(|| CliError::Validation(format!("{} needs --{flag}", command.name())))
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let start = Instant::now();
    let mut report = Report::new(config.command.name());
    match config.command {
        Command::CheckAxioms => check_axioms_cmd(config, &mut report)?,
        Command::WreathGroup => wreath_group_cmd(config, &mut report)?,
        Command::WreathLie => wreath_lie_cmd(config, &mut report)?,
        Command::KkEmbedGroup => {
            let ext = io::load_group_extension(need(&config.ext, "ext", config.command)?)?;
            let emb = kk_embed_group(&ext)?;
            report.note(format!("φ: {} → {} ≀ {}", ext.total.name(), ext.kernel.name(), ext.quotient.name()));
            for (e, w) in emb.graph() {
                report.note(format!("{e} ↦ {}", emb.wreath.label(&w)));
            }
            report.absorb("", emb.check());
        }
        Command::KkEmbedLie => {
            let ext = io::load_lie_extension(need(&config.ext, "ext", config.command)?)?;
            let emb = kk_embed_lie(&ext, config.n)?;
            let r = emb.check(config.window);
            let pairs = ext.total.dim() * ext.total.dim();
            let bad = r.get("homomorphism").map_or(0, |c| c.violations.len());
            report.note(format!("{}/{pairs} bracket pairs preserved", pairs - bad));
            for (e, img) in emb.graph() {
                report.note(format!("{e} ↦ {img}"));
            }
            report.absorb("", r);
        }
        Command::Smash => smash_cmd(config, &mut report)?,
        Command::Crossed => crossed_cmd(config, &mut report)?,
        Command::Hker => hker_cmd(config, &mut report)?,
        Command::GroupLikes => group_likes_cmd(config, &mut report)?,
        Command::Primitives => primitives_cmd(config, &mut report)?,
        Command::ConvInverse => conv_inverse_cmd(config, &mut report)?,
        Command::VerifyTheoremG => {
            let a = Arc::new(io::load_group(need(&config.a, "A", config.command)?)?);
            let q = Arc::new(io::load_group(need(&config.q, "Q", config.command)?)?);
            let order = a.order().pow(q.order() as u32) * q.order();
            report.note(format!("{}-dimensional; basis bijection (f, q) ↔ u_f # q", order));
            report.absorb("", group_wreath_comparison(&a, &q)?);
        }
        Command::VerifyTheoremL => {
            let a = io::load_lie(need(&config.a, "A", config.command)?)?;
            let q = io::load_lie(need(&config.q, "Q", config.command)?)?;
            let hopf = wreath_hopf_lie(a, q, config.n)?;
            let n = hopf.primitive_basis().len();
            report.note(format!("{n} primitive basis elements, {} pairs", n * n));
            report.absorb("", hopf.bracket_comparison(config.window));
        }
        Command::RoundTrip => round_trip_cmd(config, &mut report)?,
    }
    if config.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn check_axioms_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match (&config.group, &config.lie) {
        (Some(g), None) => {
            let h = GroupAlgebra::new(io::load_group(g)?);
            report.note(format!("group algebra of {}, dimension {}", h.group().name(), h.basis().len()));
            report.absorb("", check_axioms(&h, config.window));
            report.check("random-sweep", random_sweep(&h, config.window, &mut rng));
        }
        (None, Some(l)) => {
            let h = Envelope::new(io::load_lie(l)?, config.n);
            report.note(format!("U({}) up to degree {}, dimension {}", h.lie().name(), config.n, h.basis().len()));
            report.absorb("", check_axioms(&h, config.window));
            report.check("random-sweep", random_sweep(&h, config.window, &mut rng));
        }
        _ => return Err(CliError::Validation("check-axioms needs exactly one of --group, --lie".into())),
    }
    Ok(())
}

/// Random combinations `x, y, z` with small integer coefficients: associativity,
/// multiplicativity of `Δ` and anti-multiplicativity of `S`.
pub fn random_sweep<H: HopfAlgebra>(h: &H, window: Option<usize>, rng: &mut ChaCha8Rng) -> Vec<Vec<String>> {
    const SAMPLES: usize = 12;
    let window = window.or(h.cap());
    let third = window.map(|w| w / 3);
    let basis: Vec<_> = h.basis().into_iter().filter(|b| third.is_none_or(|t| h.degree(b) <= t)).collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let mut pick = || {
        let mut x = LinComb::zero();
        for _ in 0..3 {
            let b = basis[rng.random_range(0..basis.len())].clone();
            x.add_term(b, Scalar::from_integer(rng.random_range(-2i64..=2).into()));
        }
        x
    };
    let mut bad = Vec::new();
    for _ in 0..SAMPLES {
        let (x, y, z) = (pick(), pick(), pick());
        let xy = h.mul(&x, &y);
        let assoc = h.mul(&xy, &z) == h.mul(&x, &h.mul(&y, &z));
        let (dx, dy) = (h.comul(&x), h.comul(&y));
        let mut dxdy = LinComb::zero();
        for ((a1, a2), c) in dx.iter() {
            for ((b1, b2), d) in dy.iter() {
                dxdy.add_scaled(&(c * d), &tensor(&h.product(a1, b1), &h.product(a2, b2)));
            }
        }
        let coprod = h.comul(&xy) == dxdy;
        let anti = h.antipode_of(&xy) == h.mul(&h.antipode_of(&y), &h.antipode_of(&x));
        if !(assoc && coprod && anti) {
            bad.push(vec![h.render(&x), h.render(&y), h.render(&z)]);
        }
    }
    bad
}

fn wreath_group_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let a = io::load_group(need(&config.a, "A", config.command)?)?;
    let q = io::load_group(need(&config.q, "Q", config.command)?)?;
    let expected = a.order().pow(q.order() as u32) * q.order();
    let hopf = wreath_hopf_group(a, q)?;
    let dim = hopf.smash.basis().len();
    report.note(format!("𝕜(A^Q) # 𝕜Q of dimension {dim}"));
    report.check("dimension", if dim == expected { vec![] } else { vec![vec![dim.to_string(), expected.to_string()]] });
    report.absorb("smash", check_axioms(&*hopf.smash, config.window));
    report.absorb("tau", hopf.tau.check(config.window));
    Ok(())
}

fn wreath_lie_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let a = io::load_lie(need(&config.a, "A", config.command)?)?;
    let q = io::load_lie(need(&config.q, "Q", config.command)?)?;
    let hopf = wreath_hopf_lie(a, q, config.n)?;
    let window = config.window.unwrap_or(LIE_ACTION_WINDOW).min(config.n + 1);
    report.note(format!(
        "U(Vect(U(𝔮)≤{}, 𝔞)) # U(𝔮); {} function generators; checks on weighted degree ≤ {window}",
        config.n,
        hopf.space().lie().dim()
    ));
    report.absorb("action", check_module_axioms(&**hopf.smash.action(), Some(window)));
    report.absorb("smash", check_axioms(&*hopf.smash, Some(window)));
    report.absorb("tau", hopf.tau().check(Some(window)));
    Ok(())
}

fn group_pair(config: &RunConfig) -> Result<(Arc<FiniteGroup>, Arc<FiniteGroup>), CliError> {
    let q = io::load_group(need(&config.q, "Q", config.command)?)?;
    let h = io::load_group(need(&config.h, "H", config.command)?)?;
    Ok((Arc::new(q), Arc::new(h)))
}

fn table_action(config: &RunConfig, q: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<TableAction<GroupAlgebra, GroupAlgebra>, CliError> {
    let table = match &config.action {
        Some(path) => io::parse_action_table(&io::load_text(path)?, q, h).map_err(|e| file_error(path, e))?,
        None => Default::default(),
    };
    Ok(TableAction::new(Arc::new(GroupAlgebra::new(q.clone())), Arc::new(GroupAlgebra::new(h.clone())), table))
}

fn file_error(path: &str, e: hopfwreath::Error) -> CliError {
    match e {
        hopfwreath::Error::Parse { path: inner, message } => CliError::Parse { path: format!("{path}:{inner}"), message },
        other => other.into(),
    }
}

fn smash_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let (q, h) = group_pair(config)?;
    let act = table_action(config, &q, &h)?;
    let module = check_module_axioms(&act, config.window);
    let valid = module.passed();
    report.absorb("action", module);
    if valid {
        let s = smash_product(act, config.window)?;
        report.note(format!("𝕜{} # 𝕜{} of dimension {}", h.name(), q.name(), s.basis().len()));
        report.absorb("smash", check_axioms(&s, config.window));
    }
    Ok(())
}

fn crossed_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let (q, h) = group_pair(config)?;
    let act = table_action(config, &q, &h)?;
    let sigma = match &config.cocycle {
        Some(path) => io::parse_cocycle(&io::load_text(path)?, &q, &h).map_err(|e| file_error(path, e))?,
        None => Default::default(),
    };
    let qa = Arc::new(GroupAlgebra::new(q.clone()));
    let one = LinComb::basis(h.identity());
    let cocycle = Cocycle::new(&qa, act.acted(), |pair| sigma.get(pair).cloned().unwrap_or_else(|| one.clone()));
    let cocycle = match cocycle {
        Ok(c) => {
            report.check("cocycle-invertible", vec![]);
            c
        }
        Err(e) => {
            report.check("cocycle-invertible", vec![vec![e.to_string()]]);
            return Ok(());
        }
    };
    let cp = crossed_product(act, cocycle);
    report.absorb("", check_algebra(&cp, config.window));
    let found = basis_group("crossed", &cp);
    if let Some(expect) = &config.expect {
        let target = io::load_group(expect)?;
        let iso = found.as_ref().and_then(|g| find_isomorphism(g, &target));
        let name = format!("isomorphic-to-{}", target.name());
        report.check(name, if iso.is_some() { vec![] } else { vec![vec![target.name().to_string()]] });
    }
    if let Some(g) = found {
        report.note(format!("basis forms a group of order {}; abelian: {}", g.order(), g.is_abelian()));
    }
    Ok(())
}

/// `span(xs) = span(ys)` as a pair of witness lists.
fn same_span<B: Ord + Clone>(xs: &[LinComb<B>], ys: &[LinComb<B>], render: impl Fn(&LinComb<B>) -> String) -> Vec<Vec<String>> {
    let (sx, sy) = (SpanBasis::from_vectors(xs), SpanBasis::from_vectors(ys));
    let mut bad: Vec<Vec<String>> = ys.iter().filter(|y| !sx.contains(y)).map(|y| vec![render(y)]).collect();
    bad.extend(xs.iter().filter(|x| !sy.contains(x)).map(|x| vec![render(x)]));
    bad
}

fn hker_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let path = need(&config.ext, "ext", config.command)?;
    match config.family {
        Family::Group => {
            let ext = io::load_group_extension(path)?;
            let data = linearize_group_extension(&ext);
            let pi = HopfMorphism::new(data.total.clone(), data.quotient.clone(), data.pi.clone());
            let ker = hopf_kernel(&pi);
            let images: Vec<_> = data.iota.iter().map(|(_, v)| v.clone()).collect();
            report.note(format!("hker(π) has dimension {}", ker.len()));
            let (d, a) = (ker.len(), ext.kernel.order());
            report.check("dimension", if d == a { vec![] } else { vec![vec![d.to_string(), a.to_string()]] });
            report.check("image-of-iota", same_span(&ker, &images, |v| data.total.render(v)));
        }
        Family::Lie => {
            let ext = io::load_lie_extension(path)?;
            let data = lie_cleft_data(&ext, config.n);
            let pi = HopfMorphism::new(data.total.clone(), data.quotient.clone(), data.pi.clone());
            let ker = hopf_kernel(&pi);
            let images: Vec<_> = data.iota.iter().map(|(_, v)| v.clone()).collect();
            report.note(format!("hker(π) up to degree {} has dimension {}", config.n + 1, ker.len()));
            let expected = data.kernel.basis().len();
            let d = ker.len();
            report.check("dimension", if d == expected { vec![] } else { vec![vec![d.to_string(), expected.to_string()]] });
            report.check("image-of-iota", same_span(&ker, &images, |v| data.total.render(v)));
        }
    }
    Ok(())
}

enum Algebraic {
    Group(GroupAlgebra),
    Lie(Envelope),
}

fn algebra_input(config: &RunConfig) -> Result<Algebraic, CliError> {
    match (&config.group, &config.lie) {
        (Some(g), None) => Ok(Algebraic::Group(GroupAlgebra::new(io::load_group(g)?))),
        (None, Some(l)) => Ok(Algebraic::Lie(Envelope::new(io::load_lie(l)?, config.n))),
        _ => Err(CliError::Validation(format!("{} needs exactly one of --group, --lie", config.command.name()))),
    }
}

fn group_likes_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let (found, expected, render): (Vec<String>, Vec<String>, _) = match algebra_input(config)? {
        Algebraic::Group(h) => {
            let found = group_likes(&h).iter().map(|v| h.render(v)).collect();
            let expected = h.basis().iter().map(|b| h.label(b)).collect();
            (found, expected, h.group().name().to_string())
        }
        Algebraic::Lie(h) => {
            let found = group_likes(&h).iter().map(|v| h.render(v)).collect();
            (found, vec![h.render(&h.unit())], format!("U({})", h.lie().name()))
        }
    };
    report.note(format!("{} group-likes in {render}", found.len()));
    let missing: Vec<_> = expected.iter().filter(|x| !found.contains(x)).map(|x| vec!["missing".into(), x.clone()]).collect();
    let extra: Vec<_> = found.iter().filter(|x| !expected.contains(x)).map(|x| vec!["extra".into(), x.clone()]).collect();
    report.check("group-likes", missing.into_iter().chain(extra).collect());
    Ok(())
}

fn primitives_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    match algebra_input(config)? {
        Algebraic::Group(h) => {
            let p = primitives_up_to(&h, None);
            report.note(format!("{} primitives in 𝕜{}", p.len(), h.group().name()));
            report.check("primitives", p.iter().map(|v| vec![h.render(v)]).collect());
        }
        Algebraic::Lie(h) => {
            let p = primitives_up_to(&h, Some(config.window.unwrap_or(config.n)));
            let lie: &LieAlgebra = h.lie();
            let degree_one: Vec<_> = (0..lie.dim()).map(|i| h.embed(&LinComb::basis(i))).collect();
            report.note(format!("{} primitives in U({}) up to degree {}", p.len(), lie.name(), config.n));
            let d = p.len();
            report.check("dimension", if d == lie.dim() { vec![] } else { vec![vec![d.to_string(), lie.dim().to_string()]] });
            report.check("degree-one-span", same_span(&p, &degree_one, |v| h.render(v)));
        }
    }
    Ok(())
}

fn conv_inverse_of<H: HopfAlgebra>(h: &H) -> Vec<Vec<String>> {
    let id: LinMap<H::Basis, H::Basis> = identity_map(h);
    match convolution_inverse(&id, h, h) {
        Err(e) => vec![vec![e.to_string()]],
        Ok(kappa) => kappa
            .iter()
            .filter(|(b, v)| **v != h.antipode(b))
            .map(|(b, v)| vec![h.label(b), h.render(v)])
            .collect(),
    }
}

fn conv_inverse_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let bad = match algebra_input(config)? {
        Algebraic::Group(h) => conv_inverse_of(&h),
        Algebraic::Lie(h) => conv_inverse_of(&h),
    };
    report.check("inverse-equals-antipode", bad);
    Ok(())
}

fn round_trip_cmd(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let path = need(&config.ext, "ext", config.command)?;
    match config.family {
        Family::Group => {
            let ext = io::load_group_extension(path)?;
            let trip = group_hopf_round_trip(&ext)?;
            report.note(format!("recovered {} of order {}", trip.recovered.total.name(), trip.recovered.total.order()));
            report.absorb("", trip.report());
        }
        Family::Lie => {
            let ext = io::load_lie_extension(path)?;
            let trip = lie_hopf_round_trip(&ext, config.n)?;
            report.note(format!("recovered a {}-dimensional extension", trip.recovered.total.dim()));
            report.absorb("", trip.report());
        }
    }
    Ok(())
}

/// Parse arguments, run, and return `(output bytes, exit code)`; errors
/// are rendered to a message with exit code 2.
pub fn main_with_args<I, T>(args: I) -> (Vec<u8>, Vec<u8>, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string().into_bytes();
            return if code == 0 { (text, Vec::new(), 0) } else { (Vec::new(), text, 2) };
        }
    };
    let outcome = RunConfig::from_args(args).and_then(|config| run(&config).map(|r| (r, config.mode)));
    match outcome {
        Ok((report, mode)) => {
            let code = report.exit_code();
            (emit_report(&report, mode), Vec::new(), code)
        }
        Err(e) => (Vec::new(), format!("error: {e}\n").into_bytes(), 2),
    }
}
