use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use lgkit::braid::lg_of_braid;
use lgkit::checks::{seq_checks_1d, Conjecture};
use lgkit::families::{alexander_from_lg, square_specialization_check, FamilySpec};
use lgkit::lorentzian::{
    clear_denominators, fixture, fixtures, homogenize, is_denorm_lorentzian, is_lorentzian,
    shift_to_poly,
};
use lgkit::rmatrix::{build_h, build_r, invert_r, verify_axioms, YMatrix};
use lgkit::{parse_braid, ArbInt, CoeffTable, Error};
use num_traits::Signed;
use rayon::prelude::*;

use crate::polyfile::PolyFile;
use crate::report::Report;
use crate::tablefile::TableFile;
use crate::{plot, read_text, write_atomic, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "lgkit",
    version,
    about = "Links–Gould invariants and coefficient checks"
)]
pub struct Cli {
    /// Leave `elapsed-ms` out of reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LG of the closure of a braid word such as "1 1 1" or "n=3 1 -2".
    Braid(BraidArgs),
    /// Closed-form LG of a (2, n)-torus link or a twist knot.
    Family(FamilyArgs),
    /// Run coefficient checks on table files.
    Check(CheckArgs),
    /// Lorentzian test of a polynomial file or a built-in fixture.
    Lorentzian(LorentzianArgs),
    /// Alexander polynomial and the square specialization of LG.
    Alexander(AlexanderArgs),
    /// Verify the enhanced R-matrix identities.
    Axioms,
    /// SVG heatmap of |a_ij| plus a text table.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct TableOut {
    /// Comma-separated checks (sign, zeros, logconcave2d, unimodal2d) or `all`.
    #[arg(long)]
    pub check: Option<String>,
    /// Write the table here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(allow_hyphen_values = true)]
    pub word: String,
    #[command(flatten)]
    pub out: TableOut,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyKindArg {
    Torus,
    Twist,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub kind: FamilyKindArg,
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    /// Compare against the braid engine when a braid word is known.
    #[arg(long)]
    pub cross_validate: bool,
    #[command(flatten)]
    pub out: TableOut,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "input_dir"])))]
pub struct CheckArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Check every `*.table` file in a directory, in parallel.
    #[arg(long)]
    pub input_dir: Option<PathBuf>,
    /// With --input-dir: write `<name>.report` files here.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long, default_value = "all")]
    pub conjectures: String,
    /// Apply t0, t1 -> 1/t0, 1/t1 before checking.
    #[arg(long)]
    pub invert_vars: bool,
    /// Treat the input as a list of integers and run the sequence checks on |a_k|.
    #[arg(long)]
    pub one_d: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "fixture", "list_fixtures"])))]
pub struct LorentzianArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub list_fixtures: bool,
    /// Per-variable signs for w_i -> ±w_i, e.g. "-,+".
    #[arg(long, allow_hyphen_values = true)]
    pub signs: Option<String>,
    /// Divide out the largest monomial instead of only clearing denominators.
    #[arg(long)]
    pub shift: bool,
    #[arg(long)]
    pub homogenize: bool,
    /// Test the normalization (coefficients divided by α!) instead of the polynomial itself.
    #[arg(long)]
    pub denormalized: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["braid", "input"])))]
pub struct AlexanderArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long)]
    pub title: Option<String>,
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    timing: bool,
    start: Instant,
}

impl Ctx<'_> {
    fn print(&mut self, s: &str) -> Result<(), CliError> {
        self.out.write_all(s.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            source: e,
        })
    }

    fn render(&self, r: &Report) -> String {
        r.render(self.timing.then(|| self.start.elapsed()))
    }

    fn emit_report(&mut self, r: &Report, to: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(r);
        match to {
            Some(p) => write_atomic(p, text.as_bytes()),
            None => self.print(&text),
        }
    }
}

/// Runs one command; `Ok(false)` means a check failed.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    let mut ctx = Ctx {
        out,
        timing: !cli.no_timing,
        start: Instant::now(),
    };
    match cli.command {
        Command::Braid(a) => cmd_braid(&mut ctx, a),
        Command::Family(a) => cmd_family(&mut ctx, a),
        Command::Check(a) => cmd_check(&mut ctx, a),
        Command::Lorentzian(a) => cmd_lorentzian(&mut ctx, a),
        Command::Alexander(a) => cmd_alexander(&mut ctx, a),
        Command::Axioms => cmd_axioms(&mut ctx),
        Command::Plot(a) => cmd_plot(&mut ctx, a),
    }
}

pub fn parse_conjectures(list: &str) -> Result<Vec<Conjecture>, Error> {
    if list.trim() == "all" {
        return Ok(Conjecture::ALL.to_vec());
    }
    let mut v: Vec<Conjecture> = list
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

fn run_conjectures(r: &mut Report, t: &CoeffTable, list: &[Conjecture]) -> Result<(), Error> {
    for c in list {
        let v = c.check(t)?;
        r.verdict(&format!("conjecture.{}", c.name()), &v);
    }
    Ok(())
}

/// Prints or writes the table, then the report when checks were requested.
fn emit_table(
    ctx: &mut Ctx,
    tf: &TableFile,
    out: &TableOut,
    mut report: Report,
    force_report: bool,
) -> Result<bool, CliError> {
    match &out.output {
        Some(p) => tf.write(p)?,
        None => ctx.print(&tf.render())?,
    }
    if let Some(list) = &out.check {
        run_conjectures(&mut report, &tf.table, &parse_conjectures(list)?)?;
    } else if !force_report {
        return Ok(true);
    }
    if out.output.is_none() && out.report.is_none() {
        ctx.print("\n")?;
    }
    ctx.emit_report(&report, out.report.as_deref())?;
    Ok(report.pass())
}

fn cmd_braid(ctx: &mut Ctx, a: BraidArgs) -> Result<bool, CliError> {
    let b = parse_braid(&a.word)?;
    let tf = TableFile::new(lg_of_braid(&b)?, Some(format!("braid {b}")));
    let mut r = Report::new("braid", &b.to_string(), tf.render().as_bytes());
    r.field("components", b.components());
    emit_table(ctx, &tf, &a.out, r, false)
}

fn cmd_family(ctx: &mut Ctx, a: FamilyArgs) -> Result<bool, CliError> {
    let spec = match a.kind {
        FamilyKindArg::Torus => FamilySpec::torus(a.n),
        FamilyKindArg::Twist => FamilySpec::twist(a.n),
    };
    let tf = TableFile::new(spec.lg()?, Some(format!("family {spec}")));
    let mut r = Report::new("family", &spec.to_string(), tf.render().as_bytes());
    if a.cross_validate {
        match spec.braid_word() {
            Some(w) => {
                let b = parse_braid(&w)?;
                let same = lg_of_braid(&b)? == tf.table;
                r.field("cross-validate.braid", &b);
                r.field("cross-validate", if same { "pass" } else { "fail" });
                if !same {
                    r.fail();
                }
            }
            None => r.field("cross-validate", "unavailable"),
        }
    }
    emit_table(ctx, &tf, &a.out, r, a.cross_validate)
}

/// Integers separated by whitespace or commas; `#` starts a comment.
fn parse_sequence(text: &str) -> Result<Vec<ArbInt>, Error> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<ArbInt>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        })
        .collect()
}

fn check_one(path: &Path, a: &CheckArgs, list: &[Conjecture]) -> Result<Report, CliError> {
    let text = read_text(path)?;
    let name = path.display().to_string();
    let mut r = Report::new("check", &name, text.as_bytes());
    if a.one_d {
        let seq = parse_sequence(&text).map_err(|e| CliError::in_file(path, e))?;
        let abs: Vec<ArbInt> = seq.iter().map(|c| c.abs()).collect();
        r.field(
            "sequence",
            abs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        r.seq(&seq_checks_1d(&abs)?);
        return Ok(r);
    }
    let mut tf = TableFile::parse(&text).map_err(|e| CliError::in_file(path, e))?;
    if a.invert_vars {
        tf = tf.invert_vars();
    }
    r.field("invert-vars", a.invert_vars);
    r.field(
        "mu",
        tf.table
            .mu
            .map_or_else(|| "none".to_string(), |m| m.to_string()),
    );
    run_conjectures(&mut r, &tf.table, list).map_err(|e| CliError::in_file(path, e))?;
    Ok(r)
}

fn cmd_check(ctx: &mut Ctx, a: CheckArgs) -> Result<bool, CliError> {
    let list = parse_conjectures(&a.conjectures)?;
    if let Some(p) = &a.input {
        let r = check_one(p, &a, &list)?;
        ctx.emit_report(&r, None)?;
        return Ok(r.pass());
    }
    let dir = a.input_dir.as_deref().expect("clap requires a source");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Io {
            path: dir.display().to_string(),
            source: e,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "table"))
        .collect();
    files.sort();
    if let Some(od) = &a.out_dir {
        std::fs::create_dir_all(od).map_err(|e| CliError::Io {
            path: od.display().to_string(),
            source: e,
        })?;
    }
    let timing = ctx.timing;
    let results: Vec<(PathBuf, Result<Report, CliError>)> = files
        .par_iter()
        .map(|p| {
            let start = Instant::now();
            let res = check_one(p, &a, &list).and_then(|r| {
                if let Some(od) = &a.out_dir {
                    let stem = p.file_stem().unwrap_or_default().to_string_lossy();
                    let text = r.render(timing.then(|| start.elapsed()));
                    write_atomic(&od.join(format!("{stem}.report")), text.as_bytes())?;
                }
                Ok(r)
            });
            (p.clone(), res)
        })
        .collect();
    let (mut pass, mut errors) = (true, 0);
    for (p, res) in &results {
        match res {
            Ok(r) if a.out_dir.is_some() => {
                let v = if r.pass() { "pass" } else { "fail" };
                ctx.print(&format!("{}: {v}\n", p.display()))?;
            }
            Ok(r) => {
                let text = ctx.render(r);
                ctx.print(&text)?;
                ctx.print("\n")?;
            }
            Err(e) => {
                errors += 1;
                ctx.print(&format!("{}: error {e}\n", p.display()))?;
            }
        }
        pass &= res.as_ref().is_ok_and(Report::pass);
    }
    if errors > 0 {
        return Err(CliError::Usage(format!(
            "{errors} of {} inputs could not be checked",
            results.len()
        )));
    }
    Ok(pass)
}

fn parse_signs(s: &str) -> Result<Vec<i8>, Error> {
    let toks: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    toks.iter()
        .map(|t| match *t {
            "-" | "-1" => Ok(-1),
            "+" | "1" | "+1" => Ok(1),
            _ => Err(Error::Parse(format!("bad sign `{t}`; use + or -"))),
        })
        .collect()
}

fn cmd_lorentzian(ctx: &mut Ctx, a: LorentzianArgs) -> Result<bool, CliError> {
    if a.list_fixtures {
        for f in fixtures() {
            ctx.print(&format!("{}: {}\n", f.name, f.description))?;
        }
        return Ok(true);
    }
    if let Some(name) = &a.fixture {
        let f = fixture(name).ok_or_else(|| {
            CliError::Usage(format!("unknown fixture `{name}`; see --list-fixtures"))
        })?;
        let p = f.prepared();
        let shown = p.display_with(&f.vars);
        let mut r = Report::new("lorentzian", &format!("fixture {name}"), shown.as_bytes());
        r.field("description", f.description);
        r.field("polynomial", &shown);
        r.field("test", "denormalized");
        r.lorentz(&is_denorm_lorentzian(&p)?);
        ctx.emit_report(&r, None)?;
        return Ok(r.pass());
    }
    let path = a.input.as_deref().expect("clap requires a source");
    let pf = PolyFile::read(path)?;
    let signs = a
        .signs
        .as_deref()
        .map(parse_signs)
        .transpose()?
        .unwrap_or_default();
    if signs.len() > pf.vars.len() {
        return Err(CliError::Usage(format!(
            "{} signs for {} variables",
            signs.len(),
            pf.vars.len()
        )));
    }
    let mut p = if a.shift {
        shift_to_poly(&pf.poly, &signs)
    } else {
        clear_denominators(&pf.poly, &signs)
    };
    let mut names: Vec<&str> = pf.vars.iter().map(String::as_str).collect();
    if a.homogenize {
        p = homogenize(&p);
        names.push("z");
    }
    let shown = p.display_with(&names);
    let mut r = Report::new(
        "lorentzian",
        &path.display().to_string(),
        read_text(path)?.as_bytes(),
    );
    r.field("polynomial", &shown);
    r.field(
        "test",
        if a.denormalized {
            "denormalized"
        } else {
            "plain"
        },
    );
    let v = if a.denormalized {
        is_denorm_lorentzian(&p)
    } else {
        is_lorentzian(&p)
    }
    .map_err(|e| match e {
        Error::NotHomogeneous => CliError::Usage(format!("{e}; pass --homogenize")),
        e => e.into(),
    })?;
    r.lorentz(&v);
    ctx.emit_report(&r, None)?;
    Ok(r.pass())
}

fn cmd_alexander(ctx: &mut Ctx, a: AlexanderArgs) -> Result<bool, CliError> {
    let (name, t) = match (&a.braid, &a.input) {
        (Some(w), _) => {
            let b = parse_braid(w)?;
            (b.to_string(), lg_of_braid(&b)?)
        }
        (None, Some(p)) => (p.display().to_string(), TableFile::read(p)?.table),
        (None, None) => unreachable!("clap requires a source"),
    };
    let canonical = TableFile::new(t.clone(), None).render();
    let mut r = Report::new("alexander", &name, canonical.as_bytes());
    let alex = alexander_from_lg(&t)?;
    r.field("alexander", &alex);
    r.field("alexander.t0-squared", &alex.doubled);
    r.field(
        "alexander.coefficients",
        alex.coefficients()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    let sq = square_specialization_check(&t);
    r.field("square", if sq.pass { "pass" } else { "fail" });
    r.field("square.specialized", &sq.specialized);
    if let Some(root) = &sq.root {
        r.field("square.root", &root.root);
        r.field("square.shift", root.shift);
    } else {
        r.fail();
    }
    ctx.emit_report(&r, None)?;
    Ok(r.pass())
}

fn cmd_axioms(ctx: &mut Ctx) -> Result<bool, CliError> {
    let (rm, h) = (build_r(), build_h());
    let mut r = Report::new("axioms", "R_LG, h_LG", b"");
    for a in verify_axioms(&rm, &h).results {
        r.field(
            &format!("axiom.{}", a.name),
            if a.pass { "pass" } else { "fail" },
        );
        if let Some(w) = a.witness {
            r.field(&format!("axiom.{}.witness", a.name), w);
        }
        if !a.pass {
            r.fail();
        }
    }
    let inv = invert_r(&rm)?;
    let ok = &rm.0 * &inv.0 == YMatrix::identity(16);
    r.field("inverse", if ok { "pass" } else { "fail" });
    if !ok {
        r.fail();
    }
    ctx.emit_report(&r, None)?;
    Ok(r.pass())
}

fn cmd_plot(ctx: &mut Ctx, a: PlotArgs) -> Result<bool, CliError> {
    let tf = TableFile::read(&a.input)?;
    let title = a
        .title
        .or_else(|| tf.source.clone())
        .unwrap_or_else(|| a.input.display().to_string());
    write_atomic(&a.output, plot::svg(&tf.table, &title).as_bytes())?;
    ctx.print(&plot::text(&tf.table))?;
    Ok(true)
}
