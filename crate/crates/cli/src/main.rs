//! `sextic`: certification, index queries and monogenity checks for the
//! simplest sextic fields K_m.
//!
//! Exit codes: 0 success, 1 checked and false, 2 invalid input or refusal,
//! 3 internal inconsistency.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use simplest_sextic::arith::int::DEFAULT_TRIAL_BOUND;
use simplest_sextic::arith::resultant::discriminant;
use simplest_sextic::basis::{certify_with_bound, residue_of, template_for, CertificationReport};
use simplest_sextic::field::{defining_polynomial, is_excluded};
use simplest_sextic::monogenity::{
    obstruction_check, scan_range, search_generators, verify_generator_table, CertifiedField, CoordVector,
    IndexFactorization, ScanConfig, ScanRecord, Verdict, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_WORK_LIMIT,
};
use simplest_sextic::{qm_of, Error};

#[derive(Parser)]
#[command(name = "sextic", version, about = "Integral bases and monogenity of the simplest sextic fields")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Trial-division bound for deciding squarefreeness of q_m.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIAL_BOUND, value_parser = clap::value_parser!(u64).range(2..))]
    trial_bound: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct MArg {
    /// The parameter m.
    #[arg(short, value_parser = parse_big, allow_hyphen_values = true)]
    m: BigInt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify the template integral basis for m.
    #[command(allow_negative_numbers = true)]
    Certify(MArg),
    /// Index of elements given by coordinates y2,...,y6.
    #[command(allow_negative_numbers = true)]
    Index(ElemArgs),
    /// The three index-form factors G1, G2, |G3| of elements.
    #[command(allow_negative_numbers = true)]
    Factors(ElemArgs),
    /// Check the shipped generator table (m = 1 or m = -1).
    #[command(name = "verify-table", allow_negative_numbers = true)]
    VerifyTable(MArg),
    /// Search a coordinate box for generators of power integral bases.
    #[command(allow_negative_numbers = true)]
    Search {
        #[command(flatten)]
        m: MArg,
        /// Box half-width: every |y_i| <= bound.
        #[arg(long)]
        bound: u64,
        /// Refuse boxes with more than this many candidates.
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
        work_limit: u64,
    },
    /// Run the congruence obstruction for one m.
    #[command(allow_negative_numbers = true)]
    Obstruction {
        #[command(flatten)]
        m: MArg,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Certify and check every m in a range, one JSON record per line.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[arg(long, value_parser = parse_big, allow_hyphen_values = true)]
        from: BigInt,
        #[arg(long, value_parser = parse_big, allow_hyphen_values = true)]
        to: BigInt,
        /// Write records here; without it they go to stdout and the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Maximum number of parameters.
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        work_limit: u64,
    },
    /// Polynomial discriminant of f_m and the field discriminant.
    #[command(allow_negative_numbers = true)]
    Disc(MArg),
    /// Print the integral basis B_m.
    #[command(allow_negative_numbers = true)]
    Basis(MArg),
}

#[derive(Args)]
struct ElemArgs {
    #[command(flatten)]
    m: MArg,
    /// Coordinates y2,...,y6, comma separated; repeat for several elements.
    #[arg(short, required = true, allow_hyphen_values = true)]
    y: Vec<String>,
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("not a decimal integer: {s:?}"))
}

enum Failure {
    False,
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::False) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("sextic: {e}");
            ExitCode::from(match e {
                Error::Inconsistency(_) => 3,
                _ => 2,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("sextic: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Outcome {
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer(&mut out, value)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", text())?;
    }
    Ok(())
}

fn parse_vectors(raw: &[String]) -> Result<Vec<CoordVector>, Error> {
    raw.iter().map(|s| s.parse()).collect()
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Certify(MArg { m }) => {
            let (report, _) = certify_with_bound(m, cli.trial_bound)?;
            emit(json, &report, || certify_text(&report))?;
            if !report.certified {
                eprintln!("sextic: not certified: {}", report.reason.as_deref().unwrap_or("unknown"));
                return Err(Failure::False);
            }
        }
        Cmd::Index(ElemArgs { m: MArg { m }, y }) => {
            let ys = parse_vectors(y)?;
            let k = CertifiedField::with_bound(m, cli.trial_bound)?;
            let rows = ys
                .iter()
                .map(|y| Ok(IndexRow { y: y.clone(), index: k.index_of(y)? }))
                .collect::<Result<Vec<_>, Error>>()?;
            emit(json, &rows, || {
                if rows.len() == 1 {
                    format!("{}\n", rows[0].index)
                } else {
                    rows.iter().map(|r| format!("{}  {}\n", r.y.to_csv(), r.index)).collect()
                }
            })?;
        }
        Cmd::Factors(ElemArgs { m: MArg { m }, y }) => {
            let ys = parse_vectors(y)?;
            let k = CertifiedField::with_bound(m, cli.trial_bound)?;
            let mut rows = Vec::new();
            for y in &ys {
                let factors = k.index_form_factors(y)?;
                let index = k.index_of(y)?;
                if factors.index() != index {
                    return Err(Error::Inconsistency(format!(
                        "|G1*G2*G3| = {} but index = {index} at y = {y}",
                        factors.index()
                    ))
                    .into());
                }
                if !factors.congruence_holds() {
                    return Err(Error::Inconsistency(format!("27*G1 + G2 is not divisible by q at y = {y}")).into());
                }
                rows.push(FactorRow { y: y.clone(), index: index.to_string(), factors });
            }
            emit(json, &rows, || rows.iter().map(factor_text).collect())?;
        }
        Cmd::VerifyTable(MArg { m }) => {
            let k = CertifiedField::with_bound(m, cli.trial_bound)?;
            let report = verify_generator_table(&k)?;
            emit(json, &report, || {
                let mut s = format!("m = {}: {}/{} vectors have index 1\n", report.m, report.passed, report.checked);
                for f in &report.failures {
                    s += &format!("  FAIL {}  index {}\n", f.y.to_csv(), f.index);
                }
                s
            })?;
            if !report.all_pass() {
                return Err(Failure::False);
            }
        }
        Cmd::Search { m: MArg { m }, bound, work_limit } => {
            let k = CertifiedField::with_bound(m, cli.trial_bound)?;
            let found = search_generators(&k, *bound, *work_limit as u128)?;
            let result = SearchResult { m: m.to_string(), bound: *bound, generators: found };
            emit(json, &result, || {
                let mut s = format!(
                    "m = {}, |y_i| <= {}: {} generator(s) up to sign\n",
                    result.m,
                    result.bound,
                    result.generators.len()
                );
                for y in &result.generators {
                    s += &format!("  {}\n", y.to_csv());
                }
                s
            })?;
        }
        Cmd::Obstruction { m: MArg { m }, samples, seed } => {
            let k = CertifiedField::with_bound(m, cli.trial_bound)?;
            let report = obstruction_check(&k, *samples, *seed)?;
            emit(json, &report, || {
                format!(
                    "m = {}, q = {}: 27*G1 + G2 = 0 mod q at {} random and {} cube points\n{}\n",
                    report.m, report.q, report.random_points, report.cube_points, report.verdict
                )
            })?;
        }
        Cmd::Scan { from, to, out, samples, work_limit } => {
            let cfg = ScanConfig {
                trial_bound: cli.trial_bound,
                samples: *samples,
                seed: DEFAULT_SEED,
                max_span: *work_limit as u128,
            };
            let records = scan_range(from, to, &cfg)?;
            let summary = ScanSummary::new(&records);
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    write_records(&mut w, &records)?;
                    w.flush()?;
                    emit(json, &summary, || summary.text())?;
                }
                None => {
                    write_records(&mut io::stdout().lock(), &records)?;
                    if json {
                        eprintln!("{}", serde_json::to_string(&summary)?);
                    } else {
                        eprint!("{}", summary.text());
                    }
                }
            }
            if summary.inconsistencies > 0 {
                return Err(Error::Inconsistency(format!("{} record(s) reported inconsistencies", summary.inconsistencies)).into());
            }
        }
        Cmd::Disc(MArg { m }) => {
            if is_excluded(m) {
                return Err(Error::Domain(format!("excluded parameter m = {m}: f_m is reducible")).into());
            }
            let q = qm_of(m);
            let disc_f = discriminant(&defining_polynomial(m))?;
            let formula = BigInt::from(46656) * q.pow(5);
            let field_disc = template_for(m)
                .ok()
                .map(|t| BigInt::from(1u32 << (2 * t.ell)) * q.pow(5));
            let result = DiscResult {
                m: m.to_string(),
                q: q.to_string(),
                disc_f: disc_f.to_string(),
                matches_formula: disc_f == formula,
                field_disc: field_disc.map(|d| d.to_string()),
            };
            emit(json, &result, || {
                let mut s = format!(
                    "disc(f_m) = {}\n6^6 * q^5 = {} ({})\n",
                    result.disc_f,
                    formula,
                    if result.matches_formula { "equal" } else { "DIFFERENT" }
                );
                match &result.field_disc {
                    Some(d) => s += &format!("D_K (template, needs certification) = {d}\n"),
                    None => s += "no template applies (3 | m)\n",
                }
                s
            })?;
            if !result.matches_formula {
                return Err(Error::Inconsistency("disc(f_m) != 6^6 * q_m^5".into()).into());
            }
        }
        Cmd::Basis(MArg { m }) => {
            if is_excluded(m) {
                return Err(Error::Domain(format!("excluded parameter m = {m}: f_m is reducible")).into());
            }
            let t = template_for(m)?;
            let elements: Vec<BasisRow> = (0..6)
                .map(|i| BasisRow { numerator: t.numerator(i).to_string(), denominator: t.denominator(i) })
                .collect();
            let result = BasisResult { m: m.to_string(), residue: residue_of(m), ell: t.ell, elements };
            emit(json, &result, || {
                let mut s = format!("m = {} (residue {} mod 36, ell = {}), x = alpha_m:\n", result.m, result.residue, result.ell);
                for (i, e) in result.elements.iter().enumerate() {
                    if e.denominator == 1 {
                        s += &format!("  b{} = {}\n", i + 1, e.numerator);
                    } else {
                        s += &format!("  b{} = ({}) / {}\n", i + 1, e.numerator, e.denominator);
                    }
                }
                s
            })?;
        }
    }
    Ok(())
}

fn write_records<W: Write>(w: &mut W, records: &[ScanRecord]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

fn certify_text(r: &CertificationReport) -> String {
    let mut s = format!("m = {}, q = {} ({:?})\n", r.m, r.q, r.q_squarefree);
    if let (Some(res), Some(ell)) = (r.residue, r.ell) {
        s += &format!("residue {res} mod 36, ell = {ell}\n");
    }
    if let Some(d) = &r.disc_computed {
        s += &format!("disc = {d}\n");
    }
    for e in &r.maximality_evidence {
        let p = e.prime.as_ref().map_or("others".to_string(), |p| p.to_string());
        s += &format!("  p = {p}: {:?} {}\n", e.method, if e.verdict { "ok" } else { "FAILED" });
    }
    s += if r.certified { "certified\n" } else { "not certified\n" };
    s
}

fn factor_text(r: &FactorRow) -> String {
    let f = &r.factors;
    format!(
        "{}: F1 = {}, F2 = {}, N3 = {}\n  G1 = {}, G2 = {}, |G3| = {}, index = {}, (27*G1 + G2) mod q = {}\n",
        r.y.to_csv(),
        f.f1,
        f.f2,
        f.n3,
        f.g1,
        f.g2,
        f.abs_g3,
        r.index,
        f.congruence_residue()
    )
}

#[derive(Serialize)]
struct IndexRow {
    y: CoordVector,
    #[serde(serialize_with = "as_decimal")]
    index: BigInt,
}

fn as_decimal<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Serialize)]
struct FactorRow {
    y: CoordVector,
    index: String,
    #[serde(flatten)]
    factors: IndexFactorization,
}

#[derive(Serialize)]
struct SearchResult {
    m: String,
    bound: u64,
    generators: Vec<CoordVector>,
}

#[derive(Serialize)]
struct DiscResult {
    m: String,
    q: String,
    disc_f: String,
    matches_formula: bool,
    field_disc: Option<String>,
}

#[derive(Serialize)]
struct BasisRow {
    numerator: String,
    denominator: u32,
}

#[derive(Serialize)]
struct BasisResult {
    m: String,
    residue: u32,
    ell: u32,
    elements: Vec<BasisRow>,
}

#[derive(Serialize)]
struct ScanSummary {
    scanned: usize,
    certified: usize,
    skipped: usize,
    inconsistencies: usize,
    non_monogenic: usize,
    monogenic_possible: Vec<String>,
}

impl ScanSummary {
    fn new(records: &[ScanRecord]) -> Self {
        let certified = records.iter().filter(|r| r.certified).count();
        Self {
            scanned: records.len(),
            certified,
            skipped: records.len() - certified,
            inconsistencies: records
                .iter()
                .filter(|r| r.skipped_reason.as_deref().is_some_and(|s| s.starts_with("internal inconsistency")))
                .count(),
            non_monogenic: records.iter().filter(|r| r.verdict == Some(Verdict::NonMonogenic)).count(),
            monogenic_possible: records
                .iter()
                .filter(|r| r.verdict == Some(Verdict::MonogenicPossible))
                .map(|r| r.m.to_string())
                .collect(),
        }
    }

    fn text(&self) -> String {
        format!(
            "scanned {}: {} certified, {} skipped, {} non-monogenic\nmonogenic-possible: {}\n",
            self.scanned,
            self.certified,
            self.skipped,
            self.non_monogenic,
            if self.monogenic_possible.is_empty() { "none".to_string() } else { self.monogenic_possible.join(", ") }
        )
    }
}
