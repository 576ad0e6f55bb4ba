//! Command-line front end for `detrep`.
//!
//! Exit codes: 0 success, 1 negative result (not equivalent, not generic,
//! certificate rejected, ...), 2 malformed input or violated precondition,
//! 3 internal invariant violation.

pub mod format;
pub mod selftest;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use detrep::curve::{rank_profile, reconstruct_bundle_pair, restrict_to_param_curve, CurveError};
use detrep::generate::{gen_curve_instance_with, gen_frobenius_instance, CurveGenOptions, GenError};
use detrep::linform::SampleField;
use detrep::{frobenius_decompose, tangent_cone_leading_form, verify_certificate, FrobeniusError};
use format::{Body, FieldTag, InstanceFile};

#[derive(Parser, Debug)]
#[command(name = "detrep", version, about = "Exact determinantal representations")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    pub trials: usize,
    /// `q` for the rationals or `p:<prime>`; the prime field only drives
    /// randomized probes.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: FieldTag,
    /// Output file, or directory for `gen`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldTag, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Determinant of a matrix of linear forms.
    Det { matrix: PathBuf },
    /// Multiplicity and leading form of a polynomial at each point.
    TangentCone { poly: PathBuf, points: PathBuf },
    /// Entry independence and randomized minor genericity.
    CheckGeneric { matrix: PathBuf },
    /// Decide whether A = S B T or A = S B^t T and emit the certificate.
    Frobenius { a: PathBuf, b: PathBuf },
    /// Check a certificate against A and B.
    Verify { a: PathBuf, b: PathBuf, certificate: PathBuf },
    /// Restrict a matrix to a parametrized curve.
    Restrict { matrix: PathBuf, curve: PathBuf },
    /// Generic rank and drop locus along a curve.
    RankProfile { matrix: PathBuf, curve: PathBuf },
    /// Candidate bundles of a representation restricted to a curve.
    Reconstruct {
        alpha: PathBuf,
        curve: PathBuf,
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Generate seeded instances into the `--out` directory.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run the property suite.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Writes `a.txt`, `b.txt` and the planted `certificate.txt`.
    Frobenius {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        transposed: bool,
    },
    /// Writes `lambda.txt` and `curve.txt`.
    Curve {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        drop_roots: usize,
    },
}

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Negative(String),
    #[error("{0}")]
    Malformed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Malformed(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<FrobeniusError> for Failure {
    fn from(e: FrobeniusError) -> Self {
        match e {
            FrobeniusError::NotEquivalent(_) => Failure::Negative(e.to_string()),
            FrobeniusError::ShapeMismatch | FrobeniusError::DependentEntries(_) => Failure::Malformed(e.to_string()),
            FrobeniusError::BothBranchesSucceed { .. } | FrobeniusError::VerificationFailed => {
                Failure::Internal(e.to_string())
            }
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Frobenius(f) => f.into(),
            CurveError::NotContained | CurveError::RankUnexpected { .. } => Failure::Negative(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Self {
        Failure::Malformed(e.to_string())
    }
}

/// Parses `argv` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            f.exit_code()
        }
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Malformed(e.to_string())
}

fn read_file(path: &Path) -> Result<InstanceFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    InstanceFile::parse(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

macro_rules! expect_kind {
    ($path:expr, $variant:ident) => {{
        let file = read_file($path)?;
        match file.body {
            Body::$variant(v) => v,
            other => {
                return Err(Failure::Malformed(format!(
                    "{}: expected {}, found {}",
                    $path.display(),
                    stringify!($variant),
                    other.kind()
                )))
            }
        }
    }};
}

/// Writes to `--out` when given, else to stdout.
fn emit(cfg: &RunConfig, out: &mut dyn Write, body: Body) -> Result<(), Failure> {
    let text = InstanceFile::new(cfg.field, body).serialize();
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(io_err),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn check_field(cfg: &RunConfig, r: usize) -> Result<SampleField, Failure> {
    match cfg.field {
        FieldTag::Rationals => Ok(SampleField::Rationals),
        FieldTag::Prime(p) if p > r as u64 + 1 => Ok(SampleField::Prime(p)),
        FieldTag::Prime(p) => Err(Failure::Malformed(format!("prime {p} must exceed r+1 = {}", r + 1))),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Det { matrix } => {
            let m = expect_kind!(matrix, LinFormMatrix);
            let det = m.determinant_hypersurface();
            writeln!(out, "{det}").map_err(io_err)?;
            if cfg.out.is_some() {
                emit(cfg, out, Body::MultiPoly(det))?;
            }
            Ok(())
        }
        Command::TangentCone { poly, points } => {
            let f = expect_kind!(poly, MultiPoly);
            let pts = expect_kind!(points, Points);
            if cfg.out.is_some() && pts.points().len() != 1 {
                return Err(Failure::Malformed("--out needs exactly one point".into()));
            }
            let mut last = None;
            for (i, p) in pts.points().iter().enumerate() {
                let lf = tangent_cone_leading_form(&f, p).map_err(|e| Failure::Malformed(e.to_string()))?;
                writeln!(out, "point {}: multiplicity {}, leading form {}", i + 1, lf.multiplicity, lf.form)
                    .map_err(io_err)?;
                last = Some(lf.form);
            }
            if let (Some(_), Some(form)) = (&cfg.out, last) {
                emit(cfg, out, Body::MultiPoly(form))?;
            }
            Ok(())
        }
        Command::CheckGeneric { matrix } => {
            let m = expect_kind!(matrix, LinFormMatrix);
            let field = check_field(cfg, m.r())?;
            let independent = m.entry_independence_check();
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let generic = m
                .genericity_probe_in(field, cfg.trials, &mut rng)
                .map_err(|e| Failure::Malformed(e.to_string()))?;
            writeln!(out, "entries independent: {independent}\nminors generic: {generic}").map_err(io_err)?;
            if independent && generic {
                Ok(())
            } else {
                Err(Failure::Negative("matrix is not generic".into()))
            }
        }
        Command::Frobenius { a, b } => {
            let a = expect_kind!(a, LinFormMatrix);
            let b = expect_kind!(b, LinFormMatrix);
            let cert = frobenius_decompose(&a, &b)?;
            emit(cfg, out, Body::Certificate(cert))
        }
        Command::Verify { a, b, certificate } => {
            let a = expect_kind!(a, LinFormMatrix);
            let b = expect_kind!(b, LinFormMatrix);
            let cert = expect_kind!(certificate, Certificate);
            let ok = verify_certificate(&a, &b, &cert);
            writeln!(out, "{ok}").map_err(io_err)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Negative("certificate does not verify".into()))
            }
        }
        Command::Restrict { matrix, curve } => {
            let m = expect_kind!(matrix, LinFormMatrix);
            let c = expect_kind!(curve, Curve);
            emit(cfg, out, Body::UniPolyMatrix(restrict_to_param_curve(&m, &c)?))
        }
        Command::RankProfile { matrix, curve } => {
            let m = expect_kind!(matrix, LinFormMatrix);
            let c = expect_kind!(curve, Curve);
            emit(cfg, out, Body::RankProfile(rank_profile(&restrict_to_param_curve(&m, &c)?)))
        }
        Command::Reconstruct { alpha, curve, reference } => {
            let alpha = expect_kind!(alpha, LinFormMatrix);
            let c = expect_kind!(curve, Curve);
            let reference = match reference {
                Some(path) => Some(expect_kind!(path, LinFormMatrix)),
                None => None,
            };
            let report = reconstruct_bundle_pair(&alpha, &c, reference.as_ref())?;
            emit(cfg, out, Body::Report(Box::new(report)))
        }
        Command::Gen(g) => generate(cfg, g, out),
        Command::Selftest => {
            let ok = selftest::run(cfg, out).map_err(io_err)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Internal("selftest failed".into()))
            }
        }
    }
}

fn generate(cfg: &RunConfig, cmd: &GenCommand, out: &mut dyn Write) -> Result<(), Failure> {
    let dir = cfg.out.as_ref().ok_or_else(|| Failure::Malformed("gen needs --out <directory>".into()))?;
    std::fs::create_dir_all(dir).map_err(io_err)?;
    let files: Vec<(&str, Body)> = match *cmd {
        GenCommand::Frobenius { r, g, transposed } => {
            let inst = gen_frobenius_instance(r, g, transposed, cfg.seed)?;
            let c = inst.s0.det().expect("square") * inst.t0.det().expect("square");
            let planted = detrep::EquivalenceCertificate { s: inst.s0, t: inst.t0, transposed, c };
            vec![
                ("a.txt", Body::LinFormMatrix(inst.a)),
                ("b.txt", Body::LinFormMatrix(inst.b)),
                ("certificate.txt", Body::Certificate(planted)),
            ]
        }
        GenCommand::Curve { r, g, degree, drop_roots } => {
            let inst = if drop_roots == 0 {
                detrep::gen_curve_instance(r, g, degree, cfg.seed)?
            } else {
                let opts = CurveGenOptions { drop_roots, ..Default::default() };
                gen_curve_instance_with(r, g, degree, cfg.seed, &opts)?
            };
            vec![("lambda.txt", Body::LinFormMatrix(inst.lambda)), ("curve.txt", Body::Curve(inst.curve))]
        }
    };
    for (name, body) in files {
        let path = dir.join(name);
        std::fs::write(&path, InstanceFile::new(cfg.field, body).serialize()).map_err(io_err)?;
        writeln!(out, "{}", path.display()).map_err(io_err)?;
    }
    Ok(())
}
