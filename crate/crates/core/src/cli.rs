//! The `flatsym` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 mathematical check failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};

use crate::catalog::{self, ExpectedClass};
use crate::document::{self, AlgebraDocument, DocumentError, Meta, PairDocument};
use crate::extension::{self, AdmissiblePair, ExtensionError};
use crate::linalg::{format_scalar, Matrix, Scalar};
use crate::symplectic::{ProductTensor, SymplecticLieAlgebra};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "flatsym",
    version,
    about = "Exact checks on flat symplectic Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    Flat,
    Structure,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and report flatness and structural facts.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        report: ReportKind,
    },
    /// Double-extend a flat base by (ξ, b0).
    Extend {
        /// Base document.
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        base: Option<PathBuf>,
        /// Use a catalog entry as the base.
        #[arg(long)]
        catalog: Option<String>,
        /// `zero`, an inline matrix like `[[0,1],[0,0]]`, or a file holding a
        /// matrix or a pair document. Defaults to zero.
        #[arg(long)]
        xi: Option<String>,
        /// Comma-separated coordinates of b0. Defaults to zero, or to the
        /// pair document given with --xi.
        #[arg(long, allow_hyphen_values = true)]
        b0: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Undo one double extension, or all of them with --auto.
    Reduce {
        file: PathBuf,
        /// Reduce repeatedly down to {0} and print the tower.
        #[arg(long, conflicts_with_all = ["center_index", "out"])]
        auto: bool,
        /// Reduce along the k-th (0-based) canonical center vector.
        #[arg(long)]
        center_index: Option<usize>,
        /// Where to write the base document.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the pair (with --auto, the tower of pairs from {0} up).
        #[arg(long)]
        pair_out: Option<PathBuf>,
    },
    /// Name the isomorphism class of an algebra of dimension ≤ 6.
    Classify { file: PathBuf },
    /// Browse the built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    Export { name: String, file: Option<PathBuf> },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { file, report } => verify(&file, report, out),
        Command::Extend {
            base,
            catalog,
            xi,
            b0,
            out: target,
        } => extend(
            base.as_deref(),
            catalog.as_deref(),
            xi.as_deref(),
            b0.as_deref(),
            target.as_deref(),
            out,
        ),
        Command::Reduce {
            file,
            auto,
            center_index,
            out: target,
            pair_out,
        } => reduce(
            &file,
            auto,
            center_index,
            target.as_deref(),
            pair_out.as_deref(),
            out,
        ),
        Command::Classify { file } => classify(&file, out),
        Command::Catalog { action } => catalog_cmd(action, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn check(message: impl ToString) -> Self {
        Failure {
            code: EXIT_CHECK,
            message: message.to_string(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::NotSymplectic(_) => Failure::check(e),
            _ => Failure::input(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

type CmdResult = Result<i32, Failure>;

fn load(path: &Path) -> Result<(SymplecticLieAlgebra, Option<Meta>), Failure> {
    let doc = AlgebraDocument::load(path)?;
    Ok((doc.to_algebra()?, doc.meta))
}

fn verify(path: &Path, kind: ReportKind, out: &mut dyn Write) -> CmdResult {
    let (s, _) = load(path)?;
    let mut ok = true;
    match kind {
        ReportKind::Flat => {
            let flat = s.is_flat();
            writeln!(out, "flat: {}", if flat { "yes" } else { "no" })?;
            ok &= flat;
        }
        ReportKind::Structure | ReportKind::All => {
            let report = s.structural_report();
            write!(out, "{report}")?;
            ok &= report.all_hold();
            if kind == ReportKind::All {
                ok &= report.flat;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK })
}

fn parse_xi(spec: &str) -> Result<(Matrix, Option<Vec<Scalar>>), Failure> {
    let spec = spec.trim();
    if spec.starts_with('[') {
        return Ok((document::parse_matrix(spec)?, None));
    }
    let text = document::read_file(Path::new(spec))?;
    if let Ok(pair) = PairDocument::parse(&text) {
        let pair = pair.to_pair()?;
        return Ok((pair.xi, Some(pair.b0)));
    }
    Ok((document::parse_matrix(&text)?, None))
}

fn extend(
    base_path: Option<&Path>,
    catalog_name: Option<&str>,
    xi: Option<&str>,
    b0: Option<&str>,
    target: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let base = match (base_path, catalog_name) {
        (_, Some(name)) => catalog::get(name).map_err(Failure::input)?.algebra,
        (Some(path), None) => load(path)?.0,
        (None, None) => return Err(Failure::input("a base document or --catalog is required")),
    };
    let m = base.dim();
    let (xi, pair_b0) = match xi {
        None | Some("zero") => (Matrix::zeros(m, m), None),
        Some(spec) => parse_xi(spec)?,
    };
    let b0 = match (b0, pair_b0) {
        (Some(text), _) => document::parse_vector(text)?,
        (None, Some(v)) => v,
        (None, None) => vec![Scalar::zero(); m],
    };
    let pair = AdmissiblePair::new(xi, b0);
    match extension::double_extend(&base, &pair) {
        Ok((g, _)) => {
            write!(out, "{}", extension::check_admissible(&base, &pair))?;
            writeln!(out, "extension: dim {}", g.dim())?;
            if let Ok(class) = catalog::classify_upto6(g.algebra()) {
                writeln!(out, "class: {}", class.map_or("Unknown", |c| c.name()))?;
            }
            emit(
                &AlgebraDocument::from_algebra(&g, None).to_json(),
                target,
                out,
            )?;
            Ok(EXIT_OK)
        }
        Err(ExtensionError::NotAdmissible(report)) => {
            write!(out, "{report}")?;
            Err(Failure::check(format!(
                "pair is not admissible ({} violated)",
                report.failed().join(", ")
            )))
        }
        Err(e @ ExtensionError::DimensionMismatch { .. }) => Err(Failure::input(e)),
        Err(e) => Err(Failure::check(e)),
    }
}

fn emit(text: &str, target: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match target {
        Some(path) => Ok(document::write_file(path, text)?),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn format_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

fn reduce(
    path: &Path,
    auto: bool,
    center_index: Option<usize>,
    target: Option<&Path>,
    pair_out: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let (s, _) = load(path)?;
    if !s.is_flat() {
        return Err(Failure::check("input is not flat"));
    }
    if auto {
        let steps = extension::reduction_tower(&s).map_err(Failure::check)?;
        writeln!(out, "tower length: {}", steps.len())?;
        let mut dim = s.dim();
        for (k, step) in steps.iter().enumerate() {
            writeln!(
                out,
                "step {}: dim {} -> dim {}, b0 = {}",
                k + 1,
                dim,
                step.base.dim(),
                format_vec(&step.pair.b0)
            )?;
            dim = step.base.dim();
        }
        let (pairs, basis) = extension::tower_replay(&steps);
        let rebuilt = extension::extension_tower(&pairs).map_err(Failure::check)?;
        let names = rebuilt.algebra().basis_names().to_vec();
        let same = s
            .change_basis(&basis, names)
            .is_ok_and(|t| t.same_structure(&rebuilt));
        writeln!(
            out,
            "replayed tower from {{0}}: dim {}, identical up to basis change: {}",
            rebuilt.dim(),
            if same { "yes" } else { "no" }
        )?;
        if !same {
            return Err(Failure::check("replayed tower differs from the input"));
        }
        if let Some(path) = pair_out {
            let docs: Vec<PairDocument> = pairs.iter().map(PairDocument::from_pair).collect();
            let mut text = serde_json::to_string_pretty(&docs).expect("documents serialize");
            text.push('\n');
            document::write_file(path, &text)?;
        }
        return Ok(EXIT_OK);
    }
    let e = match center_index {
        None => None,
        Some(k) => {
            let center = s.algebra().center().basis_vectors();
            let v = center.get(k).cloned().ok_or_else(|| {
                Failure::input(format!(
                    "center has dimension {}, index {k} out of range",
                    center.len()
                ))
            })?;
            Some(v)
        }
    };
    let step = extension::inverse_double_extend(&s, e.as_deref()).map_err(Failure::check)?;
    writeln!(out, "dim {} -> dim {}", s.dim(), step.base.dim())?;
    writeln!(out, "e = {}", format_vec(&step.witness.basis.column(0)))?;
    writeln!(
        out,
        "ebar = {}",
        format_vec(&step.witness.basis.column(s.dim() - 1))
    )?;
    emit(
        &AlgebraDocument::from_algebra(&step.base, None).to_json(),
        target,
        out,
    )?;
    emit(
        &PairDocument::from_pair(&step.pair).to_json(),
        pair_out,
        out,
    )?;
    Ok(EXIT_OK)
}

fn classify(path: &Path, out: &mut dyn Write) -> CmdResult {
    let doc = AlgebraDocument::load(path)?;
    let (algebra, _) = doc.to_parts()?;
    algebra
        .validate()
        .map_err(|v| Failure::input(format!("Jacobi identity fails on {} triples", v.len())))?;
    match catalog::classify_upto6(&algebra).map_err(Failure::input)? {
        Some(class) => {
            writeln!(out, "{class}")?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "Unknown")?;
            Ok(EXIT_CHECK)
        }
    }
}

fn combination(v: &[Scalar], names: &[String]) -> String {
    let mut s = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let negative = *c < Scalar::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        s.push_str(match (s.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        });
        if !abs.is_one() {
            s.push_str(&format_scalar(&abs));
            s.push(' ');
        }
        s.push_str(name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn write_products(p: &ProductTensor, names: &[String], out: &mut dyn Write) -> std::io::Result<()> {
    let n = p.dim();
    for i in 0..n {
        for j in 0..n {
            let v = p.product_basis(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                writeln!(
                    out,
                    "  {}•{} = {}",
                    names[i],
                    names[j],
                    combination(&v, names)
                )?;
            }
        }
    }
    Ok(())
}

fn catalog_cmd(action: CatalogAction, out: &mut dyn Write) -> CmdResult {
    match action {
        CatalogAction::List => {
            for entry in catalog::all_entries() {
                writeln!(
                    out,
                    "{:<14} dim {}  {}",
                    entry.name,
                    entry.algebra.dim(),
                    entry.source
                )?;
            }
            writeln!(
                out,
                "g6_1:<λ>       dim 6  g6_1 with form parameter λ ∉ {{0, 1}}"
            )?;
        }
        CatalogAction::Show { name } => {
            let entry = catalog::get(&name).map_err(Failure::input)?;
            let s = &entry.algebra;
            let names = s.algebra().basis_names();
            writeln!(out, "{}: {}", entry.name, entry.source)?;
            if entry.name == "g6_1" {
                writeln!(
                    out,
                    "parameter: λ = {} (select another with g6_1:<λ>)",
                    catalog::DEFAULT_LAMBDA
                )?;
                writeln!(out, "form family: x1*∧x6* + λ x2*∧x5* + (λ-1) x3*∧x4*")?;
            }
            writeln!(out, "basis: {}", names.join(", "))?;
            writeln!(out, "brackets:")?;
            for (i, j, v) in s.algebra().nonzero_brackets() {
                writeln!(
                    out,
                    "  [{},{}] = {}",
                    names[i],
                    names[j],
                    combination(v, names)
                )?;
            }
            let mut terms = Vec::new();
            for i in 0..s.dim() {
                for j in i + 1..s.dim() {
                    let c = s.form().pair_basis(i, j);
                    if !c.is_zero() {
                        let wedge = format!("{}*∧{}*", names[i], names[j]);
                        terms.push(combination(std::slice::from_ref(c), &[wedge]));
                    }
                }
            }
            writeln!(
                out,
                "form: {}",
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ").replace("+ -", "- ")
                }
            )?;
            writeln!(out, "canonical products:")?;
            write_products(&s.canonical_product(), names, out)?;
            for e in &entry.errata {
                writeln!(
                    out,
                    "erratum: {}•{} published as {}, computed {} ({})",
                    names[e.left],
                    names[e.right],
                    combination(&e.published, names),
                    combination(&e.corrected, names),
                    e.reason
                )?;
            }
            match entry.expected_class {
                Some(ExpectedClass::Flat(c)) => writeln!(out, "class: {c}")?,
                Some(ExpectedClass::NotFlat) => writeln!(out, "class: not flat")?,
                None => {}
            }
            writeln!(out, "flat: {}", if s.is_flat() { "yes" } else { "no" })?;
        }
        CatalogAction::Export { name, file } => {
            let entry = catalog::get(&name).map_err(Failure::input)?;
            let meta = Meta {
                name: Some(entry.name.clone()),
                source: Some(entry.source.clone()),
            };
            emit(
                &AlgebraDocument::from_algebra(&entry.algebra, Some(meta)).to_json(),
                file.as_deref(),
                out,
            )?;
        }
    }
    Ok(EXIT_OK)
}
