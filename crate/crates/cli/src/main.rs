//! `strata` — compute, extract, cross-check, and emit.
//!
//! Exit codes: 0 success / verification pass; 1 verification or
//! computation failure (with a cell-level report); 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use strata_core::coxeter::CoxGroup;
use strata_core::crosssec::{tau_double_prime, tau_prime, FiberData};
use strata_core::dihedral::Dihedral;
use strata_core::exact::{CycRat, PolyU, RatFnU};
use strata_core::golden::{embedded_psi_table, embedded_table, GoldenTable};
use strata_core::meta::GroupType;
use strata_core::strata::{
    assemble_psi, sigma_map, ClassMeta, PsiMatrix, SigmaMode, StrataReport,
};
use strata_core::verify;

#[derive(Parser)]
#[command(
    name = "strata",
    version,
    about = "Exact strata-map computations for finite Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArgs {
    /// Group type: A1, A2, A3, B2, B3, H3, H4, I2 (with --p) or I2(p)
    #[arg(long = "type")]
    group_type: String,
    /// Dihedral order parameter; required iff the type is I2
    #[arg(long)]
    p: Option<u32>,
}

impl TypeArgs {
    fn resolve(&self) -> Result<GroupType, UsageError> {
        let s = self.group_type.trim();
        if s == "I2" {
            let p = self.p.ok_or_else(|| UsageError("--p is required for type I2".into()))?;
            if p < 3 {
                return Err(UsageError("I2 requires p >= 3".into()));
            }
            return Ok(GroupType::I2(p));
        }
        let gt = GroupType::parse(s).map_err(|e| UsageError(e.to_string()))?;
        if self.p.is_some() && !matches!(gt, GroupType::I2(_)) {
            return Err(UsageError("--p is only meaningful for type I2".into()));
        }
        Ok(gt)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Weyl,
    Noncrys,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate a group: classes with invariants, then representations
    Group {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// The Ψ matrix: computed for I2(p), embedded for B3/H3, or
    /// assembled from ingested factor matrices
    Psi {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Re-derive the dihedral closed forms and printed matrices;
        /// exits nonzero on any mismatch
        #[arg(long)]
        check: bool,
        /// Ingested A matrix (classes × representations) in table format
        #[arg(long)]
        a_file: Option<PathBuf>,
        /// Ingested A′ matrix (cyc(N) scalar entries allowed)
        #[arg(long)]
        a_prime_file: Option<PathBuf>,
        /// Ingested A″ numerators with the common denominator in the
        /// `_h` bookkeeping entry
        #[arg(long)]
        a_double_prime_file: Option<PathBuf>,
    },
    /// Extract σ and the exclusion sets from Ψ
    Sigma {
        #[command(flatten)]
        ty: TypeArgs,
        /// Load Ψ from a table file instead of the embedded/computed one
        #[arg(long)]
        psi_file: Option<PathBuf>,
        /// Extraction mode; defaults to weyl for Weyl types and
        /// noncrys otherwise
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The trivial-representation column of Ψ from the Hecke recurrence
    HeckeColumn {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Cross-sections τ′ and τ″ of σ, optionally for a product group
    CrossSection {
        /// Single group type (alternative to --product)
        #[arg(long = "type")]
        group_type: Option<String>,
        #[arg(long)]
        p: Option<u32>,
        /// Comma-separated factor list, e.g. "H3,I2(7)"
        #[arg(long)]
        product: Option<String>,
    },
    /// Run a verification suite: dihedral, hecke, b3, h3, h4, crosssec, all
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn dispatch(cmd: Cmd) -> Result<ExitCode, UsageError> {
    match cmd {
        Cmd::Group { ty } => {
            let gt = ty.resolve()?;
            Ok(cmd_group(gt))
        }
        Cmd::Psi { ty, format, check, a_file, a_prime_file, a_double_prime_file } => {
            let ingest = match (&a_file, &a_prime_file, &a_double_prime_file) {
                (Some(a), Some(ap), Some(app)) => Some((a.clone(), ap.clone(), app.clone())),
                (None, None, None) => None,
                _ => {
                    return Err(UsageError(
                        "ingestion needs all of --a-file, --a-prime-file, --a-double-prime-file"
                            .into(),
                    ))
                }
            };
            let gt = ty.resolve()?;
            Ok(cmd_psi(gt, format, check, ingest))
        }
        Cmd::Sigma { ty, psi_file, mode, format } => {
            let gt = ty.resolve()?;
            Ok(cmd_sigma(gt, psi_file, mode, format))
        }
        Cmd::HeckeColumn { ty } => {
            let gt = ty.resolve()?;
            Ok(cmd_hecke_column(gt))
        }
        Cmd::CrossSection { group_type, p, product } => match (group_type, product) {
            (Some(t), None) => {
                let gt = TypeArgs { group_type: t, p }.resolve()?;
                Ok(cmd_cross_section(&[gt]))
            }
            (None, Some(list)) => {
                let mut factors = Vec::new();
                for part in list.split(',') {
                    let gt = GroupType::parse(part.trim())
                        .map_err(|e| UsageError(e.to_string()))?;
                    factors.push(gt);
                }
                if factors.is_empty() {
                    return Err(UsageError("--product needs at least one factor".into()));
                }
                Ok(cmd_cross_section(&factors))
            }
            _ => Err(UsageError("give exactly one of --type or --product".into())),
        },
        Cmd::Verify { suite } => match verify::run_suite(&suite) {
            None => Err(UsageError(format!(
                "unknown suite {suite:?}; available: {}",
                verify::suite_names().join(", ")
            ))),
            Some(checks) => Ok(print_checks(&checks)),
        },
    }
}

fn cmd_group(gt: GroupType) -> ExitCode {
    let g = match CoxGroup::build(gt) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    println!("type {gt} | order {} | rank {}", g.order(), g.rank());
    for c in g.classes() {
        println!(
            "class {} | size {} | minlen {} | m {} | elliptic {}",
            c.label, c.size, c.min_length, c.m, c.elliptic
        );
    }
    for e in g.irreducibles() {
        println!("irr {} | dim {} | b {}", e.label, e.dim, e.b);
    }
    ExitCode::SUCCESS
}

fn psi_for(gt: GroupType) -> Result<PsiMatrix, String> {
    match gt {
        GroupType::I2(p) => Dihedral::new(p).psi().map_err(|e| e.to_string()),
        GroupType::B3 | GroupType::H3 => {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            let table = embedded_psi_table(gt).map_err(|e| e.to_string())?;
            table.to_psi_matrix(&g).map_err(|e| e.to_string())
        }
        other => Err(format!(
            "no Ψ matrix available for {other}; supply factor matrices or a psi file"
        )),
    }
}

#[derive(Serialize)]
struct JsonPsi {
    r#type: String,
    classes: Vec<String>,
    irreps: Vec<String>,
    entries: Vec<Vec<String>>,
}

fn print_psi(psi: &PsiMatrix, format: Format) {
    match format {
        Format::Json => {
            let view = JsonPsi {
                r#type: psi.group().to_string(),
                classes: psi.classes().iter().map(|c| c.label.clone()).collect(),
                irreps: psi.irreps().iter().map(|e| e.label.clone()).collect(),
                entries: (0..psi.classes().len())
                    .map(|r| {
                        (0..psi.irreps().len())
                            .map(|c| psi.entry(r, c).to_string())
                            .collect()
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&view).expect("serializable"));
        }
        Format::Text => {
            println!("type {}", psi.group());
            let col_labels: Vec<String> =
                psi.irreps().iter().map(|e| e.label.clone()).collect();
            println!("cols | {}", col_labels.join(" | "));
            for (r, class) in psi.classes().iter().enumerate() {
                let cells: Vec<String> = (0..psi.irreps().len())
                    .map(|c| psi.entry(r, c).to_string())
                    .collect();
                println!("{} | {}", class.label, cells.join(" | "));
            }
        }
    }
}

fn cmd_psi(
    gt: GroupType,
    format: Format,
    check: bool,
    ingest: Option<(PathBuf, PathBuf, PathBuf)>,
) -> ExitCode {
    let psi = if let Some((a, ap, app)) = ingest {
        match assemble_from_files(gt, &a, &ap, &app) {
            Ok(p) => p,
            Err(e) => return fail(e),
        }
    } else {
        match psi_for(gt) {
            Ok(p) => p,
            Err(e) => return fail(e),
        }
    };
    print_psi(&psi, format);
    if check {
        let GroupType::I2(p) = gt else {
            return fail("--check applies to the dihedral pipeline only");
        };
        let checks = verify::dihedral_single_p_checks(p);
        return print_checks(&checks);
    }
    ExitCode::SUCCESS
}

/// Assemble Ψ from three ingested factor-matrix files.
fn assemble_from_files(
    gt: GroupType,
    a_path: &std::path::Path,
    ap_path: &std::path::Path,
    app_path: &std::path::Path,
) -> Result<PsiMatrix, String> {
    let a_table = GoldenTable::load(a_path).map_err(|e| e.to_string())?;
    let ap_table = GoldenTable::load(ap_path).map_err(|e| e.to_string())?;
    let app_table = GoldenTable::load(app_path).map_err(|e| e.to_string())?;

    // class metadata: recompute invariants when the group is embedded
    let classes: Vec<ClassMeta> = match CoxGroup::build(gt) {
        Ok(g) => a_table
            .rows
            .iter()
            .map(|l| {
                g.resolve_label(l)
                    .map(|c| ClassMeta::new(l.clone(), c.min_length, c.m))
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?,
        Err(_) => a_table.rows.iter().map(|l| ClassMeta::bare(l.clone())).collect(),
    };
    let irr_labels: Vec<String> = a_table.cols.clone();
    let embedded = gt.irreducibles();
    let irreps = irr_labels
        .iter()
        .map(|l| {
            embedded
                .iter()
                .find(|e| &e.label == l)
                .cloned()
                .map_or_else(|| strata_core::meta::IrrInfo::parse_label(l), Ok)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;

    let n = irr_labels.len();
    let a: Vec<Vec<PolyU>> = (0..a_table.rows.len())
        .map(|r| (0..n).map(|c| a_table.entry_at(r, c)).collect())
        .collect();

    // A′ entries are scalars (rationals or cyc(N) values)
    let mut a_prime = vec![vec![CycRat::zero(); n]; n];
    for (i, row_label) in irr_labels.iter().enumerate() {
        for (j, col_label) in irr_labels.iter().enumerate() {
            let poly = ap_table.entry(row_label, col_label).map_err(|e| e.to_string())?;
            if poly.degree().unwrap_or(0) > 0 {
                return Err(format!(
                    "A' entry ({row_label}, {col_label}) is not a scalar: {poly}"
                ));
            }
            a_prime[i][j] = poly.coeff(0);
        }
    }

    // A″ numerators over the h supplied in the bookkeeping entry
    let h = app_table.entry("_h", "_h").map_err(|e| e.to_string())?;
    if h.is_zero() {
        return Err("A'' file must supply the denominator in an `entry _h _h` line".into());
    }
    let mut a_double_prime = vec![vec![RatFnU::zero(); n]; n];
    for (i, row_label) in irr_labels.iter().enumerate() {
        for (j, col_label) in irr_labels.iter().enumerate() {
            let num = app_table.entry(row_label, col_label).map_err(|e| e.to_string())?;
            a_double_prime[i][j] = RatFnU::new(num, h.clone()).map_err(|e| e.to_string())?;
        }
    }

    assemble_psi(gt.to_string(), &a, &a_prime, &a_double_prime, classes, irreps)
        .map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct JsonSigma {
    r#type: String,
    irr_star: Vec<String>,
    irr_star_star: Vec<String>,
    map: Vec<JsonSigmaRow>,
    image: Vec<String>,
    conj33c: Vec<JsonMonomial>,
}

#[derive(Serialize)]
struct JsonSigmaRow {
    class: String,
    irr: String,
    psi: String,
}

#[derive(Serialize)]
struct JsonMonomial {
    class: String,
    holds: bool,
}

fn sigma_json(report: &StrataReport) -> JsonSigma {
    JsonSigma {
        r#type: report.group.clone(),
        irr_star: report.irr_star.clone(),
        irr_star_star: report.irr_star_star.clone(),
        map: report
            .rows
            .iter()
            .map(|r| JsonSigmaRow {
                class: r.class.label.clone(),
                irr: r.sigma.clone(),
                psi: r.psi.to_string(),
            })
            .collect(),
        image: report.image.clone(),
        conj33c: report
            .rows
            .iter()
            .filter_map(|r| {
                r.monomial_check
                    .map(|holds| JsonMonomial { class: r.class.label.clone(), holds })
            })
            .collect(),
    }
}

fn print_sigma(report: &StrataReport, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&sigma_json(report)).expect("serializable")
            );
        }
        Format::Text => {
            let mode = match report.mode {
                SigmaMode::Weyl => "weyl",
                SigmaMode::Noncrystallographic => "noncrys",
            };
            println!("type {} | mode {mode}", report.group);
            println!(
                "Irr_*  : {}",
                if report.irr_star.is_empty() { "(empty)".into() } else { report.irr_star.join(", ") }
            );
            println!(
                "Irr_** : {}",
                if report.irr_star_star.is_empty() {
                    "(empty)".into()
                } else {
                    report.irr_star_star.join(", ")
                }
            );
            for row in &report.rows {
                let monomial = match row.monomial_check {
                    Some(true) => "monomial",
                    Some(false) => "NOT monomial",
                    None => "unknown invariants",
                };
                println!(
                    "sigma {} -> {} | psi {} | {}",
                    row.class.label, row.sigma, row.psi, monomial
                );
            }
            let img = strata_core::strata::image_report(report);
            println!("image ({}): {}", img.image.len(), img.image.join(", "));
            println!(
                "candidates ({}): {}",
                img.candidate_set.len(),
                img.candidate_set.join(", ")
            );
            println!("containment: {}", if img.equality { "equality" } else { "strict" });
        }
    }
}

fn cmd_sigma(
    gt: GroupType,
    psi_file: Option<PathBuf>,
    mode: Option<Mode>,
    format: Format,
) -> ExitCode {
    if gt == GroupType::H4 && psi_file.is_none() {
        return cmd_sigma_h4_partial(format);
    }
    let psi = if let Some(path) = psi_file {
        let table = match GoldenTable::load(&path) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let result = match CoxGroup::build(gt) {
            Ok(g) => table.to_psi_matrix(&g),
            Err(_) => table.to_psi_matrix_bare(),
        };
        match result {
            Ok(p) => p,
            Err(e) => return fail(e),
        }
    } else {
        match psi_for(gt) {
            Ok(p) => p,
            Err(e) => return fail(e),
        }
    };
    let mode = match mode {
        Some(Mode::Weyl) => SigmaMode::Weyl,
        Some(Mode::Noncrys) => SigmaMode::Noncrystallographic,
        None => {
            if gt.is_weyl() {
                SigmaMode::Weyl
            } else {
                SigmaMode::Noncrystallographic
            }
        }
    };
    match sigma_map(&psi, mode) {
        Ok(report) => {
            print_sigma(&report, format);
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}

/// H4 runs in partial mode: the full Ψ is not available, so the map,
/// the exclusion sets and the recorded values come from the golden
/// fiber table, with `(|C|, m)` recomputed by the group engine.
fn cmd_sigma_h4_partial(format: Format) -> ExitCode {
    let g = match CoxGroup::build(GroupType::H4) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let sigma = match embedded_table("h4_sigma") {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let star = embedded_table("h4_irr_star").expect("embedded");
    let star2 = embedded_table("h4_irr_star_star").expect("embedded");
    let image = embedded_table("h4_sigma_image").expect("embedded");

    let mut map = Vec::new();
    let mut conj = Vec::new();
    for (ri, row) in sigma.rows.iter().enumerate() {
        let Some((&(_, ci), poly)) = sigma.entries.iter().find(|(&(r, _), _)| r == ri) else {
            return fail(format!("fiber table row {row} has no entry"));
        };
        let cls = match g.resolve_label(row) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        let v_exp = cls.min_length + cls.m - g.rank();
        let holds = v_exp % 2 == 0 && poly == &PolyU::unit_monomial(v_exp / 2);
        map.push(JsonSigmaRow {
            class: row.clone(),
            irr: sigma.cols[ci].clone(),
            psi: poly.to_string(),
        });
        conj.push(JsonMonomial { class: row.clone(), holds });
    }
    match format {
        Format::Json => {
            let view = JsonSigma {
                r#type: "H4".into(),
                irr_star: star.members().to_vec(),
                irr_star_star: star2.members().to_vec(),
                map,
                image: image.members().to_vec(),
                conj33c: conj,
            };
            println!("{}", serde_json::to_string_pretty(&view).expect("serializable"));
        }
        Format::Text => {
            println!("type H4 | mode partial (map loaded from the embedded fiber table)");
            println!("Irr_*  : {}", star.members().join(", "));
            println!("Irr_** : {}", star2.members().join(", "));
            for (row, c) in map.iter().zip(conj.iter()) {
                println!(
                    "sigma {} -> {} | psi {} | {}",
                    row.class,
                    row.irr,
                    row.psi,
                    if c.holds { "monomial" } else { "NOT monomial" }
                );
            }
            println!("image ({}): {}", image.members().len(), image.members().join(", "));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_hecke_column(gt: GroupType) -> ExitCode {
    let g = match CoxGroup::build(gt) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    for class in g.classes() {
        match strata_core::hecke::psi_trivial_column(&g, class) {
            Ok(col) => println!("{} | {}", class.label, col),
            Err(e) => return fail(format!("class {}: {e}", class.label)),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_cross_section(factors: &[GroupType]) -> ExitCode {
    let mut datas = Vec::new();
    for gt in factors {
        match verify::fiber_data_for(*gt) {
            Ok(d) => datas.push(d),
            Err(e) => return fail(e),
        }
    }
    let fibers =
        if datas.len() == 1 { datas.into_iter().next().unwrap() } else { FiberData::product(&datas) };
    let tp = match tau_prime(&fibers) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let td = match tau_double_prime(&fibers) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    println!("type {}", fibers.group);
    println!("irr | tau' (|C|, m) | tau'' (|C|, m)");
    for (a, b) in tp.iter().zip(td.iter()) {
        println!(
            "{} | {} ({}, {}) | {} ({}, {})",
            a.irr, a.class.label, a.class.min_length, a.class.m,
            b.class.label, b.class.min_length, b.class.m
        );
    }
    ExitCode::SUCCESS
}

fn print_checks(checks: &[verify::Check]) -> ExitCode {
    let mut failed = 0;
    for c in checks {
        let tag = c.criterion.map(|n| format!("[criterion {n}] ")).unwrap_or_default();
        println!(
            "{} {}{}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            tag,
            c.name,
            c.detail
        );
        if !c.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("{} checks passed", checks.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} checks failed", checks.len());
        ExitCode::from(1)
    }
}
