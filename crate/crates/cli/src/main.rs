//! `cecoh` — exact cohomology tables for Lie algebras with integrable
//! complex structure.
//!
//! Subcommands: `validate` (structure report), `table` (dimension tables,
//! text or CSV, quotient and harmonic methods cross-checked), `harmonic`
//! (representative bases), `check` (duality families, ∂∂̄-lemma,
//! natural-map ranks, Frölicher inequality), `classify` (deformation
//! subclass from σ coefficients) and `diagram` (double complex as DOT).
//!
//! Exit codes: 0 success; 1 semantic failure (invalid presentation, failed
//! assertion suite); 2 input error (unreadable file, parse error, unknown
//! preset, out-of-range index); 3 internal quotient/harmonic mismatch.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use cecoh_core::catalog;
use cecoh_core::cohomology::deformation::{
    classify_deformation, DeformationClass, SigmaCoefficients,
};
use cecoh_core::cohomology::harmonic::harmonic_basis;
use cecoh_core::cohomology::reports::{del_delbar_lemma, dualities, natural_map_ranks};
use cecoh_core::cohomology::{
    compute_table, table_keys, CohomologyTable, Method, TableKey, Theory,
};
use cecoh_core::exterior::Form;
use cecoh_core::scalars::GaussianRational;
use cecoh_core::structure::{parse, Presentation, ValidationReport};

#[derive(Parser)]
#[command(
    name = "cecoh",
    version,
    about = "Exact de Rham / Dolbeault / Bott-Chern / Aeppli cohomology of Lie algebras with complex structure",
    long_about = "Computes cohomology of the double complex (Λ^{p,q}, ∂, ∂̄) attached to structure \
equations d f<j> over the Gaussian rationals. Every dimension is computed twice — as a quotient and \
as a harmonic-space kernel — and cross-checked; there is no floating point anywhere."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation and report d² = 0, integrability, nilpotency and flags
    Validate(InputArgs),
    /// Print dimension tables (text mirrors the classical layout; CSV is `theory,p,q,dim`)
    Table(TableArgs),
    /// Print a harmonic representative basis at one (bi)degree
    Harmonic(HarmonicArgs),
    /// Run verification suites: dualities, ∂∂̄-lemma, natural-map ranks, Frölicher
    Check(CheckArgs),
    /// Classify deformation structure coefficients σ into (i)/(ii.a)/(ii.b)/(iii.a)/(iii.b)
    Classify(ClassifyArgs),
    /// Emit the double complex as a DOT digraph (∂ and ∂̄ arrows, zero arrows omitted)
    Diagram(DiagramArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "preset"])))]
struct InputArgs {
    /// Structure-equation file (`ndim`, then one `d f<j> = ...` per generator)
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Built-in example: iwasawa, class-ii-a, class-ii-b, class-iii-a,
    /// class-iii-b, torus3, solvable-control
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which table(s) to print
    #[arg(long, value_enum)]
    which: WhichTable,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct HarmonicArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Holomorphic degree p (for derham, the total degree is p + q)
    #[arg(long)]
    p: u32,
    /// Anti-holomorphic degree q
    #[arg(long)]
    q: u32,
    /// Which cohomology to represent
    #[arg(long, value_enum)]
    which: WhichHarmonic,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Duality families: Bott-Chern/Aeppli, Serre, conjugation, Poincaré, Frölicher
    #[arg(long)]
    dualities: bool,
    /// ∂∂̄-lemma scan (reported, never failing)
    #[arg(long)]
    lemma: bool,
    /// Ranks of the identity-induced maps H_BC → H_∂̄ → H_A and H_BC → H_dR
    #[arg(long)]
    natural_maps: bool,
    /// Frölicher inequality degree by degree
    #[arg(long)]
    frolicher: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Five coefficients "(s12)(s11b)(s12b)(s21b)(s22b)", each "(re, im)"
    #[arg(long, value_name = "TUPLE")]
    sigma: String,
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format (DOT only)
    #[arg(long, value_enum, default_value_t = DiagramFormat::Dot)]
    format: DiagramFormat,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum WhichTable {
    Derham,
    Dolbeault,
    Bc,
    Aeppli,
    All,
}

impl WhichTable {
    fn theories(self) -> Vec<Theory> {
        match self {
            WhichTable::Derham => vec![Theory::DeRham],
            WhichTable::Dolbeault => vec![Theory::Dolbeault],
            WhichTable::Bc => vec![Theory::BottChern],
            WhichTable::Aeppli => vec![Theory::Aeppli],
            WhichTable::All => vec![
                Theory::DeRham,
                Theory::Dolbeault,
                Theory::BottChern,
                Theory::Aeppli,
            ],
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum WhichHarmonic {
    Bc,
    Aeppli,
    Dolbeault,
    Derham,
}

impl WhichHarmonic {
    fn theory(self) -> Theory {
        match self {
            WhichHarmonic::Bc => Theory::BottChern,
            WhichHarmonic::Aeppli => Theory::Aeppli,
            WhichHarmonic::Dolbeault => Theory::Dolbeault,
            WhichHarmonic::Derham => Theory::DeRham,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum DiagramFormat {
    Dot,
}

fn fail(code: i32, message: &str) -> ! {
    eprintln!("error: {message}");
    std::process::exit(code);
}

fn load_presentation(input: &InputArgs) -> Presentation {
    let source = match (&input.file, &input.preset) {
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => fail(2, &format!("cannot read {}: {e}", path.display())),
        },
        (None, Some(name)) => match catalog::get(name) {
            Some(preset) => preset.source.to_string(),
            None => {
                let names: Vec<&str> = catalog::list().iter().map(|p| p.name).collect();
                fail(
                    2,
                    &format!("unknown preset `{name}`; available: {}", names.join(", ")),
                )
            }
        },
        _ => unreachable!("clap enforces exactly one input source"),
    };
    match parse(&source) {
        Ok(pres) => pres,
        Err(e) => fail(2, &e.to_string()),
    }
}

fn invalid_summary(report: &ValidationReport) -> String {
    let mut reasons = Vec::new();
    if !report.d_squared_failures.is_empty() {
        let js: Vec<String> = report
            .d_squared_failures
            .iter()
            .map(|j| format!("f{j}"))
            .collect();
        reasons.push(format!("d^2 != 0 on {}", js.join(", ")));
    }
    if !report.integrable {
        reasons.push("a differential has a term outside (2,0)+(1,1)".to_string());
    }
    reasons.join("; ")
}

/// Load and insist on a valid presentation (all commands except `validate`).
fn load_valid(input: &InputArgs) -> Presentation {
    let pres = load_presentation(input);
    let report = pres.validate();
    if !report.is_valid() {
        fail(
            1,
            &format!("invalid presentation: {}", invalid_summary(&report)),
        );
    }
    pres
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn run_validate(args: &InputArgs) {
    let pres = load_presentation(args);
    let report = pres.validate();

    let mut summary = Vec::new();
    if report.is_valid() {
        summary.push("valid".to_string());
        if report.nilpotent {
            let step = report.step.expect("nilpotent implies a step");
            summary.push(format!("{step}-step nilpotent"));
            if report.flags.abelian {
                summary.push("abelian".to_string());
            }
            if report.flags.holomorphically_parallelizable {
                summary.push("holomorphically parallelizable".to_string());
            }
        } else {
            summary.push("NOT nilpotent".to_string());
        }
    } else {
        summary.push("invalid".to_string());
        summary.push(invalid_summary(&report));
    }
    println!("{}", summary.join("; "));

    println!(
        "  d^2 = 0: {}",
        yes_no(report.d_squared_failures.is_empty())
    );
    println!("  integrable: {}", yes_no(report.integrable));
    let dims: Vec<String> = report
        .lower_central_series_dims
        .iter()
        .map(usize::to_string)
        .collect();
    println!(
        "  nilpotent: {} (lower central series dims {})",
        yes_no(report.nilpotent),
        dims.join(", ")
    );
    println!("  abelian: {}", yes_no(report.flags.abelian));
    println!(
        "  holomorphically parallelizable: {}",
        yes_no(report.flags.holomorphically_parallelizable)
    );
    println!(
        "  triangular coframe: {}",
        yes_no(report.flags.nilpotent_coframe)
    );

    if !report.is_valid() {
        std::process::exit(1);
    }
}

fn theory_title(theory: Theory) -> &'static str {
    match theory {
        Theory::DeRham => "de Rham cohomology",
        Theory::Dolbeault => "Dolbeault cohomology",
        Theory::DolbeaultConj => "conjugate Dolbeault cohomology",
        Theory::BottChern => "Bott-Chern cohomology",
        Theory::Aeppli => "Aeppli cohomology",
    }
}

/// Two aligned rows — key labels over dimensions — with `|` separating
/// total-degree groups, mirroring the classical table layout.
fn render_text_table(table: &CohomologyTable) -> String {
    let (mut labels, mut values) = match table.theory {
        Theory::DeRham => (vec!["k".to_string()], vec!["b_k".to_string()]),
        _ => (vec!["(p,q)".to_string()], vec!["h".to_string()]),
    };
    let mut previous_degree: Option<u32> = None;
    for (key, dim) in table.entries() {
        if let Some(prev) = previous_degree {
            if prev != key.total_degree() && table.theory.is_bigraded() {
                labels.push("|".to_string());
                values.push("|".to_string());
            }
        }
        previous_degree = Some(key.total_degree());
        labels.push(key.to_string());
        values.push(dim.to_string());
    }
    let mut out = String::new();
    out.push_str(theory_title(table.theory));
    out.push('\n');
    for row in [&labels, &values] {
        let cells: Vec<String> = row
            .iter()
            .zip(&labels)
            .zip(&values)
            .map(|((cell, label), value)| {
                let width = label.len().max(value.len());
                format!("{cell:<width$}")
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn run_table(args: &TableArgs) {
    let pres = load_valid(&args.input);
    let diffs = pres.differentials();
    let mut tables = Vec::new();
    for theory in args.which.theories() {
        let quotient = compute_table(&diffs, theory, Method::Quotient);
        let harmonic = compute_table(&diffs, theory, Method::Harmonic);
        if quotient != harmonic {
            for key in table_keys(theory, diffs.n()) {
                let (a, b) = (quotient.get(key), harmonic.get(key));
                if a != b {
                    eprintln!(
                        "cross-check mismatch: {theory} at {key}: quotient {:?} vs harmonic {:?}",
                        a, b
                    );
                }
            }
            std::process::exit(3);
        }
        tables.push(quotient);
    }
    match args.format {
        OutputFormat::Csv => print!("{}", cecoh_core::tables_to_csv(&tables)),
        OutputFormat::Text => {
            let rendered: Vec<String> = tables.iter().map(render_text_table).collect();
            print!("{}", rendered.join("\n"));
        }
    }
}

fn run_harmonic(args: &HarmonicArgs) {
    let pres = load_valid(&args.input);
    let diffs = pres.differentials();
    let n = diffs.n();
    if args.p > n || args.q > n {
        fail(
            2,
            &format!("bidegree ({},{}) out of range for n = {n}", args.p, args.q),
        );
    }
    let theory = args.which.theory();
    let key = match theory {
        Theory::DeRham => TableKey::Degree(args.p + args.q),
        _ => TableKey::Bidegree(args.p, args.q),
    };
    let basis = harmonic_basis(&diffs, theory, key);
    for form in &basis.forms {
        println!("{form}");
    }
}

fn format_delta(delta: &GaussianRational) -> String {
    if delta.im.is_zero() {
        delta.re.to_string()
    } else {
        delta.to_string()
    }
}

fn run_classify(args: &ClassifyArgs) {
    let sigma = match SigmaCoefficients::parse_tuple(&args.sigma) {
        Ok(s) => s,
        Err(e) => fail(2, &e.to_string()),
    };
    let classification = classify_deformation(&sigma);
    if classification.class == DeformationClass::I {
        println!("{}", classification.class);
    } else {
        println!(
            "{}; δ = {}; rk S = {}",
            classification.class,
            format_delta(&classification.delta),
            classification.rank_s
        );
    }
}

fn run_check(args: &CheckArgs) {
    let pres = load_valid(&args.input);
    let diffs = pres.differentials();
    let run_all = !(args.dualities || args.lemma || args.natural_maps || args.frolicher);
    let mut all_pass = true;

    if run_all || args.dualities {
        println!("dualities:");
        let report = dualities(&diffs);
        for check in &report.checks {
            let verdict = if check.passed { "pass" } else { "FAIL" };
            println!("  {} — {}: {verdict}", check.name, check.statement);
            for failure in &check.failures {
                println!("    {failure}");
            }
            all_pass &= check.passed;
        }
    }

    if run_all || args.lemma {
        let report = del_delbar_lemma(&diffs);
        match report.first_failure() {
            None => println!("∂∂̄-lemma: satisfied at all (p,q)"),
            Some((p, q)) => {
                println!("∂∂̄-lemma: NOT satisfied (first failure at ({p},{q}))");
                let list: Vec<String> = report
                    .failures
                    .iter()
                    .map(|(p, q)| format!("({p},{q})"))
                    .collect();
                println!("  failing bidegrees: {}", list.join(" "));
            }
        }
    }

    if run_all || args.natural_maps {
        println!("natural maps (induced by the identity on forms):");
        println!(
            "  (p,q)  h_bc  h_dolbeault  h_aeppli  b_k  bc->dolbeault  bc->derham  dolbeault->aeppli"
        );
        let mut bounds_hold = true;
        for key in table_keys(Theory::BottChern, diffs.n()) {
            let TableKey::Bidegree(p, q) = key else {
                continue;
            };
            let r = natural_map_ranks(&diffs, p, q);
            println!(
                "  ({},{})  {:>4}  {:>11}  {:>8}  {:>3}  {:>13}  {:>10}  {:>17}",
                r.p,
                r.q,
                r.h_bott_chern,
                r.h_dolbeault,
                r.h_aeppli,
                r.betti,
                r.bc_to_dolbeault,
                r.bc_to_derham,
                r.dolbeault_to_aeppli
            );
            bounds_hold &= r.bc_to_dolbeault <= r.h_bott_chern.min(r.h_dolbeault)
                && r.bc_to_derham <= r.h_bott_chern.min(r.betti)
                && r.dolbeault_to_aeppli <= r.h_dolbeault.min(r.h_aeppli);
        }
        println!(
            "  rank bounds: {}",
            if bounds_hold { "pass" } else { "FAIL" }
        );
        all_pass &= bounds_hold;
    }

    if run_all || args.frolicher {
        println!("frölicher inequality:");
        let report = dualities(&diffs);
        let frolicher = report
            .check("frolicher")
            .expect("frolicher family is always present");
        let verdict = if frolicher.passed { "pass" } else { "FAIL" };
        println!("  sum over p+q=k of h_dolbeault(p,q) >= b_k: {verdict}");
        for failure in &frolicher.failures {
            println!("    {failure}");
        }
        all_pass &= frolicher.passed;
    }

    if !all_pass {
        std::process::exit(1);
    }
}

fn run_diagram(args: &DiagramArgs) {
    let pres = load_valid(&args.input);
    let diffs = pres.differentials();
    let DiagramFormat::Dot = args.format;

    let mut out = String::from("digraph double_complex {\n  rankdir=LR;\n");
    for k in 0..=2 * diffs.n() {
        for mono in diffs.total_basis(k) {
            out.push_str(&format!("  \"{mono}\";\n"));
        }
    }
    for k in 0..=2 * diffs.n() {
        for mono in diffs.total_basis(k) {
            let source = Form::from_monomial(*mono);
            for (op, label) in [(pres.del(&source), "del"), (pres.delbar(&source), "delbar")] {
                for (target, _) in op.terms() {
                    out.push_str(&format!(
                        "  \"{mono}\" -> \"{target}\" [label=\"{label}\"];\n"
                    ));
                }
            }
        }
    }
    out.push_str("}\n");
    print!("{out}");
}

fn main() {
    let cli = Cli::parse();
    match &cli.command {
        Command::Validate(args) => run_validate(args),
        Command::Table(args) => run_table(args),
        Command::Harmonic(args) => run_harmonic(args),
        Command::Check(args) => run_check(args),
        Command::Classify(args) => run_classify(args),
        Command::Diagram(args) => run_diagram(args),
    }
}
