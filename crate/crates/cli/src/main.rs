use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coset_radon::expr::build_group;
use coset_radon::flows::{
    constant_flow, flow_orbits, flow_radon_system, group_flow, group_flow_correspondence, reversal_closed,
    CosetCorrespondence, FlowOrbit, SuccessorFlow,
};
use coset_radon::geodesic::{maximal_geodesics, prime_geodesics, Geodesic};
use coset_radon::group::DEFAULT_MAX_ORDER;
use coset_radon::io::{kernel_to_json, load_flow_file, load_rep_file, save_group, GroupSummary};
use coset_radon::radon::{build_system, decide, random_function, RadonSystem, RankMethod, Variant, Verdict};
use coset_radon::spectral::{
    char_sum_check, char_sum_check_abelian, characters, check_projection, coefficient_kernel, faithful_characters,
    fixed_space_analysis, fourier_radon_check, q8_irreps, MatrixRep, DEFAULT_TOLERANCE,
};
use coset_radon::verify::{run_suite, SuiteOptions, SuiteReport, SUITES};
use coset_radon::{Error, GroupTable};

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_SIZE_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "coset-radon", version, about = "Injectivity of the Radon transform over cosets of cyclic subgroups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Leave the timing field out, for byte-identical output across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Prime,
    Maximal,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Prime => Variant::Prime,
            VariantArg::Maximal => Variant::Maximal,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(clap::Args)]
struct Cap {
    /// Largest group order to build.
    #[arg(long, env = "COSET_RADON_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and print its summary.
    Group {
        /// Group expression, e.g. C6, D4, Dic3, S4, C2xC3, file:PATH.
        expr: String,
        #[command(flatten)]
        cap: Cap,
        /// Write the Cayley table to this file.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// List the deduplicated geodesics.
    Geodesics {
        expr: String,
        #[arg(long, value_enum, default_value = "prime")]
        variant: VariantArg,
        #[command(flatten)]
        cap: Cap,
    },
    /// Assemble the transform and decide injectivity.
    Radon {
        expr: String,
        #[arg(long, value_enum, default_value = "prime")]
        variant: VariantArg,
        #[command(flatten)]
        cap: Cap,
        /// Write the 0/1 matrix as CSV.
        #[arg(long)]
        matrix_csv: Option<PathBuf>,
        /// Include an exact kernel basis.
        #[arg(long)]
        kernel: bool,
        /// Confirm the modular fast path with exact elimination.
        #[arg(long, value_enum, default_value = "on")]
        exact_confirm: Switch,
    },
    /// Character and representation checks of the kernel.
    Spectral {
        expr: String,
        #[command(flatten)]
        cap: Cap,
        /// Representation file to analyse instead of the built-in ones.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Tolerance for the floating Fourier comparisons.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Random functions for the Fourier comparison.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Orbits and transform of a successor-function flow.
    Flow {
        /// Flow table file.
        #[arg(long, conflicts_with_all = ["constant", "group"])]
        file: Option<PathBuf>,
        /// Built-in constant flow on this many points.
        #[arg(long, conflicts_with = "group")]
        constant: Option<usize>,
        /// Built-in group flow of this group expression.
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        cap: Cap,
        /// List every orbit.
        #[arg(long)]
        orbits: bool,
    },
    /// Run a theorem suite, or `all`.
    Verify {
        #[arg(value_parser = suite_name)]
        suite: String,
        /// Size bound for the suite, overriding its default.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown suite; expected one of: all, {}", SUITES.join(", ")))
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Suite,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Core(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { json: cli.json, timing: !cli.no_timing };
    match run(cli.command, &out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(EXIT_SUITE_FAILURE),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::SizeLimit { .. } => EXIT_SIZE_CAP,
                _ => EXIT_INPUT,
            })
        }
    }
}

struct Output {
    json: bool,
    timing: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
        } else {
            print!("{}", text());
        }
    }

    fn elapsed(&self, start: Instant) -> Option<f64> {
        self.timing.then(|| start.elapsed().as_secs_f64() * 1e3)
    }
}

fn run(cmd: Command, out: &Output) -> Outcome {
    match cmd {
        Command::Group { expr, cap, save } => cmd_group(&expr, cap.max_order, save.as_deref(), out),
        Command::Geodesics { expr, variant, cap } => cmd_geodesics(&expr, variant.into(), cap.max_order, out),
        Command::Radon { expr, variant, cap, matrix_csv, kernel, exact_confirm } => {
            let method = match exact_confirm {
                Switch::On => RankMethod::ModularConfirmed,
                Switch::Off => RankMethod::Modular,
            };
            cmd_radon(&expr, variant.into(), cap.max_order, matrix_csv.as_deref(), kernel, method, out)
        }
        Command::Spectral { expr, cap, rep, tolerance, samples, seed } => {
            cmd_spectral(&expr, cap.max_order, rep.as_deref(), tolerance, samples, seed, out)
        }
        Command::Flow { file, constant, group, cap, orbits } => {
            cmd_flow(file.as_deref(), constant, group.as_deref(), cap.max_order, orbits, out)
        }
        Command::Verify { suite, max_order, seed } => cmd_verify(&suite, max_order, seed, out),
    }
}

fn cmd_group(expr: &str, cap: usize, save: Option<&Path>, out: &Output) -> Outcome {
    let g = build_group(expr, cap)?;
    if let Some(path) = save {
        save_group(&g, path)?;
    }
    let s = GroupSummary::of(&g);
    out.emit(&s, || {
        let mut t = format!(
            "group {}\norder {}\nabelian {}\ncyclic {}\n",
            s.recipe, s.order, s.abelian, s.cyclic
        );
        if let Some(f) = &s.invariant_factors {
            t += &format!("invariant factors {f:?}\n");
        }
        t + &format!("associativity check {}\n", s.associativity)
    });
    Ok(())
}

#[derive(Serialize)]
struct GeodesicList<'a> {
    group: String,
    variant: Variant,
    count: usize,
    geodesics: &'a [Geodesic],
}

fn cmd_geodesics(expr: &str, variant: Variant, cap: usize, out: &Output) -> Outcome {
    let g = build_group(expr, cap)?;
    let geodesics = match variant {
        Variant::Maximal => maximal_geodesics(&g)?,
        _ => prime_geodesics(&g)?,
    };
    let list = GeodesicList { group: g.recipe().to_string(), variant, count: geodesics.len(), geodesics: &geodesics };
    out.emit(&list, || {
        let mut t = format!("{} {} geodesics on {}\n", list.count, variant, list.group);
        for geo in &geodesics {
            let ids = |v: &[coset_radon::ElementId]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            t += &format!("rep {:>4}  subgroup [{}]  coset [{}]\n", geo.rep, ids(&geo.subgroup.elements), ids(&geo.coset));
        }
        t
    });
    Ok(())
}

/// A verdict with its timing, the record `radon` and `flow` print.
#[derive(Serialize)]
struct VerdictRecord {
    #[serde(flatten)]
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel: Option<serde_json::Value>,
}

impl VerdictRecord {
    fn text(&self) -> String {
        let v = &self.verdict;
        let mut t = format!(
            "group {}\nvariant {}\norder {}\nrows {}\nrank {}\nkernel_dim {}\n{}\n",
            v.group,
            v.variant,
            v.order,
            v.rows,
            v.rank,
            v.kernel_dim,
            if v.injective { "injective" } else { "noninjective" }
        );
        if let Some(fc) = v.frobenius_complement {
            t += &format!("frobenius_complement {fc}\n");
        }
        if let Some(agree) = v.oracle_agreement {
            t += &format!("modular ranks agree {agree}\n");
        }
        if let Some(k) = &self.kernel {
            t += &format!("kernel {k}\n");
        }
        if let Some(ms) = self.timing_ms {
            t += &format!("time {ms:.1} ms\n");
        }
        t
    }
}

/// The transform of `g`; the trivial group gets the empty system.
fn system_for(g: &GroupTable, variant: Variant) -> Result<RadonSystem, Error> {
    if g.is_trivial() {
        return RadonSystem::from_rows(g.recipe().to_string(), 1, variant, Vec::new());
    }
    build_system(g, variant)
}

fn cmd_radon(
    expr: &str,
    variant: Variant,
    cap: usize,
    matrix_csv: Option<&Path>,
    kernel: bool,
    method: RankMethod,
    out: &Output,
) -> Outcome {
    let start = Instant::now();
    let g = build_group(expr, cap)?;
    let sys = system_for(&g, variant)?;
    if let Some(path) = matrix_csv {
        fs::write(path, sys.matrix_csv())?;
    }
    let verdict = decide(&sys, method);
    let kernel = kernel.then(|| kernel_to_json(&sys.kernel()));
    let record = VerdictRecord { verdict, timing_ms: out.elapsed(start), kernel };
    out.emit(&record, || record.text());
    Ok(())
}

#[derive(Serialize)]
struct AbelianSpectral {
    group: String,
    characters: usize,
    faithful: usize,
    kernel_dim: usize,
    kernel_matches_faithful: bool,
    char_sum_exact: bool,
    fourier_max_error: f64,
    tolerance: f64,
    fourier_passed: bool,
}

#[derive(Serialize)]
struct RepSpectral {
    dim: usize,
    projection_checks: usize,
    projection_failures: usize,
    fixed_span_dim: usize,
    common_kernel_dim: usize,
    dichotomy_ok: bool,
    coefficient_rank: usize,
    coefficients_annihilated: bool,
}

#[derive(Serialize)]
struct NonabelianSpectral {
    group: String,
    kernel_dim: usize,
    char_sum_exact: bool,
    coefficients_span_kernel: bool,
    reps: Vec<RepSpectral>,
}

fn cmd_spectral(
    expr: &str,
    cap: usize,
    rep: Option<&Path>,
    tolerance: f64,
    samples: usize,
    seed: u64,
    out: &Output,
) -> Outcome {
    let g = build_group(expr, cap)?;
    let kernel_dim = g.order() - decide(&system_for(&g, Variant::Prime)?, RankMethod::Exact).rank;
    if rep.is_none() && coset_radon::group::is_abelian(&g) {
        let ct = characters(&g)?;
        let faithful = faithful_characters(&ct).count;
        let mut rng = SuiteOptions { max_order: None, seed }.rng();
        let mut worst = 0.0f64;
        if !g.is_trivial() {
            for _ in 0..samples {
                let f = random_function(&mut rng, g.order(), 20);
                worst = worst.max(fourier_radon_check(&g, &f, tolerance)?.max_error);
            }
        }
        let report = AbelianSpectral {
            group: g.recipe().to_string(),
            characters: ct.len(),
            faithful,
            kernel_dim,
            kernel_matches_faithful: faithful == kernel_dim,
            char_sum_exact: char_sum_check_abelian(&ct),
            fourier_max_error: worst,
            tolerance,
            fourier_passed: worst <= tolerance,
        };
        out.emit(&report, || {
            format!(
                "group {}\ncharacters {}\nfaithful {}\nkernel_dim {}\nchar-sum exact {}\nfourier max error {:e} (tolerance {:e})\n",
                report.group,
                report.characters,
                report.faithful,
                report.kernel_dim,
                report.char_sum_exact,
                report.fourier_max_error,
                report.tolerance
            )
        });
        return Ok(());
    }
    let reps: Vec<MatrixRep> = match rep {
        Some(path) => vec![load_rep_file(path, &g)?],
        None => q8_irreps(&g)?,
    };
    let homs: Vec<_> = (2..=g.order())
        .filter(|n| g.order() % n == 0)
        .flat_map(|n| coset_radon::geodesic::homomorphisms_cn(&g, n))
        .collect();
    let mut analysed = Vec::new();
    let mut spans = false;
    for r in &reps {
        let mut failures = 0;
        for hom in &homs {
            failures += usize::from(!check_projection(&g, r, hom)?.holds());
        }
        let fixed = fixed_space_analysis(&g, r)?;
        let coeff = coefficient_kernel(&g, r)?;
        spans |= coeff.spans_kernel;
        analysed.push(RepSpectral {
            dim: r.dim,
            projection_checks: homs.len(),
            projection_failures: failures,
            fixed_span_dim: fixed.f_span_dim,
            common_kernel_dim: fixed.k_dim,
            dichotomy_ok: fixed.dichotomy_ok,
            coefficient_rank: coeff.complex_rank,
            coefficients_annihilated: coeff.annihilated,
        });
    }
    let report = NonabelianSpectral {
        group: g.recipe().to_string(),
        kernel_dim,
        char_sum_exact: char_sum_check(&g, &reps).is_ok(),
        coefficients_span_kernel: spans,
        reps: analysed,
    };
    out.emit(&report, || {
        let mut t = format!(
            "group {}\nkernel_dim {}\nchar-sum exact {}\ncoefficients span kernel {}\n",
            report.group, report.kernel_dim, report.char_sum_exact, report.coefficients_span_kernel
        );
        for r in &report.reps {
            t += &format!(
                "rep dim {}: projection failures {}/{}, fixed span dim {}, common kernel dim {}, dichotomy {}, coefficient rank {}, annihilated {}\n",
                r.dim,
                r.projection_failures,
                r.projection_checks,
                r.fixed_span_dim,
                r.common_kernel_dim,
                r.dichotomy_ok,
                r.coefficient_rank,
                r.coefficients_annihilated
            );
        }
        t
    });
    Ok(())
}

#[derive(Serialize)]
struct FlowReport {
    source: String,
    size: usize,
    orbits: usize,
    stationary: usize,
    reversal_closed: bool,
    verdict: VerdictRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    correspondence: Option<CosetCorrespondence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_list: Option<Vec<FlowOrbit>>,
}

fn cmd_flow(
    file: Option<&Path>,
    constant: Option<usize>,
    group: Option<&str>,
    cap: usize,
    list_orbits: bool,
    out: &Output,
) -> Outcome {
    let start = Instant::now();
    let (source, flow, correspondence): (String, SuccessorFlow, _) = match (file, constant, group) {
        (Some(path), _, _) => (path.display().to_string(), load_flow_file(path)?, None),
        (_, Some(m), _) => {
            if m > cap {
                return Err(Error::SizeLimit { order: m, cap }.into());
            }
            (format!("constant{m}"), constant_flow(m), None)
        }
        (_, _, Some(expr)) => {
            let g = build_group(expr, cap)?;
            (g.recipe().to_string(), group_flow(&g), Some(group_flow_correspondence(&g)?))
        }
        _ => return Err(Error::Io("one of --file, --constant or --group is required".into()).into()),
    };
    let orbits = flow_orbits(&flow);
    let sys = flow_radon_system(&flow, &source)?;
    let verdict = VerdictRecord { verdict: decide(&sys, RankMethod::Exact), timing_ms: None, kernel: None };
    let mut report = FlowReport {
        source,
        size: flow.size(),
        orbits: orbits.len(),
        stationary: orbits.iter().filter(|o| o.is_stationary()).count(),
        reversal_closed: reversal_closed(&flow),
        verdict,
        correspondence,
        orbit_list: None,
    };
    report.verdict.timing_ms = out.elapsed(start);
    if list_orbits {
        report.orbit_list = Some(orbits);
    }
    out.emit(&report, || {
        let mut t = format!(
            "flow {} on {} points\norbits {} ({} stationary)\nreversal closed {}\n",
            report.source, report.size, report.orbits, report.stationary, report.reversal_closed
        );
        if let Some(c) = &report.correspondence {
            t += &format!(
                "orbit projections {} vs cyclic-subgroup cosets {}: {}\n",
                c.distinct_projections,
                c.cosets,
                if c.holds() { "match" } else { "MISMATCH" }
            );
        }
        if let Some(list) = &report.orbit_list {
            for o in list {
                t += &format!("period {:>3}: {:?}\n", o.period, o.projection);
            }
        }
        t + &report.verdict.text()
    });
    Ok(())
}

fn cmd_verify(suite: &str, max_order: Option<usize>, seed: u64, out: &Output) -> Outcome {
    let opts = SuiteOptions { max_order, seed };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let reports: Vec<SuiteReport> = names.iter().map(|s| run_suite(s, &opts)).collect::<Result<_, _>>()?;
    if out.json {
        if let [single] = reports.as_slice() {
            out.emit(single, String::new);
        } else {
            out.emit(&reports, String::new);
        }
    } else {
        for r in &reports {
            for c in r.failures() {
                println!("FAIL {} {}: expected {}, computed {}", r.suite, c.group, c.expected, c.computed);
            }
            println!(
                "{} {}: {}/{} cases passed",
                if r.passed() { "PASS" } else { "FAIL" },
                r.suite,
                r.summary.passed,
                r.summary.total
            );
        }
    }
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Suite)
    }
}
