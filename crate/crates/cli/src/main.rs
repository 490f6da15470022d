use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trinodiff::config::{OutputFormat, RunConfig, Suite};
use trinodiff::{checks, render_report, run_failed};
use trinodiff_core::codes::{
    distribution_csv, dual_low_weights, dual_triples_direct, enumerator_string, walsh_spectrum,
    weight_distribution_direct, weight_distribution_from_spectrum, WalshMethod,
};
use trinodiff_core::curves::{count_affine_points, curve, find_singular_points, CURVE_IDS};
use trinodiff_core::diffset::{check_difference_set, trace_power_set};
use trinodiff_core::polyfun::{catalog, preimage_profile, CATALOG_IDS};
use trinodiff_core::{ElementSet, FieldCtx};

#[derive(Parser)]
#[command(
    name = "trinodiff",
    about = "Exhaustive verification of difference sets, value-set profiles, curve counts and tri-weight codes from trinomials over odd-degree binary fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites across one or more degrees.
    Verify {
        /// Comma-separated odd degrees, e.g. 5,7,9
        #[arg(long = "m", value_delimiter = ',', required = true)]
        m_values: Vec<u32>,
        /// Comma-separated suite names (default: all).
        #[arg(long, value_delimiter = ',')]
        suites: Vec<Suite>,
        /// Output format.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat conjecture-status failures as run failures.
        #[arg(long)]
        strict: bool,
        /// Run the exhaustive curve scans at every requested degree.
        #[arg(long)]
        deep: bool,
        /// Worker threads for the check scheduler.
        #[arg(long, env = "TRINODIFF_THREADS", default_value_t = 1)]
        threads: usize,
        /// Report measured per-check times (off by default so reports are
        /// byte-identical across runs).
        #[arg(long)]
        timing: bool,
    },
    /// Preimage profile and difference-set verdict of one catalog map.
    Profile {
        /// Catalog id, e.g. f11 or canon_c.
        #[arg(long)]
        map: String,
        #[arg(long)]
        m: u32,
    },
    /// Affine point count and singular points of one catalog curve.
    Curve {
        /// Curve id, e.g. c41_C2.
        #[arg(long)]
        id: String,
        #[arg(long)]
        m: u32,
    },
    /// Weight distribution and dual weights of the code defined by a set.
    Code {
        /// Catalog id (the punctured value-set) or t<n> for a trace set.
        #[arg(long)]
        set: String,
        #[arg(long)]
        m: u32,
        /// Also write the distribution as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Write to stdout, tolerating a closed pipe (e.g. `trinodiff ... | head`).
fn emit(bytes: &[u8]) {
    let _ = std::io::stdout().write_all(bytes);
}

fn run() -> Result<ExitCode, Box<dyn std::error::Error>> {
    match Cli::parse().command {
        Command::Verify {
            m_values,
            suites,
            format,
            out,
            strict,
            deep,
            threads,
            timing,
        } => {
            let config = RunConfig::new(m_values, suites)?
                .with_threads(threads)
                .with_strict(strict)
                .with_deep(deep)
                .with_timing(timing);
            let results = checks::run_suites(&config);
            let bytes = render_report(&results, &config, format);
            match out {
                Some(path) => std::fs::write(&path, &bytes)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => emit(&bytes),
            }
            Ok(if run_failed(&results, strict) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Profile { map, m } => {
            let ctx = FieldCtx::new(m)?;
            if !CATALOG_IDS.contains(&map.as_str()) {
                return Err(format!("unknown map `{map}` (known: {})", CATALOG_IDS.join(", ")).into());
            }
            let rational = catalog(&map, &ctx)?;
            let compiled = rational.compile(&ctx)?;
            let prof = preimage_profile(&rational, &ctx)?;
            let verdict = check_difference_set(prof.value_set(), &ctx)?;
            let mut out = format!(
                "map {map} at m = {m}: exponents {:?}\n",
                compiled.exponents()
            );
            out += &format!("punctured value-set size: {}\n", prof.value_set().len());
            out += &format!(
                "preimage histogram (multiplicity -> values): {:?}\n",
                prof.histogram()
            );
            out += &format!("preimages of 0 within the group: {}\n", prof.zero_preimages());
            match (verdict.is_difference_set, verdict.lambda, verdict.singer_family) {
                (true, Some(lambda), family) => {
                    out += &format!(
                        "difference set: yes ({}, {}, {lambda}), singer family: {family:?}\n",
                        verdict.v, verdict.k
                    )
                }
                _ => {
                    out += &format!(
                        "difference set: no ({} distinct lambda values)\n",
                        verdict.lambda_histogram.len()
                    )
                }
            }
            emit(out.as_bytes());
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve { id, m } => {
            let ctx = FieldCtx::new(m)?;
            if !CURVE_IDS.contains(&id.as_str()) {
                return Err(
                    format!("unknown curve `{id}` (known: {})", CURVE_IDS.join(", ")).into(),
                );
            }
            let c = curve(&id)?;
            let mut out = format!("curve {id} at m = {m}: {} monomials\n", c.monomials().len());
            out += &format!("affine points: {}\n", count_affine_points(&c, &ctx));
            let singular = find_singular_points(&c, &ctx);
            out += &format!("singular points: {}\n", singular.len());
            for (x, y) in singular.iter().take(8) {
                out += &format!("  ({:#x}, {:#x})\n", x.bits(), y.bits());
            }
            emit(out.as_bytes());
            Ok(ExitCode::SUCCESS)
        }
        Command::Code { set, m, csv } => {
            let ctx = FieldCtx::new(m)?;
            let d = parse_defining_set(&set, &ctx)?;
            let spectrum = walsh_spectrum(&d, &ctx, WalshMethod::Fast);
            let dist = match weight_distribution_from_spectrum(&d, &spectrum, &ctx) {
                Ok(dist) => dist,
                Err(e) => {
                    eprintln!("spectrum construction does not apply ({e}); enumerating directly");
                    weight_distribution_direct(&d, &ctx)
                }
            };
            let mut out = format!("code from {set} at m = {m}: [{}, {}]\n", dist.n, dist.k);
            out += &format!("weight distribution: {:?}\n", dist.counts);
            out += &format!("enumerator: {}\n", enumerator_string(&dist));
            match dual_low_weights(&dist) {
                Ok((a1, a2, a3)) => out += &format!("dual weights A1..A3: ({a1}, {a2}, {a3})\n"),
                Err(e) => out += &format!("dual weights: {e}\n"),
            }
            let (d1, d2, d3) = dual_triples_direct(&d, &ctx);
            out += &format!("dual weights by column analysis: ({d1}, {d2}, {d3})\n");
            if let Some(path) = csv {
                std::fs::write(&path, distribution_csv(&dist))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                out += &format!("csv written to {}\n", path.display());
            }
            emit(out.as_bytes());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_defining_set(name: &str, ctx: &FieldCtx) -> Result<ElementSet, String> {
    if let Some(n) = name.strip_prefix('t').and_then(|s| s.parse::<u64>().ok()) {
        return Ok(trace_power_set(n, ctx));
    }
    if CATALOG_IDS.contains(&name) {
        let map = catalog(name, ctx).map_err(|e| e.to_string())?;
        return trinodiff_core::polyfun::punctured_value_set(&map, ctx).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown set `{name}` (catalog ids or t<n> trace sets)"
    ))
}
