//! Command-line surface.
//!
//! One thin binary ties the library together: ingestion of count CSVs,
//! order comparison, measure evaluation, relation inspection, and the
//! experiment drivers (sweep, curves, catalog, audit, transitivity search).
//!
//! Verdicts are *data*: a failing order or a reported measure violation
//! still exits 0. Only malformed input, violated preconditions, or broken
//! internal invariants exit nonzero.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dist::DiscreteDist;
use crate::experiments::{audit, catalog, curves, sweep, transitivity};
use crate::io as dio;
use crate::measures::{self, MeasureKind, MeasureOpts, MeasureSpec, QuantileVariant};
use crate::orders::OrderKind;
use crate::relations;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Keep each input in its declared mode.
    Auto,
    /// Reject inputs containing floating-point data.
    Exact,
    /// Convert every input to floating point.
    Approx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuantileArg {
    /// Generalized inverse (left-continuous quantile).
    Left,
    /// Midpoint convention on flat cdf pieces.
    Mid,
}

impl QuantileArg {
    fn variant(self) -> QuantileVariant {
        match self {
            QuantileArg::Left => QuantileVariant::Left,
            QuantileArg::Mid => QuantileVariant::Mid,
        }
    }
}

/// Dispersion orders and dispersion measures for discrete distributions.
#[derive(Parser)]
#[command(name = "disporder", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Numeric mode for loaded distributions.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,

    /// Absolute tolerance for floating-point level comparisons.
    #[arg(long, global = true, default_value_t = 1e-12)]
    eps: f64,

    /// Tail mass bound when truncating infinite families.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tail_eps: f64,

    /// Quantile convention for median-anchored measures.
    #[arg(long, global = true, value_enum, default_value_t = QuantileArg::Left)]
    quantile: QuantileArg,

    /// Output format (commands fall back to text where a format does not
    /// apply; CSV is available for measures, sweep and curves).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized commands (audit, transitivity).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a `value,count` CSV into canonical distribution JSON.
    Ingest {
        /// CSV file with a `value,count` header.
        csv: PathBuf,
        /// Label stored in the emitted document (defaults to the file stem).
        #[arg(long)]
        label: Option<String>,
    },
    /// Decide orders (and optionally compare measures) between two
    /// distributions given as JSON documents or `value,count` CSVs.
    Compare {
        f: PathBuf,
        g: PathBuf,
        /// Comma-separated orders to decide.
        #[arg(long, default_value = "disp,and,or,st,dil,weak")]
        orders: String,
        /// Comma-separated measure specs to evaluate on both inputs;
        /// reversals against the meet order are flagged.
        #[arg(long)]
        measures: Option<String>,
    },
    /// Evaluate dispersion measures of one distribution.
    Measures {
        dist: PathBuf,
        /// Comma-separated measure specs.
        #[arg(long, default_value = "sd,gmd,mad,mdmad,iqnr:0.25:0.75,ienr:0.25:0.75")]
        spec: String,
        /// Apply finite-sample bias corrections (needs a recorded sample
        /// size; affects sd and the mean difference).
        #[arg(long)]
        sample_corrected: bool,
    },
    /// Print the dispersion-relevant index relations between two
    /// distributions.
    Relations {
        f: PathBuf,
        g: PathBuf,
        /// Also print the nearest interior levels of G around each lower
        /// jump level of F.
        #[arg(long)]
        nn: bool,
    },
    /// Sweep the parameter square of a family, comparing the sufficient
    /// region criterion against the computed meet-order verdict.
    Sweep {
        /// Family to sweep (only `geometric` is available).
        family: String,
        /// Exact grid step in (0, 1/2], e.g. `0.05` or `1/20`.
        #[arg(long, default_value = "0.05")]
        step: String,
        /// Also render the two-panel SVG heatmap to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Build and compare the laws in floating point instead of exact
        /// rationals.
        #[arg(long)]
        approx: bool,
    },
    /// Trace the measures over a one-parameter family as CSV.
    Curves {
        /// `uniform` (uses --n-max) or `geometric` (uses --step).
        family: String,
        /// Largest uniform support size.
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        /// Exact parameter step for the geometric family.
        #[arg(long, default_value = "0.01")]
        step: String,
    },
    /// List the bundled example catalog.
    Catalog {
        /// Re-verify every expectation and fail on any drift.
        #[arg(long)]
        verify: bool,
    },
    /// Randomized preservation audit of one measure over the meet order.
    Audit {
        /// Measure spec to audit.
        #[arg(long, default_value = "iqnr:0.25:0.75")]
        measure: String,
        /// Number of candidate pairs to examine.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Search for a non-transitivity witness of a discrete dispersive
    /// order.
    Transitivity {
        /// `and` (meet) or `or` (join).
        #[arg(long, default_value = "and")]
        order: String,
        /// Number of verified two-edge chains to examine.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Draw equally-spaced (lattice) distributions only.
        #[arg(long)]
        lattice: bool,
    },
}

/// Entry point used by the binary.
pub fn run() -> Result<()> {
    dispatch(Cli::parse())
}

fn dispatch(cli: Cli) -> Result<()> {
    if !(cli.eps > 0.0 && cli.eps.is_finite()) {
        return Err(Error::BadParam(format!(
            "--eps must be positive, got {}",
            cli.eps
        )));
    }
    if !(cli.tail_eps > 0.0 && cli.tail_eps < 1.0) {
        return Err(Error::BadParam(format!(
            "--tail-eps must lie in (0, 1), got {}",
            cli.tail_eps
        )));
    }
    let tol = Tol::new(cli.eps);
    let variant = cli.quantile.variant();
    match &cli.command {
        Command::Ingest { csv, label } => cmd_ingest(&cli, csv, label.as_deref(), tol),
        Command::Compare {
            f,
            g,
            orders,
            measures,
        } => cmd_compare(&cli, f, g, orders, measures.as_deref(), tol, variant),
        Command::Measures {
            dist,
            spec,
            sample_corrected,
        } => cmd_measures(&cli, dist, spec, *sample_corrected, tol, variant),
        Command::Relations { f, g, nn } => cmd_relations(&cli, f, g, *nn, tol),
        Command::Sweep {
            family,
            step,
            svg,
            approx,
        } => cmd_sweep(&cli, family, step, svg.as_deref(), *approx, tol),
        Command::Curves {
            family,
            n_max,
            step,
        } => cmd_curves(&cli, family, *n_max, step, tol, variant),
        Command::Catalog { verify } => cmd_catalog(&cli, *verify, tol),
        Command::Audit { measure, budget } => cmd_audit(&cli, measure, *budget, tol, variant),
        Command::Transitivity {
            order,
            budget,
            lattice,
        } => cmd_transitivity(&cli, order, *budget, *lattice, tol),
    }
}

// ---- plumbing --------------------------------------------------------------

fn emit(cli: &Cli, content: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn load_dist(path: &Path, mode: Mode, tol: Tol) -> Result<DiscreteDist> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("cannot read {}: {e}", path.display())))?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let d = if is_csv {
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "counts".to_string());
        dio::dist_from_csv(&label, &text, tol)?
    } else {
        dio::dist_from_json(&text, tol)?
    };
    match mode {
        Mode::Auto => Ok(d),
        Mode::Approx => Ok(d.to_approx()),
        Mode::Exact => {
            if d.is_approx() {
                Err(Error::BadParam(format!(
                    "--mode exact, but '{}' contains floating-point data",
                    d.label()
                )))
            } else {
                Ok(d)
            }
        }
    }
}

/// Render a scalar for humans: exact ratios keep their exact form with a
/// decimal hint, floats print shortest-round-trip.
fn show(s: &Scalar) -> String {
    if s.is_exact() {
        if s.is_integer() {
            format!("{s}")
        } else {
            format!("{s} (~{})", s.to_f64())
        }
    } else {
        format!("{}", s.to_f64())
    }
}

fn dist_headline(d: &DiscreteDist) -> String {
    let mut line = format!(
        "{}: {} atoms on [{}, {}], {}",
        d.label(),
        d.n(),
        show(d.min_support()),
        show(d.max_support()),
        if d.is_approx() { "approx" } else { "exact" },
    );
    if let Some(n) = d.sample_size() {
        line.push_str(&format!(", sample size {n}"));
    }
    if d.tail_defect().is_positive() {
        line.push_str(&format!(", tail defect {}", show(d.tail_defect())));
    }
    line
}

// ---- commands --------------------------------------------------------------

fn cmd_ingest(cli: &Cli, csv: &Path, label: Option<&str>, tol: Tol) -> Result<()> {
    let d = load_dist(csv, cli.mode, tol)?;
    let d = match label {
        Some(l) => d.relabel(l),
        None => d,
    };
    emit(cli, &dio::dist_to_json(&d))
}

fn cmd_compare(
    cli: &Cli,
    f_path: &Path,
    g_path: &Path,
    orders_arg: &str,
    measures_arg: Option<&str>,
    tol: Tol,
    variant: QuantileVariant,
) -> Result<()> {
    let f = load_dist(f_path, cli.mode, tol)?;
    let g = load_dist(g_path, cli.mode, tol)?;
    let kinds = OrderKind::parse_list(orders_arg)?;
    let verdicts: Vec<_> = kinds.iter().map(|k| (*k, k.decide(&f, &g, tol))).collect();
    let meet_holds = crate::orders::leq_disc_and(&f, &g, tol).holds;

    let opts = MeasureOpts {
        variant,
        tol,
        sample_corrected: false,
    };
    let mut measure_rows = Vec::new();
    if let Some(arg) = measures_arg {
        for spec in MeasureSpec::parse_list(arg)? {
            let tau_f = measures::evaluate(&f, &spec, &opts)?;
            let tau_g = measures::evaluate(&g, &spec, &opts)?;
            let reversed = tau_f > tau_g;
            measure_rows.push((spec, tau_f, tau_g, reversed));
        }
    }

    match cli.format {
        Format::Json => {
            let orders_json: Vec<_> = verdicts
                .iter()
                .map(|(k, v)| {
                    json!({
                        "order": k.name(),
                        "holds": v.holds,
                        "approximate": v.approximate,
                        "witness": v.witness.as_ref().map(|w| w.to_string()),
                    })
                })
                .collect();
            let measures_json: Vec<_> = measure_rows
                .iter()
                .map(|(s, tf, tg, rev)| {
                    json!({
                        "measure": s.name(),
                        "f": tf,
                        "g": tg,
                        "reversed_against_meet": *rev && meet_holds,
                    })
                })
                .collect();
            let doc = json!({
                "f": f.label(),
                "g": g.label(),
                "orders": orders_json,
                "measures": measures_json,
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Text | Format::Csv => {
            if cli.format == Format::Csv {
                return Err(Error::BadParam(
                    "compare has no CSV form; use --format text or json".into(),
                ));
            }
            let mut out = String::new();
            out.push_str(&format!("F  {}\n", dist_headline(&f)));
            out.push_str(&format!("G  {}\n\n", dist_headline(&g)));
            for (k, v) in &verdicts {
                out.push_str(&format!(
                    "{:<6} {}{}\n",
                    k.name(),
                    if v.holds { "holds" } else { "fails" },
                    if v.approximate { " (approximate)" } else { "" },
                ));
                if let Some(w) = &v.witness {
                    out.push_str(&format!("       witness: {w}\n"));
                }
            }
            if !measure_rows.is_empty() {
                out.push('\n');
                for (s, tf, tg, rev) in &measure_rows {
                    out.push_str(&format!(
                        "{:<14} F = {:<20} G = {:<20}{}\n",
                        s.name(),
                        show(tf),
                        show(tg),
                        if *rev && meet_holds {
                            "  REVERSED against the meet order"
                        } else {
                            ""
                        },
                    ));
                }
            }
            emit(cli, &out)
        }
    }
}

fn cmd_measures(
    cli: &Cli,
    path: &Path,
    spec_arg: &str,
    sample_corrected: bool,
    tol: Tol,
    variant: QuantileVariant,
) -> Result<()> {
    let d = load_dist(path, cli.mode, tol)?;
    let specs = MeasureSpec::parse_list(spec_arg)?;
    let opts = MeasureOpts {
        variant,
        tol,
        sample_corrected,
    };
    let mut rows = Vec::new();
    for spec in &specs {
        let value = measures::evaluate(&d, spec, &opts)?;
        // the standard deviation is surfaced with its exact variance when
        // the arithmetic is exact (the square root itself is a float)
        let exact_variance = if spec.kind == MeasureKind::Sd && !d.is_approx() {
            let mut var = measures::variance(&d);
            if sample_corrected {
                // evaluate() has already required a sample size >= 2
                let n = d.sample_size().expect("sample correction validated") as i64;
                var = &var * &Scalar::ratio(n, n - 1);
            }
            Some(var)
        } else {
            None
        };
        rows.push((spec.clone(), value, exact_variance));
    }
    match cli.format {
        Format::Json => {
            let doc = json!({
                "distribution": f_label_json(&d),
                "sample_corrected": sample_corrected,
                "variant": match variant { QuantileVariant::Left => "left", QuantileVariant::Mid => "mid" },
                "measures": rows.iter().map(|(s, v, var)| json!({
                    "measure": s.name(),
                    "value": v,
                    "decimal": v.to_f64(),
                    "exact_variance": var,
                })).collect::<Vec<_>>(),
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Csv => {
            let mut out = String::from("measure,value\n");
            for (s, v, _) in &rows {
                out.push_str(&format!("{},{}\n", s.name(), v.to_f64()));
            }
            emit(cli, &out)
        }
        Format::Text => {
            let mut out = format!("{}\n\n", dist_headline(&d));
            for (s, v, var) in &rows {
                out.push_str(&format!("{:<14} {}", s.name(), show(v)));
                if let Some(var) = var {
                    out.push_str(&format!("   [exact variance {}]", show(var)));
                }
                out.push('\n');
            }
            emit(cli, &out)
        }
    }
}

fn f_label_json(d: &DiscreteDist) -> serde_json::Value {
    json!({
        "label": d.label(),
        "atoms": d.n(),
        "mode": if d.is_approx() { "approx" } else { "exact" },
        "sample_size": d.sample_size(),
    })
}

fn cmd_relations(cli: &Cli, f_path: &Path, g_path: &Path, nn: bool, tol: Tol) -> Result<()> {
    let f = load_dist(f_path, cli.mode, tol)?;
    let g = load_dist(g_path, cli.mode, tol)?;
    let (join, and, or) = relations::rel_all(&f, &g, tol);
    let nn_sets = if nn {
        let mut sets = Vec::new();
        for a in 2..=f.n() {
            sets.push(relations::nn_set(&f, &g, a, tol)?);
        }
        Some(sets)
    } else {
        None
    };
    match cli.format {
        Format::Json => {
            let doc = json!({
                "f": f.label(),
                "g": g.label(),
                "join": join.pairs,
                "and": and.pairs,
                "or": or.pairs,
                "nn": nn_sets.as_ref().map(|sets| sets.iter().map(|s| json!({
                    "a": s.owner,
                    "levels": s.levels,
                })).collect::<Vec<_>>()),
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Csv => Err(Error::BadParam(
            "relations has no CSV form; use --format text or json".into(),
        )),
        Format::Text => {
            let fmt_pairs = |set: &relations::RelationSet| {
                if set.pairs.is_empty() {
                    "(empty)".to_string()
                } else {
                    set.pairs
                        .iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            };
            let mut out = String::new();
            out.push_str(&format!("F  {}\n", dist_headline(&f)));
            out.push_str(&format!("G  {}\n\n", dist_headline(&g)));
            out.push_str(&format!("join {}\n", fmt_pairs(&join)));
            out.push_str(&format!("and  {}\n", fmt_pairs(&and)));
            out.push_str(&format!("or   {}\n", fmt_pairs(&or)));
            if let Some(sets) = &nn_sets {
                out.push_str("\nnearest interior levels of G around F's lower jump levels:\n");
                for s in sets {
                    let levels = s.levels.iter().map(show).collect::<Vec<_>>().join(", ");
                    out.push_str(&format!("  a = {}: {}\n", s.owner, levels));
                }
            }
            emit(cli, &out)
        }
    }
}

fn cmd_sweep(
    cli: &Cli,
    family: &str,
    step_arg: &str,
    svg: Option<&Path>,
    approx: bool,
    tol: Tol,
) -> Result<()> {
    if family != "geometric" {
        return Err(Error::BadParam(format!(
            "unknown sweep family '{family}' (available: geometric)"
        )));
    }
    let step = Scalar::parse_exact(step_arg)?;
    let grid = sweep::geom_sweep(&step, &Scalar::approx(cli.tail_eps), approx, tol)?;
    if let Some(path) = svg {
        let mut buf = Vec::new();
        grid.write_svg(&mut buf)?;
        fs::write(path, buf)?;
    }
    let csv_text = {
        let mut buf = Vec::new();
        grid.write_csv(&mut buf)?;
        String::from_utf8(buf).expect("csv is utf-8")
    };
    match cli.format {
        Format::Csv => emit(cli, &csv_text),
        Format::Json => {
            let (computed, holds, fails, skipped) = grid.counts();
            let doc = json!({
                "family": "geometric",
                "step": step,
                "tail_eps": cli.tail_eps,
                "mode": if approx { "approx" } else { "exact" },
                "axis": grid.axis,
                "computed": computed,
                "holds": holds,
                "fails": fails,
                "skipped": skipped,
                "theory_violations": grid.violations().len(),
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Text => {
            // with --out the natural artifact is the CSV itself; the text
            // summary goes to stdout only
            if cli.out.is_some() {
                emit(cli, &csv_text)?;
            }
            let (computed, holds, fails, skipped) = grid.counts();
            println!(
                "geometric sweep, step {} ({} axis values, {} mode, tail eps {})",
                show(&step),
                grid.axis.len(),
                if approx { "approx" } else { "exact" },
                cli.tail_eps,
            );
            println!("cells: {computed} computed ({holds} hold, {fails} fail), {skipped} skipped");
            println!(
                "sufficient-region violations (criterion true but order fails): {}",
                grid.violations().len()
            );
            if let Some(path) = svg {
                println!("heatmap written to {}", path.display());
            }
            Ok(())
        }
    }
}

fn cmd_curves(
    cli: &Cli,
    family: &str,
    n_max: u64,
    step_arg: &str,
    tol: Tol,
    variant: QuantileVariant,
) -> Result<()> {
    let family = match family {
        "uniform" => curves::Family::UniformRange { n_max },
        "geometric" => curves::Family::Geometric {
            step: Scalar::parse_exact(step_arg)?,
            tail_eps: Scalar::approx(cli.tail_eps),
        },
        other => {
            return Err(Error::BadParam(format!(
                "unknown curves family '{other}' (available: uniform, geometric)"
            )))
        }
    };
    let opts = MeasureOpts {
        variant,
        tol,
        sample_corrected: false,
    };
    let table = curves::measure_curves(&family, &measures::default_specs(), &opts)?;
    let csv_text = {
        let mut buf = Vec::new();
        table.write_csv(&mut buf)?;
        String::from_utf8(buf).expect("csv is utf-8")
    };
    match cli.format {
        Format::Json => {
            let doc = json!({
                "family": table.family,
                "param": table.param_name,
                "specs": table.specs.iter().map(|s| s.name()).collect::<Vec<_>>(),
                "rows": table.rows.iter().map(|(p, vs)| json!({
                    "param": p,
                    "values": vs,
                })).collect::<Vec<_>>(),
            });
            emit(cli, &format!("{:#}", doc))
        }
        _ => emit(cli, &csv_text),
    }
}

fn cmd_catalog(cli: &Cli, verify: bool, tol: Tol) -> Result<()> {
    let cases = catalog::catalog();
    let failures = if verify {
        catalog::verify_catalog(tol)
    } else {
        Vec::new()
    };
    match cli.format {
        Format::Json => {
            let doc = json!({
                "cases": cases.iter().map(|c| json!({
                    "name": c.name,
                    "note": c.note,
                    "f": dio::dist_to_value(&c.f),
                    "g": dio::dist_to_value(&c.g),
                    "expectations": c.expectations.len(),
                })).collect::<Vec<_>>(),
                "verified": verify,
                "failures": failures.iter().map(|(n, p)| json!({
                    "case": n,
                    "problems": p,
                })).collect::<Vec<_>>(),
            });
            emit(cli, &format!("{:#}", doc))?;
        }
        Format::Csv => {
            return Err(Error::BadParam(
                "catalog has no CSV form; use --format text or json".into(),
            ))
        }
        Format::Text => {
            let mut out = String::new();
            for c in &cases {
                out.push_str(&format!(
                    "{:<22} F: {:<28} G: {:<28} {} expectation(s)\n",
                    c.name,
                    format!("{} ({} atoms)", c.f.label(), c.f.n()),
                    format!("{} ({} atoms)", c.g.label(), c.g.n()),
                    c.expectations.len(),
                ));
            }
            if verify {
                out.push_str(&format!(
                    "\nverification: {} of {} cases pass\n",
                    cases.len() - failures.len(),
                    cases.len()
                ));
            }
            emit(cli, &out)?;
        }
    }
    if verify && !failures.is_empty() {
        return Err(Error::BadParam(format!(
            "catalog verification failed for {} case(s): {}",
            failures.len(),
            failures
                .iter()
                .map(|(n, _)| n.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(())
}

fn cmd_audit(
    cli: &Cli,
    measure: &str,
    budget: u64,
    tol: Tol,
    variant: QuantileVariant,
) -> Result<()> {
    let spec = MeasureSpec::parse(measure)?;
    let report = audit::preservation_audit(&spec, variant, budget, cli.seed, tol)?;
    match cli.format {
        Format::Json => {
            let doc = json!({
                "measure": report.spec.name(),
                "variant": match report.variant { QuantileVariant::Left => "left", QuantileVariant::Mid => "mid" },
                "examined": report.examined,
                "accepted": report.accepted,
                "conclusive": report.conclusive(),
                "violations": report.violations.iter().map(|v| json!({
                    "f": dio::dist_to_value(&v.f),
                    "g": dio::dist_to_value(&v.g),
                    "tau_f": v.tau_f,
                    "tau_g": v.tau_g,
                })).collect::<Vec<_>>(),
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Csv => Err(Error::BadParam(
            "audit has no CSV form; use --format text or json".into(),
        )),
        Format::Text => {
            let mut out = format!(
                "audit of {} ({} quantiles): {} pairs examined, {} with the meet order verified\n",
                report.spec.name(),
                match report.variant {
                    QuantileVariant::Left => "left",
                    QuantileVariant::Mid => "mid",
                },
                report.examined,
                report.accepted,
            );
            if !report.conclusive() {
                out.push_str("inconclusive: no ordered pair found within the budget\n");
            } else if report.violations.is_empty() {
                out.push_str(
                    "no violations: the measure respected the meet order on every accepted pair\n",
                );
            } else {
                out.push_str(&format!("{} violation(s):\n", report.violations.len()));
                for v in report.violations.iter().take(5) {
                    out.push_str(&format!(
                        "  tau(F) = {} > {} = tau(G)   F = {}, G = {}\n",
                        show(&v.tau_f),
                        show(&v.tau_g),
                        v.f.label(),
                        v.g.label(),
                    ));
                }
                if report.violations.len() > 5 {
                    out.push_str(&format!("  … and {} more\n", report.violations.len() - 5));
                }
            }
            emit(cli, &out)
        }
    }
}

fn cmd_transitivity(cli: &Cli, order: &str, budget: u64, lattice: bool, tol: Tol) -> Result<()> {
    let kind = OrderKind::parse(order)?;
    let report = transitivity::transitivity_search(kind, budget, cli.seed, lattice, tol)?;
    match cli.format {
        Format::Json => {
            let doc = json!({
                "order": report.order.name(),
                "lattice_only": report.lattice_only,
                "triples_examined": report.triples_examined,
                "pool_size": report.pool_size,
                "witness": report.witness.as_ref().map(|[f, g, h]| json!({
                    "f": dio::dist_to_value(f),
                    "g": dio::dist_to_value(g),
                    "h": dio::dist_to_value(h),
                })),
            });
            emit(cli, &format!("{:#}", doc))
        }
        Format::Csv => Err(Error::BadParam(
            "transitivity has no CSV form; use --format text or json".into(),
        )),
        Format::Text => {
            let mut out = format!(
                "transitivity search for the {} order{}: {} verified chains examined\n",
                report.order.name(),
                if report.lattice_only {
                    " (lattice distributions only)"
                } else {
                    ""
                },
                report.triples_examined,
            );
            match &report.witness {
                Some([f, g, h]) => {
                    out.push_str("witness found (F ⪯ G ⪯ H but not F ⪯ H):\n");
                    for (tag, d) in [("F", f), ("G", g), ("H", h)] {
                        let atoms = d
                            .atoms()
                            .iter()
                            .map(|(x, p)| format!("{}:{}", show(x), show(p)))
                            .collect::<Vec<_>>()
                            .join(" ");
                        out.push_str(&format!("  {tag}: {atoms}\n"));
                    }
                }
                None => out.push_str("no witness found\n"),
            }
            emit(cli, &out)
        }
    }
}
