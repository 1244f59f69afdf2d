//! `genylm` — evaluate, tabulate, plot, and validate generalized l = 2 spherical
//! harmonics from the command line.
//!
//! All angles on the command line are degrees; everything internal is radians.
//! Exit codes: 0 success, 1 at least one validation check failed, 2 bad
//! invocation or configuration. A downstream reader closing the pipe early
//! (`genylm errata | head`) ends the process quietly with exit 0.

use clap::{Args, Parser, Subcommand};
use genylm::amplitudes::chi_matrix;
use genylm::errata::erratum_report;
use genylm::harmonics::Family;
use genylm::quadrature::sphere_grid;
use genylm::verify::{
    composition_deviation, derivative_cross_check, eigen_residual, limit_deviation,
    oracle_deviation, orthonormality_report, parity_check, sample_directions, sample_positions,
    sum_rule_deviation, unitarity_check,
};
use genylm::{AngularPosition, Direction, HalfInt, M_VALUES};
use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "genylm",
    version,
    about = "Generalized l = 2 spherical harmonics: evaluation, tables, plots, and a validation battery"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one harmonic at one point
    Eval(EvalArgs),
    /// Print the amplitude table or a family Gram matrix as CSV
    Table(TableArgs),
    /// Run the verification battery (CHECK lines; exit 1 on any FAIL)
    Validate(ValidateArgs),
    /// Measure every as-tabulated formula against its derived counterpart
    Errata(ErrataArgs),
    /// Emit a CSV field of one harmonic over a uniform angular grid
    PlotData(PlotDataArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family '{s}' (expected one of: {})", names.join(", "))
    })
}

#[derive(Args)]
struct EvalArgs {
    /// Harmonic family to evaluate
    #[arg(long, default_value = "composed", value_parser = parse_family)]
    family: Family,
    /// Projection quantum number, -2 ..= 2
    #[arg(long, allow_negative_numbers = true)]
    m: i32,
    /// Quantization axis: polar and azimuth angles in degrees
    #[arg(long, num_args = 2, value_names = ["THETA_DEG", "PHI_DEG"],
          allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
    axis: Vec<f64>,
    /// Evaluation point: polar and azimuth angles in degrees
    #[arg(long, num_args = 2, value_names = ["THETA_DEG", "PHI_DEG"],
          allow_negative_numbers = true)]
    at: Vec<f64>,
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    kind: TableKind,
}

#[derive(Subcommand)]
enum TableKind {
    /// 5×5 probability-amplitude table χ(m_i, m_f) at an axis
    Chi {
        /// Quantization axis: polar and azimuth angles in degrees
        #[arg(long, num_args = 2, value_names = ["THETA_DEG", "PHI_DEG"],
              allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
        axis: Vec<f64>,
    },
    /// 5×5 Gram matrix ⟨f_a, f_b⟩ of one family on a quadrature grid
    Gram {
        /// Harmonic family
        #[arg(long, default_value = "composed", value_parser = parse_family)]
        family: Family,
        /// Quantization axis: polar and azimuth angles in degrees
        #[arg(long, num_args = 2, value_names = ["THETA_DEG", "PHI_DEG"],
              allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
        axis: Vec<f64>,
        /// Quadrature resolution: polar nodes and azimuthal nodes
        #[arg(long, num_args = 2, value_names = ["N_THETA", "N_PHI"],
              default_values_t = [16usize, 16usize])]
        grid: Vec<usize>,
    },
}

#[derive(Args)]
struct ValidateArgs {
    /// Validate a single family instead of the full battery
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Seed for every sampled axis and point
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled quantization axes for the per-family checks
    #[arg(long, default_value_t = 10)]
    dirs: usize,
    /// Number of sampled axes for the amplitude-matrix checks
    #[arg(long, default_value_t = 1000)]
    matrix_dirs: usize,
    /// Number of sampled evaluation points for the pointwise checks
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// Quadrature resolution: polar nodes and azimuthal nodes
    #[arg(long, num_args = 2, value_names = ["N_THETA", "N_PHI"],
          default_values_t = [16usize, 16usize])]
    grid: Vec<usize>,
    #[arg(long, default_value_t = 1e-12)]
    tol_unitarity: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_oracle: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_composition: f64,
    #[arg(long, default_value_t = 1e-13)]
    tol_limit: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_ortho: f64,
    #[arg(long, default_value_t = 1e-13)]
    tol_parity: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_sum_rule: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_eigen: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol_fd: f64,
    #[arg(long, default_value_t = 1e-13)]
    tol_quadrature: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_erratum: f64,
}

#[derive(Args)]
struct ErrataArgs {
    /// Seed for the sampled axes and points
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled quantization axes
    #[arg(long, default_value_t = 8)]
    dirs: usize,
    /// Number of sampled evaluation points
    #[arg(long, default_value_t = 60)]
    points: usize,
}

#[derive(Args)]
struct PlotDataArgs {
    /// Harmonic family to evaluate
    #[arg(long, default_value = "composed", value_parser = parse_family)]
    family: Family,
    /// Projection quantum number, -2 ..= 2
    #[arg(long, allow_negative_numbers = true)]
    m: i32,
    /// Quantization axis: polar and azimuth angles in degrees
    #[arg(long, num_args = 2, value_names = ["THETA_DEG", "PHI_DEG"],
          allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
    axis: Vec<f64>,
    /// Number of polar samples (inclusive of both poles)
    #[arg(long, default_value_t = 19)]
    n_theta: usize,
    /// Number of azimuthal samples (inclusive of 0° and 360°)
    #[arg(long, default_value_t = 37)]
    n_phi: usize,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let outcome = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// A closed stdout pipe is the reader saying "enough", not a failure.
fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .filter_map(|cause| cause.downcast_ref::<io::Error>())
        .any(|io_err| io_err.kind() == io::ErrorKind::BrokenPipe)
}

fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Eval(args) => cmd_eval(args, out),
        Command::Table(args) => cmd_table(args, out),
        Command::Validate(args) => cmd_validate(args, out),
        Command::Errata(args) => cmd_errata(args, out),
        Command::PlotData(args) => cmd_plotdata(args, out),
    }
}

fn direction_from_degrees(axis: &[f64]) -> anyhow::Result<Direction> {
    Ok(Direction::new(axis[0].to_radians(), axis[1].to_radians())?)
}

fn position_from_degrees(at: &[f64]) -> anyhow::Result<AngularPosition> {
    Ok(AngularPosition::new(at[0].to_radians(), at[1].to_radians())?)
}

/// Fixed 15-decimal formatting with magnitudes below 1e-14 reported as exact 0,
/// so sign noise at the rounding floor cannot leak into the output.
fn fmt15(x: f64) -> String {
    if x.abs() < 1e-14 {
        "0".to_string()
    } else {
        format!("{x:.15}")
    }
}

/// Canonicalizes -0.0 to 0.0 for CSV output.
fn csv_num(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let dir = direction_from_degrees(&args.axis)?;
    let pos = position_from_degrees(&args.at)?;
    let value = args.family.eval(args.m, dir, pos)?;
    writeln!(out, "{} {}", fmt15(value.re), fmt15(value.im))?;
    let modulus = value.norm();
    let phase = if modulus < 1e-14 {
        0.0
    } else {
        value.im.atan2(value.re)
    };
    writeln!(out, "{} {}", fmt15(modulus), fmt15(phase))?;
    Ok(0)
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    match &args.kind {
        TableKind::Chi { axis } => {
            let dir = direction_from_degrees(axis)?;
            let matrix = chi_matrix(dir);
            writeln!(out, "m_i,m_f,re,im")?;
            for &mi in &M_VALUES {
                for &mf in &M_VALUES {
                    let v = matrix.get(HalfInt::from_int(mi), HalfInt::from_int(mf));
                    writeln!(out, "{mi},{mf},{},{}", csv_num(v.re), csv_num(v.im))?;
                }
            }
        }
        TableKind::Gram { family, axis, grid } => {
            let dir = direction_from_degrees(axis)?;
            let g = sphere_grid(grid[0], grid[1])?;
            let report = orthonormality_report(*family, dir, &g)?;
            writeln!(out, "row_m,col_m,re,im")?;
            for (a, &ma) in M_VALUES.iter().enumerate() {
                for (b, &mb) in M_VALUES.iter().enumerate() {
                    let v = report.gram[a][b];
                    writeln!(out, "{ma},{mb},{},{}", csv_num(v.re), csv_num(v.im))?;
                }
            }
        }
    }
    Ok(0)
}

/// Prints one `CHECK <name> <residual> <tol> <PASS|FAIL>` line per check and
/// tallies failures.
#[derive(Default)]
struct Recorder {
    failed: usize,
    total: usize,
}

impl Recorder {
    fn check(
        &mut self,
        out: &mut dyn Write,
        name: &str,
        residual: f64,
        tol: f64,
    ) -> anyhow::Result<()> {
        let ok = residual.is_finite() && residual <= tol;
        writeln!(
            out,
            "CHECK {name} {residual:e} {tol:e} {}",
            if ok { "PASS" } else { "FAIL" }
        )?;
        self.total += 1;
        if !ok {
            self.failed += 1;
        }
        Ok(())
    }
}

/// Max of a fallible per-direction residual over all sampled directions.
fn max_over_dirs(
    dirs: &[Direction],
    mut f: impl FnMut(Direction) -> anyhow::Result<f64>,
) -> anyhow::Result<f64> {
    let mut worst = 0.0f64;
    for &d in dirs {
        worst = worst.max(f(d)?);
    }
    Ok(worst)
}

fn snake(family: Family) -> String {
    family.name().replace('-', "_")
}

fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let grid = sphere_grid(args.grid[0], args.grid[1])?;
    let dirs = sample_directions(args.dirs, args.seed);
    let points = sample_positions(args.points, args.seed.wrapping_add(2));
    let mut rec = Recorder::default();

    // Erratum sampling matches the errata subcommand's defaults.
    let erratum_dirs = sample_directions(8, args.seed.wrapping_add(101));
    let erratum_points = sample_positions(60, args.seed.wrapping_add(102));

    match args.family {
        None => {
            let matrix_dirs = sample_directions(args.matrix_dirs, args.seed.wrapping_add(1));
            rec.check(
                out,
                "chi_unitarity",
                max_over_dirs(&matrix_dirs, |d| Ok(unitarity_check(d)))?,
                args.tol_unitarity,
            )?;
            rec.check(
                out,
                "oracle_equivalence",
                max_over_dirs(&matrix_dirs, |d| Ok(oracle_deviation(d)?))?,
                args.tol_oracle,
            )?;
            rec.check(
                out,
                "composition_consistency",
                max_over_dirs(&dirs, |d| Ok(composition_deviation(d, &points)?))?,
                args.tol_composition,
            )?;
            rec.check(
                out,
                "limit_reduction",
                limit_deviation(&points)?,
                args.tol_limit,
            )?;

            let core_families = [Family::Composed, Family::SubstitutionX, Family::SubstitutionY];
            for family in core_families {
                rec.check(
                    out,
                    &format!("orthonormality_{}", snake(family)),
                    max_over_dirs(&dirs, |d| {
                        Ok(orthonormality_report(family, d, &grid)?.max_deviation())
                    })?,
                    args.tol_ortho,
                )?;
            }
            let mut worst = 0.0f64;
            for family in Family::ALL {
                worst = worst.max(max_over_dirs(&dirs, |d| {
                    Ok(parity_check(family, d, &points)?)
                })?);
            }
            rec.check(out, "parity_all_families", worst, args.tol_parity)?;
            for family in core_families {
                rec.check(
                    out,
                    &format!("sum_rule_{}", snake(family)),
                    max_over_dirs(&dirs, |d| Ok(sum_rule_deviation(family, d, &points)?))?,
                    args.tol_sum_rule,
                )?;
            }
            for family in core_families {
                rec.check(
                    out,
                    &format!("eigenvalue_{}", snake(family)),
                    max_over_dirs(&dirs, |d| {
                        let mut worst = 0.0f64;
                        for m in M_VALUES {
                            worst = worst
                                .max(eigen_residual(family, m, d, &points, &grid)?.max_residual);
                        }
                        Ok(worst)
                    })?,
                    args.tol_eigen,
                )?;
            }
            rec.check(
                out,
                "derivative_cross_check",
                max_over_dirs(&dirs, |d| Ok(derivative_cross_check(d, &points, 1e-6)?))?,
                args.tol_fd,
            )?;

            let rows = erratum_report(&erratum_dirs, &erratum_points)?;
            let x0 = rows
                .iter()
                .find(|r| r.family == "paper-closed-x" && r.m == 0);
            let residual = x0.map_or(f64::INFINITY, |row| {
                let ratio_dev = row
                    .ratio
                    .map_or(f64::INFINITY, |r| (r - 0.816496580927726).norm());
                let prefactor_dev = row
                    .corrected_prefactor
                    .map_or(f64::INFINITY, |c| (c - 0.23654367393939002).abs());
                ratio_dev.max(prefactor_dev)
            });
            rec.check(out, "erratum_x_m0_detected", residual, args.tol_erratum)?;
            for row in rows.iter().filter(|r| !r.agrees(1e-12)) {
                writeln!(out, "INFO erratum {} m={} {}", row.family, row.m, row.note)?;
            }

            rec.check(
                out,
                "quadrature_weight_sum",
                (grid.total_weight() - 4.0 * PI).abs(),
                args.tol_quadrature,
            )?;
            rec.check(
                out,
                "quadrature_std_gram",
                orthonormality_report(Family::Standard, Direction::z_axis(), &grid)?
                    .max_deviation(),
                args.tol_quadrature,
            )?;
        }
        Some(family) => {
            let tag = snake(family);
            rec.check(
                out,
                &format!("orthonormality_{tag}"),
                max_over_dirs(&dirs, |d| {
                    Ok(orthonormality_report(family, d, &grid)?.max_deviation())
                })?,
                args.tol_ortho,
            )?;
            rec.check(
                out,
                &format!("parity_{tag}"),
                max_over_dirs(&dirs, |d| Ok(parity_check(family, d, &points)?))?,
                args.tol_parity,
            )?;
            rec.check(
                out,
                &format!("sum_rule_{tag}"),
                max_over_dirs(&dirs, |d| Ok(sum_rule_deviation(family, d, &points)?))?,
                args.tol_sum_rule,
            )?;
            rec.check(
                out,
                &format!("eigenvalue_{tag}"),
                max_over_dirs(&dirs, |d| {
                    let mut worst = 0.0f64;
                    for m in M_VALUES {
                        worst =
                            worst.max(eigen_residual(family, m, d, &points, &grid)?.max_residual);
                    }
                    Ok(worst)
                })?,
                args.tol_eigen,
            )?;
            if let Some(derived) = match family {
                Family::PaperClosedX => Some(Family::SubstitutionX),
                Family::PaperClosedY => Some(Family::SubstitutionY),
                _ => None,
            } {
                rec.check(
                    out,
                    &format!("substitution_agreement_{tag}"),
                    max_over_dirs(&dirs, |d| {
                        let mut worst = 0.0f64;
                        for m in M_VALUES {
                            for &p in &points {
                                let printed = family.eval(m, d, p)?;
                                let reference = derived.eval(m, d, p)?;
                                worst = worst.max((printed - reference).norm());
                            }
                        }
                        Ok(worst)
                    })?,
                    args.tol_composition,
                )?;
                let rows = erratum_report(&erratum_dirs, &erratum_points)?;
                for row in rows
                    .iter()
                    .filter(|r| r.family == family.name() && !r.agrees(1e-12))
                {
                    writeln!(out, "INFO erratum {} m={} {}", row.family, row.m, row.note)?;
                }
            }
        }
    }

    writeln!(
        out,
        "VALIDATE {}/{} checks passed",
        rec.total - rec.failed,
        rec.total
    )?;
    Ok(if rec.failed == 0 { 0 } else { 1 })
}

fn cmd_errata(args: &ErrataArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let dirs = sample_directions(args.dirs, args.seed.wrapping_add(101));
    let points = sample_positions(args.points, args.seed.wrapping_add(102));
    for row in erratum_report(&dirs, &points)? {
        let ratio = match row.ratio {
            None => "none".to_string(),
            Some(r) if r.im.abs() < 1e-9 => format!("{:.12}", r.re),
            Some(r) => format!("{:.12}{:+.12}i", r.re, r.im),
        };
        write!(
            out,
            "ERRATUM {} m={} max_deviation={:.3e} ratio={ratio}",
            row.family, row.m, row.max_deviation
        )?;
        if let Some(p) = row.printed_prefactor {
            write!(out, " printed_prefactor={p:.15}")?;
        }
        if let Some(c) = row.corrected_prefactor {
            write!(out, " corrected_prefactor={c:.15}")?;
        }
        writeln!(out, " | {}", row.note)?;
    }
    Ok(0)
}

fn cmd_plotdata(args: &PlotDataArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let dir = direction_from_degrees(&args.axis)?;
    match &args.output {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_plot_csv(args, dir, &mut file)?;
            file.flush()?;
        }
        None => write_plot_csv(args, dir, out)?,
    }
    Ok(0)
}

fn write_plot_csv(args: &PlotDataArgs, dir: Direction, out: &mut dyn Write) -> anyhow::Result<()> {
    writeln!(out, "theta_deg,phi_deg,re,im,abs2")?;
    for i in 0..args.n_theta {
        let theta_deg = if args.n_theta > 1 {
            180.0 * i as f64 / (args.n_theta - 1) as f64
        } else {
            0.0
        };
        for j in 0..args.n_phi {
            let phi_deg = if args.n_phi > 1 {
                360.0 * j as f64 / (args.n_phi - 1) as f64
            } else {
                0.0
            };
            let pos = AngularPosition::new(theta_deg.to_radians(), phi_deg.to_radians())?;
            let v = args.family.eval(args.m, dir, pos)?;
            writeln!(
                out,
                "{theta_deg},{phi_deg},{},{},{}",
                csv_num(v.re),
                csv_num(v.im),
                csv_num(v.norm_sqr())
            )?;
        }
    }
    Ok(())
}
