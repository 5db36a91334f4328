//! Run configuration: defaults, TOML config files, and command-line flags.
//!
//! Precedence is strictly `flags > config file > defaults`, resolved field
//! by field before any computation starts. The defaults are the two
//! canonical profiles:
//!
//! * toy regime (the default): `R = 100`, `K` overridden to `8`, so the
//!   direct product evaluator stays feasible;
//! * `--regime paper`: `R = 2 T0 - 1 = 4891999109997` with `K` from the
//!   formula (the override is forbidden there).
//!
//! Setting `R` explicitly in the toy regime drops the canonical `K = 8`
//! override and falls back to the formula value unless `--k-override` is
//! given too. Everything is schema-validated here (unknown config keys are
//! rejected) and again by the library's parameter constructor.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use pseudogamma::{
    EndpointPolicy, GridError, GridSpec, PrecisionProfile, PseudoGammaError, PseudoGammaParams,
    Regime, SeriesTolerance, PAPER_R,
};
use serde::Deserialize;

/// Failure modes of a CLI run, carrying their process exit codes:
/// configuration and domain problems exit `2`, failed verification
/// assertions exit `1`.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, config file, or I/O. Exit code 2.
    Config(String),
    /// The requested computation is outside a mathematical domain; the
    /// diagnostic names the governing equation. Exit code 2.
    Domain { message: String, equation: &'static str },
    /// Asserted verification checks failed. Exit code 1.
    AssertionFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Domain { .. } => 2,
            CliError::AssertionFailed { .. } => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "error: {m}"),
            CliError::Domain { message, equation } => {
                write!(f, "error: {message} [{equation}]")
            }
            CliError::AssertionFailed { failed, total } => {
                write!(f, "FAILED: {failed} of {total} asserted checks did not hold")
            }
        }
    }
}

/// Maps a parameter/evaluation error to a CLI error. Parameter and
/// configuration rejections are config errors; everything else is a domain
/// error tagged with the equation whose domain was violated (the defining
/// product for evaluation errors, the theorem hypotheses for hypothesis
/// violations).
pub fn from_library(e: PseudoGammaError) -> CliError {
    match e {
        PseudoGammaError::InvalidParameter(_)
        | PseudoGammaError::RegimeViolation(_)
        | PseudoGammaError::InvalidOverride
        | PseudoGammaError::Grid(_) => CliError::Config(e.to_string()),
        PseudoGammaError::HypothesisViolation { .. } => CliError::Domain {
            message: e.to_string(),
            equation: "Eq. 1.11",
        },
        _ => CliError::Domain {
            message: e.to_string(),
            equation: "Eq. 1.10",
        },
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// TOML configuration file; flags take precedence over its values.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Parameter regime: published scale or reduced toy scale.
    #[arg(long, global = true, value_enum)]
    pub regime: Option<RegimeArg>,

    /// Scale parameter R (toy default 100, paper default 4891999109997).
    #[arg(long = "R", global = true, value_name = "REAL")]
    pub r: Option<f64>,

    /// The constant Omega (default 1).
    #[arg(long, global = true, value_name = "REAL")]
    pub omega: Option<f64>,

    /// The constant alpha (default 1/4).
    #[arg(long, global = true, value_name = "REAL")]
    pub alpha: Option<f64>,

    /// Override the factor-count exponent K (toy regime only, at most 60).
    #[arg(long, global = true, value_name = "INT")]
    pub k_override: Option<u32>,

    /// Working precision for cancellation-sensitive steps.
    #[arg(long, global = true, value_enum)]
    pub precision: Option<PrecisionArg>,

    /// Output file (JSON report for `verify`, CSV for `scan`);
    /// stdout when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RegimeArg {
    Paper,
    Toy,
}

impl From<RegimeArg> for Regime {
    fn from(a: RegimeArg) -> Regime {
        match a {
            RegimeArg::Paper => Regime::Paper,
            RegimeArg::Toy => Regime::Toy,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionArg {
    Standard,
    Extended,
}

impl From<PrecisionArg> for PrecisionProfile {
    fn from(a: PrecisionArg) -> PrecisionProfile {
        match a {
            PrecisionArg::Standard => PrecisionProfile::standard(),
            PrecisionArg::Extended => PrecisionProfile::extended(),
        }
    }
}

/// Which function a scan or eval targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Nabla,
    Zeta,
    Gamma,
    Xi,
}

impl TargetArg {
    pub fn name(self) -> &'static str {
        match self {
            TargetArg::Nabla => "nabla",
            TargetArg::Zeta => "zeta",
            TargetArg::Gamma => "gamma",
            TargetArg::Xi => "xi",
        }
    }
}

/// Verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    /// The sharpened bound on (1/2, 2] and its two-stage chain.
    Theorem1,
    /// Center normalization and double symmetry of nabla and xi.
    Symmetry,
    /// Per-factor modulus bound and nonvanishing displays.
    Factors,
    /// Classical anchors and the symmetric functional equation.
    Funceq,
    /// Report-only circle scans against the claimed band.
    Prop2,
    /// All of the above in order.
    All,
}

impl SuiteArg {
    pub fn name(self) -> &'static str {
        match self {
            SuiteArg::Theorem1 => "theorem1",
            SuiteArg::Symmetry => "symmetry",
            SuiteArg::Factors => "factors",
            SuiteArg::Funceq => "funceq",
            SuiteArg::Prop2 => "prop2",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Interval,
    Circle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PolicyArg {
    Closed,
    OpenLeft,
    OpenRight,
}

impl From<PolicyArg> for EndpointPolicy {
    fn from(a: PolicyArg) -> EndpointPolicy {
        match a {
            PolicyArg::Closed => EndpointPolicy::Closed,
            PolicyArg::OpenLeft => EndpointPolicy::OpenLeft,
            PolicyArg::OpenRight => EndpointPolicy::OpenRight,
        }
    }
}

/// Which axis an interval grid sweeps; the other coordinate is fixed at
/// `offset`. This is how vertical-line scans (e.g. zeta on Re(s) = 2) are
/// expressed while reusing the deterministic interval point generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisArg {
    Real,
    Imag,
}

/// Grid geometry flags for `scan`. As a group they override the `[grid]`
/// config table: if any of them is given, the grid is built from flags
/// alone (with per-flag defaults), otherwise from the config file.
#[derive(Debug, Args)]
pub struct GridOpts {
    /// Grid kind.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,

    /// Swept-coordinate start (interval grids).
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub start: Option<f64>,

    /// Swept-coordinate end (interval grids).
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub end: Option<f64>,

    /// Number of grid points.
    #[arg(long, value_name = "INT")]
    pub count: Option<usize>,

    /// Endpoint policy (interval grids).
    #[arg(long, value_enum)]
    pub policy: Option<PolicyArg>,

    /// Swept axis (interval grids).
    #[arg(long, value_enum)]
    pub axis: Option<AxisArg>,

    /// Fixed value of the non-swept coordinate (interval grids).
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub offset: Option<f64>,

    /// Circle center on the real axis (circle grids).
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub center_re: Option<f64>,

    /// Circle radius (circle grids).
    #[arg(long, value_name = "REAL")]
    pub radius: Option<f64>,
}

impl GridOpts {
    fn any_given(&self) -> bool {
        self.kind.is_some()
            || self.start.is_some()
            || self.end.is_some()
            || self.count.is_some()
            || self.policy.is_some()
            || self.axis.is_some()
            || self.offset.is_some()
            || self.center_re.is_some()
            || self.radius.is_some()
    }
}

/// A resolved scan grid: a library [`GridSpec`] plus the interval-grid
/// placement (swept axis and fixed offset of the other coordinate).
#[derive(Debug, Clone)]
pub struct ScanGrid {
    pub spec: GridSpec,
    pub axis: AxisArg,
    pub offset: f64,
}

impl ScanGrid {
    /// Expands to complex evaluation points in deterministic order.
    pub fn points(&self) -> Result<Vec<Complex64>, GridError> {
        let base = self.spec.points()?;
        Ok(match self.spec {
            GridSpec::Circle { .. } => base,
            GridSpec::Interval { .. } => base
                .iter()
                .map(|p| match self.axis {
                    AxisArg::Real => Complex64::new(p.re, self.offset),
                    AxisArg::Imag => Complex64::new(self.offset, p.re),
                })
                .collect(),
        })
    }

    /// True when the points lie on the real axis (where the sharpened-bound
    /// margin is meaningful for nabla scans).
    pub fn on_real_axis(&self) -> bool {
        matches!(self.spec, GridSpec::Interval { .. })
            && self.axis == AxisArg::Real
            && self.offset == 0.0
    }
}

/// The TOML config file schema. Every table rejects unknown keys so typos
/// fail loudly before any computation.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    regime: Option<Regime>,
    #[serde(rename = "R")]
    r: Option<f64>,
    omega: Option<f64>,
    alpha: Option<f64>,
    k_override: Option<u32>,
    precision: Option<PrecisionArg>,
    out: Option<PathBuf>,
    tolerances: Option<ToleranceTable>,
    grid: Option<GridTable>,
    prop2: Option<Prop2Table>,
    factors: Option<FactorsTable>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ToleranceTable {
    rel_tol: Option<f64>,
    max_terms: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridTable {
    kind: String,
    start: Option<f64>,
    end: Option<f64>,
    count: Option<usize>,
    policy: Option<EndpointPolicy>,
    axis: Option<AxisArg>,
    offset: Option<f64>,
    center_re: Option<f64>,
    radius: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Prop2Table {
    radii: Option<Vec<f64>>,
    n_angles: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorsTable {
    u: Option<Vec<f64>>,
}

/// The fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub regime: Regime,
    pub r: f64,
    pub omega: f64,
    pub alpha: f64,
    pub k_override: Option<u32>,
    pub profile: PrecisionProfile,
    pub tol: SeriesTolerance,
    pub out: Option<PathBuf>,
    /// Grid from the config file, if any (used by `scan` when no grid
    /// flags are given, and by `verify theorem1` for real-axis intervals).
    pub grid: Option<ScanGrid>,
    /// Circle radii for the prop2 suite (default `[1, R]`).
    pub prop2_radii: Option<Vec<f64>>,
    /// Angles per prop2 circle (default 16).
    pub prop2_angles: usize,
    /// Interval points `u` for the factors suite (default `[0.6, 1, 2]`).
    pub factor_u: Vec<f64>,
}

impl RunConfig {
    /// Resolves flags over the config file over defaults.
    pub fn resolve(g: &GlobalOpts) -> Result<RunConfig, CliError> {
        let file = match &g.config {
            Some(path) => load_file(path)?,
            None => FileConfig::default(),
        };

        let regime = g
            .regime
            .map(Regime::from)
            .or(file.regime)
            .unwrap_or(Regime::Toy);
        let r_explicit = g.r.or(file.r);
        let r = r_explicit.unwrap_or(match regime {
            Regime::Paper => PAPER_R,
            Regime::Toy => 100.0,
        });
        // Canonical toy profile: K = 8 only when R was left at its default.
        let k_override = g.k_override.or(file.k_override).or(
            if regime == Regime::Toy && r_explicit.is_none() {
                Some(8)
            } else {
                None
            },
        );

        let tol_table = file.tolerances.unwrap_or_default();
        let dtol = SeriesTolerance::default();
        let tol = SeriesTolerance::new(
            tol_table.rel_tol.unwrap_or(dtol.rel_tol),
            tol_table.max_terms.unwrap_or(dtol.max_terms),
        )
        .map_err(|e| CliError::Config(e.to_string()))?;

        let grid = match file.grid {
            Some(t) => Some(grid_from_table(t)?),
            None => None,
        };
        let prop2 = file.prop2.unwrap_or_default();
        let factors = file.factors.unwrap_or_default();

        Ok(RunConfig {
            regime,
            r,
            omega: g.omega.or(file.omega).unwrap_or(1.0),
            alpha: g.alpha.or(file.alpha).unwrap_or(0.25),
            k_override,
            profile: g
                .precision
                .or(file.precision)
                .map(PrecisionProfile::from)
                .unwrap_or_default(),
            tol,
            out: g.out.clone().or(file.out),
            grid,
            prop2_radii: prop2.radii,
            prop2_angles: prop2.n_angles.unwrap_or(16),
            factor_u: factors.u.unwrap_or_else(|| vec![0.6, 1.0, 2.0]),
        })
    }

    /// Validated library parameters for this configuration.
    pub fn params(&self) -> Result<PseudoGammaParams, CliError> {
        PseudoGammaParams::with_config(self.r, self.omega, self.alpha, self.regime, self.k_override)
            .map_err(from_library)
    }

    /// The grid a `scan` should use: flags as a group beat the config
    /// table; one of the two must describe a complete grid.
    pub fn scan_grid(&self, opts: &GridOpts) -> Result<ScanGrid, CliError> {
        if !opts.any_given() {
            return self.grid.clone().ok_or_else(|| {
                CliError::Config(
                    "scan needs a grid: pass --kind (with its geometry flags) or a [grid] config table"
                        .into(),
                )
            });
        }
        let kind = opts.kind.ok_or_else(|| {
            CliError::Config("grid flags given without --kind (interval or circle)".into())
        })?;
        let count = opts
            .count
            .ok_or_else(|| CliError::Config("grid needs --count".into()))?;
        let spec = match kind {
            KindArg::Interval => {
                let (Some(start), Some(end)) = (opts.start, opts.end) else {
                    return Err(CliError::Config(
                        "interval grid needs --start and --end".into(),
                    ));
                };
                GridSpec::Interval {
                    start,
                    end,
                    count,
                    policy: opts.policy.unwrap_or(PolicyArg::Closed).into(),
                }
            }
            KindArg::Circle => GridSpec::Circle {
                center_re: opts.center_re.unwrap_or(0.5),
                radius: opts.radius.ok_or_else(|| {
                    CliError::Config("circle grid needs --radius".into())
                })?,
                count,
            },
        };
        let grid = ScanGrid {
            spec,
            axis: opts.axis.unwrap_or(AxisArg::Real),
            offset: opts.offset.unwrap_or(0.0),
        };
        grid.spec
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;
        Ok(grid)
    }
}

fn load_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Config(format!("cannot read config file {}: {e}", path.display()))
    })?;
    toml::from_str(&text)
        .map_err(|e| CliError::Config(format!("config file {}: {e}", path.display())))
}

fn grid_from_table(t: GridTable) -> Result<ScanGrid, CliError> {
    let count = t
        .count
        .ok_or_else(|| CliError::Config("[grid] table needs count".into()))?;
    let spec = match t.kind.as_str() {
        "interval" => {
            let (Some(start), Some(end)) = (t.start, t.end) else {
                return Err(CliError::Config("[grid] interval needs start and end".into()));
            };
            GridSpec::Interval {
                start,
                end,
                count,
                policy: t.policy.unwrap_or(EndpointPolicy::Closed),
            }
        }
        "circle" => GridSpec::Circle {
            center_re: t.center_re.unwrap_or(0.5),
            radius: t
                .radius
                .ok_or_else(|| CliError::Config("[grid] circle needs radius".into()))?,
            count,
        },
        other => {
            return Err(CliError::Config(format!(
                "[grid] kind must be \"interval\" or \"circle\", got \"{other}\""
            )))
        }
    };
    let grid = ScanGrid {
        spec,
        axis: t.axis.unwrap_or(AxisArg::Real),
        offset: t.offset.unwrap_or(0.0),
    };
    grid.spec
        .validate()
        .map_err(|e| CliError::Config(e.to_string()))?;
    Ok(grid)
}
