use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "angspec",
    version,
    about = "Spectra, potentials and consistency reports for inverse-square angular models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Worst relative residual of the trigonometric sum identities per order N.
    Identities(IdentitiesArgs),
    /// Closed-form and finite-difference angular eigenvalues b_m.
    Angular(AngularArgs),
    /// Samples of the closed-form eigenfunction across the fundamental cell.
    Wavefunction(WavefunctionArgs),
    /// Direct-sum and reduced angular potential across the fundamental cell.
    Potential(PotentialArgs),
    /// Planar energies from both closed forms, optionally against the radial oracle.
    Spectrum2d(Spectrum2dArgs),
    /// Three-body energies: planar levels plus the center-of-mass ladder.
    Spectrum3b(Spectrum3bArgs),
    /// Special potentials checked against the general form at seeded points.
    Reductions(ReductionsArgs),
    /// Energy adjudication and center-of-mass check against finite-difference oracles.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Fd,
    Both,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Fd => "fd",
            Method::Both => "both",
        }
    }

    pub fn exact(&self) -> bool {
        matches!(self, Method::Exact | Method::Both)
    }

    pub fn fd(&self) -> bool {
        matches!(self, Method::Fd | Method::Both)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; relative paths resolve against $ANGSPEC_OUT_DIR when it is set.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Omit the timestamp so identical invocations give identical bytes.
    #[arg(long)]
    pub deterministic: bool,
    /// Exit with status 3 when a checked quantity misses its tolerance.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long = "N")]
    pub n: u32,
    #[arg(long)]
    pub g1: f64,
    #[arg(long)]
    pub g2: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    /// sin, cos, pair, four, product or all.
    #[arg(long, default_value = "all")]
    pub kind: String,
    #[arg(long, default_value_t = 16)]
    pub n_max: u32,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub min_dist: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AngularArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 3)]
    pub m_max: u32,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    /// Coarse grid subintervals; the extrapolation also uses twice this.
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    /// Interior sample points, equally spaced.
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Spectrum2dArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 2)]
    pub n_max: u32,
    #[arg(long, default_value_t = 2)]
    pub m_max: u32,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Spectrum3bArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 2)]
    pub n_max: u32,
    #[arg(long, default_value_t = 2)]
    pub m_max: u32,
    #[arg(long, default_value_t = 2)]
    pub t_max: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReductionsArgs {
    /// sw, bc2, calogero, wolfes, n5, n8, polar or printed.
    #[arg(long)]
    pub check: String,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Fixed order for the polar check (random N <= 12 otherwise).
    #[arg(long = "N")]
    pub n: Option<u32>,
    /// Use the closed forms exactly as commonly printed (calogero, wolfes, n8).
    #[arg(long)]
    pub as_printed: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 2)]
    pub n_max: u32,
    #[arg(long, default_value_t = 2)]
    pub m_max: u32,
    #[arg(long, default_value_t = 2)]
    pub t_max: u32,
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}
