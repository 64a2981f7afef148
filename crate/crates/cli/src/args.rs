use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use scrollsec::algebra::DEFAULT_PRIMES;
use scrollsec::groebner::DEFAULT_PAIR_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "scrollsec", version, about = "Exact checks for secant varieties of rational normal scrolls")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every random choice; drawn from the OS when omitted.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Coefficient field: `Q`, an index into the built-in primes, or one of those primes.
    #[arg(long, global = true, default_value = "0", value_parser = parse_prime)]
    pub prime: PrimeChoice,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Cap on S-pairs per Gröbner basis computation.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: usize,

    /// Report `elapsed_ms` as 0 so that output is reproducible byte for byte.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeChoice {
    Rational,
    Prime(u32),
}

fn parse_prime(s: &str) -> Result<PrimeChoice, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(PrimeChoice::Rational);
    }
    let n: u64 = s.parse().map_err(|_| format!("expected Q or a prime from {DEFAULT_PRIMES:?}, got {s}"))?;
    if let Some(&p) = DEFAULT_PRIMES.get(n as usize) {
        return Ok(PrimeChoice::Prime(p));
    }
    DEFAULT_PRIMES
        .iter()
        .find(|&&p| p as u64 == n)
        .map(|&p| PrimeChoice::Prime(p))
        .ok_or_else(|| format!("prime {n} is not in the built-in list {DEFAULT_PRIMES:?}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SmoothKind {
    Scroll,
    TangentCone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    Scroll,
    Rnc,
    TangentCone,
    Chart,
    SingularScroll,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of the secant fourfold of S_{a,b}.
    Degree {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Degree of the chord surface of the rational normal curve of degree d.
    Veronese {
        #[arg(long)]
        d: usize,
    },
    /// Secant lines meeting a general codimension-5 subspace.
    Adp {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Degrees of the three pieces of a special hyperplane section.
    Components {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Dimension of the linear span of the secant fourfold.
    Span {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Dimension, degree and smoothness of the tangent cone at the singular point.
    TangentCone {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Chart equations near the singular point.
    Chart {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Jacobian ranks at random points and at the vertex.
    Smooth {
        #[arg(long, value_enum, default_value_t = SmoothKind::Scroll)]
        kind: SmoothKind,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Intersection numbers on the blow-up of G(1,3) along a conic.
    Blowup {
        #[arg(long)]
        a: i64,
    },
    /// Quartics singular along a conic in P^5 and the cones among them.
    ConicSystem {
        #[arg(long)]
        a: u32,
    },
    /// Random secant lines meet the scroll only in their two points.
    LemmaSec {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Semistability certificate for a hyperplane of the span of X_{1,3}.
    GitCheck {
        /// Fifteen comma-separated rationals in the span coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "random")]
        coeffs: Option<Vec<String>>,
        /// Use a random hyperplane drawn from the seed.
        #[arg(long)]
        random: bool,
    },
    /// Write an ideal file, or read one and report its Hilbert data.
    EmitIdeal {
        #[arg(long, value_enum)]
        kind: Option<IdealKind>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Read generators from this file instead of building them.
        #[arg(long, conflicts_with = "kind")]
        ideal_in: Option<PathBuf>,
        /// Write to this file instead of standard output.
        #[arg(long)]
        ideal_out: Option<PathBuf>,
    },
    /// Run the whole suite up to the given r.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        max_r: usize,
    },
}
