use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use splitcheck::LengthConstraint;

#[derive(Parser, Debug)]
#[command(name = "splitcheck", version, about = "Exact mod-2 checks on Steenrod modules, Steinberg summands and Madsen-Tillmann spectra")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalArgs {
    /// TOML file with defaults for any flag
    #[arg(long, global = true, env = "SPLITCHECK_CONFIG")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, env = "SPLITCHECK_FORMAT")]
    pub format: Option<Format>,
    /// Worker threads for per-degree work
    #[arg(long, global = true, env = "SPLITCHECK_JOBS")]
    pub jobs: Option<usize>,
    /// Write output here instead of standard output
    #[arg(long, global = true, env = "SPLITCHECK_OUT")]
    pub out: Option<PathBuf>,
    /// Memoize computed dimension series in this directory
    #[arg(long, global = true, env = "SPLITCHECK_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Refuse degree ranges above this (exit 3)
    #[arg(long, global = true, env = "SPLITCHECK_DEGREE_CAP")]
    pub degree_cap: Option<i32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// `exact:N`, `atmost:N` or `any`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthArg(pub LengthConstraint);

impl FromStr for LengthArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "any" {
            return Ok(LengthArg(LengthConstraint::Any));
        }
        let (kind, n) = s.split_once(':').ok_or_else(|| format!("expected exact:N, atmost:N or any, got {s:?}"))?;
        let n: usize = n.parse().map_err(|_| format!("bad length {n:?}"))?;
        match kind {
            "exact" => Ok(LengthArg(LengthConstraint::Exactly(n))),
            "atmost" => Ok(LengthArg(LengthConstraint::AtMost(n))),
            _ => Err(format!("unknown length kind {kind:?}")),
        }
    }
}

impl std::fmt::Display for LengthArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            LengthConstraint::Exactly(n) => write!(f, "exact:{n}"),
            LengthConstraint::AtMost(n) => write!(f, "atmost:{n}"),
            LengthConstraint::Any => f.write_str("any"),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    Conjugate,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumCheck {
    Split,
    Takayasu,
    Mto2,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a Steenrod expression to admissible form, e.g. "Sq2 Sq2"
    Adem { expr: String },
    /// Admissible words of one degree, or their counts up to --max-degree
    Basis {
        #[arg(long, env = "SPLITCHECK_DEGREE")]
        degree: Option<i32>,
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE")]
        max_degree: Option<i32>,
        #[arg(long, env = "SPLITCHECK_LENGTH")]
        length: Option<LengthArg>,
    },
    /// Apply a Steenrod expression to a polynomial, e.g. "Sq2 Sq1" "x1^-1 x2^-1"
    Act {
        op: String,
        poly: String,
        /// Number of variables (default: largest index used)
        #[arg(long, env = "SPLITCHECK_N")]
        n: Option<usize>,
    },
    /// Build the Steinberg idempotent of GL_n(F_2) and check e_{n-1} e_n = e_n
    Steinberg {
        #[arg(long, env = "SPLITCHECK_N")]
        n: Option<usize>,
        #[arg(long, value_enum, env = "SPLITCHECK_VARIANT")]
        variant: Option<Variant>,
    },
    /// Dimensions of the Steinberg summand of the Thom module with twist k
    Summand {
        #[arg(long, env = "SPLITCHECK_N")]
        n: Option<usize>,
        #[arg(long, env = "SPLITCHECK_TWIST", allow_hyphen_values = true)]
        twist: Option<i32>,
        /// Lowest degree (default: the Thom class degree)
        #[arg(long, env = "SPLITCHECK_MIN_DEGREE", allow_hyphen_values = true)]
        min_degree: Option<i32>,
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE", allow_hyphen_values = true)]
        max_degree: Option<i32>,
    },
    /// Dimension checks of the splittings of MTO(n)
    MtoCheck {
        #[arg(long, env = "SPLITCHECK_N")]
        n: Option<usize>,
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE")]
        max_degree: Option<i32>,
        #[arg(long, value_enum, env = "SPLITCHECK_CHECK")]
        check: Option<SpectrumCheck>,
    },
    /// The mu-class relations in low degrees, compared with the published table
    ///
    /// The image of H*(M(2)) in H*(BO(2)) is taken with basis
    /// (s1^2 + s2)^i (s1 s2)^j s1^e, e in {1, 2}. Printed versions that show
    /// the middle factor as (s1 s_j)^j are read as (s1 s2)^j, the only reading
    /// with the right dimensions.
    Relations {
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE")]
        max_degree: Option<i32>,
    },
    /// Dyer-Lashof generator counts for the infinite loop spaces of M(n)
    Loop {
        #[arg(long, env = "SPLITCHECK_N")]
        n: Option<usize>,
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE")]
        max_degree: Option<i32>,
        /// Also print the weight histogram of M(n) generators in this degree
        #[arg(long, env = "SPLITCHECK_DEGREE")]
        degree: Option<i32>,
    },
    /// Run every numbered check
    VerifyAll {
        #[arg(long, env = "SPLITCHECK_MAX_DEGREE")]
        max_degree: Option<i32>,
        /// Random words for the Adem check
        #[arg(long, env = "SPLITCHECK_WORDS")]
        words: Option<usize>,
        #[arg(long, env = "SPLITCHECK_SEED")]
        seed: Option<u64>,
        /// Longer n = 3 ranges and the n = 4 group algebra
        #[arg(long, env = "SPLITCHECK_LONG")]
        long: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Adem { .. } => "adem",
            Command::Basis { .. } => "basis",
            Command::Act { .. } => "act",
            Command::Steinberg { .. } => "steinberg",
            Command::Summand { .. } => "summand",
            Command::MtoCheck { .. } => "mto-check",
            Command::Relations { .. } => "relations",
            Command::Loop { .. } => "loop",
            Command::VerifyAll { .. } => "verify-all",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_arguments() {
        assert_eq!("exact:2".parse::<LengthArg>().unwrap().0, LengthConstraint::Exactly(2));
        assert_eq!("atmost:3".parse::<LengthArg>().unwrap().0, LengthConstraint::AtMost(3));
        assert_eq!("any".parse::<LengthArg>().unwrap().0, LengthConstraint::Any);
        assert!("exact".parse::<LengthArg>().is_err());
        assert!("most:2".parse::<LengthArg>().is_err());
        assert_eq!(LengthArg(LengthConstraint::AtMost(2)).to_string(), "atmost:2");
    }
}
