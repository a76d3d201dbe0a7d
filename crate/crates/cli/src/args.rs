use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "lipmod", version, about = "Exact local algebra for plane curve singularities")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Main variables, comma separated. Defaults to whichever of x, y, z occur.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Parameters, comma separated. Defaults to every other identifier.
    #[arg(long, global = true, value_delimiter = ',')]
    pub params: Option<Vec<String>>,
    /// Parameter expression assumed nonzero; repeatable.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub constraint: Vec<String>,
    /// JSON report (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable report.
    #[arg(long, global = true)]
    pub text: bool,
    /// Series truncation order for branch computations.
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    /// Inclusive index range `a..b` for family sweeps.
    #[arg(long = "q-range", global = true, value_parser = parse_range)]
    pub q_range: Option<(u32, u32)>,
    /// Reduction budget for standard bases and divisions.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Milnor number over the parameter field.
    Milnor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Corank of the Hessian at the origin.
    Corank {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Order (multiplicity) of the germ.
    Order {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Newton diagram: vertices and compact facets.
    Newton {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Weighted filtration.
    Fil {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        weight: String,
    },
    /// Weighted initial part.
    Initial {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        weight: String,
    },
    /// Local division `unit·f = Σ q_i g_i + r`.
    Divide {
        #[arg(allow_hyphen_values = true)]
        dividend: String,
        /// Divide by the partial derivatives of this polynomial.
        #[arg(long = "jacobian-of", allow_hyphen_values = true, conflicts_with = "by")]
        jacobian_of: Option<String>,
        /// Explicit divisor; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        by: Vec<String>,
    },
    /// Local standard basis of the Jacobian ideal (or of the given generators with `--ideal`).
    StdBasis {
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(long)]
        ideal: bool,
    },
    /// Monomial basis of the local algebra.
    QuotientBasis {
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(long)]
        ideal: bool,
    },
    /// Lipschitz-triviality certificate for a family `f + t·g`.
    CheckTrivial(CheckTrivialArgs),
    /// Recompute rows of the cofactor table.
    VerifyTable8 {
        labels: Vec<String>,
        /// Largest `b` tried when a row's own scheme fails.
        #[arg(long, default_value_t = 12)]
        max_b: u32,
    },
    /// Invariants read from the restriction to the two branches of f_x = 0 on J3,0.
    HpInvariants {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Equivalence obstruction for two J3,0 parameter pairs `b1,c1,b2,c2`.
    Obstruction {
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
    },
    /// Lipschitz modality verdict with trace.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form entry for a type label such as `W1,2`.
    Lookup { label: String },
    /// Re-verify a certificate written by `check-trivial`.
    VerifyCertificate { file: PathBuf },
    /// Run a manifest of commands with expected outcomes.
    Batch { manifest: PathBuf },
}

#[derive(Args, Debug)]
pub struct CheckTrivialArgs {
    /// Family polynomial, affine in the deformation parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub family: Option<String>,
    /// Deformation parameter.
    #[arg(long, default_value = "t")]
    pub param: String,
    /// Two-exponent scheme `a,b`.
    #[arg(long, value_parser = parse_pair)]
    pub scheme: Option<(u32, u32)>,
    /// Search schemes with `a <= b <= B`.
    #[arg(long)]
    pub search: Option<u32>,
    /// Explicit control function `Σ |m_k|^2 u_k` from these monomials.
    #[arg(long, value_delimiter = ',')]
    pub control: Option<Vec<String>>,
    /// Quasihomogeneous base germ.
    #[arg(long, allow_hyphen_values = true, requires = "theta")]
    pub quasi: Option<String>,
    /// Deformation direction for `--quasi`.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// W# series over `--q-range`: `odd` uses the two-exponent scheme, `even` the facet check.
    #[arg(long, value_parser = ["odd", "even"])]
    pub wsharp: Option<String>,
    /// Accept a control function whose control property cannot be decided.
    #[arg(long)]
    pub allow_inconclusive: bool,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    Ok((a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_and_ranges() {
        assert_eq!(parse_pair("5,8"), Ok((5, 8)));
        assert!(parse_pair("5").is_err());
        assert_eq!(parse_range("2..5"), Ok((2, 5)));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x..2").is_err());
    }
}
