use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twinchain_core::GammaKind;

/// Twinned chain polytopes of pairs of finite posets.
#[derive(Debug, Parser)]
#[command(name = "twinchain", version)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Parse poset files and report their size.
    Validate {
        #[arg(long, value_name = "FILE")]
        p: PathBuf,
        #[arg(long, value_name = "FILE")]
        q: Option<PathBuf>,
    },
    /// List the ideals, antichains and maximal chains of a poset.
    Enumerate {
        #[arg(long, value_name = "FILE")]
        p: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Volume of the glued polytope.
    Volume {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Kind::Cc)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Facet normals of the glued polytope.
    Facets {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Kind::Cc)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long)]
        count_only: bool,
    },
    /// Vertices of the polar dual.
    Dual {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Kind::Cc)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long)]
        count_only: bool,
    },
    /// Decide reflexivity from the hull.
    Reflexive {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Kind::Cc)]
        kind: Kind,
    },
    /// Compare orthant pieces with the signed chain polytope of the glued poset.
    RegionCheck {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Kind::Cc)]
        kind: Kind,
        /// Comma-separated labels of the nonnegative coordinates; all
        /// orthants when omitted. An empty string selects the negative orthant.
        #[arg(long, value_name = "LIST")]
        w: Option<String>,
    },
    /// Run the built-in oracle suite.
    Selftest,
}

#[derive(Debug, Args)]
pub struct Pair {
    #[arg(long, value_name = "FILE")]
    pub p: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub q: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cc,
    Oc,
    Oo,
}

impl From<Kind> for GammaKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Cc => GammaKind::CC,
            Kind::Oc => GammaKind::OC,
            Kind::Oo => GammaKind::OO,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Hull,
    Both,
}
