//! Command-line front end: parse group, class, and point inputs, dispatch
//! to the library, and print JSON (DOT for posets on request).
//!
//! Exit codes: 0 on success, 2 for parse failures, 3 for precondition
//! failures (including uncataloged groups), 4 when the catalog disagrees
//! with the search.

mod input;
mod render;

use std::process::ExitCode;

use abstrata_core::{
    ab_compare, catalog, enumerate_between, minimally_unstable, mu_poset, plan_moves, profile,
    special_roots, CatalogError,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "abstrata",
    version,
    about = "Exact calculus of Atiyah-Bott points on Dynkin diagrams",
    long_about = "Groups are named by family and rank (\"B3\", \"E7\"); a quotient is named \
                  by a central class after a slash (\"B3/z1\", \"A5/z1^2\", \"D4/z1z2\", \
                  \"E6/ad\"). Rationals are strings like \"3/2\"; vertices are \"a1\"..\"a8\" \
                  in the Bourbaki numbering; points are JSON arrays of rationals in the \
                  fundamental-coweight basis."
)]
struct Cli {
    #[command(subcommand)]
    request: Request,
}

#[derive(Subcommand)]
enum Request {
    /// Describe the diagram, its center, and the chosen central class.
    Info { group: String },
    /// Compare two points: prints ">", "<", "=", or "incomparable".
    Order {
        group: String,
        /// First point, e.g. '["2","1"]'.
        first: String,
        /// Second point.
        second: String,
    },
    /// Plan a move sequence from one pair down to a smaller one.
    Plan {
        group: String,
        /// Starting pair, e.g. '{"coords":["2","1"],"support":["a1"]}'.
        #[arg(long)]
        from: String,
        /// Target pair; must lie below the start.
        #[arg(long)]
        to: String,
    },
    /// List every point of the class between two pointwise-comparable points.
    Between {
        group: String,
        /// Upper point.
        upper: String,
        /// Lower point.
        lower: String,
    },
    /// List the minimally unstable points of the group.
    Minimal { group: String },
    /// Report the special roots of the diagram and why the others fail.
    Special { group: String },
    /// Print the poset of canonical single-vertex points.
    Poset {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
    /// Check the catalog row against the search; exit 4 on mismatch.
    CatalogCheck { group: String },
    /// Print the piecewise-linear profile of a point.
    Profile { group: String, point: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// A failed request, tagged with its exit code.
enum Failure {
    /// The request itself is malformed: group name, class, rational,
    /// vertex name, or JSON shape.
    Parse(String),
    /// The request parsed but an operation precondition does not hold.
    Precondition(String),
    /// The catalog and the search disagree.
    Mismatch(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Mismatch(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.request) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn run(request: &Request) -> Result<String, Failure> {
    match request {
        Request::Info { group } => {
            let context = input::group(group)?;
            Ok(pretty(&render::info(&context)))
        }
        Request::Order {
            group,
            first,
            second,
        } => {
            let context = input::group(group)?;
            let f = input::point(first, &context)?;
            let g = input::point(second, &context)?;
            let verdict = render::order(ab_compare(&context, &f, &g));
            Ok(serde_json::Value::from(verdict).to_string())
        }
        Request::Plan { group, from, to } => {
            let context = input::group(group)?;
            let from = input::pair(from, &context)?;
            let to = input::pair(to, &context)?;
            let plan =
                plan_moves(&from, &to).map_err(|e| Failure::Precondition(e.to_string()))?;
            Ok(pretty(&render::plan(&plan)))
        }
        Request::Between {
            group,
            upper,
            lower,
        } => {
            let context = input::group(group)?;
            let upper = input::point(upper, &context)?;
            let lower = input::point(lower, &context)?;
            let points = enumerate_between(&context, &upper, &lower)
                .map_err(|e| Failure::Precondition(e.to_string()))?;
            Ok(pretty(&serde_json::Value::Array(
                points.iter().map(render::point).collect(),
            )))
        }
        Request::Minimal { group } => {
            let context = input::group(group)?;
            let points = minimally_unstable(&context);
            Ok(pretty(&serde_json::Value::Array(
                points.iter().map(render::pair).collect(),
            )))
        }
        Request::Special { group } => {
            let context = input::group(group)?;
            Ok(pretty(&render::special(&special_roots(context.data()))))
        }
        Request::Poset { group, output } => {
            let context = input::group(group)?;
            let poset = mu_poset(&context);
            Ok(match output {
                Format::Json => pretty(&render::poset(&poset)),
                Format::Dot => render::poset_dot(&poset),
            })
        }
        Request::CatalogCheck { group } => {
            let context = input::group(group)?;
            let listed = match catalog(&context) {
                Ok(listed) => listed,
                Err(CatalogError::NotCataloged) => {
                    return Err(Failure::Precondition(format!(
                        "{} is not in the catalog; `minimal {}` still runs the search",
                        context.label(),
                        context.label(),
                    )))
                }
            };
            let found = minimally_unstable(&context);
            let render_all =
                |pairs: &[abstrata_core::ABPair]| -> serde_json::Value {
                    serde_json::Value::Array(pairs.iter().map(render::pair).collect())
                };
            if listed == found {
                Ok(pretty(&serde_json::json!({
                    "group": context.label(),
                    "catalog": render_all(&listed),
                    "search": render_all(&found),
                    "agree": true,
                })))
            } else {
                Err(Failure::Mismatch(format!(
                    "catalog and search disagree for {}: catalog {} vs search {}",
                    context.label(),
                    render_all(&listed),
                    render_all(&found),
                )))
            }
        }
        Request::Profile { group, point } => {
            let context = input::group(group)?;
            let f = input::point(point, &context)?;
            Ok(pretty(&render::profile_of(&profile(context.data(), &f))))
        }
    }
}
