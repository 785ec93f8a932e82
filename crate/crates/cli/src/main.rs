//! `operadic`: compose, enumerate and render operad elements, and run the law suites.

mod select;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use operadic::composition::composition_dimension;
use operadic::dot::lincomb_to_dot;
use operadic::lawcheck::{self, Bounds, CompositeKind, Law, LawReport, Suite};
use operadic::operads::{canonical_set, Mag, Nap, Operad, PreLie, ShuffleMag};
use operadic::{FiniteSet, Label, LinComb};
use serde_json::{json, Value};

use select::{dispatch, Base, Selector, Visit};

/// Environment variable holding suite bounds, e.g. `s=3,t=2,r=2,total=4`.
const BOUNDS_ENV: &str = "OPERADIC_BOUNDS";

#[derive(Parser)]
#[command(name = "operadic", version, about = "Tree operads and operad structures on species compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate `x ∘_s y`. Operands may be linear combinations.
    Compose {
        #[arg(long)]
        op: Selector,
        /// The composition point `s`.
        #[arg(long)]
        at: String,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run law checks and exit 1 if any verdict is unexpected.
    Check {
        /// Suite to run: axioms, eq1, composition, oracle, reduction or all.
        #[arg(long, conflicts_with = "op")]
        suite: Option<String>,
        /// Check a single operad instead of a suite.
        #[arg(long)]
        op: Option<Selector>,
        /// Restrict `--op` to one law (A1, A2, N1, N2, U1, U2, EQ1).
        #[arg(long, requires = "op")]
        law: Option<String>,
        /// Overrides the bounds from the environment.
        #[arg(long)]
        bounds: Option<String>,
        /// Run even when the estimated instance count exceeds the cap.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List a basis.
    Enumerate {
        #[arg(long)]
        op: Selector,
        /// Use the labels 1..n.
        #[arg(long, conflicts_with = "labels")]
        n: Option<usize>,
        /// Comma-separated labels.
        #[arg(long)]
        labels: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Draw an element or a linear combination as DOT, one digraph per term.
    Render {
        #[arg(long)]
        op: Selector,
        expr: String,
    },
    /// Dimensions of `P ∘ q` on 1..n labels.
    Dims {
        #[arg(long)]
        p: Selector,
        #[arg(long)]
        q: Selector,
        /// A single size; without it a table for 1..4 is printed.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failure the user should see, with exit code 2.
struct Failure(String);

impl From<operadic::Error> for Failure {
    fn from(e: operadic::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, ExitCode), Failure>;

fn ok(text: String) -> Outcome {
    Ok((text, ExitCode::SUCCESS))
}

fn terms_json<B: Ord + Clone + std::fmt::Display>(x: &LinComb<B>) -> Value {
    Value::Array(
        x.iter()
            .map(|(b, c)| json!({ "coefficient": c.to_string(), "term": b.to_string() }))
            .collect(),
    )
}

struct Compose {
    at: String,
    x: String,
    y: String,
    format: Format,
}

impl Visit for Compose {
    type Out = Outcome;

    fn visit<O: Operad + Clone>(self, op: &O) -> Outcome {
        let s = Label::new(self.at.as_str())?;
        let parse = |text: &str| {
            op.parse_lincomb(text)
                .map_err(|e| Failure(format!("cannot read `{text}` as an element of {}: {e}", op.name())))
        };
        let (x, y) = (parse(&self.x)?, parse(&self.y)?);
        let r = op.compose_lin(&x, &s, &y)?;
        ok(match self.format {
            Format::Text => r.to_string(),
            Format::Dot => lincomb_to_dot(&r, "term"),
            Format::Json => json!({
                "operad": op.name(),
                "at": s.as_str(),
                "x": x.to_string(),
                "y": y.to_string(),
                "result": r.to_string(),
                "terms": terms_json(&r),
            })
            .to_string(),
        })
    }
}

struct Enumerate {
    labels: FiniteSet,
    format: Format,
}

impl Visit for Enumerate {
    type Out = Outcome;

    fn visit<O: Operad + Clone>(self, op: &O) -> Outcome {
        let basis = op.basis(&self.labels);
        ok(match self.format {
            Format::Text => {
                let mut out: Vec<String> = basis.iter().map(ToString::to_string).collect();
                out.push(format!("count: {}", basis.len()));
                out.join("\n")
            }
            Format::Dot => lincomb_to_dot(&basis.into_iter().collect(), "basis"),
            Format::Json => json!({
                "operad": op.name(),
                "labels": self.labels.iter().map(Label::as_str).collect::<Vec<_>>(),
                "count": basis.len(),
                "elements": basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
            .to_string(),
        })
    }
}

struct Render(String);

impl Visit for Render {
    type Out = Outcome;

    fn visit<O: Operad + Clone>(self, op: &O) -> Outcome {
        ok(lincomb_to_dot(&op.parse_lincomb(&self.0)?, "term"))
    }
}

struct Dimension(FiniteSet);

impl Visit for Dimension {
    type Out = u128;

    fn visit<P: Operad + Clone>(self, p: &P) -> u128 {
        p.basis(&self.0).len() as u128
    }
}

struct Dims<'a> {
    q: Selector,
    sizes: &'a [usize],
}

impl Visit for Dims<'_> {
    type Out = Vec<u128>;

    fn visit<P: Operad + Clone>(self, p: &P) -> Vec<u128> {
        struct Inner<'b, P>(&'b P, &'b [usize]);
        impl<P: Operad> Visit for Inner<'_, P> {
            type Out = Vec<u128>;
            fn visit<Q: Operad + Clone>(self, q: &Q) -> Vec<u128> {
                self.1.iter().map(|&n| composition_dimension(self.0, q, &canonical_set(n))).collect()
            }
        }
        dispatch(self.q, Inner(p, self.sizes))
    }
}

struct CheckAll<'a>(&'a Bounds, Option<Law>);

impl Visit for CheckAll<'_> {
    type Out = Result<Vec<LawReport>, operadic::Error>;

    fn visit<O: Operad + Clone>(self, op: &O) -> Self::Out {
        match self.1 {
            Some(law) => Ok(vec![lawcheck::check_axiom(law, op, self.0)?]),
            None => lawcheck::check_all_axioms(op, self.0),
        }
    }
}

fn bounds(flag: Option<String>, allow_large: bool) -> Result<Bounds, Failure> {
    let text = flag.or_else(|| std::env::var(BOUNDS_ENV).ok());
    let mut b = match text {
        Some(t) => t.parse::<Bounds>().map_err(|e| Failure(format!("{e} (from --bounds or {BOUNDS_ENV})")))?,
        None => Bounds::default(),
    };
    b.allow_large = allow_large;
    Ok(b)
}

fn check_one(sel: Selector, law: Option<Law>, b: &Bounds) -> Result<Vec<LawReport>, operadic::Error> {
    let with_total = || Bounds {
        max_total: b.max_total.or(Some(lawcheck::COMPOSITION_TOTAL)),
        ..b.clone()
    };
    let eq1 = |base: Base| -> Option<Result<LawReport, operadic::Error>> {
        Some(match base {
            Base::Nap => lawcheck::check_eq1(&Nap, b),
            Base::PreLie => lawcheck::check_eq1(&PreLie, b),
            Base::Mag => lawcheck::check_eq1(&Mag, b),
            Base::ShuffleMag => lawcheck::check_eq1(&ShuffleMag, b),
            Base::Com | Base::Unit => return None,
        })
    };
    match (sel, law) {
        (Selector::Plain(base), Some(Law::Eq1)) => match eq1(base) {
            Some(r) => Ok(vec![r?]),
            None => Err(operadic::Error::NotAnAxiom(format!("EQ1 needs a tree operad, not {}", base.name()))),
        },
        (_, Some(Law::Eq1)) => Err(operadic::Error::NotAnAxiom(format!("EQ1 needs a tree operad, not {sel}"))),
        (Selector::Plain(base), None) => {
            let mut out = dispatch(sel, CheckAll(b, None))?;
            if let Some(r) = eq1(base) {
                out.push(r?);
            }
            Ok(out)
        }
        (Selector::Box(base), None) | (Selector::Diamond(base), None) => {
            let kind = if matches!(sel, Selector::Box(_)) { CompositeKind::Box } else { CompositeKind::Diamond };
            struct Composite<'a>(CompositeKind, &'a Bounds);
            impl Visit for Composite<'_> {
                type Out = Result<Vec<LawReport>, operadic::Error>;
                fn visit<O: Operad + Clone>(self, q: &O) -> Self::Out {
                    lawcheck::check_composition_operad(self.0, q, self.1)
                }
            }
            dispatch(Selector::Plain(base), Composite(kind, &with_total()))
        }
        (Selector::Plain(_), law) => dispatch(sel, CheckAll(b, law)),
        (_, law) => dispatch(sel, CheckAll(&with_total(), law)),
    }
}

fn render_reports(reports: &[LawReport], format: Format) -> Outcome {
    let unexpected = reports.iter().filter(|r| !r.is_expected()).count();
    let code = if unexpected == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(reports).map_err(|e| Failure(e.to_string()))?,
        Format::Text | Format::Dot => {
            let failed = reports.iter().filter(|r| r.verdict == lawcheck::Verdict::Counterexample && r.is_expected()).count();
            let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "summary: {} checks, {} instances, {failed} expected failures, {unexpected} unexpected verdicts",
                reports.len(),
                reports.iter().map(|r| r.instances).sum::<u64>()
            ));
            lines.join("\n")
        }
    };
    Ok((text, code))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compose { op, at, x, y, format } => dispatch(op, Compose { at, x, y, format }),
        Command::Check {
            suite,
            op,
            law,
            bounds: flag,
            allow_large,
            format,
        } => {
            let b = bounds(flag, allow_large)?;
            let law = law.map(|l| l.parse::<Law>()).transpose()?;
            let reports = match op {
                Some(sel) => check_one(sel, law, &b)?,
                None => lawcheck::run_suite(suite.as_deref().unwrap_or("all").parse::<Suite>()?, &b)?,
            };
            render_reports(&reports, format)
        }
        Command::Enumerate { op, n, labels, format } => {
            let labels = match (n, labels) {
                (Some(n), _) => canonical_set(n),
                (None, Some(text)) => FiniteSet::try_from_labels(
                    text.split(',')
                        .map(|l| Label::new(l.trim()))
                        .collect::<Result<Vec<_>, _>>()?,
                )?,
                (None, None) => return Err(Failure("give either --n or --labels".into())),
            };
            dispatch(op, Enumerate { labels, format })
        }
        Command::Render { op, expr } => dispatch(op, Render(expr)),
        Command::Dims { p, q, n, format } => {
            let sizes: Vec<usize> = match n {
                Some(0) => return Err(Failure("--n must be at least 1".into())),
                Some(n) => vec![n],
                None => (1..=4).collect(),
            };
            let dims = dispatch(p, Dims { q, sizes: &sizes });
            ok(match (format, n) {
                (Format::Json, _) => json!({
                    "p": p.to_string(),
                    "q": q.to_string(),
                    "rows": sizes.iter().zip(&dims).map(|(n, d)| json!({ "n": n, "dimension": d.to_string() })).collect::<Vec<_>>(),
                })
                .to_string(),
                (_, Some(_)) => dims[0].to_string(),
                _ => {
                    let p_dims: Vec<u128> = sizes.iter().map(|&n| dispatch(p, Dimension(canonical_set(n)))).collect();
                    let mut lines = vec![format!("n  dim {p}  dim {p}∘{q}")];
                    lines.extend(sizes.iter().zip(p_dims.iter().zip(&dims)).map(|(n, (a, b))| format!("{n}  {a}  {b}")));
                    lines.join("\n")
                }
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            println!("{text}");
            code
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
