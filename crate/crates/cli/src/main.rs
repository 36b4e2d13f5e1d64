//! `isopoly`: independence polynomials and totally-isotropic subspace counts
//! from the command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isopoly::io::{parse_graph, parse_space, write_space};
use isopoly::qpoly::render::{from_json_str, render_latex, render_text, to_json_string};
use isopoly::qpoly::xq_mul;
use isopoly::{
    cross_validate, q_independence_polynomial, AltSpace, BivarPoly, Field, Graph, MonomialPoly,
    SpaceError, XqPoly, DEFAULT_GUARD_LIMIT,
};
use num_bigint::BigInt;
use serde_json::json;

#[derive(Parser)]
#[command(name = "isopoly", version, about = "q-analogue independence polynomials and isotropic subspace counts")]
struct Cli {
    /// Output format. LaTeX applies to polynomial output only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest number of subspaces (or vectors) a brute-force run may visit.
    #[arg(long, default_value_t = DEFAULT_GUARD_LIMIT, global = true)]
    guard_limit: u128,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Xq,
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinary independence polynomial I(G, x) of a graph file.
    Indep { graph: PathBuf },
    /// I(G, x, q) with Z[q] coefficients in the q-falling basis.
    Qindep { graph: PathBuf },
    /// TI(B, x) by enumerating every subspace over F_q.
    TiBrute {
        /// A space file, or a graph file with --graphical.
        input: PathBuf,
        #[arg(long)]
        q: u32,
        /// Read the input as a graph and use its graphical space.
        #[arg(long)]
        graphical: bool,
    },
    /// Disjoint direct sum of two space files, written as a space file.
    DirectSum { first: PathBuf, second: PathBuf },
    /// Compare symbolic and brute-force counts, stratum by stratum, and
    /// check the product law over connected components.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        q: u32,
    },
    /// Convert a JSON polynomial between bases, or fix q.
    Expand {
        poly: PathBuf,
        /// Basis of the result. Defaults to the input basis.
        #[arg(long, value_enum)]
        to: Option<Target>,
        /// Substitute this value of q; the result is in the monomial basis.
        #[arg(long)]
        at_q: Option<i64>,
    },
    /// Number of vectors v with dim span{Bv : B in the space} = e, for each e.
    RankLoci {
        input: PathBuf,
        /// Required with --graphical; must match the file otherwise.
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        graphical: bool,
    },
}

enum Failure {
    Input(String),
    Guard(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

impl From<SpaceError> for Failure {
    fn from(e: SpaceError) -> Self {
        match e {
            SpaceError::TooLarge { .. } => {
                Failure::Guard(format!("{e}; raise --guard-limit to run anyway"))
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<AltSpace, Failure> {
    parse_space(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn field(q: u32) -> Result<Field, Failure> {
    Field::new(q).map_err(|e| Failure::Input(e.to_string()))
}

/// A graphical space (with `--graphical`) or a space file checked against `q`.
fn load_input(path: &Path, q: Option<u32>, graphical: bool) -> Result<AltSpace, Failure> {
    if graphical {
        let q = q.ok_or_else(|| Failure::Input("--graphical needs --q".into()))?;
        return Ok(AltSpace::graphical(&load_graph(path)?, &field(q)?));
    }
    let space = load_space(path)?;
    if let Some(q) = q {
        field(q)?;
        if space.field().q() != q {
            return Err(Failure::Input(format!(
                "{}: space is over F_{}, but --q {q} was given",
                path.display(),
                space.field().q()
            )));
        }
    }
    Ok(space)
}

fn emit(p: BivarPoly, format: Format) -> String {
    match format {
        Format::Text => render_text(&p) + "\n",
        Format::Latex => render_latex(&p) + "\n",
        Format::Json => to_json_string(&p),
    }
}

fn no_latex(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Latex {
        return Err(Failure::Input(format!("{what} has no LaTeX form; use text or json")));
    }
    Ok(())
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn verify(g: &Graph, q: u32, limit: u128, format: Format) -> Outcome {
    no_latex(format, "a verification report")?;
    let f = field(q)?;
    let q0 = BigInt::from(q);
    let report = cross_validate(g, &f, limit)?;

    // Product law: both I(G) and TI(B_G) factor over the components of G.
    let comps = g.connected_components();
    let whole = q_independence_polynomial(g).to_xq();
    let mut symbolic_product = XqPoly::one();
    let mut brute_product = XqPoly::one();
    for &c in &comps {
        let (sub, _) = g
            .induced_subgraph(c)
            .map_err(|e| Failure::Input(e.to_string()))?;
        symbolic_product = xq_mul(&symbolic_product, &q_independence_polynomial(&sub).to_xq());
        let piece = AltSpace::graphical(&sub, &f).ti_polynomial_brute(limit)?;
        brute_product = xq_mul(&brute_product, &piece);
    }
    let brute_whole = AltSpace::graphical(g, &f).ti_polynomial_brute(limit)?;
    let symbolic_ok = symbolic_product == whole;
    let brute_ok = brute_product.specialize_q(&q0) == brute_whole.specialize_q(&q0);
    let passed = report.passed() && symbolic_ok && brute_ok;

    let out = match format {
        Format::Json => {
            let discrepancies: Vec<String> = report.discrepancies.iter().map(|d| d.to_string()).collect();
            let v = json!({
                "q": q,
                "symbolic": report.symbolic.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "brute": report.brute.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "strata_checked": report.strata_checked,
                "discrepancies": discrepancies,
                "components": comps.len(),
                "product_symbolic": symbolic_ok,
                "product_brute": brute_ok,
                "passed": passed,
            });
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        _ => {
            let mut s = report.to_string();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
            let _ = writeln!(
                s,
                "product over {} component(s): symbolic {}, brute {} at q = {q}",
                comps.len(),
                verdict(symbolic_ok),
                verdict(brute_ok)
            );
            if !brute_ok {
                let _ = writeln!(
                    s,
                    "  brute TI {} != product {}",
                    tuple(brute_whole.specialize_q(&q0).coeffs.coeffs()),
                    tuple(brute_product.specialize_q(&q0).coeffs.coeffs())
                );
            }
            s
        }
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verify(out))
    }
}

fn expand(text: &str, to: Option<Target>, at_q: Option<i64>, format: Format) -> Outcome {
    let p = from_json_str(text).map_err(|e| Failure::Input(e.to_string()))?;
    let result = match (at_q, to) {
        (Some(_), Some(Target::Xq)) => {
            return Err(Failure::Input(
                "--at-q produces the monomial basis; drop --to xq".into(),
            ))
        }
        (Some(q0), _) => {
            let ints = p.to_monomial().specialize_q(&BigInt::from(q0));
            BivarPoly::Monomial(MonomialPoly::from_int_coeffs(&ints))
        }
        (None, Some(Target::Xq)) => BivarPoly::Falling(p.to_falling()),
        (None, Some(Target::Monomial)) => BivarPoly::Monomial(p.to_monomial()),
        (None, None) => p,
    };
    Ok(emit(result, format))
}

fn rank_loci(space: &AltSpace, limit: u128, format: Format) -> Outcome {
    no_latex(format, "a rank-locus table")?;
    let counts = space.rank_locus_counts(limit)?;
    Ok(match format {
        Format::Json => {
            let v = json!({ "n": space.n(), "q": space.field().q(), "counts": counts });
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        _ => counts
            .iter()
            .enumerate()
            .map(|(e, c)| format!("e = {e}: {c}\n"))
            .collect(),
    })
}

fn run(cli: &Cli) -> Outcome {
    let limit = cli.guard_limit;
    let format = cli.format;
    match &cli.command {
        Command::Indep { graph } => {
            let g = load_graph(graph)?;
            let p = MonomialPoly::from_int_coeffs(&g.independence_polynomial());
            Ok(emit(BivarPoly::Monomial(p), format))
        }
        Command::Qindep { graph } => {
            let g = load_graph(graph)?;
            Ok(emit(BivarPoly::Falling(q_independence_polynomial(&g).to_xq()), format))
        }
        Command::TiBrute { input, q, graphical } => {
            let space = load_input(input, Some(*q), *graphical)?;
            Ok(emit(BivarPoly::Falling(space.ti_polynomial_brute(limit)?), format))
        }
        Command::DirectSum { first, second } => {
            if format != Format::Text {
                return Err(Failure::Input("direct-sum writes a space file; use --format text".into()));
            }
            let a = load_space(first)?;
            let b = load_space(second)?;
            Ok(write_space(&a.direct_sum(&b)?))
        }
        Command::Verify { graph, q } => verify(&load_graph(graph)?, *q, limit, format),
        Command::Expand { poly, to, at_q } => expand(&read(poly)?, *to, *at_q, format),
        Command::RankLoci { input, q, graphical } => {
            rank_loci(&load_input(input, *q, *graphical)?, limit, format)
        }
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| write_out(&cli.out, &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                // The report itself explains the failure.
                Failure::Verify(report) => {
                    let _ = write_out(&cli.out, report);
                    eprintln!("error: verification failed");
                }
                Failure::Input(msg) | Failure::Guard(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
