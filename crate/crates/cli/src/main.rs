mod docs;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use springer_core::inversions::{springer_inversions, springer_pairs, PairSet};
use springer_core::poincare::{
    equivariant_poincare, extended_cells, extended_poincare, isotypic_poincare,
    lusztig_stalk_poincare, springer_poincare, ShiftedPolynomial,
};
use springer_core::tableau::Block;
use springer_core::toric::{
    component_characters, d_star, invariant_sum_decomposition, is_invariant_monomial, phi,
    v_exponents, CTuple, ExponentVector, InvariantDecomposition,
};
use springer_core::verify::run_all;
use springer_core::{Error, Partition, RowStrictTableau, ToricFrame};

use output::{list, pairs, ytableau, Body, Doc, Format};

#[derive(Parser)]
#[command(name = "springer", version, about = "Springer fibers, row-strict tableaux and their Poincaré polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SPRINGER_FORMAT", default_value = "table")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Print the map from subcommands to the mathematics they compute.
    #[arg(long)]
    seed_docs: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Row-strict tableaux of a shape.
    Rst {
        #[command(subcommand)]
        action: RstCommand,
    },
    /// Statistics of a single tableau.
    Tableau {
        #[command(subcommand)]
        action: TableauCommand,
    },
    /// Poincaré polynomials of a shape.
    Poincare {
        #[arg(value_enum)]
        kind: PoincareKind,
        partition: String,
        /// Character index i in 0..n.
        #[arg(long = "char")]
        character: Option<u64>,
    },
    /// Orbifold cells of the extended Springer fiber.
    Cells { partition: String },
    /// Toric charts on a cell.
    Toric {
        #[command(subcommand)]
        action: ToricCommand,
    },
    /// Exhaustive identity checks.
    Verify {
        #[command(subcommand)]
        action: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum RstCommand {
    List { partition: String },
}

#[derive(Subcommand)]
enum TableauCommand {
    Info { tableau: String },
    Quotient { tableau: String, d: u64 },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum PoincareKind {
    Springer,
    Extended,
    Isotypic,
    Lusztig,
}

#[derive(Args)]
struct FrameArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated J.
    #[arg(long, default_value = "")]
    j: String,
    /// Comma-separated K; I is the complement of J and K.
    #[arg(long, default_value = "")]
    k: String,
    /// Take the frame of this tableau's cell instead.
    #[arg(long, conflicts_with_all = ["n", "j", "k"])]
    tableau: Option<String>,
}

#[derive(Subcommand)]
enum ToricCommand {
    Dstar(FrameArgs),
    Phi {
        #[command(flatten)]
        frame: FrameArgs,
        /// Residues c_j, one per element of J in increasing order.
        #[arg(long, default_value = "")]
        c: String,
    },
    Characters(FrameArgs),
    Invariants {
        #[command(flatten)]
        frame: FrameArgs,
        /// Exponents b_1..b_{n-1}.
        #[arg(long)]
        b: String,
        /// Residues c_j for the decomposition; zeros when absent.
        #[arg(long)]
        c: Option<String>,
    },
    Vtable {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    All {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauInfo {
    tableau: RowStrictTableau,
    #[serde(rename = "I")]
    i: Vec<usize>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
    blocks: Vec<Block>,
    d_sigma: u64,
    inversion_count: usize,
    inversions: PairSet,
    pairs: PairSet,
    w_sigma: Vec<usize>,
    w_sigma_inverse: Vec<usize>,
    frame: ToricFrame,
}

#[derive(Serialize, Deserialize)]
struct InvariantReport {
    invariant: bool,
    decomposition: Option<InvariantDecomposition>,
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse()?)
}

fn parse_tableau(s: &str) -> Result<RowStrictTableau, Failure> {
    Ok(s.parse()?)
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::Usage(format!("malformed input `{t}`: expected a non-negative integer")))
        })
        .collect()
}

fn frame_from(args: &FrameArgs) -> Result<ToricFrame, Failure> {
    if let Some(t) = &args.tableau {
        return Ok(parse_tableau(t)?.cell_frame());
    }
    let n = args
        .n
        .ok_or_else(|| Failure::Usage("a frame needs --n with --j/--k, or --tableau".into()))?;
    Ok(ToricFrame::from_j_k(n, parse_list(&args.j)?, parse_list(&args.k)?)?)
}

fn poly_doc(p: &springer_core::IntPolynomial) -> Doc {
    Doc::new(p, Body::Poly(p.clone())).with_latex(p.to_latex())
}

fn shifted_latex(s: &ShiftedPolynomial) -> String {
    if s.is_zero() {
        "0".into()
    } else if s.shift == 0 {
        s.poly.to_latex()
    } else {
        format!("t^{{{}}}\\left({}\\right)", s.shift, s.poly.to_latex())
    }
}

fn shifted_doc(s: &ShiftedPolynomial) -> Doc {
    let body = Body::Record(vec![
        ("shift".into(), s.shift.to_string()),
        ("poly".into(), s.poly.to_string()),
        ("expanded".into(), s.expand().to_string()),
    ]);
    Doc::new(s, body).with_latex(shifted_latex(s))
}

fn check_char(lam: &Partition, i: u64) -> Result<(), Failure> {
    let n = lam.n() as u64;
    if i >= n {
        return Err(Error::OutOfRange {
            index: i,
            range: format!("0..{n}"),
        }
        .into());
    }
    Ok(())
}

fn poincare(kind: PoincareKind, lam: &Partition, character: Option<u64>) -> Result<Doc, Failure> {
    let n = lam.n() as u64;
    if let Some(i) = character {
        check_char(lam, i)?;
    }
    Ok(match (kind, character) {
        (PoincareKind::Springer | PoincareKind::Extended, Some(_)) => {
            return Err(Failure::Usage(
                "--char applies only to isotypic and lusztig".into(),
            ))
        }
        (PoincareKind::Springer, None) => poly_doc(&springer_poincare(lam)),
        (PoincareKind::Extended, None) => poly_doc(&extended_poincare(lam)),
        (PoincareKind::Isotypic, Some(i)) => {
            let shifted = springer_core::poincare::isotypic_closed_form(lam, i)?;
            // the cell-level computation must agree before anything is printed
            isotypic_poincare(lam, i)?;
            shifted_doc(&shifted)
        }
        (PoincareKind::Isotypic, None) => {
            let e = equivariant_poincare(lam);
            let rows = e
                .by_char
                .iter()
                .enumerate()
                .map(|(i, p)| vec![i.to_string(), p.to_string()])
                .collect();
            let latex = e
                .by_char
                .iter()
                .enumerate()
                .map(|(i, p)| format!("P_{{\\chi_{{{i}}}}} &= {} \\\\", p.to_latex()))
                .collect::<Vec<_>>()
                .join("\n");
            Doc::new(&e, Body::Grid { header: vec!["char".into(), "poincare".into()], rows })
                .with_latex(format!("\\begin{{align*}}\n{latex}\n\\end{{align*}}"))
        }
        (PoincareKind::Lusztig, Some(i)) => shifted_doc(&lusztig_stalk_poincare(lam, i)?),
        (PoincareKind::Lusztig, None) => {
            let all = (0..n)
                .map(|i| lusztig_stalk_poincare(lam, i))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = all
                .iter()
                .enumerate()
                .map(|(i, s)| vec![i.to_string(), s.shift.to_string(), s.poly.to_string()])
                .collect();
            Doc::new(
                &all,
                Body::Grid {
                    header: vec!["char".into(), "shift".into(), "poly".into()],
                    rows,
                },
            )
        }
    })
}

fn tableau_info(sigma: RowStrictTableau) -> Doc {
    let dec = sigma.ijk_decomposition();
    let info = TableauInfo {
        i: dec.i,
        j: dec.j,
        k: dec.k,
        blocks: sigma.blocks(),
        d_sigma: sigma.max_divisor(),
        inversion_count: springer_inversions(&sigma).len(),
        inversions: springer_inversions(&sigma),
        pairs: springer_pairs(&sigma),
        w_sigma: sigma.w_sigma(),
        w_sigma_inverse: sigma.w_sigma_inverse(),
        frame: sigma.cell_frame(),
        tableau: sigma,
    };
    let blocks: Vec<String> = info
        .blocks
        .iter()
        .map(|b| format!("[{}..{}]", b.first, b.last()))
        .collect();
    let body = Body::Record(vec![
        ("tableau".into(), info.tableau.to_string()),
        ("shape".into(), info.tableau.shape().to_string()),
        ("I".into(), list(&info.i)),
        ("J".into(), list(&info.j)),
        ("K".into(), list(&info.k)),
        ("blocks".into(), blocks.join(" ")),
        ("d_sigma".into(), info.d_sigma.to_string()),
        ("|sigma|".into(), info.inversion_count.to_string()),
        ("inversions".into(), pairs(&info.inversions.pairs)),
        ("pairs".into(), pairs(&info.pairs.pairs)),
        ("w_sigma".into(), format!("{:?}", info.w_sigma)),
        ("w_sigma^-1".into(), format!("{:?}", info.w_sigma_inverse)),
        ("frame".into(), info.frame.to_string()),
    ]);
    let latex = ytableau(&info.tableau);
    Doc::new(&info, body).with_latex(latex)
}

fn toric(action: &ToricCommand) -> Result<Doc, Failure> {
    Ok(match action {
        ToricCommand::Dstar(args) => {
            let frame = frame_from(args)?;
            let ds = d_star(&frame);
            Doc::new(
                &ds,
                Body::Record(vec![("frame".into(), frame.to_string()), ("d*".into(), ds.to_string())]),
            )
        }
        ToricCommand::Phi { frame, c } => {
            let frame = frame_from(frame)?;
            let tuple = CTuple::new(frame.j().to_vec(), parse_list(c)?)?;
            let idx = phi(&frame, &tuple)?;
            Doc::new(
                &idx,
                Body::Record(vec![
                    ("frame".into(), frame.to_string()),
                    ("c".into(), list(&tuple.c)),
                    ("d*".into(), idx.d_star.to_string()),
                    ("component".into(), idx.r.to_string()),
                ]),
            )
        }
        ToricCommand::Characters(args) => {
            let frame = frame_from(args)?;
            let chars = component_characters(&frame);
            let names: Vec<String> = chars.iter().map(|i| format!("chi_{i}")).collect();
            Doc::new(
                &chars,
                Body::Record(vec![("frame".into(), frame.to_string()), ("characters".into(), list(&names))]),
            )
        }
        ToricCommand::Invariants { frame, b, c } => {
            let frame = frame_from(frame)?;
            let b = ExponentVector::new(frame.n() as u64, parse_list(b)?)?;
            let tuple = match c {
                Some(c) => CTuple::new(frame.j().to_vec(), parse_list(c)?)?,
                None => CTuple::zeros(frame.j()),
            };
            let invariant = is_invariant_monomial(&b, frame.j());
            let decomposition = if invariant {
                Some(invariant_sum_decomposition(&b, &tuple)?)
            } else {
                None
            };
            let mut rows = vec![
                ("frame".into(), frame.to_string()),
                ("b".into(), list(&b.exps)),
                ("invariant".into(), invariant.to_string()),
            ];
            if let Some(d) = &decomposition {
                rows.push(("g".into(), list(&d.g.exps)));
                rows.push(("m".into(), list(&d.m)));
                rows.push(("scalar exponent".into(), d.scalar_exponent.to_string()));
                rows.push(("residue".into(), d.residue.to_string()));
            }
            Doc::new(&InvariantReport { invariant, decomposition }, Body::Record(rows))
        }
        ToricCommand::Vtable { n } => {
            let table = (1..*n)
                .map(|k| v_exponents(*n, k))
                .collect::<Result<Vec<_>, _>>()?;
            let mut header = vec!["k".to_string()];
            header.extend((1..*n).map(|r| format!("z_{r}")));
            let rows = table
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let mut row = vec![(k + 1).to_string()];
                    row.extend(v.exps.iter().map(u64::to_string));
                    row
                })
                .collect();
            Doc::new(&table, Body::Grid { header, rows })
        }
    })
}

fn run(command: &Command) -> Result<(Doc, bool), Failure> {
    let doc = match command {
        Command::Rst { action: RstCommand::List { partition } } => {
            let lam = parse_partition(partition)?;
            let all: Vec<RowStrictTableau> = springer_core::enumerate_rst(&lam).collect();
            let rows = all
                .iter()
                .enumerate()
                .map(|(idx, s)| {
                    vec![
                        idx.to_string(),
                        s.to_string(),
                        springer_inversions(s).len().to_string(),
                        s.max_divisor().to_string(),
                    ]
                })
                .collect();
            let header = ["index", "tableau", "|sigma|", "d_sigma"].map(String::from).to_vec();
            Doc::new(&all, Body::Grid { header, rows })
        }
        Command::Tableau { action: TableauCommand::Info { tableau } } => tableau_info(parse_tableau(tableau)?),
        Command::Tableau { action: TableauCommand::Quotient { tableau, d } } => {
            let q = parse_tableau(tableau)?.quotient(*d)?;
            let rows = q
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let width = q.num_columns();
            let header = (1..=width).map(|c| format!("c{c}")).collect();
            let latex = ytableau(&q);
            Doc::new(&q, Body::Grid { header, rows }).with_latex(latex)
        }
        Command::Poincare { kind, partition, character } => {
            poincare(*kind, &parse_partition(partition)?, *character)?
        }
        Command::Cells { partition } => {
            let cells = extended_cells(&parse_partition(partition)?);
            let rows = cells
                .iter()
                .map(|c| vec![c.tableau.to_string(), c.r.to_string(), c.d.to_string(), c.dim.to_string()])
                .collect();
            let header = ["tableau", "r", "d_sigma", "dim"].map(String::from).to_vec();
            Doc::new(&cells, Body::Grid { header, rows })
        }
        Command::Toric { action } => toric(action)?,
        Command::Verify { action: VerifyCommand::All { n_max } } => {
            let reports = run_all(*n_max);
            let ok = reports.iter().all(|r| r.pass);
            let rows = reports
                .iter()
                .map(|r| {
                    vec![
                        r.check.clone(),
                        r.range.clone(),
                        if r.pass { "PASS" } else { "FAIL" }.to_string(),
                        r.counterexample.as_ref().map_or(String::new(), |v| v.to_string()),
                    ]
                })
                .collect();
            let header = ["check", "range", "result", "counterexample"].map(String::from).to_vec();
            return Ok((Doc::new(&reports, Body::Grid { header, rows }), ok));
        }
    };
    Ok((doc, true))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("springer: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let result = if cli.seed_docs {
        emit(docs::SEED_DOCS, cli.out.as_ref()).map(|()| true)
    } else {
        match &cli.command {
            None => Err(Failure::Usage("missing subcommand; see --help".into())),
            Some(command) => run(command).and_then(|(doc, ok)| {
                emit(&doc.render(cli.format), cli.out.as_ref())?;
                if ok {
                    Ok(true)
                } else {
                    Err(Failure::Verification("verification failed".into()))
                }
            }),
        }
    };
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("springer: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("springer: {msg}");
            ExitCode::from(1)
        }
    }
}
