//! Command-line front end: every library capability behind one binary with
//! stable text output, optional JSON, and shell-friendly exit codes
//! (0 graphic/success, 1 not graphic, 2 usage or input error).

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use graphseq::{
    build_ferrers, count_realizations, enumerate_all, is_graphic, oracle, parse_tokens,
    quasi_perfect_pair, realize_kw, realize_with_edge, render_ferrers, CheckReport, DegreeSequence,
    Error, LabeledGraph, Method,
};

const EXIT_GRAPHIC: i32 = 0;
const EXIT_NOT_GRAPHIC: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "graphseq",
    version,
    about = "Analyze graphic degree sequences: check, realize, enumerate",
    after_help = "Sequences are given as one argument with integers separated by spaces \
                  and/or commas, e.g. \"3 3 2 2\". Input is sorted into nonincreasing \
                  order (a note goes to stderr when that reorders anything) and labels \
                  1..n refer to the sorted positions."
)]
struct Cli {
    /// Emit one JSON object mirroring the text output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide graphicality; exit code 0 = graphic, 1 = not graphic
    Check {
        sequence: String,
        /// eg, eg_strong, berge, bh, weak, topright, kw, oracle, or all
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Print one realization as an edge list
    Realize {
        sequence: String,
        /// Force the edge between the position-1 label and this label
        #[arg(long)]
        with_edge: Option<usize>,
    },
    /// Print every labeled realization, one edge list per line
    Enumerate {
        sequence: String,
        /// Stop after this many realizations
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print the number of labeled realizations
    Count { sequence: String },
    /// Print the conjugate (or corrected conjugate) values
    Conjugate {
        sequence: String,
        #[arg(long)]
        corrected: bool,
    },
    /// Print the complementary sequence, zeros included
    Complement { sequence: String },
    /// Print m, w and the strong/weak index sets
    Indices { sequence: String },
    /// Draw the Ferrers diagram, top row first
    Ferrers {
        sequence: String,
        #[arg(long)]
        corrected: bool,
    },
    /// Print the two quasi-perfect graphic sequences of length N
    #[command(name = "quasi-perfect")]
    QuasiPerfect { n: usize },
    /// Exhaustively enumerate realizations by scanning all edge sets
    Oracle {
        sequence: String,
        /// Print only the number of realizations
        #[arg(long)]
        count: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn parse_sequence_arg(text: &str) -> Result<DegreeSequence, Error> {
    let tokens = parse_tokens(text)?;
    if !tokens.windows(2).all(|w| w[0] >= w[1]) {
        eprintln!(
            "note: sequence reordered into canonical nonincreasing order; \
             labels 1..n refer to sorted positions"
        );
    }
    Ok(DegreeSequence::from_values(&tokens).normalize())
}

fn usage_error(err: &Error) -> i32 {
    eprintln!("error: {err}");
    EXIT_USAGE
}

fn edges_json(g: &LabeledGraph) -> Value {
    Value::Array(g.edges().map(|(a, b)| json!([a, b])).collect())
}

fn report_json(report: &CheckReport) -> Value {
    let mut obj = json!({
        "method": report.method.tag(),
        "verdict": if report.is_graphic() { "graphic" } else { "not_graphic" },
    });
    if let Some(k) = report.witness_index() {
        obj["witness_k"] = json!(k);
    }
    obj
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { sequence, method } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let methods: Vec<Method> = if method == "all" {
                Method::ANALYTIC.to_vec()
            } else {
                match method.parse::<Method>() {
                    Ok(m) => vec![m],
                    Err(e) => return usage_error(&e),
                }
            };
            let mut reports = Vec::with_capacity(methods.len());
            for m in methods {
                match is_graphic(&seq, m) {
                    Ok(r) => reports.push(r),
                    Err(e) => return usage_error(&e),
                }
            }
            if cli.json {
                let obj = json!({
                    "command": "check",
                    "sequence": seq.values(),
                    "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                });
                println!("{obj}");
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            if reports.iter().all(CheckReport::is_graphic) {
                EXIT_GRAPHIC
            } else {
                EXIT_NOT_GRAPHIC
            }
        }
        Command::Realize {
            sequence,
            with_edge,
        } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let built = match with_edge {
                Some(j) => realize_with_edge(&seq, j),
                None => realize_kw(&seq),
            };
            match built {
                Ok(g) => {
                    if cli.json {
                        let obj = json!({
                            "command": "realize",
                            "sequence": seq.values(),
                            "n": g.n(),
                            "edges": edges_json(&g),
                        });
                        println!("{obj}");
                    } else {
                        println!("{}", g.edge_line());
                    }
                    EXIT_GRAPHIC
                }
                Err(Error::NotGraphic) => {
                    eprintln!("error: {}", Error::NotGraphic);
                    EXIT_NOT_GRAPHIC
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::Enumerate { sequence, limit } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let graphs: Vec<LabeledGraph> = match limit {
                Some(k) => enumerate_all(&seq).take(k).collect(),
                None => enumerate_all(&seq).collect(),
            };
            if cli.json {
                let obj = json!({
                    "command": "enumerate",
                    "sequence": seq.values(),
                    "count": graphs.len(),
                    "graphs": graphs.iter().map(edges_json).collect::<Vec<_>>(),
                });
                println!("{obj}");
            } else {
                for g in &graphs {
                    println!("{}", g.edge_line());
                }
            }
            if graphs.is_empty() {
                EXIT_NOT_GRAPHIC
            } else {
                EXIT_GRAPHIC
            }
        }
        Command::Count { sequence } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let count = count_realizations(&seq);
            if cli.json {
                let obj = json!({
                    "command": "count",
                    "sequence": seq.values(),
                    "count": count,
                });
                println!("{obj}");
            } else {
                println!("{count}");
            }
            if count == 0 {
                EXIT_NOT_GRAPHIC
            } else {
                EXIT_GRAPHIC
            }
        }
        Command::Conjugate {
            sequence,
            corrected,
        } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let values = if corrected {
                seq.corrected_conjugate()
            } else {
                seq.conjugate()
            };
            match values {
                Ok(values) => {
                    if cli.json {
                        let obj = json!({
                            "command": "conjugate",
                            "sequence": seq.values(),
                            "corrected": corrected,
                            "values": values,
                        });
                        println!("{obj}");
                    } else {
                        println!("{}", join(&values));
                    }
                    EXIT_GRAPHIC
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::Complement { sequence } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            match seq.complement() {
                Ok(c) => {
                    if cli.json {
                        let obj = json!({
                            "command": "complement",
                            "sequence": seq.values(),
                            "values": c.values(),
                        });
                        println!("{obj}");
                    } else {
                        println!("{}", join(&c.values()));
                    }
                    EXIT_GRAPHIC
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::Indices { sequence } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            match seq.index_profile() {
                Ok(p) => {
                    if cli.json {
                        let obj = json!({
                            "command": "indices",
                            "sequence": seq.values(),
                            "m": p.m,
                            "w": p.w,
                            "strong": p.strong,
                            "right_strong": p.right_strong,
                            "weak": p.weak,
                            "right_weak": p.right_weak,
                        });
                        println!("{obj}");
                    } else {
                        let w = p.w.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
                        println!(
                            "m={} w={} strong={} right_strong={} weak={} right_weak={}",
                            p.m,
                            w,
                            join_csv(&p.strong),
                            join_csv(&p.right_strong),
                            join_csv(&p.weak),
                            join_csv(&p.right_weak),
                        );
                    }
                    EXIT_GRAPHIC
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::Ferrers {
            sequence,
            corrected,
        } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            match build_ferrers(&seq, corrected) {
                Ok(d) => {
                    let rendered = render_ferrers(&d);
                    if cli.json {
                        let obj = json!({
                            "command": "ferrers",
                            "sequence": seq.values(),
                            "corrected": corrected,
                            "rows": rendered.lines().collect::<Vec<_>>(),
                        });
                        println!("{obj}");
                    } else {
                        println!("{rendered}");
                    }
                    EXIT_GRAPHIC
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::QuasiPerfect { n } => match quasi_perfect_pair(n) {
            Ok((a, b)) => {
                if cli.json {
                    let obj = json!({
                        "command": "quasi-perfect",
                        "n": n,
                        "type1": a.values(),
                        "type2": b.values(),
                    });
                    println!("{obj}");
                } else {
                    println!("{}", join(&a.values()));
                    println!("{}", join(&b.values()));
                }
                EXIT_GRAPHIC
            }
            Err(e) => usage_error(&e),
        },
        Command::Oracle { sequence, count } => {
            let seq = match parse_sequence_arg(&sequence) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            match oracle::brute_force_enumerate(&seq) {
                Ok(graphs) => {
                    if cli.json {
                        let mut obj = json!({
                            "command": "oracle",
                            "sequence": seq.values(),
                            "count": graphs.len(),
                        });
                        if !count {
                            obj["graphs"] = Value::Array(graphs.iter().map(edges_json).collect());
                        }
                        println!("{obj}");
                    } else if count {
                        println!("{}", graphs.len());
                    } else {
                        for g in &graphs {
                            println!("{}", g.edge_line());
                        }
                    }
                    if graphs.is_empty() {
                        EXIT_NOT_GRAPHIC
                    } else {
                        EXIT_GRAPHIC
                    }
                }
                Err(e) => usage_error(&e),
            }
        }
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_csv(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
