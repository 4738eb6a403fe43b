//! Command-line surface: single-word invariant and classification queries,
//! linking-pattern export, tree plumbings, index reduction, subspace search,
//! the census driver, and the reference regression suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use posbraid::braid::{parse_braid, reduce_index_lemma5_outcome, BraidWord, Lemma5Outcome};
use posbraid::census::{
    census_csv, census_json, defect_by_index, run_census, verify_paper, CensusParams,
};
use posbraid::classify::classify_knot;
use posbraid::minors::{defect_certificate, search_alexander_trivial};
use posbraid::pattern::{brick_diagram, linking_pattern};
use posbraid::seifert::{invariants, seifert_matrix};
use posbraid::trees::{classify_tree_knot, parse_tree, tree_invariants};
use posbraid::Error;

#[derive(Parser)]
#[command(
    name = "posbraid",
    about = "Exact invariants and topological 4-genus classification for positive braid links",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Genus, signature, Alexander polynomial and 4-genus data of a word.
    Invariants {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Topological 4-genus classification of a positive braid knot.
    Classify {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Genus-defect certificate search for a word.
    Minors {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Linking pattern of a word as an edge list or graph description.
    Pattern {
        braid: String,
        /// Emit `id column rank` vertex lines before the edges.
        #[arg(long)]
        graph_file: bool,
    },
    /// Invariants and classification of a Hopf plumbing along a plane tree.
    Tree {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Two-column index reduction attempt.
    Reduce {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Search for a rank-2 Alexander-trivial subspace of the Seifert form.
    SearchTrivial {
        braid: String,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate and classify canonical words up to the given bounds.
    Census {
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 10)]
        crossings: usize,
        /// Keep knots only.
        #[arg(long)]
        knots: bool,
        /// Keep prime closures only.
        #[arg(long)]
        prime: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reference regression suite; nonzero exit on any failure.
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn word_arg(text: &str) -> Result<BraidWord, Error> {
    parse_braid(text)
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Invariants { braid, json } => {
            let w = word_arg(&braid)?;
            let mut rec = invariants(&w)?;
            if w.is_knot() {
                let class = classify_knot(&w)?;
                rec.g4_top = Some(class.g4);
                rec.g4_smooth = Some(rec.genus);
                rec.certificate = class.certificate.as_ref().map(|c| c.reference());
            }
            if json {
                println!("{}", rec.to_json());
            } else {
                println!("word:          {}", rec.word);
                println!("strands:       {}", rec.strands);
                println!("crossings:     {}", rec.crossings);
                println!("first Betti:   {}", rec.first_betti);
                println!("components:    {}", rec.components);
                println!("prime:         {}", rec.prime);
                println!("genus:         {}", rec.genus);
                println!("signature:     {} (|sigma| = {})", rec.signature, rec.abs_signature);
                println!("Alexander:     {}", rec.alexander);
                match rec.g4_top {
                    Some(g4) => println!("g4 (top):      {}", format_g4(&g4)),
                    None => println!("g4 (top):      n/a (link)"),
                }
                if let Some(g) = rec.g4_smooth {
                    println!("g4 (smooth):   {g}");
                }
                if let Some(c) = rec.certificate {
                    println!("certificate:   {c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { braid, json } => {
            let w = word_arg(&braid)?;
            let class = classify_knot(&w)?;
            if json {
                println!("{}", class.to_json());
            } else {
                println!("genus:       {}", class.genus);
                println!("|sigma|:     {}", class.abs_sigma);
                println!("g4 (top):    {}", format_g4(&class.g4));
                println!("method:      {}", class.method.as_str());
                if let Some(t) = &class.torus_maximal {
                    println!("torus:       {t}");
                }
                match &class.certificate {
                    Some(c) => {
                        println!("certificate: {} (verifies: {})", c.reference(), c.verify())
                    }
                    None => println!("certificate: none"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Minors { braid, json } => {
            let w = word_arg(&braid)?;
            let cert = defect_certificate(&w)?;
            match cert {
                Some(cert) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&cert).unwrap());
                    } else {
                        println!("certificate: {}", cert.reference());
                        println!("verifies:    {}", cert.verify());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if json {
                        println!("null");
                    } else {
                        println!("no genus-defect certificate found");
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Cmd::Pattern { braid, graph_file } => {
            let w = word_arg(&braid)?;
            let lp = linking_pattern(&brick_diagram(&w));
            if graph_file {
                print!("{}", lp.graph_file_text());
            } else {
                print!("{}", lp.edge_list_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tree { expr, json } => {
            let tree = parse_tree(&expr)?;
            let rec = tree_invariants(&tree);
            let class = if rec.components == 1 { Some(classify_tree_knot(&tree)?) } else { None };
            if json {
                let mut v = rec.to_json();
                if let Some(c) = &class {
                    v["classification"] = c.to_json();
                }
                println!("{v}");
            } else {
                println!("tree:        {}", rec.tree);
                println!("vertices:    {}", rec.vertices);
                println!("components:  {}", rec.components);
                println!("genus:       {}", rec.genus);
                println!("signature:   {} (|sigma| = {})", rec.signature, rec.abs_signature);
                println!("Alexander:   {}", rec.alexander);
                match class {
                    Some(c) => {
                        println!("g4 (top):    {}", format_g4(&c.g4));
                        println!("method:      {}", c.method.as_str());
                        if let Some(cert) = &c.certificate {
                            println!("certificate: {}", cert.reference());
                        }
                    }
                    None => println!("g4 (top):    n/a (link)"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { braid, json } => {
            let w = word_arg(&braid)?;
            let outcome = reduce_index_lemma5_outcome(&w);
            match outcome {
                Lemma5Outcome::Reduced(r) => {
                    if json {
                        println!("{}", json!({ "reduced": r.to_string() }));
                    } else {
                        println!("reduced: {r}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Lemma5Outcome::NotApplicable => {
                    if json {
                        println!("{}", json!({ "reduced": null }));
                    } else {
                        println!("not reducible by the two-column merge");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Lemma5Outcome::PostCheckFailed { candidate } => {
                    eprintln!(
                        "merge candidate {candidate} failed the invariant post-check; \
                         this indicates a construction bug"
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::SearchTrivial { braid, bound, json } => {
            let w = word_arg(&braid)?;
            let sd = seifert_matrix(&w)?;
            let found = search_alexander_trivial(&sd.matrix, bound)?;
            match found {
                Some(b) => {
                    let cols: Vec<Vec<String>> = (0..2)
                        .map(|j| (0..b.rows()).map(|i| b.get(i, j).to_string()).collect())
                        .collect();
                    if json {
                        println!("{}", json!({ "basis": cols }));
                    } else {
                        println!("Alexander-trivial rank-2 subspace found:");
                        println!("  v = ({})", cols[0].join(", "));
                        println!("  w = ({})", cols[1].join(", "));
                    }
                }
                None => {
                    if json {
                        println!("{}", json!({ "basis": null }));
                    } else {
                        println!("no rank-2 Alexander-trivial subspace within bound {bound}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census { strands, crossings, knots, prime, format, out } => {
            let params = CensusParams {
                max_strands: strands,
                max_crossings: crossings,
                knots_only: knots,
                prime_only: prime,
            };
            let records = run_census(&params)?;
            let body = match format {
                Format::Csv => census_csv(&records),
                Format::Json => format!("{}\n", census_json(&records)),
            };
            match out {
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| Error::Unsupported(format!("cannot write {path:?}: {e}")))?;
                    f.write_all(body.as_bytes())
                        .map_err(|e| Error::Unsupported(format!("cannot write {path:?}: {e}")))?;
                    eprintln!("{} records written to {}", records.len(), path.display());
                }
                None => print!("{body}"),
            }
            for (n, (count, lo, hi)) in defect_by_index(&records) {
                eprintln!("defect stats, {n} strands: {count} words, defect range {lo}..{hi}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyPaper => {
            let report = verify_paper();
            print!("{report}");
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn format_g4(g4: &posbraid::seifert::G4) -> String {
    match g4 {
        posbraid::seifert::G4::Exact { exact } => exact.to_string(),
        posbraid::seifert::G4::Bounds { lo, hi } => format!("[{lo}, {hi}]"),
    }
}
