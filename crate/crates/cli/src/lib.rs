//! The `ringgenus` command line: ring validation, commuting-graph analysis,
//! genus predictions, the witness catalog and the genus oracle.
//!
//! Exit status is 0 on success, 1 when a verification does not match, and 2
//! for usage or input errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ringgenus_core::catalog::{
    builtin_entries, find_entry, search_witnesses, verify_all, HypothesisCheck,
};
use ringgenus_core::cgraph::{
    commuting_graph_to_dot, compute_genus, embedding_count, parse_adjacency_list, Graph,
    DEFAULT_ORACLE_BUDGET,
};
use ringgenus_core::finring::{spec_tables, validate_tables, DEFAULT_ENUMERATION_BUDGET};
use ringgenus_core::{
    clique_decomposition, commuting_graph, euler_lower_bound, genus_complete, genus_oracle,
    predict, CaseId, Limits, RingSpec, RingTable, TheoremCase,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ringgenus",
    version,
    about = "Commuting graphs of finite rings and their genus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the ring axioms for a ring file.
    Validate { ringfile: PathBuf },
    /// Commuting graph, clique decomposition, genus and classification.
    Analyze {
        ringfile: PathBuf,
        /// Write the commuting graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write the analysis as JSON.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Rotation-system budget for non-clique components.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u128,
        /// Check the result against a theorem case.
        #[command(flatten)]
        case: OptionalCase,
    },
    /// Predicted decompositions and genera for a theorem case.
    Predict {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        json: bool,
    },
    /// Built-in witness rings.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Exact genus of a graph file by rotation-system search.
    Oracle {
        graphfile: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u128,
    },
    /// Euler lower bound on the genus of a graph file.
    Bound { graphfile: PathBuf },
    /// Enumerate rings of an order and center size and check them against
    /// the theorem cases of that shape.
    Search {
        #[arg(long)]
        order: u64,
        #[arg(long = "center-size")]
        center_size: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Verify {
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write an entry's ring as a table-form ring file.
    Export {
        name: String,
        path: PathBuf,
    },
}

#[derive(Args, Debug)]
struct CaseArgs {
    /// Case id such as T21a or T25c.
    #[arg(long = "case")]
    id: String,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    /// Comma-separated l-vector.
    #[arg(long, value_delimiter = ',')]
    l: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct OptionalCase {
    #[arg(long = "case", requires = "p")]
    id: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    l: Option<Vec<u64>>,
}

/// An error that ends the run with the given status.
struct Failure(i32, String);

impl Failure {
    fn input(e: impl Display) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn theorem_case(
    id: &str,
    p: u64,
    q: Option<u64>,
    t: Option<u64>,
    l: Option<Vec<u64>>,
) -> Result<TheoremCase, Failure> {
    let id: CaseId = id.parse().map_err(Failure::input)?;
    TheoremCase::new(id, p, q, t, l).map_err(Failure::input)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_ring(path: &Path) -> Result<RingTable, Failure> {
    let spec = RingSpec::from_json(&read(path)?).map_err(Failure::input)?;
    ringgenus_core::build_from_spec(&spec, &Limits::default()).map_err(Failure::input)
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_adjacency_list(&read(path)?).map_err(Failure::input)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Validate { ringfile } => validate(&ringfile, out),
        Command::Analyze {
            ringfile,
            dot,
            report,
            budget,
            case,
        } => {
            let case = match case.id {
                Some(id) => Some(theorem_case(
                    &id,
                    case.p.unwrap_or(0),
                    case.q,
                    case.t,
                    case.l,
                )?),
                None => None,
            };
            analyze(
                &ringfile,
                dot.as_deref(),
                report.as_deref(),
                budget,
                case,
                out,
            )
        }
        Command::Predict { case, json } => {
            let c = theorem_case(&case.id, case.p, case.q, case.t, case.l)?;
            predict_cmd(&c, json, out)
        }
        Command::Catalog { action } => catalog(action, out),
        Command::Oracle { graphfile, budget } => {
            let g = load_graph(&graphfile)?;
            let r = genus_oracle(&g, budget).map_err(Failure::input)?;
            writeln!(
                out,
                "vertices: {}, edges: {}",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(out, "rotation systems: {}", embedding_count(&g)).unwrap();
            writeln!(out, "genus: {} ({})", r.value, r.classification).unwrap();
            Ok(EXIT_OK)
        }
        Command::Bound { graphfile } => {
            let g = load_graph(&graphfile)?;
            writeln!(
                out,
                "vertices: {}, edges: {}",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(out, "genus >= {}", euler_lower_bound(&g)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Search {
            order,
            center_size,
            budget,
            json: as_json,
        } => {
            let s = search_witnesses(order, center_size, budget).map_err(Failure::input)?;
            if as_json {
                writeln!(out, "{}", s.to_json()).unwrap();
            } else {
                writeln!(out, "order {order}, |Z| = {center_size}").unwrap();
                let cases = if s.cases.is_empty() {
                    "none".to_string()
                } else {
                    s.cases.join(", ")
                };
                writeln!(out, "theorem cases: {cases}").unwrap();
                for v in &s.vacuous_cases {
                    writeln!(out, "  {v}: no feasible outcome").unwrap();
                }
                for g in &s.groups {
                    match (&g.stats, &g.skipped) {
                        (Some(st), _) => writeln!(
                            out,
                            "  {}: {} well-defined, {} rings, {} kept",
                            g.group, st.well_defined, st.associative, st.emitted
                        )
                        .unwrap(),
                        (None, Some(why)) => {
                            writeln!(out, "  {}: skipped, {why}", g.group).unwrap()
                        }
                        (None, None) => {}
                    }
                }
                for w in &s.witnesses {
                    let verdict = match (w.checked_cases.is_empty(), w.matched.first()) {
                        (true, _) => "no case applies".to_string(),
                        (false, Some((c, o))) => format!("matches {c} {o}"),
                        (false, None) => "MISMATCH".to_string(),
                    };
                    writeln!(
                        out,
                        "  {}: {} genus {}, {verdict}",
                        w.name, w.decomposition, w.genus.value
                    )
                    .unwrap();
                }
                writeln!(out, "{}", s.summary()).unwrap();
            }
            Ok(if s.passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn validate(path: &Path, out: &mut Vec<u8>) -> Outcome {
    let spec = RingSpec::from_json(&read(path)?).map_err(Failure::input)?;
    let limit = Limits::default().max_order;
    let order = spec.additive.order();
    if order > limit {
        return Err(Failure::input(format!(
            "SizeLimitExceeded: ring order {order} exceeds the limit {limit}"
        )));
    }
    let (n, add, mul) = spec_tables(&spec).map_err(Failure::input)?;
    let r = validate_tables(n, &add, &mul);
    writeln!(out, "{}: order {}", spec.name, r.order).unwrap();
    let checks = [
        ("tables", &r.well_formed),
        ("additive group", &r.abelian_group),
        ("associativity", &r.associativity),
        ("left distributivity", &r.left_distributivity),
        ("right distributivity", &r.right_distributivity),
    ];
    for (name, check) in checks {
        let verdict = match check {
            ringgenus_core::finring::AxiomCheck::Passed => "ok".to_string(),
            ringgenus_core::finring::AxiomCheck::Failed { witness } => {
                format!("FAILED at {witness:?}")
            }
            ringgenus_core::finring::AxiomCheck::Skipped => "skipped".to_string(),
        };
        writeln!(out, "  {name}: {verdict}").unwrap();
    }
    if r.is_ring() {
        let unity = r.unity.map_or("none".to_string(), |u| u.to_string());
        writeln!(out, "  unity: {unity}").unwrap();
        writeln!(out, "  center size: {}", r.center_size).unwrap();
        writeln!(out, "  commutative: {}", r.commutative).unwrap();
        writeln!(out, "ring").unwrap();
        Ok(EXIT_OK)
    } else {
        writeln!(out, "not a ring").unwrap();
        Ok(EXIT_MISMATCH)
    }
}

#[derive(Serialize)]
struct AnalysisReport {
    input: String,
    ring: String,
    order: usize,
    center_size: usize,
    has_unity: bool,
    vertex_count: usize,
    edge_count: usize,
    decomposition: ringgenus_core::CliqueDecomposition,
    genus_terms: Vec<GenusTerm>,
    genus: u64,
    method: String,
    classification: String,
    euler_bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem_case: Option<TheoremCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis: Option<HypothesisCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matched: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matched_outcome: Option<String>,
}

#[derive(Serialize)]
struct GenusTerm {
    size: usize,
    multiplicity: usize,
    genus_each: u64,
    genus: u64,
}

fn analyze(
    path: &Path,
    dot: Option<&Path>,
    report: Option<&Path>,
    budget: u128,
    case: Option<TheoremCase>,
    out: &mut Vec<u8>,
) -> Outcome {
    let ring = load_ring(path)?;
    let g = commuting_graph(&ring).map_err(Failure::input)?;
    let d = clique_decomposition(&g);
    let genus = compute_genus(&g, budget);
    let terms: Vec<GenusTerm> = if d.all_cliques() {
        d.terms()
            .map(|(s, m)| {
                let each = genus_complete(s as u64);
                GenusTerm {
                    size: s,
                    multiplicity: m,
                    genus_each: each,
                    genus: each * m as u64,
                }
            })
            .collect()
    } else {
        Vec::new()
    };

    let hypothesis = case.as_ref().map(|c| HypothesisCheck::new(&ring, c));
    let mut matched_outcome = None;
    let matched = match &case {
        Some(c) => {
            let prediction = predict(c).map_err(Failure::input)?;
            matched_outcome = prediction
                .matching(&d, genus.value)
                .map(ToString::to_string);
            Some(
                matched_outcome.is_some()
                    && hypothesis.as_ref().is_some_and(HypothesisCheck::passed),
            )
        }
        None => None,
    };

    writeln!(out, "ring: {} ({})", ring.name(), path.display()).unwrap();
    writeln!(
        out,
        "order: {}, center: {}, unity: {}",
        ring.order(),
        ring.center().len(),
        if ring.unity().is_some() { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(
        out,
        "vertices: {}, edges: {}",
        g.vertex_count(),
        g.edge_count()
    )
    .unwrap();
    let shape = if d.all_cliques() {
        ""
    } else {
        " (not a clique union)"
    };
    writeln!(out, "decomposition: {d}{shape}").unwrap();
    for t in &terms {
        writeln!(
            out,
            "  {} x K{}: genus {} each, {} total",
            t.multiplicity, t.size, t.genus_each, t.genus
        )
        .unwrap();
    }
    let qualifier = if genus.is_exact() { "" } else { ">= " };
    writeln!(
        out,
        "genus: {qualifier}{} ({}), {}",
        genus.value, genus.method, genus.classification
    )
    .unwrap();
    if let (Some(c), Some(h)) = (&case, &hypothesis) {
        writeln!(out, "case: {c}").unwrap();
        for f in h.failures() {
            writeln!(out, "  hypothesis fails: {f}").unwrap();
        }
        match &matched_outcome {
            Some(o) => writeln!(out, "  matches {o}").unwrap(),
            None => writeln!(out, "  no predicted outcome matches").unwrap(),
        }
    }

    if let Some(dot_path) = dot {
        write_file(dot_path, &commuting_graph_to_dot(&g))?;
    }
    if let Some(report_path) = report {
        let doc = AnalysisReport {
            input: path.display().to_string(),
            ring: ring.name().to_string(),
            order: ring.order(),
            center_size: ring.center().len(),
            has_unity: ring.unity().is_some(),
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            decomposition: d.clone(),
            genus_terms: terms,
            genus: genus.value,
            method: genus.method.to_string(),
            classification: genus.classification.to_string(),
            euler_bound: euler_lower_bound(&g),
            theorem_case: case.clone(),
            hypothesis,
            matched,
            matched_outcome,
        };
        write_file(report_path, &(json(&doc) + "\n"))?;
    }
    Ok(if matched == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn predict_cmd(case: &TheoremCase, as_json: bool, out: &mut Vec<u8>) -> Outcome {
    let p = predict(case).map_err(Failure::input)?;
    if as_json {
        writeln!(out, "{}", json(&p)).unwrap();
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "{case}: |R| = {}, |Z| = {}",
        case.ring_order(),
        case.center_size()
    )
    .unwrap();
    for o in &p.outcomes {
        writeln!(out, "  {o}").unwrap();
    }
    let genera: Vec<String> = p.genera().iter().map(u64::to_string).collect();
    writeln!(out, "genera: {{{}}}", genera.join(", ")).unwrap();
    Ok(EXIT_OK)
}

fn catalog(action: CatalogAction, out: &mut Vec<u8>) -> Outcome {
    match action {
        CatalogAction::List => {
            for e in builtin_entries() {
                let case = e
                    .case
                    .as_ref()
                    .map_or("fixture".to_string(), ToString::to_string);
                writeln!(
                    out,
                    "{:<12} {:<16} {} genus {}  {}",
                    e.name, case, e.expected.decomposition, e.expected.genus, e.recipe
                )
                .unwrap();
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Verify {
            name,
            json: as_json,
        } => {
            let entries = match name {
                Some(n) => vec![find_entry(&n)
                    .ok_or_else(|| Failure::input(format!("unknown catalog entry {n:?}")))?],
                None => builtin_entries(),
            };
            let report = verify_all(&entries).map_err(|e| Failure(EXIT_MISMATCH, e.to_string()))?;
            if as_json {
                writeln!(out, "{}", report.to_json()).unwrap();
            } else {
                write!(out, "{}", report.table()).unwrap();
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        CatalogAction::Export { name, path } => {
            let e = find_entry(&name)
                .ok_or_else(|| Failure::input(format!("unknown catalog entry {name:?}")))?;
            let ring = e.recipe.build(&Limits::default()).map_err(Failure::input)?;
            let spec =
                RingSpec::from_table(&ring, e.recipe.additive_group()).map_err(Failure::input)?;
            write_file(&path, &(spec.to_json() + "\n"))?;
            writeln!(
                out,
                "wrote {} ({} elements) to {}",
                name,
                ring.order(),
                path.display()
            )
            .unwrap();
            Ok(EXIT_OK)
        }
    }
}
