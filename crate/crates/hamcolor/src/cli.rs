//! The `hamcolor` subcommands.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hamcolor_core::coloring::{
    certify_coloring, color_from_ordering, lower_bound, sdb_color, verify_coloring,
    ColoringCertificate,
};
use hamcolor_core::detour::{BlockGraphAnalysis, DetourError, DetourTable};
use hamcolor_core::families::{
    family_hc_formula, family_ordering, gen_family, random_block_graph, FamilySpec, LevelSpec,
};
use hamcolor_core::graph::{write_edge_list, Graph};
use hamcolor_core::oracle::{
    brute_detour_table, find_thm2_ordering, greedy_coloring, min_span_for_ordering, DETOUR_LIMIT,
    EXACT_DEFAULT_LIMIT,
};
use serde::Serialize;
use serde_json::Value;

use crate::exact::parallel_exact_hc;
use crate::io::{self, RandomSpec, Sidecar};
use crate::report::{to_json, AnalysisJson, CertificateJson, FamilyJson, OracleJson, VerdictJson};
use crate::search::{round_robin_orderings, round_robin_search};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "hamcolor",
    version,
    about = "Hamiltonian colorings of block graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report (or, for `gen`, the edge list) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for `gen random`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Override the size guard of the exhaustive searches.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    OrderingFile,
    Sdb,
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Hc,
    Detour,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detour center, levels, lower bound and classification.
    Analyze { graph: PathBuf },
    /// Color a block graph and print its certificate.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Vertex ordering for `--method ordering-file`.
        #[arg(long)]
        ordering: Option<PathBuf>,
        /// Family sidecar; defaults to `<graph>.json`.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Check a coloring (JSON array or object with `colors`).
    Verify { graph: PathBuf, colors: PathBuf },
    /// Generate a family graph as an edge list plus a `<out>.json` sidecar.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Exhaustive search: exact hc or the detour table.
    Oracle {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleKind::Hc)]
        kind: OracleKind,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum GenFamily {
    /// K_{1,k}.
    Star { k: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// k copies of K_p sharing one vertex.
    OnePointUnion { p: usize, k: usize },
    /// Blocks K_{p+1}, every cut vertex in k+1 blocks, diameter d.
    Symmetric { p: usize, k: usize, d: usize },
    /// k arms of m cliques K_p at a common vertex.
    ExtendedStar { m: usize, p: usize, k: usize },
    /// Level-wise graph on a central vertex; levels as `k:m`.
    G1 {
        #[arg(required = true, value_parser = parse_level)]
        levels: Vec<LevelSpec>,
    },
    /// Level-wise graph on a central K_{m+1}; levels as `k:m`.
    Gm1 {
        m: usize,
        #[arg(required = true, value_parser = parse_level)]
        levels: Vec<LevelSpec>,
    },
    /// Seeded random block graph (uses --seed).
    Random {
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_clique: usize,
    },
}

fn parse_level(s: &str) -> Result<LevelSpec, String> {
    let (k, m) = s.split_once(':').ok_or("expected k:m")?;
    let k = k.parse().map_err(|_| format!("`{k}` is not a count"))?;
    let m = m.parse().map_err(|_| format!("`{m}` is not a count"))?;
    Ok(LevelSpec::new(k, m))
}

/// What a subcommand produced: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, body)) => match &cli.out {
            Some(path) if !matches!(cli.command, Command::Gen { .. }) => {
                match io::write_file(path, &body) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => failure(&e),
                }
            }
            _ => Outcome {
                code,
                stdout: body,
                stderr: String::new(),
            },
        },
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn render<T: Serialize>(value: &T, format: Format) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Text => {
            let value = serde_json::to_value(value).expect("report types serialize");
            let mut out = String::new();
            match value {
                Value::Object(map) => {
                    for (key, v) in map {
                        out.push_str(&format!("{key}: {v}\n"));
                    }
                }
                other => out.push_str(&format!("{other}\n")),
            }
            out
        }
    }
}

fn execute(cli: &Cli) -> Result<(u8, String), CliError> {
    match &cli.command {
        Command::Analyze { graph } => {
            let g = io::read_graph(graph)?;
            let a = BlockGraphAnalysis::new(&g)?;
            Ok((0, render(&AnalysisJson::new(&g, &a), cli.format)))
        }
        Command::Color {
            graph,
            method,
            ordering,
            spec,
        } => {
            let g = io::read_graph(graph)?;
            let a = BlockGraphAnalysis::new(&g)?;
            let report = color(
                cli,
                graph,
                &g,
                &a,
                *method,
                ordering.as_deref(),
                spec.as_deref(),
            )?;
            Ok((u8::from(!report.valid), render(&report, cli.format)))
        }
        Command::Verify { graph, colors } => {
            let g = io::read_graph(graph)?;
            let colors = io::read_colors(colors)?;
            let (table, bound) = match BlockGraphAnalysis::new(&g) {
                Ok(a) => (a.table, Some(lower_bound(&a.profile))),
                Err(DetourError::NotBlockGraph) => (
                    brute_detour_table(&g, cli.max_n.unwrap_or(DETOUR_LIMIT))?,
                    None,
                ),
                Err(e) => return Err(e.into()),
            };
            let verdict =
                verify_coloring(&table, &colors).map_err(|e| CliError::Input(e.to_string()))?;
            let report = VerdictJson::new(&verdict, bound);
            Ok((u8::from(!report.valid), render(&report, cli.format)))
        }
        Command::Gen { family } => generate(cli, family),
        Command::Oracle { graph, kind } => {
            let g = io::read_graph(graph)?;
            let analysis = BlockGraphAnalysis::new(&g).ok();
            let report = match kind {
                OracleKind::Hc => {
                    let max_n = cli.max_n.unwrap_or(EXACT_DEFAULT_LIMIT);
                    hamcolor_core::oracle::exact_guard(g.order(), max_n)?;
                    let table = match &analysis {
                        Some(a) => a.table.clone(),
                        None => brute_detour_table(&g, max_n.max(DETOUR_LIMIT))?,
                    };
                    let r = parallel_exact_hc(&table, max_n)?;
                    OracleJson::Hc {
                        n: g.order(),
                        value: r.value,
                        witness: r.witness,
                        explored: r.explored,
                        lower_bound: analysis.as_ref().map(|a| lower_bound(&a.profile)),
                        max_n,
                    }
                }
                OracleKind::Detour => {
                    let max_n = cli.max_n.unwrap_or(DETOUR_LIMIT);
                    let table = brute_detour_table(&g, max_n)?;
                    OracleJson::Detour {
                        n: g.order(),
                        table: rows(&table),
                        block_path_agrees: analysis.as_ref().map(|a| a.table == table),
                        max_n,
                    }
                }
            };
            Ok((0, render(&report, cli.format)))
        }
    }
}

fn rows(table: &DetourTable) -> Vec<Vec<usize>> {
    (0..table.order()).map(|u| table.row(u).to_vec()).collect()
}

/// The family spec recorded for `graph`, if it generates exactly `g`.
fn matching_spec(
    graph_path: &Path,
    spec_path: Option<&Path>,
    g: &Graph,
) -> Result<Option<FamilySpec>, CliError> {
    let path = spec_path.map_or_else(|| io::sidecar_path(graph_path), Path::to_path_buf);
    if spec_path.is_none() && !path.exists() {
        return Ok(None);
    }
    let Some(spec) = io::read_sidecar(&path)?.spec else {
        return Ok(None);
    };
    let generated = gen_family(&spec).map_err(|e| CliError::input(path.display(), e))?;
    Ok((generated == *g).then_some(spec))
}

fn family_certificate(
    a: &BlockGraphAnalysis,
    spec: &FamilySpec,
) -> Result<CertificateJson, CliError> {
    let ordering = family_ordering(spec).map_err(|e| CliError::Input(e.to_string()))?;
    let formula = family_hc_formula(spec).map_err(|e| CliError::Input(e.to_string()))?;
    let cert = color_from_ordering(&a.profile, &a.table, &ordering)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let bound = lower_bound(&a.profile);
    let agreement = cert.valid && cert.span as i64 == formula.value && formula.value == bound;
    let mut report = CertificateJson::new(&cert, "family");
    report.family = Some(FamilyJson {
        spec: spec.clone(),
        formula_hc: formula.value,
        caveats: formula.caveats,
        agreement,
    });
    Ok(report)
}

fn certify(a: &BlockGraphAnalysis, ordering: &hamcolor_core::Ordering) -> ColoringCertificate {
    color_from_ordering(&a.profile, &a.table, ordering).expect("ordering covers the graph")
}

fn color(
    cli: &Cli,
    graph_path: &Path,
    g: &Graph,
    a: &BlockGraphAnalysis,
    method: Method,
    ordering_path: Option<&Path>,
    spec_path: Option<&Path>,
) -> Result<CertificateJson, CliError> {
    match method {
        Method::OrderingFile => {
            let path =
                ordering_path.ok_or_else(|| CliError::Input("--ordering is required".into()))?;
            let ordering = io::read_ordering(path, g.order())?;
            Ok(CertificateJson::new(
                &certify(a, &ordering),
                "ordering_file",
            ))
        }
        Method::Sdb => {
            let cert =
                sdb_color(&a.profile, &a.table).map_err(|e| CliError::Failed(e.to_string()))?;
            Ok(CertificateJson::new(&cert, "sdb"))
        }
        Method::Family => {
            let spec = matching_spec(graph_path, spec_path, g)?
                .ok_or_else(|| CliError::Input("no family spec generating this graph".into()))?;
            family_certificate(a, &spec)
        }
        Method::Auto => {
            let mut fallback = None;
            if let Some(spec) = matching_spec(graph_path, spec_path, g)? {
                let report = family_certificate(a, &spec)?;
                if report.optimal {
                    return Ok(report);
                }
                fallback = report.valid.then_some(report);
            }
            if let Ok(cert) = sdb_color(&a.profile, &a.table) {
                return Ok(CertificateJson::new(&cert, "sdb"));
            }
            if let Some(ord) = round_robin_search(&a.profile, &a.table) {
                return Ok(CertificateJson::new(&certify(a, &ord), "round_robin"));
            }
            let max_n = cli.max_n.unwrap_or(EXACT_DEFAULT_LIMIT);
            if let Ok(found) = find_thm2_ordering(&a.profile, &a.table, max_n) {
                if let Some(ord) = found.witness {
                    return Ok(CertificateJson::new(&certify(a, &ord), "exhaustive_scan"));
                }
            }
            // no ordering meets the bound: best greedy coloring, bound only
            let best = round_robin_orderings(&a.profile)
                .into_iter()
                .min_by_key(|o| min_span_for_ordering(&a.table, o))
                .expect("at least one candidate");
            let colors: Vec<i64> = greedy_coloring(&a.table, &best)
                .iter()
                .map(|&c| c as i64)
                .collect();
            let cert = certify_coloring(&a.profile, &a.table, &colors).expect("length matches");
            let report = CertificateJson::new(&cert, "bound_only");
            Ok(match fallback {
                Some(f) if f.span <= report.span => f,
                _ => report,
            })
        }
    }
}

fn generate(cli: &Cli, family: &GenFamily) -> Result<(u8, String), CliError> {
    let spec = match family.clone() {
        GenFamily::Star { k } => FamilySpec::Star { k },
        GenFamily::Path { n } => FamilySpec::Path { n },
        GenFamily::OnePointUnion { p, k } => FamilySpec::OnePointUnion { p, k },
        GenFamily::Symmetric { p, k, d } => FamilySpec::Symmetric { p, k, d },
        GenFamily::ExtendedStar { m, p, k } => FamilySpec::ExtendedStarOfBlocks { m, p, k },
        GenFamily::G1 { levels } => FamilySpec::LevelWiseG1 { levels },
        GenFamily::Gm1 { m, levels } => FamilySpec::LevelWiseGm1 { m, levels },
        GenFamily::Random { n, max_clique } => {
            if n < 2 || max_clique < 2 {
                return Err(CliError::Input(
                    "random graphs need n >= 2 and --max-clique >= 2".into(),
                ));
            }
            let g = random_block_graph(cli.seed, n, max_clique);
            let random = RandomSpec {
                seed: cli.seed,
                n_target: n,
                max_clique,
            };
            let sidecar = Sidecar {
                spec: None,
                random: Some(random),
                n: g.order(),
                formula_hc: None,
            };
            return emit(cli, &g, &sidecar);
        }
    };
    let g = gen_family(&spec).map_err(|e| CliError::Input(e.to_string()))?;
    let formula = family_hc_formula(&spec).map_err(|e| CliError::Input(e.to_string()))?;
    let sidecar = Sidecar {
        spec: Some(spec),
        random: None,
        n: g.order(),
        formula_hc: Some(formula.value),
    };
    emit(cli, &g, &sidecar)
}

/// With `--out`, writes the edge list and `<out>.json` and prints the
/// sidecar; otherwise prints the edge list.
fn emit(cli: &Cli, g: &Graph, sidecar: &Sidecar) -> Result<(u8, String), CliError> {
    let edges = write_edge_list(g);
    match &cli.out {
        Some(path) => {
            io::write_file(path, &edges)?;
            let json = to_json(sidecar);
            io::write_file(&io::sidecar_path(path), &json)?;
            Ok((0, render(sidecar, cli.format)))
        }
        None => Ok((0, edges)),
    }
}
