//! Command-line front-end: graph and set-system ingestion, exact
//! reliability reports with stability certificates, disc-stability scans,
//! pair-compatibility campaigns, hypercube verdicts, and oracle
//! cross-checks. Reports print as JSON (machines) or text (humans); exit
//! codes are 0 for pass/quasi-stable, 1 for falsified/unstable, 2 for
//! usage or input errors, 3 for inconclusive sampling outcomes.

mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use relzero_core::amicable::{conjecture_scan, cut_pair_context, is_amicable};
use relzero_core::cube::{cube_falsify, PolyCube};
use relzero_core::error::Error as CoreError;
use relzero_core::graph::{enumerate_connected_multigraphs, Multigraph};
use relzero_core::matroid::{
    class_membership, fvector_inequality_sums, hj_setsystem, matroid_check, SetSystem,
};
use relzero_core::poly::{parse_rat, ExactPoly};
use relzero_core::realroot::schur_quasi_stable;
use relzero_core::reliability::{brute_force_reliability_capped, monte_carlo, RelEngine};

use report::*;

#[derive(Parser)]
#[command(
    name = "relzero",
    version,
    about = "Exact reliability polynomials, stability certificates, and f-vector audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Graph,
    SetSystem,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reliability polynomials of a network with a stability verdict.
    Compute {
        /// Graph file (`v n` header, `e u v mult` lines)
        graph: PathBuf,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Certify disc stability of a graph's or set system's H-polynomial.
    CheckBc {
        /// Graph or set-system file (sniffed from the header unless forced)
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<InputKind>,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan vertex pairs for compatibility-square falsifications.
    ScanAmicable {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 3)]
        mult_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check one graph instead of the enumeration
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Vertex pair `v,w` (requires --graph)
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan enumerated multigraphs for disc-stability failures.
    ScanBc {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 3)]
        mult_max: usize,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Report the f-vector transforms and class membership of a set system.
    Matroid {
        /// Set-system file (`ground m` header, `face i j ...` lines)
        input: PathBuf,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Test the interpolatory condition of a polynomial hypercube.
    Cube {
        /// JSON file: {"dim": k, "entries": {"01...": "[coeffs]", ...}}
        input: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the engine against exhaustive enumeration and Monte Carlo.
    Oracle {
        graph: PathBuf,
        /// Deletion probability for the Monte Carlo estimate, e.g. 1/2
        #[arg(long)]
        q: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge cap for the exhaustive oracle
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        #[arg(long, visible_alias = "report", value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CoreError::Inconclusive(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, CoreError> {
    std::fs::read_to_string(path)
        .map_err(|e| CoreError::domain(format!("cannot read {}: {e}", path.display())))
}

fn emit<T: serde::Serialize>(format: Format, report: &T, text: String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(report).expect("report serializes")
        ),
        Format::Text => print!("{text}"),
    }
}

fn run(command: Command) -> Result<u8, CoreError> {
    match command {
        Command::Compute { graph, format } => cmd_compute(&graph, format),
        Command::CheckBc { input, kind, format } => cmd_check_bc(&input, kind, format),
        Command::ScanAmicable {
            n_max,
            m_max,
            mult_max,
            samples,
            seed,
            graph,
            pair,
            format,
        } => cmd_scan_amicable(n_max, m_max, mult_max, samples, seed, graph, pair, format),
        Command::ScanBc {
            n_max,
            m_max,
            mult_max,
            format,
        } => cmd_scan_bc(n_max, m_max, mult_max, format),
        Command::Matroid { input, format } => cmd_matroid(&input, format),
        Command::Cube {
            input,
            samples,
            seed,
            format,
        } => cmd_cube(&input, samples, seed, format),
        Command::Oracle {
            graph,
            q,
            trials,
            seed,
            m_max,
            format,
        } => cmd_oracle(&graph, q, trials, seed, m_max, format),
    }
}

fn cmd_compute(path: &Path, format: Format) -> Result<u8, CoreError> {
    let g = Multigraph::parse(&read_file(path)?)?;
    let mut engine = RelEngine::new();
    if !g.is_connected() {
        let r = engine.reliability(&g); // identically zero
        let report = ComputeReport {
            command: "compute".into(),
            input: path.display().to_string(),
            connected: false,
            n: g.vertex_count(),
            m: g.edge_count(),
            d: None,
            r: poly_repr(&r),
            h: None,
            j: None,
            j_even: None,
            j_odd: None,
            stability: StabilityRepr {
                status: "quasi_stable".into(),
                method: "exact_hermite_biehler".into(),
                witness: Some("disconnected input: reliability is identically zero".into()),
            },
        };
        let text = format!(
            "graph {} is disconnected: R = [] (identically zero)\n",
            path.display()
        );
        emit(format, &report, text);
        return Ok(0);
    }
    let full = engine.report(&g)?;
    let verdict = schur_quasi_stable(&full.h, full.d)?;
    let split = full.j_split();
    let report = ComputeReport {
        command: "compute".into(),
        input: path.display().to_string(),
        connected: true,
        n: full.n,
        m: full.m,
        d: Some(full.d),
        r: poly_repr(&full.r),
        h: Some(poly_repr(&full.h)),
        j: Some(poly_repr(&full.j)),
        j_even: Some(poly_repr(&split.even)),
        j_odd: Some(poly_repr(&split.odd)),
        stability: StabilityRepr::from(&verdict),
    };
    let text = format!(
        "graph: {} (n = {}, m = {}, d = {})\nR = {}\nH = {}\nJ = {}\nstability: {} ({})\n",
        path.display(),
        full.n,
        full.m,
        full.d,
        full.r,
        full.h,
        full.j,
        report.stability.status,
        report.stability.method,
    );
    emit(format, &report, text);
    Ok(if verdict.is_quasi_stable() { 0 } else { 1 })
}

fn sniff_kind(text: &str) -> InputKind {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("ground") {
            return InputKind::SetSystem;
        }
        break;
    }
    InputKind::Graph
}

fn cmd_check_bc(path: &Path, kind: Option<InputKind>, format: Format) -> Result<u8, CoreError> {
    let text = read_file(path)?;
    let kind = kind.unwrap_or_else(|| sniff_kind(&text));
    let (h, d, kind_name) = match kind {
        InputKind::Graph => {
            let g = Multigraph::parse(&text)?;
            if !g.is_connected() {
                return Err(CoreError::domain("stability check needs a connected graph"));
            }
            let h = RelEngine::new().h(&g)?;
            let d = g.cycle_rank()?;
            (h, d, "graph")
        }
        InputKind::SetSystem => {
            let s = SetSystem::parse(&text)?;
            let (h, _, t) = hj_setsystem(&s)?;
            (h, t, "set-system")
        }
    };
    let verdict = schur_quasi_stable(&h, d)?;
    let report = CheckBcReport {
        command: "check-bc".into(),
        input: path.display().to_string(),
        kind: kind_name.into(),
        degree_bound: d,
        h: poly_repr(&h),
        stability: StabilityRepr::from(&verdict),
    };
    let text_out = format!(
        "input: {} ({})\nH = {}\nstability: {}{}\n",
        path.display(),
        kind_name,
        h,
        report.stability.status,
        report
            .stability
            .witness
            .as_deref()
            .map(|w| format!(" — {w}"))
            .unwrap_or_default(),
    );
    emit(format, &report, text_out);
    Ok(if verdict.is_quasi_stable() { 0 } else { 1 })
}

fn parse_pair(text: &str) -> Result<(usize, usize), CoreError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CoreError::domain("pair must look like v,w"))?;
    let v = a.trim().parse().map_err(|_| CoreError::domain("bad pair vertex"))?;
    let w = b.trim().parse().map_err(|_| CoreError::domain("bad pair vertex"))?;
    Ok((v, w))
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan_amicable(
    n_max: usize,
    m_max: usize,
    mult_max: usize,
    samples: usize,
    seed: u64,
    graph: Option<PathBuf>,
    pair: Option<String>,
    format: Format,
) -> Result<u8, CoreError> {
    let mut config = ScanConfigRepr {
        n_max,
        m_max,
        mult_max,
        samples,
        seed,
        graph: None,
        pair: None,
    };
    let scan = if let Some(path) = graph {
        let g = Multigraph::parse(&read_file(&path)?)?;
        config.graph = Some(path.display().to_string());
        if let Some(pair_text) = pair {
            let (v, w) = parse_pair(&pair_text)?;
            config.pair = Some([v, w]);
            // single-pair mode: run the check directly
            let mut engine = RelEngine::new();
            let ctx = cut_pair_context(&mut engine, &g, v, w)?;
            let verdict = is_amicable(&ctx, samples, seed);
            let mut report = relzero_core::amicable::ScanReport {
                graphs: 1,
                pairs: 1,
                exact_decisions: usize::from(verdict.exact),
                sampled_decisions: usize::from(!verdict.exact),
                ..Default::default()
            };
            if verdict.falsified() {
                report.falsified.push(relzero_core::amicable::ScanHit {
                    graph: g,
                    pair: (v, w),
                    verdict,
                });
            }
            report
        } else {
            conjecture_scan(std::iter::once(g), samples, seed, true)
        }
    } else {
        let graphs = enumerate_connected_multigraphs(n_max, m_max, mult_max, true)?;
        conjecture_scan(graphs, samples, seed, true)
    };
    let report = ScanAmicableReport {
        command: "scan-amicable".into(),
        config,
        graphs: scan.graphs,
        pairs: scan.pairs,
        exact_decisions: scan.exact_decisions,
        sampled_decisions: scan.sampled_decisions,
        falsified: scan
            .falsified
            .iter()
            .map(|h| FalsifiedPairRepr {
                graph: h.graph.to_string(),
                pair: [h.pair.0, h.pair.1],
                verdict: CubeVerdictRepr::from(&h.verdict),
            })
            .collect(),
        consequence_failures: scan
            .consequence_failures
            .iter()
            .map(|(g, p, why)| format!("{g}pair ({}, {}): {why}", p.0, p.1))
            .collect(),
    };
    let ok = scan.clean();
    let text = format!(
        "scanned {} graphs, {} pairs ({} exact, {} sampled): {} falsified, {} consequence failures\n",
        scan.graphs,
        scan.pairs,
        scan.exact_decisions,
        scan.sampled_decisions,
        scan.falsified.len(),
        scan.consequence_failures.len(),
    );
    emit(format, &report, text);
    Ok(if ok { 0 } else { 1 })
}

fn cmd_scan_bc(
    n_max: usize,
    m_max: usize,
    mult_max: usize,
    format: Format,
) -> Result<u8, CoreError> {
    let graphs = enumerate_connected_multigraphs(n_max, m_max, mult_max, true)?;
    let mut engine = RelEngine::new();
    let mut unstable = Vec::new();
    let mut instances = 0usize;
    for g in &graphs {
        if g.vertex_count() < 2 {
            continue;
        }
        instances += 1;
        let h = engine.h(g)?;
        let d = g.cycle_rank()?;
        let verdict = schur_quasi_stable(&h, d)?;
        if !verdict.is_quasi_stable() {
            unstable.push(UnstableInstanceRepr {
                graph: g.to_string(),
                witness: verdict.witness,
            });
        }
    }
    let ok = unstable.is_empty();
    let report = ScanBcReport {
        command: "scan-bc".into(),
        config: ScanConfigRepr {
            n_max,
            m_max,
            mult_max,
            samples: 0,
            seed: 0,
            graph: None,
            pair: None,
        },
        instances,
        unstable,
    };
    let text = format!(
        "certified {} multigraphs: {} unstable\n",
        instances,
        report.unstable.len()
    );
    emit(format, &report, text);
    Ok(if ok { 0 } else { 1 })
}

fn cmd_matroid(path: &Path, format: Format) -> Result<u8, CoreError> {
    let s = SetSystem::parse(&read_file(path)?)?;
    let f = s.f_vector_rat()?;
    let d = f.len() - 1;
    let (t, ftilde) = relzero_core::poly::ftilde_from_f(&f)?;
    let (h, j, _) = hj_setsystem(&s)?;
    let classes = class_membership(&s)?;
    let sums = fvector_inequality_sums(&f, d);
    let all_nonnegative = sums.iter().all(|v| *v >= relzero_core::poly::rat(0));
    let structure = matroid_check(&s);
    let in_bc_stable = classes.in_bc.is_quasi_stable();
    let report = MatroidReport {
        command: "matroid".into(),
        input: path.display().to_string(),
        ground: s.ground(),
        face_count: s.face_count(),
        d,
        t,
        f: f.iter().map(rat_repr).collect(),
        ftilde: ftilde.iter().map(rat_repr).collect(),
        h: poly_repr(&h),
        j: poly_repr(&j),
        classes: ClassesRepr {
            in_jplus: classes.in_jplus,
            in_bc_prime: classes.in_bc_prime,
            in_bc: StabilityRepr::from(&classes.in_bc),
        },
        inequality_sums: InequalityRepr {
            d,
            sums: sums.iter().map(rat_repr).collect(),
            all_nonnegative,
        },
        structure: StructureRepr {
            is_complex: structure.is_complex,
            is_matroid: structure.is_matroid,
            coloop_free: structure.coloop_free,
        },
    };
    let text = format!(
        "set system: {} (ground {}, {} faces, d = {d}, t = {t})\nf = {:?}\nH = {h}\nJ = {j}\nclasses: jplus = {}, bc' = {:?}, bc = {}\n",
        path.display(),
        s.ground(),
        s.face_count(),
        report.f,
        report.classes.in_jplus,
        report.classes.in_bc_prime,
        report.classes.in_bc.status,
    );
    emit(format, &report, text);
    Ok(if in_bc_stable { 0 } else { 1 })
}

fn parse_cube_file(text: &str) -> Result<PolyCube, CoreError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CoreError::parse(e.line(), e.column(), e.to_string()))?;
    let dim = value
        .get("dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| CoreError::domain("cube file needs an integer \"dim\""))? as usize;
    let entries_json = value
        .get("entries")
        .and_then(|e| e.as_object())
        .ok_or_else(|| CoreError::domain("cube file needs an \"entries\" object"))?;
    let mut entries = BTreeMap::new();
    for (key, poly_text) in entries_json {
        let text = poly_text
            .as_str()
            .ok_or_else(|| CoreError::domain(format!("entry {key:?} must be a string")))?;
        entries.insert(key.clone(), ExactPoly::parse(text)?);
    }
    PolyCube::from_entries(dim, &entries)
}

fn cmd_cube(path: &Path, samples: usize, seed: u64, format: Format) -> Result<u8, CoreError> {
    let cube = parse_cube_file(&read_file(path)?)?;
    let verdict = cube_falsify(&cube, samples, seed);
    let repr = CubeVerdictRepr::from(&verdict);
    let report = CubeReport {
        command: "cube".into(),
        input: path.display().to_string(),
        dim: cube.dim(),
        verdict: repr,
    };
    let text = format!(
        "{}-cube: {} ({}; {} weight tuples checked)\n",
        cube.dim(),
        report.verdict.status,
        if verdict.exact { "exact" } else { "sampled" },
        verdict.samples_used,
    );
    emit(format, &report, text);
    Ok(if verdict.falsified() {
        1
    } else if verdict.exact {
        0
    } else {
        3 // sampling exhausted without a falsification: evidence only
    })
}

fn cmd_oracle(
    path: &Path,
    q: Option<String>,
    trials: u64,
    seed: u64,
    m_max: usize,
    format: Format,
) -> Result<u8, CoreError> {
    let g = Multigraph::parse(&read_file(path)?)?;
    let mut engine = RelEngine::new();
    let fast = engine.reliability(&g);
    let slow = brute_force_reliability_capped(&g, m_max)?;
    let equal = fast == slow;
    let mut mc_ok = true;
    let monte = match q {
        Some(q_text) => {
            let q = parse_rat(&q_text).map_err(CoreError::Domain)?;
            let est = monte_carlo(&g, &q, trials, seed)?;
            let exact = fast.eval(&q);
            let exact_f = exact.numer().to_string().parse::<f64>().unwrap_or(0.0)
                / exact.denom().to_string().parse::<f64>().unwrap_or(1.0);
            let within = (est.estimate - exact_f).abs() <= 3.0 * est.std_error + 1e-9;
            mc_ok = within;
            Some(MonteCarloRepr {
                q: rat_repr(&q),
                trials,
                seed,
                estimate: est.estimate,
                std_error: est.std_error,
                exact_value: rat_repr(&exact),
                within_three_se: within,
            })
        }
        None => None,
    };
    let report = OracleReport {
        command: "oracle".into(),
        input: path.display().to_string(),
        engine: poly_repr(&fast),
        brute_force: poly_repr(&slow),
        equal,
        monte_carlo: monte,
    };
    let text = format!(
        "engine == exhaustive oracle: {equal}{}\n",
        report
            .monte_carlo
            .as_ref()
            .map(|m| format!(
                "\nMonte Carlo at q = {}: {:.6} ± {:.6} (exact {}, within 3 s.e.: {})",
                m.q, m.estimate, m.std_error, m.exact_value, m.within_three_se
            ))
            .unwrap_or_default()
    );
    emit(format, &report, text);
    Ok(if equal && mc_ok { 0 } else { 1 })
}
