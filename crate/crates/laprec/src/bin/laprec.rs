//! Command-line front end: generation, synthesis, recovery, verification
//! and reproduction of the worked path-graph example.
//!
//! JSON goes to stdout for machine use; `--verbose` adds human-readable
//! tables on stderr. Exit codes: 0 success, 1 model violation detected by
//! the numerics (rank or root failures), 2 input error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use laprec::error::{Error, Result};
use laprec::graph::{self, Graph};
use laprec::io::{
    self, ChainJson, ComplexJson, FacePlanJson, GraphJson, GraphRecoveryJson, PlanJson,
    SignalJson, SimplicialRecoveryJson, VertexSample,
};
use laprec::multi;
use laprec::prony;
use laprec::sampling;
use laprec::simplicial::{self, OperatorPart, SimplicialComplex};
use laprec::spectral::{self, SparseSpectralSignal, SpectralBasis};
use laprec::tolerance::Tolerances;

#[derive(Parser)]
#[command(
    name = "laprec",
    about = "Sparse spectral recovery on graphs and simplicial complexes from local samples",
    version
)]
struct Cli {
    /// Multiply every tolerance in the central configuration by this factor.
    #[arg(long, global = true, default_value_t = 1.0)]
    tol_scale: f64,
    /// Print human-readable tables to stderr in addition to the JSON output.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph or simplicial complex as JSON.
    #[command(subcommand)]
    Gen(GenKind),
    /// Synthesize a sparse spectral signal on a graph.
    Synth(SynthArgs),
    /// Recover eigenvalues (and local components) from neighbourhood samples.
    #[command(subcommand)]
    Recover(RecoverMode),
    /// Brute-force l0 decoding from arbitrary samples.
    Decode(DecodeArgs),
    /// Construct two sparse signals that collide on a small sample set.
    Collide(CollideArgs),
    /// Check the all-minors-nonvanishing property of a matrix.
    Chebotarev(ChebotarevArgs),
    /// Check whether a sample set determines every s-sparse signal.
    Uniqueness(UniquenessArgs),
    /// Run the worked path-graph example end to end and report the errors.
    ReproExample(ReproArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Path graph on n vertices.
    Path { n: usize },
    /// Circle graph on n vertices.
    Circle { n: usize },
    /// Umbrella graph: a rim path joined to a hub with one pendant vertex.
    Umbrella { n: usize },
    /// Connected Erdos-Renyi graph (resampled until connected).
    ErdosRenyi {
        n: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strip of t triangles as a simplicial complex.
    Strip { t: usize },
    /// Simplicial complex from facets, each given as "1,2,3".
    Complex { facets: Vec<String> },
}

#[derive(Args)]
struct SynthArgs {
    /// Graph JSON file: {"n": int, "edges": [[u,v],...]}.
    #[arg(long)]
    graph: PathBuf,
    /// Active eigenvalue indices, 1-based, e.g. "3,15".
    #[arg(long)]
    support: String,
    /// Coefficients matching the support, e.g. "1,0.2".
    #[arg(long)]
    coeffs: String,
}

#[derive(Subcommand)]
enum RecoverMode {
    /// Recovery from samples in one (2s-1)-neighbourhood.
    One(RecoverOneArgs),
    /// Eigenvalue recovery from several smaller neighbourhoods.
    Multi(RecoverMultiArgs),
    /// Recovery on the k-faces of a simplicial complex.
    Simplicial(RecoverSimplicialArgs),
}

#[derive(Args)]
struct RecoverOneArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Partial samples JSON: [{"vertex": int, "value": float}, ...].
    #[arg(long)]
    samples: PathBuf,
    /// Base vertex of the neighbourhood.
    #[arg(long)]
    vertex: usize,
    #[arg(long)]
    sparsity: usize,
    /// Also match recovered eigenvalues against the graph's eigendecomposition.
    #[arg(long)]
    match_basis: bool,
}

#[derive(Args)]
struct RecoverMultiArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    samples: PathBuf,
    /// Snapshot plan JSON: {"anchors": [{"vertex": int, "radius": int}]}.
    #[arg(long)]
    plan: PathBuf,
    #[arg(long)]
    sparsity: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum UpDn {
    Up,
    Dn,
}

#[derive(Args)]
struct RecoverSimplicialArgs {
    /// Complex JSON file: {"facets": [[int,...],...]}.
    #[arg(long)]
    complex: PathBuf,
    /// Face samples as a chain JSON: {"k": int, "faces": [[int,...]], "values": [float]}.
    #[arg(long)]
    samples: PathBuf,
    #[arg(long)]
    k: usize,
    /// Anchor face, e.g. "3,4" (required unless --plan is given).
    #[arg(long)]
    face: Option<String>,
    #[arg(long)]
    sparsity: usize,
    /// Which Hodge half drives the recovery (ignored with --split).
    #[arg(long, value_enum)]
    operator: Option<UpDn>,
    /// Split the signal into its up and down parts and recover both.
    #[arg(long)]
    split: bool,
    /// Face anchor plan JSON: {"anchors": [{"face": [int,...], "radius": int}]}.
    #[arg(long)]
    plan: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Samples JSON list; the sample vertices form the set W.
    #[arg(long)]
    samples: PathBuf,
    #[arg(long, default_value_t = 2)]
    s_max: usize,
}

#[derive(Args)]
struct CollideArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Sample vertices W, e.g. "1,2,3" (at most 2s-1 of them).
    #[arg(long)]
    vertices: String,
    /// Support of the first signal, e.g. "2,5".
    #[arg(long)]
    support: String,
}

#[derive(Args)]
struct ChebotarevArgs {
    /// Use the n x n unnormalized DFT matrix.
    #[arg(long)]
    dft: Option<usize>,
    /// Use the square Vandermonde matrix of these nodes, e.g. "1,2,3,4".
    #[arg(long)]
    vandermonde: Option<String>,
    /// Real matrix JSON file: {"rows": [[float,...],...]}.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct UniquenessArgs {
    /// Graph JSON file (its Laplacian eigenbasis is tested).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Use the n x n unnormalized DFT matrix instead of a graph basis.
    #[arg(long)]
    dft: Option<usize>,
    /// Sample vertices W as 1-based row labels, e.g. "1,2,3,4".
    #[arg(long)]
    vertices: String,
    #[arg(long)]
    sparsity: usize,
}

#[derive(Args)]
#[command(long_about = "Run the worked path-graph example (n = 20, support {3, 15}, \
coefficients (1, 1/5), base vertex 1) end to end: moments, Hankel matrix, companion \
matrix, recovered eigenvalues and local components, with errors against the closed form.\n\n\
With --csv PREFIX, writes three CSV files:\n  \
PREFIX-coefficients.csv  columns: eigenvalue_index, eigenvalue, coefficient\n  \
PREFIX-signal.csv        columns: vertex, value, sampled (1 for the sample set)\n  \
PREFIX-components.csv    columns: vertex, eigenvalue_index, value")]
struct ReproArgs {
    /// Write the three figure-data CSV files under this path prefix.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                Error::Io(std::io::Error::new(
                    std::io::ErrorKind::InvalidInput,
                    format!("cannot parse '{part}' as an integer"),
                ))
            })
        })
        .collect()
}

fn parse_float_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<f64>().map_err(|_| {
                Error::Io(std::io::Error::new(
                    std::io::ErrorKind::InvalidInput,
                    format!("cannot parse '{part}' as a number"),
                ))
            })
        })
        .collect()
}

fn load_graph(path: &Path) -> Result<Graph> {
    let json: GraphJson = io::load_json(path)?;
    json.into_graph()
}

fn load_samples(path: &Path) -> Result<BTreeMap<usize, f64>> {
    let list: Vec<VertexSample> = io::load_json(path)?;
    Ok(io::samples_from_json(&list))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    let json: ComplexJson = io::load_json(path)?;
    json.into_complex()
}

fn basis_of(g: &Graph, tol: &Tolerances) -> Result<SpectralBasis> {
    spectral::eigendecompose(&g.laplacian()?, tol)
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<f64>>,
}

fn main() {
    let cli = Cli::parse();
    let tol = Tolerances::default().scaled(cli.tol_scale);
    match run(cli, &tol) {
        Ok(()) => {}
        Err(e) => {
            emit(&io::error_json(&e));
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: Cli, tol: &Tolerances) -> Result<()> {
    match cli.command {
        Command::Gen(kind) => gen(kind),
        Command::Synth(args) => synth(args, tol),
        Command::Recover(RecoverMode::One(args)) => recover_one(args, tol, cli.verbose),
        Command::Recover(RecoverMode::Multi(args)) => recover_multi(args, tol),
        Command::Recover(RecoverMode::Simplicial(args)) => recover_simplicial(args, tol),
        Command::Decode(args) => decode(args, tol),
        Command::Collide(args) => collide(args, tol),
        Command::Chebotarev(args) => chebotarev(args, tol),
        Command::Uniqueness(args) => uniqueness(args, tol),
        Command::ReproExample(args) => repro_example(args, tol, cli.verbose),
    }
}

fn gen(kind: GenKind) -> Result<()> {
    match kind {
        GenKind::Path { n } => emit(&serde_json::to_value(GraphJson::from_graph(&graph::path(n)?))?),
        GenKind::Circle { n } => {
            emit(&serde_json::to_value(GraphJson::from_graph(&graph::circle(n)?))?)
        }
        GenKind::Umbrella { n } => {
            emit(&serde_json::to_value(GraphJson::from_graph(&graph::umbrella(n)?))?)
        }
        GenKind::ErdosRenyi { n, prob, seed } => emit(&serde_json::to_value(
            GraphJson::from_graph(&graph::erdos_renyi(n, prob, seed)?),
        )?),
        GenKind::Strip { t } => {
            let cx = simplicial::triangle_strip(t)?;
            let facets: Vec<Vec<usize>> = cx.faces(cx.dimension()).to_vec();
            emit(&json!({ "facets": facets }));
        }
        GenKind::Complex { facets } => {
            let parsed: Vec<Vec<usize>> = facets
                .iter()
                .map(|f| parse_list(f))
                .collect::<Result<_>>()?;
            // validate through construction before echoing
            SimplicialComplex::from_facets(&parsed)?;
            emit(&json!({ "facets": parsed }));
        }
    }
    Ok(())
}

fn synth(args: SynthArgs, tol: &Tolerances) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let basis = basis_of(&g, tol)?;
    let sig = SparseSpectralSignal::new(parse_list(&args.support)?, parse_float_list(&args.coeffs)?)?;
    let f = spectral::synthesize(&basis, &sig)?;
    emit(&serde_json::to_value(SignalJson::from_signal(&f))?);
    Ok(())
}

fn recover_one(args: RecoverOneArgs, tol: &Tolerances, verbose: bool) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let samples = load_samples(&args.samples)?;
    let mut result = prony::recover_one_neighbourhood(&g, args.vertex, args.sparsity, &samples, tol)?;
    if args.match_basis {
        let basis = basis_of(&g, tol)?;
        result.match_against(&basis, tol.support_match)?;
    }
    if verbose {
        let mut err = std::io::stderr();
        let _ = writeln!(err, "eigenvalues: {:?}", result.eigenvalues);
        let _ = writeln!(
            err,
            "effective sparsity: {}",
            result.diagnostics.effective_sparsity
        );
    }
    emit(&serde_json::to_value(GraphRecoveryJson::from_result(&result))?);
    Ok(())
}

fn recover_multi(args: RecoverMultiArgs, tol: &Tolerances) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let samples = load_samples(&args.samples)?;
    let plan_json: PlanJson = io::load_json(&args.plan)?;
    let plan = plan_json.into_plan()?;
    let result = multi::recover_multi(&g, &plan, args.sparsity, &samples, tol)?;
    emit(&serde_json::to_value(GraphRecoveryJson::from_result(&result))?);
    Ok(())
}

fn recover_simplicial(args: RecoverSimplicialArgs, tol: &Tolerances) -> Result<()> {
    let cx = load_complex(&args.complex)?;
    let chain: ChainJson = io::load_json(&args.samples)?;
    let samples = chain.into_face_samples()?;
    let k = args.k;

    if args.split {
        let face_text = args.face.as_deref().ok_or_else(|| {
            Error::Io(std::io::Error::new(
                std::io::ErrorKind::InvalidInput,
                "--split needs --face",
            ))
        })?;
        let sigma = parse_list(face_text)?;
        let split = simplicial::split_recover(&cx, k, &sigma, args.sparsity, &samples, tol)?;
        let up = SimplicialRecoveryJson::from_result(&split.up, &cx, k);
        let down = SimplicialRecoveryJson::from_result(&split.down, &cx, k);
        emit(&json!({
            "up": up,
            "down": down,
            "harmonic_residual": split.harmonic_residual,
        }));
        return Ok(());
    }

    let part = match args.operator {
        Some(UpDn::Up) => OperatorPart::Up,
        Some(UpDn::Dn) => OperatorPart::Down,
        None => {
            return Err(Error::Io(std::io::Error::new(
                std::io::ErrorKind::InvalidInput,
                "--operator up|dn is required without --split",
            )))
        }
    };

    if let Some(plan_path) = args.plan {
        let plan_json: FacePlanJson = io::load_json(&plan_path)?;
        let plan: Vec<(Vec<usize>, usize)> = plan_json
            .anchors
            .iter()
            .map(|a| (a.face.clone(), a.radius))
            .collect();
        let result =
            simplicial::recover_simplicial_multi(&cx, k, part, &plan, args.sparsity, &samples, tol)?;
        emit(&serde_json::to_value(SimplicialRecoveryJson::from_result(&result, &cx, k))?);
        return Ok(());
    }

    let face_text = args.face.as_deref().ok_or_else(|| {
        Error::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "--face is required without --plan",
        ))
    })?;
    let sigma = parse_list(face_text)?;
    let result =
        simplicial::recover_simplicial_one(&cx, k, part, &sigma, args.sparsity, &samples, tol)?;
    emit(&serde_json::to_value(SimplicialRecoveryJson::from_result(&result, &cx, k))?);
    Ok(())
}

fn decode(args: DecodeArgs, tol: &Tolerances) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let samples = load_samples(&args.samples)?;
    let basis = basis_of(&g, tol)?;
    let w: Vec<usize> = samples.keys().copied().collect();
    let u_w = basis.restrict_rows(&w);
    let values: Vec<f64> = w.iter().map(|v| samples[v]).collect();
    let decoded = sampling::l0_decode(&u_w, &values, args.s_max, tol)?;
    emit(&json!({
        "support": decoded.support,
        "coefficients": decoded.coefficients,
        "residual": decoded.residual,
        "ambiguous_supports": decoded.ambiguous_supports,
    }));
    Ok(())
}

fn collide(args: CollideArgs, tol: &Tolerances) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let basis = basis_of(&g, tol)?;
    let w = parse_list(&args.vertices)?;
    let support = parse_list(&args.support)?;
    let pair = sampling::colliding_signals(&basis, &w, &support, tol)?;
    emit(&json!({
        "f": { "support": pair.f.support(), "coefficients": pair.f.coefficients() },
        "g": { "support": pair.g.support(), "coefficients": pair.g.coefficients() },
        "f_signal": pair.f_signal.values(),
        "g_signal": pair.g_signal.values(),
        "max_sample_difference": pair.max_sample_difference,
    }));
    Ok(())
}

fn chebotarev(args: ChebotarevArgs, tol: &Tolerances) -> Result<()> {
    let check = if let Some(n) = args.dft {
        sampling::is_chebotarev(&spectral::dft_matrix(n), tol)?
    } else if let Some(nodes) = &args.vandermonde {
        let nodes = parse_float_list(nodes)?;
        sampling::is_chebotarev_real(&sampling::vandermonde(&nodes), tol)?
    } else if let Some(path) = &args.matrix {
        let json: MatrixJson = io::load_json(path)?;
        let rows = json.rows.len();
        let cols = json.rows.first().map_or(0, |r| r.len());
        let m = nalgebra::DMatrix::from_fn(rows, cols, |i, j| json.rows[i][j]);
        sampling::is_chebotarev_real(&m, tol)?
    } else {
        return Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "one of --dft, --vandermonde, --matrix is required",
        )));
    };
    emit(&json!({
        "chebotarev": check.chebotarev,
        "witness": check.witness.map(|w| json!({ "rows": w.rows, "cols": w.cols })),
    }));
    Ok(())
}

fn uniqueness(args: UniquenessArgs, tol: &Tolerances) -> Result<()> {
    let vertices = parse_list(&args.vertices)?;
    let check = if let Some(path) = &args.graph {
        let g = load_graph(path)?;
        let basis = basis_of(&g, tol)?;
        sampling::uniqueness_check(&basis, &vertices, args.sparsity, tol)?
    } else if let Some(n) = args.dft {
        let rows: Vec<usize> = vertices
            .iter()
            .map(|&v| {
                if v < 1 || v > n {
                    Err(Error::VertexOutOfRange { vertex: v, n })
                } else {
                    Ok(v - 1)
                }
            })
            .collect::<Result<_>>()?;
        sampling::uniqueness_check_matrix(&spectral::dft_matrix(n), &rows, args.sparsity, tol)?
    } else {
        return Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "one of --graph, --dft is required",
        )));
    };
    let failure = check.failure.map(|f| match f {
        sampling::UniquenessFailure::TooFewSamples { w, needed } => {
            json!({ "kind": "too-few-samples", "w": w, "needed": needed })
        }
        sampling::UniquenessFailure::RankDeficientSupport(cols) => {
            json!({ "kind": "rank-deficient-support", "support": cols })
        }
    });
    emit(&json!({ "unique": check.unique, "failure": failure }));
    Ok(())
}

fn repro_example(args: ReproArgs, tol: &Tolerances, verbose: bool) -> Result<()> {
    let n = 20;
    let support = [3usize, 15];
    let coeffs = [1.0, 0.2];
    let base = 1;
    let s = 2;

    let g = graph::path(n)?;
    let basis = basis_of(&g, tol)?;
    let sig = SparseSpectralSignal::new(support.to_vec(), coeffs.to_vec())?;
    let f = spectral::synthesize(&basis, &sig)?;
    let window = g.neighbourhood(base, 2 * s - 1)?;
    let samples = f.samples_on(&window);

    let moments = prony::local_moments(&g, &samples, base, 2 * s - 1)?;
    let hankel = prony::hankel(&moments, s)?;
    let polynomial = prony::prony_polynomial(&hankel, tol)?;
    let degree = polynomial.degree();
    let companion: Vec<Vec<f64>> = (0..degree)
        .map(|i| {
            (0..degree)
                .map(|j| {
                    if j == degree - 1 {
                        -polynomial.coefficients[i]
                    } else if i == j + 1 {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();

    let mut result = prony::recover_one_neighbourhood(&g, base, s, &samples, tol)?;
    let matched = result.match_against(&basis, tol.support_match)?.clone();

    // closed-form path spectrum: lambda_j = 2 - 2 cos(pi (j-1) / n)
    let closed = |j: usize| 2.0 - 2.0 * (std::f64::consts::PI * (j - 1) as f64 / n as f64).cos();
    let mut max_eigenvalue_error = 0.0_f64;
    for (lambda, &j) in result.eigenvalues.iter().zip(&support) {
        max_eigenvalue_error = max_eigenvalue_error.max((lambda - closed(j)).abs());
    }
    let mut max_component_error = 0.0_f64;
    for (component, (&j, &beta)) in result.components.iter().zip(support.iter().zip(&coeffs)) {
        for (&w, &value) in &component.values {
            max_component_error = max_component_error.max((value - beta * basis.value(j, w)).abs());
        }
    }

    if verbose {
        let mut err = std::io::stderr();
        let _ = writeln!(err, "samples f(1..4): {:?}", window.iter().map(|&v| f.value(v)).collect::<Vec<_>>());
        let _ = writeln!(err, "moments g(0..3): {:?}", moments.values());
        let _ = writeln!(err, "hankel: {hankel}");
        let _ = writeln!(err, "companion: {companion:?}");
        let _ = writeln!(err, "eigenvalues: {:?}", result.eigenvalues);
        let _ = writeln!(err, "max eigenvalue error: {max_eigenvalue_error:.3e}");
        let _ = writeln!(err, "max component error: {max_component_error:.3e}");
    }

    if let Some(prefix) = &args.csv {
        write_repro_csvs(prefix, &basis, &f, &window, &result, &support)?;
    }

    let hankel_rows: Vec<Vec<f64>> = (0..hankel.nrows())
        .map(|i| hankel.row(i).iter().copied().collect())
        .collect();
    emit(&json!({
        "samples": window.iter().map(|&v| f.value(v)).collect::<Vec<_>>(),
        "moments": moments.values(),
        "hankel": hankel_rows,
        "companion": companion,
        "eigenvalues": result.eigenvalues,
        "matched_support": matched.plain(),
        "max_eigenvalue_error": max_eigenvalue_error,
        "max_component_error": max_component_error,
    }));
    Ok(())
}

fn write_repro_csvs(
    prefix: &Path,
    basis: &SpectralBasis,
    f: &graph::GraphSignal,
    window: &[usize],
    result: &prony::RecoveryResult,
    support: &[usize],
) -> Result<()> {
    let path_for = |suffix: &str| {
        let mut name = prefix.as_os_str().to_os_string();
        name.push(suffix);
        PathBuf::from(name)
    };

    let mut coefficients = String::from("eigenvalue_index,eigenvalue,coefficient\n");
    for j in 1..=basis.dim() {
        let beta = if j == support[0] {
            1.0
        } else if j == support[1] {
            0.2
        } else {
            0.0
        };
        coefficients.push_str(&format!("{j},{},{beta}\n", basis.eigenvalue(j)));
    }
    std::fs::write(path_for("-coefficients.csv"), coefficients)?;

    let mut signal = String::from("vertex,value,sampled\n");
    for v in 1..=f.len() {
        let sampled = if window.contains(&v) { 1 } else { 0 };
        signal.push_str(&format!("{v},{},{sampled}\n", f.value(v)));
    }
    std::fs::write(path_for("-signal.csv"), signal)?;

    let mut components = String::from("vertex,eigenvalue_index,value\n");
    for (component, &j) in result.components.iter().zip(support) {
        for (&v, &value) in &component.values {
            components.push_str(&format!("{v},{j},{value}\n"));
        }
    }
    std::fs::write(path_for("-components.csv"), components)?;
    Ok(())
}
