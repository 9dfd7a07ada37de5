use crate::args::{ExactDistArgs, ExperimentArgs, GenArgs, Model, Study, TestArgs};
use netgof_core::experiments::{
    run_power_with, run_significance_with, run_timing_with, write_csv, write_json,
};
use netgof_core::graph::{read_edge_list, write_edge_list, ParsedGraph};
use netgof_core::{
    calibrate_two_colour, exact_edge_count_distribution, generate_gnm, generate_gnp,
    generate_two_colour, Error, ExperimentConfig, ExperimentRow, Graph, Method, Result, RngSeed,
    TestOptions,
};
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

fn load(path: &Path, nodes: Option<usize>) -> Result<Graph> {
    let file = File::open(path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    let ParsedGraph {
        graph,
        self_loops_dropped,
        duplicates_collapsed,
    } = read_edge_list(BufReader::new(file), nodes)?;
    if self_loops_dropped > 0 {
        eprintln!("warning: dropped {self_loops_dropped} self-loop(s)");
    }
    if duplicates_collapsed > 0 {
        eprintln!("warning: collapsed {duplicates_collapsed} duplicate edge(s)");
    }
    Ok(graph)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn test(args: TestArgs) -> Result<()> {
    let graph = load(&args.file, args.nodes)?;
    let options = TestOptions {
        subgraph_size: args.subgraph_size,
        n_subgraphs: args.n_subgraphs,
        replicates: args.replicates,
    };
    let result = options.run(args.method.into(), &graph, RngSeed(args.seed))?;
    print_json(&result)?;

    eprintln!(
        "{} test: |V| = {}, |E| = {}, k = {}, N = {}, bins = {}, X2 = {:.4}, df = {}, p = {:.4}",
        result.method,
        result.nodes,
        result.edges,
        result.subgraph_size,
        result.n_subgraphs,
        result.bin_count,
        result.statistic,
        result.df,
        result.p_value
    );
    if result.degenerate {
        eprintln!(
            "warning: the null edge-count distribution fits in a single bin (empty or complete graph, \
             or too few subgraphs for N = {}); the test carries no information",
            result.n_subgraphs
        );
    }
    Ok(())
}

fn required<T>(value: Option<T>, flag: &str, model: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parameter(format!("{model} needs --{flag}")))
}

pub fn gen(args: GenArgs) -> Result<()> {
    let seed = RngSeed(args.seed);
    let (graph, extra) = match args.model {
        Model::Gnm => (
            generate_gnm(args.nodes, required(args.edges, "edges", "gnm")?, seed)?,
            String::new(),
        ),
        Model::Gnp => (
            generate_gnp(args.nodes, required(args.p, "p", "gnp")?, seed)?,
            String::new(),
        ),
        Model::TwoColour => {
            let degree = required(args.mean_degree, "mean-degree", "two-colour")?;
            let ratio = required(args.ratio, "ratio", "two-colour")?;
            let params = calibrate_two_colour(args.nodes, degree, ratio)?;
            let extra = format!(
                ", p = {:.6}, q = {:.6}, q - p = {:.6}",
                params.p,
                params.q,
                params.q - params.p
            );
            (generate_two_colour(params, seed)?, extra)
        }
    };
    match &args.out {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            write_edge_list(&graph, &mut out)?;
            out.flush()?;
        }
        None => write_edge_list(&graph, io::stdout().lock())?,
    }
    eprintln!(
        "|V| = {}, |E| = {}{extra}",
        graph.node_count(),
        graph.edge_count()
    );
    Ok(())
}

pub fn exact_dist(args: ExactDistArgs) -> Result<()> {
    let graph = load(&args.file, args.nodes)?;
    let dist = exact_edge_count_distribution(&graph, args.subgraph_size).map_err(|e| match e {
        Error::EnumerationTooLarge { .. } => {
            eprintln!("hint: use `netgof test` to sample subgraphs instead of enumerating them");
            e
        }
        e => e,
    })?;
    let pmf: BTreeMap<u64, f64> = dist.probabilities();
    print_json(&pmf)?;
    eprintln!(
        "{} subsets of {} nodes enumerated",
        dist.subsets, dist.subgraph_size
    );
    Ok(())
}

fn experiment_config(args: &ExperimentArgs) -> ExperimentConfig {
    let method = args
        .method
        .map(Method::from)
        .unwrap_or(Method::Approximation);
    let mut config = match (args.full_grid, args.study) {
        (false, _) => ExperimentConfig {
            method,
            ..ExperimentConfig::default()
        },
        (true, Study::Significance) => ExperimentConfig::full_significance(method),
        (true, Study::Power) => ExperimentConfig::full_power(),
        (true, Study::Timing) => ExperimentConfig::full_timing(method),
    };
    config.method = method;
    if let Some(sizes) = &args.sizes {
        config.sizes = sizes.clone();
    }
    if let Some(degrees) = &args.degrees {
        config.mean_degrees = degrees.clone();
    }
    if let Some(ratios) = &args.ratios {
        config.ratios = ratios.clone();
    }
    config.replications = args.reps.unwrap_or(config.replications);
    config.n_subgraphs = args.n_subgraphs.unwrap_or(config.n_subgraphs);
    config.replicates = args.replicates.unwrap_or(config.replicates);
    config.subgraph_size = args.subgraph_size.or(config.subgraph_size);
    config.alpha = args.alpha.unwrap_or(config.alpha);
    config.base_seed = RngSeed(args.seed);
    config
}

fn report(row: &ExperimentRow) {
    let ratio = row.ratio.map(|r| format!(" r = {r}")).unwrap_or_default();
    match &row.skipped {
        Some(reason) => eprintln!(
            "n = {} d = {}{ratio}: skipped ({reason})",
            row.size, row.mean_degree
        ),
        None => eprintln!(
            "n = {} d = {}{ratio}: {}/{} rejected, rate {:.3} [{:.3}, {:.3}], {:.4} s per test",
            row.size,
            row.mean_degree,
            row.rejections,
            row.trials,
            row.rejection_rate,
            row.ci_lo,
            row.ci_hi,
            row.mean_runtime
        ),
    }
}

pub fn experiment(args: ExperimentArgs) -> Result<()> {
    let config = experiment_config(&args);
    let rows = match args.study {
        Study::Significance => run_significance_with(&config, report)?,
        Study::Power => run_power_with(&config, report)?,
        Study::Timing => run_timing_with(&config, report)?,
    };

    if let Some(path) = &args.csv {
        write_csv(&rows, File::create(path)?)?;
    }
    if let Some(path) = &args.json {
        write_json(&rows, BufWriter::new(File::create(path)?))?;
    }
    if args.csv.is_none() && args.json.is_none() {
        write_csv(&rows, io::stdout().lock())?;
    }
    Ok(())
}
