//! Command line front end: minimal proper-subgroup indices, subgroup
//! enumeration, composition factors and tree representability for finite
//! groups given by permutation generators, multiplication tables or
//! catalog names.
//!
//! Exit codes: 0 success; 1 malformed or invalid input; 2 capability
//! boundary (the answer exists but lies beyond the configured bounds or
//! the recognition tables).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use minidx_core::catalog::{self, CatalogError};
use minidx_core::cayley::{CayleyError, CayleyGroup};
use minidx_core::group::{GroupError, PermGroup};
use minidx_core::kappa::{
    composition_factors, composition_factors_cayley, kappa_cayley, kappa_perm, KappaError,
    KappaOptions, KappaOutcome,
};
use minidx_core::perm::{parse_generator_file, write_generator_file, PermError};
use minidx_core::simple_id::{prime_power_base, sporadic_table, SimpleType};
use minidx_core::tree::{parse_tree_file, TreeError};

#[derive(Parser)]
#[command(
    name = "minidx",
    version,
    about = "Minimal proper-subgroup indices and related invariants of finite groups"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel enumeration (0 = automatic).  Results
    /// do not depend on this value.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal index of a proper subgroup, with the simple quotient
    /// attaining it.
    Kappa {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// All subgroups of minimal index (needs a multiplication table, or
    /// a group small enough to build one).
    MinSubgroups {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Minimal faithful permutation degree, by exhaustive subgroup
    /// search; bounded by --oracle-bound.
    Mu {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Composition factors with multiplicity.
    Factors {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// All maximal subgroups of a simple group.
    MaximalSubgroups {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Decide whether the group acts nontrivially on a tree.
    TreeRep {
        #[command(flatten)]
        input: GroupInput,
        /// Tree file: `vertices n`, then n-1 lines `u v` (1-based).
        #[arg(long, value_name = "FILE")]
        tree: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Minimal faithful degrees of the recognized nonabelian simple
    /// groups up to an order bound.
    MuTable {
        /// Largest group order listed.
        #[arg(long, default_value_t = 1_000_000)]
        max_order: u64,
    },
    /// List built-in groups, or emit one in a file format.
    Catalog {
        /// Entry to emit (default: list all).
        #[arg(long, value_name = "NAME")]
        name: Option<String>,
        /// Output format for --name.
        #[arg(long, value_enum, default_value_t = EmitFormat::Gens)]
        emit: EmitFormat,
    },
    /// Brute-force reference values (kappa, mu, simplicity) for
    /// cross-checking; with --corpus, the whole fixture set.
    Oracle {
        #[command(flatten)]
        input: OptionalGroupInput,
        /// Emit reference values for every catalog group within the
        /// oracle bound.
        #[arg(long)]
        corpus: bool,
        #[command(flatten)]
        tuning: Tuning,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupInput {
    /// Permutation generators file: `degree n`, then cycles per line.
    #[arg(long, value_name = "FILE")]
    gens: Option<PathBuf>,
    /// Multiplication table file: `order m`, then m rows of m entries.
    #[arg(long, value_name = "FILE")]
    cayley: Option<PathBuf>,
    /// Built-in name: `a5`, `s4`, `cyclic:12`, `psl2:7`, `a5xc2`, ...
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalGroupInput {
    /// Permutation generators file: `degree n`, then cycles per line.
    #[arg(long, value_name = "FILE")]
    gens: Option<PathBuf>,
    /// Multiplication table file: `order m`, then m rows of m entries.
    #[arg(long, value_name = "FILE")]
    cayley: Option<PathBuf>,
    /// Built-in name: `a5`, `s4`, `cyclic:12`, `psl2:7`, `a5xc2`, ...
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Args)]
struct Tuning {
    /// Largest group order realized as a multiplication table.
    #[arg(long, default_value_t = 5000, value_name = "N")]
    cayley_bound: usize,
    /// Largest group order the brute-force lattice oracles accept.
    #[arg(long, default_value_t = 400, value_name = "N")]
    oracle_bound: usize,
    /// Random elements sampled by the Monte Carlo simplicity test.
    #[arg(long, default_value_t = 20, value_name = "N")]
    trials: usize,
    /// Seed for all randomized steps; equal seeds, equal output.
    #[arg(long, default_value_t = 0, value_name = "N")]
    seed: u64,
}

#[derive(Copy, Clone, ValueEnum)]
enum EmitFormat {
    /// Generators file.
    Gens,
    /// Multiplication table file.
    Cayley,
}

impl Tuning {
    fn options(&self) -> KappaOptions {
        KappaOptions {
            cayley_bound: self.cayley_bound,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

/// Failure with the exit-code class it belongs to.
enum Failure {
    /// Malformed or invalid input: exit 1.
    Input(String),
    /// Correct input whose answer lies beyond the configured bounds or
    /// the recognition tables: exit 2.
    Capability(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Capability(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Capability(m) => m,
        }
    }
}

fn classify_cayley(e: CayleyError) -> Failure {
    match e {
        CayleyError::SizeOverBound { .. }
        | CayleyError::Group(GroupError::OrderExceedsBound { .. }) => {
            Failure::Capability(e.to_string())
        }
        _ => Failure::Input(e.to_string()),
    }
}

fn classify_kappa(e: KappaError) -> Failure {
    match e {
        KappaError::Group(GroupError::OrderExceedsBound { .. }) => {
            Failure::Capability(e.to_string())
        }
        KappaError::TrivialGroup | KappaError::Group(_) => Failure::Input(e.to_string()),
        KappaError::NoIdentifiableQuotient { .. } | KappaError::Incomplete { .. } => {
            Failure::Capability(e.to_string())
        }
        KappaError::Cayley(ref c) => match c {
            CayleyError::SizeOverBound { .. } => Failure::Capability(e.to_string()),
            _ => Failure::Input(e.to_string()),
        },
        KappaError::SimpleId(_) => Failure::Capability(e.to_string()),
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Failure {
        match e {
            GroupError::OrderExceedsBound { .. } => Failure::Capability(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Failure {
        Failure::Input(e.to_string())
    }
}

/// A group resolved from one of the three input sources.
enum Resolved {
    Perm(PermGroup),
    /// Table plus the label that swapped places with the identity during
    /// validation, so reports can use the file's own labels.
    Table(CayleyGroup, Option<usize>),
}

impl Resolved {
    fn order(&self) -> BigUint {
        match self {
            Resolved::Perm(g) => g.order(),
            Resolved::Table(t, _) => BigUint::from(t.size()),
        }
    }

    /// The table realization, converting a permutation group when its
    /// order fits the bound.  The second value maps internal labels back
    /// to the caller's labels.
    fn table(&self, bound: usize) -> Result<(CayleyGroup, Option<usize>), Failure> {
        match self {
            Resolved::Table(t, swap) => {
                if t.size() > bound {
                    return Err(Failure::Capability(
                        CayleyError::SizeOverBound {
                            size: t.size(),
                            bound,
                        }
                        .to_string(),
                    ));
                }
                Ok((t.clone(), *swap))
            }
            Resolved::Perm(g) => {
                let (t, _) = CayleyGroup::from_perm_group(g, bound).map_err(classify_cayley)?;
                Ok((t, None))
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn resolve(
    gens: &Option<PathBuf>,
    cayley: &Option<PathBuf>,
    catalog_name: &Option<String>,
) -> Result<(Resolved, String), Failure> {
    if let Some(path) = gens {
        let file = parse_generator_file(&read_file(path)?)?;
        let group = PermGroup::new(file.degree, file.generators)?;
        return Ok((Resolved::Perm(group), format!("gens:{}", path.display())));
    }
    if let Some(path) = cayley {
        let rows =
            minidx_core::cayley::parse_cayley_file(&read_file(path)?).map_err(classify_cayley)?;
        let (table, swap) = CayleyGroup::from_table(rows).map_err(classify_cayley)?;
        return Ok((
            Resolved::Table(table, swap),
            format!("cayley:{}", path.display()),
        ));
    }
    let name = catalog_name.as_ref().expect("clap enforces one source");
    Ok((
        Resolved::Perm(catalog::by_name(name)?),
        format!("catalog:{name}"),
    ))
}

/// Maps an internal table label to the input file's labeling, undoing
/// the identity relocation.
fn user_label(label: usize, swap: Option<usize>) -> usize {
    match swap {
        Some(e) if label == 0 => e,
        Some(e) if label == e => 0,
        _ => label,
    }
}

fn labels_of(set: &minidx_core::SubgroupSet, swap: Option<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = set
        .elements()
        .into_iter()
        .map(|l| user_label(l, swap))
        .collect();
    out.sort_unstable();
    out
}

/// One verb's result: text for people, a JSON value for machines.
struct Report {
    human: String,
    json: Value,
}

fn kappa_outcome(resolved: &Resolved, opts: &KappaOptions) -> Result<KappaOutcome, Failure> {
    match resolved {
        Resolved::Perm(g) => kappa_perm(g, opts).map_err(classify_kappa),
        Resolved::Table(t, _) => kappa_cayley(t).map_err(classify_kappa),
    }
}

fn run_kappa(input: &GroupInput, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let out = kappa_outcome(&resolved, &tuning.options())?;
    let order = resolved.order();
    let mut human = format!(
        "group: {source} (order {order})\n\u{3ba} = {}{}\nattained by simple quotient {} \
         (minimal faithful degree {})\n",
        out.kappa,
        if out.exact {
            " (exact)"
        } else {
            " (upper bound)"
        },
        out.attained_by,
        out.kappa,
    );
    if let Some(note) = &out.note {
        human.push_str(&format!("note: {note}\n"));
    }
    Ok(Report {
        human,
        json: json!({
            "schema_version": 1,
            "command": "kappa",
            "source": source,
            "order": order.to_string(),
            "kappa": out.kappa,
            "attained_by": out.attained_by.to_string(),
            "exact": out.exact,
            "note": out.note,
        }),
    })
}

fn run_min_subgroups(input: &GroupInput, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let (table, swap) = resolved.table(tuning.cayley_bound)?;
    let (kappa, subgroups) = table
        .minimal_index_subgroups(tuning.cayley_bound)
        .map_err(classify_cayley)?;
    let element_lists: Vec<Vec<usize>> = subgroups.iter().map(|s| labels_of(s, swap)).collect();
    let mut human = format!(
        "group: {source} (order {})\n\u{3ba} = {kappa}; {} subgroup(s) of that index\n",
        table.size(),
        element_lists.len(),
    );
    for elements in &element_lists {
        let text: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        human.push_str(&format!("  {{{}}}\n", text.join(", ")));
    }
    Ok(Report {
        human,
        json: json!({
            "schema_version": 1,
            "command": "min-subgroups",
            "source": source,
            "order": table.size().to_string(),
            "kappa": kappa,
            "subgroups": element_lists,
        }),
    })
}

fn run_mu(input: &GroupInput, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let (table, _) = resolved.table(tuning.oracle_bound)?;
    let mu = table
        .brute_mu(tuning.oracle_bound)
        .map_err(classify_cayley)?;
    Ok(Report {
        human: format!(
            "group: {source} (order {})\n\u{3bc} = {mu} (minimal faithful permutation degree)\n",
            table.size(),
        ),
        json: json!({
            "schema_version": 1,
            "command": "mu",
            "source": source,
            "order": table.size().to_string(),
            "mu": mu,
        }),
    })
}

fn run_factors(input: &GroupInput, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let factors = match &resolved {
        Resolved::Perm(g) => composition_factors(g, &tuning.options()).map_err(classify_kappa)?,
        Resolved::Table(t, _) => composition_factors_cayley(t).map_err(classify_kappa)?,
    };
    let names: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    Ok(Report {
        human: format!(
            "group: {source} (order {})\ncomposition factors: {}\n",
            resolved.order(),
            names.join(", "),
        ),
        json: json!({
            "schema_version": 1,
            "command": "factors",
            "source": source,
            "order": resolved.order().to_string(),
            "factors": names,
        }),
    })
}

fn run_maximal_subgroups(input: &GroupInput, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let (table, swap) = resolved.table(tuning.cayley_bound)?;
    let maximal = table
        .all_maximal_subgroups_simple(tuning.cayley_bound)
        .map_err(classify_cayley)?;
    let rows: Vec<(usize, Vec<usize>)> = maximal
        .iter()
        .map(|s| (table.size() / s.len(), labels_of(s, swap)))
        .collect();
    let mut human = format!(
        "group: {source} (order {}, simple)\n{} maximal subgroup(s)\n",
        table.size(),
        rows.len(),
    );
    for (index, elements) in &rows {
        let text: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        human.push_str(&format!("  index {index}: {{{}}}\n", text.join(", ")));
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(index, elements)| json!({"index": index, "elements": elements}))
        .collect();
    Ok(Report {
        human,
        json: json!({
            "schema_version": 1,
            "command": "maximal-subgroups",
            "source": source,
            "order": table.size().to_string(),
            "count": rows.len(),
            "subgroups": json_rows,
        }),
    })
}

fn run_tree_rep(input: &GroupInput, tree_path: &Path, tuning: &Tuning) -> Result<Report, Failure> {
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let tree = parse_tree_file(&read_file(tree_path)?)?;
    let out = kappa_outcome(&resolved, &tuning.options())?;
    let mstar = tree.max_symmetric_degree();
    let representable = out.kappa <= mstar as u64;
    // An inexact kappa is an upper bound: small enough still certifies a
    // representation, but a bound above m* decides nothing.
    if !out.exact && !representable {
        return Err(Failure::Capability(format!(
            "\u{3ba} is only bounded above by {} (> m* = {mstar}); cannot decide representability",
            out.kappa,
        )));
    }
    let verdict = if representable {
        format!("representable: \u{3ba} = {} <= m* = {mstar}", out.kappa)
    } else {
        format!("NOT representable: m* = {mstar} < \u{3ba} = {}", out.kappa)
    };
    Ok(Report {
        human: format!(
            "tree: {} ({} vertices, m* = {mstar})\ngroup: {source} (order {}, \u{3ba} = {})\n{verdict}\n",
            tree_path.display(),
            tree.vertex_count(),
            resolved.order(),
            out.kappa,
        ),
        json: json!({
            "schema_version": 1,
            "command": "tree-rep",
            "source": source,
            "tree": tree_path.display().to_string(),
            "vertices": tree.vertex_count(),
            "order": resolved.order().to_string(),
            "kappa": out.kappa,
            "exact": out.exact,
            "max_symmetric_degree": mstar,
            "representable": representable,
        }),
    })
}

/// Recognized nonabelian simple groups of order at most `max_order`,
/// one row per isomorphism type (classical coincidence aliases are
/// folded into their alternating-group names).
fn mu_table_rows(max_order: u64) -> Vec<(String, BigUint, u64)> {
    let bound = BigUint::from(max_order);
    let mut types: Vec<SimpleType> = Vec::new();
    let mut n = 5u64;
    loop {
        let t = SimpleType::Alternating(n);
        if t.order() > bound {
            break;
        }
        types.push(t);
        n += 1;
    }
    // PSL(2, q) for prime powers q >= 4; q in {4, 5, 9} duplicate A5, A5
    // and A6 and are skipped.
    let mut q = 4u64;
    loop {
        let t = SimpleType::Psl { n: 2, q };
        if prime_power_base(q).is_some() {
            if t.order() > bound {
                break;
            }
            if ![4, 5, 9].contains(&q) {
                types.push(t);
            }
        }
        q += 1;
    }
    // PSL(n, q) for n >= 3; (3,2) duplicates PSL(2,7) and (4,2)
    // duplicates A8.
    for dim in 3u32.. {
        if (SimpleType::Psl { n: dim, q: 2 }).order() > bound {
            break;
        }
        let mut q = 2u64;
        loop {
            let t = SimpleType::Psl { n: dim, q };
            if prime_power_base(q).is_some() {
                if t.order() > bound {
                    break;
                }
                if (dim, q) != (3, 2) && (dim, q) != (4, 2) {
                    types.push(t);
                }
            }
            q += 1;
        }
    }
    for &(name, order, _) in sporadic_table() {
        if BigUint::from(order) <= bound {
            types.push(SimpleType::Sporadic(name));
        }
    }
    let mut rows: Vec<(String, BigUint, u64)> = types
        .into_iter()
        .map(|t| {
            let mu = t
                .minimal_faithful_degree()
                .expect("every listed family has a recorded degree");
            (t.to_string(), t.order(), mu)
        })
        .collect();
    rows.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
    rows
}

fn run_mu_table(max_order: u64) -> Report {
    let rows = mu_table_rows(max_order);
    let mut human = format!(
        "recognized nonabelian simple groups of order <= {max_order} \
         (cyclic C_p have \u{3bc} = p)\n{:<12} {:>14} {:>6}\n",
        "group", "order", "\u{3bc}"
    );
    for (name, order, mu) in &rows {
        human.push_str(&format!("{name:<12} {order:>14} {mu:>6}\n"));
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(name, order, mu)| json!({"name": name, "order": order.to_string(), "mu": mu}))
        .collect();
    Report {
        human,
        json: json!({
            "schema_version": 1,
            "command": "mu-table",
            "max_order": max_order,
            "rows": json_rows,
        }),
    }
}

fn run_catalog(name: &Option<String>, emit: EmitFormat) -> Result<Report, Failure> {
    if let Some(name) = name {
        let group = catalog::by_name(name)?;
        let text = match emit {
            EmitFormat::Gens => write_generator_file(group.degree(), group.generators()),
            EmitFormat::Cayley => {
                let (table, _) =
                    CayleyGroup::from_perm_group(&group, 5000).map_err(classify_cayley)?;
                minidx_core::cayley::write_cayley_file(&table)
            }
        };
        return Ok(Report {
            human: text.clone(),
            json: json!({
                "schema_version": 1,
                "command": "catalog",
                "name": name,
                "format": match emit { EmitFormat::Gens => "gens", EmitFormat::Cayley => "cayley" },
                "text": text,
            }),
        });
    }
    let mut human = format!("{:<10} {:>8} {:>7}\n", "name", "order", "degree");
    let mut entries = Vec::new();
    for (name, group) in catalog::standard_corpus() {
        human.push_str(&format!(
            "{name:<10} {:>8} {:>7}\n",
            group.order(),
            group.degree()
        ));
        entries.push(json!({
            "name": name,
            "order": group.order().to_string(),
            "degree": group.degree(),
        }));
    }
    Ok(Report {
        human,
        json: json!({
            "schema_version": 1,
            "command": "catalog",
            "entries": entries,
        }),
    })
}

/// Reference values for one table group, all by exhaustive search: the
/// full subgroup lattice gives kappa and the count of minimal-index
/// subgroups, the core-respecting search gives mu, and simplicity is
/// checked from every principal normal closure.
fn oracle_values(table: &CayleyGroup, bound: usize) -> Result<(usize, usize, u64, bool), Failure> {
    let lattice = table.subgroup_lattice(bound).map_err(classify_cayley)?;
    let m = table.size();
    let largest_proper = lattice
        .iter()
        .map(|s| s.len())
        .filter(|&l| l < m)
        .max()
        .ok_or_else(|| Failure::Input(CayleyError::TrivialGroup.to_string()))?;
    let kappa = m / largest_proper;
    let count = lattice.iter().filter(|s| s.len() == largest_proper).count();
    let mu = table.brute_mu(bound).map_err(classify_cayley)?;
    Ok((kappa, count, mu, table.is_simple()))
}

fn run_oracle(
    input: &OptionalGroupInput,
    corpus: bool,
    tuning: &Tuning,
) -> Result<Report, Failure> {
    let has_input = input.gens.is_some() || input.cayley.is_some() || input.catalog.is_some();
    if corpus == has_input {
        return Err(Failure::Input(
            "oracle needs exactly one of --corpus or a group input".into(),
        ));
    }
    if corpus {
        let mut human = format!(
            "{:<10} {:>6} {:>6} {:>3} {:>3} {:>7} {:>7}\n",
            "name", "order", "degree", "\u{3ba}", "\u{3bc}", "minimal", "simple"
        );
        let mut entries = Vec::new();
        for (name, group) in catalog::standard_corpus() {
            if group.order() > BigUint::from(tuning.oracle_bound) {
                continue;
            }
            let (table, _) = CayleyGroup::from_perm_group(&group, tuning.oracle_bound)
                .map_err(classify_cayley)?;
            let (kappa, count, mu, simple) = oracle_values(&table, tuning.oracle_bound)?;
            human.push_str(&format!(
                "{name:<10} {:>6} {:>6} {kappa:>3} {mu:>3} {count:>7} {simple:>7}\n",
                table.size(),
                group.degree(),
            ));
            entries.push(json!({
                "name": name,
                "order": table.size().to_string(),
                "degree": group.degree(),
                "kappa": kappa,
                "minimal_subgroup_count": count,
                "mu": mu,
                "simple": simple,
            }));
        }
        return Ok(Report {
            human,
            json: json!({
                "schema_version": 1,
                "command": "oracle",
                "corpus": true,
                "oracle_bound": tuning.oracle_bound,
                "entries": entries,
            }),
        });
    }
    let (resolved, source) = resolve(&input.gens, &input.cayley, &input.catalog)?;
    let (table, _) = resolved.table(tuning.oracle_bound)?;
    let (kappa, count, mu, simple) = oracle_values(&table, tuning.oracle_bound)?;
    Ok(Report {
        human: format!(
            "group: {source} (order {})\nbrute \u{3ba} = {kappa} ({count} minimal subgroup(s)), \
             brute \u{3bc} = {mu}, simple: {simple}\n",
            table.size(),
        ),
        json: json!({
            "schema_version": 1,
            "command": "oracle",
            "corpus": false,
            "source": source,
            "order": table.size().to_string(),
            "kappa": kappa,
            "minimal_subgroup_count": count,
            "mu": mu,
            "simple": simple,
        }),
    })
}

fn dispatch(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Kappa { input, tuning } => run_kappa(input, tuning),
        Command::MinSubgroups { input, tuning } => run_min_subgroups(input, tuning),
        Command::Mu { input, tuning } => run_mu(input, tuning),
        Command::Factors { input, tuning } => run_factors(input, tuning),
        Command::MaximalSubgroups { input, tuning } => run_maximal_subgroups(input, tuning),
        Command::TreeRep {
            input,
            tree,
            tuning,
        } => run_tree_rep(input, tree, tuning),
        Command::MuTable { max_order } => Ok(run_mu_table(*max_order)),
        Command::Catalog { name, emit } => run_catalog(name, *emit),
        Command::Oracle {
            input,
            corpus,
            tuning,
        } => run_oracle(input, *corpus, tuning),
    }
}

/// Prints to stdout, exiting quietly when the reader has closed the
/// pipe (as `minidx ... | head` does).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out
        .write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if n > 0 {
            builder = builder.num_threads(n);
        }
        if let Err(e) = builder.build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match dispatch(&cli.command) {
        Ok(report) => {
            if cli.json {
                emit(&format!("{}\n", report.json));
            } else {
                emit(&report.human);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
