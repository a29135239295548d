//! Command-line front end: parse set-family files, dispatch to the library,
//! emit human-readable or JSON results.
//!
//! Exit codes: 0 success, 1 domain errors (parse, I/O, budget), 2 failed
//! identity checks (`check-dual` false, non-dual inputs to pair commands,
//! route disagreement).

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use downset::{
    alexander_dual, blockers_from_facets, counts_bruteforce, counts_from_blockers,
    counts_from_facets, deviation_identity, enumerate_downset, enumerate_downset_from_blockers,
    euler_bruteforce, euler_from_blockers, euler_from_facets, f_polynomial, facets_from_blockers,
    hilbert_dimension, hilbert_from_k_polynomial, is_dual_pair, joint_size_inequality,
    k_polynomial_from_blockers, k_polynomial_from_counts, parse_family, write_family, Antichain,
    Budget, DualPair, Dyadic, Error, FaceCountVector, NonDualEvidence, SetFamily,
};
use output::{
    antichain_value, big_value, counts_value, dyadic_value, face_value, poly_value,
    render_counts, render_members, Document,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(
    name = "downset",
    about = "Down-set (simplicial complex) invariants from facet or blocker families",
    version
)]
struct Cli {
    /// Emit a JSON document on stdout instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on inclusion-exclusion aggregate entries and Berge intermediates.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_TERM_CAP)]
    term_cap: u64,

    /// Largest ground size for brute-force 2^n enumeration.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    /// Worker threads for partitionable enumerations; output is identical
    /// for every value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Facet family file.
    #[arg(long, value_name = "FILE")]
    facets: Option<PathBuf>,

    /// Blocker family file.
    #[arg(long, value_name = "FILE")]
    blockers: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EulerRoute {
    Brute,
    Facets,
    Blockers,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Facets to blockers.
    F2m,
    /// Blockers to facets.
    M2f,
}

#[derive(Subcommand)]
enum Command {
    /// Face-count vector and f-polynomial.
    Fvector(SourceArgs),
    /// K-polynomial.
    Kpoly(SourceArgs),
    /// Hilbert-function value of the blocker-monomial quotient at a degree.
    Hilbert {
        #[command(flatten)]
        source: SourceArgs,
        /// Degree to evaluate at.
        #[arg(long)]
        degree: usize,
    },
    /// Reduced Euler characteristic.
    Euler {
        #[command(flatten)]
        source: SourceArgs,
        /// Which computation route(s) to run; `all` asserts agreement.
        #[arg(long, value_enum, default_value_t = EulerRoute::All)]
        route: EulerRoute,
    },
    /// Convert between facet and blocker representations.
    Dualize {
        #[command(flatten)]
        source: SourceArgs,
        /// Conversion direction; inferred from the given input if omitted.
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Decide whether facet and blocker files describe the same down-set.
    CheckDual {
        #[arg(long, value_name = "FILE")]
        facets: PathBuf,
        #[arg(long, value_name = "FILE")]
        blockers: PathBuf,
    },
    /// Alexander dual of the complex.
    Alexander(SourceArgs),
    /// Coefficientwise dual-pair count identity, cardinality by cardinality.
    Prop2(SourceArgs),
    /// Union bound on the face generating function at a dyadic point.
    Bound {
        #[arg(long, value_name = "FILE")]
        facets: PathBuf,
        /// Dyadic x, e.g. `1/2`, `3/4`, `1/2^3`, `2`.
        #[arg(long)]
        x: String,
        /// Dyadic y.
        #[arg(long)]
        y: String,
    },
    /// Joint-size inequality sums for a dual pair.
    JointSize(SourceArgs),
    /// Deviation-from-equality sums for a dual pair; their total is 1.
    Deviation(SourceArgs),
    /// List every face of the down-set (family-file format on stdout).
    Enumerate(SourceArgs),
}

/// Failures outside a structured result document.
enum Failure {
    /// Parse, I/O, budget, bad arguments: exit 1.
    Domain(String),
    /// A mathematical identity check failed: exit 2.
    Identity(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::NotDualPair { .. } => Failure::Identity(err.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let budget = Budget::default()
        .with_term_cap(cli.term_cap)
        .with_oracle_cap(cli.oracle_cap)
        .with_threads(cli.threads);

    match dispatch(&cli.command, &budget) {
        Ok((doc, ok)) => {
            if cli.json {
                println!("{}", doc.into_json());
            } else {
                for line in doc.diagnostics() {
                    eprintln!("note: {line}");
                }
                print!("{}", doc.into_human());
            }
            ExitCode::from(if ok { 0 } else { 2 })
        }
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Identity(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// One loaded family file: the normalized members plus the antichain the
/// math runs on.
struct Input {
    path: String,
    sha256: String,
    family: SetFamily,
    antichain: Antichain,
    duplicates: usize,
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Role {
    Facets,
    Blockers,
}

impl Role {
    fn name(self) -> &'static str {
        match self {
            Role::Facets => "facets",
            Role::Blockers => "blockers",
        }
    }
}

fn load(path: &Path, role: Role) -> Result<Input, Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::Domain(format!("{}: file is not UTF-8", path.display())))?;
    let parsed = parse_family(&text)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let antichain = match role {
        Role::Facets => parsed.family.max_antichain(),
        Role::Blockers => parsed.family.min_antichain(),
    };
    let mut digest = Sha256::new();
    digest.update(&bytes);
    let sha256 = digest
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect::<String>();
    Ok(Input {
        path: path.display().to_string(),
        sha256,
        family: parsed.family,
        antichain,
        duplicates: parsed.duplicates_removed,
    })
}

fn register(doc: &mut Document, input: &Input, role: Role) {
    doc.add_input(role.name(), &input.path, &input.sha256, &input.family);
    if input.duplicates > 0 {
        doc.diagnostic(format!(
            "{}: removed {} duplicate member(s)",
            input.path, input.duplicates
        ));
    }
    if input.antichain.len() != input.family.len() {
        doc.diagnostic(format!(
            "{}: reduced to {} antichain ({} of {} members kept)",
            input.path,
            match role {
                Role::Facets => "the maximal",
                Role::Blockers => "the minimal",
            },
            input.antichain.len(),
            input.family.len()
        ));
    }
}

/// Loads whichever of `--facets` / `--blockers` was given.
fn load_source(
    doc: &mut Document,
    source: &SourceArgs,
) -> Result<(Option<Antichain>, Option<Antichain>), Failure> {
    let facets = match &source.facets {
        Some(path) => {
            let input = load(path, Role::Facets)?;
            register(doc, &input, Role::Facets);
            Some(input.antichain)
        }
        None => None,
    };
    let blockers = match &source.blockers {
        Some(path) => {
            let input = load(path, Role::Blockers)?;
            register(doc, &input, Role::Blockers);
            Some(input.antichain)
        }
        None => None,
    };
    if facets.is_none() && blockers.is_none() {
        return Err(Failure::Domain(
            "provide --facets and/or --blockers".to_string(),
        ));
    }
    if let (Some(f), Some(b)) = (&facets, &blockers) {
        if f.n() != b.n() {
            return Err(Failure::Domain(format!(
                "ground size mismatch: facets file has n={}, blockers file has n={}",
                f.n(),
                b.n()
            )));
        }
    }
    Ok((facets, blockers))
}

/// Completes a verified dual pair from whatever inputs were given.
fn resolve_pair(
    doc: &mut Document,
    source: &SourceArgs,
    budget: &Budget,
) -> Result<DualPair, Failure> {
    let (facets, blockers) = load_source(doc, source)?;
    match (facets, blockers) {
        (Some(f), Some(b)) => Ok(DualPair::new(f, b, budget)?),
        (Some(f), None) => {
            doc.diagnostic("blockers derived from facets by dualization".to_string());
            Ok(DualPair::from_facets(f, budget)?)
        }
        (None, Some(b)) => {
            doc.diagnostic("facets derived from blockers by dualization".to_string());
            Ok(DualPair::from_blockers(b, budget)?)
        }
        (None, None) => unreachable!("load_source rejects empty sources"),
    }
}

fn dispatch(command: &Command, budget: &Budget) -> Result<(Document, bool), Failure> {
    match command {
        Command::Fvector(source) => cmd_fvector(source, budget),
        Command::Kpoly(source) => cmd_kpoly(source, budget),
        Command::Hilbert { source, degree } => cmd_hilbert(source, *degree, budget),
        Command::Euler { source, route } => cmd_euler(source, *route, budget),
        Command::Dualize { source, direction } => cmd_dualize(source, *direction, budget),
        Command::CheckDual { facets, blockers } => cmd_check_dual(facets, blockers, budget),
        Command::Alexander(source) => cmd_alexander(source, budget),
        Command::Prop2(source) => cmd_prop2(source, budget),
        Command::Bound { facets, x, y } => cmd_bound(facets, x, y, budget),
        Command::JointSize(source) => cmd_joint_size(source, budget),
        Command::Deviation(source) => cmd_deviation(source, budget),
        Command::Enumerate(source) => cmd_enumerate(source, budget),
    }
}

/// Computes the face-count vector from whichever representations were given,
/// cross-checking when both are.
fn counts_from_source(
    doc: &mut Document,
    facets: &Option<Antichain>,
    blockers: &Option<Antichain>,
    budget: &Budget,
) -> Result<(FaceCountVector, bool), Failure> {
    match (facets, blockers) {
        (Some(f), None) => Ok((counts_from_facets(f, budget)?, true)),
        (None, Some(b)) => Ok((counts_from_blockers(b, budget)?, true)),
        (Some(f), Some(b)) => {
            let via_facets = counts_from_facets(f, budget)?;
            let via_blockers = counts_from_blockers(b, budget)?;
            let agree = via_facets == via_blockers;
            if !agree {
                doc.diagnostic(
                    "facet and blocker routes disagree; the inputs are not a dual pair"
                        .to_string(),
                );
                doc.field(
                    "counts_from_blockers",
                    counts_value(&via_blockers),
                    format!("counts (blocker route): {}", render_counts(&via_blockers)),
                );
            }
            Ok((via_facets, agree))
        }
        (None, None) => unreachable!(),
    }
}

fn cmd_fvector(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("fvector");
    let (facets, blockers) = load_source(&mut doc, source)?;
    let n = facets.as_ref().or(blockers.as_ref()).unwrap().n();
    doc.set_n(n.get());
    let (counts, agree) = counts_from_source(&mut doc, &facets, &blockers, budget)?;
    doc.field(
        "counts",
        counts_value(&counts),
        format!("counts: {}", render_counts(&counts)),
    );
    let f = f_polynomial(&counts);
    doc.field("f", poly_value(&f), format!("f: {f}"));
    doc.field(
        "faces_total",
        big_value(&counts.total()),
        format!("faces total: {}", counts.total()),
    );
    Ok((doc, agree))
}

fn cmd_kpoly(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("kpoly");
    let (facets, blockers) = load_source(&mut doc, source)?;
    let n = facets.as_ref().or(blockers.as_ref()).unwrap().n();
    doc.set_n(n.get());
    let (k, agree) = match (&facets, &blockers) {
        (Some(f), None) => (
            k_polynomial_from_counts(&counts_from_facets(f, budget)?),
            true,
        ),
        (None, Some(b)) => (k_polynomial_from_blockers(b, budget)?, true),
        (Some(f), Some(b)) => {
            let via_counts = k_polynomial_from_counts(&counts_from_facets(f, budget)?);
            let via_blockers = k_polynomial_from_blockers(b, budget)?;
            let agree = via_counts == via_blockers;
            if !agree {
                doc.diagnostic(
                    "facet and blocker routes disagree; the inputs are not a dual pair"
                        .to_string(),
                );
            }
            (via_counts, agree)
        }
        (None, None) => unreachable!(),
    };
    doc.field("k", poly_value(&k), format!("K: {k}"));
    Ok((doc, agree))
}

fn cmd_hilbert(
    source: &SourceArgs,
    degree: usize,
    budget: &Budget,
) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("hilbert");
    let (facets, blockers) = load_source(&mut doc, source)?;
    let n = facets.as_ref().or(blockers.as_ref()).unwrap().n();
    doc.set_n(n.get());
    doc.field(
        "degree",
        json!(degree),
        format!("degree: {degree}"),
    );
    let (value, agree) = match (&facets, &blockers) {
        (Some(f), None) => {
            let k = k_polynomial_from_counts(&counts_from_facets(f, budget)?);
            (hilbert_from_k_polynomial(n, &k, degree), true)
        }
        (None, Some(b)) => (hilbert_dimension(b, degree, budget)?, true),
        (Some(f), Some(b)) => {
            let k = k_polynomial_from_counts(&counts_from_facets(f, budget)?);
            let via_facets = hilbert_from_k_polynomial(n, &k, degree);
            let via_blockers = hilbert_dimension(b, degree, budget)?;
            let agree = via_facets == via_blockers;
            if !agree {
                doc.diagnostic(
                    "facet and blocker routes disagree; the inputs are not a dual pair"
                        .to_string(),
                );
            }
            (via_facets, agree)
        }
        (None, None) => unreachable!(),
    };
    doc.field(
        "dimension",
        big_value(&value),
        format!("dimension: {value}"),
    );
    Ok((doc, agree))
}

fn cmd_euler(
    source: &SourceArgs,
    route: EulerRoute,
    budget: &Budget,
) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("euler");
    let (facets_in, blockers_in) = load_source(&mut doc, source)?;
    let n = facets_in.as_ref().or(blockers_in.as_ref()).unwrap().n();
    doc.set_n(n.get());

    let need_facets = matches!(route, EulerRoute::Facets | EulerRoute::All | EulerRoute::Brute);
    let need_blockers = matches!(route, EulerRoute::Blockers | EulerRoute::All);
    let facets = match (&facets_in, need_facets) {
        (None, true) => {
            doc.diagnostic("facets derived from blockers by dualization".to_string());
            Some(facets_from_blockers(blockers_in.as_ref().unwrap(), budget)?)
        }
        _ => facets_in.clone(),
    };
    let blockers = match (&blockers_in, need_blockers) {
        (None, true) => {
            doc.diagnostic("blockers derived from facets by dualization".to_string());
            Some(blockers_from_facets(facets_in.as_ref().unwrap(), budget)?)
        }
        _ => blockers_in.clone(),
    };

    let mut values = Vec::new();
    if matches!(route, EulerRoute::Brute | EulerRoute::All) {
        match counts_bruteforce(facets.as_ref().unwrap(), budget) {
            Ok(counts) => {
                let chi = euler_bruteforce(&counts);
                doc.field("brute", big_value(&chi), format!("brute route: {chi}"));
                values.push(chi);
            }
            Err(err @ Error::GroundSetTooLarge { .. }) if route == EulerRoute::All => {
                doc.diagnostic(format!("brute route skipped: {err}"));
            }
            Err(err) => return Err(err.into()),
        }
    }
    if matches!(route, EulerRoute::Facets | EulerRoute::All) {
        let chi = euler_from_facets(facets.as_ref().unwrap(), budget)?;
        doc.field("facets", big_value(&chi), format!("facet route: {chi}"));
        values.push(chi);
    }
    if matches!(route, EulerRoute::Blockers | EulerRoute::All) {
        let chi = euler_from_blockers(blockers.as_ref().unwrap(), budget)?;
        doc.field("blockers", big_value(&chi), format!("blocker route: {chi}"));
        values.push(chi);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    if route == EulerRoute::All {
        doc.field("agree", json!(agree), format!("routes agree: {agree}"));
    }
    Ok((doc, agree))
}

fn cmd_dualize(
    source: &SourceArgs,
    direction: Option<Direction>,
    budget: &Budget,
) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("dualize");
    doc.set_file_mode();
    let direction = match (direction, &source.facets, &source.blockers) {
        (Some(d), _, _) => d,
        (None, Some(_), None) => Direction::F2m,
        (None, None, Some(_)) => Direction::M2f,
        _ => {
            return Err(Failure::Domain(
                "direction is ambiguous; pass --direction f2m or m2f".to_string(),
            ))
        }
    };
    let (facets, blockers) = load_source(&mut doc, source)?;
    let (result, role) = match direction {
        Direction::F2m => {
            let f = facets
                .ok_or_else(|| Failure::Domain("--direction f2m needs --facets".to_string()))?;
            (blockers_from_facets(&f, budget)?, "blockers")
        }
        Direction::M2f => {
            let b = blockers
                .ok_or_else(|| Failure::Domain("--direction m2f needs --blockers".to_string()))?;
            (facets_from_blockers(&b, budget)?, "facets")
        }
    };
    doc.set_n(result.n().get());
    // Human output is a ready-to-use family file.
    let file_text = write_family(result.family());
    doc.field(
        role,
        antichain_value(&result),
        file_text.trim_end().to_string(),
    );
    Ok((doc, true))
}

fn cmd_check_dual(
    facets_path: &Path,
    blockers_path: &Path,
    budget: &Budget,
) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("check-dual");
    let facets_in = load(facets_path, Role::Facets)?;
    register(&mut doc, &facets_in, Role::Facets);
    let blockers_in = load(blockers_path, Role::Blockers)?;
    register(&mut doc, &blockers_in, Role::Blockers);
    if facets_in.antichain.n() != blockers_in.antichain.n() {
        return Err(Failure::Domain(format!(
            "ground size mismatch: facets file has n={}, blockers file has n={}",
            facets_in.antichain.n(),
            blockers_in.antichain.n()
        )));
    }
    doc.set_n(facets_in.antichain.n().get());

    let verdict = is_dual_pair(&facets_in.antichain, &blockers_in.antichain, budget)?;
    doc.field(
        "dual",
        json!(verdict.dual),
        format!("dual: {}", verdict.dual),
    );
    if let Some(evidence) = &verdict.evidence {
        let certificate = match evidence {
            NonDualEvidence::JointSizeBelowOne {
                facet_side,
                blocker_side,
            } => json!({
                "kind": "joint-size-below-one",
                "facet_side": dyadic_value(facet_side),
                "blocker_side": dyadic_value(blocker_side),
            }),
            NonDualEvidence::BlockerInsideFacet { blocker, facet } => json!({
                "kind": "blocker-inside-facet",
                "blocker": face_value(blocker),
                "facet": face_value(facet),
            }),
            NonDualEvidence::Witness { face } => json!({
                "kind": "witness-face",
                "face": face_value(face),
            }),
        };
        doc.field(
            "certificate",
            certificate,
            format!("certificate: {evidence}"),
        );
    }
    Ok((doc, verdict.dual))
}

fn cmd_alexander(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("alexander");
    let pair = resolve_pair(&mut doc, source, budget)?;
    doc.set_n(pair.n().get());
    let dual = alexander_dual(&pair);
    doc.field(
        "facets",
        antichain_value(dual.facets()),
        format!("dual facets: {}", render_members(dual.facets().members())),
    );
    doc.field(
        "blockers",
        antichain_value(dual.blockers()),
        format!(
            "dual blockers: {}",
            render_members(dual.blockers().members())
        ),
    );
    Ok((doc, true))
}

fn cmd_prop2(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("prop2");
    let pair = resolve_pair(&mut doc, source, budget)?;
    let n = pair.n().get();
    doc.set_n(n);
    let counts = counts_from_facets(pair.facets(), budget)?;
    let dual = alexander_dual(&pair);
    let dual_counts = counts_from_facets(dual.facets(), budget)?;

    let mut rows = Vec::new();
    let mut holds = true;
    for ell in 0..=n {
        let a = counts.count(ell);
        let a_dual = dual_counts.count(n - ell);
        let expected = downset::binom::binomial(n, ell as isize);
        let row_ok = &a + &a_dual == expected;
        holds &= row_ok;
        doc.human_line(format!(
            "card {ell}: {a} + {a_dual} = {} (C({n},{ell}) = {expected})",
            &a + &a_dual
        ));
        rows.push(json!({
            "card": ell,
            "count": big_value(&a),
            "dual_count": big_value(&a_dual),
            "binomial": big_value(&expected),
            "holds": row_ok,
        }));
    }
    doc.field("rows", Value::Array(rows), String::new());
    doc.field("holds", json!(holds), format!("identity holds: {holds}"));
    Ok((doc, holds))
}

fn cmd_bound(
    facets_path: &Path,
    x: &str,
    y: &str,
    budget: &Budget,
) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("bound");
    let input = load(facets_path, Role::Facets)?;
    register(&mut doc, &input, Role::Facets);
    doc.set_n(input.antichain.n().get());
    let x: Dyadic = x
        .parse()
        .map_err(|e| Failure::Domain(format!("--x: {e}")))?;
    let y: Dyadic = y
        .parse()
        .map_err(|e| Failure::Domain(format!("--y: {e}")))?;
    let (lhs, rhs, holds) = downset::union_bound_check(&input.antichain, &x, &y, budget)?;
    doc.field("x", dyadic_value(&x), format!("x: {x}"));
    doc.field("y", dyadic_value(&y), format!("y: {y}"));
    doc.field("lhs", dyadic_value(&lhs), format!("H(x,y) = {lhs}"));
    doc.field("rhs", dyadic_value(&rhs), format!("facet sum = {rhs}"));
    doc.field("holds", json!(holds), format!("bound holds: {holds}"));
    Ok((doc, holds))
}

fn cmd_joint_size(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("joint-size");
    let pair = resolve_pair(&mut doc, source, budget)?;
    doc.set_n(pair.n().get());
    let (facet_side, blocker_side, holds) = joint_size_inequality(&pair);
    let total = &facet_side + &blocker_side;
    doc.field(
        "facet_side",
        dyadic_value(&facet_side),
        format!("dual-blocker sum: {facet_side}"),
    );
    doc.field(
        "blocker_side",
        dyadic_value(&blocker_side),
        format!("blocker sum: {blocker_side}"),
    );
    doc.field("total", dyadic_value(&total), format!("total: {total}"));
    doc.field("holds", json!(holds), format!("total >= 1: {holds}"));
    Ok((doc, holds))
}

fn cmd_deviation(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("deviation");
    let pair = resolve_pair(&mut doc, source, budget)?;
    doc.set_n(pair.n().get());
    let (facet_side, blocker_side) = deviation_identity(&pair, budget)?;
    let total = &facet_side + &blocker_side;
    let holds = total == Dyadic::one();
    doc.field(
        "facet_side",
        dyadic_value(&facet_side),
        format!("dual-blocker sum: {facet_side}"),
    );
    doc.field(
        "blocker_side",
        dyadic_value(&blocker_side),
        format!("blocker sum: {blocker_side}"),
    );
    doc.field("total", dyadic_value(&total), format!("total: {total}"));
    doc.field("holds", json!(holds), format!("total == 1: {holds}"));
    Ok((doc, holds))
}

fn cmd_enumerate(source: &SourceArgs, budget: &Budget) -> Result<(Document, bool), Failure> {
    let mut doc = Document::new("enumerate");
    doc.set_file_mode();
    let (facets, blockers) = load_source(&mut doc, source)?;
    let downset = match (&facets, &blockers) {
        (Some(f), _) => enumerate_downset(f, budget)?,
        (None, Some(b)) => enumerate_downset_from_blockers(b, budget)?,
        (None, None) => unreachable!(),
    };
    let mut agree = true;
    if let Some(b) = &blockers {
        if facets.is_some() && downset != enumerate_downset_from_blockers(b, budget)? {
            doc.diagnostic(
                "facet and blocker routes disagree; the inputs are not a dual pair".to_string(),
            );
            agree = false;
        }
    }
    doc.field(
        "count",
        json!(downset.len()),
        format!("# {} face(s)", downset.len()),
    );
    // Human output doubles as a family file.
    doc.field(
        "faces",
        output::family_value(&downset),
        write_family(&downset).trim_end().to_string(),
    );
    Ok((doc, agree))
}
