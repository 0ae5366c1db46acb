use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use super::{
    read_input, ClassifyArgs, CliError, Command, EnumerateArgs, FamilyArgs, InvariantsArgs, Outcome, SeparateArgs,
    StargraphArgs,
};
use crate::classify::{self, EquivalenceClass, RowCheck};
use crate::enumerate::{self, CandidateConstraints};
use crate::family::{self, FamilyParams, KnnVerdict, PairCountRow};
use crate::lowindex::{self, Limits, LowIndexError, SeparationWitness, SubgroupMode};
use crate::presentation::Presentation;
use crate::registry;
use crate::stargraph::{self, GraphAnalysis, GraphExport, SpecialCertificate, StarGraph};
use crate::words::Word;

pub(super) fn run(cmd: &Command, json: bool) -> Result<Outcome, CliError> {
    match cmd {
        Command::Enumerate(a) => enumerate_cmd(a, json),
        Command::Classify(a) => classify_cmd(a, json),
        Command::Family(a) => family_cmd(a, json),
        Command::Invariants(a) => invariants_cmd(a, json),
        Command::Separate(a) => separate_cmd(a, json),
        Command::Stargraph(a) => stargraph_cmd(a, json),
    }
}

fn render<R: Serialize>(report: &R, json: bool, text: impl FnOnce(&R) -> String) -> String {
    if json {
        serde_json::to_string_pretty(report).expect("report serializes") + "\n"
    } else {
        text(report)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn limit_error(e: LowIndexError) -> CliError {
    match e {
        LowIndexError::IndexBound { .. } => CliError::Limit(e.to_string()),
        LowIndexError::ZeroIndex => CliError::Usage(e.to_string()),
    }
}

fn enumerate_cmd(a: &EnumerateArgs, json: bool) -> Result<Outcome, CliError> {
    let report = enumerate::enumeration_report(&CandidateConstraints::default(), a.mode);
    let list: String = report.words.iter().map(|w| format!("{w}\n")).collect();
    let to_stdout = a.output == "-";
    let stdout = render(&report, json, |r| {
        if to_stdout {
            return list.clone();
        }
        let mut s = String::new();
        let _ = writeln!(s, "candidates: {}", r.candidates);
        let _ = writeln!(s, "passing proxy filter: {}", r.proxy);
        let _ = writeln!(s, "passing exact filter: {}", r.exact);
        let _ = writeln!(s, "filters agree: {}", yes(r.filters_agree));
        let _ = writeln!(s, "wrote {} words to {}", r.words.len(), a.output);
        s
    });
    let files = if to_stdout { Vec::new() } else { vec![(a.output.clone(), list.into_bytes())] };
    Ok(Outcome { stdout, files, complete: true })
}

/// Reads one word per line; blank lines and `#` comments are skipped.
fn parse_word_list(text: &str) -> Result<Vec<Word>, CliError> {
    let mut seen: HashMap<Word, usize> = HashMap::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let w = Word::parse(body, 3).map_err(|e| CliError::Input { line, message: e.to_string() })?;
        if w.is_empty() || !w.is_cyclically_reduced() {
            return Err(CliError::Input { line, message: format!("{body} is not a cyclically reduced word") });
        }
        if let Some(first) = seen.insert(w.clone(), line) {
            return Err(CliError::Input { line, message: format!("{body} duplicates line {first}") });
        }
        out.push(w);
    }
    Ok(out)
}

#[derive(Serialize)]
struct ClassifyReport {
    source: String,
    words: usize,
    classes: Vec<EquivalenceClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<RowCheck>>,
}

fn classify_cmd(a: &ClassifyArgs, json: bool) -> Result<Outcome, CliError> {
    let (source, words) = match &a.input {
        None => ("builtin".to_string(), registry::admissible_words()),
        Some(path) => (path.clone(), parse_word_list(&read_input(path)?)?),
    };
    let classes = classify::partition(&words).map_err(|e| CliError::Usage(e.to_string()))?;
    let table = a.check_table.then(classify::check_table_rows);
    let complete = table.as_ref().is_none_or(|rows| rows.iter().all(RowCheck::ok));
    let report = ClassifyReport { source, words: words.len(), classes, table };
    let stdout = render(&report, json, |r| {
        let mut s = String::new();
        let _ = writeln!(s, "input: {} words ({})", r.words, r.source);
        let sizes: Vec<String> = r.classes.iter().map(|c| c.members.len().to_string()).collect();
        let _ = writeln!(s, "classes: {} (sizes {})", r.classes.len(), sizes.join(", "));
        for (i, c) in r.classes.iter().enumerate() {
            let _ = writeln!(s, "\nclass {}: representative {}", i + 1, c.representative);
            for m in &c.members {
                let _ = writeln!(s, "  {:<11} {}", m.to_compact(), c.witnesses[m]);
            }
        }
        if let Some(rows) = &r.table {
            let passed = rows.iter().filter(|row| row.ok()).count();
            let _ = writeln!(s, "\ntable replay: {passed} of {} pass", rows.len());
            for row in rows {
                let found = match (&row.witness, &row.amended) {
                    (Some(w), _) => format!("replayed {w}  ok"),
                    (None, Some(w)) => format!("FAIL, validates with an added inversion: {w}"),
                    (None, None) => "FAIL".to_string(),
                };
                let _ = writeln!(
                    s,
                    "  R{:<2} {} -> {}  stated {}  {found}",
                    row.class,
                    row.word.to_exponent(),
                    row.target.to_exponent(),
                    row.stated.unwrap_or("(no row)"),
                );
            }
        }
        s
    });
    Ok(Outcome { stdout, files: Vec::new(), complete })
}

#[derive(Serialize)]
struct FamilyReport {
    n: usize,
    alpha: usize,
    presentation: String,
    relator: String,
    length: usize,
    star_graph: KnnVerdict,
    certificate: Option<SpecialCertificate>,
    /// `k + 2m < mk` with `m = 2`, evaluated when the star-graph is `K_{n,n}`, `n ≥ 2`.
    hyperbolic: bool,
    pair_counts: Vec<PairCountRow>,
}

fn family_cmd(a: &FamilyArgs, json: bool) -> Result<Outcome, CliError> {
    if a.n > a.max_n {
        return Err(CliError::Limit(format!("n = {} exceeds the configured bound {}", a.n, a.max_n)));
    }
    let params = FamilyParams::new(a.n, a.alpha).map_err(|e| CliError::Usage(e.to_string()))?;
    let p = family::presentation(params);
    let relator = &p.relators()[0];
    let verdict = family::verify_knn(a.n, a.alpha).map_err(|e| CliError::Usage(e.to_string()))?;
    let hyperbolic = verdict.ok && a.n >= 2 && stargraph::hyperbolic_flag(2, relator.len());
    let report = FamilyReport {
        n: a.n,
        alpha: a.alpha,
        presentation: p.to_string(),
        relator: relator.to_indexed(),
        length: relator.len(),
        certificate: stargraph::check_special(&p),
        star_graph: verdict,
        hyperbolic,
        pair_counts: family::pair_count_table(a.n),
    };
    let stdout = render(&report, json, |r| {
        let mut s = String::new();
        let _ = writeln!(s, "presentation: {}", r.presentation);
        let _ = writeln!(s, "relator: {}", r.relator);
        let _ = writeln!(s, "length: {}", r.length);
        let _ = writeln!(
            s,
            "star-graph is K_{{{n},{n}}} with multiplicity {alpha}: {}",
            yes(r.star_graph.ok),
            n = r.n,
            alpha = r.alpha
        );
        let _ = writeln!(s, "distinct adjacency pairs: {}", r.star_graph.distinct_pairs);
        match &r.certificate {
            Some(c) => {
                let _ = writeln!(s, "special: {c}");
            }
            None => {
                let _ = writeln!(s, "special: no");
            }
        }
        let _ = writeln!(s, "k + 2m < mk: {}", r.hyperbolic);
        if !r.pair_counts.is_empty() {
            let _ = writeln!(s, "\n{:>4} {:>6} {:>5} {:>5}", "n", "pairs", "new", "2n-1");
            for row in &r.pair_counts {
                let _ = writeln!(s, "{:>4} {:>6} {:>5} {:>5}", row.n, row.pairs, row.new_pairs, row.expected_new);
            }
        }
        s
    });
    Ok(Outcome { stdout, files: Vec::new(), complete: true })
}

fn builtin_group(g: usize) -> Result<Presentation, CliError> {
    if !(1..=12).contains(&g) {
        return Err(CliError::Usage(format!("group {g} is not one of 1..12")));
    }
    Ok(registry::group(g - 1))
}

#[derive(Serialize)]
struct IndexRow {
    index: usize,
    subgroups: usize,
    classes: usize,
    /// Multiplicities under the selected mode.
    invariants: BTreeMap<String, usize>,
}

#[derive(Serialize)]
struct InvariantsReport {
    presentation: String,
    max_index: usize,
    mode: SubgroupMode,
    indices: Vec<IndexRow>,
}

fn invariants_cmd(a: &InvariantsArgs, json: bool) -> Result<Outcome, CliError> {
    let p = match a.group {
        Some(g) => builtin_group(g)?,
        None => {
            let text = a.relator.join(",");
            Presentation::parse(&text, a.rank).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    let limits = Limits { max_index_bound: a.index_bound };
    let prof = lowindex::invariant_profile_with(&p, a.max_index, a.mode, limits).map_err(limit_error)?;
    let indices = (1..=a.max_index)
        .map(|k| IndexRow {
            index: k,
            subgroups: prof.subgroup_count(k),
            classes: prof.classes_at(k).values().sum(),
            invariants: prof.multisets(a.mode)[k - 1].iter().map(|(g, &n)| (g.to_string(), n)).collect(),
        })
        .collect();
    let report = InvariantsReport { presentation: p.to_string(), max_index: a.max_index, mode: a.mode, indices };
    let stdout = render(&report, json, |r| {
        let mut s = String::new();
        let _ = writeln!(s, "presentation: {}", r.presentation);
        let unit = match r.mode {
            SubgroupMode::All => "subgroups",
            SubgroupMode::ConjugacyClasses => "conjugacy classes",
        };
        let _ = writeln!(s, "counting: {unit}");
        for row in &r.indices {
            let _ = writeln!(s, "index {}: {} subgroups in {} classes", row.index, row.subgroups, row.classes);
            for (g, n) in &row.invariants {
                let _ = writeln!(s, "  {g:<22} {n}");
            }
        }
        s
    });
    Ok(Outcome { stdout, files: Vec::new(), complete: true })
}

#[derive(Serialize)]
struct PairReport {
    g: usize,
    h: usize,
    witness: Option<SeparationWitness>,
}

#[derive(Serialize)]
struct SeparateReport {
    max_index: usize,
    groups: Vec<(usize, String)>,
    pairs: Vec<PairReport>,
    separated: usize,
    unseparated: Vec<(usize, usize)>,
}

fn separate_cmd(a: &SeparateArgs, json: bool) -> Result<Outcome, CliError> {
    let ids: Vec<usize> = if a.groups.is_empty() { (1..=12).collect() } else { a.groups.clone() };
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ids.len() {
        return Err(CliError::Usage("a group is listed twice".to_string()));
    }
    let ps = sorted.iter().map(|&g| builtin_group(g)).collect::<Result<Vec<_>, _>>()?;
    let limits = Limits { max_index_bound: a.index_bound };
    let profs = lowindex::profiles_with(&ps, a.max_index, SubgroupMode::All, limits).map_err(limit_error)?;
    let m = lowindex::matrix_from_profiles(&profs, a.max_index);
    let pairs: Vec<PairReport> = m
        .cells
        .iter()
        .map(|(&(i, j), w)| PairReport { g: sorted[i], h: sorted[j], witness: w.clone() })
        .collect();
    let unseparated: Vec<(usize, usize)> = m.unseparated().into_iter().map(|(i, j)| (sorted[i], sorted[j])).collect();
    let report = SeparateReport {
        max_index: a.max_index,
        groups: sorted.iter().zip(&ps).map(|(&g, p)| (g, p.to_string())).collect(),
        separated: pairs.len() - unseparated.len(),
        pairs,
        unseparated,
    };
    let complete = report.unseparated.is_empty();
    let stdout = render(&report, json, |r| {
        let mut s = String::new();
        for (g, p) in sorted.iter().zip(&ps) {
            let _ = writeln!(s, "{:<4} {p}", format!("G{g}"));
        }
        let _ = writeln!(s, "\nmax index: {}", r.max_index);
        let _ = writeln!(s, "separated pairs: {} of {}\n", r.separated, r.pairs.len());
        for pr in &r.pairs {
            let label = format!("G{} G{}", pr.g, pr.h);
            match &pr.witness {
                Some(w) => {
                    let _ = writeln!(s, "{label:<8} {w}");
                }
                None => {
                    let _ = writeln!(s, "{label:<8} not separated");
                }
            }
        }
        let _ = writeln!(s, "\nseparating index:");
        let _ = write!(s, "{:5}", "");
        for g in &sorted {
            let _ = write!(s, "{:>4}", format!("G{g}"));
        }
        let _ = writeln!(s);
        for (i, g) in sorted.iter().enumerate() {
            let _ = write!(s, "{:<5}", format!("G{g}"));
            for j in 0..sorted.len() {
                let cell = if i == j {
                    ".".to_string()
                } else {
                    m.get(i, j).map_or("-".to_string(), |w| w.index.to_string())
                };
                let _ = write!(s, "{cell:>4}");
            }
            let _ = writeln!(s);
        }
        if !r.unseparated.is_empty() {
            let list: Vec<String> = r.unseparated.iter().map(|(g, h)| format!("G{g}/G{h}")).collect();
            let _ = writeln!(s, "\nunseparated: {}", list.join(", "));
        }
        s
    });
    Ok(Outcome { stdout, files: Vec::new(), complete })
}

#[derive(Serialize)]
struct StargraphReport {
    presentation: String,
    concise: String,
    graph: GraphExport,
    analysis: GraphAnalysis,
    certificate: Option<SpecialCertificate>,
    hyperbolic: Option<bool>,
}

fn stargraph_cmd(a: &StargraphArgs, json: bool) -> Result<Outcome, CliError> {
    let text = match (&a.relators, &a.file) {
        (Some(r), _) if r != "-" => r.clone(),
        (_, Some(f)) => read_input(&f.display().to_string())?,
        _ => read_input("-")?,
    };
    let words = text
        .split([',', '\n', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Word::parse(s, a.rank))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let raw = Presentation::from_reduced(a.rank, words.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    let p = stargraph::concise_refine_relators(a.rank, &words);
    let g = StarGraph::build(&p);
    let analysis = g.simple_graph().analyze();
    let certificate = stargraph::check_special(&p);
    let report = StargraphReport {
        presentation: raw.to_string(),
        concise: p.to_string(),
        graph: g.export(),
        hyperbolic: certificate.map(|c| stargraph::hyperbolic_flag(c.m, c.k)),
        certificate,
        analysis,
    };
    let adjacency = g.to_adjacency_text();
    let stdout = render(&report, json, |r| {
        let mut s = String::new();
        let _ = writeln!(s, "presentation: {}", r.presentation);
        if r.concise != r.presentation {
            let _ = writeln!(s, "concise: {}", r.concise);
        }
        let _ = writeln!(s, "\nadjacency:");
        for line in adjacency.lines() {
            let _ = writeln!(s, "  {line}");
        }
        let _ = writeln!(s, "\nedge multiplicities:");
        for e in &r.graph.edges {
            let _ = writeln!(s, "  {} - {}  {}", e.u, e.v, e.multiplicity);
        }
        let an = &r.analysis;
        let girth = an.girth.map_or("infinite".to_string(), |g| g.to_string());
        let diameters: Vec<String> = an.component_diameters.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "\ngirth: {girth}");
        match an.diameter {
            Some(d) => {
                let _ = writeln!(s, "diameter: {d}");
            }
            None => {
                let _ = writeln!(s, "component diameters: {}", diameters.join(", "));
            }
        }
        let _ = writeln!(s, "components: {} (isomorphic: {})", an.components, yes(an.components_isomorphic));
        let _ = writeln!(s, "bipartite: {}", yes(an.bipartite));
        let _ = writeln!(s, "minimum degree: {}", an.min_degree);
        match (&r.certificate, r.hyperbolic) {
            (Some(c), Some(h)) => {
                let _ = writeln!(s, "special: {c}");
                let _ = writeln!(s, "k + 2m < mk: {h}");
            }
            _ => {
                let _ = writeln!(s, "special: no");
            }
        }
        s
    });
    Ok(Outcome { stdout, files: Vec::new(), complete: true })
}
