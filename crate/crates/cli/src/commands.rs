//! Command handlers. Each builds the machine record first and renders its
//! text from the same data, so every number in text mode is also in the
//! record.

use crate::record::{CommandResult, RecordBuilder};
use serde_json::json;
use std::io::Read;
use std::path::{Path, PathBuf};
use triflip::bounds::{lemma1_bound, max_common_edges, theorem_bound, SearchBudget};
use triflip::constructions::{build_g1, build_g2, check_lemma2_structure, host_max_deg6};
use triflip::flipgraph::{enumerate_with_representatives, EnumerateOptions, FlipGraphCatalog};
use triflip::matching::max_matching;
use triflip::pathcover::{min_path_cover_exact, path_cover, path_cover_mapping};
use triflip::storage;
use triflip::{canonical_code, format, MirrorMode, Triangulation, Vertex};

pub struct CliError(pub String);

macro_rules! cli_error_from {
    ($($ty:ty),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        })*
    };
}

cli_error_from!(
    std::io::Error,
    triflip::kernel::ValidationError,
    triflip::kernel::FlipError,
    triflip::kernel::SequenceError,
    triflip::format::ParseError,
    triflip::constructions::ConstructionError,
    triflip::flipgraph::EngineError,
    triflip::storage::CatalogIoError,
    triflip::bounds::BoundsError,
);

type CmdResult = Result<CommandResult, CliError>;

pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError(e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))
    }
}

fn read_triangulation(path: &str) -> Result<Triangulation, CliError> {
    Ok(format::parse(&read_input(path)?)?)
}

fn write_artifact(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn out_name(out: &Option<PathBuf>) -> String {
    out.as_ref().map_or_else(|| "-".into(), |p| p.display().to_string())
}

pub fn gen(family: &str, n: usize, mirror: MirrorMode, out: &Option<PathBuf>) -> CmdResult {
    let (artifact, builder) = match family {
        "g1" => {
            let g1 = build_g1(n)?;
            let text = format::write_colored(&g1);
            let b = RecordBuilder::new("gen")
                .n(n)
                .value("blue_count", g1.blue_count())
                .value("red_count", n - g1.blue_count())
                .value("edges", g1.triangulation().edge_count())
                .value("max_degree", g1.triangulation().max_degree());
            (text, b)
        }
        "g2" => {
            let g2 = build_g2(n)?;
            let text = format::write(&g2.tri);
            let b = RecordBuilder::new("gen")
                .n(n)
                .value("apex_a", g2.apex_a)
                .value("apex_b", g2.apex_b)
                .value("edges", g2.tri.edge_count());
            (text, b)
        }
        "host" => {
            let host = host_max_deg6(n)?;
            let text = format::write(&host);
            let b = RecordBuilder::new("gen")
                .n(n)
                .value("edges", host.edge_count())
                .value("max_degree", host.max_degree());
            (text, b)
        }
        other => return Err(CliError(format!("unknown family `{other}`"))),
    };
    write_artifact(out, &artifact)?;
    let text = if out.is_some() {
        format!("wrote {} ({} vertices)\n", out_name(out), n)
    } else {
        artifact.clone()
    };
    Ok(builder
        .mode("family", family)
        .mode("mirror", mirror.as_str())
        .witness("triangulation", artifact)
        .finish(text))
}

pub fn validate(input: &str) -> CmdResult {
    let text = read_input(input)?;
    let t = format::parse(&text)?;
    let n = t.n();
    let min_degree = (0..n as Vertex).map(|v| t.rotation(v).len()).min().unwrap();
    let out = format!(
        "valid triangulation: n={} edges={} faces={} max_degree={} min_degree={}\n",
        n,
        t.edge_count(),
        t.faces().len(),
        t.max_degree(),
        min_degree
    );
    Ok(RecordBuilder::new("validate")
        .n(n)
        .value("edges", t.edge_count())
        .value("faces", t.faces().len())
        .value("max_degree", t.max_degree())
        .value("min_degree", min_degree)
        .finish(out))
}

pub fn flip_cmd(input: &str, edge: (Vertex, Vertex), out: &Option<PathBuf>) -> CmdResult {
    let t = read_triangulation(input)?;
    let (a, b) = edge;
    let c = t.successor(b, a);
    let d = t.successor(a, b);
    let flipped = t.flip(a, b)?;
    let artifact = format::write(&flipped);
    write_artifact(out, &artifact)?;
    let text = if out.is_some() {
        format!("flipped ({a},{b}); wrote {}\n", out_name(out))
    } else {
        artifact.clone()
    };
    Ok(RecordBuilder::new("flip")
        .n(t.n())
        .value("removed", json!([a, b]))
        .value("inserted", json!([c, d]))
        .witness("triangulation", artifact)
        .finish(text))
}

pub fn apply_cmd(input: &str, flips: &[(Vertex, Vertex)], out: &Option<PathBuf>) -> CmdResult {
    let t = read_triangulation(input)?;
    let result = t.apply_sequence(flips)?;
    let artifact = format::write(&result);
    write_artifact(out, &artifact)?;
    let text = if out.is_some() {
        format!("applied {} flips; wrote {}\n", flips.len(), out_name(out))
    } else {
        artifact.clone()
    };
    Ok(RecordBuilder::new("apply")
        .n(t.n())
        .value("flips_applied", flips.len())
        .witness("triangulation", artifact)
        .finish(text))
}

pub fn canon(input: &str, mirror: MirrorMode) -> CmdResult {
    let t = read_triangulation(input)?;
    let code = canonical_code(&t, mirror);
    let line = code.to_line();
    Ok(RecordBuilder::new("canon")
        .n(t.n())
        .mode("mirror", mirror.as_str())
        .value("code_len", code.digits().len())
        .witness("code", line.clone())
        .finish(format!("{line}\n")))
}

pub fn enumerate_cmd(
    n: usize,
    mirror: MirrorMode,
    workers: usize,
    limit: Option<usize>,
    catalog_out: &Option<PathBuf>,
) -> CmdResult {
    let opts = EnumerateOptions { mirror, workers, node_limit: limit };
    let (cat, _) = enumerate_with_representatives(n, opts)?;
    if let Some(path) = catalog_out {
        storage::save(&cat, path)?;
    }
    let mut text = format!(
        "flip graph n={} (mirror {}): {} nodes, {} edges\n",
        n,
        mirror.as_str(),
        cat.node_count(),
        cat.edge_count()
    );
    if let Some(path) = catalog_out {
        text.push_str(&format!("saved catalog to {}\n", path.display()));
    }
    Ok(RecordBuilder::new("enumerate")
        .n(n)
        .mode("mirror", mirror.as_str())
        .mode("workers", workers)
        .value("nodes", cat.node_count())
        .value("edges", cat.edge_count())
        .witness("catalog", catalog_out.as_ref().map(|p| p.display().to_string()))
        .finish(text))
}

fn load_catalog(path: &Path, mirror: Option<MirrorMode>) -> Result<FlipGraphCatalog, CliError> {
    Ok(storage::load(path, mirror)?)
}

pub fn distance_cmd(
    catalog: &Path,
    mirror: Option<MirrorMode>,
    a: &str,
    b: &str,
) -> CmdResult {
    let cat = load_catalog(catalog, mirror)?;
    let t1 = read_triangulation(a)?;
    let t2 = read_triangulation(b)?;
    let d = cat.distance(&t1, &t2)?;
    Ok(RecordBuilder::new("distance")
        .n(cat.n())
        .mode("mirror", cat.mirror_mode().as_str())
        .value("distance", d)
        .finish(format!("flip distance: {d}\n")))
}

pub fn diameter_cmd(catalog: &Path, mirror: Option<MirrorMode>) -> CmdResult {
    let cat = load_catalog(catalog, mirror)?;
    let (d, (a, b)) = cat.diameter()?;
    Ok(RecordBuilder::new("diameter")
        .n(cat.n())
        .mode("mirror", cat.mirror_mode().as_str())
        .value("diameter", d)
        .value("witness_ids", json!([a, b]))
        .witness("pair", json!([cat.code(a).to_line(), cat.code(b).to_line()]))
        .finish(format!("diameter: {d} (witness nodes {a} and {b})\n")))
}

pub fn maxcommon_cmd(
    a: &str,
    b: &str,
    exact: bool,
    budget_nodes: u64,
    budget_ms: Option<u64>,
    out: &Option<PathBuf>,
) -> CmdResult {
    let g1 = read_triangulation(a)?;
    let g2 = read_triangulation(b)?;
    let budget = if exact {
        SearchBudget::unlimited()
    } else {
        SearchBudget { max_nodes: Some(budget_nodes), max_millis: budget_ms }
    };
    let mc = max_common_edges(&g1, &g2, budget)?;
    let lb = lemma1_bound(&g1, &g2, &mc)?;
    let witness_text = mc.witness.to_witness_text();
    write_artifact(out, &witness_text)?;
    let text = format!(
        "max common edges: lower={} upper={} ({})\nflip lower bound: {}\n{}",
        mc.lower,
        mc.upper,
        if mc.exact { "exact" } else { "budget exhausted" },
        lb.flips,
        witness_text
    );
    Ok(RecordBuilder::new("maxcommon")
        .n(g1.n())
        .mode("exact", mc.exact)
        .value("lower", mc.lower)
        .value("upper", mc.upper)
        .value("flip_lower_bound", lb.flips)
        .value("nodes_explored", mc.nodes_explored)
        .witness("bijection", witness_text)
        .finish(text))
}

pub fn bound_cmd(n: u64) -> CmdResult {
    let b = theorem_bound(n)?;
    let relaxed = match b.relaxed_integer() {
        Some(v) => v.to_string(),
        None => format!("{}/3", b.relaxed_numerator),
    };
    let text = format!(
        "flip lower bound for n={}: {}\nrelaxed form (7n-102)/3: {}\n",
        n, b.flip_lower_bound, relaxed
    );
    Ok(RecordBuilder::new("bound")
        .n(n as usize)
        .value("flip_lower_bound", b.flip_lower_bound)
        .value("relaxed_form", "(7n-102)/3")
        .value("relaxed_numerator", b.relaxed_numerator)
        .value("relaxed_denominator", 3)
        .value("relaxed_integer", b.relaxed_integer())
        .finish(text))
}

pub fn pathcover_cmd(input: &str, exact: bool, map_g2: bool) -> CmdResult {
    let t = read_triangulation(input)?;
    let n = t.n();
    let cover = path_cover(&t);
    let p = cover.num_paths();
    let mut text = format!("path cover: {p} paths\n");
    for (i, path) in cover.paths().iter().enumerate() {
        let joined: Vec<String> = path.iter().map(|v| v.to_string()).collect();
        text.push_str(&format!("path {i}: {}\n", joined.join(" ")));
    }
    let mut builder = RecordBuilder::new("pathcover")
        .n(n)
        .mode("exact", exact)
        .value("paths", p)
        .witness("paths", json!(cover.paths()));
    if exact {
        let minimum = min_path_cover_exact(&t)?;
        text.push_str(&format!("exact minimum: {minimum}\n"));
        builder = builder.value("exact_minimum", minimum);
    }
    if map_g2 {
        let g2 = build_g2(n)?;
        let gamma = path_cover_mapping(&t, &cover, &g2)?;
        let guarantee = n.saturating_sub(p + 2);
        text.push_str(&format!(
            "double-apex mapping: c={} (guarantee {guarantee})\n",
            gamma.common()
        ));
        builder = builder
            .value("c_gamma", gamma.common())
            .value("c_gamma_guarantee", guarantee)
            .witness("bijection", gamma.to_witness_text());
    }
    Ok(builder.finish(text))
}

pub fn matching_cmd(input: &str) -> CmdResult {
    let t = read_triangulation(input)?;
    let n = t.n();
    let m = max_matching(&t);
    let floor_bound = (n + 4) / 3;
    let mut text = format!("maximum matching: size={} (floor((n+4)/3)={})\n", m.size(), floor_bound);
    for &(u, v) in m.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    Ok(RecordBuilder::new("matching")
        .n(n)
        .value("size", m.size())
        .value("floor_form", "floor((n+4)/3)")
        .value("floor_bound", floor_bound)
        .witness("edges", json!(m.edges()))
        .finish(text))
}

// ---------------------------------------------------------------------------
// verify: the small-scale soundness chain as a pass/fail table.
// ---------------------------------------------------------------------------

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

const EXPECTED_COUNTS: [usize; 8] = [1, 1, 2, 5, 14, 50, 233, 1249];

pub fn verify_cmd(nmax: usize, workers: usize) -> CmdResult {
    let nmax = nmax.clamp(4, 11);
    let mut checks: Vec<Check> = Vec::new();

    // Theorem arithmetic across the full sweep.
    {
        let mut ok = true;
        for n in 3u64..=1_000_000 {
            let b = theorem_bound(n).expect("n >= 3");
            if !b.holds() {
                ok = false;
                break;
            }
        }
        let spot = theorem_bound(30).expect("n >= 3");
        ok &= spot.flip_lower_bound == 36 && spot.relaxed_integer() == Some(36);
        checks.push(Check {
            name: "theorem-arithmetic",
            pass: ok,
            detail: "n=3..10^6, spot n=30 -> 36".into(),
        });
    }

    // G1 structure.
    {
        let mut failed = None;
        for n in (6..=500).chain([100_000]) {
            match build_g1(n).map_err(|e| e.to_string()).and_then(|g| {
                check_lemma2_structure(&g).map_err(|e| e.to_string()).map(|_| ())
            }) {
                Ok(()) => {}
                Err(e) => {
                    failed = Some(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        checks.push(Check {
            name: "g1-structure",
            pass: failed.is_none(),
            detail: failed.unwrap_or_else(|| "n=6..500 and n=10^5".into()),
        });
    }

    // Enumeration counts, reps reused by the later checks.
    let mut reps_by_n: Vec<(usize, FlipGraphCatalog, Vec<Triangulation>)> = Vec::new();
    {
        let mut ok = true;
        let mut detail = String::new();
        for n in 4..=nmax {
            let opts = EnumerateOptions { workers, ..Default::default() };
            let (cat, reps) = enumerate_with_representatives(n, opts)?;
            let expected = EXPECTED_COUNTS[n - 4];
            if cat.node_count() != expected {
                ok = false;
                detail = format!("n={n}: {} nodes, expected {expected}", cat.node_count());
                break;
            }
            detail = format!("counts match published values up to n={n}");
            reps_by_n.push((n, cat, reps));
        }
        checks.push(Check { name: "enumeration-counts", pass: ok, detail });
    }

    // Exact max-common vs BFS distances.
    {
        let mut violations = 0usize;
        let mut pairs = 0usize;
        for (n, cat, reps) in reps_by_n.iter().filter(|(n, _, _)| *n <= 8) {
            let dists = cat.all_distances()?;
            let all = (3 * n - 6) as u32;
            for i in 0..reps.len() {
                for j in i..reps.len() {
                    let mc = max_common_edges(&reps[i], &reps[j], SearchBudget::unlimited())?;
                    if !mc.exact || all - mc.upper > dists[i][j] {
                        violations += 1;
                    }
                    pairs += 1;
                }
            }
        }
        checks.push(Check {
            name: "soundness-chain",
            pass: violations == 0,
            detail: format!("{pairs} pairs, {violations} violations"),
        });
    }

    // One-flip Lipschitz over deterministic bijections and all flips.
    {
        let mut violations = 0usize;
        let mut trials = 0usize;
        for (n, _, reps) in reps_by_n.iter().filter(|(n, _, _)| *n <= 7) {
            let n = *n;
            let bijections: Vec<Vec<Vertex>> = vec![
                (0..n as Vertex).collect(),
                (0..n as Vertex).rev().collect(),
                (0..n as Vertex).map(|v| (v + 1) % n as Vertex).collect(),
            ];
            for t1 in reps {
                for t2 in reps {
                    for gamma in &bijections {
                        let before =
                            triflip::bounds::common_edges(t1, t2, gamma)?;
                        for (a, b) in t1.edges() {
                            if let Ok(f) = t1.flip(a, b) {
                                let after =
                                    triflip::bounds::common_edges(&f, t2, gamma)?;
                                if before.abs_diff(after) > 1 {
                                    violations += 1;
                                }
                                trials += 1;
                            }
                        }
                    }
                }
            }
        }
        checks.push(Check {
            name: "flip-lipschitz",
            pass: violations == 0,
            detail: format!("{trials} flip trials, {violations} violations"),
        });
    }

    // Section-3 mappings: matching floor and the path-cover guarantee.
    {
        let mut guarantee_violations = 0usize;
        let mut matching_findings = 0usize;
        let mut nodes = 0usize;
        for (n, _, reps) in reps_by_n.iter().filter(|(n, _, _)| (6..=10).contains(n)) {
            let n = *n;
            let g2 = build_g2(n)?;
            for t in reps {
                let m = max_matching(t);
                if !m.is_valid_for(t) || m.size() < (n + 4) / 3 {
                    matching_findings += 1;
                }
                let cover = path_cover(t);
                let gamma = path_cover_mapping(t, &cover, &g2)?;
                if (gamma.common() as usize) + cover.num_paths() + 2 < n {
                    guarantee_violations += 1;
                }
                nodes += 1;
            }
        }
        checks.push(Check {
            name: "section3-mappings",
            pass: guarantee_violations == 0,
            detail: format!(
                "{nodes} triangulations, {guarantee_violations} guarantee violations, {matching_findings} matching-floor findings"
            ),
        });
    }

    let all_pass = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!(
            "{:22} {}  {}\n",
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.detail
        ));
    }
    text.push_str(&format!("verify: {}\n", if all_pass { "PASS" } else { "FAIL" }));

    let checks_json: Vec<serde_json::Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
        .collect();
    let mut result = RecordBuilder::new("verify")
        .n(nmax)
        .mode("workers", workers)
        .value("all_pass", all_pass)
        .value("checks", checks_json)
        .finish(text);
    if !all_pass {
        result.exit_code = 1;
    }
    Ok(result)
}
