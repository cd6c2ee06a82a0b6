//! Reachability, path-count, and depth queries over a merged graph.
//!
//! Path counting asks how many distinct dependency paths lead from the root
//! to each vulnerable component; depth asks how many hops the shortest path
//! to each vulnerability takes. Counts use exact arbitrary-precision
//! integers — mid-size projects already produce six-figure counts — and
//! require the dependency edges to form a DAG, which [`assert_dag`] checks
//! up front, naming a concrete cycle when they do not. Depth queries are
//! plain BFS and tolerate cycles.
//!
//! Ties are broken lexicographically on vertex id everywhere, so all query
//! output is deterministic.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::model::{EdgeLabel, Severity, VDGraph, VertexLabel};

/// Distinct-path count from the root to one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountRecord {
    pub component_id: String,
    /// `name_version` display form.
    pub component_name: String,
    /// Exact count; at least 1 for any component reachable from the root.
    pub path_count: BigUint,
}

/// Shortest-path length from the root to one vulnerability, counting the
/// dependency hops plus the terminal vulnerability link. The minimum for a
/// non-root component is therefore 2.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DepthRecord {
    pub vulnerability_id: String,
    pub severity: Severity,
    pub depth: u64,
}

/// Severity buckets admitted by a filtered query. `Unknown` never matches:
/// it is incomparable with the ordered buckets and excluded from
/// severity-filtered queries by contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeverityFilter {
    include: [bool; 4],
}

impl SeverityFilter {
    /// Exactly one bucket. `exact(Unknown)` matches nothing.
    pub fn exact(severity: Severity) -> Self {
        let mut include = [false; 4];
        if let Some(rank) = severity.rank() {
            include[rank as usize] = true;
        }
        SeverityFilter { include }
    }

    /// Every bucket at or above `severity` in the total order.
    pub fn at_least(severity: Severity) -> Self {
        let mut include = [false; 4];
        if let Some(rank) = severity.rank() {
            for slot in include.iter_mut().skip(rank as usize) {
                *slot = true;
            }
        }
        SeverityFilter { include }
    }

    /// Widens the filter to also admit `critical`.
    pub fn with_critical(mut self) -> Self {
        self.include[3] = true;
        self
    }

    pub fn matches(&self, severity: Severity) -> bool {
        severity
            .rank()
            .is_some_and(|rank| self.include[rank as usize])
    }

    /// The admitted buckets in ascending order.
    pub fn buckets(&self) -> Vec<Severity> {
        [Severity::Low, Severity::Moderate, Severity::High, Severity::Critical]
            .into_iter()
            .filter(|s| self.matches(*s))
            .collect()
    }
}

/// The default filter admits exactly the `high` bucket.
impl Default for SeverityFilter {
    fn default() -> Self {
        SeverityFilter::exact(Severity::High)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    /// The dependency edges contain a cycle; `cycle` lists one concrete loop
    /// in traversal order. Path counting refuses to run on cyclic input.
    #[error("dependency edges form a cycle: {cycle:?}")]
    CyclicDependencies { cycle: Vec<String> },
    #[error("unknown component `{id}`")]
    UnknownComponent { id: String },
    #[error("unknown vulnerability `{id}`")]
    UnknownVulnerability { id: String },
    /// A vulnerability with no path from the root: impossible after a valid
    /// merge, so this signals a hand-built graph violating the reachability
    /// property.
    #[error("vulnerability `{id}` is not reachable from the root")]
    UnreachableVulnerability { id: String },
}

/// Dependency adjacency (outgoing `depn` edges), successors sorted by id.
fn depn_adjacency(graph: &VDGraph) -> BTreeMap<&str, Vec<&str>> {
    let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for edge in graph.edges() {
        if edge.label == EdgeLabel::Depn {
            adj.entry(edge.from.as_str())
                .or_default()
                .push(edge.to.as_str());
        }
    }
    // BTreeSet edge iteration is (from, to)-sorted, so each list is sorted.
    adj
}

/// Vulnerability adjacency: advisory id -> component ids carrying it.
fn has_v_reverse(graph: &VDGraph) -> BTreeMap<&str, Vec<&str>> {
    let mut rev: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for edge in graph.edges() {
        if edge.label == EdgeLabel::HasV {
            rev.entry(edge.to.as_str())
                .or_default()
                .push(edge.from.as_str());
        }
    }
    rev
}

/// Checks that the dependency edges form a DAG and returns a topological
/// order over the root and all components. On failure the error carries one
/// concrete cycle.
pub fn assert_dag(graph: &VDGraph) -> Result<Vec<String>, QueryError> {
    let adj = depn_adjacency(graph);
    let nodes: Vec<&str> = graph
        .vertices()
        .filter(|(_, v)| matches!(v.label, VertexLabel::Root | VertexLabel::Component))
        .map(|(id, _)| id)
        .collect();

    let mut in_degree: BTreeMap<&str, usize> = nodes.iter().map(|id| (*id, 0usize)).collect();
    for succs in adj.values() {
        for succ in succs {
            if let Some(d) = in_degree.get_mut(succ) {
                *d += 1;
            }
        }
    }

    let mut ready: BTreeSet<&str> = in_degree
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(id, _)| *id)
        .collect();
    let mut order: Vec<String> = Vec::with_capacity(nodes.len());

    while let Some(id) = ready.pop_first() {
        order.push(id.to_string());
        for succ in adj.get(id).map(Vec::as_slice).unwrap_or_default() {
            let d = in_degree.get_mut(succ).expect("endpoints are nodes");
            *d -= 1;
            if *d == 0 {
                ready.insert(succ);
            }
        }
    }

    if order.len() == nodes.len() {
        return Ok(order);
    }

    // Every node Kahn's algorithm left behind keeps at least one unprocessed
    // predecessor, so walking predecessors must eventually revisit a vertex;
    // the revisited stretch, reversed, is a concrete forward cycle.
    let remaining: BTreeSet<&str> = {
        let done: BTreeSet<&str> = order.iter().map(String::as_str).collect();
        nodes.iter().copied().filter(|id| !done.contains(id)).collect()
    };
    let mut reverse: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (from, succs) in &adj {
        for to in succs {
            if remaining.contains(from) && remaining.contains(to) {
                reverse.entry(to).or_default().push(from);
            }
        }
    }
    let start = *remaining.iter().next().expect("nonempty remainder");
    let mut walk: Vec<&str> = vec![start];
    let mut seen_at: BTreeMap<&str, usize> = BTreeMap::new();
    seen_at.insert(start, 0);
    loop {
        let current = *walk.last().expect("walk is nonempty");
        let next = reverse
            .get(current)
            .and_then(|preds| preds.first())
            .copied()
            .expect("a stuck node keeps an unprocessed predecessor");
        if let Some(&at) = seen_at.get(next) {
            let cycle = walk[at..].iter().rev().map(|s| s.to_string()).collect();
            return Err(QueryError::CyclicDependencies { cycle });
        }
        seen_at.insert(next, walk.len());
        walk.push(next);
    }
}

/// Path counts from the root to every node, by dynamic programming over a
/// topological order: `count(root) = 1` (the empty path), and each node adds
/// its count onto all of its dependency successors.
fn all_path_counts(graph: &VDGraph, order: &[String]) -> BTreeMap<String, BigUint> {
    let adj = depn_adjacency(graph);
    let mut counts: BTreeMap<String, BigUint> =
        order.iter().map(|id| (id.clone(), BigUint::ZERO)).collect();
    if let Some(root) = graph.root_id() {
        if let Some(c) = counts.get_mut(root) {
            *c = BigUint::from(1u8);
        }
    }
    for id in order {
        let current = counts.get(id).cloned().unwrap_or_default();
        if current == BigUint::ZERO {
            continue;
        }
        for succ in adj.get(id.as_str()).map(Vec::as_slice).unwrap_or_default() {
            if let Some(c) = counts.get_mut(*succ) {
                *c += &current;
            }
        }
    }
    counts
}

/// Number of distinct dependency paths from the root to `target`.
/// The root itself counts 1 (the empty path); components unreachable from
/// the root count 0.
pub fn count_paths(graph: &VDGraph, target: &str) -> Result<BigUint, QueryError> {
    let is_countable = graph.vertex(target).is_some_and(|v| {
        matches!(v.label, VertexLabel::Root | VertexLabel::Component)
    });
    if !is_countable {
        return Err(QueryError::UnknownComponent { id: target.to_string() });
    }
    let order = assert_dag(graph)?;
    Ok(all_path_counts(graph, &order)
        .remove(target)
        .unwrap_or_default())
}

/// Path counts for every component carrying at least one vulnerability in a
/// bucket admitted by `filter`, sorted by descending count then id.
pub fn path_counts_by_severity(
    graph: &VDGraph,
    filter: &SeverityFilter,
) -> Result<Vec<PathCountRecord>, QueryError> {
    let order = assert_dag(graph)?;
    let counts = all_path_counts(graph, &order);

    let mut flagged: BTreeSet<&str> = BTreeSet::new();
    for edge in graph.edges() {
        if edge.label != EdgeLabel::HasV {
            continue;
        }
        let severity = graph
            .vertex(&edge.to)
            .and_then(|v| v.payload.as_vulnerability())
            .map(|v| v.severity)
            .unwrap_or(Severity::Unknown);
        if filter.matches(severity) {
            flagged.insert(edge.from.as_str());
        }
    }

    let mut records: Vec<PathCountRecord> = flagged
        .into_iter()
        .map(|id| PathCountRecord {
            component_id: id.to_string(),
            component_name: graph
                .vertex(id)
                .and_then(|v| v.payload.as_component())
                .map(|c| c.name.clone())
                .unwrap_or_else(|| id.to_string()),
            path_count: counts.get(id).cloned().unwrap_or_default(),
        })
        .collect();
    records.sort_by(|a, b| {
        b.path_count
            .cmp(&a.path_count)
            .then_with(|| a.component_id.cmp(&b.component_id))
    });
    Ok(records)
}

/// BFS depths over dependency edges from the root. The root sits at depth 0;
/// vertices with no path from the root are absent.
fn bfs_depths(graph: &VDGraph) -> BTreeMap<&str, u64> {
    let mut depths: BTreeMap<&str, u64> = BTreeMap::new();
    let Some(root) = graph.root_id() else {
        return depths;
    };
    if graph.vertex(root).is_none() {
        return depths;
    }
    let adj = depn_adjacency(graph);
    let mut queue: VecDeque<&str> = VecDeque::new();
    depths.insert(root, 0);
    queue.push_back(root);
    while let Some(id) = queue.pop_front() {
        let depth = depths[id];
        for succ in adj.get(id).map(Vec::as_slice).unwrap_or_default() {
            if !depths.contains_key(succ) {
                depths.insert(succ, depth + 1);
                queue.push_back(succ);
            }
        }
    }
    depths
}

/// Shortest-path depth for every vulnerability: the BFS depth of its closest
/// carrying component plus one for the terminal vulnerability link. Records
/// are sorted by vulnerability id.
pub fn vulnerability_depths(graph: &VDGraph) -> Result<Vec<DepthRecord>, QueryError> {
    let depths = bfs_depths(graph);
    let carriers = has_v_reverse(graph);
    let mut records = Vec::new();
    for vuln in graph.vulnerabilities() {
        let closest = carriers
            .get(vuln.id.as_str())
            .map(Vec::as_slice)
            .unwrap_or_default()
            .iter()
            .filter_map(|c| depths.get(c))
            .min();
        match closest {
            Some(depth) => records.push(DepthRecord {
                vulnerability_id: vuln.id.clone(),
                severity: vuln.severity,
                depth: depth + 1,
            }),
            None => {
                return Err(QueryError::UnreachableVulnerability { id: vuln.id.clone() });
            }
        }
    }
    Ok(records)
}

/// BFS depth of every component (the root is not listed); components with no
/// path from the root report `None`. Sorted by component id.
pub fn component_depths(graph: &VDGraph) -> Vec<(String, Option<u64>)> {
    let depths = bfs_depths(graph);
    graph
        .components()
        .map(|c| (c.id.clone(), depths.get(c.id.as_str()).copied()))
        .collect()
}

/// Up to `limit` distinct root-to-vulnerability paths in depth-first
/// lexicographic order. Each path runs over dependency edges and ends with
/// the single vulnerability link.
pub fn enumerate_paths(
    graph: &VDGraph,
    vulnerability_id: &str,
    limit: usize,
) -> Result<Vec<Vec<String>>, QueryError> {
    let is_vuln = graph
        .vertex(vulnerability_id)
        .is_some_and(|v| v.label == VertexLabel::Vulnerability);
    if !is_vuln {
        return Err(QueryError::UnknownVulnerability {
            id: vulnerability_id.to_string(),
        });
    }
    assert_dag(graph)?;

    let mut paths = Vec::new();
    let Some(root) = graph.root_id() else {
        return Ok(paths);
    };
    if limit == 0 {
        return Ok(paths);
    }

    // Restrict the walk to vertices that can still reach a carrier of the
    // target, so every step taken lies on at least one emitted path.
    let carriers: BTreeSet<&str> = graph
        .edges()
        .filter(|e| e.label == EdgeLabel::HasV && e.to == vulnerability_id)
        .map(|e| e.from.as_str())
        .collect();
    let mut reaches: BTreeSet<&str> = carriers.clone();
    let mut reverse: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for edge in graph.edges() {
        if edge.label == EdgeLabel::Depn {
            reverse
                .entry(edge.to.as_str())
                .or_default()
                .push(edge.from.as_str());
        }
    }
    let mut queue: VecDeque<&str> = carriers.iter().copied().collect();
    while let Some(id) = queue.pop_front() {
        for pred in reverse.get(id).map(Vec::as_slice).unwrap_or_default() {
            if reaches.insert(pred) {
                queue.push_back(pred);
            }
        }
    }
    if !reaches.contains(root) {
        return Ok(paths);
    }

    let adj = depn_adjacency(graph);
    let mut stack: Vec<String> = vec![root.to_string()];
    dfs_paths(
        graph,
        &adj,
        &carriers,
        &reaches,
        vulnerability_id,
        limit,
        &mut stack,
        &mut paths,
    );
    Ok(paths)
}

#[allow(clippy::too_many_arguments)]
fn dfs_paths(
    graph: &VDGraph,
    adj: &BTreeMap<&str, Vec<&str>>,
    carriers: &BTreeSet<&str>,
    reaches: &BTreeSet<&str>,
    target: &str,
    limit: usize,
    stack: &mut Vec<String>,
    paths: &mut Vec<Vec<String>>,
) {
    if paths.len() >= limit {
        return;
    }
    let current = stack.last().expect("stack is nonempty").clone();

    // Candidate continuations in id order: dependency children that can
    // still reach the target, interleaved with the terminal link itself.
    let mut candidates: Vec<&str> = adj
        .get(current.as_str())
        .map(Vec::as_slice)
        .unwrap_or_default()
        .iter()
        .copied()
        .filter(|succ| reaches.contains(succ))
        .collect();
    if carriers.contains(current.as_str()) {
        candidates.push(target);
        candidates.sort_unstable();
    }

    for candidate in candidates {
        if paths.len() >= limit {
            return;
        }
        if candidate == target {
            let mut path = stack.clone();
            path.push(target.to_string());
            paths.push(path);
        } else {
            stack.push(candidate.to_string());
            dfs_paths(graph, adj, carriers, reaches, target, limit, stack, paths);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Component, Source, VertexPayload, Vulnerability};

    fn graph(
        root: &str,
        components: &[&str],
        depn: &[(&str, &str)],
        vulns: &[(&str, &str, Severity)],
    ) -> VDGraph {
        let mut g =
            VDGraph::rooted(Component::with_id(root, root, "1.0", Source::Sbom)).unwrap();
        for c in components {
            g.add_vertex(
                VertexLabel::Component,
                VertexPayload::Component(Component::with_id(c, c, "1.0", Source::Sbom)),
            )
            .unwrap();
        }
        for (from, to) in depn {
            g.add_edge(from, to, EdgeLabel::Depn).unwrap();
        }
        for (component, vuln, severity) in vulns {
            if !g.contains_vertex(vuln) {
                g.add_vertex(
                    VertexLabel::Vulnerability,
                    VertexPayload::Vulnerability(Vulnerability::new(vuln, *severity)),
                )
                .unwrap();
            }
            g.add_edge(component, vuln, EdgeLabel::HasV).unwrap();
        }
        g
    }

    /// The merged five-component example graph: two mid-tier components fan
    /// into a shared dependency that owns two vulnerable children, plus one
    /// root-attached scanner component.
    fn merged_example() -> VDGraph {
        graph(
            "flink-parent",
            &[
                "flink-kubernetes",
                "flink-yarn",
                "hadoop-common",
                "jackson-mapper-asl",
                "protobuf-java",
                "woodstox-core",
            ],
            &[
                ("flink-parent", "flink-kubernetes"),
                ("flink-parent", "flink-yarn"),
                ("flink-parent", "hadoop-common"),
                ("flink-kubernetes", "hadoop-common"),
                ("flink-yarn", "hadoop-common"),
                ("flink-parent", "woodstox-core"),
                ("hadoop-common", "jackson-mapper-asl"),
                ("hadoop-common", "protobuf-java"),
            ],
            &[
                ("woodstox-core", "GHSA-3f7h-mf4q-vrm4", Severity::High),
                ("protobuf-java", "GHSA-3f7h-mf4q-vrm4", Severity::High),
                ("jackson-mapper-asl", "GHSA-c27h-mcmw-48hv", Severity::High),
            ],
        )
    }

    /// The dependency-chain example: a diamond head and a three-hop tail
    /// ending at a vulnerable leaf.
    fn chain_example() -> VDGraph {
        graph(
            "flink-parent",
            &["flink-runtime", "hadoop-common", "jersey-json", "jettison"],
            &[
                ("flink-parent", "flink-runtime"),
                ("flink-parent", "hadoop-common"),
                ("flink-runtime", "hadoop-common"),
                ("hadoop-common", "jersey-json"),
                ("jersey-json", "jettison"),
            ],
            &[("jettison", "CVE-2022-45685", Severity::High)],
        )
    }

    #[test]
    fn topological_order_on_merged_example() {
        let order = assert_dag(&merged_example()).unwrap();
        assert_eq!(order.len(), 7);
        assert_eq!(order[0], "flink-parent");
        let pos = |id: &str| order.iter().position(|o| o == id).unwrap();
        assert!(pos("hadoop-common") < pos("protobuf-java"));
        assert!(pos("flink-yarn") < pos("hadoop-common"));
    }

    #[test]
    fn root_only_order() {
        let g = graph("solo", &[], &[], &[]);
        assert_eq!(assert_dag(&g).unwrap(), vec!["solo".to_string()]);
    }

    #[test]
    fn cycle_is_named() {
        let mut g = graph("r", &["a", "b"], &[("r", "a")], &[]);
        g.add_edge("a", "b", EdgeLabel::Depn).unwrap();
        g.add_edge("b", "a", EdgeLabel::Depn).unwrap();
        let err = assert_dag(&g).unwrap_err();
        let QueryError::CyclicDependencies { cycle } = err else {
            panic!("expected cycle");
        };
        let mut sorted = cycle.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn count_paths_on_merged_example() {
        let g = merged_example();
        // direct, via flink-kubernetes, via flink-yarn
        assert_eq!(count_paths(&g, "hadoop-common").unwrap(), BigUint::from(3u8));
        assert_eq!(count_paths(&g, "protobuf-java").unwrap(), BigUint::from(3u8));
        assert_eq!(count_paths(&g, "woodstox-core").unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn count_paths_root_is_one() {
        let g = merged_example();
        assert_eq!(count_paths(&g, "flink-parent").unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn count_paths_diamond() {
        let g = graph(
            "r",
            &["a", "b", "c", "d"],
            &[("r", "a"), ("r", "b"), ("a", "c"), ("b", "c"), ("c", "d")],
            &[],
        );
        assert_eq!(count_paths(&g, "d").unwrap(), BigUint::from(2u8));
    }

    #[test]
    fn count_paths_unknown_component() {
        let err = count_paths(&merged_example(), "ghost").unwrap_err();
        assert!(matches!(err, QueryError::UnknownComponent { .. }));
    }

    #[test]
    fn path_counts_by_severity_on_merged_example() {
        let records = path_counts_by_severity(&merged_example(), &SeverityFilter::default()).unwrap();
        let ids: Vec<&str> = records.iter().map(|r| r.component_id.as_str()).collect();
        // jackson-mapper-asl and protobuf-java tie at 3 paths; ties break on id
        assert_eq!(ids, ["jackson-mapper-asl", "protobuf-java", "woodstox-core"]);
        assert_eq!(records[0].path_count, BigUint::from(3u8));
        assert_eq!(records[1].path_count, BigUint::from(3u8));
        assert_eq!(records[2].path_count, BigUint::from(1u8));
    }

    #[test]
    fn severity_filter_excludes_other_buckets() {
        let mut g = merged_example();
        g.add_vertex(
            VertexLabel::Vulnerability,
            VertexPayload::Vulnerability(Vulnerability::new("CVE-low", Severity::Low)),
        )
        .unwrap();
        g.add_edge("flink-yarn", "CVE-low", EdgeLabel::HasV).unwrap();
        let records = path_counts_by_severity(&g, &SeverityFilter::default()).unwrap();
        assert!(records.iter().all(|r| r.component_id != "flink-yarn"));
        let widened = path_counts_by_severity(&g, &SeverityFilter::at_least(Severity::Low)).unwrap();
        assert!(widened.iter().any(|r| r.component_id == "flink-yarn"));
    }

    #[test]
    fn severity_filter_unknown_never_matches() {
        assert!(!SeverityFilter::exact(Severity::Unknown).matches(Severity::Unknown));
        assert!(!SeverityFilter::at_least(Severity::Low).matches(Severity::Unknown));
        assert_eq!(
            SeverityFilter::default().with_critical().buckets(),
            vec![Severity::High, Severity::Critical]
        );
    }

    #[test]
    fn no_vulnerabilities_yields_empty_records() {
        let g = graph("r", &["a"], &[("r", "a")], &[]);
        assert_eq!(
            path_counts_by_severity(&g, &SeverityFilter::default()).unwrap(),
            Vec::new()
        );
    }

    #[test]
    fn depth_on_chain_example() {
        let records = vulnerability_depths(&chain_example()).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].vulnerability_id, "CVE-2022-45685");
        assert_eq!(records[0].depth, 4);
    }

    #[test]
    fn depth_takes_shortest_carrier() {
        // the shared advisory is two hops via its root-attached carrier even
        // though the other carrier sits three hops deep
        let records = vulnerability_depths(&merged_example()).unwrap();
        let shared = records
            .iter()
            .find(|r| r.vulnerability_id == "GHSA-3f7h-mf4q-vrm4")
            .unwrap();
        assert_eq!(shared.depth, 2);
        let other = records
            .iter()
            .find(|r| r.vulnerability_id == "GHSA-c27h-mcmw-48hv")
            .unwrap();
        assert_eq!(other.depth, 3);
    }

    #[test]
    fn depth_two_for_root_attached_component() {
        let g = graph("r", &["a"], &[("r", "a")], &[("a", "CVE-1", Severity::Low)]);
        assert_eq!(vulnerability_depths(&g).unwrap()[0].depth, 2);
    }

    #[test]
    fn unreachable_vulnerability_is_an_error() {
        let g = graph("r", &["a"], &[], &[("a", "CVE-1", Severity::Low)]);
        let err = vulnerability_depths(&g).unwrap_err();
        assert_eq!(err, QueryError::UnreachableVulnerability { id: "CVE-1".into() });
    }

    #[test]
    fn component_depths_on_merged_example() {
        let depths = component_depths(&merged_example());
        let depth_of = |id: &str| depths.iter().find(|(c, _)| c == id).unwrap().1;
        assert_eq!(depth_of("flink-kubernetes"), Some(1));
        assert_eq!(depth_of("hadoop-common"), Some(1));
        assert_eq!(depth_of("jackson-mapper-asl"), Some(2));
    }

    #[test]
    fn component_depths_root_only_is_empty() {
        let g = graph("r", &[], &[], &[]);
        assert_eq!(component_depths(&g), Vec::new());
    }

    #[test]
    fn component_depths_chain() {
        let g = graph(
            "r",
            &["c1", "c2", "c3", "c4", "c5"],
            &[("r", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c5")],
            &[],
        );
        let depths = component_depths(&g);
        for (i, (id, depth)) in depths.iter().enumerate() {
            assert_eq!(id, &format!("c{}", i + 1));
            assert_eq!(*depth, Some(i as u64 + 1));
        }
    }

    #[test]
    fn isolated_component_has_no_depth() {
        let g = graph("r", &["a", "island"], &[("r", "a")], &[]);
        let depths = component_depths(&g);
        assert_eq!(depths.iter().find(|(c, _)| c == "island").unwrap().1, None);
    }

    #[test]
    fn enumerate_paths_on_chain_example() {
        let paths = enumerate_paths(&chain_example(), "CVE-2022-45685", 10).unwrap();
        assert_eq!(
            paths,
            vec![
                vec![
                    "flink-parent".to_string(),
                    "flink-runtime".to_string(),
                    "hadoop-common".to_string(),
                    "jersey-json".to_string(),
                    "jettison".to_string(),
                    "CVE-2022-45685".to_string(),
                ],
                vec![
                    "flink-parent".to_string(),
                    "hadoop-common".to_string(),
                    "jersey-json".to_string(),
                    "jettison".to_string(),
                    "CVE-2022-45685".to_string(),
                ],
            ]
        );
    }

    #[test]
    fn enumerate_paths_respects_limit() {
        let paths = enumerate_paths(&chain_example(), "CVE-2022-45685", 1).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0][1], "flink-runtime", "lexicographically first path");
    }

    #[test]
    fn enumerate_paths_root_attached() {
        let g = graph("r", &["a"], &[("r", "a")], &[("a", "CVE-1", Severity::Low)]);
        let paths = enumerate_paths(&g, "CVE-1", 10).unwrap();
        assert_eq!(paths, vec![vec!["r".to_string(), "a".to_string(), "CVE-1".to_string()]]);
    }

    #[test]
    fn enumerate_paths_unknown_vulnerability() {
        let err = enumerate_paths(&chain_example(), "CVE-none", 10).unwrap_err();
        assert!(matches!(err, QueryError::UnknownVulnerability { .. }));
    }

    #[test]
    fn depth_equals_min_component_depth_plus_one() {
        let g = merged_example();
        let comp_depths: BTreeMap<String, Option<u64>> =
            component_depths(&g).into_iter().collect();
        for record in vulnerability_depths(&g).unwrap() {
            let min_carrier = g
                .edges()
                .filter(|e| e.label == EdgeLabel::HasV && e.to == record.vulnerability_id)
                .filter_map(|e| comp_depths.get(&e.from).copied().flatten())
                .min()
                .unwrap();
            assert_eq!(record.depth, min_carrier + 1);
        }
    }
}
