//! The labeled property graph ontology and the `VDGraph` container.
//!
//! Three vertex labels (`root`, `component`, `vulnerability`) and two edge
//! labels (`depn`, `has_v`) describe every graph this toolkit builds. The
//! container enforces the edge-shape rules at insertion time and exposes
//! [`VDGraph::validate`] to re-check the full invariant set on graphs that
//! were deserialized rather than built through the mutation API.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Vertex classification. Every vertex carries exactly one label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum VertexLabel {
    Root,
    Component,
    Vulnerability,
}

impl VertexLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexLabel::Root => "root",
            VertexLabel::Component => "component",
            VertexLabel::Vulnerability => "vulnerability",
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Edge classification: a dependency between packages, or the presence of a
/// vulnerability in a package.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EdgeLabel {
    Depn,
    HasV,
}

impl EdgeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Depn => "depn",
            EdgeLabel::HasV => "has_v",
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Advisory severity bucket.
///
/// The four known buckets are totally ordered (`Low < Moderate < High <
/// Critical`). `Unknown` marks advisories without usable severity data; it is
/// incomparable with the known buckets and excluded from severity-filtered
/// queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Severity {
    Low,
    Moderate,
    High,
    Critical,
    Unknown,
}

impl Severity {
    /// All values, known buckets in ascending order, `Unknown` last.
    pub const ALL: [Severity; 5] = [
        Severity::Low,
        Severity::Moderate,
        Severity::High,
        Severity::Critical,
        Severity::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Low => "low",
            Severity::Moderate => "moderate",
            Severity::High => "high",
            Severity::Critical => "critical",
            Severity::Unknown => "unknown",
        }
    }

    /// Position in the total order, `None` for `Unknown`.
    pub fn rank(self) -> Option<u8> {
        match self {
            Severity::Low => Some(0),
            Severity::Moderate => Some(1),
            Severity::High => Some(2),
            Severity::Critical => Some(3),
            Severity::Unknown => None,
        }
    }

    pub fn is_known(self) -> bool {
        self.rank().is_some()
    }

    /// Case-insensitive parse. Accepts the ecosystem alias `medium` for
    /// `moderate`.
    pub fn parse(value: &str) -> Option<Severity> {
        let v = value.trim();
        for candidate in Severity::ALL {
            if v.eq_ignore_ascii_case(candidate.as_str()) {
                return Some(candidate);
            }
        }
        if v.eq_ignore_ascii_case("medium") {
            return Some(Severity::Moderate);
        }
        None
    }
}

impl PartialOrd for Severity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match (self.rank(), other.rank()) {
            (Some(a), Some(b)) => a.partial_cmp(&b),
            _ => None,
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Provenance of a component vertex.
///
/// `Sbom` components come from the SBOM `components`/`metadata` sections,
/// `Sca` components from scanner packages with no SBOM match, and `Stub`
/// components are synthesized for dangling dependency references.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Source {
    Sbom,
    Sca,
    Stub,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Sbom => "sbom",
            Source::Sca => "sca",
            Source::Stub => "stub",
        }
    }

    pub fn parse(value: &str) -> Option<Source> {
        match value.trim() {
            v if v.eq_ignore_ascii_case("sbom") => Some(Source::Sbom),
            v if v.eq_ignore_ascii_case("sca") => Some(Source::Sca),
            v if v.eq_ignore_ascii_case("stub") => Some(Source::Stub),
            _ => None,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Joins a group-free name and a version into the `name_version` display and
/// identity form (`jettison` + `1.1` -> `jettison_1.1`). An empty version
/// yields just the name.
pub fn name_version(general_name: &str, version: &str) -> String {
    if version.is_empty() {
        general_name.to_string()
    } else {
        format!("{general_name}_{version}")
    }
}

/// A software package vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Component {
    /// Unique vertex id: the SBOM `bom-ref` when sourced from an SBOM,
    /// otherwise the `name_version` key.
    pub id: String,
    /// Display form `general_name_version`.
    pub name: String,
    /// Package name with group and version stripped.
    pub general_name: String,
    /// Group/namespace, empty when the package has none.
    pub group: String,
    pub version: String,
    #[cfg_attr(feature = "serde", serde(default))]
    pub publisher: Option<String>,
    /// SBOM component type, e.g. "library".
    #[cfg_attr(feature = "serde", serde(default))]
    pub component_type: Option<String>,
    /// Verbatim serialized license list from the source document.
    #[cfg_attr(feature = "serde", serde(default))]
    pub licenses_raw: Option<String>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub most_recent_license: Option<String>,
    pub source: Source,
}

impl Component {
    /// Builds a component whose id is its `name_version` key, the identity
    /// scheme used for scanner-sourced packages.
    pub fn keyed(general_name: &str, version: &str, source: Source) -> Self {
        let name = name_version(general_name, version);
        Component {
            id: name.clone(),
            name,
            general_name: general_name.to_string(),
            group: String::new(),
            version: version.to_string(),
            publisher: None,
            component_type: None,
            licenses_raw: None,
            most_recent_license: None,
            source,
        }
    }

    /// Same as [`Component::keyed`] but under an explicit id (the SBOM
    /// `bom-ref` scheme).
    pub fn with_id(id: &str, general_name: &str, version: &str, source: Source) -> Self {
        Component {
            id: id.to_string(),
            ..Component::keyed(general_name, version, source)
        }
    }
}

/// An advisory vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vulnerability {
    /// Advisory identifier, e.g. `GHSA-...` or `CVE-...`.
    pub id: String,
    /// Alternate identifiers; never contains `id` itself.
    #[cfg_attr(feature = "serde", serde(default))]
    pub aliases: Vec<String>,
    pub severity: Severity,
    #[cfg_attr(feature = "serde", serde(default))]
    pub summary: Option<String>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub published: Option<String>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub modified: Option<String>,
    /// Verbatim serialized advisory record.
    #[cfg_attr(feature = "serde", serde(default))]
    pub details_raw: Option<String>,
}

impl Vulnerability {
    pub fn new(id: &str, severity: Severity) -> Self {
        Vulnerability {
            id: id.to_string(),
            aliases: Vec::new(),
            severity,
            summary: None,
            published: None,
            modified: None,
            details_raw: None,
        }
    }

    /// Sets the alias list, dropping any entry equal to the advisory id.
    pub fn with_aliases(mut self, aliases: impl IntoIterator<Item = String>) -> Self {
        self.aliases = aliases.into_iter().filter(|a| *a != self.id).collect();
        self
    }
}

/// Vertex payload: the root vertex carries the root project's component
/// record.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum VertexPayload {
    Component(Component),
    Vulnerability(Vulnerability),
}

impl VertexPayload {
    pub fn id(&self) -> &str {
        match self {
            VertexPayload::Component(c) => &c.id,
            VertexPayload::Vulnerability(v) => &v.id,
        }
    }

    pub fn as_component(&self) -> Option<&Component> {
        match self {
            VertexPayload::Component(c) => Some(c),
            VertexPayload::Vulnerability(_) => None,
        }
    }

    pub fn as_vulnerability(&self) -> Option<&Vulnerability> {
        match self {
            VertexPayload::Vulnerability(v) => Some(v),
            VertexPayload::Component(_) => None,
        }
    }
}

/// A labeled vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vertex {
    pub label: VertexLabel,
    pub payload: VertexPayload,
}

/// A directed labeled edge. Edges form a set: at most one edge exists per
/// `(from, to, label)` triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub label: EdgeLabel,
}

/// Errors raised by the graph mutation API. Each one signals input that the
/// ontology cannot represent, not a recoverable data-quality issue.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("vertex payload has an empty id")]
    EmptyId,
    #[error("vertex `{id}` already exists with label {existing}, cannot re-add as {attempted}")]
    DuplicateIdConflict {
        id: String,
        existing: VertexLabel,
        attempted: VertexLabel,
    },
    #[error("edge endpoint `{id}` does not exist")]
    UnknownEndpoint { id: String },
    #[error("edge `{from}` -> `{to}` with label {label} is not a legal shape ({from_label} -> {to_label})")]
    IllegalEdgeShape {
        from: String,
        to: String,
        label: EdgeLabel,
        from_label: VertexLabel,
        to_label: VertexLabel,
    },
    #[error("self-loop on `{id}`")]
    SelfLoop { id: String },
}

/// Outcome of an idempotent insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    Added,
    /// The element was already present; for vertices the first payload wins.
    AlreadyPresent,
}

impl InsertOutcome {
    pub fn is_added(self) -> bool {
        matches!(self, InsertOutcome::Added)
    }
}

/// An invariant violation found by [`VDGraph::validate`]. Violations are
/// data, not errors: a well-formed graph yields an empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `root_id` names a vertex that is absent or not labeled `root`.
    BadRootDesignation { root_id: String },
    /// More than one vertex carries the `root` label.
    MultipleRoots { ids: Vec<String> },
    /// A `root`-labeled vertex exists but is not designated as the root.
    UndesignatedRoot { id: String },
    /// Map key and payload id disagree.
    VertexIdMismatch { key: String, payload_id: String },
    /// Vertex label does not fit its payload kind.
    LabelPayloadMismatch { id: String, label: VertexLabel },
    /// Component `name` is not `general_name_version`.
    BadComponentName { id: String },
    /// A vulnerability lists itself among its aliases.
    SelfAlias { id: String },
    /// Edge endpoint missing from the vertex set.
    DanglingEdge { from: String, to: String },
    /// Edge label/endpoint combination outside the ontology.
    BadEdgeShape {
        from: String,
        to: String,
        label: EdgeLabel,
    },
    /// Edge from a vertex to itself.
    SelfLoopEdge { id: String },
    /// Empty-string vertex id.
    EmptyVertexId,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadRootDesignation { root_id } => {
                write!(f, "designated root `{root_id}` is absent or not labeled root")
            }
            Violation::MultipleRoots { ids } => write!(f, "multiple root vertices: {ids:?}"),
            Violation::UndesignatedRoot { id } => {
                write!(f, "vertex `{id}` is labeled root but not designated as the root")
            }
            Violation::VertexIdMismatch { key, payload_id } => {
                write!(f, "vertex keyed `{key}` carries payload id `{payload_id}`")
            }
            Violation::LabelPayloadMismatch { id, label } => {
                write!(f, "vertex `{id}` labeled {label} has a mismatched payload kind")
            }
            Violation::BadComponentName { id } => {
                write!(f, "component `{id}` name is not general_name_version")
            }
            Violation::SelfAlias { id } => {
                write!(f, "vulnerability `{id}` lists itself as an alias")
            }
            Violation::DanglingEdge { from, to } => {
                write!(f, "edge `{from}` -> `{to}` references a missing vertex")
            }
            Violation::BadEdgeShape { from, to, label } => {
                write!(f, "edge `{from}` -> `{to}` with label {label} is not a legal shape")
            }
            Violation::SelfLoopEdge { id } => write!(f, "self-loop on `{id}`"),
            Violation::EmptyVertexId => write!(f, "empty vertex id"),
        }
    }
}

/// Directed labeled property graph with at most one designated root.
///
/// A merged project graph always has a root; the scanner-side forest built
/// before merging has none. Mutation is confined to one owner at a time;
/// once built, the graph is immutable and freely shareable for reads.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VDGraph {
    vertices: BTreeMap<String, Vertex>,
    edges: BTreeSet<Edge>,
    root_id: Option<String>,
}

impl VDGraph {
    /// An empty graph with no root: the starting point for a scanner-side
    /// forest.
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph seeded with its root vertex.
    pub fn rooted(root: Component) -> Result<Self, ModelError> {
        let mut g = VDGraph::new();
        g.add_vertex(VertexLabel::Root, VertexPayload::Component(root))?;
        Ok(g)
    }

    pub fn root_id(&self) -> Option<&str> {
        self.root_id.as_deref()
    }

    /// The root vertex's component record, when a root is designated.
    pub fn root_component(&self) -> Option<&Component> {
        let id = self.root_id.as_deref()?;
        self.vertices.get(id)?.payload.as_component()
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.get(id)
    }

    pub fn contains_vertex(&self, id: &str) -> bool {
        self.vertices.contains_key(id)
    }

    pub fn has_edge(&self, from: &str, to: &str, label: EdgeLabel) -> bool {
        self.edges.contains(&Edge {
            from: from.to_string(),
            to: to.to_string(),
            label,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = (&str, &Vertex)> {
        self.vertices.iter().map(|(id, v)| (id.as_str(), v))
    }

    /// Edges in ascending `(from, to, label)` order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    /// Component-labeled vertices in ascending id order (the root is not
    /// included).
    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.vertices.values().filter_map(|v| match v.label {
            VertexLabel::Component => v.payload.as_component(),
            _ => None,
        })
    }

    /// Vulnerability vertices in ascending id order.
    pub fn vulnerabilities(&self) -> impl Iterator<Item = &Vulnerability> {
        self.vertices
            .values()
            .filter_map(|v| v.payload.as_vulnerability())
    }

    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    pub fn vulnerability_count(&self) -> usize {
        self.vulnerabilities().count()
    }

    /// Inserts a vertex. Re-inserting an existing id with the same label is
    /// idempotent (the first payload wins and `AlreadyPresent` is returned so
    /// the caller can record a warning); the same id under a different label
    /// is corrupted input and fails.
    pub fn add_vertex(
        &mut self,
        label: VertexLabel,
        payload: VertexPayload,
    ) -> Result<InsertOutcome, ModelError> {
        let id = payload.id();
        if id.is_empty() {
            return Err(ModelError::EmptyId);
        }
        if let Some(existing) = self.vertices.get(id) {
            if existing.label == label {
                return Ok(InsertOutcome::AlreadyPresent);
            }
            return Err(ModelError::DuplicateIdConflict {
                id: id.to_string(),
                existing: existing.label,
                attempted: label,
            });
        }
        if label == VertexLabel::Root && self.root_id.is_none() {
            self.root_id = Some(id.to_string());
        }
        self.vertices
            .insert(id.to_string(), Vertex { label, payload });
        Ok(InsertOutcome::Added)
    }

    /// Inserts an edge between existing vertices. Re-adding is idempotent
    /// (set semantics). The label must fit the endpoints: `depn` goes from
    /// the root or a component to a component, `has_v` from a component to a
    /// vulnerability.
    pub fn add_edge(
        &mut self,
        from: &str,
        to: &str,
        label: EdgeLabel,
    ) -> Result<InsertOutcome, ModelError> {
        let from_label = self
            .vertices
            .get(from)
            .map(|v| v.label)
            .ok_or_else(|| ModelError::UnknownEndpoint { id: from.to_string() })?;
        let to_label = self
            .vertices
            .get(to)
            .map(|v| v.label)
            .ok_or_else(|| ModelError::UnknownEndpoint { id: to.to_string() })?;
        if from == to {
            return Err(ModelError::SelfLoop { id: from.to_string() });
        }
        if !edge_shape_legal(from_label, to_label, label) {
            return Err(ModelError::IllegalEdgeShape {
                from: from.to_string(),
                to: to.to_string(),
                label,
                from_label,
                to_label,
            });
        }
        let inserted = self.edges.insert(Edge {
            from: from.to_string(),
            to: to.to_string(),
            label,
        });
        Ok(if inserted {
            InsertOutcome::Added
        } else {
            InsertOutcome::AlreadyPresent
        })
    }

    /// Checks every structural invariant and returns the violations found.
    ///
    /// Graphs built exclusively through [`VDGraph::add_vertex`] and
    /// [`VDGraph::add_edge`] always validate clean; this exists for graphs
    /// reconstructed from external data.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();

        let mut root_labeled: Vec<&str> = Vec::new();
        for (key, vertex) in &self.vertices {
            if key.is_empty() {
                violations.push(Violation::EmptyVertexId);
            }
            if key != vertex.payload.id() {
                violations.push(Violation::VertexIdMismatch {
                    key: key.clone(),
                    payload_id: vertex.payload.id().to_string(),
                });
            }
            let payload_fits = match vertex.label {
                VertexLabel::Root | VertexLabel::Component => {
                    vertex.payload.as_component().is_some()
                }
                VertexLabel::Vulnerability => vertex.payload.as_vulnerability().is_some(),
            };
            if !payload_fits {
                violations.push(Violation::LabelPayloadMismatch {
                    id: key.clone(),
                    label: vertex.label,
                });
            }
            if let Some(c) = vertex.payload.as_component() {
                if !c.version.is_empty() && c.name != name_version(&c.general_name, &c.version) {
                    violations.push(Violation::BadComponentName { id: key.clone() });
                }
            }
            if let Some(v) = vertex.payload.as_vulnerability() {
                if v.aliases.iter().any(|a| *a == v.id) {
                    violations.push(Violation::SelfAlias { id: key.clone() });
                }
            }
            if vertex.label == VertexLabel::Root {
                root_labeled.push(key);
            }
        }

        match (&self.root_id, root_labeled.as_slice()) {
            (None, []) => {}
            (Some(designated), roots) => {
                let fits = self
                    .vertices
                    .get(designated)
                    .is_some_and(|v| v.label == VertexLabel::Root);
                if !fits {
                    violations.push(Violation::BadRootDesignation {
                        root_id: designated.clone(),
                    });
                }
                if roots.len() > 1 {
                    violations.push(Violation::MultipleRoots {
                        ids: roots.iter().map(|s| s.to_string()).collect(),
                    });
                }
            }
            (None, roots) => {
                for id in roots {
                    violations.push(Violation::UndesignatedRoot { id: id.to_string() });
                }
            }
        }

        for edge in &self.edges {
            let from = self.vertices.get(&edge.from);
            let to = self.vertices.get(&edge.to);
            let (Some(from), Some(to)) = (from, to) else {
                violations.push(Violation::DanglingEdge {
                    from: edge.from.clone(),
                    to: edge.to.clone(),
                });
                continue;
            };
            if edge.from == edge.to {
                violations.push(Violation::SelfLoopEdge {
                    id: edge.from.clone(),
                });
                continue;
            }
            if !edge_shape_legal(from.label, to.label, edge.label) {
                violations.push(Violation::BadEdgeShape {
                    from: edge.from.clone(),
                    to: edge.to.clone(),
                    label: edge.label,
                });
            }
        }

        violations
    }
}

fn edge_shape_legal(from: VertexLabel, to: VertexLabel, label: EdgeLabel) -> bool {
    match label {
        EdgeLabel::Depn => {
            matches!(from, VertexLabel::Root | VertexLabel::Component)
                && to == VertexLabel::Component
        }
        EdgeLabel::HasV => from == VertexLabel::Component && to == VertexLabel::Vulnerability,
    }
}
