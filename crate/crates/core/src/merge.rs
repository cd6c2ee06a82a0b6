//! Fuses the dependency graph and the scanner forest into one rooted graph.
//!
//! Starting from the dependency graph, every scanner-side component is looked
//! up by its name+version key. Components with one or more key-equal matches
//! have their vulnerability links re-targeted onto every match (the
//! dependency-side vertex keeps its richer properties); components with no
//! match are inserted as new vertices wired directly to the root so their
//! vulnerabilities stay reachable. The result is complete — it carries every
//! vertex and edge of both inputs — and every vulnerability is reachable from
//! the root.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::model::{Component, EdgeLabel, ModelError, VDGraph, VertexLabel, VertexPayload};

/// Key under which components from the two sources are matched: exact string
/// equality on the group-free name and the version. Group is deliberately not
/// part of the key, so same-named packages from different groups can collide;
/// such collisions surface in [`MergeReport::ambiguous_links`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatchKey {
    pub general_name: String,
    pub version: String,
}

impl MatchKey {
    pub fn of(component: &Component) -> Self {
        MatchKey {
            general_name: component.general_name.clone(),
            version: component.version.clone(),
        }
    }
}

/// How each scanner-side component fared during the merge.
/// `matched + multi_matched + unmatched` equals the number of scanner-side
/// component vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MergeReport {
    /// Components with exactly one name+version match.
    pub matched: usize,
    /// Components whose key matched more than one dependency-side vertex.
    pub multi_matched: usize,
    /// Components with no match, attached directly to the root.
    pub unmatched: usize,
    /// Vulnerability vertices inserted into the merged graph.
    pub vulnerabilities_added: usize,
    /// Advisories linked to several components because of a multi-match.
    pub ambiguous_links: Vec<AmbiguousLink>,
}

/// An advisory whose component could not be matched uniquely.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AmbiguousLink {
    pub vulnerability_id: String,
    pub component_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MergeError {
    #[error("the dependency graph has no root vertex")]
    NoRoot,
    /// The two graphs use colliding ids that the ontology cannot reconcile
    /// (e.g. a component id equal to an advisory id).
    #[error("graphs cannot be merged: {0}")]
    Graph(#[from] ModelError),
}

/// All component vertices of `graph` (any source) whose key equals `key`,
/// in ascending id order.
pub fn find_matches(graph: &VDGraph, key: &MatchKey) -> Vec<String> {
    graph
        .components()
        .filter(|c| c.general_name == key.general_name && c.version == key.version)
        .map(|c| c.id.clone())
        .collect()
}

/// Merges the scanner forest `g_sca` into the dependency graph `g_sbom`.
///
/// The inputs are untouched; the merged graph and a [`MergeReport`] are
/// returned. The output is independent of the order in which the forest was
/// assembled: scanner components are processed in ascending id order and all
/// containers are ordered sets.
pub fn merge_graphs(g_sbom: &VDGraph, g_sca: &VDGraph) -> Result<(VDGraph, MergeReport), MergeError> {
    let root_id = g_sbom.root_id().ok_or(MergeError::NoRoot)?.to_string();
    let mut merged = g_sbom.clone();
    let mut report = MergeReport::default();

    // Name+version index over the dependency side. Scanner components are
    // unique per key, so matching against this fixed index is equivalent to
    // matching against the evolving graph.
    let mut index: BTreeMap<MatchKey, Vec<String>> = BTreeMap::new();
    for c in g_sbom.components() {
        index.entry(MatchKey::of(c)).or_default().push(c.id.clone());
    }

    // has_v adjacency of the forest: component id -> advisory ids.
    let mut forest_links: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for edge in g_sca.edges() {
        if edge.label == EdgeLabel::HasV {
            forest_links
                .entry(edge.from.as_str())
                .or_default()
                .push(edge.to.as_str());
        }
    }

    let mut ambiguous: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();

    for sca_component in g_sca.components() {
        let key = MatchKey::of(sca_component);
        let matches = index.get(&key).cloned().unwrap_or_default();

        let hosts: Vec<String> = if matches.is_empty() {
            merged.add_vertex(
                VertexLabel::Component,
                VertexPayload::Component(sca_component.clone()),
            )?;
            merged.add_edge(&root_id, &sca_component.id, EdgeLabel::Depn)?;
            report.unmatched += 1;
            vec![sca_component.id.clone()]
        } else {
            if matches.len() == 1 {
                report.matched += 1;
            } else {
                report.multi_matched += 1;
            }
            matches
        };

        for vuln_id in forest_links
            .get(sca_component.id.as_str())
            .map(Vec::as_slice)
            .unwrap_or_default()
        {
            if !merged.contains_vertex(vuln_id) {
                let payload = g_sca
                    .vertex(vuln_id)
                    .expect("forest edge endpoints exist")
                    .payload
                    .clone();
                merged.add_vertex(VertexLabel::Vulnerability, payload)?;
                report.vulnerabilities_added += 1;
            }
            for host in &hosts {
                merged.add_edge(host, vuln_id, EdgeLabel::HasV)?;
            }
            if hosts.len() > 1 {
                ambiguous
                    .entry(vuln_id.to_string())
                    .or_default()
                    .extend(hosts.iter().cloned());
            }
        }
    }

    report.ambiguous_links = ambiguous
        .into_iter()
        .map(|(vulnerability_id, component_ids)| AmbiguousLink {
            vulnerability_id,
            component_ids: component_ids.into_iter().collect(),
        })
        .collect();

    Ok((merged, report))
}
