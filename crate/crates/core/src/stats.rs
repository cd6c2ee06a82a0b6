//! Aggregations behind the evaluation reports: per-project counts, depth
//! histograms split by severity, and cross-project roll-ups.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::model::{Severity, VDGraph};
use crate::query::{self, DepthRecord, PathCountRecord, QueryError, SeverityFilter};

/// Headline counts for one project graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProjectStats {
    pub project_name: String,
    /// Component vertices of any source; the root is not counted.
    pub components: usize,
    pub vulnerabilities: usize,
    pub build_runtime_seconds: f64,
}

/// Exact vertex counts for a merged graph.
pub fn project_stats(graph: &VDGraph, name: &str, build_runtime_seconds: f64) -> ProjectStats {
    ProjectStats {
        project_name: name.to_string(),
        components: graph.component_count(),
        vulnerabilities: graph.vulnerability_count(),
        build_runtime_seconds,
    }
}

/// Per-severity tallies inside one histogram bucket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeverityCounts {
    pub low: u64,
    pub moderate: u64,
    pub high: u64,
    pub critical: u64,
    pub unknown: u64,
}

impl SeverityCounts {
    pub fn bump(&mut self, severity: Severity) {
        *self.slot(severity) += 1;
    }

    pub fn get(&self, severity: Severity) -> u64 {
        match severity {
            Severity::Low => self.low,
            Severity::Moderate => self.moderate,
            Severity::High => self.high,
            Severity::Critical => self.critical,
            Severity::Unknown => self.unknown,
        }
    }

    pub fn total(&self) -> u64 {
        self.low + self.moderate + self.high + self.critical + self.unknown
    }

    fn slot(&mut self, severity: Severity) -> &mut u64 {
        match severity {
            Severity::Low => &mut self.low,
            Severity::Moderate => &mut self.moderate,
            Severity::High => &mut self.high,
            Severity::Critical => &mut self.critical,
            Severity::Unknown => &mut self.unknown,
        }
    }
}

/// Distribution of shortest root-to-vulnerability path lengths, split by
/// severity.
///
/// `mean` and `median` are over the full path length including the terminal
/// vulnerability link; `mean_dependency_hops` is the same distribution with
/// that link excluded, reported alongside because both readings of
/// "dependency depth" are in circulation.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthHistogram {
    pub buckets: BTreeMap<u64, SeverityCounts>,
    pub mean: Option<f64>,
    pub median: Option<f64>,
    pub mean_dependency_hops: Option<f64>,
    total: u64,
}

impl DepthHistogram {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Fraction of records at `depth` or less; 0.0 for an empty histogram.
    /// Non-decreasing in `depth` and reaches 1.0 at the deepest bucket.
    pub fn cumulative_at(&self, depth: u64) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let upto: u64 = self
            .buckets
            .range(..=depth)
            .map(|(_, counts)| counts.total())
            .sum();
        upto as f64 / self.total as f64
    }
}

/// Buckets depth records and computes their summary statistics.
pub fn depth_histogram(records: &[DepthRecord]) -> DepthHistogram {
    let mut buckets: BTreeMap<u64, SeverityCounts> = BTreeMap::new();
    for record in records {
        buckets.entry(record.depth).or_default().bump(record.severity);
    }
    let total = records.len() as u64;
    let (mean, median, mean_dependency_hops) = if total == 0 {
        (None, None, None)
    } else {
        let sum: u64 = buckets.iter().map(|(d, c)| d * c.total()).sum();
        let mean = sum as f64 / total as f64;
        (
            Some(mean),
            Some(median_from_buckets(&buckets, total)),
            Some(mean - 1.0),
        )
    };
    DepthHistogram {
        buckets,
        mean,
        median,
        mean_dependency_hops,
        total,
    }
}

/// Median over bucketed counts: the middle value, or the midpoint of the two
/// middle values for an even total.
fn median_from_buckets(buckets: &BTreeMap<u64, SeverityCounts>, total: u64) -> f64 {
    let lower_pos = (total - 1) / 2;
    let upper_pos = total / 2;
    let mut seen = 0u64;
    let mut lower = None;
    let mut upper = None;
    for (depth, counts) in buckets {
        let next = seen + counts.total();
        if lower.is_none() && lower_pos < next {
            lower = Some(*depth);
        }
        if upper.is_none() && upper_pos < next {
            upper = Some(*depth);
        }
        seen = next;
        if lower.is_some() && upper.is_some() {
            break;
        }
    }
    let lower = lower.expect("total matches bucket sum") as f64;
    let upper = upper.expect("total matches bucket sum") as f64;
    (lower + upper) / 2.0
}

/// Distribution of shortest root-to-component path lengths (vulnerable or
/// not). Components with no path from the root are tallied separately.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentDepthSummary {
    pub buckets: BTreeMap<u64, u64>,
    pub unreachable: u64,
    pub mean: Option<f64>,
    pub median: Option<f64>,
    total: u64,
}

impl ComponentDepthSummary {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Fraction of reachable components at `depth` or less.
    pub fn cumulative_at(&self, depth: u64) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let upto: u64 = self.buckets.range(..=depth).map(|(_, n)| n).sum();
        upto as f64 / self.total as f64
    }
}

/// Buckets per-component depths as produced by `query::component_depths`.
pub fn component_depth_summary(depths: &[(String, Option<u64>)]) -> ComponentDepthSummary {
    let mut buckets: BTreeMap<u64, u64> = BTreeMap::new();
    let mut unreachable = 0u64;
    for (_, depth) in depths {
        match depth {
            Some(d) => *buckets.entry(*d).or_default() += 1,
            None => unreachable += 1,
        }
    }
    let total: u64 = buckets.values().sum();
    let (mean, median) = if total == 0 {
        (None, None)
    } else {
        let sum: u64 = buckets.iter().map(|(d, n)| d * n).sum();
        let severity_shaped: BTreeMap<u64, SeverityCounts> = buckets
            .iter()
            .map(|(d, n)| {
                (
                    *d,
                    SeverityCounts {
                        unknown: *n,
                        ..SeverityCounts::default()
                    },
                )
            })
            .collect();
        (
            Some(sum as f64 / total as f64),
            Some(median_from_buckets(&severity_shaped, total)),
        )
    };
    ComponentDepthSummary {
        buckets,
        unreachable,
        mean,
        median,
        total,
    }
}

/// The `n` components with the largest path counts among those carrying a
/// vulnerability admitted by `filter`.
pub fn top_reachable(
    graph: &VDGraph,
    n: usize,
    filter: &SeverityFilter,
) -> Result<Vec<PathCountRecord>, QueryError> {
    let mut records = query::path_counts_by_severity(graph, filter)?;
    records.truncate(n);
    Ok(records)
}

/// Everything one project contributes to a cross-project roll-up.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectSummary {
    pub stats: ProjectStats,
    pub vulnerability_depths: Vec<DepthRecord>,
    pub component_depths: Vec<(String, Option<u64>)>,
}

/// Cross-project totals and merged distributions. Projects stay independent
/// graphs: counts add up, nothing is deduplicated across them.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateSummary {
    /// Per-project rows in input order.
    pub projects: Vec<ProjectStats>,
    pub total_components: usize,
    pub total_vulnerabilities: usize,
    pub depth_histogram: DepthHistogram,
    pub component_depth_summary: ComponentDepthSummary,
}

pub fn aggregate_projects(projects: &[ProjectSummary]) -> AggregateSummary {
    let mut all_depths: Vec<DepthRecord> = Vec::new();
    let mut all_component_depths: Vec<(String, Option<u64>)> = Vec::new();
    for project in projects {
        all_depths.extend(project.vulnerability_depths.iter().cloned());
        all_component_depths.extend(project.component_depths.iter().cloned());
    }
    AggregateSummary {
        projects: projects.iter().map(|p| p.stats.clone()).collect(),
        total_components: projects.iter().map(|p| p.stats.components).sum(),
        total_vulnerabilities: projects.iter().map(|p| p.stats.vulnerabilities).sum(),
        depth_histogram: depth_histogram(&all_depths),
        component_depth_summary: component_depth_summary(&all_component_depths),
    }
}
