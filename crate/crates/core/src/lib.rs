//! Core model and algorithms for dependency-vulnerability graphs.
//!
//! A `VDGraph` is a directed labeled property graph that fuses the dependency
//! structure of a software project (as inventoried by an SBOM) with the
//! vulnerability findings of a composition-analysis scan. Vertices are the
//! project root, components, or vulnerability advisories; edges are either
//! `depn` (component dependency) or `has_v` (component has vulnerability).
//!
//! This crate is `no_std` + `alloc`: it holds the graph [`model`], the
//! [`merge`] algorithm that fuses the two subgraphs, the reachability and
//! path-count [`query`] algorithms, and the [`stats`] aggregations that feed
//! reports. Document parsing, file formats, and the CLI live in the
//! companion `vdgraph` crate.
//!
//! All containers are ordered (`BTreeMap`/`BTreeSet`), so every operation in
//! this crate is deterministic: equal inputs produce byte-equal outputs
//! regardless of insertion order.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod merge;
pub mod model;
pub mod query;
pub mod stats;
mod warnings;

pub use model::{
    name_version, Component, Edge, EdgeLabel, InsertOutcome, ModelError, Severity, Source,
    VDGraph, Vertex, VertexLabel, VertexPayload, Violation, Vulnerability,
};
pub use warnings::Warnings;
