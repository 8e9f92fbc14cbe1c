//! Core algorithms for deciding whether two public-transit station
//! identifiers (label + coordinate) denote the same real-world station.
//!
//! This crate is `no_std` (with `alloc`) and carries no IO: station and
//! pair types, geodesic distance and grid encoding, string similarity
//! measures, threshold/voting classifiers, feature extraction and a
//! self-contained random forest. File formats, OSM ingestion, the
//! evaluation harness and the CLI live in the companion `stationmatch`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod features;
pub mod forest;
pub mod geo;
pub mod model;
pub mod simi;
