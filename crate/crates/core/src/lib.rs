//! Exhaustive verification toolkit for the classification of 3-dicritical
//! semi-complete digraphs.
//!
//! The crate is organised around five building blocks:
//!
//! * [`digraph`] — labelled digraphs on at most 16 vertices with bitset
//!   adjacency rows, canonical codes, subdigraph pattern search and the
//!   `.dmat` text format;
//! * [`dicolour`] — 2-dicolourability, uv-colourings, 3-dicriticality and
//!   maximum acyclic sets;
//! * [`catalog`] — constructors for every fixed digraph used by the search
//!   pipelines (obstructions, the T-family, the eight classified digraphs);
//! * [`enumerate`] — the four exhaustive enumeration pipelines together with
//!   deterministic candidate stores and report rendering;
//! * [`density`] — bidirected parts, tree dearth and the arc-count bounds.

pub mod catalog;
pub mod density;
pub mod dicolour;
pub mod digraph;
pub mod enumerate;
