//! Axis configurations, tau-maps and shapes.

mod action;
mod config;
mod graph;
pub mod library;

pub use action::{normalizer, tau_maps, tau_stabilizer, AxisAction, AxisActionSummary, TauMaps};
pub use config::{axis_configurations, STABILIZER_INDEX_CAP};
pub use graph::{enumerate_shapes, enumerate_with, format_counts, parse_shape_string, PairOrbit, Shape, ShapeGraph, ShapeList};

use thiserror::Error;

use crate::permgrp::PermError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("the triple does not consist of involutions generating the group")]
    NotGenerated,
    #[error("invalid axis action: {0}")]
    Invalid(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}
