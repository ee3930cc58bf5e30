//! Proper conflict-free (PCF) coloring toolkit.
//!
//! A PCF c-coloring is a proper coloring in which every non-isolated vertex
//! has some color appearing exactly once on its neighborhood. The crate
//! provides the graph model ([`graph`], [`plane`]), exact maximum-average-
//! degree computation ([`mad`]), the PCF verifier and exact solver
//! ([`coloring`], [`solver`]), a constructive colorer driven by reducible
//! configurations ([`reducer`]), and a mechanical discharging engine with
//! charge audits ([`discharge`]).

pub mod coloring;
pub mod discharge;
pub mod error;
pub mod generate;
pub mod graph;
pub mod mad;
pub mod plane;
pub mod rational;
pub mod reducer;
pub mod solver;
pub mod structure;
pub mod threads;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use rational::{ratio, Rational};
