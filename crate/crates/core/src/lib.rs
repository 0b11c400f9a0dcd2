//! Class-preserving automorphisms of finite groups, computed from dense
//! multiplication tables.
//!
//! The crate is organized as a pipeline:
//!
//! * [`group`] — validated multiplication tables and elementary operations
//!   (products, conjugacy classes, subgroups, quotients);
//! * [`construct`] — closed-form builders for standard families, used as an
//!   independent reference in tests;
//! * [`presentation`] / [`coset`] — a parser for finite presentations and a
//!   Todd–Coxeter enumerator that turns them into tables;
//! * [`structure`] — centers, central series, Frattini subgroups, Camina
//!   pairs and the other invariants a verdict depends on;
//! * [`automorphism`] — inner, central and class-preserving automorphism
//!   enumeration, with per-element conjugator witnesses;
//! * [`theorem`] — the order-p^5 criterion for non-inner class-preserving
//!   automorphisms, checked against direct enumeration.

pub mod abelian;
pub mod automorphism;
pub mod construct;
pub mod coset;
pub mod error;
pub mod group;
pub mod presentation;
pub mod report;
pub mod structure;
pub mod theorem;

pub use error::{Error, Result};
pub use group::{Elem, GroupTable, SubgroupSet};
