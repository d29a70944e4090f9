//! Solver library for the oriented two-dimensional bin packing problem under
//! free guillotine cutting (2BP|O|F).
//!
//! A set of rectangular items, each with a fixed orientation, has to be packed
//! into as few `W x H` bins as possible. The library provides:
//!
//! * a deterministic one-pass constructive heuristic ([`lgfi`]) that places
//!   items at the bottom-leftmost frontier position of a skyline,
//! * a probabilistic sequence sampler ([`sampling`]) that perturbs the
//!   heuristic's deterministic item order,
//! * a multi-start driver ([`ms`]) and an evolutionary algorithm ([`ea`])
//!   searching the space of input sequences,
//! * a continuous area lower bound and a desk-scale exact oracle ([`bounds`]),
//! * an integer-programming model builder with LP-format export ([`ilp`]),
//! * benchmark instance generation for the ten classic instance classes
//!   ([`generator`]), text formats for instances and solutions ([`io`]),
//! * SVG rendering of packings ([`render`]) and a benchmark report harness
//!   ([`report`]).
//!
//! The `twobp` binary wraps all of this behind `solve`, `bench`, `generate`,
//! `ilp` and `render` subcommands; the `examples/` directory has one runnable
//! example per capability.

pub mod bounds;
pub mod ea;
pub mod generator;
pub mod ilp;
pub mod io;
pub mod lgfi;
pub mod model;
pub mod ms;
pub mod render;
pub mod report;
pub mod rng;
pub mod sampling;
pub mod skyline;

pub use model::{Fitness, Instance, Item, PackingSolution, Placement, Sequence};
pub use rng::RandomStream;
