//! Exact construction of hat-family supertiles, their supervectors and the
//! `G_n` sequence, with an SVG renderer.

pub mod exactnum;
pub mod geometry;
pub mod render;
pub mod sequences;
pub mod substitution;
pub mod supervectors;
