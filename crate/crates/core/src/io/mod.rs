//! Interchange formats and rendering.

pub mod geometry;
pub mod json;
pub mod svg;
