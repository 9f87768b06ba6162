//! Right-tromino tilings of rectangles with up to two missing cells:
//! deciding, constructing, counting and bounding them.

pub mod analytics;
pub mod board;
pub mod characterize;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod render;
pub mod verify;

pub use board::{Cell, DeficientBoard, Placement, PlacementKind, Rect, SymmetryOp, Tiling};
pub use error::{Error, Result};
