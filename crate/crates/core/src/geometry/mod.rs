//! Problems, grids and overlapping decompositions.
//!
//! Every subdomain is an index box over global interior nodes. Interface
//! values are read from the subdomain whose non-overlapping core owns the
//! node, so each read has exactly one source.

mod layout;
mod mesh;
mod problem;

pub use layout::{
    decompose_1d, decompose_2d, make_grid_1d, BoundaryNode, DecompositionLayout1D,
    DecompositionLayout2D, Grid1D, InterfacePair, InterfaceRead, Layout, OverlapConvention,
    SubdomainBox,
};
pub use mesh::{assemble_forcing, Mesh};
pub use problem::{ProblemSpec, SpaceFn, SpaceTimeFn};
