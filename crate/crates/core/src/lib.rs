//! Intrinsic geometry of the cuboctahedral surface: exact geodesic
//! enumeration by face unfolding, the 8-triangle non-obtuse and 12-triangle
//! acute geodesic triangulations, a triangulation verifier, and machine
//! checkable certificates for the matching lower bounds.

pub mod cli;
pub mod geodesic;
pub mod minimality;
pub mod planar;
pub mod surface;
pub mod svg;
pub mod tolerance;
pub mod triangulation;

pub use surface::{build_cuboctahedron, PolyhedralSurface, SurfacePoint};
pub use tolerance::Tolerances;
