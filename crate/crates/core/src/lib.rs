//! Deterministic gasket point-set pipelines.
//!
//! Two constructions of the same family of figures: recursive midpoint
//! subdivision of a triangle, and iteration of a three-map similitude
//! system over a base vector. Generated paths can be pushed through
//! elementwise complex post-maps (`z^n`, `exp(z^(p/q))`) and rendered to
//! SVG, PPM or CSV with byte-deterministic output.

pub mod complex;
pub mod error;
pub mod gasket;
pub mod ifs;
pub mod path;
pub mod plot;
pub mod postmap;

pub use complex::{cexp, principal_arg, principal_power, wrap_angle, Complex};
pub use error::{Error, Result};
pub use gasket::{initial_triangle, iterate_gasket, triangles_to_path, Triangle, TriangleLevel};
pub use ifs::{
    base_vector, check_depth, classify_sentinels, concat3, concat_blocks, generate, ifs_step,
    BaseMode, IfsSystem, SentinelSplit, Similitude,
};
pub use path::{PathElement, PointPath};
pub use plot::{
    fit_viewport, read_csv, render_ppm, render_svg, write_csv, PlotMode, RenderStyle, Viewport,
};
pub use postmap::{apply_post_map, sector_span, PostMap};
