//! Exact piecewise-linear maps and flows of the interval, the line and the
//! circle.

mod classes;
mod flow;
mod homeo;
mod worldline;

pub use classes::{alexander_flow, circle_degree, translation_class, winding_class};
pub use flow::PlFlow;
pub use homeo::{Ambient, PlHomeo};
pub use worldline::{Trajectory, Worldline, WorldlineComponent};
