//! Truncated Puiseux series and the Newton polygon expansion engine.

mod newton;
mod series;

pub use newton::{
    expand_at_origin, expand_at_point, local_solution_count, shift_chart, Edge, ExpansionOptions,
    NewtonPolygon,
};
pub(crate) use series::root_of_unity;
pub use series::{format_exponent, parse_exponent, Exponent, PuiseuxSeries};
