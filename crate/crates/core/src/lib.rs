pub mod dist;

pub use dist::ValuationDistribution;
