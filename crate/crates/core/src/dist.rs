use statrs::distribution::{Continuous, ContinuousCDF, Gamma as StatrsGamma};
use statrs::function::gamma::gamma_ur;

pub enum ValuationDistribution {
    Exponential { alpha: f64 },
    Gamma { shape: f64, scale: f64 },
}

pub fn probe() -> f64 {
    let g = StatrsGamma::new(2.0, 1.0 / 0.5).unwrap();
    g.pdf(1.0) + g.cdf(1.0) + g.inverse_cdf(0.5) + gamma_ur(2.0, 2.0)
}
