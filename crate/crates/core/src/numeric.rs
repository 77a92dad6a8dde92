//! Scalar maximization and adaptive quadrature used by the equilibrium solvers.

use crate::error::{Error, Result};

/// Location and value of a scalar maximum.
#[derive(Debug, Clone, Copy)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
}

impl Maximum {
    /// Higher value wins; exact value ties prefer the smaller abscissa.
    fn better_than(&self, other: &Maximum) -> bool {
        self.value > other.value || (self.value == other.value && self.x < other.x)
    }
}

const CGOLD: f64 = 0.381_966_011_250_105_2;

/// Brent's method for a local maximum of `f` on `[lo, hi]`: golden-section
/// steps refined by parabolic interpolation.
pub fn brent_max(f: &mut impl FnMut(f64) -> f64, lo: f64, hi: f64, x_tol: f64) -> Maximum {
    let mut a = lo;
    let mut b = hi;
    let mut x = a + CGOLD * (b - a);
    let mut w = x;
    let mut v = x;
    let mut fx = f(x);
    let mut fw = fx;
    let mut fv = fx;
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;

    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let tol1 = x_tol.max(f64::EPSILON.sqrt() * x.abs() * 1e-4).max(1e-15);
        let tol2 = 2.0 * tol1;
        if (x - m).abs() <= tol2 - 0.5 * (b - a) {
            break;
        }
        let mut take_golden = true;
        if e.abs() > tol1 {
            // Try a parabola through (x, fx), (w, fw), (v, fv).
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let e_prev = e;
            e = d;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = if m > x { tol1 } else { -tol1 };
                }
                take_golden = false;
            }
        }
        if take_golden {
            e = if x < m { b - x } else { a - x };
            d = CGOLD * e;
        }
        let u = if d.abs() >= tol1 {
            x + d
        } else if d > 0.0 {
            x + tol1
        } else {
            x - tol1
        };
        let fu = f(u);
        if fu > fx {
            if u < x {
                b = x;
            } else {
                a = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu > fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu > fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    Maximum { x, value: fx }
}

/// Global-ish maximization on `[lo, hi]`: `seeds` equally spaced evaluations
/// pick the most promising sub-bracket, then Brent refines inside it. Exact
/// value ties keep the smallest abscissa.
pub fn seeded_max(
    f: &mut impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    seeds: usize,
    x_tol: f64,
) -> Maximum {
    assert!(seeds >= 2, "need at least two seeds");
    if !(hi > lo) {
        let value = f(lo);
        return Maximum { x: lo, value };
    }
    let step = (hi - lo) / (seeds - 1) as f64;
    let mut best_idx = 0usize;
    let mut best = Maximum {
        x: lo,
        value: f(lo),
    };
    for i in 1..seeds {
        let x = lo + step * i as f64;
        let value = f(x);
        if value > best.value {
            best = Maximum { x, value };
            best_idx = i;
        }
    }
    let bl = if best_idx == 0 { lo } else { lo + step * (best_idx - 1) as f64 };
    let bh = if best_idx + 1 >= seeds { hi } else { lo + step * (best_idx + 1) as f64 };
    let refined = brent_max(f, bl, bh, x_tol);
    if refined.better_than(&best) {
        refined
    } else {
        best
    }
}

/// Locates a root of `g` by bisection on a sign change over `[lo, hi]`.
/// Returns `None` when the endpoints do not bracket a sign change.
pub fn bisect_root(g: &mut impl FnMut(f64) -> f64, lo: f64, hi: f64) -> Option<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut ga = g(a);
    let gb = g(b);
    if ga == 0.0 {
        return Some(a);
    }
    if gb == 0.0 {
        return Some(b);
    }
    if ga.signum() == gb.signum() {
        return None;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let gm = g(m);
        if gm == 0.0 {
            return Some(m);
        }
        if gm.signum() == ga.signum() {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}

// Gauss-Kronrod 15(7) nodes and weights (positive half, QUADPACK dqk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_2,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, &x) in XGK.iter().enumerate() {
        let (fl, fr) = if i == 7 {
            let fc = f(center);
            (fc, 0.0)
        } else {
            (f(center - half * x), f(center + half * x))
        };
        let fsum = fl + fr;
        kronrod += WGK[i] * fsum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fsum;
        } else if i == 7 {
            gauss += WG[3] * fl;
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, (kronrod - gauss).abs())
}

/// Adaptive Gauss-Kronrod integration of `f` over `[a, b]` with relative
/// tolerance `rel_tol`.
pub fn integrate(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if a >= b {
        return Ok(0.0);
    }
    let (whole, _) = gk15(f, a, b);
    let scale = whole.abs().max(1e-300);
    let budget = rel_tol * scale;
    let mut total = 0.0;
    let mut worst_err = 0.0f64;
    // (lo, hi, depth); panels accepted when their error fits the share of the
    // budget proportional to their length.
    let mut stack = vec![(a, b, 0u32)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let (est, err) = gk15(f, lo, hi);
        let local_budget = budget * ((hi - lo) / (b - a)).max(f64::EPSILON);
        if err <= local_budget || err <= 1e-300 {
            total += est;
        } else if depth >= 48 {
            worst_err = worst_err.max(err);
            total += est;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    if worst_err > 1e6 * budget.max(1e-290) {
        return Err(Error::QuadratureNonConvergence {
            estimate: total,
            error: worst_err,
        });
    }
    Ok(total)
}

/// Integrates over `[a, b]` split at the interior `breakpoints` so each
/// sub-interval sees a smooth integrand.
pub fn integrate_split(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    rel_tol: f64,
) -> Result<f64> {
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x > a && x < b)
        .collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();
    let mut total = 0.0;
    let mut lo = a;
    for cut in cuts {
        total += integrate(f, lo, cut, rel_tol)?;
        lo = cut;
    }
    total += integrate(f, lo, b, rel_tol)?;
    Ok(total)
}

/// Order-independent pairwise sum of already-ordered partial values.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_parabola_vertex() {
        let mut f = |x: f64| -(x - 1.25).powi(2);
        let m = brent_max(&mut f, 0.0, 3.0, 1e-12);
        assert!((m.x - 1.25).abs() < 1e-9, "x = {}", m.x);
    }

    #[test]
    fn seeded_max_escapes_local_maximum() {
        // Two bumps; the global one is narrow and off to the right.
        let mut f = |x: f64| {
            (-((x - 1.0) / 0.5).powi(2)).exp() + 1.5 * (-((x - 6.0) / 0.2).powi(2)).exp()
        };
        let m = seeded_max(&mut f, 0.0, 8.0, 32, 1e-10);
        assert!((m.x - 6.0).abs() < 1e-6, "x = {}", m.x);
    }

    #[test]
    fn seeded_max_ties_prefer_smaller_x() {
        let mut f = |_x: f64| 1.0;
        let m = seeded_max(&mut f, 2.0, 5.0, 8, 1e-10);
        assert_eq!(m.x, 2.0);
    }

    #[test]
    fn gk_integrates_polynomial_exactly() {
        let mut f = |x: f64| 3.0 * x * x;
        let v = integrate(&mut f, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gk_integrates_exponential_tail() {
        let mut f = |x: f64| (-x).exp();
        let v = integrate(&mut f, 0.0, 60.0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-11, "v = {v}");
    }

    #[test]
    fn integrate_split_handles_kink() {
        // |x| has a kink at 0; exact integral over [-1, 2] is 0.5 + 2 = 2.5.
        let mut f = |x: f64| x.abs();
        let v = integrate_split(&mut f, -1.0, 2.0, &[0.0], 1e-12).unwrap();
        assert!((v - 2.5).abs() < 1e-12);
    }

    #[test]
    fn bisect_root_finds_cosine_zero() {
        let mut g = |x: f64| x.cos();
        let r = bisect_root(&mut g, 0.0, 3.0).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn pairwise_sum_matches_naive_on_small_input() {
        let xs = [0.1, 0.2, 0.3, 0.4, 0.5];
        assert!((pairwise_sum(&xs) - 1.5).abs() < 1e-15);
    }
}
