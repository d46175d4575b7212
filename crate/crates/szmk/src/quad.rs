//! Fixed-order Gauss-Legendre quadrature on the unit interval.

use crate::numeric::normalize_unit_sum;

/// A Gauss-Legendre rule mapped to (0, 1).
///
/// `weights` sum to exactly 1.0 under plain left-to-right addition, so the
/// mean of a constant over any interval is reproduced bit-exactly. The rule
/// integrates polynomials of degree <= 2*order - 1 exactly.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be at least 1");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th root of P_n, refined by Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..64 {
                let (p, d) = legendre_with_deriv(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() <= 1e-16 * (1.0 + x.abs()) {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // Roots come out in descending order; store ascending on (0, 1).
            nodes[i] = 0.5 * (1.0 - x);
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.5;
        }
        normalize_unit_sum(&mut weights);
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes in (0, 1), ascending.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights for the unit interval; left-to-right sum is exactly 1.0.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Mean value of `f` over [lo, hi] (the integral divided by the length).
    pub fn mean<F: FnMut(f64) -> f64>(&self, lo: f64, hi: f64, mut f: F) -> f64 {
        let len = hi - lo;
        let mut s = 0.0;
        for (u, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(lo + len * u);
        }
        s
    }

    /// Integral of `f` over [lo, hi].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        (hi - lo) * self.mean(lo, hi, f)
    }
}

/// P_n(x) and its derivative via the three-term recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference 8-point values on [-1, 1], e.g. Abramowitz & Stegun table 25.4.
    const NODES_8: [f64; 4] = [
        0.1834346424956498,
        0.5255324099163290,
        0.7966664774136267,
        0.9602898564975363,
    ];
    const WEIGHTS_8: [f64; 4] = [
        0.3626837833783620,
        0.3137066458778873,
        0.2223810344533745,
        0.1012285362903763,
    ];

    #[test]
    fn order_8_matches_reference_table() {
        let rule = GaussLegendre::new(8);
        for i in 0..4 {
            let lo = rule.nodes()[3 - i];
            let hi = rule.nodes()[4 + i];
            assert!((hi - 0.5 * (1.0 + NODES_8[i])).abs() < 1e-15);
            assert!((lo - 0.5 * (1.0 - NODES_8[i])).abs() < 1e-15);
            assert!((rule.weights()[4 + i] - 0.5 * WEIGHTS_8[i]).abs() < 1e-15);
        }
    }

    #[test]
    fn weights_sum_exactly_to_one() {
        for order in 1..=32 {
            let rule = GaussLegendre::new(order);
            let s: f64 = rule.weights().iter().sum();
            assert_eq!(s, 1.0, "order {order}");
            assert_eq!(rule.mean(2.0, 7.0, |_| 1.0), 1.0, "order {order}");
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let rule = GaussLegendre::new(8);
        for deg in 0..=15u32 {
            let got = rule.integrate(0.0, 1.0, |t| t.powi(deg as i32));
            let want = 1.0 / (deg as f64 + 1.0);
            assert!(
                (got - want).abs() <= 1e-15,
                "degree {deg}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn order_one_is_the_midpoint_rule() {
        let rule = GaussLegendre::new(1);
        assert_eq!(rule.nodes(), &[0.5]);
        assert_eq!(rule.weights(), &[1.0]);
    }

    #[test]
    fn integrates_over_shifted_intervals() {
        let rule = GaussLegendre::new(8);
        let got = rule.integrate(0.5, 1.0, |t| t * t);
        assert!((got - 7.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    #[should_panic(expected = "at least 1")]
    fn rejects_order_zero() {
        GaussLegendre::new(0);
    }
}
