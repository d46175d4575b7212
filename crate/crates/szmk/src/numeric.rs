//! Small numeric helpers shared across modules.

/// Compensated (Neumaier) summation accumulator.
///
/// Keeps the running error of a plain sum in a carry term, so the total is
/// accurate to one rounding regardless of the number of addends.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    carry: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// exp(y) - 1 - y, evaluated without cancellation for small |y|.
pub(crate) fn exp_m1_minus(y: f64) -> f64 {
    if y.abs() > 0.25 {
        return y.exp_m1() - y;
    }
    // Taylor series y^2/2! + y^3/3! + ...; converges fast for |y| <= 1/4.
    let mut term = y * y / 2.0;
    let mut acc = term;
    let mut n = 3.0;
    while term.abs() > acc.abs() * 1e-18 {
        term *= y / n;
        acc += term;
        n += 1.0;
    }
    acc
}

/// Nudges the largest entry until a plain left-to-right sum of `w` is
/// exactly 1.0. Callers rely on this to reproduce constants bit-exactly.
/// Returns false if the adjustment does not settle (never observed for the
/// weight vectors produced in this crate).
pub(crate) fn normalize_unit_sum(w: &mut [f64]) -> bool {
    for _ in 0..64 {
        let s: f64 = w.iter().sum();
        if s == 1.0 {
            return true;
        }
        let mut imax = 0;
        for (i, v) in w.iter().enumerate() {
            if v.abs() > w[imax].abs() {
                imax = i;
            }
        }
        let prev = w[imax];
        w[imax] += 1.0 - s;
        if w[imax] == prev {
            return false;
        }
    }
    false
}
