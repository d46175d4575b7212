//! Registry of test functions with derivative and growth metadata.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Shared real-valued function of one variable.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Exact total variation of the derivative on [lo, hi], when known.
pub type TvOracle = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Error, Debug)]
pub enum FuncsError {
    #[error("unknown function `{name}`; available: {available}")]
    UnknownFunction { name: String, available: String },
    #[error("function `{name}` has no registered derivative of order {order}")]
    MissingDerivative { name: String, order: u8 },
    #[error("malformed parameter in `{0}`; expected a literal like `abs_shift(1.5)`")]
    BadParameter(String),
}

/// How fast |f(t)| can grow as t increases. Operator evaluation refuses
/// exponential-class functions whose values overflow on the truncated range.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GrowthClass {
    Bounded,
    Polynomial,
    Exponential,
}

/// One-sided derivative rules for functions whose derivative jumps.
#[derive(Clone)]
pub struct BvMetadata {
    /// Right derivative, defined for every t >= 0.
    pub dplus: RealFn,
    /// Left derivative, defined for every t > 0.
    pub dminus: RealFn,
    /// Exact variation of the (right-continuous) derivative on [lo, hi].
    pub tv_oracle: Option<TvOracle>,
}

/// A named function together with the metadata the bound machinery needs.
#[derive(Clone)]
pub struct TestFunction {
    name: String,
    f: RealFn,
    pub d1: Option<RealFn>,
    pub d2: Option<RealFn>,
    pub growth: GrowthClass,
    pub bv: Option<BvMetadata>,
    deriv_check_range: (f64, f64),
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("growth", &self.growth)
            .finish()
    }
}

impl TestFunction {
    pub fn new(name: impl Into<String>, growth: GrowthClass, f: RealFn) -> Self {
        TestFunction {
            name: name.into(),
            f,
            d1: None,
            d2: None,
            growth,
            bv: None,
            deriv_check_range: (0.0, 5.0),
        }
    }

    pub fn with_derivatives(mut self, d1: RealFn, d2: RealFn) -> Self {
        self.d1 = Some(d1);
        self.d2 = Some(d2);
        self
    }

    pub fn with_bv(mut self, bv: BvMetadata) -> Self {
        self.bv = Some(bv);
        self
    }

    pub fn with_deriv_check_range(mut self, lo: f64, hi: f64) -> Self {
        self.deriv_check_range = (lo, hi);
        self
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Interval on which derivative spot-checks are well posed (derivatives
    /// of sqrt degenerate at 0, so its range starts away from the origin).
    pub fn deriv_check_range(&self) -> (f64, f64) {
        self.deriv_check_range
    }

    /// The monomial t^i.
    pub fn monomial(i: u32) -> Self {
        let name = format!("e{i}");
        if i == 0 {
            return Self::constant_named(name, 1.0);
        }
        let f: RealFn = Arc::new(move |t: f64| t.powi(i as i32));
        let d1: RealFn = Arc::new(move |t: f64| i as f64 * t.powi(i as i32 - 1));
        let d2: RealFn = if i == 1 {
            Arc::new(|_| 0.0)
        } else {
            Arc::new(move |t: f64| (i * (i - 1)) as f64 * t.powi(i as i32 - 2))
        };
        let mut tf = Self::new(name, GrowthClass::Polynomial, f).with_derivatives(d1.clone(), d2);
        if i == 1 {
            tf.bv = Some(BvMetadata {
                dplus: d1.clone(),
                dminus: d1,
                tv_oracle: Some(Arc::new(|_, _| 0.0)),
            });
        }
        tf
    }

    pub fn constant(c: f64) -> Self {
        Self::constant_named(format!("constant({c})"), c)
    }

    fn constant_named(name: String, c: f64) -> Self {
        let zero: RealFn = Arc::new(|_| 0.0);
        Self::new(name, GrowthClass::Bounded, Arc::new(move |_| c))
            .with_derivatives(zero.clone(), zero.clone())
            .with_bv(BvMetadata {
                dplus: zero.clone(),
                dminus: zero,
                tv_oracle: Some(Arc::new(|_, _| 0.0)),
            })
    }

    /// |t - c|: continuous, with a derivative jump of size 2 at c.
    pub fn abs_shift(c: f64) -> Self {
        let f: RealFn = Arc::new(move |t: f64| (t - c).abs());
        let dplus: RealFn = Arc::new(move |t: f64| if t >= c { 1.0 } else { -1.0 });
        let dminus: RealFn = Arc::new(move |t: f64| if t > c { 1.0 } else { -1.0 });
        Self::new(format!("abs_shift({c})"), GrowthClass::Polynomial, f).with_bv(BvMetadata {
            dplus,
            dminus,
            tv_oracle: Some(Arc::new(move |lo, hi| {
                if c > lo && c <= hi {
                    2.0
                } else {
                    0.0
                }
            })),
        })
    }
}

fn x2expx() -> TestFunction {
    TestFunction::new(
        "x2expx",
        GrowthClass::Exponential,
        Arc::new(|t: f64| t * t * t.exp()),
    )
    .with_derivatives(
        Arc::new(|t: f64| (t * t + 2.0 * t) * t.exp()),
        Arc::new(|t: f64| (t * t + 4.0 * t + 2.0) * t.exp()),
    )
}

fn xcos2x1() -> TestFunction {
    TestFunction::new(
        "xcos2x1",
        GrowthClass::Polynomial,
        Arc::new(|t: f64| t * (2.0 * t + 1.0).cos()),
    )
    .with_derivatives(
        Arc::new(|t: f64| (2.0 * t + 1.0).cos() - 2.0 * t * (2.0 * t + 1.0).sin()),
        Arc::new(|t: f64| -4.0 * (2.0 * t + 1.0).sin() - 4.0 * t * (2.0 * t + 1.0).cos()),
    )
}

fn sqrt_fn() -> TestFunction {
    TestFunction::new("sqrt", GrowthClass::Polynomial, Arc::new(|t: f64| t.sqrt()))
        .with_derivatives(
            Arc::new(|t: f64| 0.5 / t.sqrt()),
            Arc::new(|t: f64| -0.25 / (t * t.sqrt())),
        )
        .with_deriv_check_range(0.25, 5.0)
}

fn cos_fn() -> TestFunction {
    let d1: RealFn = Arc::new(|t: f64| -t.sin());
    TestFunction::new("cos", GrowthClass::Bounded, Arc::new(|t: f64| t.cos()))
        .with_derivatives(d1.clone(), Arc::new(|t: f64| -t.cos()))
        .with_bv(BvMetadata {
            dplus: d1.clone(),
            dminus: d1,
            tv_oracle: None,
        })
}

/// Base names accepted by [`registry_get`]. `abs_shift` and `constant` take
/// a literal parameter, e.g. `abs_shift(1.5)`.
pub const REGISTRY_NAMES: [&str; 10] = [
    "e0",
    "e1",
    "e2",
    "e3",
    "x2expx",
    "xcos2x1",
    "sqrt",
    "cos",
    "abs_shift(c)",
    "constant(c)",
];

/// Looks up a function by name. Parameterized entries parse their argument
/// from the name itself.
pub fn registry_get(name: &str) -> Result<TestFunction, FuncsError> {
    match name {
        "e0" => return Ok(TestFunction::monomial(0)),
        "e1" => return Ok(TestFunction::monomial(1)),
        "e2" => return Ok(TestFunction::monomial(2)),
        "e3" => return Ok(TestFunction::monomial(3)),
        "x2expx" => return Ok(x2expx()),
        "xcos2x1" => return Ok(xcos2x1()),
        "sqrt" => return Ok(sqrt_fn()),
        "cos" => return Ok(cos_fn()),
        _ => {}
    }
    for (prefix, build) in [
        ("abs_shift", TestFunction::abs_shift as fn(f64) -> TestFunction),
        ("constant", TestFunction::constant as fn(f64) -> TestFunction),
    ] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let inner = rest
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| FuncsError::BadParameter(name.to_string()))?;
            let c: f64 = inner
                .trim()
                .parse()
                .map_err(|_| FuncsError::BadParameter(name.to_string()))?;
            return Ok(build(c));
        }
    }
    Err(FuncsError::UnknownFunction {
        name: name.to_string(),
        available: REGISTRY_NAMES.join(", "),
    })
}

/// Relative deviations of d1 and d2 from central differences at `x`
/// (step 1e-5). d1 is differenced from the function values; d2 is
/// differenced from d1, which keeps the check well conditioned.
/// Deviations are scaled by 1 + |derivative|.
pub fn finite_diff_check(f: &TestFunction, x: f64) -> Result<(f64, f64), FuncsError> {
    let d1 = f.d1.as_ref().ok_or_else(|| FuncsError::MissingDerivative {
        name: f.name.clone(),
        order: 1,
    })?;
    let d2 = f.d2.as_ref().ok_or_else(|| FuncsError::MissingDerivative {
        name: f.name.clone(),
        order: 2,
    })?;
    let h = 1e-5;
    let cd1 = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
    let cd2 = (d1(x + h) - d1(x - h)) / (2.0 * h);
    let v1 = d1(x);
    let v2 = d2(x);
    Ok((
        (cd1 - v1).abs() / (1.0 + v1.abs()),
        (cd2 - v2).abs() / (1.0 + v2.abs()),
    ))
}
