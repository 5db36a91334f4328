//! Numerical verification of a sharpened bound on the pseudo-Gamma function,
//! with supporting evaluators for the Riemann zeta function, the Gamma
//! function, and the completed xi function.
//!
//! The centerpiece is the estimate `|nabla(u)| <= R^(1/(4.4088 R))` for the
//! pseudo-Gamma function `nabla` on the interval `(1/2, 2]`, which this
//! crate verifies end to end: two independent evaluation routes for
//! `nabla`, double-double bound arithmetic for the inequality chain, and
//! [`report::BoundReport`]s capturing every margin.
//!
//! Quick tour:
//!
//! ```
//! use num_complex::Complex64;
//! use pseudogamma::{
//!     nabla_closed, nabla_direct, GridSpec, PrecisionProfile, PseudoGammaParams,
//! };
//!
//! // A toy configuration: R = 100 with 2^9 factors.
//! let p = PseudoGammaParams::toy(100.0, Some(8))?;
//! let s = Complex64::new(1.25, 0.0);
//!
//! // Route one: multiply all 512 factors.
//! let direct = nabla_direct(&p, s)?;
//! // Route two: collapse the product algebraically.
//! let closed = nabla_closed(&p, s, PrecisionProfile::extended())?;
//!
//! let diff = (direct.log_mod() - closed.value.log_mod()).abs();
//! assert!(diff.to_f64() < 1e-12);
//!
//! // The sharpened bound holds on the default grid.
//! let outcome = pseudogamma::theorem1_check(
//!     &p,
//!     &GridSpec::theorem1_default(),
//!     PrecisionProfile::extended(),
//! )?;
//! assert!(outcome.report.holds);
//! # Ok::<(), pseudogamma::PseudoGammaError>(())
//! ```

pub mod classical;
pub mod dd;
pub mod ee_num;
pub mod grid;
pub mod pseudo_gamma;
pub mod report;


pub use classical::{ClassicalError, SeriesTolerance};
pub use dd::Dd;
pub use ee_num::{EeError, LogComplex, PrecisionMode, PrecisionProfile};
pub use grid::{EndpointPolicy, GridError, GridSpec};
pub use pseudo_gamma::{
    dual_route_report, factor_bound_check, nabla_closed, nabla_direct, nonvanishing_check,
    prop2_circle_report, prop2_function_partners, ratio_factor, ratio_factor_unsimplified,
    theorem1_check, ClosedEval, EvalRoute, FactorK, PointEval, Prop2Constants, PseudoGammaError,
    PseudoGammaParams, Regime, Theorem1Outcome, DUAL_ROUTE_TOL, GAMMA_GRAVE, MAX_DIRECT_LOG2,
    PAPER_R, PAPER_T0,
};
pub use report::{BoundReport, ParamsSummary, RunMeta, VerificationReport};
