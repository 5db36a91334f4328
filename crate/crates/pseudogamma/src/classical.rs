//! Classical special functions: the Riemann zeta function (two independent
//! evaluators), log-Gamma via the Weierstrass product, the completed xi
//! function, and residual checks for its functional equation and double
//! symmetry.
//!
//! These evaluators are `f64`-grade (the verified bound chains that need
//! double-double live in [`crate::pseudo_gamma`]); their contracts are
//! honest error reporting at poles/exclusion points and explicitly returned
//! truncation bounds where a series is cut.

use crate::dd::Dd;
use crate::ee_num::{EeError, LogComplex, PrecisionProfile};
use num_complex::Complex64;

/// Euler's constant, `f64`-rounded.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431042159;

/// Convergence policy for the series evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesTolerance {
    /// Target relative error of the returned value.
    pub rel_tol: f64,
    /// Hard cap on series terms before giving up.
    pub max_terms: usize,
}

impl SeriesTolerance {
    /// Validated constructor: `0 < rel_tol < 1`, `max_terms >= 16`.
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self, ClassicalError> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) || max_terms < 16 {
            return Err(ClassicalError::InvalidTolerance { rel_tol, max_terms });
        }
        Ok(SeriesTolerance { rel_tol, max_terms })
    }
}

impl Default for SeriesTolerance {
    fn default() -> Self {
        SeriesTolerance {
            rel_tol: 1e-12,
            max_terms: 200_000,
        }
    }
}

/// Errors from the classical evaluators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassicalError {
    /// Zeta's simple pole.
    #[error("zeta has a simple pole at s = 1")]
    PoleAtOne,
    /// The alternating-series prefactor `1/(1 - 2^(1-s))` blows up on a
    /// lattice of points `s = 1 + 2 pi i k / ln 2`; the evaluator refuses
    /// within 1e-8 of them.
    #[error("s = {re}+{im}i is within 1e-8 of an exclusion point of the alternating series")]
    NearExclusionPoint { re: f64, im: f64 },
    /// The series did not meet `rel_tol` within `max_terms`.
    #[error("series did not converge within {terms} terms")]
    MaxTermsExceeded { terms: usize },
    /// Input outside the evaluator's domain.
    #[error("domain error: {message}")]
    DomainError { message: String },
    /// Gamma's poles at 0, -1, -2, ...
    #[error("Gamma pole at a nonpositive integer (distance {distance:.3e})")]
    PoleAtNonpositiveInteger { distance: f64 },
    /// Rejected tolerance parameters.
    #[error("invalid tolerance: rel_tol = {rel_tol}, max_terms = {max_terms}")]
    InvalidTolerance { rel_tol: f64, max_terms: usize },
    /// A log-domain step failed (zero value or unresolvable cancellation).
    #[error("log-domain arithmetic failed: {0}")]
    Log(#[from] EeError),
}

/// Riemann zeta by the globally convergent alternating double series
/// `zeta(s) = 1/(1 - 2^(1-s)) * sum_n 2^-(n+1) sum_k (-1)^k C(n,k) (k+1)^-s`.
///
/// Valid on all of `C` minus `s = 1` and the prefactor's exclusion lattice.
/// Stops after three consecutive outer terms fall below
/// `max(rel_tol * |acc|, 4 eps * mag_n)`, where `mag_n` is the *unsigned*
/// inner sum. The second operand is the noise floor: an inner sum whose
/// signed value sits within a few eps of its own magnitude budget is
/// numerically indistinguishable from roundoff, which is what makes
/// stopping possible where the sum cancels to ~1e-17 (e.g. at the trivial
/// zeros, where the finite differences vanish exactly).
pub fn zeta_hasse(s: Complex64, tol: &SeriesTolerance) -> Result<Complex64, ClassicalError> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(ClassicalError::PoleAtOne);
    }
    let pref = Complex64::new(1.0, 0.0) - ((1.0 - s) * std::f64::consts::LN_2).exp();
    if pref.norm() < 1e-8 {
        return Err(ClassicalError::NearExclusionPoint { re: s.re, im: s.im });
    }
    let mut powers: Vec<(Complex64, f64)> = Vec::with_capacity(64);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut consecutive = 0u32;
    let mut converged = false;
    let mut n = 0usize;
    while n < tol.max_terms {
        if powers.len() <= n {
            let k1 = (powers.len() + 1) as f64;
            let p = (-s * k1.ln()).exp();
            powers.push((p, p.norm()));
        }
        let w0 = f64::exp2(-(n as f64) - 1.0);
        if w0 == 0.0 {
            // 2^-(n+1) underflowed: the scaled binomial weights are gone.
            return Err(ClassicalError::MaxTermsExceeded { terms: n });
        }
        // Inner alternating sum with Kahan compensation; the weight
        // C(n,k)/2^(n+1) <= ~1 updates multiplicatively.
        let mut weight = w0;
        let mut inner = Complex64::new(0.0, 0.0);
        let mut comp = Complex64::new(0.0, 0.0);
        let mut mag = 0.0f64;
        for (k, &(p, p_mag)) in powers[..=n].iter().enumerate() {
            let signed = if k % 2 == 0 { weight } else { -weight };
            let y = signed * p - comp;
            let t = inner + y;
            comp = (t - inner) - y;
            inner = t;
            mag += weight * p_mag;
            weight *= (n - k) as f64 / (k + 1) as f64;
        }
        acc += inner;
        let floor = 4.0 * f64::EPSILON * mag;
        if inner.norm() < (tol.rel_tol * acc.norm()).max(floor) {
            consecutive += 1;
            if consecutive >= 3 {
                converged = true;
                break;
            }
        } else {
            consecutive = 0;
        }
        n += 1;
    }
    if !converged {
        return Err(ClassicalError::MaxTermsExceeded { terms: tol.max_terms });
    }
    Ok(acc / pref)
}

/// Result of the integral-representation zeta evaluator: the truncated
/// value together with an explicit bound on the dropped tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaIntegralEval {
    pub value: Complex64,
    /// Bound on the modulus of the truncation error:
    /// `|s| / (Re(s) * M^Re(s))`.
    pub tail_bound: f64,
}

/// Riemann zeta for `Re(s) > 0` from the sawtooth integral representation
/// `zeta(s) = s/(s-1) - s * int_1^inf {v} v^-(s+1) dv`, truncated to `M`
/// whole intervals, each integrated in closed form.
///
/// The tail bound is returned, not hidden: near `Re(s) = 1/2` it decays
/// like `M^-1/2`, so this evaluator is a *cross-check* at moderate accuracy
/// there, not a precision tool.
pub fn zeta_integral(s: Complex64, intervals: u32) -> Result<ZetaIntegralEval, ClassicalError> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(ClassicalError::PoleAtOne);
    }
    if s.re <= 0.0 {
        return Err(ClassicalError::DomainError {
            message: format!("integral representation needs Re(s) > 0, got {}", s.re),
        });
    }
    if intervals == 0 {
        return Err(ClassicalError::DomainError {
            message: "at least one interval is required".to_string(),
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let pow = |n: f64, w: Complex64| -> Complex64 { (w * n.ln()).exp() };
    // int_n^(n+1) (v - n) v^-(s+1) dv
    //   = ((n+1)^(1-s) - n^(1-s)) / (1 - s) - n ((n+1)^-s - n^-s) / (-s)
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for n in 1..=intervals {
        let nf = n as f64;
        let a = (pow(nf + 1.0, one - s) - pow(nf, one - s)) / (one - s);
        let b = nf * (pow(nf + 1.0, -s) - pow(nf, -s)) / (-s);
        let term = a - b;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let value = s / (s - one) - s * sum;
    let m = intervals as f64;
    let tail_bound = s.norm() / (s.re * m.powf(s.re));
    Ok(ZetaIntegralEval { value, tail_bound })
}

/// Default interval count targeting a ~1e-8 tail at this `s`, clamped to
/// `[1_000, 200_000]`.
pub fn suggested_intervals(s: Complex64) -> u32 {
    let sigma = s.re.max(1e-6);
    let target = (s.norm() / (sigma * 1e-8)).powf(1.0 / sigma);
    target.clamp(1_000.0, 200_000.0) as u32
}

/// Log-Gamma from the Weierstrass product
/// `1/Gamma(s) = s e^(gamma s) prod_n (1 + s/n) e^(-s/n)`,
/// i.e. `log Gamma(s) = -log s - gamma s + sum_n [s/n - log(1 + s/n)]`.
///
/// The sum is truncated at `M` terms chosen from the target tolerance and
/// completed with an Euler-Maclaurin tail (integral + three correction
/// terms), which keeps `M` in the thousands instead of the ~1e11 a bare
/// truncation would need at 1e-12 accuracy.
pub fn gamma_weierstrass(
    s: Complex64,
    tol: &SeriesTolerance,
) -> Result<LogComplex, ClassicalError> {
    // Poles at the nonpositive integers.
    if s.re <= 0.5 {
        let nearest = s.re.round();
        if nearest <= 0.0 {
            let distance = (s - Complex64::new(nearest, 0.0)).norm();
            if distance < 1e-12 {
                return Err(ClassicalError::PoleAtNonpositiveInteger { distance });
            }
        }
    }
    let norm_s = s.norm();
    // Choose M so the neglected Euler-Maclaurin remainder
    // ~ 10 |s|^2 (|s| + 1) / a^6 sits below rel_tol / 4.
    let a_needed = (40.0 * norm_s * norm_s * (norm_s + 1.0) / tol.rel_tol).powf(1.0 / 6.0);
    let m = (a_needed.ceil() as usize + 8).max(32);
    if m > tol.max_terms {
        return Err(ClassicalError::MaxTermsExceeded { terms: tol.max_terms });
    }
    // f(x) = s/x - log(1 + s/x), summed for x = 1..=M.
    let f_term = |x: f64| -> Complex64 {
        let w = s / x;
        if w.norm() <= 0.25 {
            // sum_{j>=2} (-1)^j w^j / j, to f64 exhaustion.
            let mut p = w * w;
            let mut sign = 1.0;
            let mut acc = Complex64::new(0.0, 0.0);
            let mut j = 2.0;
            loop {
                let contrib = sign * p / j;
                acc += contrib;
                if contrib.norm() < 1e-18 * acc.norm().max(f64::MIN_POSITIVE) || j > 64.0 {
                    break;
                }
                p *= w;
                sign = -sign;
                j += 1.0;
            }
            acc
        } else {
            w - (Complex64::new(1.0, 0.0) + w).ln()
        }
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for x in 1..=m {
        let y = f_term(x as f64) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // Euler-Maclaurin completion of sum_{x=M+1}^inf f(x) at a = M + 1:
    //   integral + f(a)/2 - f'(a)/12 + f'''(a)/720,
    // with  int_a^inf f = (a + s) log(1 + s/a) - s,
    //       f'(x)   = -s^2 / (x^2 (x + s)),
    //       f'''(x) = -s^2 (6/(x^4(x+s)) + 4/(x^3(x+s)^2) + 2/(x^2(x+s)^3)).
    let a = (m + 1) as f64;
    let one = Complex64::new(1.0, 0.0);
    let integral = (a + s) * (one + s / a).ln() - s;
    let xa = Complex64::new(a, 0.0);
    let xs = xa + s;
    let fp = -s * s / (xa * xa * xs);
    let fppp = -s * s
        * (6.0 / (xa.powu(4) * xs) + 4.0 / (xa.powu(3) * xs * xs) + 2.0 / (xa * xa * xs * xs * xs));
    let tail = integral + f_term(a) * 0.5 - fp / 12.0 + fppp / 720.0;
    let log_gamma = -s.ln() - EULER_GAMMA * s + sum + tail;
    Ok(LogComplex::from_polar(Dd::from(log_gamma.re), log_gamma.im)?)
}

/// The completed xi function
/// `xi(s) = pi^(-s/2) * [ (s/2) Gamma(s/2) ] * [ (s - 1) zeta(s) ]`,
/// with the removable limits hardwired: the Gamma-side factor is 1 at
/// `s = 0` and the zeta-side factor is 1 at `s = 1`, giving
/// `xi(0) = xi(1) = 1/2` exactly from the construction.
pub fn xi(s: Complex64, tol: &SeriesTolerance) -> Result<LogComplex, ClassicalError> {
    let xi_gamma = if s.norm() < 1e-12 {
        LogComplex::ONE
    } else {
        let half_s = s / 2.0;
        let factor = LogComplex::from_cartesian(half_s.re, half_s.im)?;
        factor.mul(&gamma_weierstrass(half_s, tol)?)
    };
    let xi_zeta = if (s - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        LogComplex::ONE
    } else {
        let sm1 = s - Complex64::new(1.0, 0.0);
        let factor = LogComplex::from_cartesian(sm1.re, sm1.im)?;
        let z = zeta_hasse(s, tol)?;
        factor.mul(&LogComplex::from_cartesian(z.re, z.im)?)
    };
    let ln_pi = Dd::PI.ln();
    let pi_pow = LogComplex::from_polar(
        ln_pi * (-s.re / 2.0),
        -s.im / 2.0 * ln_pi.to_f64(),
    )?;
    Ok(pi_pow.mul(&xi_gamma).mul(&xi_zeta))
}

/// Relative residual of the reflection identity
/// `pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s) = pi^(-s/2) Gamma(s/2) zeta(s)`,
/// as `|L - R| / (|L| + |R|)`. An exact log-domain cancellation counts as a
/// residual of zero.
pub fn functional_eq_residual(
    s: Complex64,
    tol: &SeriesTolerance,
) -> Result<f64, ClassicalError> {
    let completed = |v: Complex64| -> Result<LogComplex, ClassicalError> {
        let ln_pi = Dd::PI.ln();
        let pi_pow = LogComplex::from_polar(
            ln_pi * (-v.re / 2.0),
            -v.im / 2.0 * ln_pi.to_f64(),
        )?;
        let g = gamma_weierstrass(v / 2.0, tol)?;
        let z = zeta_hasse(v, tol)?;
        Ok(pi_pow
            .mul(&g)
            .mul(&LogComplex::from_cartesian(z.re, z.im)?))
    };
    let left = completed(Complex64::new(1.0, 0.0) - s)?;
    let right = completed(s)?;
    match left.sub(&right, PrecisionProfile::extended()) {
        Ok(diff) => Ok(diff.modulus() / (left.modulus() + right.modulus())),
        Err(EeError::CancellationToZero { .. }) => Ok(0.0),
        Err(e) => Err(ClassicalError::Log(e)),
    }
}

/// Residuals of the double symmetry `f(conj s) = conj f(s)` and
/// `f(1 - s) = f(s)`, each normalized by `|f(s)| + 1e-300`.
pub fn double_symmetry_residual<E>(
    f: impl Fn(Complex64) -> Result<Complex64, E>,
    s: Complex64,
) -> Result<(f64, f64), E> {
    let fs = f(s)?;
    let f_conj = f(s.conj())?;
    let f_refl = f(Complex64::new(1.0, 0.0) - s)?;
    let guard = fs.norm() + 1e-300;
    Ok((
        (f_conj - fs.conj()).norm() / guard,
        (f_refl - fs).norm() / guard,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> SeriesTolerance {
        SeriesTolerance::default()
    }

    #[test]
    fn tolerance_validation() {
        assert!(SeriesTolerance::new(1e-10, 1000).is_ok());
        assert!(matches!(
            SeriesTolerance::new(0.0, 1000),
            Err(ClassicalError::InvalidTolerance { .. })
        ));
        assert!(matches!(
            SeriesTolerance::new(1.5, 1000),
            Err(ClassicalError::InvalidTolerance { .. })
        ));
        assert!(matches!(
            SeriesTolerance::new(1e-10, 8),
            Err(ClassicalError::InvalidTolerance { .. })
        ));
    }

    #[test]
    fn zeta_pole_and_exclusion() {
        assert_eq!(
            zeta_hasse(Complex64::new(1.0, 0.0), &tol()),
            Err(ClassicalError::PoleAtOne)
        );
        // First exclusion point above the real axis: 1 + 2 pi i / ln 2.
        let t1 = 2.0 * std::f64::consts::PI / std::f64::consts::LN_2;
        let s = Complex64::new(1.0, t1);
        assert!(matches!(
            zeta_hasse(s, &tol()),
            Err(ClassicalError::NearExclusionPoint { .. })
        ));
        // Slightly off the lattice works.
        let s = Complex64::new(1.0, t1 + 0.1);
        assert!(zeta_hasse(s, &tol()).is_ok());
    }

    #[test]
    fn zeta_trivial_zero_stops_via_noise_floor() {
        // At s = -2 the sum cancels to ~1e-17; without the noise-floor
        // clause the relative stopping rule would never fire.
        let z = zeta_hasse(Complex64::new(-2.0, 0.0), &tol()).unwrap();
        assert!(z.norm() < 1e-9, "zeta(-2) = {z}");
    }

    #[test]
    fn zeta_integral_domain_checks() {
        assert!(matches!(
            zeta_integral(Complex64::new(-0.5, 3.0), 1000),
            Err(ClassicalError::DomainError { .. })
        ));
        assert_eq!(
            zeta_integral(Complex64::new(1.0, 0.0), 1000),
            Err(ClassicalError::PoleAtOne)
        );
        let ev = zeta_integral(Complex64::new(2.0, 0.0), 10_000).unwrap();
        assert!(ev.tail_bound < 1e-7);
        assert!((ev.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() < ev.tail_bound);
    }

    #[test]
    fn gamma_pole_detection() {
        for k in [0.0, -1.0, -5.0] {
            let err = gamma_weierstrass(Complex64::new(k, 0.0), &tol());
            assert!(
                matches!(err, Err(ClassicalError::PoleAtNonpositiveInteger { .. })),
                "at {k}: {err:?}"
            );
        }
        // Distance is reported.
        if let Err(ClassicalError::PoleAtNonpositiveInteger { distance }) =
            gamma_weierstrass(Complex64::new(-3.0, 1e-13), &tol())
        {
            assert!((distance - 1e-13).abs() < 1e-15);
        } else {
            panic!("expected pole error");
        }
        // Near but not at a pole still evaluates.
        assert!(gamma_weierstrass(Complex64::new(-2.5, 0.0), &tol()).is_ok());
    }

    #[test]
    fn xi_removable_points_are_hardwired() {
        // xi(0) = xi(1) = 1/2 must come out exactly from the hardwired
        // limit factors (modulo the f64-grade pi/zeta/Gamma parts).
        let at0 = xi(Complex64::new(0.0, 0.0), &tol()).unwrap();
        let at1 = xi(Complex64::new(1.0, 0.0), &tol()).unwrap();
        let (re0, im0) = at0.to_cartesian();
        let (re1, im1) = at1.to_cartesian();
        assert!((re0 - 0.5).abs() < 1e-10 && im0.abs() < 1e-12, "xi(0) = {re0}+{im0}i");
        assert!((re1 - 0.5).abs() < 1e-10 && im1.abs() < 1e-12, "xi(1) = {re1}+{im1}i");
    }

    #[test]
    fn functional_equation_residual_is_small_off_axis() {
        let r = functional_eq_residual(Complex64::new(0.3, 2.0), &tol()).unwrap();
        assert!(r < 1e-10, "residual {r}");
    }
}
