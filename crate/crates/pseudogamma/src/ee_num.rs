//! Log-polar complex numbers with an extended exponent range.
//!
//! The quantities this crate manipulates have moduli like `exp(-4e49)` —
//! far outside `f64`'s exponent range — while their *logarithms* fit
//! comfortably. A [`LogComplex`] stores a nonzero complex number as
//! `exp(log_mod) * exp(i arg)` with the log-modulus in double-double
//! precision ([`Dd`]) and the phase as an `f64` in `(-pi, pi]`.
//!
//! Multiplicative structure (mul/div/powers) is exact up to rounding in the
//! log domain. Addition is the delicate operation: it factors out the larger
//! modulus and evaluates `|1 + w|^2 = (1 - r)^2 + 4 r cos^2(theta/2)`
//! (`w = r e^{i theta}`, `r <= 1`), a form stable at both the `theta ~ pi`
//! cancellation and the `r ~ 1` near-tie. Phases are `f64`: a phase is an
//! angle on the unit circle and never suffers from the magnitude swings that
//! motivate the double-double modulus; the canonical tie `arg == pi` is
//! treated exactly so that real-negative arithmetic stays exact.
//!
//! Zero has no logarithm: constructors return
//! [`EeError::ZeroNotRepresentable`], and an addition that annihilates more
//! significant digits than the active [`PrecisionProfile`] can certify
//! returns [`EeError::CancellationToZero`] instead of a made-up residue.

use crate::dd::Dd;
use std::fmt;

/// How many digits an addition must preserve before it is declared a true
/// cancellation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecisionMode {
    /// `f64`-grade guarantees (15 significant digits).
    Standard,
    /// Double-double-grade guarantees (30 significant digits).
    Extended,
}

/// Precision contract for the cancellation-sensitive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionProfile {
    pub mode: PrecisionMode,
    /// Significant decimal digits the profile certifies (15 or 30).
    pub sig_digits: u32,
}

impl PrecisionProfile {
    pub const fn standard() -> Self {
        PrecisionProfile {
            mode: PrecisionMode::Standard,
            sig_digits: 15,
        }
    }

    pub const fn extended() -> Self {
        PrecisionProfile {
            mode: PrecisionMode::Extended,
            sig_digits: 30,
        }
    }

    /// `ln(10^-(sig_digits + 5))`: additions whose result modulus falls this
    /// far below the inputs are reported as cancellations.
    fn cancellation_log_threshold(self) -> f64 {
        -(self.sig_digits as f64 + 5.0) * std::f64::consts::LN_10
    }
}

impl Default for PrecisionProfile {
    fn default() -> Self {
        PrecisionProfile::extended()
    }
}

/// Errors from log-polar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EeError {
    /// Zero has no log-polar representation.
    #[error("zero is not representable in log-polar form")]
    ZeroNotRepresentable,
    /// An addition cancelled below the active precision profile.
    #[error("addition cancelled to zero beyond {sig_digits} significant digits")]
    CancellationToZero { sig_digits: u32 },
    /// `log1p` was applied at its singularity `-1`.
    #[error("log1p is singular at -1")]
    SingularAtMinusOne,
    /// A non-finite component was supplied.
    #[error("non-finite component in log-polar constructor")]
    NonFinite,
}

/// A nonzero complex number `exp(log_mod + i arg)`, `arg` in `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    log_mod: Dd,
    arg: f64,
}

/// Wraps an angle to `(-pi, pi]`, ties mapping to `+pi`.
#[inline]
pub fn wrap_arg(a: f64) -> f64 {
    use std::f64::consts::PI;
    if -PI < a && a <= PI {
        return a;
    }
    let two_pi = 2.0 * PI;
    let r = (a + PI).rem_euclid(two_pi); // in [0, 2 pi)
    let y = r - PI;
    if y == -PI {
        PI
    } else {
        y
    }
}

/// Sine/cosine honoring the canonical tie: the stored angle `pi` *means* the
/// negative real axis exactly.
#[inline]
fn canon_sin_cos(arg: f64) -> (f64, f64) {
    if arg == std::f64::consts::PI {
        (0.0, -1.0)
    } else if arg == 0.0 {
        (0.0, 1.0)
    } else {
        arg.sin_cos()
    }
}

impl LogComplex {
    /// The number 1 (`log_mod = 0`, `arg = 0`), exactly.
    pub const ONE: LogComplex = LogComplex {
        log_mod: Dd::ZERO,
        arg: 0.0,
    };

    /// Builds from a log-modulus and a phase (wrapped to `(-pi, pi]`).
    pub fn from_polar(log_mod: Dd, arg: f64) -> Result<LogComplex, EeError> {
        if !log_mod.to_f64().is_finite() || !arg.is_finite() {
            return Err(EeError::NonFinite);
        }
        Ok(LogComplex {
            log_mod,
            arg: wrap_arg(arg),
        })
    }

    /// Builds from cartesian components. Zero is rejected.
    pub fn from_cartesian(re: f64, im: f64) -> Result<LogComplex, EeError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(EeError::NonFinite);
        }
        if re == 0.0 && im == 0.0 {
            return Err(EeError::ZeroNotRepresentable);
        }
        if im == 0.0 {
            return Ok(LogComplex {
                log_mod: Dd::from(re.abs()).ln(),
                arg: if re > 0.0 { 0.0 } else { std::f64::consts::PI },
            });
        }
        if re == 0.0 {
            return Ok(LogComplex {
                log_mod: Dd::from(im.abs()).ln(),
                arg: if im > 0.0 {
                    std::f64::consts::FRAC_PI_2
                } else {
                    -std::f64::consts::FRAC_PI_2
                },
            });
        }
        // Scale by the larger component to keep |.|^2 in range.
        let (big, small) = if re.abs() >= im.abs() {
            (re.abs(), im.abs())
        } else {
            (im.abs(), re.abs())
        };
        let t = Dd::from(small) / Dd::from(big);
        let log_mod = Dd::from(big).ln() + (t * t).log1p().mul_pow2(0.5);
        Ok(LogComplex {
            log_mod,
            arg: im.atan2(re),
        })
    }

    /// Builds from a strictly positive real number.
    pub fn from_positive(x: f64) -> Result<LogComplex, EeError> {
        if !x.is_finite() || x <= 0.0 {
            return Err(EeError::ZeroNotRepresentable);
        }
        Ok(LogComplex {
            log_mod: Dd::from(x).ln(),
            arg: 0.0,
        })
    }

    #[inline]
    pub fn log_mod(&self) -> Dd {
        self.log_mod
    }

    #[inline]
    pub fn arg(&self) -> f64 {
        self.arg
    }

    /// Modulus as an `f64` (saturates to `0`/`inf` outside the range).
    #[inline]
    pub fn modulus(&self) -> f64 {
        self.log_mod.to_f64().exp()
    }

    /// Cartesian `(re, im)`, saturating outside the `f64` range.
    pub fn to_cartesian(&self) -> (f64, f64) {
        let m = self.modulus();
        let (s, c) = canon_sin_cos(self.arg);
        (m * c, m * s)
    }

    #[inline]
    pub fn mul(&self, rhs: &LogComplex) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod + rhs.log_mod,
            arg: wrap_arg(self.arg + rhs.arg),
        }
    }

    #[inline]
    pub fn div(&self, rhs: &LogComplex) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod - rhs.log_mod,
            arg: wrap_arg(self.arg - rhs.arg),
        }
    }

    #[inline]
    pub fn recip(&self) -> LogComplex {
        LogComplex {
            log_mod: -self.log_mod,
            arg: wrap_arg(-self.arg),
        }
    }

    #[inline]
    pub fn neg(&self) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod,
            arg: wrap_arg(self.arg + std::f64::consts::PI),
        }
    }

    #[inline]
    pub fn conj(&self) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod,
            arg: wrap_arg(-self.arg),
        }
    }

    /// Scales by a nonzero real constant.
    pub fn mul_real(&self, c: f64) -> Result<LogComplex, EeError> {
        if c == 0.0 || !c.is_finite() {
            return Err(EeError::ZeroNotRepresentable);
        }
        let mut out = LogComplex {
            log_mod: self.log_mod + Dd::from(c.abs()).ln(),
            arg: self.arg,
        };
        if c < 0.0 {
            out = out.neg();
        }
        Ok(out)
    }

    /// Scales the modulus by `exp(mu)` without touching the phase.
    pub fn scale_log(&self, mu: Dd) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod + mu,
            arg: self.arg,
        }
    }

    /// Real power: `self^p = exp(p log_mod) exp(i wrap(p arg))`.
    ///
    /// The principal branch of the log is fixed *before* raising, so this
    /// matches `exp(p Log z)`, not every branch of the multivalued power.
    pub fn pow_real(&self, p: f64) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod * p,
            arg: wrap_arg(self.arg * p),
        }
    }

    /// Real power with a double-double exponent (log-modulus keeps full
    /// precision; the phase multiplier is the `f64` head).
    pub fn pow_real_dd(&self, p: Dd) -> LogComplex {
        LogComplex {
            log_mod: self.log_mod * p,
            arg: wrap_arg(self.arg * p.to_f64()),
        }
    }

    /// `self^(2^k)` by exact log-modulus scaling and `k` phase doublings.
    ///
    /// Each doubling wraps, matching what repeated squaring would do; for
    /// phases that are exact dyadic fractions of pi (the only huge-`k` use
    /// in this crate) every step is exact.
    pub fn pow_pow2(&self, k: u32) -> LogComplex {
        let log_mod = self.log_mod.mul_pow2(2f64.powi(k as i32));
        let mut arg = self.arg;
        for _ in 0..k {
            arg = wrap_arg(2.0 * arg);
        }
        LogComplex { log_mod, arg }
    }

    /// Addition via larger-modulus factoring.
    ///
    /// With `|b| <= |a|`, `a + b = a (1 + w)`, `w = r e^{i theta}`,
    /// `r = exp(mu) <= 1`, and
    /// `|1 + w|^2 = (1 - r)^2 + 4 r cos^2(theta/2)`,
    /// where `1 - r = -expm1(mu)` is computed without cancellation. The
    /// phase correction `atan2(r sin theta, 1 + r cos theta)` is `f64`-grade,
    /// as is every phase.
    pub fn add(&self, rhs: &LogComplex, profile: PrecisionProfile) -> Result<LogComplex, EeError> {
        let (a, b) = if rhs.log_mod > self.log_mod {
            (rhs, self)
        } else {
            (self, rhs)
        };
        let mu = b.log_mod - a.log_mod; // <= 0
        let theta = wrap_arg(b.arg - a.arg);
        let r = mu.exp();
        let one_minus_r = -mu.expm1();
        // cos(theta/2): the tie theta == pi means w is exactly real-negative.
        let half = theta * 0.5;
        let cos_half = if theta == std::f64::consts::PI {
            Dd::ZERO
        } else {
            Dd::sincos_angle(half).1
        };
        let a2 = one_minus_r * one_minus_r + (r * (cos_half * cos_half)).mul_pow2(4.0);
        // a2 = |1 + w|^2 in [0, 4].
        if a2.to_f64() <= 0.0 {
            return Err(EeError::CancellationToZero {
                sig_digits: profile.sig_digits,
            });
        }
        let log_delta = a2.ln().mul_pow2(0.5);
        if log_delta.to_f64() < profile.cancellation_log_threshold() {
            return Err(EeError::CancellationToZero {
                sig_digits: profile.sig_digits,
            });
        }
        let rf = r.to_f64();
        let (sin_t, cos_t) = canon_sin_cos(theta);
        let phase_corr = (rf * sin_t).atan2(1.0 + rf * cos_t);
        Ok(LogComplex {
            log_mod: a.log_mod + log_delta,
            arg: wrap_arg(a.arg + phase_corr),
        })
    }

    /// `self - rhs`.
    pub fn sub(&self, rhs: &LogComplex, profile: PrecisionProfile) -> Result<LogComplex, EeError> {
        self.add(&rhs.neg(), profile)
    }

    /// `log(1 + self)` as a log-polar number.
    ///
    /// For `|self| < 1e-15` the series `x (1 - x/2 + x^2/3)` is evaluated in
    /// the log domain (the correction factors are near 1, so the additions
    /// are benign); otherwise `1 + self` is formed by [`LogComplex::add`]
    /// and its principal log taken. The result's own log-modulus stays
    /// double-double even when `|log(1+self)|` is around `1e-5000`.
    pub fn log1p_c(&self, profile: PrecisionProfile) -> Result<LogComplex, EeError> {
        const LN_1E15: f64 = 34.538776394910684; // ln(1e15)
        if self.log_mod.to_f64() < -LN_1E15 {
            // w = x (1 - x/2 + x^2/3): relative error O(|x|^3) <= 1e-45.
            let half = self.mul_real(-0.5).expect("0.5 is nonzero");
            let third = self.mul(self).mul_real(1.0 / 3.0).expect("1/3 is nonzero");
            let corr = LogComplex::ONE
                .add(&half, profile)?
                .add(&third, profile)?;
            return Ok(self.mul(&corr));
        }
        if self.arg == std::f64::consts::PI && self.log_mod.is_zero() {
            return Err(EeError::SingularAtMinusOne);
        }
        let v = match LogComplex::ONE.add(self, profile) {
            Ok(v) => v,
            Err(EeError::CancellationToZero { .. }) => {
                return Err(EeError::SingularAtMinusOne)
            }
            Err(e) => return Err(e),
        };
        // log(v) = log_mod(v) + i arg(v): assemble in log-polar form.
        let re = v.log_mod; // Dd
        let im = v.arg; // f64
        if re.is_zero() && im == 0.0 {
            // 1 + self == 1 exactly: impossible here since |self| >= 1e-15,
            // but guard anyway.
            return Err(EeError::ZeroNotRepresentable);
        }
        let log_mod = if im == 0.0 {
            re.abs().ln()
        } else if re.is_zero() {
            Dd::from(im.abs()).ln()
        } else {
            let (big, small) = if re.abs().to_f64() >= im.abs() {
                (re.abs(), Dd::from(im.abs()))
            } else {
                (Dd::from(im.abs()), re.abs())
            };
            let t = small / big;
            big.ln() + (t * t).log1p().mul_pow2(0.5)
        };
        let arg = im.atan2(re.to_f64());
        Ok(LogComplex {
            log_mod,
            arg: wrap_arg(arg),
        })
    }
}

impl fmt::Display for LogComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({}) * exp(i*{:.17e})", self.log_mod.to_sci(21), self.arg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const EXT: PrecisionProfile = PrecisionProfile::extended();
    const STD: PrecisionProfile = PrecisionProfile::standard();

    fn lc(re: f64, im: f64) -> LogComplex {
        LogComplex::from_cartesian(re, im).unwrap()
    }

    #[test]
    fn constructors_reject_zero_and_nonfinite() {
        assert_eq!(
            LogComplex::from_cartesian(0.0, 0.0),
            Err(EeError::ZeroNotRepresentable)
        );
        assert_eq!(
            LogComplex::from_cartesian(f64::NAN, 0.0),
            Err(EeError::NonFinite)
        );
        assert_eq!(
            LogComplex::from_positive(-1.0),
            Err(EeError::ZeroNotRepresentable)
        );
        assert_eq!(LogComplex::from_positive(0.0), Err(EeError::ZeroNotRepresentable));
        assert!(LogComplex::from_polar(Dd::from(1e5), 0.3).is_ok());
    }

    #[test]
    fn cartesian_round_trip() {
        let cases = [
            (3.0, 4.0),
            (-2.5, 1e-12),
            (1e-300, -1e-300),
            (7.25e200, -3.5e-9),
            (-1.0, 0.0),
            (0.0, -2.0),
        ];
        for (re, im) in cases {
            let v = lc(re, im);
            let (r2, i2) = v.to_cartesian();
            let scale = re.abs().max(im.abs());
            assert!(
                ((re - r2).abs() + (im - i2).abs()) / scale < 1e-12,
                "({re}, {im}) -> ({r2}, {i2})"
            );
        }
    }

    #[test]
    fn real_negative_axis_is_exact() {
        let v = lc(-3.5, 0.0);
        assert_eq!(v.arg(), PI);
        let (re, im) = v.to_cartesian();
        assert_eq!(im, 0.0);
        assert!((re + 3.5).abs() < 1e-15);
        // conj leaves the tie at +pi.
        assert_eq!(v.conj().arg(), PI);
        // neg moves it to exactly zero.
        assert_eq!(v.neg().arg(), 0.0);
    }

    #[test]
    fn mul_div_round_trip_and_commutativity() {
        let a = lc(1.7, -0.4);
        let b = lc(-250.0, 3.0);
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab.log_mod(), ba.log_mod());
        assert_eq!(ab.arg().to_bits(), ba.arg().to_bits());
        let back = ab.div(&b);
        assert!((back.log_mod() - a.log_mod()).abs().to_f64() < 1e-30);
        assert!((back.arg() - a.arg()).abs() < 1e-15);
        let r = a.mul(&a.recip());
        assert!(r.log_mod().abs().to_f64() < 1e-30);
        assert_eq!(r.arg(), 0.0);
    }

    #[test]
    fn pow_real_matches_repeated_multiplication() {
        let a = lc(0.3, 0.7);
        let mut acc = LogComplex::ONE;
        for _ in 0..7 {
            acc = acc.mul(&a);
        }
        let direct = a.pow_real(7.0);
        assert!((acc.log_mod() - direct.log_mod()).abs().to_f64() < 1e-28);
        // Phases agree modulo 2 pi.
        let d = wrap_arg(acc.arg() - direct.arg());
        assert!(d.abs() < 1e-13 || (d.abs() - 2.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn pow_pow2_doubles_phase_with_wrap() {
        let a = lc(0.0, 2.0); // arg = pi/2, log_mod = ln 2
        let sq = a.pow_pow2(1);
        assert_eq!(sq.arg(), PI); // (2i)^2 = -4
        let (re, im) = sq.to_cartesian();
        assert!((re + 4.0).abs() < 1e-14);
        assert_eq!(im, 0.0);
        // Real input: any power of two keeps the phase on {0, pi}.
        let b = lc(-1.5, 0.0);
        assert_eq!(b.pow_pow2(1).arg(), 0.0);
        assert_eq!(b.pow_pow2(7).arg(), 0.0);
        // Exact modulus scaling.
        assert_eq!(
            b.pow_pow2(20).log_mod(),
            b.log_mod().mul_pow2(1048576.0)
        );
    }

    #[test]
    fn add_matches_f64_in_range() {
        let cases = [
            ((3.0, 4.0), (1.0, -2.0)),
            ((-2.0, 0.5), (2.0, 0.25)),
            ((1e150, -3e149), (-2e150, 1e150)),
            ((1e-200, 5e-201), (3e-200, -1e-200)),
            ((5.0, 0.0), (-4.999, 0.0)),
        ];
        for ((ar, ai), (br, bi)) in cases {
            let sum = lc(ar, ai).add(&lc(br, bi), EXT).unwrap();
            let want_re = ar + br;
            let want_im = ai + bi;
            let (re, im) = sum.to_cartesian();
            let scale = (want_re.abs() + want_im.abs()).max(1e-300);
            assert!(
                ((re - want_re).abs() + (im - want_im).abs()) / scale < 1e-12,
                "({ar},{ai}) + ({br},{bi}) = ({re},{im}), want ({want_re},{want_im})"
            );
        }
    }

    #[test]
    fn add_spans_extreme_scale_differences() {
        // 10^400 + 1: far outside f64, the small addend perturbs the
        // log-modulus by ~1e-400, below even dd resolution -> unchanged.
        let big = LogComplex::from_polar(Dd::from(400.0) * Dd::from(10.0).ln(), 0.0).unwrap();
        let sum = big.add(&LogComplex::ONE, EXT).unwrap();
        assert_eq!(sum.log_mod(), big.log_mod());
        assert_eq!(sum.arg(), 0.0);
        // 1 + 1e-20 moves the log-modulus by exactly ~1e-20 (dd resolves it).
        let tiny = LogComplex::from_positive(1e-20).unwrap();
        let sum = LogComplex::ONE.add(&tiny, EXT).unwrap();
        let lm = sum.log_mod();
        assert!(((lm - Dd::from(1e-20)) / Dd::from(1e-20)).abs().to_f64() < 1e-9);
    }

    #[test]
    fn exact_cancellation_is_reported() {
        let one = LogComplex::ONE;
        let err = one.add(&one.neg(), EXT);
        assert!(matches!(err, Err(EeError::CancellationToZero { .. })));
        // Same through sub.
        let v = lc(2.5, -1.25);
        assert!(matches!(
            v.sub(&v, EXT),
            Err(EeError::CancellationToZero { .. })
        ));
        // Near-cancellation below the profile width: standard profile
        // declares zero, extended still resolves it. The addend
        // 1 - 1e-22 is below f64 resolution, so build it in log form.
        let a = LogComplex::from_positive(1.0).unwrap();
        let b = LogComplex::from_polar(Dd::from(-1e-22), PI).unwrap();
        assert!(matches!(
            a.add(&b, STD),
            Err(EeError::CancellationToZero { sig_digits: 15 })
        ));
        let fine = a.add(&b, EXT).unwrap();
        assert!(fine.log_mod().to_f64() < -50.0); // |sum| ~ 1e-22
    }

    #[test]
    fn add_keeps_dd_grade_log_modulus() {
        // (1 + 3e-17) computed via add: log_mod must resolve 3e-17 even
        // though f64 addition would round it away entirely.
        let a = LogComplex::ONE;
        let b = LogComplex::from_positive(3e-17).unwrap();
        let sum = a.add(&b, EXT).unwrap();
        let got = sum.log_mod().to_f64();
        assert!((got - 3e-17).abs() < 1e-30);
    }

    #[test]
    fn log1p_c_tiny_series_branch() {
        // x = 1e-20: log1p(x) = x (1 - x/2 + ...): check the defect x/2.
        let x = LogComplex::from_positive(1e-20).unwrap();
        let w = x.log1p_c(EXT).unwrap();
        // w / x = 1 - x/2 + O(x^2): log(w/x) ~ -x/2.
        let ratio = w.div(&x);
        let lm = ratio.log_mod().to_f64();
        assert!((lm + 5e-21).abs() < 1e-25, "log(w/x) = {lm}");
        assert_eq!(ratio.arg(), 0.0);
        // Complex phase passes through: x = 1e-30 * e^{i 0.3}.
        let xc = LogComplex::from_polar(Dd::from(1e-30).ln(), 0.3).unwrap();
        let wc = xc.log1p_c(EXT).unwrap();
        assert!((wc.arg() - 0.3).abs() < 1e-10);
        assert!(((wc.log_mod() - xc.log_mod()).abs().to_f64()) < 1e-15);
    }

    #[test]
    fn log1p_c_generic_branch_matches_f64() {
        let cases = [(0.5, 0.0), (-0.3, 0.4), (2.0, -5.0), (-0.9, 0.05)];
        for (re, im) in cases {
            let x = lc(re, im);
            let w = x.log1p_c(EXT).unwrap();
            let want = {
                let z = num_complex::Complex64::new(1.0 + re, im);
                num_complex::Complex64::new(z.norm().ln(), z.arg())
            };
            let (wre, wim) = w.to_cartesian();
            assert!(
                (wre - want.re).abs() + (wim - want.im).abs() < 1e-13,
                "log1p({re}+{im}i) = ({wre},{wim}) want ({},{})",
                want.re,
                want.im
            );
        }
    }

    #[test]
    fn log1p_c_singularity() {
        let minus_one = lc(-1.0, 0.0);
        assert_eq!(minus_one.log1p_c(EXT), Err(EeError::SingularAtMinusOne));
    }

    #[test]
    fn arg_stays_wrapped_under_long_products() {
        // 1e5 multiplications by a fixed phase rotor: arg must remain in
        // (-pi, pi] at every step.
        let rot = LogComplex::from_polar(Dd::ZERO, 2.399).unwrap();
        let mut acc = LogComplex::ONE;
        for _ in 0..100_000 {
            acc = acc.mul(&rot);
            assert!(-PI < acc.arg() && acc.arg() <= PI);
        }
        // The modulus is untouched by pure rotations.
        assert!(acc.log_mod().abs().to_f64() < 1e-25);
    }

    #[test]
    fn wrap_arg_ties_to_positive_pi() {
        assert_eq!(wrap_arg(PI), PI);
        assert_eq!(wrap_arg(-PI), PI);
        assert_eq!(wrap_arg(3.0 * PI), PI);
        assert_eq!(wrap_arg(0.0), 0.0);
        assert!((wrap_arg(2.0 * PI)).abs() < 1e-15);
        assert!(wrap_arg(PI + 0.1) < 0.0);
    }
}
