//! Double-double arithmetic: unevaluated sums of two `f64`s giving ~31
//! significant decimal digits.
//!
//! The bound chains verified by this crate have relative margins around
//! `1e-24`, far below `f64` resolution (`~1e-16`), so every quantity that
//! enters a bound comparison is computed in [`Dd`]. The representation is the
//! classic error-free-transformation scheme: a value is `hi + lo` with
//! `|lo| <= ulp(hi)/2`, and all primitives (`two_sum`, `two_prod` via FMA)
//! preserve exactness of the underlying sums and products.
//!
//! Only the operations this crate actually needs are provided: field
//! arithmetic, comparisons, `sqrt`, `floor`, `ln`, `log1p`, `exp`, `expm1`,
//! sine/cosine of angles already reduced to `(-pi, pi]`, and exact-turn
//! sine/cosine `sincos_pi` for angles that are dyadic multiples of pi.
//! Decimal parsing and 30-digit formatting support frozen test constants and
//! report notes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// `a + b` as an exact head/tail pair, no magnitude precondition.
#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `a + b` as an exact head/tail pair, requiring `|a| >= |b|` (or `a == 0`).
#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// `a * b` as an exact head/tail pair (FMA-based).
#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

/// Exact `2^n` for `n` in the normal-exponent range, by bit construction.
/// (`f64::powi` is not reliable at the range edges.)
#[inline(always)]
fn pow2(n: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&n));
    f64::from_bits(((n + 1023) as u64) << 52)
}

/// Residuals of the two-component constants against the true values; adding
/// `EPS2 * multiplier` recovers one more word of precision where a reduction
/// would otherwise cancel against the constant.
const LN2_EPS2: f64 = 5.707708438416212e-34;
const FRAC_PI_2_EPS2: f64 = -1.4973849048591698e-33;

/// A double-double number `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    /// pi to double-double precision.
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    /// pi/2 to double-double precision.
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };
    /// Euler's number e to double-double precision.
    pub const E: Dd = Dd {
        hi: std::f64::consts::E,
        lo: 1.445_646_891_729_250_2e-16,
    };

    /// Builds from a head/tail pair, renormalizing. Accepts any pair.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    /// Builds from an already-normalized pair without renormalizing.
    #[inline]
    pub const fn from_parts(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Nearest `f64` (the head, by the normalization invariant).
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Exact scaling by a power of two.
    #[inline]
    pub fn mul_pow2(self, p: f64) -> Dd {
        debug_assert!(p == 0.0 || p.abs().log2().fract() == 0.0);
        Dd {
            hi: self.hi * p,
            lo: self.lo * p,
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(self) -> Dd {
        let f = self.hi.floor();
        if f < self.hi {
            Dd { hi: f, lo: 0.0 }
        } else {
            // hi is already integral; the tail decides.
            let g = self.lo.floor();
            let (s, e) = quick_two_sum(f, g);
            Dd { hi: s, lo: e }
        }
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    /// Square root by one double-double Newton step on the `f64` seed.
    pub fn sqrt(self) -> Dd {
        if self.hi < 0.0 {
            return Dd::new(f64::NAN, 0.0);
        }
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let y0 = self.hi.sqrt();
        let y = Dd::from(y0);
        // y + (x - y^2) / (2 y0)
        let r = self - y * y;
        y + r / (2.0 * y0)
    }

    /// Natural logarithm. Requires a strictly positive, finite value.
    ///
    /// Range-reduces to `m in [sqrt(1/2), sqrt(2))`, evaluates
    /// `2 atanh((m-1)/(m+1))` by series, and restores `e * ln 2`.
    pub fn ln(self) -> Dd {
        if !self.hi.is_finite() || self.hi <= 0.0 {
            return Dd::new(f64::NAN, 0.0);
        }
        let mut x = self;
        let mut e2: i32 = 0;
        // Bring subnormal heads into the normal range first (exact).
        if x.hi < f64::MIN_POSITIVE {
            x = x.mul_pow2(pow2(200));
            e2 -= 200;
        }
        let bits = x.hi.to_bits();
        let exp_raw = ((bits >> 52) & 0x7ff) as i32;
        let scale_exp = exp_raw - 1022; // x.hi * 2^-scale_exp in [0.5, 1)
        e2 += scale_exp;
        // Chunked exact scaling: a single 2^-scale_exp can leave the normal
        // range (scale_exp reaches 1024 for the largest finite inputs).
        let mut m = x;
        let mut remaining = scale_exp;
        while remaining != 0 {
            let step = remaining.clamp(-900, 900);
            m = m.mul_pow2(pow2(-step));
            remaining -= step;
        }
        if m.hi < std::f64::consts::FRAC_1_SQRT_2 {
            m = m.mul_pow2(2.0);
            e2 -= 1;
        }
        // atanh series in t = (m-1)/(m+1), |t| <= 0.1716.
        let t = (m - Dd::ONE) / (m + Dd::ONE);
        let t2 = t * t;
        let mut sum = t;
        let mut term = t;
        let mut k = 3.0f64;
        for _ in 0..24 {
            term = term * t2;
            let contrib = term / k;
            sum = sum + contrib;
            if contrib.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
            k += 2.0;
        }
        let ef = e2 as f64;
        sum.mul_pow2(2.0) + Dd::LN2 * ef + Dd::from(LN2_EPS2 * ef)
    }

    /// `ln(1 + self)`, accurate for tiny arguments.
    pub fn log1p(self) -> Dd {
        if self.hi <= -1.0 {
            return if self.hi == -1.0 && self.lo == 0.0 {
                Dd::new(f64::NEG_INFINITY, 0.0)
            } else {
                Dd::new(f64::NAN, 0.0)
            };
        }
        if self.hi.abs() < 0.9 {
            // 2 atanh(x / (2 + x)); exact cancellation-free for small x.
            let t = self / (Dd::from(2.0) + self);
            let t2 = t * t;
            let mut sum = t;
            let mut term = t;
            let mut k = 3.0f64;
            for _ in 0..40 {
                term = term * t2;
                let contrib = term / k;
                sum = sum + contrib;
                if contrib.hi.abs() < 1e-35 * sum.hi.abs() {
                    break;
                }
                k += 2.0;
            }
            sum.mul_pow2(2.0)
        } else {
            (Dd::ONE + self).ln()
        }
    }

    /// Exponential. Saturates to `+inf`/`0` outside the `f64` range.
    ///
    /// Refines the `f64` seed `r0 = exp(hi)` with one Newton step
    /// `r0 * (1 + d + d^2/2)`, `d = x - ln(r0)`.
    pub fn exp(self) -> Dd {
        if self.hi >= 709.782712893384 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi <= -745.2 {
            return Dd::ZERO;
        }
        let r0 = self.hi.exp();
        if r0 == 0.0 || !r0.is_finite() {
            return Dd::from(r0);
        }
        let d = self - Dd::from(r0).ln();
        let correction = Dd::ONE + d + (d * d).mul_pow2(0.5);
        Dd::from(r0) * correction
    }

    /// `exp(self) - 1`, accurate for tiny arguments.
    pub fn expm1(self) -> Dd {
        if self.hi.abs() <= 0.7 {
            let mut sum = self;
            let mut term = self;
            let mut k = 2.0f64;
            for _ in 0..40 {
                term = term * self / k;
                sum = sum + term;
                if term.hi.abs() < 1e-35 * sum.hi.abs().max(f64::MIN_POSITIVE) {
                    break;
                }
                k += 1.0;
            }
            sum
        } else {
            self.exp() - Dd::ONE
        }
    }

    /// Sine and cosine of an angle already reduced to roughly `[-pi, pi]`.
    ///
    /// One exact quadrant fold against `pi/2`, then Taylor on `[-pi/4, pi/4]`.
    pub fn sincos_angle(theta: f64) -> (Dd, Dd) {
        debug_assert!(theta.abs() <= std::f64::consts::PI * 1.000_000_1);
        let k = (theta / std::f64::consts::FRAC_PI_2).round();
        let k = k.clamp(-2.0, 2.0);
        // Three-component reduction: near the sine/cosine zeros the
        // subtraction cancels, so the constant's residual word matters.
        let r = (Dd::from(theta) - Dd::FRAC_PI_2 * k) - Dd::from(FRAC_PI_2_EPS2 * k);
        let (s, c) = sincos_taylor(r);
        match k as i32 {
            0 => (s, c),
            1 => (c, -s),
            -1 => (-c, s),
            _ => (-s, -c), // |k| == 2: theta = r +/- pi
        }
    }

    /// `(sin(pi x), cos(pi x))` with exact dyadic argument reduction.
    ///
    /// The reduction `x mod 2` and the quadrant fold are exact in `f64`
    /// (requires `|x| < 2^52`), so half-integer turns produce exact
    /// `0`/`+-1` values and conjugate-symmetric angles produce bitwise
    /// mirrored results.
    pub fn sincos_pi(x: f64) -> (Dd, Dd) {
        debug_assert!(x.abs() < 4.5e15);
        let (r, j) = reduce_turns(x);
        let angle = Dd::PI * r;
        let (s, c) = sincos_taylor(angle);
        match j {
            0 | 4 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s), // j == 3
        }
    }

    /// `f64`-grade `(sin(pi x), cos(pi x))` with the same exact reduction as
    /// [`Dd::sincos_pi`]; used on hot per-factor paths.
    pub fn sincos_pi_f64(x: f64) -> (f64, f64) {
        let (r, j) = reduce_turns(x);
        let angle = Dd::PI.lo.mul_add(r, Dd::PI.hi * r);
        let (s, c) = if r == 0.0 { (0.0, 1.0) } else { angle.sin_cos() };
        match j {
            0 | 4 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    /// Four-quadrant arctangent of `f64` coordinates to double-double
    /// precision: an `f64::atan2` seed refined by one Newton rotation step.
    ///
    /// Axis-aligned inputs return the exact (double-double rounded)
    /// multiples of `pi/2`. The seed is within ~1 ulp of the true angle, so
    /// a single first-order correction `(y cos - x sin)/(x cos + y sin)`
    /// lands at full double-double precision.
    pub fn atan2(y: f64, x: f64) -> Dd {
        if y == 0.0 {
            return if x >= 0.0 { Dd::ZERO } else { Dd::PI };
        }
        if x == 0.0 {
            return if y > 0.0 { Dd::FRAC_PI_2 } else { -Dd::FRAC_PI_2 };
        }
        let seed = y.atan2(x);
        let (s, c) = Dd::sincos_angle(seed);
        let num = Dd::from(y) * c - Dd::from(x) * s;
        let den = Dd::from(x) * c + Dd::from(y) * s;
        Dd::from(seed) + num / den
    }

    /// Scientific-notation rendering with `digits` significant digits
    /// (at most 30, the reliable double-double width).
    pub fn to_sci(self, digits: usize) -> String {
        let digits = digits.clamp(1, 30);
        if !self.hi.is_finite() {
            return format!("{}", self.hi);
        }
        if self.hi == 0.0 {
            return "0.0".to_string();
        }
        let neg = self.hi < 0.0;
        let mut v = self.abs();
        let mut e10 = v.hi.log10().floor() as i32;
        if e10 != 0 {
            v = v / pow10(e10);
        }
        while v.hi >= 10.0 {
            v = v / Dd::from(10.0);
            e10 += 1;
        }
        while v.hi < 1.0 {
            v = v * Dd::from(10.0);
            e10 -= 1;
        }
        let mut out = String::with_capacity(digits + 8);
        if neg {
            out.push('-');
        }
        for i in 0..digits {
            let d = v.floor().to_f64().clamp(0.0, 9.0) as u8;
            out.push((b'0' + d) as char);
            if i == 0 {
                out.push('.');
            }
            v = (v - Dd::from(d as f64)) * Dd::from(10.0);
        }
        if digits == 1 {
            out.push('0');
        }
        out.push('e');
        out.push_str(&e10.to_string());
        out
    }
}

/// Exact reduction of `x` to `(r, j)` with `x = 2 m + x0`, `x0 = j/2 + r`,
/// `r in [-1/4, 1/4]`, `j in 0..=4`. All steps are exact in `f64`.
#[inline(always)]
fn reduce_turns(x: f64) -> (f64, i32) {
    let m = x - 2.0 * (x * 0.5).floor(); // x mod 2, exact, in [0, 2)
    let j = (2.0 * m).round(); // nearest half-turn index, 0..=4
    let r = m - 0.5 * j;
    (r, j as i32)
}

/// Taylor sine and cosine on `[-pi/4 - eps, pi/4 + eps]`.
fn sincos_taylor(x: Dd) -> (Dd, Dd) {
    debug_assert!(x.hi.abs() < 0.79);
    let x2 = x * x;
    // sin
    let mut s = x;
    let mut term = x;
    let mut k = 2.0f64;
    for _ in 0..16 {
        term = term * x2 / (k * (k + 1.0));
        term = -term;
        s = s + term;
        if term.hi.abs() < 1e-35 * s.hi.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        k += 2.0;
    }
    // cos
    let mut c = Dd::ONE;
    let mut cterm = Dd::ONE;
    let mut k = 1.0f64;
    for _ in 0..16 {
        cterm = cterm * x2 / (k * (k + 1.0));
        cterm = -cterm;
        c = c + cterm;
        if cterm.hi.abs() < 1e-35 {
            break;
        }
        k += 2.0;
    }
    (s, c)
}

/// `10^k` as a double-double: exact for `|k| <= 31`, chunked otherwise.
pub fn pow10(k: i32) -> Dd {
    fn pow10_exact(k: u32) -> Dd {
        debug_assert!(k <= 31);
        let v: u128 = 10u128.pow(k);
        let hi = v as f64;
        let lo = if hi as u128 >= v {
            -(((hi as u128) - v) as f64)
        } else {
            (v - hi as u128) as f64
        };
        Dd::new(hi, lo)
    }
    let neg = k < 0;
    let mut mag = k.unsigned_abs();
    let mut acc = Dd::ONE;
    while mag > 31 {
        acc = acc * pow10_exact(31);
        mag -= 31;
    }
    acc = acc * pow10_exact(mag);
    if neg {
        Dd::ONE / acc
    } else {
        acc
    }
}

impl From<f64> for Dd {
    #[inline]
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

impl From<i64> for Dd {
    #[inline]
    fn from(v: i64) -> Dd {
        let hi = v as f64;
        // Exact residual: |v| < 2^63 and hi is an integer-valued f64.
        let lo = (v as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: f64) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: f64) -> Dd {
        let (p, e) = two_prod(self.hi, rhs);
        let e = e + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e + q3)
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: f64) -> Dd {
        self / Dd::from(rhs)
    }
}

impl PartialOrd for Dd {
    #[inline]
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(30))
    }
}

/// Error from [`Dd::from_str`]: the input was not a decimal number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdParseError(pub String);

impl fmt::Display for DdParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid decimal literal: {:?}", self.0)
    }
}

impl std::error::Error for DdParseError {}

impl FromStr for Dd {
    type Err = DdParseError;

    /// Parses `[+-]? digits [. digits]? ([eE] [+-]? digits)?` to roughly
    /// `1e-31` relative accuracy, enough to freeze 30-digit constants.
    fn from_str(s: &str) -> Result<Dd, DdParseError> {
        let err = || DdParseError(s.to_string());
        let bytes = s.as_bytes();
        let mut i = 0;
        let neg = match bytes.first() {
            Some(b'-') => {
                i += 1;
                true
            }
            Some(b'+') => {
                i += 1;
                false
            }
            _ => false,
        };
        let mut mantissa = Dd::ZERO;
        let mut any_digit = false;
        let mut frac_digits: i32 = 0;
        let mut seen_dot = false;
        while i < bytes.len() {
            match bytes[i] {
                b'0'..=b'9' => {
                    let d = (bytes[i] - b'0') as f64;
                    mantissa = mantissa * 10.0 + Dd::from(d);
                    if seen_dot {
                        frac_digits += 1;
                    }
                    any_digit = true;
                    i += 1;
                }
                b'.' if !seen_dot => {
                    seen_dot = true;
                    i += 1;
                }
                b'e' | b'E' => break,
                _ => return Err(err()),
            }
        }
        if !any_digit {
            return Err(err());
        }
        let mut exp10: i32 = 0;
        if i < bytes.len() {
            // bytes[i] is 'e' or 'E'
            i += 1;
            let rest = std::str::from_utf8(&bytes[i..]).map_err(|_| err())?;
            exp10 = rest.parse::<i32>().map_err(|_| err())?;
        }
        let net = exp10 - frac_digits;
        let mut v = if net == 0 {
            mantissa
        } else {
            mantissa * pow10(net)
        };
        if neg {
            v = -v;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(s: &str) -> Dd {
        s.parse::<Dd>().unwrap()
    }

    /// Relative distance used against the frozen high-precision strings.
    fn rel(a: Dd, b: Dd) -> f64 {
        let d = (a - b).abs();
        let scale = b.abs().to_f64().max(f64::MIN_POSITIVE);
        d.to_f64() / scale
    }

    #[test]
    fn ln_matches_frozen_references() {
        let cases = [
            (
                Dd::from(2.0),
                "0.693147180559945309417232121458176568075500134",
                1e-30,
            ),
            (
                Dd::from(10.0),
                "2.30258509299404568401799145468436420760110149",
                1e-30,
            ),
            (
                Dd::from(12.0),
                "2.48490664978800031022970947983887884079849083",
                1e-30,
            ),
            (
                Dd::from(1.5),
                "0.405465108108164381978013115464349136571990423",
                1e-30,
            ),
            (
                Dd::from(4891999109997.0),
                "29.2186221518231632228041787717181510153517799",
                1e-30,
            ),
            (pow10(308), "709.196208642166070677541368042784175941139258", 1e-30),
            // The tail word of 1e-300 is subnormal (~1e-317, quantized at
            // 2^-1074), so the *input* only carries ~24 digits here.
            (
                pow10(-300),
                "-690.775527898213705205397436405309262280330447",
                1e-26,
            ),
        ];
        for (x, want, tol) in cases {
            assert!(
                rel(x.ln(), dd(want)) < tol,
                "ln({}) = {} != {}",
                x.to_f64(),
                x.ln(),
                want
            );
        }
    }

    #[test]
    fn sqrt_matches_frozen_references() {
        assert!(rel(Dd::from(10.0).sqrt(), dd("3.16227766016837933199889354443271853371955514")) < 1e-30);
        assert!(rel(Dd::from(2.0).sqrt(), dd("1.41421356237309504880168872420969807856967188")) < 1e-30);
        assert!(Dd::ZERO.sqrt().is_zero());
    }

    #[test]
    fn exp_matches_frozen_references() {
        // The double-double representation of ln(exp guard) limits the
        // relative error of exp to ~|x| * 2^-107, so the tolerance scales
        // with the argument magnitude.
        let cases = [
            (Dd::ONE, "2.71828182845904523536028747135266249775724709", 1e-30),
            (
                Dd::from(0.1),
                "1.10517091807564763094663882345877965774166342",
                1e-30,
            ),
            (
                Dd::from(-20.0),
                "2.06115362243855782796594038015582097637580728e-9",
                1e-30,
            ),
            (
                Dd::from(700.0),
                "1.01423205473500450945532959523126761520467957e304",
                1e-29,
            ),
        ];
        for (x, want, tol) in cases {
            assert!(
                rel(x.exp(), dd(want)) < tol,
                "exp({}) = {} != {}",
                x.to_f64(),
                x.exp(),
                want
            );
        }
        assert_eq!(Dd::ZERO.exp(), Dd::ONE);
        assert!(Dd::from(800.0).exp().to_f64().is_infinite());
        assert!(Dd::from(-800.0).exp().is_zero());
    }

    #[test]
    fn expm1_matches_frozen_references() {
        assert!(rel(
            Dd::from(0.5).expm1(),
            dd("0.648721270700128146848650787814163571653776101")
        ) < 1e-30);
        assert!(rel(
            Dd::from(-0.3).expm1(),
            dd("-0.259181779318282125708391764055348015123652597")
        ) < 1e-30);
        // Tiny argument: expm1(x) = x + x^2/2 + ...
        let x = Dd::from(1e-20);
        let got = x.expm1();
        let excess = (got - x) / x; // should be ~ x/2
        assert!((excess.to_f64() - 5e-21).abs() < 1e-26);
    }

    #[test]
    fn log1p_resolves_below_f64() {
        // log1p(1e-20) = 1e-20 - 5e-41 + ...; the tail is far below f64
        // resolution and must be carried by the lo component.
        let x = Dd::from(1e-20);
        let got = x.log1p();
        let defect = (got - x) / x; // ~ -x/2
        assert!((defect.to_f64() + 5e-21).abs() < 1e-26);
        // Crosscheck against exp: exp(log1p(x)) == 1 + x.
        let round = got.exp() - Dd::ONE;
        assert!(rel(round, x) < 1e-25);
        // Larger argument goes through ln(1 + x).
        assert!(rel(Dd::from(0.75).log1p(), Dd::from(1.75).ln()) < 1e-30);
        assert!(rel(
            Dd::from(1.75).ln().mul_pow2(0.5),
            dd("0.279807893967711343135444250263413296743042230")
        ) < 1e-30);
    }

    #[test]
    fn sincos_angle_matches_frozen_references() {
        let cases = [
            (
                1.0,
                "0.841470984807896506652502321630298999622563061",
                "0.540302305868139717400936607442976603732310421",
            ),
            (
                3.0,
                "0.141120008059867222100744802808110279846933264",
                "-0.989992496600445457271572794731261302393679097",
            ),
            (
                -2.5,
                "-0.598472144103956494051854702186162271703597172",
                "-0.801143615546933714833502790467351664428567849",
            ),
        ];
        for (theta, s_want, c_want) in cases {
            let (s, c) = Dd::sincos_angle(theta);
            assert!(rel(s, dd(s_want)) < 1e-29, "sin({theta})");
            assert!(rel(c, dd(c_want)) < 1e-29, "cos({theta})");
        }
        // The f64 value of pi is not pi: sin is ~1.22e-16, cos + 1 ~ 7.5e-33.
        let (s, c) = Dd::sincos_angle(std::f64::consts::PI);
        assert!(rel(s, dd("1.22464679914735317722606593227499799708305390e-16")) < 1e-28);
        assert!(((c + Dd::ONE).to_f64() - 7.498798913309288e-33).abs() < 1e-40);
    }

    #[test]
    fn sincos_pi_exact_at_half_turns() {
        assert_eq!(Dd::sincos_pi(0.0), (Dd::ZERO, Dd::ONE));
        assert_eq!(Dd::sincos_pi(0.5), (Dd::ONE, Dd::ZERO));
        assert_eq!(Dd::sincos_pi(1.0), (Dd::ZERO, -Dd::ONE));
        assert_eq!(Dd::sincos_pi(1.5), (-Dd::ONE, Dd::ZERO));
        assert_eq!(Dd::sincos_pi(2.0), (Dd::ZERO, Dd::ONE));
        // Same for the f64 variant.
        assert_eq!(Dd::sincos_pi_f64(1.0), (0.0, -1.0));
        assert_eq!(Dd::sincos_pi_f64(0.5), (1.0, 0.0));
        assert_eq!(Dd::sincos_pi_f64(7.0), (0.0, -1.0));
    }

    #[test]
    fn sincos_pi_matches_frozen_references() {
        let (s, c) = Dd::sincos_pi(0.25);
        let v = dd("0.707106781186547524400844362104849039284835938");
        assert!(rel(s, v) < 1e-29);
        assert!(rel(c, v) < 1e-29);
        let (s, c) = Dd::sincos_pi(0.125);
        assert!(rel(s, dd("0.382683432365089771728459984030398866761344562")) < 1e-29);
        assert!(rel(c, dd("0.923879532511286756128183189396788286822416626")) < 1e-29);
    }

    #[test]
    fn sincos_pi_conjugate_pairs_mirror_bitwise() {
        // Angles k/2^K and (2^{K+1} - k)/2^K are conjugate: sine negates
        // bitwise, cosine matches bitwise. The direct-route product relies
        // on this for exact imaginary-part cancellation on the real axis.
        let kk = 8u32;
        let n = 1u64 << (kk + 1);
        for k in [1u64, 3, 100, 255, 256, 400, 511] {
            let x = k as f64 / 2f64.powi(kk as i32);
            let xm = (n - k) as f64 / 2f64.powi(kk as i32);
            let (s1, c1) = Dd::sincos_pi_f64(x);
            let (s2, c2) = Dd::sincos_pi_f64(xm);
            if s1 == 0.0 {
                // Half-turn axis: both sines are (signed) zeros.
                assert_eq!(s2, 0.0, "k={k}");
            } else {
                assert_eq!(s1.to_bits(), (-s2).to_bits(), "k={k}");
            }
            assert_eq!(c1.to_bits(), c2.to_bits(), "k={k}");
        }
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!(dd("2.5"), Dd::from(2.5));
        assert_eq!(dd("-4"), Dd::from(-4.0));
        assert_eq!(dd("1e4"), Dd::from(10000.0));
        // Non-dyadic decimals resolve past f64: 5/10^4 exactly, not fl(5e-4).
        assert!(rel(dd("0.5e-3"), Dd::from(5.0) / Dd::from(10000.0)) < 1e-31);
        assert!(dd("1e308").to_f64() == 1e308);
        assert!("".parse::<Dd>().is_err());
        assert!("1.2.3".parse::<Dd>().is_err());
        assert!("e5".parse::<Dd>().is_err());
        assert!("12a".parse::<Dd>().is_err());
        // A 40-digit constant survives format -> parse at full width.
        let x = dd("1.35473067595837923219456120925677949832224e-12");
        let y = dd(&x.to_sci(30));
        assert!(rel(x, y) < 1e-28);
    }

    #[test]
    fn to_sci_renders_leading_digits() {
        assert_eq!(Dd::from(2.0).ln().to_sci(10), "6.931471805e-1");
        assert_eq!(Dd::from(-1.5).to_sci(3), "-1.50e0");
        assert_eq!(Dd::ZERO.to_sci(10), "0.0");
    }

    #[test]
    fn field_ops_are_coherent() {
        let a = dd("0.693147180559945309417232121458176568075500134");
        let b = dd("2.30258509299404568401799145468436420760110149");
        assert!(rel((a + b) - b, a) < 1e-30);
        assert!(rel((a * b) / b, a) < 1e-30);
        assert_eq!((a * b).to_f64().to_bits(), (b * a).to_f64().to_bits());
        assert!(rel(a.recip().recip(), a) < 1e-30);
        assert!((a - a).is_zero());
        // Exponent/log round trips.
        assert!(rel(a.ln().exp(), a) < 1e-30);
        assert!(rel(b.exp().ln(), b) < 1e-30);
        // Power-of-two scaling is exact.
        let s = a.mul_pow2(1024.0).mul_pow2(1.0 / 1024.0);
        assert_eq!(s, a);
    }

    #[test]
    fn floor_handles_integral_heads() {
        assert_eq!(Dd::from(3.7).floor(), Dd::from(3.0));
        assert_eq!(Dd::from(-1.2).floor(), Dd::from(-2.0));
        // hi integral, tail negative: floor must step down.
        let x = Dd::new(5.0, -1e-20);
        assert_eq!(x.floor(), Dd::from(4.0));
        let y = Dd::new(5.0, 1e-20);
        assert_eq!(y.floor(), Dd::from(5.0));
    }

    #[test]
    fn ordering_follows_value() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, 2e-20);
        assert!(a < b);
        assert!(b > a);
        assert!(Dd::from(-2.0) < Dd::from(1.0));
        assert_eq!(
            Dd::from(1.0).partial_cmp(&Dd::from(1.0)),
            Some(Ordering::Equal)
        );
    }

    #[test]
    fn i64_conversion_is_exact() {
        let v: i64 = (1 << 60) + 12345;
        let x = Dd::from(v);
        assert_eq!(x.floor(), x);
        let back = x - Dd::from((1i64) << 60);
        assert_eq!(back.to_f64(), 12345.0);
    }

    #[test]
    fn atan2_axis_and_diagonal_values() {
        assert!(Dd::atan2(0.0, 3.0).is_zero());
        assert_eq!(Dd::atan2(0.0, -3.0), Dd::PI);
        assert_eq!(Dd::atan2(2.0, 0.0), Dd::FRAC_PI_2);
        assert_eq!(Dd::atan2(-2.0, 0.0), -Dd::FRAC_PI_2);
        // atan2(1, 1) = pi/4: compare against the pi constant, exactly scaled.
        let diag = Dd::atan2(1.0, 1.0);
        let quarter = Dd::PI.mul_pow2(0.25);
        assert!(
            ((diag - quarter) / quarter).abs().to_f64() < 1e-31,
            "atan2(1,1) = {}",
            diag.to_sci(30)
        );
    }

    #[test]
    fn atan2_round_trips_through_sincos() {
        // Self-consistency: rotate (x, y) back by the computed angle and the
        // imaginary residue must vanish to double-double accuracy.
        let cases = [(0.3, 0.7), (-1.5, 0.2), (2.0, -3.0), (-0.4, -0.9), (1e-8, 5.0)];
        for &(y, x) in &cases {
            let theta = Dd::atan2(y, x);
            // sin/cos of hi, rotated by lo to first order (|lo| ~ 1e-17,
            // so the linearization error ~1e-34 is below test resolution).
            let (s, c) = Dd::sincos_angle(theta.hi());
            let lo = Dd::from(theta.lo());
            let s_full = s + c * lo;
            let c_full = c - s * lo;
            let resid = Dd::from(x) * s_full - Dd::from(y) * c_full;
            let r = (x * x + y * y).sqrt();
            assert!(
                (resid.to_f64() / r).abs() < 1e-30,
                "atan2({y}, {x}): residual {:.3e}",
                resid.to_f64()
            );
            // And agree with the f64 seed at f64 grade.
            assert!((theta.to_f64() - y.atan2(x)).abs() < 1e-15);
        }
    }
}
