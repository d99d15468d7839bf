//! Double-double mantissa with a separate binary exponent.
//!
//! Partition functions of long paths and cycles overflow `f64` (Z_{P_2000}(2) is
//! about 2^1390), and the occupancy ratio λZ'/Z needs more than 53 bits when the
//! certified inequalities are checked at 1e-9. [`Scaled`] stores `m · 2^e` with
//! `m` a [`TwoFloat`] normalized to `|m.hi| ∈ [1, 2)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};

use num_bigint::BigUint;
use twofloat::TwoFloat;

#[derive(Clone, Copy, PartialEq)]
pub struct Scaled {
    m: TwoFloat,
    e: i64,
}

/// Binary exponent of a finite nonzero `f64`.
fn exponent_of(x: f64) -> i64 {
    let bits = (x.to_bits() >> 52) & 0x7ff;
    if bits == 0 {
        // subnormal: rescale into the normal range first
        exponent_of(x * 2f64.powi(64)) - 64
    } else {
        bits as i64 - 1023
    }
}

fn pow2(k: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&k));
    f64::from_bits(((k + 1023) as u64) << 52)
}

impl Scaled {
    pub const ZERO: Scaled = Scaled {
        m: TwoFloat::from_f64(0.0),
        e: 0,
    };
    pub const ONE: Scaled = Scaled {
        m: TwoFloat::from_f64(1.0),
        e: 0,
    };

    fn normalized(m: TwoFloat, e: i64) -> Scaled {
        let hi = m.hi();
        if hi == 0.0 {
            return Scaled::ZERO;
        }
        assert!(hi.is_finite(), "non-finite mantissa");
        let shift = exponent_of(hi);
        Scaled {
            m: m * pow2(-shift),
            e: e + shift,
        }
    }

    pub fn from_f64(x: f64) -> Scaled {
        Scaled::normalized(TwoFloat::from(x), 0)
    }

    pub fn from_u128(x: u128) -> Scaled {
        Scaled::normalized(TwoFloat::from(x), 0)
    }

    /// Rounds to the nearest representable value (106-bit mantissa).
    pub fn from_biguint(x: &BigUint) -> Scaled {
        let bits = x.bits();
        let shift = bits.saturating_sub(106);
        let top: u128 = (x >> shift).try_into().expect("at most 106 bits");
        Scaled::normalized(TwoFloat::from(top), shift as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.m.hi() == 0.0
    }

    /// Nearest `f64`; saturates to infinity or zero outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let v = self.m.hi() + self.m.lo();
        if self.e > 1023 {
            return v * f64::INFINITY;
        }
        if self.e < -1074 {
            return 0.0 * v;
        }
        if self.e < -1022 {
            return v * pow2(self.e + 64) / pow2(64);
        }
        v * pow2(self.e)
    }

    /// Natural logarithm; requires a positive value.
    pub fn ln(&self) -> f64 {
        assert!(self.m.hi() > 0.0, "ln of a non-positive value");
        let lm = self.m.ln();
        lm.hi() + lm.lo() + self.e as f64 * std::f64::consts::LN_2
    }

    /// Mantissa as a `TwoFloat` and the binary exponent.
    pub fn parts(&self) -> (TwoFloat, i64) {
        (self.m, self.e)
    }
}

impl Add for Scaled {
    type Output = Scaled;
    fn add(self, rhs: Scaled) -> Scaled {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.e >= rhs.e { (self, rhs) } else { (rhs, self) };
        let gap = big.e - small.e;
        if gap > 220 {
            return big;
        }
        Scaled::normalized(big.m + small.m * pow2(-gap), big.e)
    }
}

impl Mul for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled::normalized(self.m * rhs.m, self.e + rhs.e)
    }
}

impl Mul<f64> for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: f64) -> Scaled {
        self * Scaled::from_f64(rhs)
    }
}

impl Div for Scaled {
    type Output = Scaled;
    fn div(self, rhs: Scaled) -> Scaled {
        assert!(!rhs.is_zero(), "division by zero");
        Scaled::normalized(self.m / rhs.m, self.e - rhs.e)
    }
}

impl PartialOrd for Scaled {
    fn partial_cmp(&self, other: &Scaled) -> Option<Ordering> {
        let sa = self.m.hi().signum();
        let sb = other.m.hi().signum();
        if self.is_zero() || other.is_zero() || sa != sb {
            let a = if self.is_zero() { 0.0 } else { sa };
            let b = if other.is_zero() { 0.0 } else { sb };
            return a.partial_cmp(&b);
        }
        let by_exp = self.e.cmp(&other.e);
        let ord = if by_exp == Ordering::Equal {
            self.m.partial_cmp(&other.m)?
        } else {
            by_exp
        };
        Some(if sa < 0.0 { ord.reverse() } else { ord })
    }
}

impl fmt::Debug for Scaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * 2^{}", self.m.hi() + self.m.lo(), self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for x in [1.0, 0.3, 12345.678, 1e-300, 1e300, 3.0] {
            assert_eq!(Scaled::from_f64(x).to_f64(), x);
        }
        assert_eq!(Scaled::from_u128(1 << 100).to_f64(), 2f64.powi(100));
    }

    #[test]
    fn beyond_f64_range() {
        let mut x = Scaled::ONE;
        for _ in 0..3000 {
            x = x * 2.0;
        }
        assert!((x.ln() - 3000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        assert!(x.to_f64().is_infinite());
        let y = x / (x + Scaled::ONE);
        assert!((y.to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn big_integers() {
        let big = BigUint::from(3u32).pow(1000);
        let s = Scaled::from_biguint(&big);
        assert!((s.ln() - 1000.0 * 3f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn ordering() {
        let a = Scaled::from_f64(1e200) * Scaled::from_f64(1e200);
        let b = Scaled::from_f64(1e300);
        assert!(a > b);
        assert!(Scaled::from_f64(-2.0) < Scaled::from_f64(1.0));
        assert!(Scaled::ZERO < Scaled::from_f64(1e-300));
    }

    #[test]
    fn extra_precision_survives_addition() {
        let tiny = Scaled::from_f64(1e-20);
        let s = Scaled::ONE + tiny;
        let back = (s + Scaled::from_f64(-1.0)).to_f64();
        assert!((back - 1e-20).abs() < 1e-30);
    }
}
