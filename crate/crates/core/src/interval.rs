//! Dyadic interval arithmetic with outward rounding.
//!
//! An [`Interval`] at precision `p` is the closed range `[lo, hi] / 2^p`
//! with big-integer endpoints. Every operation rounds the lower endpoint
//! down and the upper endpoint up, so the true value of an expression always
//! lies inside the computed enclosure.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec as usize
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn exact_integer(n: BigInt, prec: u32) -> Self {
        let v = n << prec as usize;
        Interval {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec as usize;
        Interval {
            lo: scaled.div_floor(q.denom()),
            hi: div_ceil(&scaled, q.denom()),
            prec,
        }
    }

    /// Enclosure of `√q` for a nonnegative rational `q`.
    pub fn sqrt_of(q: &BigRational, prec: u32) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        // floor(q·4^p) = n  ⇒  isqrt(n) ≤ √q·2^p < isqrt(n) + 1
        let n = (q.numer() << (2 * prec as usize)).div_floor(q.denom());
        let s = n.sqrt();
        let exact = &s * &s == n && (q.numer() << (2 * prec as usize)).is_multiple_of(q.denom());
        let hi = if exact { s.clone() } else { &s + 1 };
        Interval { lo: s, hi, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    fn check(&self, other: &Interval) {
        debug_assert_eq!(self.prec, other.prec, "mixed precisions");
    }

    pub fn add(&self, other: &Interval) -> Interval {
        self.check(other);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.check(other);
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        self.check(other);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        let scale = pow2(self.prec);
        Interval {
            lo: min.div_floor(&scale),
            hi: div_ceil(max, &scale),
            prec: self.prec,
        }
    }

    pub fn square(&self) -> Interval {
        let m = self.mul(self);
        if self.contains_zero() {
            return Interval {
                lo: BigInt::zero(),
                hi: m.hi,
                prec: self.prec,
            };
        }
        m
    }

    pub fn mul_integer(&self, n: &BigInt) -> Interval {
        let (a, b) = (&self.lo * n, &self.hi * n);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval {
            lo,
            hi,
            prec: self.prec,
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Interval {
        let scaled = self.mul_integer(q.numer());
        Interval {
            lo: scaled.lo.div_floor(q.denom()),
            hi: div_ceil(&scaled.hi, q.denom()),
            prec: self.prec,
        }
    }

    /// Quotient, or `None` when the divisor's enclosure contains zero.
    pub fn div(&self, other: &Interval) -> Option<Interval> {
        self.check(other);
        if other.contains_zero() {
            return None;
        }
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            let a = a << self.prec as usize;
            for b in [&other.lo, &other.hi] {
                let f = a.div_floor(b);
                let c = div_ceil(&a, b);
                lo = Some(lo.map_or(f.clone(), |l| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h| h.max(c)));
            }
        }
        Some(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: self.prec,
        })
    }

    /// Enclosure of `√x` over the nonnegative part of the interval.
    pub fn sqrt(&self) -> Interval {
        let scale_up = |v: &BigInt| (v.max(&BigInt::zero()).clone()) << self.prec as usize;
        let lo = scale_up(&self.lo).sqrt();
        let hi_sq = scale_up(&self.hi);
        let mut hi = hi_sq.sqrt();
        if &hi * &hi != hi_sq {
            hi += 1;
        }
        Interval {
            lo,
            hi,
            prec: self.prec,
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != Sign::Plus && self.hi.sign() != Sign::Minus
    }

    pub fn lo_sign(&self) -> Sign {
        self.lo.sign()
    }

    pub fn hi_sign(&self) -> Sign {
        self.hi.sign()
    }

    /// `⌊x⌋` when every point of the interval has the same floor.
    pub fn floor_if_resolved(&self) -> Option<BigInt> {
        let scale = pow2(self.prec);
        let lo = self.lo.div_floor(&scale);
        let hi = self.hi.div_floor(&scale);
        (lo == hi).then_some(lo)
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(self.lo.clone(), pow2(self.prec))
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(self.hi.clone(), pow2(self.prec))
    }

    pub fn upper_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.prec)
    }

    pub fn lower_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.prec)
    }

    pub fn mid_f64(&self) -> f64 {
        dyadic_to_f64(&(&self.lo + &self.hi), self.prec + 1)
    }

    /// Upper bound minus lower bound, as a float.
    pub fn width_f64(&self) -> f64 {
        dyadic_to_f64(&(&self.hi - &self.lo), self.prec)
    }
}

fn dyadic_to_f64(n: &BigInt, prec: u32) -> f64 {
    // keep 64 significant bits before converting
    let bits = n.bits();
    let drop = bits.saturating_sub(64);
    let mantissa = (n >> drop as usize).to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi(drop as i32 - prec as i32)
}
