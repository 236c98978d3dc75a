//! Exact coordinates of the form `q·√r` and sums of such surds.
//!
//! Every coordinate a target can carry is a rational multiple of a square
//! root, so its square is rational. Directions with nonnegative coordinates
//! are therefore determined exactly by their squared normalized coordinates,
//! which is how [`crate::targets`] compares points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Trial division bound used by [`square_free_split`].
const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n = s²·r` with `r` square-free.
///
/// Trial division runs up to 10^6. A leftover cofactor below 10^18 has at
/// most two prime factors, so it is square-free unless it is a perfect
/// square; larger leftovers cannot be certified and are rejected.
pub fn square_free_split(n: &BigUint) -> Result<(BigUint, BigUint)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), BigUint::one()));
    }
    let mut rem = n.clone();
    let mut s = BigUint::one();
    let mut r = BigUint::one();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let dd = BigUint::from(d);
        if &dd * &dd > rem {
            break;
        }
        let mut e = 0u32;
        while (&rem % &dd).is_zero() {
            rem /= &dd;
            e += 1;
        }
        if e > 0 {
            s *= dd.pow(e / 2);
            if e % 2 == 1 {
                r *= &dd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rem.is_one() {
        return Ok((s, r));
    }
    let dd = BigUint::from(d);
    if &dd * &dd > rem {
        // loop ran to completion: the cofactor is prime
        return Ok((s, r * rem));
    }
    let root = rem.sqrt();
    if &root * &root == rem {
        return Ok((s * root, r));
    }
    let cube = BigUint::from(TRIAL_LIMIT).pow(3);
    if rem < cube {
        return Ok((s, r * rem));
    }
    Err(Error::Parse(format!(
        "cannot certify the square-free part of {n}"
    )))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"0.6"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let value = BigRational::new(whole * &scale + frac, scale);
        return Ok(if negative { -value } else { value });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(p))
}

pub(crate) fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn to_nonneg_biguint(x: &BigInt) -> BigUint {
    x.to_biguint().expect("nonnegative")
}

/// The real number `q·√r`, `r` square-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactCoord {
    q: BigRational,
    r: BigUint,
}

impl ExactCoord {
    pub fn new(q: BigRational, r: BigUint) -> Result<Self> {
        if q.is_zero() || r.is_zero() {
            return Ok(Self::zero());
        }
        let (s, r) = square_free_split(&r)?;
        Ok(ExactCoord {
            q: q * BigRational::from_integer(BigInt::from(s)),
            r,
        })
    }

    pub fn zero() -> Self {
        ExactCoord {
            q: BigRational::zero(),
            r: BigUint::one(),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        ExactCoord {
            q,
            r: BigUint::one(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `√r` for a nonnegative integer `r`.
    pub fn sqrt(r: u64) -> Result<Self> {
        Self::new(BigRational::one(), BigUint::from(r))
    }

    /// The nonnegative square root of a nonnegative rational, exactly.
    pub fn sqrt_of_rational(x: &BigRational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        // √(a/b) = √(ab) / b
        let a = to_nonneg_biguint(x.numer());
        let b = to_nonneg_biguint(x.denom());
        let inv_b = BigRational::new(BigInt::one(), BigInt::from(b.clone()));
        Self::new(inv_b, a * b)
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn r(&self) -> &BigUint {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.q.is_negative()
    }

    /// `(q√r)² = q²·r`.
    pub fn square(&self) -> BigRational {
        &self.q * &self.q * BigRational::from_integer(BigInt::from(self.r.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.q) * self.r.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn scaled(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        ExactCoord {
            q: &self.q * by,
            r: self.r.clone(),
        }
    }
}

impl fmt::Display for ExactCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_one() || self.q.is_zero() {
            return f.write_str(&rational_to_string(&self.q));
        }
        if self.q.is_one() {
            return write!(f, "sqrt({})", self.r);
        }
        write!(f, "{}*sqrt({})", rational_to_string(&self.q), self.r)
    }
}

impl FromStr for ExactCoord {
    type Err = Error;

    /// Accepts `"q"`, `"sqrt(r)"` and `"q*sqrt(r)"` where `q` is anything
    /// [`parse_rational`] reads.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_radicand = |body: &str| -> Result<BigUint> {
            body.strip_prefix("sqrt(")
                .and_then(|b| b.strip_suffix(')'))
                .and_then(|b| b.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad radical in {s:?}")))
        };
        if let Some((q, rad)) = s.split_once('*') {
            return Self::new(parse_rational(q)?, parse_radicand(rad.trim())?);
        }
        if s.starts_with("sqrt(") {
            return Self::new(BigRational::one(), parse_radicand(s)?);
        }
        Ok(Self::rational(parse_rational(s)?))
    }
}

/// Wire form used by target files: `{"q": "p/q", "r": int}`.
#[derive(Serialize, Deserialize)]
struct CoordWire {
    q: String,
    #[serde(default = "one_u64")]
    r: u64,
}

fn one_u64() -> u64 {
    1
}

impl Serialize for ExactCoord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self
            .r
            .to_u64()
            .ok_or_else(|| serde::ser::Error::custom("radicand exceeds u64"))?;
        CoordWire {
            q: rational_to_string(&self.q),
            r,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactCoord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CoordWire::deserialize(deserializer)?;
        let q = parse_rational(&wire.q).map_err(serde::de::Error::custom)?;
        ExactCoord::new(q, BigUint::from(wire.r)).map_err(serde::de::Error::custom)
    }
}

/// A finite sum `Σ c_j·√r_j` with rational `c_j` and distinct square-free
/// `r_j`. Closed under addition and multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(BigUint::one(), q);
        s
    }

    pub fn from_coord(c: &ExactCoord) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(c.r.clone(), c.q.clone());
        s
    }

    fn add_term(&mut self, r: BigUint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(r).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        let mut out = SurdSum::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), c * by);
        }
        out
    }

    /// Certified enclosure at `prec` fractional bits.
    pub fn interval(&self, prec: u32) -> Interval {
        let mut acc = Interval::exact_integer(BigInt::zero(), prec);
        for (r, c) in &self.terms {
            let root = Interval::sqrt_of(&BigRational::from_integer(BigInt::from(r.clone())), prec);
            acc = acc.add(&root.mul_rational(c));
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| rational_to_f64(c) * r.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    /// Sign of the value, decided by refining enclosures. Exact zero is
    /// detected symbolically.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // a nonzero element of a real multiquadratic field is nonzero, so
        // refinement terminates
        let mut prec = 64;
        loop {
            let iv = self.interval(prec);
            if iv.lo_sign() == Sign::Plus {
                return 1;
            }
            if iv.hi_sign() == Sign::Minus {
                return -1;
            }
            prec *= 2;
        }
    }
}

impl Add for &SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SurdSum {
    type Output = SurdSum;
    fn neg(self) -> SurdSum {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: &SurdSum) -> SurdSum {
        self + &(-rhs)
    }
}

impl Mul for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &SurdSum) -> SurdSum {
        let mut out = SurdSum::zero();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &rhs.terms {
                // √r1·√r2 = g·√(r1 r2 / g²) with g = gcd(r1, r2); both square-free
                let g = num_integer::Integer::gcd(r1, r2);
                let radicand = (r1 / &g) * (r2 / &g);
                let coeff = c1 * c2 * BigRational::from_integer(BigInt::from(g));
                out.add_term(radicand, coeff);
            }
        }
        out
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (r, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if r.is_one() {
                f.write_str(&rational_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{}*sqrt({r})", rational_to_string(&mag))?;
            }
        }
        Ok(())
    }
}
