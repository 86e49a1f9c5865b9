//! Exact arithmetic in `Q(√2, √3)`, enough for the cosine matrices of graphs
//! whose labels lie in {2, 3, 4, 6, ∞}.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `r + s√2` with rational `r`, `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Q2 {
    r: BigRational,
    s: BigRational,
}

impl Q2 {
    fn zero() -> Self {
        Q2 { r: BigRational::zero(), s: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    fn sign(&self) -> Ordering {
        let sr = self.r.cmp(&BigRational::zero());
        let ss = self.s.cmp(&BigRational::zero());
        if ss == Ordering::Equal || sr == ss {
            return if sr == Ordering::Equal { ss } else { sr };
        }
        if sr == Ordering::Equal {
            return ss;
        }
        // opposite signs: compare r^2 with 2 s^2
        let two = BigRational::from_integer(BigInt::from(2));
        match (&self.r * &self.r).cmp(&(two * &self.s * &self.s)) {
            Ordering::Greater => sr,
            Ordering::Less => ss,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn inv(&self) -> Q2 {
        // (r - s√2) / (r^2 - 2 s^2)
        let two = BigRational::from_integer(BigInt::from(2));
        let norm = &self.r * &self.r - two * &self.s * &self.s;
        Q2 { r: &self.r / &norm, s: -&self.s / &norm }
    }

    fn scale(&self, k: &BigRational) -> Q2 {
        Q2 { r: &self.r * k, s: &self.s * k }
    }
}

impl Add for &Q2 {
    type Output = Q2;
    fn add(self, o: &Q2) -> Q2 {
        Q2 { r: &self.r + &o.r, s: &self.s + &o.s }
    }
}

impl Sub for &Q2 {
    type Output = Q2;
    fn sub(self, o: &Q2) -> Q2 {
        Q2 { r: &self.r - &o.r, s: &self.s - &o.s }
    }
}

impl Mul for &Q2 {
    type Output = Q2;
    fn mul(self, o: &Q2) -> Q2 {
        let two = BigRational::from_integer(BigInt::from(2));
        Q2 {
            r: &self.r * &o.r + two * &self.s * &o.s,
            s: &self.r * &o.s + &self.s * &o.r,
        }
    }
}

/// `p + q√3` with `p`, `q` in `Q(√2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    p: Q2,
    q: Q2,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { p: Q2::zero(), q: Q2::zero() }
    }

    pub fn one() -> Self {
        Self::rational(1, 1)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        let mut s = Self::zero();
        s.p.r = BigRational::new(num.into(), den.into());
        s
    }

    /// `k √2` with rational `k = num / den`.
    pub fn sqrt2(num: i64, den: i64) -> Self {
        let mut s = Self::zero();
        s.p.s = BigRational::new(num.into(), den.into());
        s
    }

    /// `k √3` with rational `k = num / den`.
    pub fn sqrt3(num: i64, den: i64) -> Self {
        let mut s = Self::zero();
        s.q.r = BigRational::new(num.into(), den.into());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        let sp = self.p.sign();
        let sq = self.q.sign();
        if sq == Ordering::Equal || sp == sq {
            return if sp == Ordering::Equal { sq } else { sp };
        }
        if sp == Ordering::Equal {
            return sq;
        }
        let three = BigRational::from_integer(BigInt::from(3));
        let diff = &(&self.p * &self.p) - &(&self.q * &self.q).scale(&three);
        match diff.sign() {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Surd {
        assert!(!self.is_zero(), "inverse of zero");
        // (p - q√3) / (p^2 - 3 q^2)
        let three = BigRational::from_integer(BigInt::from(3));
        let norm = &(&self.p * &self.p) - &(&self.q * &self.q).scale(&three);
        let ninv = norm.inv();
        Surd { p: &self.p * &ninv, q: (&self.q * &ninv).scale(&-BigRational::one()) }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigRational| {
            let n: f64 = x.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = x.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        let s2 = std::f64::consts::SQRT_2;
        let s3 = 3f64.sqrt();
        f(&self.p.r) + f(&self.p.s) * s2 + (f(&self.q.r) + f(&self.q.s) * s2) * s3
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        Surd { p: &self.p + &o.p, q: &self.q + &o.q }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        Surd { p: &self.p - &o.p, q: &self.q - &o.q }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        let three = BigRational::from_integer(BigInt::from(3));
        Surd {
            p: &(&self.p * &o.p) + &(&self.q * &o.q).scale(&three),
            q: &(&self.p * &o.q) + &(&self.q * &o.p),
        }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        &Surd::zero() - self
    }
}
