//! Exact arithmetic tower: rationals, the cyclotomic field Q(zeta_12),
//! theta-linear scalars, and formal theta-exponential traces.
//!
//! `CycScalar` works over the power basis {1, z, z^2, z^3} of Q(zeta_12),
//! where z = e(1/12) has minimal polynomial x^4 - x^2 + 1. The constants
//! i = z^3 and omega = e(1/6) = z^2 both live in this one field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

macro_rules! fmt_debug_via_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt::Display::fmt(self, f)
        }
    };
}

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// Serializes as the string `"p/q"`, or `"p"` when q = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Numerator (with sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fmt_debug_via_display!();
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal: {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_owned());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p).map_err(|_| bad())?;
                let q = BigInt::from_str(q).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(p, q)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Element of Q(zeta_12) in coordinates over {1, z, z^2, z^3}.
///
/// Reduction rule: z^4 = z^2 - 1 (minimal polynomial x^4 - x^2 + 1),
/// hence z^5 = z^3 - z and z^6 = -1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    coeffs: [Rational; 4],
}

impl CycScalar {
    pub fn from_coeffs(coeffs: [Rational; 4]) -> Self {
        CycScalar { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        CycScalar::default()
    }

    pub fn one() -> Self {
        CycScalar::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar {
            coeffs: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycScalar::from_rational(Rational::from_int(n))
    }

    /// z = e(1/12), the generator of the basis.
    pub fn zeta() -> Self {
        let mut c = CycScalar::zero();
        c.coeffs[1] = Rational::one();
        c
    }

    /// i = e(1/4) = z^3.
    pub fn i() -> Self {
        let mut c = CycScalar::zero();
        c.coeffs[3] = Rational::one();
        c
    }

    /// omega = e(1/6) = z^2, a primitive sixth root of unity.
    pub fn omega() -> Self {
        let mut c = CycScalar::zero();
        c.coeffs[2] = Rational::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycScalar {
            coeffs: [
                &self.coeffs[0] * r,
                &self.coeffs[1] * r,
                &self.coeffs[2] * r,
                &self.coeffs[3] * r,
            ],
        }
    }

    /// Multiplicative inverse, via a 4x4 rational solve against the
    /// multiplication-by-self matrix. Panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(zeta_12)");
        // Columns: self * z^j for j = 0..4.
        let mut cols = Vec::with_capacity(4);
        let mut p = self.clone();
        for _ in 0..4 {
            cols.push(p.coeffs.clone());
            p = &p * &CycScalar::zeta();
        }
        // Solve M x = e0 over Q, where M[r][c] = cols[c][r].
        let mut aug: Vec<Vec<Rational>> = (0..4)
            .map(|r| {
                let mut row: Vec<Rational> = (0..4).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !aug[r][col].is_zero())
                .expect("singular multiplication matrix for nonzero field element");
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for j in col..5 {
                aug[col][j] = &aug[col][j] * &inv;
            }
            for r in 0..4 {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for j in col..5 {
                        aug[r][j] = &aug[r][j] - &(&f * &aug[col][j]);
                    }
                }
            }
        }
        CycScalar {
            coeffs: [
                aug[0][4].clone(),
                aug[1][4].clone(),
                aug[2][4].clone(),
                aug[3][4].clone(),
            ],
        }
    }
}

/// e(k/12) = z^(k mod 12), for any integer k.
pub fn root_of_unity(k: i64) -> CycScalar {
    let mut e = k.rem_euclid(12);
    let mut sign = 1i64;
    if e >= 6 {
        // z^6 = -1
        e -= 6;
        sign = -1;
    }
    let mut c = CycScalar::zero();
    if e < 4 {
        c.coeffs[e as usize] = Rational::from_int(sign);
    } else {
        // z^4 = z^2 - 1, z^5 = z^3 - z
        c.coeffs[(e - 2) as usize] = Rational::from_int(sign);
        c.coeffs[(e - 4) as usize] = Rational::from_int(-sign);
    }
    c
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: [
                &self.coeffs[0] + &rhs.coeffs[0],
                &self.coeffs[1] + &rhs.coeffs[1],
                &self.coeffs[2] + &rhs.coeffs[2],
                &self.coeffs[3] + &rhs.coeffs[3],
            ],
        }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: [
                &self.coeffs[0] - &rhs.coeffs[0],
                &self.coeffs[1] - &rhs.coeffs[1],
                &self.coeffs[2] - &rhs.coeffs[2],
                &self.coeffs[3] - &rhs.coeffs[3],
            ],
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        // Polynomial product of degree <= 6, then reduce
        // z^4 -> z^2 - 1, z^5 -> z^3 - z, z^6 -> -1.
        let mut p: [Rational; 7] = Default::default();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    p[a + b] = &p[a + b] + &(ca * cb);
                }
            }
        }
        CycScalar {
            coeffs: [
                &(&p[0] - &p[4]) - &p[6],
                &p[1] - &p[5],
                &p[2] + &p[4],
                &p[3] + &p[5],
            ],
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            coeffs: [
                -&self.coeffs[0],
                -&self.coeffs[1],
                -&self.coeffs[2],
                -&self.coeffs[3],
            ],
        }
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c}){}", names[k])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fmt_debug_via_display!();
}

/// Value of the form `const_part + theta_part * theta`, with theta a
/// formal symbol. Entry type of all character vectors.
///
/// Serializes as the 8-array of rational strings produced by [`ThetaLinear::flatten`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ThetaLinear {
    pub const_part: CycScalar,
    pub theta_part: CycScalar,
}

impl ThetaLinear {
    pub fn new(const_part: CycScalar, theta_part: CycScalar) -> Self {
        ThetaLinear {
            const_part,
            theta_part,
        }
    }

    pub fn zero() -> Self {
        ThetaLinear::default()
    }

    pub fn constant(c: CycScalar) -> Self {
        ThetaLinear::new(c, CycScalar::zero())
    }

    pub fn theta_multiple(t: CycScalar) -> Self {
        ThetaLinear::new(CycScalar::zero(), t)
    }

    pub fn is_zero(&self) -> bool {
        self.const_part.is_zero() && self.theta_part.is_zero()
    }

    /// Scaling by a field scalar. A product of two theta-linear values with
    /// nonzero theta parts is deliberately not defined.
    pub fn scale(&self, s: &CycScalar) -> Self {
        ThetaLinear {
            const_part: &self.const_part * s,
            theta_part: &self.theta_part * s,
        }
    }

    /// Concatenated coordinates of the constant and theta parts over
    /// {1, z, z^2, z^3}; linear and injective.
    pub fn flatten(&self) -> [Rational; 8] {
        let c = self.const_part.coeffs();
        let t = self.theta_part.coeffs();
        [
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            c[3].clone(),
            t[0].clone(),
            t[1].clone(),
            t[2].clone(),
            t[3].clone(),
        ]
    }

    pub fn from_flat(v: [Rational; 8]) -> Self {
        let [c0, c1, c2, c3, t0, t1, t2, t3] = v;
        ThetaLinear {
            const_part: CycScalar::from_coeffs([c0, c1, c2, c3]),
            theta_part: CycScalar::from_coeffs([t0, t1, t2, t3]),
        }
    }
}

impl Add for &ThetaLinear {
    type Output = ThetaLinear;
    fn add(self, rhs: &ThetaLinear) -> ThetaLinear {
        ThetaLinear {
            const_part: &self.const_part + &rhs.const_part,
            theta_part: &self.theta_part + &rhs.theta_part,
        }
    }
}

impl Sub for &ThetaLinear {
    type Output = ThetaLinear;
    fn sub(self, rhs: &ThetaLinear) -> ThetaLinear {
        ThetaLinear {
            const_part: &self.const_part - &rhs.const_part,
            theta_part: &self.theta_part - &rhs.theta_part,
        }
    }
}

impl fmt::Display for ThetaLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.const_part.is_zero(), self.theta_part.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.const_part),
            (true, false) => write!(f, "({})theta", self.theta_part),
            (false, false) => write!(f, "{} + ({})theta", self.const_part, self.theta_part),
        }
    }
}

impl fmt::Debug for ThetaLinear {
    fmt_debug_via_display!();
}

impl Serialize for ThetaLinear {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.flatten().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThetaLinear {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = <[Rational; 8]>::deserialize(d)?;
        Ok(ThetaLinear::from_flat(v))
    }
}

/// Finite sum of terms c * e(q*theta), stored as a map from the rational
/// frequency q to its coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FormalTrace {
    terms: BTreeMap<Rational, CycScalar>,
}

impl FormalTrace {
    pub fn zero() -> Self {
        FormalTrace::default()
    }

    /// The single term c * e(q*theta).
    pub fn term(q: Rational, c: CycScalar) -> Self {
        let mut t = FormalTrace::zero();
        if !c.is_zero() {
            t.terms.insert(q, c);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &CycScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return FormalTrace::zero();
        }
        FormalTrace {
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (q.clone(), c * s))
                .collect(),
        }
    }
}

/// Pointwise merge over frequencies; zero terms dropped.
pub fn trace_add(s: &FormalTrace, t: &FormalTrace) -> FormalTrace {
    let mut out = s.clone();
    for (q, c) in &t.terms {
        match out.terms.get_mut(q) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    out.terms.remove(q);
                } else {
                    *existing = sum;
                }
            }
            None => {
                out.terms.insert(q.clone(), c.clone());
            }
        }
    }
    out
}

impl Add for &FormalTrace {
    type Output = FormalTrace;
    fn add(self, rhs: &FormalTrace) -> FormalTrace {
        trace_add(self, rhs)
    }
}

impl Neg for &FormalTrace {
    type Output = FormalTrace;
    fn neg(self) -> FormalTrace {
        FormalTrace {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for FormalTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (q, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if q.is_zero() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})e({q} theta)")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormalTrace {
    fmt_debug_via_display!();
}
