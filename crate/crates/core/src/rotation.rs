//! Symbolic monomials c * e(q*theta) * U^m V^n of the rotation algebra,
//! the four canonical finite-order automorphisms, and the unbounded
//! functionals (twisted traces) evaluated on monomials.
//!
//! Normal form is U-before-V; the defining relation V U = e(theta) U V
//! supplies the phase bookkeeping. The half-integer phase e^{-pi i theta}
//! appearing in the cubic and hexic transforms is the frequency -1/2
//! under the e(x) = e^{2 pi i x} convention.

use std::fmt;
use std::str::FromStr;

use crate::scalar::{trace_add, CycScalar, FormalTrace, Rational};

/// c * e(q*theta) * U^m V^n in normal form.
///
/// The canonical zero has c = 0 and q = m = n = 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Monomial {
    coeff: CycScalar,
    theta_freq: Rational,
    m: i64,
    n: i64,
}

impl Monomial {
    pub fn new(coeff: CycScalar, theta_freq: Rational, m: i64, n: i64) -> Self {
        if coeff.is_zero() {
            return Monomial::zero();
        }
        Monomial {
            coeff,
            theta_freq,
            m,
            n,
        }
    }

    pub fn zero() -> Self {
        Monomial {
            coeff: CycScalar::zero(),
            theta_freq: Rational::zero(),
            m: 0,
            n: 0,
        }
    }

    pub fn one() -> Self {
        Monomial::generator(0, 0)
    }

    /// U^m V^n with unit coefficient and zero phase.
    pub fn generator(m: i64, n: i64) -> Self {
        Monomial {
            coeff: CycScalar::one(),
            theta_freq: Rational::zero(),
            m,
            n,
        }
    }

    pub fn u() -> Self {
        Monomial::generator(1, 0)
    }

    pub fn v() -> Self {
        Monomial::generator(0, 1)
    }

    pub fn coeff(&self) -> &CycScalar {
        &self.coeff
    }

    pub fn theta_freq(&self) -> &Rational {
        &self.theta_freq
    }

    pub fn exponents(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero monomial");
        // (U^a V^b)^-1 = V^-b U^-a = e(a*b*theta) U^-a V^-b
        let ab = Rational::from_int(self.m) * Rational::from_int(self.n);
        Monomial {
            coeff: self.coeff.inverse(),
            theta_freq: ab - self.theta_freq.clone(),
            m: -self.m,
            n: -self.n,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        // Square-and-multiply over mono_mul.
        let mut acc = Monomial::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = mono_mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = mono_mul(&sq, &sq);
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "({})", self.coeff)?;
        if !self.theta_freq.is_zero() {
            write!(f, "e({} theta)", self.theta_freq)?;
        }
        write!(f, " U^{} V^{}", self.m, self.n)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product in normal form: commuting V^b past U^c picks up e(b*c*theta).
pub fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let coeff = a.coeff() * b.coeff();
    if coeff.is_zero() {
        return Monomial::zero();
    }
    let cross = Rational::from_int(a.n) * Rational::from_int(b.m);
    Monomial {
        coeff,
        theta_freq: &(&a.theta_freq + &b.theta_freq) + &cross,
        m: a.m + b.m,
        n: a.n + b.n,
    }
}

/// The four canonical automorphisms, of orders 2, 3, 4, 6.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Automorphism {
    /// phi: U -> U^-1, V -> V^-1
    Flip,
    /// alpha: U -> e^{-pi i theta} U^-1 V, V -> U^-1
    Cubic,
    /// sigma: U -> V^-1, V -> U
    Fourier,
    /// rho: U -> V, V -> e^{-pi i theta} U^-1 V
    Hexic,
}

impl Automorphism {
    pub fn order(self) -> u32 {
        match self {
            Automorphism::Flip => 2,
            Automorphism::Cubic => 3,
            Automorphism::Fourier => 4,
            Automorphism::Hexic => 6,
        }
    }

    fn image_of_u(self) -> Monomial {
        match self {
            Automorphism::Flip => Monomial::generator(-1, 0),
            Automorphism::Cubic => Monomial::new(
                CycScalar::one(),
                Rational::new(-1, 2),
                -1,
                1,
            ),
            Automorphism::Fourier => Monomial::generator(0, -1),
            Automorphism::Hexic => Monomial::generator(0, 1),
        }
    }

    fn image_of_v(self) -> Monomial {
        match self {
            Automorphism::Flip => Monomial::generator(0, -1),
            Automorphism::Cubic => Monomial::generator(-1, 0),
            Automorphism::Fourier => Monomial::generator(1, 0),
            Automorphism::Hexic => Monomial::new(
                CycScalar::one(),
                Rational::new(-1, 2),
                -1,
                1,
            ),
        }
    }

    /// Image of a monomial, computed by exponentiating the generator
    /// images with mono_mul rather than by closed-form phase formulas.
    pub fn apply(self, x: &Monomial) -> Monomial {
        if x.is_zero() {
            return Monomial::zero();
        }
        let scalar = Monomial::new(x.coeff().clone(), x.theta_freq().clone(), 0, 0);
        let (m, n) = x.exponents();
        mono_mul(
            &scalar,
            &mono_mul(&self.image_of_u().pow(m), &self.image_of_v().pow(n)),
        )
    }
}

/// 1 if r | s, else 0. Divisibility over Z; r must be positive.
pub fn divisor_delta(r: i64, s: i64) -> i64 {
    assert!(r >= 1, "divisor_delta needs r >= 1");
    i64::from(s.rem_euclid(r) == 0)
}

/// The seventeen unbounded functionals tabulated for the four crossed
/// products: flip phi_jk, Fourier psi_jk, hexic Psi_jk, cubic Phi_1k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Functional {
    /// phi_jk(U^m V^n) = e(-theta/2 mn) delta_2^{m-j} delta_2^{n-k}
    Flip00,
    Flip01,
    Flip10,
    Flip11,
    /// psi_1k(U^m V^n) = e(theta/4 (m-n)^2) delta_2^{m-n-k}
    FourierPsi10,
    FourierPsi11,
    /// psi_20 = phi_00, psi_21 = phi_11, psi_22 = e(-theta/2 mn) delta_2^{m-n-1}
    FourierPsi20,
    FourierPsi21,
    FourierPsi22,
    /// Psi_10(U^m V^n) = e(theta/2 (m^2+n^2))
    HexicPsi10,
    /// Psi_2k(U^m V^n) = e(theta/6 (m-n)^2), gated by 3 | m-n for k=0
    HexicPsi20,
    HexicPsi21,
    /// Psi_30 = phi_00, Psi_31(U^m V^n) = e(-theta/2 mn)
    HexicPsi30,
    HexicPsi31,
    /// Phi_1k(U^m V^n) = e(theta/6 (m-n)^2) delta_3^{m-n-k}
    CubicPhi10,
    CubicPhi11,
    CubicPhi12,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown functional: {0:?}")]
pub struct UnknownFunctional(String);

impl FromStr for Functional {
    type Err = UnknownFunctional;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Functional::*;
        Ok(match s {
            "phi00" => Flip00,
            "phi01" => Flip01,
            "phi10" => Flip10,
            "phi11" => Flip11,
            "psi10" => FourierPsi10,
            "psi11" => FourierPsi11,
            "psi20" => FourierPsi20,
            "psi21" => FourierPsi21,
            "psi22" => FourierPsi22,
            "Psi10" => HexicPsi10,
            "Psi20" => HexicPsi20,
            "Psi21" => HexicPsi21,
            "Psi30" => HexicPsi30,
            "Psi31" => HexicPsi31,
            "Phi10" => CubicPhi10,
            "Phi11" => CubicPhi11,
            "Phi12" => CubicPhi12,
            other => return Err(UnknownFunctional(other.to_owned())),
        })
    }
}

impl Functional {
    pub const ALL: [Functional; 17] = [
        Functional::Flip00,
        Functional::Flip01,
        Functional::Flip10,
        Functional::Flip11,
        Functional::FourierPsi10,
        Functional::FourierPsi11,
        Functional::FourierPsi20,
        Functional::FourierPsi21,
        Functional::FourierPsi22,
        Functional::HexicPsi10,
        Functional::HexicPsi20,
        Functional::HexicPsi21,
        Functional::HexicPsi30,
        Functional::HexicPsi31,
        Functional::CubicPhi10,
        Functional::CubicPhi11,
        Functional::CubicPhi12,
    ];

    /// Value on a monomial, linear in the coefficient and shifted by the
    /// monomial's own theta frequency.
    pub fn eval(self, x: &Monomial) -> FormalTrace {
        if x.is_zero() {
            return FormalTrace::zero();
        }
        let (m, n) = x.exponents();
        let (freq, gate) = self.formula(m, n);
        if gate == 0 {
            return FormalTrace::zero();
        }
        FormalTrace::term(x.theta_freq() + &freq, x.coeff().clone())
    }

    /// (phase frequency, divisor gate) on U^m V^n.
    fn formula(self, m: i64, n: i64) -> (Rational, i64) {
        use Functional::*;
        let half_mn = Rational::new(-(m * n), 2);
        let quarter_sq = Rational::new((m - n) * (m - n), 4);
        let sixth_sq = Rational::new((m - n) * (m - n), 6);
        match self {
            Flip00 => (half_mn, divisor_delta(2, m) * divisor_delta(2, n)),
            Flip01 => (half_mn, divisor_delta(2, m) * divisor_delta(2, n - 1)),
            Flip10 => (half_mn, divisor_delta(2, m - 1) * divisor_delta(2, n)),
            Flip11 => (half_mn, divisor_delta(2, m - 1) * divisor_delta(2, n - 1)),
            FourierPsi10 => (quarter_sq, divisor_delta(2, m - n)),
            FourierPsi11 => (quarter_sq, divisor_delta(2, m - n - 1)),
            FourierPsi20 => Flip00.formula(m, n),
            FourierPsi21 => Flip11.formula(m, n),
            FourierPsi22 => (half_mn, divisor_delta(2, m - n - 1)),
            HexicPsi10 => (Rational::new(m * m + n * n, 2), 1),
            HexicPsi20 => (sixth_sq, divisor_delta(3, m - n)),
            HexicPsi21 => (sixth_sq, 1),
            HexicPsi30 => Flip00.formula(m, n),
            HexicPsi31 => (half_mn, 1),
            CubicPhi10 => (sixth_sq, divisor_delta(3, m - n)),
            CubicPhi11 => (sixth_sq, divisor_delta(3, m - n - 1)),
            CubicPhi12 => (sixth_sq, divisor_delta(3, m - n - 2)),
        }
    }
}

/// Sum of the evaluations of several functionals on one monomial.
pub fn eval_sum(fs: &[Functional], x: &Monomial) -> FormalTrace {
    fs.iter()
        .fold(FormalTrace::zero(), |acc, f| trace_add(&acc, &f.eval(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::root_of_unity;
    use proptest::prelude::*;

    fn phase(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn v_times_u_picks_up_phase() {
        let vu = mono_mul(&Monomial::v(), &Monomial::u());
        assert_eq!(vu, Monomial::new(CycScalar::one(), phase(1, 1), 1, 1));
    }

    #[test]
    fn u_times_v_is_normal_ordered() {
        let uv = mono_mul(&Monomial::u(), &Monomial::v());
        assert_eq!(uv, Monomial::generator(1, 1));
    }

    #[test]
    fn uv_squared() {
        let uv = Monomial::generator(1, 1);
        let sq = mono_mul(&uv, &uv);
        assert_eq!(sq, Monomial::new(CycScalar::one(), phase(1, 1), 2, 2));
    }

    #[test]
    fn inverse_is_two_sided() {
        let x = Monomial::new(CycScalar::i(), phase(3, 4), 2, -3);
        assert_eq!(mono_mul(&x, &x.inverse()), Monomial::one());
        assert_eq!(mono_mul(&x.inverse(), &x), Monomial::one());
    }

    #[test]
    fn fourier_on_general_monomial() {
        // sigma(U^m V^n) = e(-mn theta) U^n V^-m
        for (m, n) in [(2, 3), (-1, 4), (0, 5), (-3, -2)] {
            let img = Automorphism::Fourier.apply(&Monomial::generator(m, n));
            assert_eq!(
                img,
                Monomial::new(CycScalar::one(), phase(-m * n, 1), n, -m),
                "sigma on U^{m} V^{n}"
            );
        }
    }

    #[test]
    fn flip_on_general_monomial_has_zero_phase() {
        for (m, n) in [(2, 3), (-1, 4), (7, -5)] {
            let img = Automorphism::Flip.apply(&Monomial::generator(m, n));
            assert_eq!(img, Monomial::generator(-m, -n));
        }
    }

    #[test]
    fn hexic_squared_is_cubic_on_generators() {
        for x in [Monomial::u(), Monomial::v()] {
            let rho2 = Automorphism::Hexic.apply(&Automorphism::Hexic.apply(&x));
            assert_eq!(rho2, Automorphism::Cubic.apply(&x));
        }
    }

    #[test]
    fn divisor_delta_examples() {
        assert_eq!(divisor_delta(2, 4), 1);
        assert_eq!(divisor_delta(3, 4), 0);
        assert_eq!(divisor_delta(2, -2), 1);
        assert_eq!(divisor_delta(1, 0), 1);
    }

    #[test]
    fn functional_values_on_small_monomials() {
        // Psi_10 on UV: (m^2+n^2)/2 = 1
        let uv = Monomial::generator(1, 1);
        assert_eq!(
            Functional::HexicPsi10.eval(&uv),
            FormalTrace::term(phase(1, 1), CycScalar::one())
        );

        // Phi_10 on U V^2: m - n = -1, not divisible by 3
        let uv2 = Monomial::generator(1, 2);
        assert!(Functional::CubicPhi10.eval(&uv2).is_zero());

        // phi_00 on U^2 V^2: e(-2 theta)
        let u2v2 = Monomial::generator(2, 2);
        assert_eq!(
            Functional::Flip00.eval(&u2v2),
            FormalTrace::term(phase(-2, 1), CycScalar::one())
        );
    }

    #[test]
    fn phi01_plus_phi10_on_unit() {
        // On U^0 V^0 only phi_00 survives among the phi_jk; the sum
        // phi_01 + phi_10 vanishes while phi_00 gives e(0 theta).
        let one = Monomial::one();
        assert!(eval_sum(&[Functional::Flip01, Functional::Flip10], &one).is_zero());
        assert_eq!(
            Functional::Flip00.eval(&one),
            FormalTrace::term(Rational::zero(), CycScalar::one())
        );
    }

    #[test]
    fn functional_parsing() {
        assert_eq!("psi22".parse::<Functional>().unwrap(), Functional::FourierPsi22);
        assert_eq!("Phi12".parse::<Functional>().unwrap(), Functional::CubicPhi12);
        assert!("psi99".parse::<Functional>().is_err());
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (-6i64..=6, -6i64..=6, -12i64..=12, 0i64..12).prop_map(|(m, n, qn, k)| {
            Monomial::new(root_of_unity(k), Rational::new(qn, 4), m, n)
        })
    }

    proptest! {
        #[test]
        fn mono_mul_associative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
            prop_assert_eq!(
                mono_mul(&mono_mul(&a, &b), &c),
                mono_mul(&a, &mono_mul(&b, &c))
            );
        }

        #[test]
        fn automorphism_orders(x in arb_monomial()) {
            for g in [
                Automorphism::Flip,
                Automorphism::Cubic,
                Automorphism::Fourier,
                Automorphism::Hexic,
            ] {
                let mut y = x.clone();
                for _ in 0..g.order() {
                    y = g.apply(&y);
                }
                prop_assert_eq!(y, x.clone(), "order of {:?}", g);
            }
        }
    }
}
