use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;

const SQRT5: f64 = 2.236_067_977_499_79;

/// An element `a + b√5` of the real quadratic field Q(√5).
///
/// `a` and `b` are kept in lowest terms, so two values are equal exactly when
/// their coefficients are. The ordering is the one inherited from the real
/// embedding with `√5 > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenScalar {
    a: Rational,
    b: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GoldenError {
    #[error("division by zero in Q(sqrt5)")]
    DivisionByZero,
    #[error("invalid Q(sqrt5) literal `{0}`")]
    Parse(String),
}

impl GoldenScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenScalar { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        GoldenScalar { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from(n))
    }

    /// Shorthand for `(p/q) + (r/s)√5`.
    pub fn frac(p: i64, q: i64, r: i64, s: i64) -> Self {
        GoldenScalar { a: Rational::new(p, q), b: Rational::new(r, s) }
    }

    pub fn sqrt5() -> Self {
        GoldenScalar { a: Rational::zero(), b: Rational::one() }
    }

    /// The golden ratio (1+√5)/2.
    pub fn tau() -> Self {
        Self::frac(1, 2, 1, 2)
    }

    /// The Galois conjugate of the golden ratio, (1−√5)/2.
    pub fn tau_conj() -> Self {
        Self::frac(1, 2, -1, 2)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a − b√5`, the image under the field automorphism √5 ↦ −√5.
    pub fn conjugate(&self) -> Self {
        GoldenScalar { a: self.a.clone(), b: -&self.b }
    }

    /// The field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from(5) * &self.b * &self.b
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the term of larger magnitude wins.
        let a2 = &self.a * &self.a;
        let b2 = Rational::from(5) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("sqrt5 is irrational"),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, GoldenError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        // 1/(a + b√5) = (a − b√5)/(a² − 5b²)
        Ok(GoldenScalar { a: &self.a / &n, b: -(&self.b / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, GoldenError> {
        if let (true, true) = (self.b.is_zero(), rhs.b.is_zero()) {
            if rhs.a.is_zero() {
                return Err(GoldenError::DivisionByZero);
            }
            return Ok(Self::rational(&self.a / &rhs.a));
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenScalar { a: &self.a * r, b: &self.b * r }
    }

    /// Nearest double, evaluated without cancellation when the two terms
    /// have opposite signs (error ≤ a few ulp).
    pub fn to_f64(&self) -> f64 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == 0 || sb == 0 || sa == sb {
            return self.a.to_f64() + self.b.to_f64() * SQRT5;
        }
        // a + b√5 = (a² − 5b²) / (a − b√5), and the denominator has no cancellation.
        let den = self.a.to_f64() - self.b.to_f64() * SQRT5;
        self.norm().to_f64() / den
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor();
        }
        let approx = self.to_f64().floor();
        let mut n = if approx.is_finite() && approx.abs() < 1e15 {
            BigInt::from(approx as i64)
        } else {
            (&self.a + &self.b * Rational::new(2236067977, 1000000000)).floor()
        };
        let as_g = |n: &BigInt| GoldenScalar::rational(Rational::from(n.clone()));
        while &as_g(&n) > self {
            n -= 1;
        }
        while &as_g(&(&n + 1)) <= self {
            n += 1;
        }
        n
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GoldenScalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest positive integer `D` with `D·a` and `D·b` integral.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(&self.a.denom(), &self.b.denom())
    }
}

impl Zero for GoldenScalar {
    fn zero() -> Self {
        GoldenScalar::default()
    }
    fn is_zero(&self) -> bool {
        GoldenScalar::is_zero(self)
    }
}

impl One for GoldenScalar {
    fn one() -> Self {
        GoldenScalar::from_int(1)
    }
}

impl From<Rational> for GoldenScalar {
    fn from(r: Rational) -> Self {
        GoldenScalar::rational(r)
    }
}

impl From<i64> for GoldenScalar {
    fn from(n: i64) -> Self {
        GoldenScalar::from_int(n)
    }
}

impl Ord for GoldenScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum().cmp(&0)
    }
}

impl PartialOrd for GoldenScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_g(x: &GoldenScalar, y: &GoldenScalar) -> GoldenScalar {
    GoldenScalar { a: &x.a + &y.a, b: &x.b + &y.b }
}

fn sub_g(x: &GoldenScalar, y: &GoldenScalar) -> GoldenScalar {
    GoldenScalar { a: &x.a - &y.a, b: &x.b - &y.b }
}

fn mul_g(x: &GoldenScalar, y: &GoldenScalar) -> GoldenScalar {
    if x.b.is_zero() && y.b.is_zero() {
        return GoldenScalar::rational(&x.a * &y.a);
    }
    // (a₁ + b₁√5)(a₂ + b₂√5) = (a₁a₂ + 5b₁b₂) + (a₁b₂ + a₂b₁)√5
    let five = Rational::from(5);
    GoldenScalar {
        a: &x.a * &y.a + &five * &x.b * &y.b,
        b: &x.a * &y.b + &y.a * &x.b,
    }
}

macro_rules! forward_golden {
    ($Trait:ident, $method:ident, $imp:ident) => {
        impl $Trait<&GoldenScalar> for &GoldenScalar {
            type Output = GoldenScalar;
            fn $method(self, rhs: &GoldenScalar) -> GoldenScalar {
                $imp(self, rhs)
            }
        }
        impl $Trait<GoldenScalar> for GoldenScalar {
            type Output = GoldenScalar;
            fn $method(self, rhs: GoldenScalar) -> GoldenScalar {
                $imp(&self, &rhs)
            }
        }
        impl $Trait<&GoldenScalar> for GoldenScalar {
            type Output = GoldenScalar;
            fn $method(self, rhs: &GoldenScalar) -> GoldenScalar {
                $imp(&self, rhs)
            }
        }
        impl $Trait<GoldenScalar> for &GoldenScalar {
            type Output = GoldenScalar;
            fn $method(self, rhs: GoldenScalar) -> GoldenScalar {
                $imp(self, &rhs)
            }
        }
    };
}

forward_golden!(Add, add, add_g);
forward_golden!(Sub, sub, sub_g);
forward_golden!(Mul, mul, mul_g);

impl Neg for GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        GoldenScalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        GoldenScalar { a: -&self.a, b: -&self.b }
    }
}

impl AddAssign<&GoldenScalar> for GoldenScalar {
    fn add_assign(&mut self, rhs: &GoldenScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&GoldenScalar> for GoldenScalar {
    fn sub_assign(&mut self, rhs: &GoldenScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Sum for GoldenScalar {
    fn sum<I: Iterator<Item = GoldenScalar>>(iter: I) -> GoldenScalar {
        iter.fold(GoldenScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GoldenScalar> for GoldenScalar {
    fn sum<I: Iterator<Item = &'a GoldenScalar>>(iter: I) -> GoldenScalar {
        iter.fold(GoldenScalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Display for GoldenScalar {
    /// Text form `a+c*sqrt5`, e.g. `-1/4+1/4*sqrt5`, `2/5`, `-sqrt5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = |c: &Rational| -> String {
            if c.is_one() {
                "sqrt5".to_string()
            } else {
                format!("{c}*sqrt5")
            }
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b == -Rational::one() {
                return write!(f, "-sqrt5");
            }
            return write!(f, "{}", coeff(&self.b));
        }
        if self.b.signum() > 0 {
            write!(f, "{}+{}", self.a, coeff(&self.b))
        } else {
            write!(f, "{}-{}", self.a, coeff(&-&self.b))
        }
    }
}

impl fmt::Debug for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_term(term: &str, negative: bool) -> Option<GoldenScalar> {
    let t = term.trim();
    let sqrt_tokens = ["sqrt(5)", "sqrt5", "√5"];
    for tok in sqrt_tokens {
        if let Some(prefix) = t.strip_suffix(tok) {
            let prefix = prefix.trim().trim_end_matches('*').trim();
            let c = if prefix.is_empty() {
                Rational::one()
            } else {
                prefix.parse::<Rational>().ok()?
            };
            let c = if negative { -c } else { c };
            return Some(GoldenScalar::new(Rational::zero(), c));
        }
        if let Some(suffix) = t.strip_prefix(tok) {
            let suffix = suffix.trim().trim_start_matches('*').trim();
            if suffix.is_empty() {
                continue;
            }
            let c = suffix.parse::<Rational>().ok()?;
            let c = if negative { -c } else { c };
            return Some(GoldenScalar::new(Rational::zero(), c));
        }
    }
    let r = t.parse::<Rational>().ok()?;
    Some(GoldenScalar::rational(if negative { -r } else { r }))
}

impl FromStr for GoldenScalar {
    type Err = GoldenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GoldenError::Parse(s.to_string());
        let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        while t.starts_with('(') && t.ends_with(')') {
            t = t[1..t.len() - 1].to_string();
        }
        if t.is_empty() {
            return Err(err());
        }
        // Split into signed terms at '+'/'-' that are not leading and do not
        // follow '/' or '*'.
        let bytes = t.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        while i < bytes.len() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && i > start && !matches!(bytes[i - 1], b'/' | b'*' | b'(') {
                terms.push((negative, &t[start..i]));
                negative = c == b'-';
                start = i + 1;
            }
            i += 1;
        }
        terms.push((negative, &t[start..]));
        if terms.len() > 2 {
            return Err(err());
        }
        let mut acc = GoldenScalar::zero();
        let mut seen_a = false;
        let mut seen_b = false;
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(err());
            }
            let v = parse_term(term, neg).ok_or_else(err)?;
            if v.is_rational() {
                if seen_a {
                    return Err(err());
                }
                seen_a = true;
            } else {
                if seen_b {
                    return Err(err());
                }
                seen_b = true;
            }
            acc += &v;
        }
        Ok(acc)
    }
}

impl Serialize for GoldenScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct GoldenVisitor;

impl<'de> Visitor<'de> for GoldenVisitor {
    type Value = GoldenScalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a Q(sqrt5) string such as \"1/2+1/2*sqrt5\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<GoldenScalar, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<GoldenScalar, E> {
        Ok(GoldenScalar::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<GoldenScalar, E> {
        i64::try_from(v).map(GoldenScalar::from_int).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for GoldenScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(GoldenVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(s: &str) -> GoldenScalar {
        s.parse().unwrap()
    }

    #[test]
    fn golden_ratio_identities() {
        let t = GoldenScalar::tau();
        let tc = GoldenScalar::tau_conj();
        assert_eq!(&t * &tc, GoldenScalar::from_int(-1));
        assert_eq!(&t + &tc, GoldenScalar::one());
        assert_eq!(&t * &t, &t + &GoldenScalar::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(GoldenScalar::tau().conjugate(), GoldenScalar::tau_conj());
        let r = GoldenScalar::frac(3, 7, 0, 1);
        assert_eq!(r.conjugate(), r);
        assert_eq!(g("1/10*sqrt5").conjugate(), g("-1/10*sqrt5"));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(GoldenScalar::tau_conj().signum(), -1);
        assert_eq!(GoldenScalar::zero().signum(), 0);
        // 9/4 − √5: 81/16 > 5, so positive; float cross-check 2.25 − 2.236 > 0
        let x = GoldenScalar::frac(9, 4, -1, 1);
        assert_eq!(x.signum(), 1);
        assert!(x.to_f64() > 0.0);
        assert_eq!(GoldenScalar::frac(-9, 4, 1, 1).signum(), -1);
    }

    #[test]
    fn floats() {
        assert!((GoldenScalar::tau().to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
        let x = GoldenScalar::tau().scale(&Rational::new(-1, 5));
        assert!((x.to_f64() + 0.323_606_797_749_979).abs() < 1e-12);
        assert_eq!(GoldenScalar::zero().to_f64(), 0.0);
        // no cancellation for nearly-equal opposite terms
        let y = GoldenScalar::frac(2207, 987, -1, 1);
        let expect = 2207.0 / 987.0 - 5f64.sqrt();
        assert!(((y.to_f64() - expect) / expect).abs() < 1e-9);
    }

    #[test]
    fn text_round_trip() {
        for s in ["-1/4+1/4*sqrt5", "2/5", "-sqrt5", "sqrt5", "1/10*sqrt5", "3-2*sqrt5", "0"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("( -1/4 + 1/4*sqrt5 )"), GoldenScalar::frac(-1, 4, 1, 4));
        assert_eq!(g("sqrt5*3/2"), GoldenScalar::frac(0, 1, 3, 2));
        assert_eq!(g("-1/2-1/2*√5"), GoldenScalar::frac(-1, 2, -1, 2));
        assert_eq!(g("1/2+1/2*sqrt(5)"), GoldenScalar::tau());
        assert!("1+2".parse::<GoldenScalar>().is_err());
        assert!("sqrt7".parse::<GoldenScalar>().is_err());
        assert!("".parse::<GoldenScalar>().is_err());
    }

    #[test]
    fn floor_exact() {
        assert_eq!(GoldenScalar::tau().floor(), BigInt::from(1));
        assert_eq!(GoldenScalar::tau_conj().floor(), BigInt::from(-1));
        assert_eq!(GoldenScalar::tau_conj().ceil(), BigInt::from(0));
        assert_eq!(GoldenScalar::from_int(-3).floor(), BigInt::from(-3));
    }

    #[test]
    fn division() {
        let t = GoldenScalar::tau();
        assert_eq!(t.recip().unwrap(), &t - &GoldenScalar::one());
        assert_eq!(GoldenScalar::one().checked_div(&GoldenScalar::zero()), Err(GoldenError::DivisionByZero));
    }

    fn scalar() -> impl Strategy<Value = GoldenScalar> {
        (-50i64..50, 1i64..12, -50i64..50, 1i64..12).prop_map(|(p, q, r, t)| GoldenScalar::frac(p, q, r, t))
    }

    proptest! {
        #[test]
        fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, GoldenScalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), GoldenScalar::one());
            }
        }

        #[test]
        fn conjugation_is_a_ring_automorphism(a in scalar(), b in scalar()) {
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!(GoldenScalar::from(a.norm()), &a * &a.conjugate());
        }

        #[test]
        fn sign_and_order_match_floats(a in scalar(), b in scalar()) {
            let (x, y) = (a.to_f64(), b.to_f64());
            if (x - y).abs() > 1e-9 {
                prop_assert_eq!(a < b, x < y);
            }
            if x.abs() > 1e-9 {
                prop_assert_eq!(a.signum(), if x > 0.0 { 1 } else { -1 });
            }
            let f = a.floor();
            prop_assert!(GoldenScalar::from(Rational::from(f.clone())) <= a);
            prop_assert!(a < GoldenScalar::from(Rational::from(f + 1)));
        }

        #[test]
        fn display_parses_back(a in scalar()) {
            prop_assert_eq!(a.to_string().parse::<GoldenScalar>().unwrap(), a);
        }
    }
}
