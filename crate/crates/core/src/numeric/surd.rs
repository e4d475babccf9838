use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{parse_rational, Rational};

/// A real number `a + b·√d` with rational `a`, `b` and squarefree `d > 1`.
///
/// Rational values are stored with `b = 0` and `d = 1`. Arithmetic between
/// two values with different nontrivial radicands panics; callers establish a
/// common radicand up front with [`common_radicand`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Splits `n > 0` as `s² · f` with `f` squarefree.
pub fn square_free_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square-free decomposition of a non-positive integer");
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut exp = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            exp += 1;
        }
        square *= p.pow(exp / 2);
        if exp % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

impl QuadraticSurd {
    /// `a + b·√d` for any positive integer `d`; square factors of `d` are
    /// pulled into `b`.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        let (s, f) = square_free_decomposition(&d);
        let b = b * Rational::from_integer(s);
        if f.is_one() || b.is_zero() {
            QuadraticSurd { a: a + b, b: Rational::zero(), d: BigInt::one() }
        } else {
            QuadraticSurd { a, b, d: f }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticSurd { a, b: Rational::zero(), d: BigInt::one() }
    }

    pub fn from_int(a: i64) -> Self {
        Self::rational(Rational::from_integer(a.into()))
    }

    /// `√n` for a positive integer `n`.
    pub fn sqrt(n: &BigInt) -> Self {
        Self::new(Rational::zero(), Rational::one(), n.clone())
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    /// The radicand; `1` for rational values.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign, decided by comparing `a²` with `b²·d` when the parts
    /// have opposite signs.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.norm_form(&self.a * k, &self.b * k)
    }

    /// Floating-point approximation, for drawing only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }

    fn norm_form(&self, a: Rational, b: Rational) -> Self {
        if b.is_zero() {
            QuadraticSurd { a, b, d: BigInt::one() }
        } else {
            QuadraticSurd { a, b, d: self.d.clone() }
        }
    }

    fn joint_radicand(&self, other: &Self) -> BigInt {
        match (self.d.is_one(), other.d.is_one()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "arithmetic between mixed radicals");
                self.d.clone()
            }
        }
    }
}

fn sign_of(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact sign of `a + b·√d`.
pub fn surd_sign(x: &QuadraticSurd) -> i32 {
    x.signum()
}

/// The single nontrivial radicand shared by all values, `1` if all are
/// rational, or `Err((d1, d2))` naming two conflicting radicands.
pub fn common_radicand<'a, I>(values: I) -> Result<BigInt, (BigInt, BigInt)>
where
    I: IntoIterator<Item = &'a QuadraticSurd>,
{
    let mut d = BigInt::one();
    for v in values {
        if v.d.is_one() {
            continue;
        }
        if d.is_one() {
            d = v.d.clone();
        } else if d != v.d {
            return Err((d, v.d.clone()));
        }
    }
    Ok(d)
}

impl Add for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.joint_radicand(rhs);
        let b = &self.b + &rhs.b;
        if b.is_zero() {
            QuadraticSurd::rational(&self.a + &rhs.a)
        } else {
            QuadraticSurd { a: &self.a + &rhs.a, b, d }
        }
    }
}

impl Sub for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.joint_radicand(rhs);
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        if b.is_zero() {
            QuadraticSurd::rational(a)
        } else {
            QuadraticSurd { a, b, d }
        }
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, rhs: QuadraticSurd) -> QuadraticSurd {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        -&self
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl From<&BigInt> for QuadraticSurd {
    fn from(a: &BigInt) -> Self {
        Self::rational(Rational::from_integer(a.clone()))
    }
}

impl fmt::Display for QuadraticSurd {
    /// Canonical text: `a`, `b*sqrt(d)` or `a+b*sqrt(d)`, rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.b, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed surd literal `{0}`")]
pub struct ParseSurdError(pub String);

impl FromStr for QuadraticSurd {
    type Err = ParseSurdError;

    /// Accepts the canonical form produced by `Display` and the looser
    /// `1+sqrt(2)`, `-sqrt(3)`, `2*sqrt(5)-1/2` spellings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSurdError(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err());
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        let mut depth = 0;
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if i > start && depth == 0 && bytes[i - 1] != b'/' => {
                    terms.push(&text[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&text[start..]);

        let mut acc = QuadraticSurd::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let value = if let Some(idx) = body.find("sqrt(") {
                let inner = body[idx + 5..].strip_suffix(')').ok_or_else(err)?;
                let d: BigInt = inner.parse().map_err(|_| err())?;
                if !d.is_positive() {
                    return Err(err());
                }
                let coeff = match &body[..idx] {
                    "" => Rational::one(),
                    c => parse_rational(c.strip_suffix('*').ok_or_else(err)?).ok_or_else(err)?,
                };
                QuadraticSurd::new(Rational::zero(), coeff, d)
            } else {
                QuadraticSurd::rational(parse_rational(body).ok_or_else(err)?)
            };
            let value = if neg { -value } else { value };
            if !acc.d.is_one() && !value.d.is_one() && acc.d != value.d {
                return Err(err());
            }
            acc = &acc + &value;
        }
        Ok(acc)
    }
}
