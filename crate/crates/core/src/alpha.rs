//! Exact arithmetic in `Q[alpha]` and `Q(alpha)`.
//!
//! Coefficients are arbitrary-precision rationals and all operations are
//! exact. [`AlphaRat`] keeps a unique canonical form (reduced fraction,
//! monic denominator) so equal values always have identical
//! representations and can be compared or used as map keys bit-exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::BoxCoord;

/// Exact rational number with arbitrary-precision numerator/denominator.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in the indeterminate `alpha` with rational coefficients.
///
/// Stored as ascending powers with no trailing zero coefficient; the zero
/// polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaPoly {
    coeffs: Vec<Rational>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(Rational::one())
    }

    /// The polynomial `alpha`.
    pub fn alpha() -> Self {
        AlphaPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        AlphaPoly::from_coeffs(vec![c])
    }

    /// `c * alpha^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        AlphaPoly::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `alpha^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> AlphaPoly {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> AlphaPoly {
        let mut base = self.clone();
        let mut acc = AlphaPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, a: &Rational) -> Rational {
        let mut v = Rational::zero();
        for c in self.coeffs.iter().rev() {
            v = v * a + c;
        }
        v
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every coefficient is a non-negative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Quotient and remainder of division by `d`; `d` must be nonzero.
    pub fn div_rem(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len();
        if self.coeffs.len() < dd {
            return (AlphaPoly::zero(), self.clone());
        }
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd + 1;
        let mut quo = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i + j] -= t;
            }
            quo[i] = c;
        }
        (AlphaPoly::from_coeffs(quo), AlphaPoly::from_coeffs(rem))
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &AlphaPoly) -> Option<AlphaPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Rescales so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> AlphaPoly {
        match self.leading() {
            None => AlphaPoly::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// Monic greatest common divisor in `Q[alpha]`.
    ///
    /// Computed as a primitive remainder sequence over the integers so
    /// intermediate coefficients stay small.
    pub fn gcd(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut u = int_primitive(a);
        let mut v = int_primitive(b);
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = int_pseudo_rem(&u, &v);
            u = v;
            v = int_primitive_vec(r);
        }
        AlphaPoly::from_coeffs(u.into_iter().map(Rational::from_integer).collect()).monic()
    }
}

/// Integer-coefficient, primitive, positive-leading image of a rational polynomial.
fn int_primitive(p: &AlphaPoly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &p.coeffs {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
    int_primitive_vec(ints)
}

fn int_primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of integer polynomials: `lc(v)^k * u mod v`.
fn int_pseudo_rem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = u.to_vec();
    let dv = v.len();
    let lead = v.last().unwrap();
    while r.len() >= dv {
        let c = r.last().unwrap().clone();
        let shift = r.len() - dv;
        for x in r.iter_mut() {
            *x *= lead;
        }
        for (j, vc) in v.iter().enumerate() {
            r[shift + j] -= &c * vc;
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_value_ops {
    ($t:ty, $($op:ident :: $f:ident),*) => {$(
        impl $op for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t { (&self).$f(&rhs) }
        }
        impl $op<&$t> for $t {
            type Output = $t;
            fn $f(self, rhs: &$t) -> $t { (&self).$f(rhs) }
        }
        impl $op<$t> for &$t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t { self.$f(&rhs) }
        }
    )*};
}

forward_value_ops!(AlphaPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("alpha"))
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AlphaPoly {
    /// Renders with the given variable name, ascending powers.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one() && i > 0;
            if !unit {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if !unit {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

/// Ratio of two `alpha`-polynomials in canonical form.
///
/// Invariants: the denominator is nonzero and monic, and numerator and
/// denominator are coprime in `Q[alpha]`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaRat {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRat {
    /// Builds `num/den` in canonical form; errors when `den` is zero.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: AlphaPoly, den: AlphaPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return AlphaRat {
                num,
                den: AlphaPoly::one(),
            };
        }
        let g = AlphaPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).unwrap();
        let mut den = den.div_exact(&g).unwrap();
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        AlphaRat { num, den }
    }

    pub fn zero() -> Self {
        AlphaRat {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        AlphaRat {
            num: AlphaPoly::one(),
            den: AlphaPoly::one(),
        }
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        AlphaRat {
            num: p,
            den: AlphaPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        AlphaRat::from_poly(AlphaPoly::constant(c))
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial when the denominator is one.
    pub fn as_poly(&self) -> Option<&AlphaPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<AlphaRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(AlphaRat::reduced(self.den.clone(), self.num.clone()))
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &AlphaRat) -> Result<AlphaRat> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, n: i64) -> Result<AlphaRat> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = AlphaRat::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at `alpha = a`; errors when `a` is a pole.
    pub fn evaluate_at(&self, a: &Rational) -> Result<Rational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(Error::EvaluationAtPole);
        }
        Ok(self.num.eval(a) / d)
    }
}

impl Add for &AlphaRat {
    type Output = AlphaRat;
    fn add(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &AlphaRat {
    type Output = AlphaRat;
    fn sub(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &AlphaRat {
    type Output = AlphaRat;
    fn mul(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &AlphaRat {
    type Output = AlphaRat;
    fn div(self, rhs: &AlphaRat) -> AlphaRat {
        assert!(!rhs.is_zero(), "division of AlphaRat by zero");
        AlphaRat::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

forward_value_ops!(AlphaRat, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for &AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        AlphaRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        -&self
    }
}

impl fmt::Display for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("alpha"))
    }
}

impl fmt::Debug for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AlphaRat {
    pub fn to_string_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.to_string_with(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with(var),
                self.den.to_string_with(var)
            )
        }
    }
}

/// The bracket `[(x,y)] = alpha*x - y` of a lattice point.
pub fn bracket(b: BoxCoord) -> AlphaPoly {
    AlphaPoly::from_coeffs(vec![rat(-b.y), rat(b.x)])
}

/// A factorization `p = c * prod [x_i, y_i]` over primitive lattice
/// brackets with `1 <= x_i <= bound`, `|y_i| <= bound`.
///
/// Returns `None` when `p` is zero or has an irreducible factor over the
/// searched lattice. Expanding the result reproduces `p` exactly.
pub fn factor_linear(
    p: &AlphaPoly,
    search_bound: i64,
) -> Option<(Rational, BTreeMap<BoxCoord, usize>)> {
    if p.is_zero() {
        return None;
    }
    let mut q = p.clone();
    let mut factors: BTreeMap<BoxCoord, usize> = BTreeMap::new();
    for x in 1..=search_bound {
        for y in -search_bound..=search_bound {
            if x.gcd(&y.abs()) != 1 {
                continue;
            }
            let b = BoxCoord::new(x, y);
            let lin = bracket(b);
            loop {
                if q.degree() == Some(0) {
                    break;
                }
                match q.div_exact(&lin) {
                    Some(next) => {
                        q = next;
                        *factors.entry(b).or_insert(0) += 1;
                    }
                    None => break,
                }
            }
        }
    }
    match q.degree() {
        Some(0) => Some((q.coeff(0), factors)),
        _ => None,
    }
}

/// Expands a bracket factorization back into a polynomial.
pub fn expand_factors(constant: &Rational, factors: &BTreeMap<BoxCoord, usize>) -> AlphaPoly {
    let mut p = AlphaPoly::constant(constant.clone());
    for (b, mult) in factors {
        p = &p * &bracket(*b).pow(*mult as u32);
    }
    p
}
