use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Scalar};

/// Dense univariate polynomial in the curve parameter `t`, lowest degree first.
///
/// The coefficient vector is always trimmed, so the zero polynomial is the
/// empty vector and a nonzero polynomial has a nonzero last coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - a`.
    pub fn linear_root(a: Scalar) -> Self {
        Self::new(vec![-a, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer((k as i64).into()))
                .collect(),
        )
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let dlc = divisor.leading_coeff().ok_or(AlgebraError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        let inv = dlc.recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Squarefree part `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        let g = gcd(self, &self.derivative()).expect("f is nonzero");
        self.div_rem(&g).expect("gcd is nonzero").0.monic()
    }

    /// Composition `self(inner(t))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    let (mut x, mut y) = (a.monic(), b.monic());
    while !y.is_zero() {
        let r = x.rem(&y)?.monic();
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// Monic gcd of every nonzero polynomial in the iterator; `None` if all are zero.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a UniPoly>>(polys: I) -> Option<UniPoly> {
    let mut acc: Option<UniPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(),
            Some(g) if g.is_one() => return Some(g),
            Some(g) => gcd(&g, p).expect("g is nonzero"),
        });
    }
    acc
}

impl UniPoly {
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        gcd(self, other)
    }
}

/// Splits a polynomial column into its primitive part and content.
///
/// The content is the monic gcd of the entries; the returned column times the
/// content reproduces the input.
pub fn column_primitive_part(column: &[UniPoly]) -> Result<(Vec<UniPoly>, UniPoly), AlgebraError> {
    let content = gcd_all(column).ok_or(AlgebraError::ZeroColumn)?;
    let primitive = column
        .iter()
        .map(|p| {
            let (q, r) = p.div_rem(&content).expect("content is nonzero");
            debug_assert!(r.is_zero());
            q
        })
        .collect();
    Ok((primitive, content))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl super::ExactRing for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn one_like(&self) -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        match self.div_rem(rhs) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }
}

/// Prints in descending powers of `t`, e.g. `t^2 - 3/2*t + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // (t^2 - 1, t - 1) -> t - 1
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[0, 1]), &p(&[1])).unwrap(), p(&[1]));
        assert_eq!(gcd(&UniPoly::zero(), &UniPoly::zero()), Err(AlgebraError::BothZero));
        assert_eq!(gcd(&UniPoly::zero(), &p(&[0, 2])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn planted_common_factor_is_recovered() {
        let common = p(&[3, 0, 1]);
        let a = &common * &p(&[1, 2, -1]);
        let b = &common * &p(&[-5, 0, 0, 7]);
        assert_eq!(gcd(&a, &b).unwrap(), common);
    }

    #[test]
    fn primitive_part_examples() {
        let (col, content) = column_primitive_part(&[p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(col, vec![p(&[1]), p(&[0, 1])]);
        assert_eq!(content, p(&[0, 1]));

        let (col, content) = column_primitive_part(&[p(&[1]), p(&[0, 1])]).unwrap();
        assert_eq!(col, vec![p(&[1]), p(&[0, 1])]);
        assert!(content.is_one());

        // (t^2-1, t-1) * (t+2): content (t-1)(t+2)
        let f = p(&[2, 1]);
        let (col, content) = column_primitive_part(&[&p(&[-1, 0, 1]) * &f, &p(&[-1, 1]) * &f]).unwrap();
        assert_eq!(content, &p(&[-1, 1]) * &f);
        assert_eq!(col, vec![p(&[1, 1]), p(&[1])]);

        assert_eq!(
            column_primitive_part(&[UniPoly::zero(), UniPoly::zero()]),
            Err(AlgebraError::ZeroColumn)
        );
    }

    #[test]
    fn div_rem_and_display() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1, -3, 0, 2]).to_string(), "2*t^3 - 3*t + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(UniPoly::constant(crate::algebra::frac(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn squarefree_and_eval() {
        let f = &p(&[0, 1]) * &p(&[-1, 1]).pow(2);
        assert_eq!(f.squarefree_part(), &p(&[0, 1]) * &p(&[-1, 1]));
        assert_eq!(f.eval(&int(2)), int(2));
        assert_eq!(p(&[1, 1]).compose(&p(&[0, 0, 1])), p(&[1, 0, 1]));
    }
}
