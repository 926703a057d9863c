use std::ops::{Add, Deref, Index, Neg, Sub};

use num_traits::Num;

use crate::scalar::{gcd_all, lcm_all, Integer, Rational};

/// A coordinate vector in an explicitly chosen basis.
///
/// Ordering is lexicographic on coordinates, which is the tie-break order
/// used everywhere in the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T>(Vec<T>);

impl<T> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Vector(coords)
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

impl<T> Deref for Vector<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Vector(v)
    }
}

impl<T> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Clone + Num> Vector<T> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![T::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![T::zero(); n];
        v[i] = T::one();
        Vector(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        self.0.iter().map(|x| x.clone() * k.clone()).collect()
    }

    /// `a * self + b * other`
    pub fn combine(&self, a: &T, other: &Self, b: &T) -> Self {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone())
            .collect()
    }

    pub fn concat(&self, other: &Self) -> Self {
        self.0.iter().chain(other.0.iter()).cloned().collect()
    }
}

impl<T: Clone + Num> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        self.0
            .iter()
            .zip(&rhs.0)
            .map(|(a, b)| a.clone() + b.clone())
            .collect()
    }
}

impl<T: Clone + Num> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        self.0
            .iter()
            .zip(&rhs.0)
            .map(|(a, b)| a.clone() - b.clone())
            .collect()
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        self.0.iter().map(|a| -a.clone()).collect()
    }
}

impl<T: Integer> Vector<T> {
    pub fn to_rational(&self) -> Vector<Rational<T>> {
        self.0
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect()
    }

    /// Divides by the gcd of the entries; the zero vector is returned as is.
    pub fn primitive(&self) -> Self {
        let g = gcd_all(&self.0);
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.0.iter().map(|x| x.clone() / g.clone()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}

impl<T: Integer> Vector<Rational<T>> {
    /// The primitive integer vector on the ray through `self`.
    pub fn primitive_integer(&self) -> Vector<T> {
        let den = lcm_all(self.0.iter().map(|x| x.denom()));
        let scaled: Vector<T> = self
            .0
            .iter()
            .map(|x| x.numer().clone() * (den.clone() / x.denom().clone()))
            .collect();
        scaled.primitive()
    }

    /// Returns the integer vector if every entry is integral.
    pub fn to_integer(&self) -> Option<Vector<T>> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Vector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn iv(v: &[i64]) -> Vector<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(iv(&[2, 4]).primitive(), iv(&[1, 2]));
        assert_eq!(iv(&[-3, 6]).primitive(), iv(&[-1, 2]));
        assert_eq!(iv(&[0, 0]).primitive(), iv(&[0, 0]));
        let r: Vector<Rational<BigInt>> = vec![
            Rational::new(BigInt::from(-2), BigInt::from(3)),
            Rational::new(BigInt::from(-1), BigInt::from(3)),
        ]
        .into();
        assert_eq!(r.primitive_integer(), iv(&[-2, -1]));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v = vec![iv(&[1, 0]), iv(&[0, 5]), iv(&[0, -1])];
        v.sort();
        assert_eq!(v, vec![iv(&[0, -1]), iv(&[0, 5]), iv(&[1, 0])]);
    }
}
