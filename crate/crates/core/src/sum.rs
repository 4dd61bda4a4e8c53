//! Compensated summation.

use crate::real::Real;

/// Neumaier's variant of Kahan summation.
///
/// Also tracks `Σ|x_i|`, which bounds the rounding error of the terms and is
/// the natural scale for cancellation checks in alternating series.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated<T> {
    sum: T,
    comp: T,
    abs_sum: T,
}

impl<T: Real> Compensated<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            comp: T::zero(),
            abs_sum: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
        self.abs_sum = self.abs_sum + x.abs();
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.comp
    }

    /// `Σ|x_i|` over everything added so far.
    #[inline]
    pub fn abs_sum(&self) -> T {
        self.abs_sum
    }
}

impl<T: Real> FromIterator<T> for Compensated<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of a sequence, in iteration order.
pub fn compensated_sum<T: Real, I: IntoIterator<Item = T>>(iter: I) -> T {
    iter.into_iter().collect::<Compensated<T>>().value()
}
