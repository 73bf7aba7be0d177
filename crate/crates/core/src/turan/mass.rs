use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Exact share of `Q_n`'s vertices lying in layers `i` with
/// `|i - n/2| > n^(2/3)`.
///
/// The comparison is done in integers: `|2i - n|^3 > 8 n^2`.
pub fn middle_mass(n: usize) -> Result<BigRational> {
    if n == 0 {
        return domain("middle_mass needs n >= 1");
    }
    let threshold = 8 * (n as u128) * (n as u128);
    let mut binom = BigUint::one();
    let mut outside = BigUint::zero();
    for i in 0..=n {
        let gap = (2 * i as i128 - n as i128).unsigned_abs();
        if gap * gap * gap > threshold {
            outside += &binom;
        }
        binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    let total = BigUint::one() << n;
    Ok(BigRational::new(outside.into(), total.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_n_has_no_outer_mass() {
        for n in 1..=8 {
            assert!(middle_mass(n).unwrap().is_zero(), "n = {n}");
        }
        assert!(!middle_mass(9).unwrap().is_zero());
    }

    #[test]
    fn n10_keeps_only_the_extremes() {
        assert_eq!(middle_mass(10).unwrap(), BigRational::new(2.into(), 1024.into()));
    }

    #[test]
    fn values_are_probabilities() {
        for n in [1, 5, 16, 33, 100] {
            let v = middle_mass(n).unwrap().to_f64().unwrap();
            assert!((0.0..=1.0).contains(&v));
        }
        assert!(middle_mass(0).is_err());
    }
}
