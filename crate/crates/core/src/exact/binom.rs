use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(a, b)`, zero whenever `b < 0`, `b > a` or `a < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= (a - i) as u64;
        acc /= (i + 1) as u64;
    }
    BigInt::from(acc)
}

pub fn binom_q(a: i64, b: i64) -> BigRational {
    BigRational::from_integer(binom(a, b))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `prod_{i in range} num(i) / den(i)`; every denominator must be nonzero.
pub fn product<I, F>(range: I, mut term: F) -> BigRational
where
    I: IntoIterator<Item = i64>,
    F: FnMut(i64) -> (i64, i64),
{
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in range {
        let (p, q) = term(i);
        num *= p;
        den *= q;
    }
    BigRational::new(num, den)
}
