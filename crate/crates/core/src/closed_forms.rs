//! Closed-form counts: binomials, Catalan, Fuss–Catalan, the coprime
//! rectangular formula, the prime-height dispatcher, and two evaluators
//! for ballot-type expressions that are not wired into any dispatch.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::domain;
use crate::scalar::{exact_div, lift, mul};
use crate::{BigInt, Count, Ratio, Result, Scalar};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Multiplicative formula; each factor is reduced by its gcd with the
/// divisor before multiplying so intermediates stay close to the result.
pub fn binomial_as<T: Scalar>(n: u64, k: i64) -> Result<T> {
    if k < 0 || k as u64 > n {
        return Ok(T::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 1..=k {
        // acc = C(n-k+i-1, i-1); the next value acc * (n-k+i) / i is integral.
        let top = n - k + i;
        let g = top.gcd(&i);
        let den = lift::<T>(i / g, "binomial")?;
        let reduced = exact_div(&acc, &den, "binomial");
        acc = mul(&reduced, &lift(top / g, "binomial")?, "binomial")?;
    }
    Ok(acc)
}

pub fn binomial(n: u64, k: i64) -> Count {
    binomial_as(n, k).expect("arbitrary precision")
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan_as<T: Scalar>(n: u64) -> Result<T> {
    let c = binomial_as::<T>(2 * n, n as i64)?;
    Ok(exact_div(&c, &lift(n + 1, "catalan")?, "catalan"))
}

pub fn catalan(n: u64) -> Count {
    catalan_as(n).expect("arbitrary precision")
}

/// `C(ak + a, a) / (ak + 1)`, the number of Dyck paths in an `a x ak` rectangle.
pub fn fuss_catalan_as<T: Scalar>(a: u64, k: u64) -> Result<T> {
    if a == 0 || k == 0 {
        return domain(format!("fuss_catalan needs a, k >= 1, got ({a}, {k})"));
    }
    let c = binomial_as::<T>(a * k + a, a as i64)?;
    Ok(exact_div(
        &c,
        &lift(a * k + 1, "fuss_catalan")?,
        "fuss_catalan",
    ))
}

pub fn fuss_catalan(a: u64, k: u64) -> Result<Count> {
    fuss_catalan_as(a, k)
}

/// `C(a + b, a) / (a + b)` for coprime `a, b`.
pub fn coprime_catalan_as<T: Scalar>(a: u64, b: u64) -> Result<T> {
    if a == 0 || b == 0 {
        return domain(format!("coprime_catalan needs a, b >= 1, got ({a}, {b})"));
    }
    if a.gcd(&b) != 1 {
        return domain(format!(
            "coprime_catalan needs gcd(a, b) = 1, got ({a}, {b})"
        ));
    }
    let c = binomial_as::<T>(a + b, a as i64)?;
    Ok(exact_div(
        &c,
        &lift(a + b, "coprime_catalan")?,
        "coprime_catalan",
    ))
}

pub fn coprime_catalan(a: u64, b: u64) -> Result<Count> {
    coprime_catalan_as(a, b)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

/// `|D(p,b)|` for prime `p`: either `gcd(p,b) = 1` or `p | b`.
pub fn prime_rect(p: u64, b: u64) -> Result<Count> {
    if !is_prime(p) {
        return domain(format!("prime_rect needs a prime height, got {p}"));
    }
    if b == 0 {
        return domain("prime_rect needs b >= 1");
    }
    if !b.is_multiple_of(p) {
        return coprime_catalan(p, b);
    }
    let c = binomial(p + b + 1, p as i64);
    Ok(exact_div(&c, &Count::from(p + b + 1), "prime_rect"))
}

/// Verbatim evaluation of `((b - k a + 1) / b) * C(a + b, a)`.
///
/// Requires `b > a k`. No path model is attached to the result; see
/// [`ballot_brute_force`] for a direct count to compare against.
pub fn ballot_value(a: u64, b: u64, k: u64) -> Result<Ratio> {
    if a == 0 || b == 0 {
        return domain(format!("ballot_value needs a, b >= 1, got ({a}, {b})"));
    }
    if b <= a * k {
        return domain(format!(
            "ballot_value needs b > a*k, got a={a}, b={b}, k={k}"
        ));
    }
    let factor = Ratio::new(BigInt::from(b - k * a + 1), BigInt::from(b));
    Ok(factor * Ratio::from_integer(BigInt::from(binomial(a + b, a as i64))))
}

/// Number of lattice paths from `(0,0)` to `(a,b)` with unit east/north
/// steps whose every lattice point satisfies `y >= k x`.
pub fn ballot_brute_force(a: u64, b: u64, k: u64) -> Count {
    // ways[y] holds the number of admissible paths ending at (x, y).
    let mut ways = vec![Count::zero(); b as usize + 1];
    for x in 0..=a {
        let floor = (k * x).min(b + 1) as usize;
        for y in 0..=b as usize {
            if x == 0 && y == 0 {
                ways[0] = Count::one();
                continue;
            }
            if y < floor {
                ways[y] = Count::zero();
                continue;
            }
            let from_south = if y > 0 {
                ways[y - 1].clone()
            } else {
                Count::zero()
            };
            // ways[y] still holds the column x-1 value (the west neighbour).
            let from_west = if x > 0 {
                ways[y].clone()
            } else {
                Count::zero()
            };
            ways[y] = from_south + from_west;
        }
    }
    ways[b as usize].clone()
}

/// Verbatim evaluation of `C(2(k+1)n, 2n) - (k-1) * sum_{i<2n} C(2(k+1)n, i)`.
///
/// The expression is evaluated in signed arithmetic; a negative value is
/// reported as a domain error.
pub fn avoidance_value(n: u64, k: u64) -> Result<Count> {
    if n == 0 {
        return domain("avoidance_value needs n >= 1");
    }
    let top = 2 * (k + 1) * n;
    let lead = BigInt::from(binomial(top, (2 * n) as i64));
    let tail: BigInt = (0..2 * n)
        .map(|i| BigInt::from(binomial(top, i as i64)))
        .sum();
    let value = lead - (BigInt::from(k) - BigInt::one()) * tail;
    if value.is_negative() {
        return domain(format!("avoidance_value({n}, {k}) evaluates to {value}"));
    }
    Ok(value.to_biguint().expect("checked nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Pascal's triangle, the independent route for binomials.
    fn pascal(rows: usize) -> Vec<Vec<Count>> {
        let mut t: Vec<Vec<Count>> = vec![vec![c(1)]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![c(1); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0), c(1));
        assert_eq!(binomial(8, 3), c(56));
        assert_eq!(binomial(11, 4), c(330));
        assert_eq!(binomial(5, -1), c(0));
        assert_eq!(binomial(5, 6), c(0));
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(60);
        for n in 0..=60u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k as i64),
                    t[n as usize][k as usize],
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn binomial_fixed_width() {
        assert_eq!(binomial_as::<u64>(60, 30).unwrap(), 118264581564861424);
        assert!(binomial_as::<u32>(60, 30).is_err());
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), c(1));
        assert_eq!(catalan(3), c(5));
        assert_eq!(catalan(6), c(132));
        assert_eq!(
            catalan_as::<u8>(10),
            Err(crate::Error::Overflow("binomial"))
        );
    }

    #[test]
    fn fuss_examples() {
        assert_eq!(fuss_catalan(2, 1).unwrap(), c(2));
        assert_eq!(fuss_catalan(3, 2).unwrap(), c(12));
        assert_eq!(fuss_catalan(1, 5).unwrap(), c(1));
        assert!(fuss_catalan(0, 5).is_err());
    }

    #[test]
    fn coprime_examples() {
        assert_eq!(coprime_catalan(3, 5).unwrap(), c(7));
        assert_eq!(coprime_catalan(5, 7).unwrap(), c(66));
        assert_eq!(coprime_catalan(1, 9).unwrap(), c(1));
        assert!(matches!(
            coprime_catalan(4, 6),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn prime_examples() {
        assert_eq!(prime_rect(2, 2).unwrap(), c(2));
        assert_eq!(prime_rect(3, 5).unwrap(), c(7));
        assert_eq!(prime_rect(3, 6).unwrap(), c(12));
        assert!(matches!(prime_rect(4, 6), Err(crate::Error::Domain(_))));
        assert!(prime_rect(1, 6).is_err());
    }

    #[test]
    fn ballot_examples() {
        let r = |n: i64, d: i64| Ratio::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(ballot_value(1, 2, 1).unwrap(), r(3, 1));
        assert_eq!(ballot_value(2, 5, 2).unwrap(), r(42, 5));
        assert_eq!(ballot_value(1, 2, 0).unwrap(), r(9, 2));
        assert!(ballot_value(2, 4, 2).is_err());
    }

    #[test]
    fn ballot_brute_force_small() {
        // NNE and NEN reach (1,2) staying on or above y = x; ENN does not.
        assert_eq!(ballot_brute_force(1, 2, 1), c(2));
        // k = 0 leaves every path admissible.
        assert_eq!(ballot_brute_force(3, 4, 0), binomial(7, 3));
        // y >= x to (n, n) is the Catalan number.
        assert_eq!(ballot_brute_force(5, 5, 1), catalan(5));
    }

    #[test]
    fn avoidance_examples() {
        assert_eq!(avoidance_value(1, 1).unwrap(), c(6));
        assert_eq!(avoidance_value(1, 2).unwrap(), c(8));
        assert_eq!(avoidance_value(2, 1).unwrap(), c(70));
        assert!(avoidance_value(0, 1).is_err());
    }

    #[test]
    fn avoidance_nonnegative_on_small_grid() {
        for n in 1..=6 {
            for k in 0..=6 {
                assert!(avoidance_value(n, k).is_ok(), "n={n}, k={k}");
            }
        }
    }
}
