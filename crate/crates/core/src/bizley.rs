//! Bizley's formula: `|D(m,n)|` for arbitrary `d = gcd(m,n)` as a sum over
//! integer partitions of `d`.
//!
//! With `(a,b) = (m/d, n/d)` coprime and
//! `phi_j = C(j(a+b), ja) / (j(a+b))`, the count is the coefficient of
//! `t^d` in `exp(sum_j phi_j t^j)`:
//!
//! ```text
//! |D(m,n)| = sum over lambda |- d of  prod_j phi_j^{m_j} / m_j!
//! ```
//!
//! where `m_j` is the multiplicity of `j` in `lambda`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::closed_forms::binomial;
use crate::error::domain;
use crate::{BigInt, Count, Ratio, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(crate::Error::Input(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `d` in reverse-lexicographic order, `(d)` first.
pub fn partitions(d: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    push_partitions(d, d, &mut cur, &mut out);
    out
}

fn push_partitions(rest: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        if !cur.is_empty() {
            out.push(Partition { parts: cur.clone() });
        }
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        push_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

fn factorial(n: u64) -> Count {
    (1..=n).map(Count::from).product()
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> Count {
    lambda
        .multiplicities()
        .into_iter()
        .map(|(i, m)| Count::from(i).pow(m as u32) * factorial(m))
        .product()
}

fn check_coprime(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return domain(format!(
            "Bizley terms need coprime positive (a, b), got ({a}, {b})"
        ));
    }
    Ok(())
}

/// `phi_j = C(j(a+b), ja) / (j(a+b))` for coprime `(a, b)`.
pub fn phi(a: u64, b: u64, j: u64) -> Result<Ratio> {
    check_coprime(a, b)?;
    if j == 0 {
        return domain("phi needs j >= 1");
    }
    let top = j * (a + b);
    Ok(Ratio::new(
        BigInt::from(binomial(top, (j * a) as i64)),
        BigInt::from(top),
    ))
}

/// The power-sum weight `B_k = k * phi_k = C(k(a+b), ka) / (a+b)`.
pub fn power_sum_term(a: u64, b: u64, k: u64) -> Result<Ratio> {
    Ok(phi(a, b, k)? * Ratio::from_integer(BigInt::from(k)))
}

fn split(m: u64, n: u64) -> Result<(u64, u64, u64)> {
    if m == 0 || n == 0 {
        return domain(format!("Bizley count needs m, n >= 1, got ({m}, {n})"));
    }
    let d = m.gcd(&n);
    Ok((d, m / d, n / d))
}

fn into_count(total: Ratio, m: u64, n: u64) -> Count {
    assert!(
        total.is_integer(),
        "Bizley sum for {m}x{n} is not integral: {total}"
    );
    total
        .to_integer()
        .to_biguint()
        .unwrap_or_else(|| panic!("Bizley sum for {m}x{n} is negative: {total}"))
}

/// `|D(m,n)|` via the exponential (multiplicity) weighting.
pub fn bizley_count(m: u64, n: u64) -> Result<Count> {
    let (d, a, b) = split(m, n)?;
    let phis = (1..=d).map(|j| phi(a, b, j)).collect::<Result<Vec<_>>>()?;
    let mut total = Ratio::zero();
    for lambda in partitions(d) {
        let mut term = Ratio::one();
        for (j, mult) in lambda.multiplicities() {
            let p = &phis[j as usize - 1];
            term *= num_traits::pow(p.clone(), mult as usize);
            term /= Ratio::from_integer(BigInt::from(factorial(mult)));
        }
        total += term;
    }
    Ok(into_count(total, m, n))
}

/// `|D(m,n)|` via the `sum_lambda B_lambda / z_lambda` weighting, with
/// `B_lambda = prod_i B_{lambda_i}`. Agrees with [`bizley_count`] because
/// `prod_i lambda_i = prod_j j^{m_j}`.
pub fn bizley_count_power_sum(m: u64, n: u64) -> Result<Count> {
    let (d, a, b) = split(m, n)?;
    let mut total = Ratio::zero();
    for lambda in partitions(d) {
        let mut term = Ratio::from_integer(BigInt::one());
        for &part in lambda.parts() {
            term *= power_sum_term(a, b, part)?;
        }
        total += term / Ratio::from_integer(BigInt::from(z_of(&lambda)));
    }
    Ok(into_count(total, m, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Ratio {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(1), vec![p(&[1])]);
        assert_eq!(partitions(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(
            partitions(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        // p(10) = 42, p(15) = 176
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(partitions(15).len(), 176);
        assert!(partitions(7).iter().all(|l| l.weight() == 7));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[1, 1])), Count::from(2u32));
        assert_eq!(z_of(&p(&[2])), Count::from(2u32));
        assert_eq!(z_of(&p(&[3, 1, 1])), Count::from(6u32));
    }

    #[test]
    fn sum_of_inverse_z_is_one() {
        // sum_{lambda |- d} 1/z_lambda = 1 (class sizes of S_d sum to d!).
        for d in 1..=8 {
            let total: Ratio = partitions(d)
                .iter()
                .map(|l| Ratio::new(BigInt::one(), BigInt::from(z_of(l))))
                .sum();
            assert_eq!(total, Ratio::one(), "d={d}");
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(1, 1, 1).unwrap(), r(1, 1));
        assert_eq!(phi(1, 1, 2).unwrap(), r(3, 2));
        assert_eq!(phi(2, 3, 1).unwrap(), r(2, 1));
        assert!(matches!(phi(2, 4, 1), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn counts() {
        assert_eq!(bizley_count(2, 2).unwrap(), Count::from(2u32));
        assert_eq!(bizley_count(4, 6).unwrap(), Count::from(23u32));
        assert_eq!(bizley_count(6, 9).unwrap(), Count::from(377u32));
        assert_eq!(bizley_count(3, 5).unwrap(), Count::from(7u32));
        assert!(bizley_count(0, 5).is_err());
    }

    #[test]
    fn weightings_agree() {
        for m in 1..=12 {
            for n in 1..=12 {
                if m.gcd(&n) <= 6 {
                    assert_eq!(bizley_count(m, n), bizley_count_power_sum(m, n), "{m}x{n}");
                }
            }
        }
    }
}
