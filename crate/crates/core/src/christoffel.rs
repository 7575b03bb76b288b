//! Box counts of Christoffel diagrams and their width differences.

use num_integer::Integer;

use crate::diagram::floor_div;
use crate::error::input;
use crate::Result;

/// Total number of boxes in the Christoffel diagram of `a x b`:
/// `((a-1)(b-1) + gcd(a,b) - 1) / 2`.
pub fn q_boxes(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "q_boxes needs a, b >= 1");
    let twice = (a - 1) * (b - 1) + a.gcd(&b) - 1;
    assert!(twice.is_multiple_of(2), "odd box total for {a}x{b}");
    twice / 2
}

/// `floor(b l / a) - floor((b-1) l / a)`: how many more boxes the
/// Christoffel diagram of width `b` has than that of width `b - 1` in the
/// row `a - l` (bottom-up).
pub fn delta(a: u64, b: u64, l: u64) -> Result<u64> {
    if b == 0 {
        return input("delta needs b >= 1");
    }
    if l == 0 || l >= a {
        return input(format!(
            "delta needs 1 <= l <= a-1 = {}, got l = {l}",
            a.saturating_sub(1)
        ));
    }
    Ok(floor_div(b, l, a) - floor_div(b - 1, l, a))
}

/// The row profile `delta(a, b, l)` for `l = 1..a-1`.
pub fn delta_profile(a: u64, b: u64) -> Result<Vec<u64>> {
    (1..a).map(|l| delta(a, b, l)).collect()
}

fn check_family(k: u64, l: u64) -> Result<()> {
    if k == 0 {
        return input("k must be >= 1");
    }
    if l == 0 || l > 2 * k - 1 {
        return input(format!("l must lie in 1..={}, got {l}", 2 * k - 1));
    }
    Ok(())
}

/// Closed form of `delta(2k, 2k(n+1) - 1, l)`: 0 for `l <= k`, 1 above.
pub fn delta_closed_upper(k: u64, _n: u64, l: u64) -> Result<u64> {
    check_family(k, l)?;
    Ok(u64::from(l > k))
}

/// Closed form of `delta(2k, 2kn + 2, l)`: 0 for `l <= k - 1`, 1 from `k` on.
pub fn delta_closed_lower(k: u64, _n: u64, l: u64) -> Result<u64> {
    check_family(k, l)?;
    Ok(u64::from(l >= k))
}

/// Returns `r = a - 1`, after checking that `floor(k r / a)` is `k - 1` or
/// `k` for every `k = 1..a-1` and that `gcd(r, a) = 1`.
pub fn special_r(a: u64) -> Result<u64> {
    if a < 2 {
        return input(format!("special_r needs a >= 2, got {a}"));
    }
    let r = a - 1;
    for k in 1..a {
        let f = floor_div(k, r, a);
        assert!(f == k - 1 || f == k, "floor({k}*{r}/{a}) = {f}");
    }
    assert_eq!(r.gcd(&a), 1);
    Ok(r)
}

/// The `r` values for which the floor property holds, by exhaustive search
/// over `1..a`.
pub fn special_r_candidates(a: u64) -> Vec<u64> {
    (1..a)
        .filter(|&r| r.gcd(&a) == 1)
        .filter(|&r| {
            (1..a).all(|k| {
                let f = floor_div(k, r, a);
                f + 1 == k || f == k
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{christoffel_diagram, Rect};

    #[test]
    fn q_examples() {
        assert_eq!(q_boxes(3, 5), 4);
        assert_eq!(q_boxes(6, 9), 21);
        assert_eq!(q_boxes(1, 5), 0);
        for n in 0..=8 {
            assert_eq!(q_boxes(8, 8 * n + 7) - q_boxes(8, 8 * n + 6), 3);
        }
    }

    #[test]
    fn q_matches_box_sum() {
        for a in 1..=60 {
            for b in 1..=60 {
                let mu = christoffel_diagram(Rect::new(a, b).unwrap());
                assert_eq!(q_boxes(a, b), mu.boxes(), "{a}x{b}");
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_profile(6, 8).unwrap(), [0, 0, 1, 1, 1]);
        assert_eq!(delta(2, 2, 1).unwrap(), 1);
        for n in 0..=8 {
            assert_eq!(delta_profile(8, 8 * n + 7).unwrap(), [0, 0, 0, 0, 1, 1, 1]);
        }
        assert!(delta(6, 8, 0).is_err());
        assert!(delta(6, 8, 6).is_err());
    }

    #[test]
    fn closed_examples() {
        assert_eq!(delta_closed_upper(4, 2, 5).unwrap(), 1);
        assert_eq!(delta_closed_lower(3, 1, 2).unwrap(), 0);
        assert_eq!(delta_closed_upper(1, 0, 1).unwrap(), 0);
        assert!(delta_closed_upper(2, 0, 4).is_err());
        assert!(delta_closed_lower(0, 0, 1).is_err());
    }

    #[test]
    fn special_r_examples() {
        assert_eq!(special_r(4).unwrap(), 3);
        assert_eq!(special_r(2).unwrap(), 1);
        assert_eq!(special_r(6).unwrap(), 5);
        assert!(special_r(1).is_err());
        for a in 2..=40 {
            assert_eq!(special_r_candidates(a), [a - 1], "a={a}");
        }
    }
}
