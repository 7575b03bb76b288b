//! Diagram comparison: splitting a Ferrers set through a corner box, and
//! the two product formulas for even heights built on it.

use std::fmt;

use serde::Serialize;

use crate::closed_forms::coprime_catalan;
use crate::diagram::{count_paths, count_rect, Diagram, Rect};
use crate::error::{domain, input};
use crate::{Count, Result};

/// Splits the Ferrers set of `mu` on the last cell of row `r`.
///
/// Paths through that cell factor into a path under `A` (the rows above,
/// unchanged) followed by a path under `B` (the rows below with the first
/// `mu_r` columns deleted), so
/// `count(mu) = count(mu minus the cell) + count(A) * count(B)`.
pub fn through_box_split(mu: &Diagram, r: usize) -> Result<(Diagram, Diagram)> {
    if !mu.is_outer_corner(r) {
        return input(format!("row {r} of ({mu}) does not end in an outer corner"));
    }
    let j = mu.row(r);
    let above = Diagram::new(mu.rows()[r..].to_vec())?;
    let below = Diagram::new(mu.rows()[..r - 1].iter().map(|len| len - j).collect())?;
    Ok((above, below))
}

/// Which neighbouring width a term list compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `b = a(n+1) - 2`, compared with `b + 1`.
    Upper,
    /// `b = an + 2`, compared with `b - 1`.
    Lower,
}

impl Family {
    pub fn width(self, a: u64, n: u64) -> u64 {
        match self {
            Family::Upper => a * (n + 1) - 2,
            Family::Lower => a * n + 2,
        }
    }

    /// The neighbouring width whose count differs by the term sum.
    pub fn adjacent_width(self, a: u64, n: u64) -> u64 {
        match self {
            Family::Upper => a * (n + 1) - 1,
            Family::Lower => a * n + 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Upper => "upper",
            Family::Lower => "lower",
        })
    }
}

/// Rectangle dimensions appearing in a term. Unlike [`Rect`], `1 x 0` is
/// allowed: it holds the single all-down path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Dims {
    pub a: u64,
    pub b: u64,
}

impl Dims {
    fn new(a: u64, b: u64) -> Self {
        debug_assert!(a >= 1, "term heights are positive");
        Dims { a, b }
    }

    /// Path count by the coprime closed form.
    pub fn closed_count(&self) -> Count {
        if self.a == 1 {
            return Count::from(1u32);
        }
        coprime_catalan(self.a, self.b).expect("term rectangles are coprime")
    }

    /// Path count by the reference dynamic program.
    pub fn oracle_count(&self) -> Count {
        if self.b == 0 {
            return Count::from(1u32);
        }
        count_rect(Rect::new(self.a, self.b).expect("positive sides"))
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Term {
    pub left: Dims,
    pub right: Dims,
}

impl Term {
    pub fn closed_product(&self) -> Count {
        self.left.closed_count() * self.right.closed_count()
    }
}

/// A product-term list together with the family it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermList {
    pub a: u64,
    pub n: u64,
    pub family: Family,
    pub terms: Vec<Term>,
}

impl TermList {
    pub fn closed_sum(&self) -> Count {
        self.terms.iter().map(Term::closed_product).sum()
    }
}

fn half(a: u64) -> Result<u64> {
    if a == 0 || !a.is_multiple_of(2) {
        return domain(format!("comparison terms need an even height, got {a}"));
    }
    Ok(a / 2)
}

/// Pairs of coprime rectangles whose count products sum to the count
/// difference between widths `family.width(a, n)` and
/// `family.adjacent_width(a, n)`.
pub fn rule2_terms(a: u64, family: Family, n: u64) -> Result<TermList> {
    let k = half(a)?;
    let terms = match family {
        Family::Upper => (1..k)
            .map(|j| Term {
                left: Dims::new(j, j * (n + 1) - 1),
                right: Dims::new(a - j, (a - j) * (n + 1) - 1),
            })
            .collect(),
        Family::Lower => (1..=k)
            .map(|j| Term {
                left: Dims::new(j, j * n + 1),
                right: Dims::new(a - j, (a - j) * n + 1),
            })
            .collect(),
    };
    Ok(TermList {
        a,
        n,
        family,
        terms,
    })
}

/// `|D(2k, 2k(n+1) - 2)|` as `C-(2k) - sum_{j<k} C-(2k-j) C-(j)` with
/// `C-(t) = |D(t, t(n+1) - 1)|`.
pub fn theorem1_count(k: u64, n: u64) -> Result<Count> {
    if k == 0 {
        return domain("theorem1_count needs k >= 1");
    }
    let a = 2 * k;
    let base = Dims::new(a, Family::Upper.adjacent_width(a, n)).closed_count();
    let terms = rule2_terms(a, Family::Upper, n)?;
    Ok(base - terms.closed_sum())
}

/// `|D(2k, 2kn + 2)|` as `C+(2k) + sum_{j<=k} C+(2k-j) C+(j)` with
/// `C+(t) = |D(t, tn + 1)|`.
pub fn theorem2_count(k: u64, n: u64) -> Result<Count> {
    if k == 0 || n == 0 {
        return domain(format!("theorem2_count needs k, n >= 1, got ({k}, {n})"));
    }
    let a = 2 * k;
    let base = Dims::new(a, Family::Lower.adjacent_width(a, n)).closed_count();
    let terms = rule2_terms(a, Family::Lower, n)?;
    Ok(base + terms.closed_sum())
}

/// Locates `(a, b)` in one of the two theorem families, returning
/// `(family, k, n)`. The upper family is preferred when both match.
pub fn theorem_family(a: u64, b: u64) -> Option<(Family, u64, u64)> {
    if a == 0 || !a.is_multiple_of(2) {
        return None;
    }
    let k = a / 2;
    if (b + 2).is_multiple_of(a) && b + 2 >= a && b >= 1 {
        return Some((Family::Upper, k, (b + 2) / a - 1));
    }
    if b >= a + 2 && (b - 2).is_multiple_of(a) {
        return Some((Family::Lower, k, (b - 2) / a));
    }
    None
}

/// Count of any rectangle covered by [`theorem_family`].
pub fn theorem_count(a: u64, b: u64) -> Result<Count> {
    match theorem_family(a, b) {
        Some((Family::Upper, k, n)) => theorem1_count(k, n),
        Some((Family::Lower, k, n)) => theorem2_count(k, n),
        None => domain(format!(
            "{a}x{b} is in neither family (a = 2k with b = a(n+1)-2 or b = an+2)"
        )),
    }
}

/// Checks the corner split identity on one diagram and corner.
pub fn split_identity_holds(mu: &Diagram, r: usize) -> Result<bool> {
    let (above, below) = through_box_split(mu, r)?;
    let without = mu.remove_corner(r)?;
    Ok(count_paths(mu) == count_paths(&without) + count_paths(&above) * count_paths(&below))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            through_box_split(&diag("4,3,1"), 2).unwrap(),
            (diag("1"), diag("1"))
        );
        assert_eq!(
            through_box_split(&diag("2"), 1).unwrap(),
            (diag(""), diag(""))
        );
        assert_eq!(
            through_box_split(&diag("4,2,1"), 1).unwrap(),
            (diag("2,1"), diag(""))
        );
        assert!(split_identity_holds(&diag("4,2,1"), 1).unwrap());
        assert_eq!(count_paths(&diag("4,2,1")), c(19));
    }

    #[test]
    fn split_rejects_non_corners() {
        assert!(through_box_split(&diag("3,3,1"), 1).is_err());
        assert!(through_box_split(&diag("3,3,1"), 4).is_err());
        assert!(through_box_split(&diag("3,3,1"), 0).is_err());
    }

    fn pairs(list: &TermList) -> Vec<((u64, u64), (u64, u64))> {
        list.terms
            .iter()
            .map(|t| ((t.left.a, t.left.b), (t.right.a, t.right.b)))
            .collect()
    }

    #[test]
    fn rule2_shapes() {
        for n in 0..4 {
            let upper = rule2_terms(8, Family::Upper, n).unwrap();
            assert_eq!(
                pairs(&upper),
                [
                    ((1, n), (7, 7 * n + 6)),
                    ((2, 2 * n + 1), (6, 6 * n + 5)),
                    ((3, 3 * n + 2), (5, 5 * n + 4)),
                ]
            );
            let lower = rule2_terms(6, Family::Lower, n).unwrap();
            assert_eq!(
                pairs(&lower),
                [
                    ((1, n + 1), (5, 5 * n + 1)),
                    ((2, 2 * n + 1), (4, 4 * n + 1)),
                    ((3, 3 * n + 1), (3, 3 * n + 1)),
                ]
            );
        }
        assert!(rule2_terms(5, Family::Lower, 1).is_err());
    }

    #[test]
    fn rule2_lower_six_one() {
        let list = rule2_terms(6, Family::Lower, 1).unwrap();
        let products: Vec<Count> = list.terms.iter().map(Term::closed_product).collect();
        assert_eq!(products, [c(42), c(28), c(25)]);
        assert_eq!(list.closed_sum(), c(95));
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem1_count(2, 1).unwrap(), c(23));
        assert_eq!(theorem1_count(2, 0).unwrap(), c(3));
        assert_eq!(theorem1_count(3, 1).unwrap(), c(525));
        assert_eq!(theorem2_count(2, 1).unwrap(), c(23));
        assert_eq!(theorem2_count(3, 1).unwrap(), c(227));
        assert_eq!(theorem2_count(1, 1).unwrap(), c(3));
        assert!(theorem2_count(2, 0).is_err());
        assert!(theorem1_count(0, 1).is_err());
    }

    #[test]
    fn family_lookup() {
        assert_eq!(theorem_family(4, 6), Some((Family::Upper, 2, 1)));
        assert_eq!(theorem_family(6, 8), Some((Family::Lower, 3, 1)));
        assert_eq!(theorem_family(6, 10), Some((Family::Upper, 3, 1)));
        assert_eq!(theorem_family(6, 9), None);
        assert_eq!(theorem_family(3, 4), None);
        assert!(theorem_count(6, 9).is_err());
    }
}
