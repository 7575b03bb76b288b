//! Rewriting a Ferrers diagram as sums and products of isosceles staircases.
//!
//! Repeatedly splitting on an excess corner box (see
//! [`through_box_split`](crate::comparison::through_box_split)) turns any
//! diagram into an expression whose leaves are the empty diagram or an
//! isosceles staircase `I_n = (n-1, ..., 1)`. Evaluating leaves as `1` and
//! `Catalan(n)` recovers the size of the Ferrers set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed_forms::catalan_as;
use crate::comparison::through_box_split;
use crate::diagram::Diagram;
use crate::error::input;
use crate::scalar::{add, mul};
use crate::{Count, Error, Result, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum DecompExpr {
    /// The empty diagram.
    One,
    /// The isosceles diagram `I_n`.
    Iso {
        n: u64,
    },
    Sum {
        terms: Vec<DecompExpr>,
    },
    Prod {
        factors: Vec<DecompExpr>,
    },
}

impl DecompExpr {
    pub fn iso(n: u64) -> Self {
        DecompExpr::Iso { n }
    }

    pub fn sum(terms: Vec<DecompExpr>) -> Self {
        assert!(!terms.is_empty(), "empty sum");
        DecompExpr::Sum { terms }
    }

    pub fn prod(factors: Vec<DecompExpr>) -> Self {
        assert!(!factors.is_empty(), "empty product");
        DecompExpr::Prod { factors }
    }

    fn children(&self) -> &[DecompExpr] {
        match self {
            DecompExpr::One | DecompExpr::Iso { .. } => &[],
            DecompExpr::Sum { terms } => terms,
            DecompExpr::Prod { factors } => factors,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, DecompExpr::One | DecompExpr::Iso { .. })
    }

    pub fn leaves(&self) -> Vec<&DecompExpr> {
        if self.is_leaf() {
            return vec![self];
        }
        self.children()
            .iter()
            .flat_map(DecompExpr::leaves)
            .collect()
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(DecompExpr::depth)
            .max()
            .unwrap_or(0)
    }

    /// Sum-of-products normal form: each summand lists the `n` of its
    /// isosceles factors in order, with `One` factors dropped (an empty
    /// summand stands for `1`).
    pub fn normal_form(&self) -> Vec<Vec<u64>> {
        match self {
            DecompExpr::One => vec![vec![]],
            DecompExpr::Iso { n } => vec![vec![*n]],
            DecompExpr::Sum { terms } => terms.iter().flat_map(DecompExpr::normal_form).collect(),
            DecompExpr::Prod { factors } => factors.iter().fold(vec![vec![]], |acc, factor| {
                let rhs = factor.normal_form();
                acc.iter()
                    .flat_map(|l| {
                        rhs.iter().map(move |r| {
                            let mut m = l.clone();
                            m.extend_from_slice(r);
                            m
                        })
                    })
                    .collect()
            }),
        }
    }
}

/// Largest `n >= 1` with `I_n` contained in `mu`.
pub fn max_isosceles(mu: &Diagram) -> u64 {
    let mut n = 1;
    while (1..=n as usize).all(|r| mu.row(r) + r as u64 > n) {
        n += 1;
    }
    n
}

/// Decomposes `mu` until every leaf is `One` or an isosceles staircase.
///
/// The split box is the last cell of the topmost row that sticks out of
/// the maximum isosceles diagram; that cell is always an outer corner.
pub fn decompose(mu: &Diagram) -> DecompExpr {
    if mu.is_empty() {
        return DecompExpr::One;
    }
    let n = max_isosceles(mu);
    let excess = (1..=mu.height()).rev().find(|&r| mu.row(r) + r as u64 > n);
    let Some(r) = excess else {
        return DecompExpr::iso(n);
    };
    let (above, below) = through_box_split(mu, r).expect("topmost excess cell is a corner");
    let without = mu
        .remove_corner(r)
        .expect("topmost excess cell is a corner");
    DecompExpr::sum(vec![
        decompose(&without),
        DecompExpr::prod(vec![decompose(&above), decompose(&below)]),
    ])
}

/// Evaluates `One -> 1`, `I_n -> Catalan(n)`, sums to sums, products to
/// products.
pub fn h_value_as<T: Scalar>(e: &DecompExpr) -> Result<T> {
    match e {
        DecompExpr::One => Ok(T::one()),
        DecompExpr::Iso { n } => catalan_as(*n),
        DecompExpr::Sum { terms } => terms
            .iter()
            .try_fold(T::zero(), |acc, t| add(&acc, &h_value_as(t)?, "h_value")),
        DecompExpr::Prod { factors } => factors
            .iter()
            .try_fold(T::one(), |acc, f| mul(&acc, &h_value_as(f)?, "h_value")),
    }
}

pub fn h_value(e: &DecompExpr) -> Count {
    h_value_as(e).expect("arbitrary precision")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExprStats {
    /// Summands in the sum-of-products normal form.
    pub summands: usize,
    /// Factors across all normal-form summands (a bare `1` counts once).
    pub leaves: usize,
    /// Depth of the tree as built.
    pub depth: usize,
}

pub fn expr_stats(e: &DecompExpr) -> ExprStats {
    let nf = e.normal_form();
    ExprStats {
        summands: nf.len(),
        leaves: nf.iter().map(|s| s.len().max(1)).sum(),
        depth: e.depth(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => input(format!("unknown format {other:?}, expected text or json")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
        })
    }
}

/// `text` renders the normal form, e.g. `C4 + C3 + C2*C2`; `json` renders
/// the tree as built.
pub fn render(e: &DecompExpr, format: Format) -> String {
    match format {
        Format::Text => e
            .normal_form()
            .iter()
            .map(|summand| {
                if summand.is_empty() {
                    "1".to_string()
                } else {
                    summand
                        .iter()
                        .map(|n| format!("C{n}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect::<Vec<_>>()
            .join(" + "),
        Format::Json => serde_json::to_string(e).expect("expression serializes"),
    }
}
