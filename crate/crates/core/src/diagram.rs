//! Rectangles, Dyck words, Ferrers diagrams and the reference path counter.
//!
//! Diagram rows are stored bottom-up: `rows[0]` is the bottom (longest) row.
//! Inside an `a x b` rectangle, row `r` (1-based) holds at most
//! `floor(b(a-r)/a)` boxes, and the top row is always empty.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::input;
use crate::scalar::{add, lift};
use crate::{Count, Error, Result, Scalar};

/// Default cap on the number of paths [`enumerate_paths`] will materialize.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// An `a x b` rectangle: `a` down steps, `b` right steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rect {
    a: u64,
    b: u64,
}

impl Rect {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return input(format!("rectangle sides must be positive, got {a}x{b}"));
        }
        Ok(Rect { a, b })
    }

    /// Height (number of down steps).
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Width (number of right steps).
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn transpose(&self) -> Rect {
        Rect {
            a: self.b,
            b: self.a,
        }
    }

    /// Maximum number of boxes in bottom-up row `r` (1-based).
    pub fn row_capacity(&self, r: u64) -> u64 {
        if r >= self.a {
            return 0;
        }
        floor_div(self.b, self.a - r, self.a)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.a, self.b)
    }
}

/// `floor(x * y / d)` without intermediate overflow.
pub(crate) fn floor_div(x: u64, y: u64, d: u64) -> u64 {
    ((x as u128 * y as u128) / d as u128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Letter `0`.
    Down,
    /// Letter `1`.
    Right,
}

/// A word over `{0, 1}`; `0` is a unit down step, `1` a unit right step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Self {
        DyckWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn downs(&self) -> u64 {
        self.steps.iter().filter(|s| **s == Step::Down).count() as u64
    }

    pub fn rights(&self) -> u64 {
        self.steps.len() as u64 - self.downs()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Down => "0",
                Step::Right => "1",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Step::Down),
                '1' => Ok(Step::Right),
                other => input(format!("unexpected letter {other:?} in word")),
            })
            .collect::<Result<Vec<_>>>()
            .map(DyckWord::new)
    }
}

/// A Ferrers diagram: weakly decreasing row lengths, bottom-up, with
/// trailing zero rows dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram {
    rows: Vec<u64>,
}

impl Diagram {
    /// Builds a diagram from bottom-up row lengths; trailing zeros are dropped.
    pub fn new(mut rows: Vec<u64>) -> Result<Self> {
        if let Some(w) = rows.windows(2).find(|w| w[0] < w[1]) {
            return input(format!(
                "diagram rows must be weakly decreasing bottom-up, found {} below {}",
                w[0], w[1]
            ));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Diagram { rows })
    }

    pub fn empty() -> Self {
        Diagram { rows: Vec::new() }
    }

    /// The isosceles staircase `(n-1, n-2, ..., 1)`; `n = 0` and `n = 1`
    /// both give the empty diagram.
    pub fn isosceles(n: u64) -> Self {
        Diagram {
            rows: (1..n).rev().collect(),
        }
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Length of bottom-up row `r` (1-based); zero past the top.
    pub fn row(&self, r: usize) -> u64 {
        if r == 0 {
            return 0;
        }
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Length of the bottom row.
    pub fn width(&self) -> u64 {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn boxes(&self) -> u64 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Componentwise inclusion.
    pub fn contains(&self, other: &Diagram) -> bool {
        other.height() <= self.height() && other.rows.iter().zip(&self.rows).all(|(o, s)| o <= s)
    }

    /// True when the last cell of row `r` can be removed, i.e. row `r`
    /// is strictly longer than the row above it.
    pub fn is_outer_corner(&self, r: usize) -> bool {
        r >= 1 && r <= self.height() && self.row(r) > self.row(r + 1)
    }

    /// Bottom-up indices of all removable cells.
    pub fn outer_corners(&self) -> Vec<usize> {
        (1..=self.height())
            .filter(|&r| self.is_outer_corner(r))
            .collect()
    }

    /// The diagram with the last cell of row `r` removed.
    pub fn remove_corner(&self, r: usize) -> Result<Diagram> {
        if !self.is_outer_corner(r) {
            return input(format!(
                "row {r} of ({self}) does not end in an outer corner"
            ));
        }
        let mut rows = self.rows.clone();
        rows[r - 1] -= 1;
        Diagram::new(rows)
    }

    /// Whether the diagram fits inside the Christoffel bound of `rect`.
    pub fn fits(&self, rect: Rect) -> bool {
        self.height() < rect.a() as usize
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, &len)| len <= rect.row_capacity(i as u64 + 1))
    }

    /// Every diagram contained in `self`, in lexicographic order of rows.
    pub fn subdiagrams(&self) -> Vec<Diagram> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.height());
        self.collect_subdiagrams(&mut cur, &mut out);
        out
    }

    fn collect_subdiagrams(&self, cur: &mut Vec<u64>, out: &mut Vec<Diagram>) {
        let r = cur.len();
        if r == self.height() {
            out.push(Diagram::new(cur.clone()).expect("constructed decreasing"));
            return;
        }
        let cap = match cur.last() {
            Some(&prev) => prev.min(self.rows[r]),
            None => self.rows[r],
        };
        for v in 0..=cap {
            cur.push(v);
            self.collect_subdiagrams(cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses comma-separated bottom-up row lengths, e.g. `"7,6,4,3,1"`.
    /// The empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Diagram::empty());
        }
        let rows = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Input(format!("bad row length {part:?} in diagram {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(rows)
    }
}

/// The diagram of the Christoffel path of `rect`: row `r` has
/// `floor(b(a-r)/a)` boxes for `r = 1..a-1`. Every Dyck path of the
/// rectangle has a diagram contained in this one.
pub fn christoffel_diagram(rect: Rect) -> Diagram {
    let rows = (1..rect.a()).map(|r| rect.row_capacity(r)).collect();
    Diagram::new(rows).expect("capacities decrease with r")
}

fn check_lengths(rect: Rect, w: &DyckWord) -> Result<()> {
    if w.downs() != rect.a() || w.rights() != rect.b() {
        return input(format!(
            "word {w} has {} downs and {} rights, rectangle {rect} needs {} and {}",
            w.downs(),
            w.rights(),
            rect.a(),
            rect.b()
        ));
    }
    Ok(())
}

/// Whether every prefix `p` of `w` satisfies `b*|p|_0 >= a*|p|_1`.
pub fn is_valid_word(rect: Rect, w: &DyckWord) -> Result<bool> {
    check_lengths(rect, w)?;
    let (a, b) = (rect.a() as u128, rect.b() as u128);
    let (mut downs, mut rights) = (0u128, 0u128);
    for s in w.steps() {
        match s {
            Step::Down => downs += 1,
            Step::Right => rights += 1,
        }
        if b * downs < a * rights {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Encodes a valid word as its diagram: row `r` gets the x-coordinate of
/// the down step crossing it.
pub fn word_to_diagram(rect: Rect, w: &DyckWord) -> Result<Diagram> {
    if !is_valid_word(rect, w)? {
        return input(format!("word {w} leaves the {rect} rectangle's diagonal"));
    }
    let mut top_down = Vec::with_capacity(rect.a() as usize);
    let mut x = 0u64;
    for s in w.steps() {
        match s {
            Step::Right => x += 1,
            Step::Down => top_down.push(x),
        }
    }
    top_down.reverse();
    Diagram::new(top_down)
}

/// Inverse of [`word_to_diagram`].
pub fn diagram_to_word(rect: Rect, mu: &Diagram) -> Result<DyckWord> {
    if !mu.fits(rect) {
        return input(format!(
            "diagram ({mu}) exceeds the Christoffel bound of {rect}"
        ));
    }
    let mut steps = Vec::with_capacity((rect.a() + rect.b()) as usize);
    let mut x = 0u64;
    for r in (1..=rect.a() as usize).rev() {
        let target = mu.row(r);
        steps.extend(std::iter::repeat_n(Step::Right, (target - x) as usize));
        steps.push(Step::Down);
        x = target;
    }
    steps.extend(std::iter::repeat_n(Step::Right, (rect.b() - x) as usize));
    Ok(DyckWord::new(steps))
}

/// Number of diagrams `nu` contained in `mu`, i.e. the size of its Ferrers set.
///
/// Rows are processed top to bottom, keeping for each `x` the number of
/// fillings of the rows above whose lowest row has at most `x` boxes.
pub fn count_paths_as<T: Scalar>(mu: &Diagram) -> Result<T> {
    let width = mu.width() as usize;
    let mut below = vec![T::one(); width + 1];
    for &len in mu.rows().iter().rev() {
        let len = len as usize;
        let mut acc = T::zero();
        let mut next = Vec::with_capacity(width + 1);
        for (x, ways) in below.iter().enumerate() {
            if x <= len {
                acc = add(&acc, ways, "count_paths")?;
            }
            next.push(acc.clone());
        }
        below = next;
    }
    Ok(below[width].clone())
}

pub fn count_paths(mu: &Diagram) -> Count {
    count_paths_as(mu).expect("arbitrary precision")
}

/// `|D(a,b)|` by the reference dynamic program.
pub fn count_rect_as<T: Scalar>(rect: Rect) -> Result<T> {
    count_paths_as(&christoffel_diagram(rect))
}

pub fn count_rect(rect: Rect) -> Count {
    count_rect_as(rect).expect("arbitrary precision")
}

/// All Dyck words of `rect` in lexicographic order (`0 < 1`).
///
/// Refuses with [`Error::TooManyPaths`] when the count exceeds `cap`.
pub fn enumerate_paths(rect: Rect, cap: u64) -> Result<Vec<DyckWord>> {
    let total = count_rect(rect);
    if total > lift::<Count>(cap, "cap")? {
        return Err(Error::TooManyPaths { count: total, cap });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity((rect.a() + rect.b()) as usize);
    extend_words(rect, 0, 0, &mut cur, &mut out);
    Ok(out)
}

fn extend_words(rect: Rect, downs: u64, rights: u64, cur: &mut Vec<Step>, out: &mut Vec<DyckWord>) {
    if downs == rect.a() && rights == rect.b() {
        out.push(DyckWord::new(cur.clone()));
        return;
    }
    if downs < rect.a() {
        cur.push(Step::Down);
        extend_words(rect, downs + 1, rights, cur, out);
        cur.pop();
    }
    let allowed = rect.b() as u128 * downs as u128 >= rect.a() as u128 * (rights as u128 + 1);
    if rights < rect.b() && allowed {
        cur.push(Step::Right);
        extend_words(rect, downs, rights + 1, cur, out);
        cur.pop();
    }
}
