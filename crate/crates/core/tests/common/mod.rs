//! Test-only oracles that share no code with the library's counting paths.

#![allow(dead_code)]

use rectcat::{Count, Diagram};

/// Counts `(a,b)`-Dyck words by walking every arrangement of `a` zeros and
/// `b` ones and checking each prefix.
pub fn brute_force_rect(a: u64, b: u64) -> u64 {
    fn walk(a: u64, b: u64, downs: u64, rights: u64) -> u64 {
        if b * downs < a * rights {
            return 0;
        }
        if downs == a && rights == b {
            return 1;
        }
        let mut n = 0;
        if downs < a {
            n += walk(a, b, downs + 1, rights);
        }
        if rights < b {
            n += walk(a, b, downs, rights + 1);
        }
        n
    }
    walk(a, b, 0, 0)
}

/// Counts the diagrams contained in `mu` by listing them.
pub fn brute_force_subdiagrams(mu: &Diagram) -> u64 {
    fn walk(rows: &[u64], r: usize, cap: u64) -> u64 {
        if r == rows.len() {
            return 1;
        }
        (0..=cap.min(rows[r])).map(|v| walk(rows, r + 1, v)).sum()
    }
    walk(mu.rows(), 0, u64::MAX)
}

pub fn c(v: u64) -> Count {
    Count::from(v)
}
