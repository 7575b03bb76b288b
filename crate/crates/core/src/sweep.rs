//! Cross-method verification sweeps shared by `rectcat verify` and
//! `rectcat identities`.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::bizley::bizley_count;
use crate::christoffel::{delta, delta_closed_lower, delta_closed_upper, q_boxes, special_r};
use crate::closed_forms::{coprime_catalan, fuss_catalan, is_prime, prime_rect};
use crate::comparison::{rule2_terms, theorem1_count, theorem2_count, Family};
use crate::decomposition::{decompose, h_value};
use crate::diagram::{christoffel_diagram, count_rect, enumerate_paths, Rect};
use crate::Count;

/// Largest oracle count for which the enumeration check materializes paths.
const ENUMERATION_CHECK_CAP: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

/// Outcome of a sweep. Both the tally table and the failure list are
/// sorted, so the report does not depend on evaluation order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub checks: BTreeMap<&'static str, Tally>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, check: &'static str, outcome: Result<(), String>) {
        let tally = self.checks.entry(check).or_default();
        match outcome {
            Ok(()) => tally.passed += 1,
            Err(detail) => {
                tally.failed += 1;
                self.failures.push(Failure { check, detail });
            }
        }
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        for (name, t) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
        }
        self.failures.extend(other.failures);
        self
    }

    fn finish(mut self) -> SweepReport {
        self.failures.sort();
        self
    }
}

fn same(what: String, got: &Count, want: &Count) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, oracle {want}"))
    }
}

fn same_result(what: String, got: crate::Result<Count>, want: &Count) -> Result<(), String> {
    match got {
        Ok(v) => same(what, &v, want),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_a: u64,
    pub max_b: u64,
    pub max_k: u64,
    pub max_n: u64,
    /// Perturbs the oracle on the 2x2 cell; exercises the failure path.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_a: 8,
            max_b: 10,
            max_k: 4,
            max_n: 3,
            inject_fault: false,
        }
    }
}

fn cell_checks(a: u64, b: u64, inject_fault: bool) -> SweepReport {
    let mut rep = SweepReport::default();
    let rect = Rect::new(a, b).expect("sweep bounds are positive");
    let mut oracle = count_rect(rect);
    if inject_fault && (a, b) == (2, 2) {
        oracle += 1u32;
    }
    rep.record(
        "transpose",
        same(
            format!("count({b}x{a})"),
            &count_rect(rect.transpose()),
            &oracle,
        ),
    );
    if a.gcd(&b) == 1 {
        rep.record(
            "coprime",
            same_result(format!("coprime({a},{b})"), coprime_catalan(a, b), &oracle),
        );
    }
    if b.is_multiple_of(a) {
        rep.record(
            "fuss",
            same_result(
                format!("fuss({a},{})", b / a),
                fuss_catalan(a, b / a),
                &oracle,
            ),
        );
    }
    if is_prime(a) {
        rep.record(
            "prime",
            same_result(format!("prime_rect({a},{b})"), prime_rect(a, b), &oracle),
        );
    }
    rep.record(
        "bizley",
        same_result(format!("bizley({a},{b})"), bizley_count(a, b), &oracle),
    );
    let mu = christoffel_diagram(rect);
    rep.record(
        "decompose",
        same(
            format!("H(decompose({a}x{b}))"),
            &h_value(&decompose(&mu)),
            &oracle,
        ),
    );
    if oracle <= Count::from(ENUMERATION_CHECK_CAP) {
        let listed = enumerate_paths(rect, ENUMERATION_CHECK_CAP)
            .map(|w| Count::from(w.len()))
            .map_err(|e| e.to_string());
        rep.record(
            "enumeration",
            listed.and_then(|n| same(format!("|enumerate({a}x{b})|"), &n, &oracle)),
        );
    }
    rep.merge(box_checks(a, b))
}

fn box_checks(a: u64, b: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    let boxes = christoffel_diagram(Rect::new(a, b).expect("positive")).boxes();
    let q = q_boxes(a, b);
    rep.record(
        "q-boxes",
        if q == boxes {
            Ok(())
        } else {
            Err(format!("Q({a},{b}) = {q}, diagram has {boxes} boxes"))
        },
    );
    if a < b {
        let sum: u64 = (1..a).map(|l| delta(a, b, l).expect("l in range")).sum();
        let diff = q - q_boxes(a, b - 1);
        rep.record(
            "delta-sum",
            if sum == diff {
                Ok(())
            } else {
                Err(format!("sum delta({a},{b},l) = {sum}, Q difference {diff}"))
            },
        );
    }
    rep
}

fn family_delta_checks(k: u64, n: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    let a = 2 * k;
    let upper_b = a * (n + 1) - 1;
    let lower_b = a * n + 2;
    for l in 1..a {
        let got = delta(a, upper_b, l).expect("l in range");
        let want = delta_closed_upper(k, n, l).expect("l in range");
        rep.record(
            "delta-upper",
            if got == want {
                Ok(())
            } else {
                Err(format!(
                    "delta({a},{upper_b},{l}) = {got}, closed form {want}"
                ))
            },
        );
        let got = delta(a, lower_b, l).expect("l in range");
        let want = delta_closed_lower(k, n, l).expect("l in range");
        rep.record(
            "delta-lower",
            if got == want {
                Ok(())
            } else {
                Err(format!(
                    "delta({a},{lower_b},{l}) = {got}, closed form {want}"
                ))
            },
        );
    }
    rep
}

fn theorem_checks(k: u64, n: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    let a = 2 * k;
    let upper_b = Family::Upper.width(a, n);
    if upper_b >= 1 {
        let oracle = count_rect(Rect::new(a, upper_b).expect("positive"));
        rep.record(
            "theorem1",
            same_result(format!("theorem1({k},{n})"), theorem1_count(k, n), &oracle),
        );
        let adjacent = count_rect(Rect::new(a, upper_b + 1).expect("positive"));
        let terms = rule2_terms(a, Family::Upper, n).expect("even height");
        let oracle_sum: Count = terms
            .terms
            .iter()
            .map(|t| t.left.oracle_count() * t.right.oracle_count())
            .sum();
        rep.record(
            "rule2-upper",
            same(
                format!("rule2 upper a={a} n={n}"),
                &oracle_sum,
                &(adjacent - oracle),
            ),
        );
    }
    let lower_b = Family::Lower.width(a, n);
    let oracle = count_rect(Rect::new(a, lower_b).expect("positive"));
    if n >= 1 {
        rep.record(
            "theorem2",
            same_result(format!("theorem2({k},{n})"), theorem2_count(k, n), &oracle),
        );
    }
    let adjacent = count_rect(Rect::new(a, lower_b - 1).expect("positive"));
    let terms = rule2_terms(a, Family::Lower, n).expect("even height");
    let oracle_sum: Count = terms
        .terms
        .iter()
        .map(|t| t.left.oracle_count() * t.right.oracle_count())
        .sum();
    rep.record(
        "rule2-lower",
        same(
            format!("rule2 lower a={a} n={n}"),
            &oracle_sum,
            &(oracle - adjacent),
        ),
    );
    rep
}

fn special_r_check(a: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    rep.record(
        "special-r",
        match special_r(a) {
            Ok(r) if r == a - 1 => Ok(()),
            Ok(r) => Err(format!("special_r({a}) = {r}")),
            Err(e) => Err(e.to_string()),
        },
    );
    rep
}

/// Every oracle-vs-formula sweep over `2 <= a <= max_a`, `2 <= b <= max_b`
/// plus the theorem families for `k <= max_k`, `n <= max_n`.
pub fn verify(opts: VerifyOptions) -> SweepReport {
    let cells: Vec<(u64, u64)> = (2..=opts.max_a)
        .flat_map(|a| (2..=opts.max_b).map(move |b| (a, b)))
        .collect();
    let grid = cells
        .par_iter()
        .map(|&(a, b)| cell_checks(a, b, opts.inject_fault))
        .reduce(SweepReport::default, SweepReport::merge);
    let families: Vec<(u64, u64)> = (1..=opts.max_k)
        .flat_map(|k| (0..=opts.max_n).map(move |n| (k, n)))
        .collect();
    let fam = families
        .par_iter()
        .map(|&(k, n)| theorem_checks(k, n).merge(family_delta_checks(k, n)))
        .reduce(SweepReport::default, SweepReport::merge);
    let guards = (2..=opts.max_a)
        .map(special_r_check)
        .fold(SweepReport::default(), SweepReport::merge);
    grid.merge(fam).merge(guards).finish()
}

/// Box-count and difference identities for `a <= max_a`, `b <= max_b`,
/// the closed-form difference profiles for every family member fitting in
/// those bounds, and the `r = a - 1` guard.
pub fn identities(max_a: u64, max_b: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    for a in 1..=max_a {
        for b in 1..=max_b {
            rep = rep.merge(box_checks(a, b));
        }
    }
    for k in 1..=max_a / 2 {
        let a = 2 * k;
        let mut n = 0;
        while a * (n + 1) - 1 <= max_b || a * n + 2 <= max_b {
            rep = rep.merge(family_delta_checks(k, n));
            n += 1;
        }
    }
    for a in 2..=max_a {
        rep = rep.merge(special_r_check(a));
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verify_passes() {
        let rep = verify(VerifyOptions {
            max_a: 4,
            max_b: 5,
            max_k: 2,
            max_n: 2,
            inject_fault: false,
        });
        assert!(rep.ok(), "{:?}", rep.failures);
        assert!(rep.checks["bizley"].passed > 0);
        assert!(rep.checks["theorem1"].passed > 0);
    }

    #[test]
    fn injected_fault_is_caught() {
        let rep = verify(VerifyOptions {
            max_a: 2,
            max_b: 2,
            max_k: 1,
            max_n: 1,
            inject_fault: true,
        });
        assert!(!rep.ok());
        assert!(rep.failures.iter().any(|f| f.check == "bizley"));
    }

    #[test]
    fn identities_pass() {
        let rep = identities(12, 20);
        assert!(rep.ok(), "{:?}", rep.failures);
        assert!(rep.checks["delta-upper"].passed > 0);
    }
}
