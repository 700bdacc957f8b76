//! Exhaustive checks of the correspondence over whole enumeration spaces.
//!
//! Items are checked in parallel and failures are reported in enumeration
//! order, so reports do not depend on the thread count.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitableau::standard_bitableaux;
use crate::correspondence::{
    bump_once, insertion, reverse_bumping, reverse_bumping_traced, BumpOutcome, CorrespondencePair,
};
use crate::golden::golden_n3;
use crate::partitions::{count_bitableaux, enumerate_bipartitions, Bipartition, BitableauCounter};
use crate::signed_perm::{enumerate_signed_permutations, SignedPermutation};
use crate::transition::{classify, FirstRemoval, TransitionOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Golden,
    Roundtrip,
    Inverse,
    Counting,
    Transition,
    Wtilde,
    Iota,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Golden,
        Property::Roundtrip,
        Property::Inverse,
        Property::Counting,
        Property::Transition,
        Property::Wtilde,
        Property::Iota,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Golden => "golden",
            Property::Roundtrip => "roundtrip",
            Property::Inverse => "inverse",
            Property::Counting => "counting",
            Property::Transition => "transition",
            Property::Wtilde => "wtilde",
            Property::Iota => "iota",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| VerifyError::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(
        "{property} at n = {n} exceeds the budget of n <= {max}; raise EXOTIC_RS_MAX_N to run it"
    )]
    BudgetExceeded {
        property: String,
        n: usize,
        max: usize,
    },
    #[error("the reference table only exists for n = 3, not n = {0}")]
    GoldenSize(usize),
    #[error("unknown property {0:?}; expected one of golden, roundtrip, inverse, counting, transition, wtilde, iota")]
    UnknownProperty(String),
}

/// Largest `n` each kind of check may run at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Checks that enumerate all same-shape pairs.
    pub pair_max_n: usize,
    /// Checks that enumerate words only.
    pub word_max_n: usize,
    /// Checks that only count, without enumerating fillings.
    pub count_max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            pair_max_n: 5,
            word_max_n: 6,
            count_max_n: 20,
        }
    }
}

impl Budget {
    /// Every limit raised to at least `n`.
    pub fn raised_to(self, n: usize) -> Budget {
        Budget {
            pair_max_n: self.pair_max_n.max(n),
            word_max_n: self.word_max_n.max(n),
            count_max_n: self.count_max_n.max(n),
        }
    }

    fn check(&self, property: &str, n: usize, max: usize) -> Result<(), VerifyError> {
        if n > max {
            return Err(VerifyError::BudgetExceeded {
                property: property.to_string(),
                n,
                max,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub item: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub property: String,
    pub n: usize,
    pub checked: u64,
    pub failures: Vec<Failure>,
    /// Tallies attached by some properties, e.g. how often each case fired.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
}

impl Report {
    fn new(property: Property, n: usize) -> Report {
        Report {
            property: property.name().to_string(),
            n,
            checked: 0,
            failures: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One status line, plus the first counterexample when there is one.
    pub fn summary(&self) -> String {
        let ok = self.checked - self.failures.len() as u64;
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} n={}: {ok}/{} passed",
            self.property, self.n, self.checked
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!("\nfirst counterexample: {}\n{}", f.item, f.detail));
        }
        s
    }

    fn absorb(&mut self, results: Vec<Option<Failure>>) {
        self.checked += results.len() as u64;
        self.failures.extend(results.into_iter().flatten());
    }
}

/// Every pair of same-shape standard bitableaux of size `n`, grouped by
/// shape in enumeration order.
pub fn all_pairs(n: usize) -> Vec<CorrespondencePair> {
    let mut out = Vec::new();
    for shape in enumerate_bipartitions(n) {
        let tabs = standard_bitableaux(&shape);
        for t in &tabs {
            for r in &tabs {
                out.push(CorrespondencePair::new(t.clone(), r.clone()).expect("same shape"));
            }
        }
    }
    out
}

fn pair_item(p: &CorrespondencePair) -> String {
    serde_json::to_string(p).expect("pairs serialize")
}

fn check_all<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Option<Failure> + Sync + Send,
) -> Vec<Option<Failure>> {
    items.par_iter().map(f).collect()
}

/// Runs one property at size `n`.
pub fn verify(property: Property, n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    match property {
        Property::Golden => {
            if n != 3 {
                return Err(VerifyError::GoldenSize(n));
            }
            Ok(verify_golden_n3())
        }
        Property::Roundtrip => verify_roundtrip(n, budget),
        Property::Inverse => verify_inverse(n, budget),
        Property::Counting => verify_counting(n, budget),
        Property::Transition => verify_transition(n, budget),
        Property::Wtilde => verify_wtilde(n, budget),
        Property::Iota => verify_iota(n, budget),
    }
}

pub fn verify_golden_n3() -> Report {
    let mut report = Report::new(Property::Golden, 3);
    let table = golden_n3();
    let results = check_all(&table, |e| {
        let got = insertion(&e.word);
        let back = reverse_bumping(&e.pair);
        let mut detail = Vec::new();
        if got != e.pair {
            detail.push(format!("insertion gave\n{got}expected\n{}", e.pair));
        }
        if back != e.word {
            detail.push(format!("reverse bumping gave {back}"));
        }
        (!detail.is_empty()).then(|| Failure {
            item: e.word.to_string(),
            detail: detail.join("\n"),
        })
    });
    report.absorb(results);
    report
}

pub fn verify_roundtrip(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("roundtrip", n, budget.pair_max_n)?;
    let mut report = Report::new(Property::Roundtrip, n);
    let words = enumerate_signed_permutations(n);
    report.absorb(check_all(&words, |w| {
        let back = reverse_bumping(&insertion(w));
        (back != *w).then(|| Failure {
            item: w.to_string(),
            detail: format!("word came back as {back}"),
        })
    }));
    let pairs = all_pairs(n);
    report.absorb(check_all(&pairs, |p| {
        let back = insertion(&reverse_bumping(p));
        (back != *p).then(|| Failure {
            item: pair_item(p),
            detail: format!("pair came back as {}", pair_item(&back)),
        })
    }));
    Ok(report)
}

pub fn verify_inverse(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("inverse", n, budget.pair_max_n)?;
    let mut report = Report::new(Property::Inverse, n);
    let pairs = all_pairs(n);
    report.absorb(check_all(&pairs, |p| {
        let w = reverse_bumping(p);
        let swapped = reverse_bumping(&p.swapped());
        (swapped != w.invert()).then(|| Failure {
            item: pair_item(p),
            detail: format!(
                "word {w}, swapped pair gave {swapped}, inverse is {}",
                w.invert()
            ),
        })
    }));
    Ok(report)
}

/// Sums squared counts over all shapes and compares with `2^n n!`. When
/// words fit the budget, each cell's size is also compared with the square
/// of its count.
pub fn verify_counting(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("counting", n, budget.count_max_n)?;
    let mut report = Report::new(Property::Counting, n);
    let shapes = enumerate_bipartitions(n);
    let mut counter = BitableauCounter::new();
    let counts: Vec<(Bipartition, u128)> = shapes
        .into_iter()
        .map(|s| {
            let c = counter.count(&s);
            (s, c)
        })
        .collect();
    let total: u128 = counts.iter().map(|(_, c)| c * c).sum();
    let expected: u128 = (1..=n as u128).product::<u128>() << n;
    report.checked += 1;
    if total != expected {
        report.failures.push(Failure {
            item: format!("n={n}"),
            detail: format!("sum of squared counts is {total}, expected {expected}"),
        });
    }
    report.stats.insert("shapes".into(), counts.len() as u64);
    if n <= budget.word_max_n {
        let cells = cells(n, budget)?;
        for (shape, c) in &counts {
            report.checked += 1;
            let size = cells.cells.get(shape).map_or(0, Vec::len) as u128;
            if size != c * c {
                report.failures.push(Failure {
                    item: shape.to_string(),
                    detail: format!("cell has {size} words, count squared is {}", c * c),
                });
            }
        }
    }
    Ok(report)
}

/// Replays every reverse-bumping move through the shape classifier.
pub fn verify_transition(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("transition", n, budget.pair_max_n)?;
    let mut report = Report::new(Property::Transition, n);
    let pairs = all_pairs(n);
    let per_pair: Vec<(Vec<Option<Failure>>, Vec<String>)> = pairs
        .par_iter()
        .map(|p| {
            let (_, trace) = reverse_bumping_traced(p);
            let mut results = Vec::with_capacity(trace.len());
            let mut tags = Vec::new();
            for step in &trace {
                let first = FirstRemoval::new(step.from.side, step.from.row);
                let expected = match step.outcome {
                    BumpOutcome::Moved { to, .. } => TransitionOutcome::Continue {
                        side: to.side,
                        row: to.row,
                    },
                    BumpOutcome::Unbarred => TransitionOutcome::TerminateUnbarred,
                    BumpOutcome::Barred => TransitionOutcome::TerminateBarred,
                };
                let failure = match classify(&step.shape, first) {
                    Ok((got, case)) => {
                        tags.push(case.map_or_else(|| format!("{got}"), |c| format!("{c:?}")));
                        (got != expected)
                            .then(|| format!("classifier says {got}, algorithm did {expected}"))
                    }
                    Err(e) => Some(e.to_string()),
                };
                results.push(failure.map(|detail| Failure {
                    item: format!(
                        "{} (k={}, value {} from {} in {})",
                        pair_item(p),
                        step.k,
                        step.value,
                        step.from,
                        step.shape
                    ),
                    detail,
                }));
            }
            (results, tags)
        })
        .collect();
    for (results, tags) in per_pair {
        report.absorb(results);
        for t in tags {
            *report.stats.entry(t).or_default() += 1;
        }
    }
    Ok(report)
}

/// One outer reverse-bumping step commutes with deleting the last letter.
pub fn verify_wtilde(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("wtilde", n, budget.pair_max_n)?;
    let mut report = Report::new(Property::Wtilde, n);
    if n == 0 {
        return Ok(report);
    }
    let pairs = all_pairs(n);
    report.absorb(check_all(&pairs, |p| {
        let w = reverse_bumping(p);
        let (reduced, letter, r) = bump_once(p).expect("n >= 1");
        let (wt, wr) = w.derive_w_tilde().expect("n >= 1");
        let got = reverse_bumping(&reduced);
        let ok = letter == w.apply(n) && r == wr && got == wt;
        (!ok).then(|| Failure {
            item: pair_item(p),
            detail: format!(
                "word {w}: reduced pair gives {got}, expected {wt}; letter {letter}, r {r}"
            ),
        })
    }));
    Ok(report)
}

/// The embedding into S_2n lands in the symplectic image, is injective,
/// sends inverses to inverses and fixes the identity.
pub fn verify_iota(n: usize, budget: &Budget) -> Result<Report, VerifyError> {
    budget.check("iota", n, budget.word_max_n)?;
    let mut report = Report::new(Property::Iota, n);
    let words = enumerate_signed_permutations(n);
    report.absorb(check_all(&words, |w| {
        let sigma = w.iota_embed();
        let mut problems = Vec::new();
        if !sigma.is_symplectic() {
            problems.push("image is not symplectic".to_string());
        }
        if w.invert().iota_embed() != sigma.inverse() {
            problems.push("does not respect inverses".to_string());
        }
        (!problems.is_empty()).then(|| Failure {
            item: w.to_string(),
            detail: problems.join("; "),
        })
    }));
    let images: HashSet<_> = words.iter().map(|w| w.iota_embed()).collect();
    report.checked += 2;
    if images.len() != words.len() {
        report.failures.push(Failure {
            item: format!("n={n}"),
            detail: format!("{} words but {} images", words.len(), images.len()),
        });
    }
    let id = SignedPermutation::identity(n).iota_embed();
    if id.images().iter().enumerate().any(|(i, &v)| v != i + 1) {
        report.failures.push(Failure {
            item: "identity".into(),
            detail: format!("maps to {:?}", id.images()),
        });
    }
    Ok(report)
}

/// Words grouped by the shape of their pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDecomposition {
    pub n: usize,
    pub cells: BTreeMap<Bipartition, Vec<SignedPermutation>>,
}

#[derive(Serialize)]
struct CellRecord<'a> {
    shape: &'a Bipartition,
    size: usize,
    members: &'a [SignedPermutation],
}

impl CellDecomposition {
    /// A JSON list of `{shape, size, members}` in shape order.
    pub fn to_json(&self) -> String {
        let records: Vec<CellRecord> = self
            .cells
            .iter()
            .map(|(shape, members)| CellRecord {
                shape,
                size: members.len(),
                members,
            })
            .collect();
        serde_json::to_string_pretty(&records).expect("cells serialize")
    }
}

pub fn cells(n: usize, budget: &Budget) -> Result<CellDecomposition, VerifyError> {
    budget.check("cells", n, budget.word_max_n)?;
    let words = enumerate_signed_permutations(n);
    let shapes: Vec<Bipartition> = words.par_iter().map(|w| insertion(w).shape()).collect();
    let mut cells: BTreeMap<Bipartition, Vec<SignedPermutation>> = enumerate_bipartitions(n)
        .into_iter()
        .map(|s| (s, Vec::new()))
        .collect();
    for (w, s) in words.into_iter().zip(shapes) {
        cells.entry(s).or_default().push(w);
    }
    Ok(CellDecomposition { n, cells })
}

/// Per-shape counts, in shape order.
pub fn shape_counts(n: usize) -> Vec<(Bipartition, u128)> {
    enumerate_bipartitions(n)
        .into_iter()
        .map(|s| {
            let c = count_bitableaux(&s);
            (s, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(mu: &[usize], nu: &[usize]) -> Bipartition {
        Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap()
    }

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn golden_passes() {
        let r = verify_golden_n3();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.checked, 48);
    }

    #[test]
    fn counting_small() {
        let b = Budget::default();
        let r = verify_counting(1, &b).unwrap();
        assert!(r.passed());
        assert!(verify_counting(3, &b).unwrap().passed());
    }

    #[test]
    fn budget_refuses() {
        let b = Budget::default();
        assert!(matches!(
            verify_roundtrip(6, &b),
            Err(VerifyError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            cells(7, &b),
            Err(VerifyError::BudgetExceeded { .. })
        ));
        assert!(verify(Property::Golden, 4, &b).is_err());
    }

    #[test]
    fn cells_n3() {
        let c = cells(3, &Budget::default()).unwrap();
        assert_eq!(c.cells[&bp(&[3], &[])], vec![w("1 2 3")]);
        let mut expected = vec![w("1 -2 3"), w("1 2 -3"), w("1 -3 2"), w("1 3 -2")];
        expected.sort();
        assert_eq!(c.cells[&bp(&[2, 1], &[])], expected);
        assert_eq!(c.cells[&bp(&[1], &[2])].len(), 9);
        assert_eq!(c.cells.values().map(Vec::len).sum::<usize>(), 48);
    }

    #[test]
    fn reports_independent_of_thread_count() {
        let run = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| verify_transition(4, &Budget::default()).unwrap().to_json())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("nope".parse::<Property>().is_err());
    }
}
