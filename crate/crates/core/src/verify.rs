//! Exhaustive verification suites.
//!
//! Each suite walks every case up to a size bound and returns a [`Report`]
//! listing the cases that broke the property under test. An empty
//! `violations` list means the property held everywhere it was checked.
//! Shape loops run in parallel on the current rayon pool; violations are
//! sorted before they are returned, so reports are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::bounded::{s_count, s_split, BoundVector};
use crate::class::{count_in_class, half_sum_target, signature_of};
use crate::engine::KostkaEngine;
use crate::partition::{
    adjacent_transfer_chain, adjacent_transfer_index, compositions_of, cover_chain, covers,
    dominates, partitions_of, Composition, MoveKind, Partition,
};
use crate::tableau::{count_ssyt, enumerate_ssyt, skew_shapes, straight_shapes, SkewShape};
use crate::Count;

pub(crate) fn count_as_string<S: Serializer>(v: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    /// The case that failed, e.g. `shape (3,1) mu (2,2)`.
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl Report {
    fn from_parts(suite: &str, parts: Vec<(u64, Vec<Violation>)>) -> Self {
        let checked = parts.iter().map(|(c, _)| c).sum();
        let mut violations: Vec<Violation> = parts.into_iter().flat_map(|(_, v)| v).collect();
        violations.sort();
        Report {
            suite: suite.to_string(),
            checked,
            violations,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// `suite: N checks, M violations`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} checks, {} violations",
            self.suite,
            self.checked,
            self.violations.len()
        )
    }

    /// Summary line followed by one indented line per violation.
    pub fn to_text(&self) -> String {
        let mut out = self.summary();
        for v in &self.violations {
            out.push_str(&format!("\n  {}: {}", v.subject, v.detail));
        }
        out
    }
}

fn violation(subject: impl Into<String>, detail: impl Into<String>) -> Violation {
    Violation {
        subject: subject.into(),
        detail: detail.into(),
    }
}

/// Any Kostka number oracle; the default suites use [`KostkaEngine`].
pub type KostkaFn<'a> = dyn Fn(&SkewShape, &Composition) -> Count + Sync + 'a;

/// `K(λ, μ) > 0` exactly when `λ ⊵ μ`, for all `λ, μ ⊢ m`, `m <= n`.
pub fn verify_theorem1(n: usize) -> Report {
    let engine = KostkaEngine::new();
    verify_theorem1_with(n, &|s, c| engine.kostka(s, c).expect("sizes agree"))
}

pub fn verify_theorem1_with(n: usize, kostka: &KostkaFn) -> Report {
    let shapes: Vec<SkewShape> = (0..=n).flat_map(straight_shapes).collect();
    let parts = shapes
        .par_iter()
        .map(|shape| {
            let lambda = shape.outer();
            let mut bad = Vec::new();
            let contents = partitions_of(lambda.size());
            for mu in &contents {
                let k = kostka(shape, &mu.to_composition());
                let dom = dominates(lambda, mu).expect("sizes agree");
                if k.is_zero() == dom {
                    bad.push(violation(
                        format!("lambda {lambda} mu {mu}"),
                        format!("K = {k} but dominance is {dom}"),
                    ));
                }
            }
            (contents.len() as u64, bad)
        })
        .collect();
    Report::from_parts("theorem1", parts)
}

/// `K(λ, μ) <= K(λ, ν)` whenever `μ ⊵ ν`, over straight shapes of at most
/// `n` cells and, with `include_skew`, skew shapes of at most `n` cells and
/// at most four rows.
pub fn verify_monotonicity(n: usize, include_skew: bool) -> Report {
    let engine = KostkaEngine::new();
    verify_monotonicity_with(n, include_skew, &|s, c| {
        engine.kostka(s, c).expect("sizes agree")
    })
}

pub fn verify_monotonicity_with(n: usize, include_skew: bool, kostka: &KostkaFn) -> Report {
    let mut shapes: Vec<SkewShape> = (0..=n).flat_map(straight_shapes).collect();
    if include_skew {
        shapes.extend((0..=n).flat_map(|m| skew_shapes(m, 4)));
    }
    let parts = shapes
        .par_iter()
        .map(|shape| {
            let contents = partitions_of(shape.size());
            let values: Vec<Count> = contents
                .iter()
                .map(|mu| kostka(shape, &mu.to_composition()))
                .collect();
            let mut checked = 0;
            let mut bad = Vec::new();
            for (a, mu) in contents.iter().enumerate() {
                for (b, nu) in contents.iter().enumerate() {
                    if !dominates(mu, nu).expect("sizes agree") {
                        continue;
                    }
                    checked += 1;
                    if values[a] > values[b] {
                        bad.push(violation(
                            format!("shape {shape} mu {mu} nu {nu}"),
                            format!("K(mu) = {} > K(nu) = {}", values[a], values[b]),
                        ));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let name = if include_skew {
        "monotonicity (straight and skew)"
    } else {
        "monotonicity (straight)"
    };
    Report::from_parts(name, parts)
}

/// Histogram of `y_1 + ... + y_r` over all `0 <= y_k <= x_k`, by listing
/// every `y`.
fn brute_force_sums(x: &[usize]) -> Vec<u64> {
    let mut hist = vec![0u64; x.iter().sum::<usize>() + 1];
    let mut y = vec![0usize; x.len()];
    loop {
        hist[y.iter().sum::<usize>()] += 1;
        let mut k = 0;
        while k < x.len() && y[k] == x[k] {
            y[k] = 0;
            k += 1;
        }
        if k == x.len() {
            return hist;
        }
        y[k] += 1;
    }
}

/// Bounded-composition counts for every `x` with at most `max_len` entries,
/// each at most `max_entry`: agreement with brute force, the `a <-> m - a`
/// symmetry, monotonicity towards `m / 2`, the first-coordinate split, and
/// the total `Π (x_k + 1)`.
pub fn verify_bounded_counts(max_len: usize, max_entry: usize) -> Report {
    let mut vectors = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|v: &Vec<usize>| {
                (0..=max_entry).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
        vectors.extend(frontier.iter().cloned());
    }
    let parts = vectors
        .par_iter()
        .map(|raw| {
            let x = BoundVector::new(raw.clone());
            let m = x.total() as i64;
            let subject = format!("x = {raw:?}");
            let mut bad = Vec::new();
            let mut checked = 0u64;
            let hist = brute_force_sums(raw);
            let counts: Vec<Count> = (-1..=m + 1).map(|a| s_count(&x, a)).collect();
            let at = |a: i64| &counts[(a + 1) as usize];

            for a in -1..=m + 1 {
                checked += 1;
                let expect = if (0..=m).contains(&a) {
                    Count::from(hist[a as usize])
                } else {
                    Count::zero()
                };
                if *at(a) != expect {
                    bad.push(violation(&subject, format!("S(x; {a}) = {} but brute force gives {expect}", at(a))));
                }
                if (-1..=m + 1).contains(&(m - a)) && at(a) != at(m - a) {
                    bad.push(violation(&subject, format!("S(x; {a}) != S(x; {})", m - a)));
                }
                if let Ok((t, u)) = s_split(&x, a) {
                    if &(t.clone() + &u) != at(a) {
                        bad.push(violation(&subject, format!("T + U = {t} + {u} != S(x; {a})")));
                    }
                }
                for b in -1..=m + 1 {
                    // |a - m/2| >= |b - m/2|, doubled to stay in integers
                    if (2 * a - m).abs() >= (2 * b - m).abs() {
                        checked += 1;
                        if at(a) > at(b) {
                            bad.push(violation(
                                &subject,
                                format!("S(x; {a}) = {} > S(x; {b}) = {}", at(a), at(b)),
                            ));
                        }
                    }
                }
            }
            let total: Count = (0..=m).map(|a| at(a).clone()).sum();
            let product: Count = raw.iter().map(|&e| Count::from(e + 1)).product();
            checked += 1;
            if total != product {
                bad.push(violation(&subject, format!("sum of S = {total} != product {product}")));
            }
            (checked, bad)
        })
        .collect();
    Report::from_parts("bounded counts", parts)
}

/// Straight shapes of at most `max_cells` cells, then skew shapes of at most
/// `max_cells` cells and `skew_rows` rows.
pub fn shapes_up_to(max_cells: usize, skew_rows: usize) -> Vec<SkewShape> {
    let mut shapes: Vec<SkewShape> = (0..=max_cells).flat_map(straight_shapes).collect();
    shapes.extend((0..=max_cells).flat_map(|m| skew_shapes(m, skew_rows)));
    shapes
}

/// For every shape (see [`shapes_up_to`]), every content composition with at
/// most as many parts as cells, and every `i` with `μ_i > μ_{i+1}`: the
/// transfer `μ -> ν` does not decrease the Kostka number, and the same holds
/// class by class. Class counts from [`count_in_class`] are also checked
/// against direct grouping of enumerated tableaux.
pub fn verify_adjacent_transfer(max_cells: usize, skew_rows: usize) -> Report {
    let shapes = shapes_up_to(max_cells, skew_rows);
    let parts = shapes
        .par_iter()
        .map(|shape| {
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for mu in compositions_of(shape.size(), shape.size()) {
                for i in 1..=mu.len() {
                    if mu.part(i) <= mu.part(i + 1) {
                        continue;
                    }
                    checked += 1;
                    let subject = format!("shape {shape} mu {mu} i {i}");
                    bad.extend(check_transfer(shape, &mu, i).into_iter().map(|d| violation(&subject, d)));
                }
            }
            (checked, bad)
        })
        .collect();
    Report::from_parts("adjacent transfer", parts)
}

fn check_transfer(shape: &SkewShape, mu: &Composition, i: usize) -> Vec<String> {
    let nu = mu.adjacent_transfer(i).expect("precondition checked");
    let mut bad = Vec::new();
    let tabs_mu = enumerate_ssyt(shape, mu).expect("sizes agree");
    let tabs_nu = enumerate_ssyt(shape, &nu).expect("sizes agree");
    if tabs_mu.len() > tabs_nu.len() {
        bad.push(format!("K(mu) = {} > K(nu) = {}", tabs_mu.len(), tabs_nu.len()));
    }

    let mut grouped: BTreeMap<_, (u64, u64)> = BTreeMap::new();
    for (tabs, slot) in [(&tabs_mu, 0), (&tabs_nu, 1)] {
        for t in tabs {
            let sig = signature_of(t, i).expect("enumerated tableaux are semistandard");
            for &cell in sig.available() {
                let (r, c) = cell;
                if sig.available().contains(&(r + 1, c))
                    && (t.entry(cell) != Some(i) || t.entry((r + 1, c)) != Some(i + 1))
                {
                    bad.push(format!("column {c} pair at rows {r},{} is not i over i+1", r + 1));
                }
            }
            let e = grouped.entry(sig).or_default();
            if slot == 0 {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
    }
    for (sig, (direct_mu, direct_nu)) in &grouped {
        let formula_mu = count_in_class(sig, mu).expect("sizes agree");
        let formula_nu = count_in_class(sig, &nu).expect("sizes agree");
        let tag = sig.render().replace('\n', "/");
        if formula_mu != Count::from(*direct_mu) || formula_nu != Count::from(*direct_nu) {
            bad.push(format!(
                "class [{tag}]: formula gives ({formula_mu}, {formula_nu}), enumeration ({direct_mu}, {direct_nu})"
            ));
        }
        if formula_mu > formula_nu {
            bad.push(format!("class [{tag}]: {formula_mu} tableaux for mu > {formula_nu} for nu"));
        }
        for target in [mu, &nu] {
            if sig.matches_outside(target) {
                let direct = target.part(i) as i64 - sig.forced_pairs() as i64;
                if half_sum_target(sig, target) != Some(direct) {
                    bad.push(format!(
                        "class [{tag}] content {target}: half-sum target {:?} != {direct}",
                        half_sum_target(sig, target)
                    ));
                }
            }
        }
    }
    bad
}

/// Cover sets of the dominance order on partitions of `n`, computed from the
/// full relation: `μ` covers `ν` when `μ ⊳ ν` and nothing lies strictly
/// between.
pub fn brute_force_covers(n: usize) -> BTreeMap<Partition, BTreeSet<Partition>> {
    let all = partitions_of(n);
    let strict: Vec<Vec<bool>> = all
        .iter()
        .map(|a| {
            all.iter()
                .map(|b| a != b && dominates(a, b).expect("same size"))
                .collect()
        })
        .collect();
    let k = all.len();
    all.iter()
        .enumerate()
        .map(|(a, mu)| {
            let below = (0..k)
                .filter(|&b| strict[a][b] && !(0..k).any(|c| strict[a][c] && strict[c][b]))
                .map(|b| all[b].clone())
                .collect();
            (mu.clone(), below)
        })
        .collect()
}

/// [`covers`] against [`brute_force_covers`] for all `n <= max_n`, plus move
/// bookkeeping and every [`cover_chain`] between comparable partitions.
pub fn verify_covers(max_n: usize) -> Report {
    let parts = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut checked = 0u64;
            let mut bad = Vec::new();
            let expected = brute_force_covers(n);
            for (mu, want) in &expected {
                checked += 1;
                let got_list = covers(mu);
                let got: BTreeSet<Partition> = got_list.iter().map(|(_, p)| p.clone()).collect();
                if got.len() != got_list.len() {
                    bad.push(violation(format!("mu {mu}"), "duplicate covers"));
                }
                if &got != want {
                    bad.push(violation(
                        format!("mu {mu}"),
                        format!("covers {got:?}, brute force {want:?}"),
                    ));
                }
                for (mv, nu) in &got_list {
                    let shape_ok = match mv.kind {
                        MoveKind::AdjacentRow => mv.j == mv.i + 1,
                        MoveKind::AdjacentColumn => mv.j >= mv.i + 2,
                    };
                    let moved = nu.part(mv.i) + 1 == mu.part(mv.i) && nu.part(mv.j) == mu.part(mv.j) + 1;
                    if !shape_ok || !moved || mv.apply(mu).as_ref() != Ok(nu) {
                        bad.push(violation(format!("mu {mu}"), format!("move {mv} does not produce {nu}")));
                    }
                }
            }
            for mu in expected.keys() {
                for nu in expected.keys() {
                    if !dominates(mu, nu).expect("same size") {
                        continue;
                    }
                    checked += 1;
                    let chain = cover_chain(mu, nu).expect("comparable");
                    let ends_ok = chain.first() == Some(mu) && chain.last() == Some(nu);
                    let steps_ok = chain.windows(2).all(|w| expected[&w[0]].contains(&w[1]));
                    if !ends_ok || !steps_ok {
                        bad.push(violation(format!("chain {mu} -> {nu}"), format!("{chain:?}")));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    Report::from_parts("covers", parts)
}

/// For every cover `μ -> ν` with `n <= max_n`: column moves expand into the
/// intermediate compositions `ξ`, every step of `μ, ξ.., ν` is a single
/// adjacent transfer from a strictly larger part, and `K(λ, ·)` never
/// decreases along the chain for any `λ ⊢ n`.
pub fn verify_transfer_chains(max_n: usize) -> Report {
    let engine = KostkaEngine::new();
    let mus: Vec<Partition> = (0..=max_n).flat_map(partitions_of).collect();
    let parts = mus
        .par_iter()
        .map(|mu| {
            let mut checked = 0u64;
            let mut bad = Vec::new();
            let lambdas = straight_shapes(mu.size());
            for (mv, nu) in covers(mu) {
                checked += 1;
                let subject = format!("mu {mu} move {mv}");
                let middle = match mv.kind {
                    MoveKind::AdjacentRow => Vec::new(),
                    MoveKind::AdjacentColumn => match adjacent_transfer_chain(mu, &mv) {
                        Ok(xi) => {
                            if xi.len() != mv.j - mv.i - 1 {
                                bad.push(violation(&subject, format!("{} intermediates", xi.len())));
                            }
                            xi
                        }
                        Err(e) => {
                            bad.push(violation(&subject, e.to_string()));
                            continue;
                        }
                    },
                };
                let mut full = vec![mu.to_composition()];
                full.extend(middle);
                full.push(nu.to_composition());
                for w in full.windows(2) {
                    if adjacent_transfer_index(&w[0], &w[1]).is_none() {
                        bad.push(violation(&subject, format!("{} -> {} is not an adjacent transfer", w[0], w[1])));
                    }
                }
                for shape in &lambdas {
                    checked += 1;
                    let ks: Vec<Count> = full
                        .iter()
                        .map(|c| engine.kostka(shape, c).expect("sizes agree"))
                        .collect();
                    if ks.windows(2).any(|w| w[0] > w[1]) {
                        bad.push(violation(
                            &subject,
                            format!("K({shape}, ·) along chain: {}", join(&ks)),
                        ));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    Report::from_parts("transfer chains", parts)
}

fn join(ks: &[Count]) -> String {
    ks.iter().map(Count::to_string).collect::<Vec<_>>().join(" <= ")
}

/// Memoized strip recursion against brute-force enumeration, for every shape
/// of [`shapes_up_to`] and every content with at most `max_content_len` parts.
pub fn verify_oracle(max_cells: usize, skew_rows: usize, max_content_len: usize) -> Report {
    let shapes = shapes_up_to(max_cells, skew_rows);
    let parts = shapes
        .par_iter()
        .map(|shape| {
            // one table per shape keeps every lookup small
            let engine = KostkaEngine::new();
            let contents = compositions_of(shape.size(), max_content_len);
            let mut bad = Vec::new();
            for mu in &contents {
                let dp = engine.kostka(shape, mu).expect("sizes agree");
                let brute = count_ssyt(shape, mu).expect("sizes agree");
                if dp != Count::from(brute) {
                    bad.push(violation(
                        format!("shape {shape} mu {mu}"),
                        format!("strip recursion {dp}, enumeration {brute}"),
                    ));
                }
            }
            (contents.len() as u64, bad)
        })
        .collect();
    Report::from_parts("oracle equivalence", parts)
}

/// Next permutation in lexicographic order, `false` after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(k) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let l = v.iter().rposition(|&x| x > v[k]).expect("v[k+1] > v[k]");
    v.swap(k, l);
    v[k + 1..].reverse();
    true
}

/// `K(shape, σμ) = K(shape, μ)` for every rearrangement `σμ` of every
/// partition `μ` padded with zeros to as many parts as the shape has cells.
pub fn verify_permutation_invariance(max_cells: usize, skew_rows: usize) -> Report {
    let engine = KostkaEngine::new();
    let shapes = shapes_up_to(max_cells, skew_rows);
    let parts = shapes
        .par_iter()
        .map(|shape| {
            let m = shape.size();
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for mu in partitions_of(m) {
                let base = engine.kostka(shape, &mu.to_composition()).expect("sizes agree");
                let mut perm = mu.parts().to_vec();
                perm.resize(m, 0);
                perm.sort_unstable();
                loop {
                    checked += 1;
                    let sigma = Composition::new(perm.clone());
                    let k = engine.kostka(shape, &sigma).expect("sizes agree");
                    if k != base {
                        bad.push(violation(
                            format!("shape {shape} mu {mu}"),
                            format!("K at {sigma} is {k}, K at mu is {base}"),
                        ));
                    }
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    Report::from_parts("permutation invariance", parts)
}

/// Everything the command-line `verify` runs, in order, each suite reporting
/// independently.
pub fn full_suite(max_n: usize) -> Vec<Report> {
    vec![
        verify_theorem1(max_n),
        verify_monotonicity(max_n, false),
        verify_monotonicity(max_n, true),
        verify_bounded_counts(4, 4),
        verify_adjacent_transfer(max_n, 4),
        verify_covers(max_n),
        verify_transfer_chains(max_n),
        verify_oracle(max_n, 4, max_n),
        verify_permutation_invariance(max_n, 4),
    ]
}
