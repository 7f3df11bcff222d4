//! Semistandard tableaux grouped by their entries outside `{i, i+1}`.
//!
//! Two tableaux are in the same class when every entry other than `i` and
//! `i + 1` sits in the same cell. Inside a class the cells holding `i` or
//! `i + 1` are the *available* cells. A column has at most two of them; when
//! it has two they are forced to read `i` above `i + 1`. The remaining
//! single-cell columns in row `j` number `x_j`, and a member of the class is
//! fixed by how many `i`s go into each row's run of such columns, so class
//! sizes reduce to [`s_count`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bounded::{s_count, BoundVector};
use crate::error::{Error, Result};
use crate::partition::Composition;
use crate::tableau::{count_ssyt, enumerate_ssyt, render_rows, Cell, SkewShape, Tableau};
use crate::Count;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSignature {
    shape: SkewShape,
    i: usize,
    skeleton: BTreeMap<Cell, usize>,
    available: BTreeSet<Cell>,
    forced_pairs: usize,
    row_counts: Vec<usize>,
}

impl ClassSignature {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn index(&self) -> usize {
        self.i
    }

    /// Fixed entries, i.e. every entry other than `i` and `i + 1`.
    pub fn skeleton(&self) -> &BTreeMap<Cell, usize> {
        &self.skeleton
    }

    /// Cells left for `i` and `i + 1`, row-major.
    pub fn available(&self) -> &BTreeSet<Cell> {
        &self.available
    }

    /// Columns with two available cells.
    pub fn forced_pairs(&self) -> usize {
        self.forced_pairs
    }

    /// `x_j` for each row `j`: columns whose only available cell is in row `j`.
    pub fn row_counts(&self) -> &[usize] {
        &self.row_counts
    }

    /// Multiplicity of each skeleton entry, indexed by entry value - 1.
    fn skeleton_content(&self) -> Vec<usize> {
        let max = self.skeleton.values().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &v in self.skeleton.values() {
            counts[v - 1] += 1;
        }
        counts
    }

    /// Whether the skeleton supplies exactly `target_j` copies of every
    /// `j` outside `{i, i+1}`.
    pub fn matches_outside(&self, target: &Composition) -> bool {
        let skel = self.skeleton_content();
        let upto = skel.len().max(target.len());
        (1..=upto)
            .filter(|&j| j != self.i && j != self.i + 1)
            .all(|j| skel.get(j - 1).copied().unwrap_or(0) == target.part(j))
    }

    /// Skeleton drawn like a tableau, available cells as `*`.
    pub fn render(&self) -> String {
        render_rows(&self.shape, |cell| match self.skeleton.get(&cell) {
            Some(v) => v.to_string(),
            None => "*".to_string(),
        })
    }
}

/// The class of a semistandard tableau `t` with respect to `i` (1-based).
pub fn signature_of(t: &Tableau, i: usize) -> Result<ClassSignature> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let shape = t.shape().clone();
    let mut skeleton = BTreeMap::new();
    let mut available = BTreeSet::new();
    let mut by_column: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ((r, c), v) in t.entries() {
        if v == i || v == i + 1 {
            available.insert((r, c));
            by_column.entry(c).or_default().push(r);
        } else {
            skeleton.insert((r, c), v);
        }
    }

    let mut forced_pairs = 0;
    let mut row_counts = vec![0; shape.rows()];
    let mut single_columns: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
    for (&c, rows) in &by_column {
        match rows.as_slice() {
            [r] => {
                row_counts[r - 1] += 1;
                single_columns[r - 1].push(c);
            }
            [_, _] => forced_pairs += 1,
            _ => unreachable!("column {c} holds more than two entries from {{{i}, {}}}", i + 1),
        }
    }
    for (k, cols) in single_columns.iter().enumerate() {
        assert!(
            cols.windows(2).all(|w| w[1] == w[0] + 1),
            "single available cells in row {} are not consecutive: {:?}",
            k + 1,
            cols
        );
    }
    debug_assert_eq!(2 * forced_pairs + row_counts.iter().sum::<usize>(), available.len());

    Ok(ClassSignature {
        shape,
        i,
        skeleton,
        available,
        forced_pairs,
        row_counts,
    })
}

/// Number of semistandard tableaux in the class of `sig` with content `target`.
///
/// Zero unless the skeleton already matches `target` away from `i, i+1`.
/// Otherwise the `i`s are the `d` forced ones plus `y_1 + y_2 + ...`, so the
/// count is `s_count(x, target_i - d)`.
pub fn count_in_class(sig: &ClassSignature, target: &Composition) -> Result<Count> {
    if target.size() != sig.shape.size() {
        return Err(Error::SizeMismatch {
            left: sig.shape.size(),
            right: target.size(),
        });
    }
    if !sig.matches_outside(target) {
        return Ok(Count::default());
    }
    let a = target.part(sig.i) as i64 - sig.forced_pairs as i64;
    Ok(s_count(&BoundVector::new(sig.row_counts.clone()), a))
}

/// `(target_i - target_{i+1} + x_1 + x_2 + ...) / 2`, or `None` when the
/// numerator is odd.
pub fn half_sum_target(sig: &ClassSignature, target: &Composition) -> Option<i64> {
    let num = target.part(sig.i) as i64 - target.part(sig.i + 1) as i64
        + sig.row_counts.iter().sum::<usize>() as i64;
    (num % 2 == 0).then_some(num / 2)
}

/// `(K(shape, mu), K(shape, nu))` by enumeration, where `nu` moves one unit
/// from part `i` to part `i + 1` of `mu`. Requires `mu_i > mu_{i+1}`.
pub fn adjacent_transfer_holds(
    shape: &SkewShape,
    mu: &Composition,
    i: usize,
) -> Result<(Count, Count)> {
    let nu = mu.adjacent_transfer(i)?;
    Ok((
        Count::from(count_ssyt(shape, mu)?),
        Count::from(count_ssyt(shape, &nu)?),
    ))
}

/// One class with its member counts for `mu` and for the transferred `nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    #[serde(skip)]
    pub signature: ClassSignature,
    pub skeleton: String,
    pub forced_pairs: usize,
    pub row_counts: Vec<usize>,
    #[serde(serialize_with = "crate::verify::count_as_string")]
    pub mu_count: Count,
    #[serde(serialize_with = "crate::verify::count_as_string")]
    pub nu_count: Count,
}

/// Every class meeting content `mu` or its transfer `nu`, with both counts.
/// Rows are sorted by signature.
pub fn class_breakdown(shape: &SkewShape, mu: &Composition, i: usize) -> Result<Vec<ClassRow>> {
    let nu = mu.adjacent_transfer(i)?;
    let mut classes = BTreeSet::new();
    for content in [mu, &nu] {
        for t in enumerate_ssyt(shape, content)? {
            classes.insert(signature_of(&t, i)?);
        }
    }
    classes
        .into_iter()
        .map(|sig| {
            Ok(ClassRow {
                skeleton: sig.render(),
                forced_pairs: sig.forced_pairs,
                row_counts: sig.row_counts.clone(),
                mu_count: count_in_class(&sig, mu)?,
                nu_count: count_in_class(&sig, &nu)?,
                signature: sig,
            })
        })
        .collect()
}
