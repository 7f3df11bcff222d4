//! Kostka numbers by memoized horizontal-strip recursion.
//!
//! In a semistandard tableau the cells holding the largest entry `k` form a
//! horizontal strip along the outer boundary. Removing them leaves a
//! semistandard tableau of a smaller skew shape with the same inner
//! partition, so
//!
//! ```text
//! K(λ/ρ, (μ_1, ..., μ_k)) = Σ K(κ/ρ, (μ_1, ..., μ_{k-1}))
//! ```
//!
//! over all `κ` with `ρ ⊆ κ ⊆ λ`, `λ/κ` a horizontal strip of `μ_k` cells.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::RwLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dominates, partitions_of, Composition, Partition};
use crate::tableau::SkewShape;
use crate::Count;

/// Memo key: a skew shape and a content with trailing zeros stripped,
/// packed into one vector as `[len(outer), outer.., len(inner), inner.., content..]`.
///
/// Content order is kept as given; permuted contents get distinct keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KostkaKey(Vec<usize>);

impl KostkaKey {
    pub fn new(shape: &SkewShape, content: &Composition) -> Self {
        KostkaKey::pack(
            shape.outer().parts(),
            shape.inner().parts(),
            content.trimmed(),
        )
    }

    fn pack(outer: &[usize], inner: &[usize], content: &[usize]) -> Self {
        let mut key = Vec::with_capacity(outer.len() + inner.len() + content.len() + 2);
        key.push(outer.len());
        key.extend_from_slice(outer);
        key.push(inner.len());
        key.extend_from_slice(inner);
        key.extend_from_slice(content);
        KostkaKey(key)
    }
}

/// Kostka number calculator with an optional shared memo table.
///
/// The table sits behind a lock, so one engine can serve many threads; it
/// only ever stores finished values, so lookups never change results.
pub struct KostkaEngine {
    cache: Option<RwLock<HashMap<KostkaKey, Count>>>,
    /// Maximum number of memo entries. `None` means unbounded (the default);
    /// once the cap is reached new values are computed but not stored.
    capacity: Option<usize>,
}

impl Default for KostkaEngine {
    fn default() -> Self {
        KostkaEngine::new()
    }
}

impl KostkaEngine {
    pub fn new() -> Self {
        KostkaEngine {
            cache: Some(RwLock::new(HashMap::new())),
            capacity: None,
        }
    }

    pub fn uncached() -> Self {
        KostkaEngine {
            cache: None,
            capacity: None,
        }
    }

    pub fn with_capacity_limit(capacity: usize) -> Self {
        KostkaEngine {
            cache: Some(RwLock::new(HashMap::new())),
            capacity: Some(capacity),
        }
    }

    pub fn cache_len(&self) -> usize {
        self.cache
            .as_ref()
            .map_or(0, |c| c.read().expect("cache lock").len())
    }

    /// Number of semistandard tableaux of `shape` with content `content`.
    pub fn kostka(&self, shape: &SkewShape, content: &Composition) -> Result<Count> {
        if shape.size() != content.size() {
            return Err(Error::SizeMismatch {
                left: shape.size(),
                right: content.size(),
            });
        }
        Ok(self.count(
            shape.outer().parts(),
            shape.inner().parts(),
            content.trimmed(),
        ))
    }

    fn count(&self, outer: &[usize], inner: &[usize], content: &[usize]) -> Count {
        let Some((&last, rest)) = content.split_last() else {
            // sizes agree, so the shape is empty
            return Count::one();
        };
        if rest.is_empty() {
            // a single value fills the shape iff no column has two cells
            let strip = (0..outer.len())
                .all(|r| inner.get(r).copied().unwrap_or(0) >= outer.get(r + 1).copied().unwrap_or(0));
            return if strip { Count::one() } else { Count::zero() };
        }
        let key = KostkaKey::pack(outer, inner, content);
        if let Some(cache) = &self.cache {
            if let Some(v) = cache.read().expect("cache lock").get(&key) {
                return v.clone();
            }
        }

        let rest = trim(rest);
        let mut total = Count::zero();
        for_each_strip(outer, inner, last, |smaller| {
            total += self.count(trim(smaller), inner, rest);
        });

        if let Some(cache) = &self.cache {
            let mut cache = cache.write().expect("cache lock");
            if self.capacity.is_none_or(|cap| cache.len() < cap) {
                cache.insert(key, total.clone());
            }
        }
        total
    }

    /// The full matrix over `partitions_of(n)`, rows computed in parallel.
    pub fn matrix(&self, n: usize) -> KostkaMatrix {
        let order = partitions_of(n);
        let values = order
            .par_iter()
            .map(|lambda| {
                let shape = SkewShape::straight(lambda.clone());
                order
                    .iter()
                    .map(|mu| {
                        self.kostka(&shape, &mu.to_composition())
                            .expect("equal sizes")
                    })
                    .collect()
            })
            .collect();
        KostkaMatrix { n, order, values }
    }
}

fn trim(parts: &[usize]) -> &[usize] {
    let end = parts.iter().rposition(|&p| p != 0).map_or(0, |k| k + 1);
    &parts[..end]
}

/// Calls `visit` with every `κ` (untrimmed, same length as `outer`) such that
/// `inner ⊆ κ ⊆ outer` and `outer/κ` is a horizontal strip of `size` cells.
fn for_each_strip(outer: &[usize], inner: &[usize], size: usize, mut visit: impl FnMut(&[usize])) {
    let rows = outer.len();
    // lowest allowed κ_r: keep the strip to one cell per column and κ ⊇ inner
    let low: Vec<usize> = (0..rows)
        .map(|r| {
            let below = outer.get(r + 1).copied().unwrap_or(0);
            let inn = inner.get(r).copied().unwrap_or(0);
            below.max(inn)
        })
        .collect();
    // room[r]: most cells removable from rows r..
    let mut room = vec![0; rows + 1];
    for r in (0..rows).rev() {
        room[r] = room[r + 1] + outer[r] - low[r];
    }
    if room[0] < size {
        return;
    }

    fn go(
        r: usize,
        left: usize,
        outer: &[usize],
        low: &[usize],
        room: &[usize],
        kappa: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if r == outer.len() {
            if left == 0 {
                visit(kappa);
            }
            return;
        }
        let max_take = (outer[r] - low[r]).min(left);
        let min_take = left.saturating_sub(room[r + 1]);
        for take in min_take..=max_take {
            kappa[r] = outer[r] - take;
            go(r + 1, left - take, outer, low, room, kappa, visit);
        }
        kappa[r] = outer[r];
    }

    let mut kappa = outer.to_vec();
    go(0, size, outer, &low, &room, &mut kappa, &mut visit);
}

/// Kostka number with a throwaway memo table.
pub fn kostka(shape: &SkewShape, content: &Composition) -> Result<Count> {
    KostkaEngine::new().kostka(shape, content)
}

/// All Kostka numbers `K(λ, μ)` for `λ, μ ⊢ n`.
pub fn kostka_matrix(n: usize) -> KostkaMatrix {
    KostkaEngine::new().matrix(n)
}

/// `values[a][b] = K(order[a], order[b])`, `order` being [`partitions_of`]`(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub n: usize,
    pub order: Vec<Partition>,
    pub values: Vec<Vec<Count>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    partitions: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl KostkaMatrix {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&Count> {
        let a = self.order.iter().position(|p| p == lambda)?;
        let b = self.order.iter().position(|p| p == mu)?;
        Some(&self.values[a][b])
    }

    /// Pairs `(λ, μ)` breaking "diagonal is 1, positive iff λ ⊵ μ".
    pub fn invariant_failures(&self) -> Vec<(Partition, Partition)> {
        let mut bad = Vec::new();
        for (a, lambda) in self.order.iter().enumerate() {
            for (b, mu) in self.order.iter().enumerate() {
                let v = &self.values[a][b];
                let ok = if a == b {
                    v.is_one()
                } else {
                    !v.is_zero() == dominates(lambda, mu).expect("equal sizes")
                };
                if !ok {
                    bad.push((lambda.clone(), mu.clone()));
                }
            }
        }
        bad
    }

    /// Header row and first column hold partitions as comma-separated text.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.order.iter().map(Partition::to_text));
        w.write_record(&header).expect("in-memory write");
        for (lambda, row) in self.order.iter().zip(&self.values) {
            let mut record = vec![lambda.to_text()];
            record.extend(row.iter().map(Count::to_string));
            w.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// `{"n": .., "partitions": [..], "matrix": [[..]]}` with counts as
    /// decimal strings.
    pub fn to_json(&self) -> String {
        let doc = MatrixJson {
            n: self.n,
            partitions: self.order.iter().map(Partition::to_text).collect(),
            matrix: self
                .values
                .iter()
                .map(|row| row.iter().map(Count::to_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: "matrix JSON".to_string(),
            reason,
        };
        let doc: MatrixJson = serde_json::from_str(input).map_err(|e| parse_err(e.to_string()))?;
        let order = doc
            .partitions
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Partition>>>()?;
        let values = doc
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.parse::<Count>().map_err(|e| parse_err(format!("{s:?}: {e}"))))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Count>>>>()?;
        if values.len() != order.len() || values.iter().any(|r| r.len() != order.len()) {
            return Err(parse_err("matrix is not square over the partition list".into()));
        }
        Ok(KostkaMatrix {
            n: doc.n,
            order,
            values,
        })
    }

    /// Space-aligned table with partitions labelling rows and columns.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.order.iter().map(|p| p.to_string()).collect();
        let cells: Vec<Vec<String>> = self
            .values
            .iter()
            .map(|row| row.iter().map(Count::to_string).collect())
            .collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..labels.len())
            .map(|b| {
                cells
                    .iter()
                    .map(|row| row[b].len())
                    .chain([labels[b].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:label_w$}", "");
        for (b, l) in labels.iter().enumerate() {
            let _ = write!(out, "  {:>w$}", l, w = col_w[b]);
        }
        out.push('\n');
        for (a, row) in cells.iter().enumerate() {
            let _ = write!(out, "{:label_w$}", labels[a]);
            for (b, v) in row.iter().enumerate() {
                let _ = write!(out, "  {:>w$}", v, w = col_w[b]);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(outer.parse().unwrap(), inner.parse().unwrap()).unwrap()
    }

    fn k(outer: &str, inner: &str, content: &str) -> u64 {
        let v = kostka(&shape(outer, inner), &content.parse().unwrap()).unwrap();
        u64::try_from(v).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(k("2,1", "", "1,1,1"), 2);
        assert_eq!(k("2,1", "", "2,1"), 1);
        assert_eq!(k("2,1", "", "1,2"), 1);
        assert_eq!(k("", "", ""), 1);
        assert_eq!(k("1,1", "", "2"), 0);
        assert_eq!(k("3,2,1", "", "1,1,1,1,1,1"), 16);
        // two disconnected cells
        assert_eq!(k("2,1", "1", "1,1"), 2);
        assert_eq!(k("2,1", "1", "2"), 1);
        // zero parts in the middle behave as absent
        assert_eq!(k("2,1", "", "1,0,1,0,1"), 2);
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            kostka(&shape("2,1", ""), &"1,1".parse().unwrap()),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn matrix_four() {
        let m = kostka_matrix(4);
        assert_eq!(m.order.len(), 5);
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(m.get(&p("2,1,1"), &p("1,1,1,1")), Some(&Count::from(3u32)));
        assert!(m.invariant_failures().is_empty());
        assert!(m.values[0].iter().all(|v| v.is_one()));
        // dominance-compatible order: zero below the diagonal
        for a in 0..5 {
            for b in 0..a {
                assert!(m.values[a][b].is_zero());
            }
        }
    }

    #[test]
    fn matrix_one_and_zero() {
        assert_eq!(kostka_matrix(1).values, vec![vec![Count::one()]]);
        assert_eq!(kostka_matrix(0).values, vec![vec![Count::one()]]);
    }

    #[test]
    fn capped_cache_agrees() {
        let full = KostkaEngine::new();
        let capped = KostkaEngine::with_capacity_limit(3);
        let none = KostkaEngine::uncached();
        let s = shape("4,3,1", "");
        for mu in crate::partition::compositions_of(8, 4) {
            let v = full.kostka(&s, &mu).unwrap();
            assert_eq!(capped.kostka(&s, &mu).unwrap(), v);
            assert_eq!(none.kostka(&s, &mu).unwrap(), v);
        }
        assert!(capped.cache_len() <= 3);
        assert_eq!(none.cache_len(), 0);
    }

    #[test]
    fn json_round_trip() {
        let m = kostka_matrix(5);
        let back = KostkaMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn csv_layout() {
        let csv = kostka_matrix(2).to_csv();
        assert_eq!(csv, ",2,\"1,1\"\n2,1,1\n\"1,1\",0,1\n");
    }
}
