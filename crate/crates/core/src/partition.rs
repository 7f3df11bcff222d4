//! Partitions, compositions, and the dominance order.
//!
//! Parts are stored 0-based internally; every index that crosses the public
//! surface ([`CoverMove`], error messages, rendered output) is 1-based.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comma-separated text form without parentheses, e.g. `3,1`. Empty for `()`.
pub fn parts_to_text(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_parts(input: &str) -> Result<Vec<usize>> {
    let trimmed = input.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: format!("{:?}: {}", tok.trim(), e),
            })
        })
        .collect()
}

fn trim_zeros(parts: &[usize]) -> &[usize] {
    let end = parts.iter().rposition(|&p| p != 0).map_or(0, |k| k + 1);
    &parts[..end]
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        let len = trim_zeros(&parts).len();
        parts.truncate(len);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts_to_text(&parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `r` (1-based), zero beyond the length.
    pub fn part(&self, r: usize) -> usize {
        r.checked_sub(1)
            .and_then(|k| self.0.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn to_text(&self) -> String {
        parts_to_text(&self.0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Whether every part of `self` is at least the corresponding part of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", parts_to_text(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite sequence of non-negative integers. Trailing zeros are kept in
/// storage but ignored by equality, hashing, and ordering.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    /// All stored parts, trailing zeros included.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Parts with trailing zeros removed.
    pub fn trimmed(&self) -> &[usize] {
        trim_zeros(&self.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.0.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.trimmed().windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.0.clone())
    }

    pub fn to_text(&self) -> String {
        parts_to_text(&self.0)
    }

    /// Moves one unit from part `i` to part `i + 1` (1-based), extending with
    /// zeros as needed. Requires part `i` to exceed part `i + 1`.
    pub fn adjacent_transfer(&self, i: usize) -> Result<Composition> {
        let (hi, lo) = (self.part(i), self.part(i + 1));
        if i == 0 || hi <= lo {
            return Err(Error::TransferPrecondition { i, hi, lo });
        }
        let mut parts = self.0.clone();
        if parts.len() < i + 1 {
            parts.resize(i + 1, 0);
        }
        parts[i - 1] -= 1;
        parts[i] += 1;
        Ok(Composition(parts))
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

impl AsRef<[usize]> for Composition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Composition {}

impl Hash for Composition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", parts_to_text(&self.0))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a ⊵ b`: every prefix sum of `a` is at least the matching prefix sum of `b`.
///
/// Works for any mix of partitions and compositions. Fails with
/// [`Error::SizeMismatch`] when the totals differ.
pub fn dominates(a: impl AsRef<[usize]>, b: impl AsRef<[usize]>) -> Result<bool> {
    let (a, b) = (a.as_ref(), b.as_ref());
    let (na, nb) = (a.iter().sum::<usize>(), b.iter().sum::<usize>());
    if na != nb {
        return Err(Error::SizeMismatch {
            left: na,
            right: nb,
        });
    }
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` with at most `max_len` parts and a nonzero last part
/// (so no two are equal up to trailing zeros), in lexicographic order.
pub fn compositions_of(n: usize, max_len: usize) -> Vec<Composition> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 0..=rest {
            cur.push(p);
            go(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_len, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// One box from row `i` to row `i + 1`.
    AdjacentRow,
    /// One box from row `i` to row `j > i + 1`, landing in the column
    /// immediately left of where it left.
    AdjacentColumn,
}

/// A single dominance cover step: move one box from row `i` down to row `j`.
/// Both indices are 1-based; `j = i + 1` for [`MoveKind::AdjacentRow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverMove {
    pub kind: MoveKind,
    pub i: usize,
    pub j: usize,
}

impl CoverMove {
    pub fn row(i: usize) -> Self {
        CoverMove {
            kind: MoveKind::AdjacentRow,
            i,
            j: i + 1,
        }
    }

    pub fn column(i: usize, j: usize) -> Self {
        CoverMove {
            kind: MoveKind::AdjacentColumn,
            i,
            j,
        }
    }

    /// Applies the move, failing unless it is one of the covers of `mu`.
    pub fn apply(&self, mu: &Partition) -> Result<Partition> {
        covers(mu)
            .into_iter()
            .find(|(mv, _)| mv == self)
            .map(|(_, nu)| nu)
            .ok_or_else(|| Error::InvalidMove {
                mv: self.to_string(),
                partition: mu.to_text(),
            })
    }
}

impl fmt::Display for CoverMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::AdjacentRow => write!(f, "row-move i={}", self.i),
            MoveKind::AdjacentColumn => write!(f, "column-move i={} j={}", self.i, self.j),
        }
    }
}

fn move_box(parts: &[usize], from: usize, to: usize) -> Partition {
    let mut v = parts.to_vec();
    if v.len() <= to {
        v.resize(to + 1, 0);
    }
    v[from] -= 1;
    v[to] += 1;
    Partition(v)
}

/// Partitions covered by `mu` in the dominance order, each with the move that
/// produces it, sorted reverse-lexicographically by the covered partition.
pub fn covers(mu: &Partition) -> Vec<(CoverMove, Partition)> {
    let p = mu.parts();
    let at = |k: usize| p.get(k).copied().unwrap_or(0);
    let mut out = Vec::new();
    for i in 0..p.len() {
        let top = at(i);
        if top >= at(i + 1) + 2 {
            out.push((CoverMove::row(i + 1), move_box(p, i, i + 1)));
        }
        if top >= 2 {
            // rows i+1 .. j-1 sit exactly one below row i; row j sits two below.
            let mut j = i + 1;
            while at(j) == top - 1 {
                j += 1;
            }
            if j >= i + 2 && at(j) == top - 2 {
                out.push((CoverMove::column(i + 1, j + 1), move_box(p, i, j)));
            }
        }
    }
    out.sort_by(|a, b| b.1.cmp(&a.1));
    out.dedup_by(|a, b| a.1 == b.1);
    out
}

/// A saturated chain `mu = p0, p1, ..., pt = nu` in which every step is a cover.
///
/// Greedy: each step takes the first cover (reverse-lexicographic) that still
/// dominates `nu`.
pub fn cover_chain(mu: &Partition, nu: &Partition) -> Result<Vec<Partition>> {
    if !dominates(mu, nu)? {
        return Err(Error::NotComparable {
            from: mu.to_text(),
            to: nu.to_text(),
        });
    }
    let mut chain = vec![mu.clone()];
    let mut cur = mu.clone();
    while &cur != nu {
        let next = covers(&cur)
            .into_iter()
            .map(|(_, p)| p)
            .find(|p| dominates(p, nu).unwrap_or(false))
            .expect("a partition strictly dominating nu has a cover that dominates nu");
        chain.push(next.clone());
        cur = next;
    }
    Ok(chain)
}

/// Intermediate compositions `ξ^{i+1}, ..., ξ^{j-1}` splitting a column move
/// into single adjacent transfers: `ξ^k` takes one unit from part `i` and adds
/// it to part `k`.
pub fn adjacent_transfer_chain(mu: &Partition, mv: &CoverMove) -> Result<Vec<Composition>> {
    let invalid = || Error::InvalidMove {
        mv: mv.to_string(),
        partition: mu.to_text(),
    };
    if mv.kind != MoveKind::AdjacentColumn {
        return Err(invalid());
    }
    mv.apply(mu)?;
    let len = mu.len().max(mv.j);
    Ok((mv.i + 1..mv.j)
        .map(|k| {
            let mut parts = mu.parts().to_vec();
            parts.resize(len, 0);
            parts[mv.i - 1] -= 1;
            parts[k - 1] += 1;
            Composition(parts)
        })
        .collect())
}

/// If `to` is obtained from `from` by one adjacent transfer `r -> r + 1` with
/// `from_r > from_{r+1}`, returns `r` (1-based).
pub fn adjacent_transfer_index(from: &Composition, to: &Composition) -> Option<usize> {
    let len = from.len().max(to.len());
    let diffs: Vec<(usize, i64)> = (1..=len)
        .map(|k| (k, to.part(k) as i64 - from.part(k) as i64))
        .filter(|&(_, d)| d != 0)
        .collect();
    match diffs.as_slice() {
        [(r, -1), (s, 1)] if *s == r + 1 && from.part(*r) > from.part(*s) => Some(*r),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(p("2,2"), p("2,1,1")).unwrap());
        assert!(!dominates(p("3,3"), p("4,1,1")).unwrap());
        assert!(!dominates(p("4,1,1"), p("3,3")).unwrap());
        assert_eq!(
            dominates(p("2"), p("1")),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn dominance_mixes_compositions() {
        let c: Composition = "1,2,0".parse().unwrap();
        assert!(dominates(p("2,1"), &c).unwrap());
        assert!(!dominates(&c, p("2,1")).unwrap());
    }

    #[test]
    fn parsing() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("3,1,0"), p("3,1"));
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::NotPartition(_))));
        assert!(matches!("1,x".parse::<Partition>(), Err(Error::Parse { .. })));
        assert_eq!(p("(3, 1)").to_string(), "(3,1)");
    }

    #[test]
    fn composition_equality_ignores_trailing_zeros() {
        let a: Composition = "1,2,0".parse().unwrap();
        let b: Composition = "1,2".parse().unwrap();
        assert_eq!(a, b);
        let c: Composition = "0,1,2".parse().unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<String> = partitions_of(4).iter().map(|q| q.to_text()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(covers(&p("3,1")), vec![(CoverMove::row(1), p("2,2"))]);
        assert_eq!(covers(&p("2,1")), vec![(CoverMove::column(1, 3), p("1,1,1"))]);
        for n in 2..=8 {
            let got = covers(&Partition(vec![n]));
            assert_eq!(got, vec![(CoverMove::row(1), Partition(vec![n - 1, 1]))]);
        }
        assert!(covers(&p("1,1,1")).is_empty());
        assert!(covers(&Partition::empty()).is_empty());
    }

    #[test]
    fn chains() {
        assert_eq!(cover_chain(&p("3,1"), &p("3,1")).unwrap(), vec![p("3,1")]);
        assert_eq!(
            cover_chain(&p("4"), &p("1,1,1,1")).unwrap(),
            vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
        assert_eq!(
            cover_chain(&p("3,1"), &p("2,1,1")).unwrap(),
            vec![p("3,1"), p("2,2"), p("2,1,1")]
        );
        assert!(matches!(
            cover_chain(&p("3,3"), &p("4,1,1")),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            cover_chain(&p("3"), &p("2,1,1")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn transfer_chains() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert_eq!(
            adjacent_transfer_chain(&p("3,2,1"), &CoverMove::column(1, 3)).unwrap(),
            vec![c("2,3,1")]
        );
        let chain = adjacent_transfer_chain(&p("2,1"), &CoverMove::column(1, 3)).unwrap();
        assert_eq!(chain, vec![c("1,2,0")]);
        assert_eq!(chain[0].parts(), &[1, 2, 0]);
        assert!(adjacent_transfer_chain(&p("3,1"), &CoverMove::row(1)).is_err());
        assert!(adjacent_transfer_chain(&p("3,1"), &CoverMove::column(1, 3)).is_err());
    }

    #[test]
    fn transfer_index() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert_eq!(adjacent_transfer_index(&c("3,2,1"), &c("2,3,1")), Some(1));
        assert_eq!(adjacent_transfer_index(&c("2,3,1"), &c("2,2,2")), Some(2));
        assert_eq!(adjacent_transfer_index(&c("1,1"), &c("0,2")), None);
        assert_eq!(adjacent_transfer_index(&c("3,1"), &c("2,1,1")), None);
        assert_eq!(c("2,1").adjacent_transfer(2).unwrap(), c("2,0,1"));
        assert!(c("1,1").adjacent_transfer(1).is_err());
        assert!(c("1,1").adjacent_transfer(0).is_err());
    }

    #[test]
    fn compositions_list() {
        let got: Vec<String> = compositions_of(2, 3).iter().map(|c| c.to_text()).collect();
        assert_eq!(got, ["0,0,2", "0,1,1", "0,2", "1,0,1", "1,1", "2"]);
        assert_eq!(compositions_of(0, 3), vec![Composition::default()]);
    }
}
