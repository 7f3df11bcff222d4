//! Skew Young diagrams, tableaux, and the brute-force SSYT enumerator.
//!
//! Cells are `(r, c)` pairs, 1-based, English convention: `r` grows down the
//! page and `c` grows to the right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

pub type Cell = (usize, usize);

/// The cells of `outer` that are not cells of `inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_text(),
                inner: inner.to_text(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows of the outer diagram, empty rows included.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// First and last column of row `r`; the row is empty when `first > last`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r) + 1, self.outer.part(r))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c > self.inner.part(r) && c <= self.outer.part(r)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows()).flat_map(move |r| {
            let (first, last) = self.row_span(r);
            (first..=last).map(move |c| (r, c))
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A filling of every cell of a [`SkewShape`] with a positive integer.
///
/// Stored row by row; `rows[r - 1]` holds the entries of row `r` from left to
/// right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::MalformedTableau(format!(
                "{} rows given for shape {} with {} rows",
                rows.len(),
                shape,
                shape.rows()
            )));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(k + 1) {
                return Err(Error::MalformedTableau(format!(
                    "row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    shape.row_len(k + 1)
                )));
            }
            if row.contains(&0) {
                return Err(Error::MalformedTableau(format!(
                    "row {} has a zero entry",
                    k + 1
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, (r, c): Cell) -> Option<usize> {
        if !self.shape.contains_cell((r, c)) {
            return None;
        }
        Some(self.rows[r - 1][c - self.shape.inner.part(r) - 1])
    }

    /// Entries with their cells, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape
            .cells()
            .map(move |cell| (cell, self.entry(cell).expect("cell of shape")))
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows weakly increase left to right; columns strictly increase downward.
    pub fn is_semistandard(&self) -> bool {
        if self.rows.iter().any(|row| row.windows(2).any(|w| w[0] > w[1])) {
            return false;
        }
        self.entries().all(|((r, c), v)| match self.entry((r.wrapping_sub(1), c)) {
            Some(above) => above < v,
            None => true,
        })
    }

    /// The type: part `i` counts the entries equal to `i`.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut parts = vec![0; max];
        for &v in self.rows.iter().flatten() {
            parts[v - 1] += 1;
        }
        Composition::new(parts)
    }

    /// One row per line, entries separated by spaces, cells of the inner
    /// diagram drawn as `.`.
    pub fn render(&self) -> String {
        render_rows(&self.shape, |cell| {
            self.entry(cell).expect("cell of shape").to_string()
        })
    }
}

pub(crate) fn render_rows(shape: &SkewShape, mut cell: impl FnMut(Cell) -> String) -> String {
    (1..=shape.rows())
        .map(|r| {
            (1..=shape.outer.part(r))
                .map(|c| {
                    if c <= shape.inner.part(r) {
                        ".".to_string()
                    } else {
                        cell((r, c))
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{}]", self.rows.iter().map(|r| format!("{:?}", r)).collect::<Vec<_>>().join(","))
    }
}

pub fn is_semistandard(t: &Tableau) -> bool {
    t.is_semistandard()
}

pub fn content_of(t: &Tableau) -> Composition {
    t.content()
}

/// Every semistandard tableau of `shape` with content exactly `content`,
/// ordered lexicographically by row-major reading word.
///
/// Cell-by-cell backtracking; the entry alphabet is `1..=content.len()`.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Composition) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_ssyt(shape, content, |rows| {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    })?;
    Ok(out)
}

/// Number of semistandard tableaux, counted by the same backtracking as
/// [`enumerate_ssyt`] without materializing them.
pub fn count_ssyt(shape: &SkewShape, content: &Composition) -> Result<u64> {
    let mut n = 0u64;
    for_each_ssyt(shape, content, |_| n += 1)?;
    Ok(n)
}

fn for_each_ssyt(
    shape: &SkewShape,
    content: &Composition,
    mut visit: impl FnMut(&[Vec<usize>]),
) -> Result<()> {
    if content.size() != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: content.size(),
        });
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = (1..=shape.rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    let mut remaining = content.parts().to_vec();

    // cells strictly below each cell in its column
    let below: Vec<usize> = cells
        .iter()
        .map(|&(r, c)| (r + 1..=shape.rows()).filter(|&s| shape.contains_cell((s, c))).count())
        .collect();

    struct Search<'a, F> {
        shape: &'a SkewShape,
        cells: &'a [Cell],
        below: &'a [usize],
        visit: F,
    }

    impl<F: FnMut(&[Vec<usize>])> Search<'_, F> {
        fn get(&self, rows: &[Vec<usize>], (r, c): Cell) -> Option<usize> {
            if self.shape.contains_cell((r, c)) {
                Some(rows[r - 1][c - self.shape.inner.part(r) - 1])
            } else {
                None
            }
        }

        fn go(&mut self, k: usize, rows: &mut Vec<Vec<usize>>, remaining: &mut [usize]) {
            let Some(&(r, c)) = self.cells.get(k) else {
                (self.visit)(rows);
                return;
            };
            let left = self.get(rows, (r, c.wrapping_sub(1))).unwrap_or(1);
            let above = self
                .get(rows, (r.wrapping_sub(1), c))
                .map_or(1, |v| v + 1);
            let lower = left.max(above);
            // the cells below need distinct larger values
            let Some(max_live) = remaining.iter().rposition(|&m| m > 0) else {
                return;
            };
            let upper = (max_live + 1).saturating_sub(self.below[k]);
            let offset = c - self.shape.inner.part(r) - 1;
            for v in lower..=upper {
                if remaining[v - 1] == 0 {
                    continue;
                }
                remaining[v - 1] -= 1;
                rows[r - 1][offset] = v;
                self.go(k + 1, rows, remaining);
                remaining[v - 1] += 1;
            }
            rows[r - 1][offset] = 0;
        }
    }

    let mut search = Search {
        shape,
        cells: &cells,
        below: &below,
        visit: &mut visit,
    };
    search.go(0, &mut rows, &mut remaining);
    Ok(())
}

/// Partitions with at most `rows` parts, each at most `width`.
fn partitions_in_box(rows: usize, width: usize) -> Vec<Partition> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
        if rows == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, width, &mut Vec::new(), &mut out);
    out
}

/// Genuinely skew shapes with exactly `cells` cells and at most `max_rows`
/// rows, one representative per diagram: the inner partition is nonempty and
/// no row or column of the outer diagram is left empty. Sorted.
pub fn skew_shapes(cells: usize, max_rows: usize) -> Vec<SkewShape> {
    let outers = partitions_in_box(max_rows, cells);
    let mut out = Vec::new();
    for outer in &outers {
        if outer.size() <= cells {
            continue;
        }
        for inner in partitions_in_box(outer.len(), cells) {
            if inner.is_empty() || !outer.contains(&inner) || outer.size() - inner.size() != cells {
                continue;
            }
            let shape = SkewShape {
                outer: outer.clone(),
                inner,
            };
            let rows_ok = (1..=shape.rows()).all(|r| shape.row_len(r) > 0);
            let cols_ok = (1..=outer.part(1))
                .all(|c| (1..=shape.rows()).any(|r| shape.contains_cell((r, c))));
            if rows_ok && cols_ok {
                out.push(shape);
            }
        }
    }
    out.sort();
    out
}

/// Straight shapes of every partition of `cells`.
pub fn straight_shapes(cells: usize) -> Vec<SkewShape> {
    crate::partition::partitions_of(cells)
        .into_iter()
        .map(SkewShape::straight)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(outer.parse().unwrap(), inner.parse().unwrap()).unwrap()
    }

    fn tab(outer: &str, inner: &str, rows: &[&[usize]]) -> Tableau {
        Tableau::new(shape(outer, inner), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn semistandard_checks() {
        assert!(tab("2,1", "", &[&[1, 1], &[2]]).is_semistandard());
        assert!(!tab("1,1", "", &[&[1], &[1]]).is_semistandard());
        assert!(!tab("2", "", &[&[2, 1]]).is_semistandard());
        // skew: (1,2) has nothing above it
        assert!(tab("2,2", "1", &[&[2], &[1, 3]]).is_semistandard());
        assert!(!tab("2,2", "1", &[&[2], &[1, 2]]).is_semistandard());
    }

    #[test]
    fn contents() {
        assert_eq!(tab("2,1", "", &[&[1, 1], &[2]]).content(), Composition::new(vec![2, 1]));
        assert_eq!(tab("2,2", "1", &[&[1], &[1, 2]]).content(), Composition::new(vec![2, 1]));
        let empty = Tableau::new(SkewShape::straight(Partition::empty()), vec![]).unwrap();
        assert_eq!(empty.content(), Composition::default());
        assert!(empty.content().is_empty());
    }

    #[test]
    fn malformed() {
        let s = shape("2,1", "");
        assert!(Tableau::new(s.clone(), vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(s.clone(), vec![vec![1], vec![2]]).is_err());
        assert!(Tableau::new(s, vec![vec![0, 1], vec![2]]).is_err());
        assert!(SkewShape::new("2".parse().unwrap(), "1,1".parse().unwrap()).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got = enumerate_ssyt(&shape("2,1", ""), &"1,1,1".parse().unwrap()).unwrap();
        let rows: Vec<_> = got.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]);

        for n in 0..6 {
            let got = enumerate_ssyt(
                &SkewShape::straight(Partition::new(vec![n]).unwrap()),
                &Composition::new(vec![n]),
            )
            .unwrap();
            assert_eq!(got.len(), 1);
        }
        assert!(enumerate_ssyt(&shape("1,1", ""), &"2".parse().unwrap()).unwrap().is_empty());
        assert!(matches!(
            enumerate_ssyt(&shape("2,1", ""), &"1,1".parse().unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn zero_parts_in_content_are_skipped() {
        let got = enumerate_ssyt(&shape("2,1", ""), &"2,0,1".parse().unwrap()).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rows(), &[vec![1, 1], vec![3]]);
    }

    #[test]
    fn rendering() {
        let t = tab("3,2", "1", &[&[1, 2], &[1, 3]]);
        assert_eq!(t.render(), ". 1 2\n1 3");
        let empty_row = tab("2,1", "2", &[&[], &[1]]);
        assert_eq!(empty_row.render(), ". .\n1");
    }

    #[test]
    fn skew_shape_lists() {
        // two cells: the disconnected pair (2,1)/(1) only
        assert_eq!(skew_shapes(2, 4), vec![shape("2,1", "1")]);
        // (3,1)/(2) leaves column 2 empty; it is the diagram of (2,1)/(1)
        let three = skew_shapes(3, 4);
        assert!(three.contains(&shape("2,2", "1")));
        assert!(three.contains(&shape("3,2,1", "2,1")));
        assert!(!three.contains(&shape("3,1", "2")));
        assert!(three.iter().all(|s| s.size() == 3 && !s.is_straight()));
        assert!(skew_shapes(0, 4).is_empty());
        assert!(skew_shapes(1, 4).is_empty());
    }

    #[test]
    fn entry_lookup() {
        let t = tab("3,2", "1", &[&[1, 2], &[1, 3]]);
        assert_eq!(t.entry((1, 1)), None);
        assert_eq!(t.entry((1, 2)), Some(1));
        assert_eq!(t.entry((2, 2)), Some(3));
        assert_eq!(t.entry((3, 1)), None);
        assert_eq!(t.entry((0, 1)), None);
    }
}
