//! Skew tableaux over an arbitrary ordered entry type, plus the shape
//! bookkeeping shared by ordinary and shifted slides.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Flavor, Partition, SkewShape};

/// A filling of every cell of a skew shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewTableau<E> {
    shape: SkewShape,
    entries: BTreeMap<Cell, E>,
}

impl<E: Copy> SkewTableau<E> {
    /// Builds a tableau from its cell map; every cell of `shape` must be
    /// filled and nothing else.
    pub fn from_entries(shape: SkewShape, entries: BTreeMap<Cell, E>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || !cells.iter().all(|c| entries.contains_key(&c)) {
            return Err(Error::InvalidTableau(
                "entries do not cover the shape exactly".into(),
            ));
        }
        Ok(SkewTableau { shape, entries })
    }

    /// Builds a tableau from rows listed top to bottom; row `i` starts right
    /// after the `inner[i]` cells of the inner shape.
    pub fn from_rows(flavor: Flavor, inner: Partition, rows: Vec<Vec<E>>) -> Result<Self> {
        let mut outer = Vec::with_capacity(rows.len().max(inner.len()));
        for r in 1..=rows.len().max(inner.len()) {
            outer.push(inner.part(r) + rows.get(r - 1).map_or(0, Vec::len));
        }
        let outer = Partition::new(outer)?;
        let shape = SkewShape::new(flavor, outer, inner)?;
        let mut entries = BTreeMap::new();
        for (i, row) in rows.into_iter().enumerate() {
            let r = i + 1;
            let start = flavor.row_offset(r) + shape.inner().part(r) + 1;
            for (j, e) in row.into_iter().enumerate() {
                entries.insert((r, start + j), e);
            }
        }
        Self::from_entries(shape, entries)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, entries: BTreeMap<Cell, E>) -> Self {
        debug_assert_eq!(shape.size(), entries.len());
        SkewTableau { shape, entries }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn flavor(&self) -> Flavor {
        self.shape.flavor()
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn entries(&self) -> &BTreeMap<Cell, E> {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<E> {
        self.entries.get(&cell).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows top to bottom, each left to right. Rows wholly inside the inner
    /// shape come out empty.
    pub fn rows(&self) -> Vec<Vec<E>> {
        let mut rows = vec![Vec::new(); self.outer().len()];
        for (&(r, _), &e) in &self.entries {
            rows[r - 1].push(e);
        }
        rows
    }

    /// Entries read right to left in successive rows, top row first.
    pub fn word(&self) -> Vec<E> {
        self.shape
            .reading_order()
            .into_iter()
            .map(|c| self.entries[&c])
            .collect()
    }
}

/// Mutable shape state used while a hole travels through a tableau.
pub(crate) struct SlideState<E> {
    pub flavor: Flavor,
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub entries: BTreeMap<Cell, E>,
}

impl<E: Copy> SlideState<E> {
    pub fn new(t: &SkewTableau<E>) -> Self {
        let rows = t.outer().len() + 1;
        let pad = |p: &Partition| (1..=rows).map(|r| p.part(r)).collect::<Vec<_>>();
        SlideState {
            flavor: t.flavor(),
            outer: pad(t.outer()),
            inner: pad(t.inner()),
            entries: t.entries.clone(),
        }
    }

    fn part(v: &[usize], r: usize) -> usize {
        v.get(r - 1).copied().unwrap_or(0)
    }

    fn in_row_shape(&self, v: &[usize], (r, c): Cell) -> bool {
        if r == 0 {
            return false;
        }
        let off = self.flavor.row_offset(r);
        c > off && c <= off + Self::part(v, r)
    }

    pub fn in_inner(&self, cell: Cell) -> bool {
        self.in_row_shape(&self.inner, cell)
    }

    pub fn in_outer(&self, cell: Cell) -> bool {
        self.in_row_shape(&self.outer, cell)
    }

    /// `cell` can be removed from the inner shape leaving a valid shape.
    pub fn is_inner_corner(&self, (r, c): Cell) -> bool {
        r >= 1
            && self.in_inner((r, c))
            && !self.in_inner((r, c + 1))
            && !self.in_inner((r + 1, c))
    }

    /// `cell` can be added to the outer shape leaving a valid shape.
    pub fn is_outer_corner(&self, (r, c): Cell) -> bool {
        if !self.flavor.is_position((r, c)) || self.in_outer((r, c)) {
            return false;
        }
        let off = self.flavor.row_offset(r);
        if c != off + Self::part(&self.outer, r) + 1 {
            return false;
        }
        r == 1 || self.in_outer((r - 1, c))
    }

    /// Finishes a forward slide that started at inner cell `start` and
    /// vacated outer cell `end`.
    pub fn close_forward(mut self, start: Cell, end: Cell) -> SkewTableau<E> {
        self.inner[start.0 - 1] -= 1;
        self.outer[end.0 - 1] -= 1;
        self.finish()
    }

    /// Finishes a reverse slide that started at outer cell `start` and
    /// stopped at `end`, which joins the inner shape.
    pub fn close_reverse(mut self, start: Cell, end: Cell) -> SkewTableau<E> {
        if self.outer.len() < start.0 {
            self.outer.resize(start.0, 0);
        }
        if self.inner.len() < end.0 {
            self.inner.resize(end.0, 0);
        }
        self.outer[start.0 - 1] += 1;
        self.inner[end.0 - 1] += 1;
        self.finish()
    }

    fn finish(self) -> SkewTableau<E> {
        let outer = Partition::new(self.outer).expect("slides keep the outer shape valid");
        let inner = Partition::new(self.inner).expect("slides keep the inner shape valid");
        let shape = SkewShape::new(self.flavor, outer, inner).expect("inner stays inside outer");
        SkewTableau::from_parts_unchecked(shape, self.entries)
    }
}
