use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::jdt::SlideTrace;
use crate::shapes::{is_horizontal_strip, AmbientSpace, Cell, Partition, SkewShape};
use crate::tableau::SkewTableau;

use super::lrs::{is_lrs_tableau, MarkedTableau};
use super::slide::{reverse_shifted_slide, shifted_slide};
use super::symbol::MarkedSymbol;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HoleMark {
    Marked,
    Unmarked,
}

impl HoleMark {
    /// The hole read as a letter of value 1: `o' -> 1'`, `o -> 1`.
    fn as_symbol(self) -> MarkedSymbol {
        match self {
            HoleMark::Marked => MarkedSymbol::marked(1),
            HoleMark::Unmarked => MarkedSymbol::unmarked(1),
        }
    }
}

impl fmt::Display for HoleMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HoleMark::Marked => "o'",
            HoleMark::Unmarked => "o",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Nw,
    Se,
}

/// A marked strip of holes occupying the shifted skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HoleStrip {
    pub outer: Partition,
    pub inner: Partition,
    pub marks: BTreeMap<Cell, HoleMark>,
}

impl HoleStrip {
    /// Strict shapes, a horizontal strip between them, marks on exactly its
    /// cells, and the marks read as `1'`/`1` form an LRS tableau.
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidHoleStrip(why.to_string()));
        if !self.outer.is_strict() || !self.inner.is_strict() {
            return bad("strip shapes must be strict");
        }
        if !is_horizontal_strip(&self.outer, &self.inner) {
            return Err(Error::NotHorizontalStrip {
                inner: self.inner.clone(),
                outer: self.outer.clone(),
            });
        }
        let shape = SkewShape::shifted(self.outer.clone(), self.inner.clone())?;
        let entries = self.marks.iter().map(|(&c, m)| (c, m.as_symbol())).collect();
        let word = SkewTableau::from_entries(shape, entries)
            .map_err(|_| Error::InvalidHoleStrip("marks do not cover the strip".into()))?;
        if !is_lrs_tableau(&word) {
            return bad("hole word is not LRS");
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }
}

fn markings(outer: &Partition, inner: &Partition) -> Vec<HoleStrip> {
    let shape = match SkewShape::shifted(outer.clone(), inner.clone()) {
        Ok(s) => s,
        Err(_) => return Vec::new(),
    };
    let cells: Vec<Cell> = shape.cells().iter().collect();
    let mut out = Vec::new();
    for bits in 0..1u64 << cells.len() {
        let marks = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let m = if bits >> i & 1 == 1 { HoleMark::Marked } else { HoleMark::Unmarked };
                (c, m)
            })
            .collect();
        let strip = HoleStrip {
            outer: outer.clone(),
            inner: inner.clone(),
            marks,
        };
        if strip.validate().is_ok() {
            out.push(strip);
        }
    }
    out
}

/// All valid marked strips of `p` holes inside `ρ_n`.
///
/// On the NW side `partition` is the inner shape `μ` and the strips are
/// `μ̃/μ` with `μ →p μ̃`. On the SE side it is the outer shape `λ∨` and the
/// strips are `λ∨/κ` for the strict `κ` with `κ →p λ∨`.
pub fn enumerate_hole_strips(
    partition: &Partition,
    p: usize,
    n: usize,
    side: Side,
) -> Result<Vec<HoleStrip>> {
    let space = AmbientSpace::type_b(n)?;
    space.check(partition)?;
    let mut out = Vec::new();
    match side {
        Side::Nw => {
            for outer in crate::shapes::horizontal_strip_successors(partition, p, &space) {
                out.extend(markings(&outer, partition));
            }
        }
        Side::Se => {
            if p > partition.weight() {
                return Ok(out);
            }
            let mut inners: Vec<Partition> = space
                .basis()
                .into_iter()
                .filter(|k| k.weight() + p == partition.weight())
                .filter(|k| partition.contains(k) && is_horizontal_strip(partition, k))
                .collect();
            inners.sort_by(|a, b| a.expansion_cmp(b));
            for inner in inners {
                out.extend(markings(partition, &inner));
            }
        }
    }
    Ok(out)
}

/// An LRS tableau together with a marked strip of holes on its NW or SE
/// border.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HoledTableau {
    base: MarkedTableau,
    holes: HoleStrip,
    side: Side,
}

impl HoledTableau {
    /// On the NW side the strip sits inside the inner shape of `base`
    /// (`holes.outer == base.inner`); on the SE side it sits just outside
    /// (`holes.inner == base.outer`).
    pub fn new(base: MarkedTableau, holes: HoleStrip, side: Side) -> Result<Self> {
        holes.validate()?;
        if !is_lrs_tableau(&base) {
            return Err(Error::NotLrs);
        }
        let fits = match side {
            Side::Nw => &holes.outer == base.inner(),
            Side::Se => &holes.inner == base.outer(),
        };
        if !fits {
            return Err(Error::InvalidHoleStrip(format!(
                "strip {}/{} is not on the {} border of the tableau",
                holes.outer,
                holes.inner,
                if side == Side::Nw { "NW" } else { "SE" }
            )));
        }
        Ok(HoledTableau { base, holes, side })
    }

    pub fn base(&self) -> &MarkedTableau {
        &self.base
    }

    pub fn holes(&self) -> &HoleStrip {
        &self.holes
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Outer shape of the whole diagram, holes included.
    pub fn outer(&self) -> &Partition {
        match self.side {
            Side::Nw => self.base.outer(),
            Side::Se => &self.holes.outer,
        }
    }

    /// Inner shape of the whole diagram, holes excluded.
    pub fn inner(&self) -> &Partition {
        match self.side {
            Side::Nw => &self.holes.inner,
            Side::Se => self.base.inner(),
        }
    }

    /// Rows of the whole diagram, holes shown as `o`/`o'`.
    pub fn display_rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![Vec::new(); self.outer().len()];
        let mut cells: BTreeMap<Cell, String> =
            self.base.entries().iter().map(|(&c, e)| (c, e.to_string())).collect();
        cells.extend(self.holes.marks.iter().map(|(&c, m)| (c, m.to_string())));
        for ((r, _), s) in cells {
            rows[r - 1].push(s);
        }
        rows
    }
}

/// One hole of a transfer: its mark before and after, and its slide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoleTrace {
    pub before: HoleMark,
    pub after: HoleMark,
    pub slide: SlideTrace<MarkedSymbol>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoleTransfer {
    pub result: HoledTableau,
    pub traces: Vec<HoleTrace>,
}

/// Slides the holes of a NW-holed tableau to the SE border: unmarked holes
/// right to left, then marked holes bottom to top. An unmarked hole that
/// ends in a row above the end of the previous hole becomes marked.
pub fn transfer_nw_to_se(h: &HoledTableau) -> Result<HoleTransfer> {
    if h.side != Side::Nw {
        return Err(Error::InvalidHoleStrip("expected a NW-holed tableau".into()));
    }
    let mut unmarked: Vec<Cell> = marked_cells(&h.holes, HoleMark::Unmarked);
    unmarked.sort_by_key(|c| std::cmp::Reverse(c.1));
    let mut marked: Vec<Cell> = marked_cells(&h.holes, HoleMark::Marked);
    marked.sort_by_key(|c| std::cmp::Reverse(c.0));

    let mut current = h.base.clone();
    let mut traces: Vec<HoleTrace> = Vec::with_capacity(h.holes.len());
    let mut landed = BTreeMap::new();
    for (hole, before) in unmarked
        .into_iter()
        .map(|c| (c, HoleMark::Unmarked))
        .chain(marked.into_iter().map(|c| (c, HoleMark::Marked)))
    {
        let slide = shifted_slide(&current, hole)?;
        let end = slide.end();
        let after = match traces.last() {
            Some(prev) if before == HoleMark::Unmarked && end.0 < prev.slide.end().0 => HoleMark::Marked,
            _ => before,
        };
        landed.insert(end, after);
        current = slide.result.clone();
        traces.push(HoleTrace { before, after, slide });
    }
    let holes = HoleStrip {
        outer: h.base.outer().clone(),
        inner: current.outer().clone(),
        marks: landed,
    };
    let result = HoledTableau::new(current, holes, Side::Se)?;
    Ok(HoleTransfer { result, traces })
}

/// Inverse of [`transfer_nw_to_se`]: marked holes top to bottom, then
/// unmarked holes left to right, by reverse slides. A marked hole whose path
/// meets the diagonal loses its mark.
pub fn transfer_se_to_nw(h: &HoledTableau) -> Result<HoleTransfer> {
    if h.side != Side::Se {
        return Err(Error::InvalidHoleStrip("expected a SE-holed tableau".into()));
    }
    let mut marked: Vec<Cell> = marked_cells(&h.holes, HoleMark::Marked);
    marked.sort_by_key(|c| c.0);
    let mut unmarked: Vec<Cell> = marked_cells(&h.holes, HoleMark::Unmarked);
    unmarked.sort_by_key(|c| c.1);

    let mut current = h.base.clone();
    let mut traces = Vec::with_capacity(h.holes.len());
    let mut landed = BTreeMap::new();
    for (hole, before) in marked
        .into_iter()
        .map(|c| (c, HoleMark::Marked))
        .chain(unmarked.into_iter().map(|c| (c, HoleMark::Unmarked)))
    {
        let slide = reverse_shifted_slide(&current, hole)?;
        let after = if before == HoleMark::Marked && slide.path.iter().any(|&(r, c)| r == c) {
            HoleMark::Unmarked
        } else {
            before
        };
        landed.insert(slide.end(), after);
        current = slide.result.clone();
        traces.push(HoleTrace { before, after, slide });
    }
    let holes = HoleStrip {
        outer: current.inner().clone(),
        inner: h.base.inner().clone(),
        marks: landed,
    };
    let result = HoledTableau::new(current, holes, Side::Nw)?;
    Ok(HoleTransfer { result, traces })
}

fn marked_cells(strip: &HoleStrip, mark: HoleMark) -> Vec<Cell> {
    strip
        .marks
        .iter()
        .filter(|(_, &m)| m == mark)
        .map(|(&c, _)| c)
        .collect()
}

/// `b` is west of `path`: some path box is strictly east and weakly north.
pub fn is_west_of(b: Cell, path: &[Cell]) -> bool {
    path.iter().any(|&(r, c)| c > b.1 && r <= b.0)
}

/// `b` is north of `path`: some path box is strictly south and weakly west.
pub fn is_north_of(b: Cell, path: &[Cell]) -> bool {
    path.iter().any(|&(r, c)| r > b.0 && c <= b.1)
}

/// West/north persistence between consecutive forward slides. Returns the
/// `(trace index, step index)` of every step at which a hole that was west
/// of the previous path (off the diagonal) or north of it stops being so.
pub fn persistence_violations(traces: &[SlideTrace<MarkedSymbol>]) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (j, pair) in traces.windows(2).enumerate() {
        let prev = &pair[0].path;
        for (step, w) in pair[1].path.windows(2).enumerate() {
            let (from, to) = (w[0], w[1]);
            let west_lost = from.0 != from.1 && is_west_of(from, prev) && !is_west_of(to, prev);
            let north_lost = is_north_of(from, prev) && !is_north_of(to, prev);
            if west_lost || north_lost {
                bad.push((j + 1, step));
            }
        }
    }
    bad
}
