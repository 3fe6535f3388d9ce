//! Schützenberger slides on type A tableaux and the slide bijection that
//! moves a horizontal strip of holes from the inner border of an LR tableau
//! to its outer border.

use crate::error::{Error, Result};
use crate::lr_tableaux::{is_lr_tableau, Tableau};
use crate::shapes::{dual_partition, is_horizontal_strip, Cell, Flavor, Partition};
use crate::tableau::{SkewTableau, SlideState};

/// One step of a travelling hole.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlideMove {
    Vertical,
    Horizontal,
    /// Shifted diagonal move: the hole jumps from `(r, r)` to `(r+1, r+1)`.
    Special,
}

/// The cells a hole occupied during one slide, and the tableau it left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlideTrace<E> {
    pub start: Cell,
    pub path: Vec<Cell>,
    pub moves: Vec<SlideMove>,
    pub result: SkewTableau<E>,
}

impl<E> SlideTrace<E> {
    pub fn end(&self) -> Cell {
        *self.path.last().expect("path contains the start cell")
    }
}

/// Forward slide of the empty inner corner `hole` through `t`.
pub fn slide(t: &Tableau, hole: Cell) -> Result<SlideTrace<u32>> {
    let mut state = SlideState::new(t);
    if t.flavor() != Flavor::Young || !state.is_inner_corner(hole) {
        return Err(Error::NotInnerCorner(hole));
    }
    let mut pos = hole;
    let mut path = vec![pos];
    let mut moves = Vec::new();
    loop {
        let (r, c) = pos;
        let below = state.entries.get(&(r + 1, c)).copied();
        let right = state.entries.get(&(r, c + 1)).copied();
        // a tie moves the lower entry up; moving the right one would put
        // equal entries in one column
        let next = match (below, right) {
            (None, None) => break,
            (Some(a), Some(b)) if a <= b => (r + 1, c),
            (Some(_), None) => (r + 1, c),
            (_, Some(_)) => (r, c + 1),
        };
        moves.push(if next.1 == c { SlideMove::Vertical } else { SlideMove::Horizontal });
        let v = state.entries.remove(&next).expect("neighbour is filled");
        state.entries.insert(pos, v);
        pos = next;
        path.push(pos);
    }
    Ok(SlideTrace {
        start: hole,
        path,
        moves,
        result: state.close_forward(hole, pos),
    })
}

/// Reverse slide of the empty outer corner `hole` into `t`.
pub fn reverse_slide(t: &Tableau, hole: Cell) -> Result<SlideTrace<u32>> {
    let mut state = SlideState::new(t);
    if t.flavor() != Flavor::Young || !state.is_outer_corner(hole) {
        return Err(Error::NotOuterCorner(hole));
    }
    let mut pos = hole;
    let mut path = vec![pos];
    let mut moves = Vec::new();
    loop {
        let (r, c) = pos;
        let above = if r > 1 { state.entries.get(&(r - 1, c)).copied() } else { None };
        let left = if c > 1 { state.entries.get(&(r, c - 1)).copied() } else { None };
        let next = match (above, left) {
            (None, None) => break,
            (Some(u), Some(l)) if u >= l => (r - 1, c),
            (Some(_), None) => (r - 1, c),
            (_, Some(_)) => (r, c - 1),
        };
        moves.push(if next.1 == c { SlideMove::Vertical } else { SlideMove::Horizontal });
        let v = state.entries.remove(&next).expect("neighbour is filled");
        state.entries.insert(pos, v);
        pos = next;
        path.push(pos);
    }
    Ok(SlideTrace {
        start: hole,
        path,
        moves,
        result: state.close_reverse(hole, pos),
    })
}

/// Outcome of moving a strip of holes across an LR tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Transfer {
    /// `λ̃` for a forward transfer, `μ̃` for a reverse one.
    pub partition: Partition,
    pub tableau: Tableau,
    pub traces: Vec<SlideTrace<u32>>,
}

/// Cells of the Young skew diagram `outer / inner`.
fn strip_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    let mut cells = Vec::new();
    for r in 1..=outer.len() {
        for c in inner.part(r) + 1..=outer.part(r) {
            cells.push((r, c));
        }
    }
    cells
}

/// Slides the holes of `μ̃/μ` through an LR tableau `t` on `λ∨/μ̃`, rightmost
/// hole first. Returns `λ̃` together with the LR tableau on `λ̃∨/μ`.
pub fn pieri_transfer(t: &Tableau, mu: &Partition, rect: (usize, usize)) -> Result<Transfer> {
    let (k, m) = rect;
    if !is_lr_tableau(t) {
        return Err(Error::NotLr);
    }
    let mu_tilde = t.inner().clone();
    if !is_horizontal_strip(&mu_tilde, mu) {
        return Err(Error::NotHorizontalStrip {
            inner: mu.clone(),
            outer: mu_tilde,
        });
    }
    let lambda_dual = t.outer().clone();
    if !lambda_dual.fits_in_rectangle(k, m) {
        return Err(Error::NotContained {
            inner: lambda_dual,
            outer: Partition::rectangle(k, m),
        });
    }
    let mut holes = strip_cells(&mu_tilde, mu);
    holes.sort_by_key(|c| std::cmp::Reverse(c.1));
    let mut current = t.clone();
    let mut traces = Vec::with_capacity(holes.len());
    for hole in holes {
        let trace = slide(&current, hole)?;
        current = trace.result.clone();
        traces.push(trace);
    }
    let lambda_tilde = dual_partition(current.outer(), k, m)?;
    Ok(Transfer {
        partition: lambda_tilde,
        tableau: current,
        traces,
    })
}

/// Inverse of [`pieri_transfer`]: reverse-slides the cells of `λ∨/λ̃∨`,
/// leftmost first, through an LR tableau on `λ̃∨/μ`. Returns `μ̃` and the LR
/// tableau on `λ∨/μ̃`.
pub fn pieri_transfer_reverse(
    t: &Tableau,
    lambda: &Partition,
    rect: (usize, usize),
) -> Result<Transfer> {
    let (k, m) = rect;
    if !is_lr_tableau(t) {
        return Err(Error::NotLr);
    }
    let lambda_dual = dual_partition(lambda, k, m)?;
    let lambda_tilde_dual = t.outer().clone();
    if !is_horizontal_strip(&lambda_dual, &lambda_tilde_dual) {
        return Err(Error::NotHorizontalStrip {
            inner: lambda_tilde_dual,
            outer: lambda_dual,
        });
    }
    let mut holes = strip_cells(&lambda_dual, &lambda_tilde_dual);
    holes.sort_by_key(|cell| cell.1);
    let mut current = t.clone();
    let mut traces = Vec::with_capacity(holes.len());
    for hole in holes {
        let trace = reverse_slide(&current, hole)?;
        current = trace.result.clone();
        traces.push(trace);
    }
    Ok(Transfer {
        partition: current.inner().clone(),
        tableau: current,
        traces,
    })
}

/// Checks that every cell of each later path lies strictly left of or weakly
/// below every position held by each earlier hole. Returns the offending
/// `(earlier, later)` trace indices.
pub fn crossing_violations<E>(traces: &[SlideTrace<E>]) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (i, earlier) in traces.iter().enumerate() {
        for (j, later) in traces.iter().enumerate().skip(i + 1) {
            let ok = earlier.path.iter().all(|&(pr, pc)| {
                later.path.iter().all(|&(br, bc)| bc < pc || br >= pr)
            });
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr_tableaux::enumerate_lr;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(inner: &str, rows: Vec<Vec<u32>>) -> Tableau {
        SkewTableau::from_rows(Flavor::Young, p(inner), rows).unwrap()
    }

    #[test]
    fn tie_moves_lower_entry() {
        let t = tab("1", vec![vec![1], vec![1]]);
        let trace = slide(&t, (1, 1)).unwrap();
        assert_eq!(trace.path, vec![(1, 1), (2, 1)]);
        assert_eq!(trace.result, tab("", vec![vec![1, 1]]));
        let back = reverse_slide(&trace.result, (2, 1)).unwrap();
        assert_eq!(back.result, t);
        assert_eq!(back.path, vec![(2, 1), (1, 1)]);
    }

    #[test]
    fn single_horizontal_step() {
        let t = tab("1", vec![vec![1]]);
        let trace = slide(&t, (1, 1)).unwrap();
        assert_eq!(trace.result, tab("", vec![vec![1]]));
        assert_eq!(reverse_slide(&trace.result, (1, 2)).unwrap().result, t);
    }

    #[test]
    fn hole_without_neighbours_stays() {
        let t = tab("2,1", vec![vec![1]]);
        let trace = slide(&t, (2, 1)).unwrap();
        assert_eq!(trace.path, vec![(2, 1)]);
        assert_eq!(trace.result.outer(), &p("3"));
        assert_eq!(trace.result.inner(), &p("2"));
    }

    #[test]
    fn rejects_bad_holes() {
        let t = tab("2", vec![vec![1], vec![1, 2]]);
        assert_eq!(slide(&t, (1, 1)), Err(Error::NotInnerCorner((1, 1))));
        assert_eq!(slide(&t, (1, 3)), Err(Error::NotInnerCorner((1, 3))));
        assert_eq!(reverse_slide(&t, (3, 2)), Err(Error::NotOuterCorner((3, 2))));
        assert_eq!(reverse_slide(&t, (1, 2)), Err(Error::NotOuterCorner((1, 2))));
    }

    #[test]
    fn zero_strip_is_identity() {
        let (k, m) = (2, 2);
        let shape = crate::shapes::SkewShape::young(p("2,1"), p("1")).unwrap();
        for t in enumerate_lr(&shape, &p("1,1")) {
            let fwd = pieri_transfer(&t, &p("1"), (k, m)).unwrap();
            assert_eq!(fwd.partition, p("1"));
            assert_eq!(fwd.tableau, t);
            let rev = pieri_transfer_reverse(&t, &p("1"), (k, m)).unwrap();
            assert_eq!(rev.tableau, t);
        }
    }

    #[test]
    fn transfer_rejects_non_strip() {
        let t = tab("2,2", vec![vec![1]]);
        assert!(matches!(
            pieri_transfer(&t, &p(""), (2, 3)),
            Err(Error::NotHorizontalStrip { .. })
        ));
        let not_lr = tab("", vec![vec![2]]);
        assert_eq!(pieri_transfer(&not_lr, &p(""), (2, 2)), Err(Error::NotLr));
    }
}
